#pragma once

#include <vector>

#include "specials/rational.hpp"

namespace specials {

// Hirzebruch-Jung continued fraction r/a = [a1,...,aN] (descending,
// a_i >= 2) together with the i-series
//   i_0 = r, i_1 = a, i_t = a_{t-1} * i_{t-1} - i_{t-2},
// which decreases strictly to i_N = 1, i_{N+1} = 0.
struct hj_data {
  long long r = 0;
  long long a = 0;
  std::vector<long long> alphas;
  std::vector<long long> iseries;  // length alphas.size() + 2
};

// Requires 0 < a < r and gcd(r, a) == 1; throws std::domain_error otherwise.
hj_data hj_expand(long long r, long long a);

// Value of the descending fraction a1 - 1/(a2 - 1/(...)). Entries must be >= 2
// (a nonempty list); the trailing entry may be any integer >= 2.
rational hj_evaluate(const std::vector<long long>& alphas);

}  // namespace specials
