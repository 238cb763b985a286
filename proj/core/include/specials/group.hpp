#pragma once

#include <string>

namespace specials {

// Brieskorn's discrete parameters for the small finite subgroups of GL(2,C).
enum class family { A, D, T, O, I };

struct group_params {
  family fam = family::A;
  long long p1 = 0;  // A: r, D: n, T/O/I: m
  long long p2 = 0;  // A: a, D: q, unused otherwise

  long long r() const { return p1; }
  long long a() const { return p2; }
  long long n() const { return p1; }
  long long q() const { return p2; }
  long long m() const { return p1; }

  friend bool operator==(const group_params&, const group_params&) = default;
};

// Subfamily data used by the classification.
//   T/O/I: m = k(b-2) + delta with k = 6/12/30 and delta the residue of m.
//   D:     nu = number of 2's in the fundamental cycle, plus the parity of n-q.
struct family_data {
  long long b = 0;        // T/O/I only
  long long delta = 0;    // T/O/I only
  long long nu = 0;       // D only
  bool nq_even = false;   // D only
};

char family_letter(family f);

// "A:<r>,<a>" | "D:<n>,<q>" | "T:<m>" | "O:<m>" | "I:<m>" (no spaces).
// Throws std::invalid_argument on syntax or validation failure.
group_params parse_group(const std::string& spec);
std::string format_group(const group_params& g);

// Throws std::invalid_argument naming the violated condition.
void validate(const group_params& g);
bool is_valid(const group_params& g);

// Requires a valid group. For D the value nu is derived from the HJ
// expansion of n/q and doubles as the count of 2's in the fundamental cycle
// (the resolution module asserts the two agree).
family_data compute_family_data(const group_params& g);

// Order of the group: r | 4q(n-q) | 24m | 48m | 120m.
long long group_order(const group_params& g);

bool is_gorenstein(const group_params& g);

}  // namespace specials
