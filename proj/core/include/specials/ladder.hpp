#pragma once

#include <map>
#include <vector>

#include "specials/quiver.hpp"

namespace specials {

// Nonnegative integer vector over the quiver's vertices, i.e. a class in
// the Grothendieck group of the category.
using count_vector = std::vector<long long>;

// Sparse view used internally by the recursion; sorted by vertex id.
using sparse_vec = std::vector<std::pair<int, long long>>;

enum class ladder_mode { full, kill_R, kill_omega };
enum class ladder_side { left, right };

struct ladder_step {
  sparse_vec Y;  // (w_n)_+
  sparse_vec U;  // (w_n)_-  (empty for n = 0, 1)
};

struct ladder_trace {
  ladder_mode mode = ladder_mode::full;
  ladder_side side = ladder_side::left;
  std::vector<ladder_step> steps;  // steps[n] holds Y_n and U_n
  bool terminated = false;         // killed modes only: Y reached 0
};

// One application of theta^- (side = left: arrow targets) or theta
// (side = right: arrow sources), weighted by arrow multiplicities.
count_vector theta_step(const translation_quiver& Q, const count_vector& v,
                        ladder_side side);

// The counting recursion
//   Y_0 = start, Y_1 = theta Y_0, w_n = theta Y_{n-1} - tau Y_{n-2},
//   Y_n = (w_n)_+, U_n = (w_n)_-,
// with theta^-/tau^- on the left and theta/tau on the right, and with the
// killed vertex's coordinate zeroed after every linear step, before the
// positive/negative split. Killed modes run until two consecutive Y's
// vanish and throw if `cap` steps do not suffice; full mode runs exactly
// `cap` steps.
ladder_trace run_ladder(const translation_quiver& Q, const sparse_vec& start,
                        ladder_mode mode, ladder_side side, long long cap);

long long default_cap(const translation_quiver& Q);

// dim Hom(x, y) in the stable category selected by `mode`, as the sum of
// the multiplicities of y in the layers Y_n of the left ladder from x.
// In full mode the sum is truncated at default_cap layers (the radical
// filtration of Hom(x,y) is infinite there).
long long hom_dim(const translation_quiver& Q, int x, int y, ladder_mode mode);

// Accumulated left kill_R ladder from tau^- R; entry at R defined as 0.
// Zero entries are exactly the special vertices.
count_vector ext1_profile(const translation_quiver& Q);

// Syzygy: negatives of the right kill_R ladder. syzygy(R) is empty.
std::map<int, long long> syzygy(const translation_quiver& Q, int x);
std::map<int, long long> syzygy_of(const translation_quiver& Q, const sparse_vec& start);

// Cosyzygy: negatives of the left kill_omega ladder. cosyzygy(omega) is empty.
std::map<int, long long> cosyzygy(const translation_quiver& Q, int x);

// Rank of the minimal free cover of x: rank(x) + rank(syzygy(x)).
long long free_cover_rank(const translation_quiver& Q, int x);

// Full-mode ladder from `start`, first `columns` layers.
std::vector<sparse_vec> free_expansion(const translation_quiver& Q, int start,
                                       long long columns);

sparse_vec unit_vec(int x);
long long sparse_at(const sparse_vec& v, int x);

}  // namespace specials
