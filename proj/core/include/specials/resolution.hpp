#pragma once

#include <string>
#include <vector>

#include "specials/group.hpp"

namespace specials {

// Labelled dual graph of the minimal resolution: a tree of exceptional
// curves, each decorated with its self-intersection number (<= -2).
//
// Curve order is fixed for stable serialization:
//   A:     chain alpha_1 .. alpha_N
//   D:     the two (-2) branch curves first (top, bottom), then the chain
//   T/O/I: the chain left to right, branch curve last
struct resolution_graph {
  std::vector<long long> self_int;            // negative values
  std::vector<std::pair<int, int>> edges;     // tree adjacency
  std::string layout;                         // "chain" | "fork" | "star"

  int curve_count() const { return static_cast<int>(self_int.size()); }
};

struct fundamental_cycle_t {
  std::vector<long long> coeffs;  // one positive integer per curve
};

resolution_graph dual_graph(const group_params& g);

// Symmetric matrix with self-intersections on the diagonal and 1 for
// adjacent pairs.
std::vector<std::vector<long long>> intersection_matrix(const resolution_graph& G);

// All leading principal minors alternate in sign, checked by exact
// fraction-free elimination.
bool is_negative_definite(const resolution_graph& G);

// Laufer's iteration: Z = sum E_i; while some Z.E_i > 0, add E_i.
// Throws std::runtime_error if the safety cap (sum(alpha) * curves * 16)
// is ever exceeded.
fundamental_cycle_t fundamental_cycle(const resolution_graph& G);

// Z.E_i for every curve i.
std::vector<long long> cycle_dot_curves(const resolution_graph& G,
                                        const std::vector<long long>& Z);

// Closed form for type D: all ones when alpha_1 >= 3, otherwise 1 on the
// branch curves, 2 on the first nu chain entries and 1 afterwards.
fundamental_cycle_t zf_closed_form_D(long long n, long long q);

std::string dual_graph_dot(const resolution_graph& G);

}  // namespace specials
