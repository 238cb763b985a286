#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specials/diagram.hpp"
#include "specials/group.hpp"

namespace specials {

// Finite stable translation quiver of CM(C[[x,y]]^G).
//
// For D/T/O/I this is the quotient of Z(affine diagram) by tau^{-m}
// composed with the wrap permutation: vertices are (column mod m, node),
// arrows come from the knitting of a fixed orientation, tau shifts the
// column down by one. Type A is the cyclic model: vertices j mod r with
// arrows j -> j+1 and j -> j+a and tau^-(j) = j+1+a.
struct translation_quiver {
  group_params group;
  long long period = 0;
  diagram diag;  // unused for family A
  int nvert = 0;

  std::vector<std::map<int, long long>> out_arrows;  // target -> multiplicity
  std::vector<std::map<int, long long>> in_arrows;   // source -> multiplicity
  std::vector<int> tau_of, tau_inv_of;
  std::vector<long long> rank_of;
  int R = -1;
  int omega = -1;
  std::optional<std::vector<int>> dual;  // filled by compute_dual

  bool cyclic() const { return group.fam == family::A; }
  int nodes() const { return cyclic() ? 1 : diag.size(); }

  // Fold an arbitrary column index into [0, period), applying the wrap
  // permutation once per crossing, and return the vertex id.
  int vid(long long column, int node) const;
  int node_of(int id) const { return cyclic() ? 0 : id % nodes(); }
  long long column_of(int id) const { return cyclic() ? id : id / nodes(); }
  long long mult(int from, int to) const;
};

translation_quiver build_ar_quiver(const group_params& g);

// Same quotient over an arbitrary orientation of the diagram's edges
// (each undirected edge listed once, in the chosen direction). The result
// must be isomorphic to the default build; used as a structural test.
translation_quiver build_ar_quiver_oriented(
    const group_params& g, const std::vector<std::pair<int, int>>& orientation);

// theta(x) = theta^-(tau x) at every vertex, and arrows x->y biject with
// arrows y->tau^- x.
bool mesh_property_holds(const translation_quiver& Q);

// Isomorphism test with R pinned; respects arrows (with multiplicity),
// tau and ranks.
bool quiver_isomorphic(const translation_quiver& A, const translation_quiver& B);

// All arrow-reversing involutions fixing R and intertwining tau; at most
// `limit` of them. compute_dual (classify.hpp) picks the categorical one.
std::vector<std::vector<int>> dual_candidates(const translation_quiver& Q,
                                              std::size_t limit);

}  // namespace specials
