#pragma once

#include <map>
#include <string>
#include <vector>

#include "specials/ladder.hpp"
#include "specials/quiver.hpp"
#include "specials/resolution.hpp"

namespace specials {

struct check_result {
  bool pass = false;
  std::string diagnostic;
};

struct classification_report {
  group_params group;
  long long vertex_count = 0;
  std::vector<int> specials_counting;                        // sorted vertex ids
  std::vector<std::pair<std::string, int>> specials_closed;  // name -> id
  std::map<int, long long> special_ranks;
  resolution_graph graph;
  fundamental_cycle_t zf;
  check_result oracle_equivalence;
  check_result wunram;
  check_result omega_duality;

  bool pass() const {
    return oracle_equivalence.pass && wunram.pass && omega_duality.pass;
  }
};

// R together with the zero positions of the Ext^1 profile.
std::vector<int> specials_by_counting(const translation_quiver& Q);

// The closed-form answer: i-series positions for A, the W/V lists for D,
// the named positions per subfamily for T/O/I with b >= 3, the per-group
// position tables for the b = 2 members, and everything for m = 1.
std::vector<std::pair<std::string, int>> specials_closed_form(
    const translation_quiver& Q);

// The anti-automorphism Hom(-,R). Candidates come from the structural
// search; if several survive, the one compatible with syzygies of rank-1
// special vertices is selected ((Omega X)* = X for special X). Throws if
// zero or more than one candidate remains.
std::vector<int> compute_dual(const translation_quiver& Q);

check_result wunram_check(const classification_report& rep);
check_result omega_duality_check(const translation_quiver& Q,
                                 const std::vector<int>& specials,
                                 const std::vector<int>& dual);

classification_report classify(const group_params& g);

// All valid groups of one family with p1 bounded by max_p1 (and for A/D
// every valid second parameter).
std::vector<group_params> sweep_family(family f, long long max_p1);

}  // namespace specials
