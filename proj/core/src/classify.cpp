#include "specials/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "specials/named.hpp"

namespace specials {

std::vector<int> specials_by_counting(const translation_quiver& Q) {
  auto profile = ext1_profile(Q);
  std::vector<int> out;
  for (int v = 0; v < Q.nvert; ++v)
    if (v == Q.R || profile[v] == 0) out.push_back(v);
  return out;
}

std::vector<int> compute_dual(const translation_quiver& Q) {
  auto cands = dual_candidates(Q, 8);
  if (cands.empty())
    throw std::runtime_error("compute_dual: no arrow-reversing involution found");
  if (cands.size() > 1) {
    // Pin the remaining freedom with (Omega X)* = X on rank-1 special
    // vertices; their syzygy is a single indecomposable of the same rank.
    auto profile = ext1_profile(Q);
    for (int v = 0; v < Q.nvert && cands.size() > 1; ++v) {
      if (v == Q.R || profile[v] != 0 || Q.rank_of[v] != 1) continue;
      auto om = syzygy(Q, v);
      if (om.size() != 1 || om.begin()->second != 1) continue;
      int u = om.begin()->first;
      std::erase_if(cands, [&](const std::vector<int>& d) { return d[u] != v; });
    }
    if (cands.size() != 1) {
      std::ostringstream os;
      os << "compute_dual: " << cands.size()
         << " candidates remain for " << format_group(Q.group)
         << " after syzygy anchoring";
      throw std::runtime_error(os.str());
    }
  }
  return cands.front();
}

check_result wunram_check(const classification_report& rep) {
  std::vector<long long> ranks;
  for (const auto& [v, r] : rep.special_ranks) ranks.push_back(r);
  std::vector<long long> zf = rep.zf.coeffs;
  std::sort(ranks.begin(), ranks.end());
  std::sort(zf.begin(), zf.end());
  std::ostringstream os;
  if (ranks.size() != zf.size()) {
    os << "non-free specials: " << ranks.size() << ", curves: " << zf.size();
    return {false, os.str()};
  }
  if (ranks != zf) {
    os << "rank multiset {";
    for (auto r : ranks) os << r << ' ';
    os << "} != Z_f multiset {";
    for (auto z : zf) os << z << ' ';
    os << "}";
    return {false, os.str()};
  }
  return {true, ""};
}

check_result omega_duality_check(const translation_quiver& Q,
                                 const std::vector<int>& specials,
                                 const std::vector<int>& dual) {
  std::vector<bool> is_special(Q.nvert, false);
  for (int v : specials) is_special[v] = true;
  std::ostringstream os;
  for (int v = 0; v < Q.nvert; ++v) {
    if (v == Q.R) continue;
    auto om = syzygy(Q, v);
    bool dual_fixed = om.size() == 1 && om.begin()->second == 1 &&
                      dual[om.begin()->first] == v;
    if (dual_fixed != is_special[v]) {
      os << "vertex " << vertex_label(Q, v) << " is "
         << (is_special[v] ? "special" : "not special")
         << " but (Omega)* " << (dual_fixed ? "fixes" : "does not fix") << " it";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

classification_report classify(const group_params& g) {
  validate(g);
  classification_report rep;
  rep.group = g;
  auto Q = build_ar_quiver(g);
  rep.vertex_count = Q.nvert;
  rep.specials_counting = specials_by_counting(Q);
  rep.specials_closed = specials_closed_form(Q);
  for (int v : rep.specials_counting)
    if (v != Q.R) rep.special_ranks[v] = Q.rank_of[v];
  rep.graph = dual_graph(g);
  rep.zf = fundamental_cycle(rep.graph);

  std::vector<int> closed_ids;
  for (const auto& [name, id] : rep.specials_closed) closed_ids.push_back(id);
  std::sort(closed_ids.begin(), closed_ids.end());
  if (closed_ids == rep.specials_counting) {
    rep.oracle_equivalence = {true, ""};
  } else {
    std::ostringstream os;
    os << "counting {";
    for (int v : rep.specials_counting) os << vertex_label(Q, v) << ' ';
    os << "} != closed form {";
    for (int v : closed_ids) os << vertex_label(Q, v) << ' ';
    os << "}";
    rep.oracle_equivalence = {false, os.str()};
  }

  rep.wunram = wunram_check(rep);
  auto dual = compute_dual(Q);
  rep.omega_duality = omega_duality_check(Q, rep.specials_counting, dual);
  return rep;
}

std::vector<group_params> sweep_family(family f, long long max_p1) {
  std::vector<group_params> out;
  switch (f) {
    case family::A:
      for (long long r = 3; r <= max_p1; ++r)
        for (long long a = 2; a < r; ++a)
          if (std::gcd(r, a) == 1) out.push_back({family::A, r, a});
      break;
    case family::D:
      for (long long n = 3; n <= max_p1; ++n)
        for (long long q = 2; q < n; ++q)
          if (std::gcd(n, q) == 1) out.push_back({family::D, n, q});
      break;
    case family::T:
      for (long long m = 1; m <= max_p1; m += 2)
        if (is_valid({family::T, m, 0})) out.push_back({family::T, m, 0});
      break;
    case family::O:
      for (long long m = 1; m <= max_p1; m += 2)
        if (is_valid({family::O, m, 0})) out.push_back({family::O, m, 0});
      break;
    case family::I:
      for (long long m = 1; m <= max_p1; m += 2)
        if (is_valid({family::I, m, 0})) out.push_back({family::I, m, 0});
      break;
  }
  return out;
}

}  // namespace specials
