#include "specials/json_io.hpp"

#include "specials/named.hpp"

namespace specials {

json hj_json(const hj_data& d) {
  json j;
  j["alphas"] = d.alphas;
  j["iseries"] = d.iseries;
  return j;
}

json graph_json(const resolution_graph& G, const fundamental_cycle_t& zf) {
  json j;
  j["curves"] = json::array();
  for (int i = 0; i < G.curve_count(); ++i)
    j["curves"].push_back({{"id", i}, {"self_int", G.self_int[i]}});
  j["edges"] = json::array();
  for (auto [a, b] : G.edges) j["edges"].push_back({a, b});
  j["zf"] = zf.coeffs;
  return j;
}

json quiver_json(const translation_quiver& Q, const std::vector<int>* dual) {
  json j;
  j["group"] = format_group(Q.group);
  j["vertices"] = json::array();
  for (int v = 0; v < Q.nvert; ++v)
    j["vertices"].push_back({{"id", v},
                             {"node", Q.cyclic() ? "s" : Q.diag.names[Q.node_of(v)]},
                             {"column", Q.column_of(v)},
                             {"rank", Q.rank_of[v]}});
  j["arrows"] = json::array();
  for (int v = 0; v < Q.nvert; ++v)
    for (auto [u, m] : Q.out_arrows[v])
      j["arrows"].push_back({{"from", v}, {"to", u}, {"mult", m}});
  json tau;
  for (int v = 0; v < Q.nvert; ++v) tau[std::to_string(v)] = Q.tau_of[v];
  j["tau"] = tau;
  j["R"] = Q.R;
  j["omega"] = Q.omega;
  if (dual) {
    json dj;
    for (int v = 0; v < Q.nvert; ++v) dj[std::to_string(v)] = (*dual)[v];
    j["dual"] = dj;
  }
  json named;
  for (const auto& [name, v] : named_vertices(Q)) named[name] = v;
  j["named"] = named;
  return j;
}

json profile_json(const translation_quiver& Q, const count_vector& profile) {
  json j;
  j["group"] = format_group(Q.group);
  json p;
  for (int v = 0; v < Q.nvert; ++v) p[std::to_string(v)] = profile[v];
  j["profile"] = p;
  return j;
}

json multiset_json(const translation_quiver& Q, const std::map<int, long long>& ms) {
  json j = json::array();
  for (const auto& [v, c] : ms)
    j.push_back({{"id", v}, {"label", vertex_label(Q, v)}, {"mult", c}});
  return j;
}

json trace_json(const translation_quiver& Q, const ladder_trace& tr) {
  json j;
  j["mode"] = tr.mode == ladder_mode::full      ? "full"
              : tr.mode == ladder_mode::kill_R ? "kill_R"
                                               : "kill_omega";
  j["direction"] = tr.side == ladder_side::left ? "left" : "right";
  j["terminated"] = tr.terminated;
  j["steps"] = json::array();
  for (const auto& st : tr.steps) {
    json y = json::object(), u = json::object();
    for (auto [i, c] : st.Y) y[std::to_string(i)] = c;
    for (auto [i, c] : st.U) u[std::to_string(i)] = c;
    j["steps"].push_back({{"Y", y}, {"U", u}});
  }
  return j;
}

json report_json(const classification_report& rep) {
  auto Q = build_ar_quiver(rep.group);
  json j;
  j["group"] = format_group(rep.group);
  j["vertex_count"] = rep.vertex_count;
  json counting = json::array();
  for (int v : rep.specials_counting)
    counting.push_back({{"id", v}, {"label", vertex_label(Q, v)}});
  j["specials_by_counting"] = counting;
  json closed = json::array();
  for (const auto& [name, id] : rep.specials_closed)
    closed.push_back({{"name", name}, {"id", id}});
  j["specials_closed_form"] = closed;
  json ranks = json::object();
  for (const auto& [v, r] : rep.special_ranks) ranks[std::to_string(v)] = r;
  j["ranks"] = ranks;
  j["dual_graph"] = graph_json(rep.graph, rep.zf);
  auto check = [](const check_result& c) {
    json r;
    r["pass"] = c.pass;
    if (!c.pass) r["diagnostic"] = c.diagnostic;
    return r;
  };
  j["checks"] = {{"oracle_equivalence", check(rep.oracle_equivalence)},
                 {"wunram", check(rep.wunram)},
                 {"omega_duality", check(rep.omega_duality)}};
  j["pass"] = rep.pass();
  return j;
}

}  // namespace specials
