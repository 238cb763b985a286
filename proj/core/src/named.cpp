#include "specials/named.hpp"

#include <charconv>
#include <stdexcept>

namespace specials {

std::map<std::string, int> named_vertices(const translation_quiver& Q) {
  std::map<std::string, int> named;
  named["R"] = Q.R;
  named["omega"] = Q.omega;
  const auto& g = Q.group;
  switch (g.fam) {
    case family::A: {
      for (long long j = 0; j < g.r(); ++j)
        named["S" + std::to_string(j)] = static_cast<int>(j);
      break;
    }
    case family::D: {
      const auto& d = Q.diag;
      long long q = g.q(), m = Q.period;
      // V_t sits t steps down the diagonal from R, i.e. at picture column t
      // on chain node c_t.
      for (long long t = 1; t < q; ++t)
        named["V" + std::to_string(t)] =
            Q.vid(t / 2, d.node("c" + std::to_string(t)));
      named["W+"] = Q.vid(q / 2, d.node("w1"));
      named["W-"] = Q.vid(q / 2, d.node("w2"));
      // W_t alternates between the two fork nodes along the top zigzag.
      for (long long t = 1; t <= m; ++t)
        named["W" + std::to_string(t)] = Q.vid(t, d.node(t % 2 ? "u2" : "u1"));
      break;
    }
    case family::T: {
      const auto& d = Q.diag;
      named["A1"] = Q.vid(2, d.node("a2"));
      named["A2"] = Q.vid(4, d.node("a2"));
      named["B1"] = Q.vid(2, d.node("b2"));
      named["B2"] = Q.vid(4, d.node("b2"));
      named["C1"] = Q.vid(3, d.node("c2"));
      named["C2"] = Q.vid(6, d.node("c2"));
      break;
    }
    case family::O: {
      const auto& d = Q.diag;
      named["D1"] = Q.vid(3, d.node("n1"));
      named["D2"] = Q.vid(6, d.node("n7"));
      named["D3"] = Q.vid(9, d.node("n1"));
      named["E1"] = Q.vid(4, d.node("n7"));
      named["E2"] = Q.vid(8, d.node("n7"));
      named["F"] = Q.vid(6, d.node("n1"));
      named["N"] = Q.vid(12, d.node("n7"));
      break;
    }
    case family::I: {
      const auto& d = Q.diag;
      named["A1"] = Q.vid(6, d.node("e0"));
      named["A2"] = Q.vid(12, d.node("e0"));
      named["A3"] = Q.vid(18, d.node("e0"));
      named["A4"] = Q.vid(24, d.node("e0"));
      named["B1"] = Q.vid(10, d.node("e0"));
      named["B2"] = Q.vid(20, d.node("e0"));
      named["C"] = Q.vid(15, d.node("e0"));
      named["M"] = Q.vid(30, d.node("e0"));
      break;
    }
  }
  return named;
}

std::string vertex_label(const translation_quiver& Q, int id) {
  auto named = named_vertices(Q);
  for (const auto& [name, v] : named)
    if (v == id && name != "omega") return name;
  if (Q.cyclic()) return "S" + std::to_string(id);
  return Q.diag.names[Q.node_of(id)] + "@" + std::to_string(Q.column_of(id));
}

int resolve_vertex(const translation_quiver& Q, const std::string& token) {
  auto named = named_vertices(Q);
  if (auto it = named.find(token); it != named.end()) return it->second;
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec == std::errc() && ptr == token.data() + token.size() && v >= 0 &&
      v < Q.nvert)
    return v;
  throw std::invalid_argument("no vertex named '" + token + "' in this quiver");
}

}  // namespace specials
