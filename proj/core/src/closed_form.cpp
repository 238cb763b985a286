#include <algorithm>
#include <stdexcept>

#include "specials/classify.hpp"
#include "specials/hj.hpp"
#include "specials/named.hpp"

namespace specials {

namespace {

struct pos {
  long long column;
  const char* node;
};

// Special positions of the b = 2 member of each T/O/I subfamily, read off
// the per-group classification pictures (folded coordinates relative to R).
std::vector<pos> b2_positions(family f, long long m) {
  if (f == family::T) {
    if (m == 3) return {{0, "a2"}, {2, "a2"}, {0, "c1"}, {1, "b1"}, {2, "b2"}};
    if (m == 5) return {{2, "a2"}, {0, "c1"}, {3, "c2"}, {2, "b2"}};
  }
  if (f == family::O) {
    if (m == 5)
      return {{1, "n1"}, {3, "n1"}, {2, "nb"}, {0, "n6"}, {3, "n6"}, {4, "n7"}};
    if (m == 7) return {{3, "n1"}, {6, "n1"}, {2, "n2"}, {0, "n6"}, {4, "n7"}};
    if (m == 11) return {{3, "n1"}, {6, "n1"}, {0, "n6"}, {4, "n7"}};
  }
  if (f == family::I) {
    switch (m) {
      case 7: return {{6, "e7"}, {3, "eb"}, {0, "e1"}, {5, "e1"}, {3, "e0"}, {6, "e0"}};
      case 11:
        return {{3, "e7"}, {6, "e7"}, {0, "e1"}, {9, "e1"},
                {4, "e0"}, {6, "e0"}, {10, "e0"}};
      case 13:
        return {{3, "e7"}, {8, "e7"}, {2, "e0"}, {6, "e0"}, {10, "e0"}, {12, "e0"}};
      case 17: return {{6, "e7"}, {0, "e1"}, {6, "e0"}, {10, "e0"}, {15, "e0"}};
      case 19: return {{0, "e1"}, {5, "e1"}, {6, "e0"}, {10, "e0"}, {15, "e0"}};
      case 23: return {{3, "e7"}, {6, "e0"}, {10, "e0"}, {12, "e0"}, {15, "e0"}};
      case 29: return {{0, "e1"}, {6, "e0"}, {10, "e0"}, {15, "e0"}};
    }
  }
  throw std::logic_error("b2_positions: not a b = 2 group");
}

std::vector<const char*> b3_names(family f, long long delta) {
  if (f == family::T) {
    if (delta == 1) return {"A1", "A2", "B1", "B2", "C1", "C2"};
    if (delta == 3) return {"A1", "B1", "B2", "C1", "C2"};
    if (delta == 5) return {"A1", "B1", "C1", "C2"};
  }
  if (f == family::O) {
    if (delta == 1) return {"D1", "D2", "D3", "E1", "E2", "F", "N"};
    if (delta == 5) return {"D1", "D2", "D3", "E1", "F", "N"};
    if (delta == 7) return {"D1", "E1", "E2", "F", "N"};
    if (delta == 11) return {"D1", "E1", "F", "N"};
  }
  if (f == family::I) {
    switch (delta) {
      case 1: return {"A1", "A2", "A3", "A4", "B1", "B2", "C", "M"};
      case 7: return {"A1", "A3", "B1", "B2", "C", "M"};
      case 11: return {"A1", "A2", "A3", "A4", "B1", "C", "M"};
      case 13: return {"A1", "A2", "B1", "B2", "C", "M"};
      case 17: return {"A1", "A3", "B1", "C", "M"};
      case 19: return {"A1", "B1", "B2", "C", "M"};
      case 23: return {"A1", "A2", "B1", "C", "M"};
      case 29: return {"A1", "B1", "C", "M"};
    }
  }
  throw std::logic_error("b3_names: unreachable");
}

}  // namespace

std::vector<std::pair<std::string, int>> specials_closed_form(
    const translation_quiver& Q) {
  const auto& g = Q.group;
  auto named = named_vertices(Q);
  std::vector<std::pair<std::string, int>> out;
  auto add_named = [&](const std::string& name) {
    auto it = named.find(name);
    if (it == named.end())
      throw std::logic_error("specials_closed_form: missing named vertex " + name);
    out.push_back({name, it->second});
  };

  switch (g.fam) {
    case family::A: {
      auto hj = hj_expand(g.r(), g.a());
      for (std::size_t p = 0; p + 1 < hj.iseries.size(); ++p)
        add_named("S" + std::to_string(hj.iseries[p] % g.r()));
      break;
    }
    case family::D: {
      auto hj = hj_expand(g.n(), g.q());
      auto fd = compute_family_data(g);
      long long N = static_cast<long long>(hj.alphas.size());
      add_named("R");
      add_named("W+");
      add_named("W-");
      for (long long p = fd.nu + 1; p <= N; ++p)
        add_named("W" + std::to_string(hj.iseries[static_cast<std::size_t>(p)]));
      for (long long s = 0; s < fd.nu; ++s)
        add_named("V" + std::to_string(
                            hj.iseries[static_cast<std::size_t>(fd.nu + 1)] +
                            s * (g.n() - g.q())));
      break;
    }
    case family::T:
    case family::O:
    case family::I: {
      if (g.m() == 1) {
        for (int v = 0; v < Q.nvert; ++v) out.push_back({vertex_label(Q, v), v});
        break;
      }
      add_named("R");
      auto fd = compute_family_data(g);
      if (fd.b >= 3) {
        for (const char* name : b3_names(g.fam, fd.delta)) add_named(name);
      } else {
        for (const auto& p : b2_positions(g.fam, g.m())) {
          int id = Q.vid(p.column, Q.diag.node(p.node));
          out.push_back({vertex_label(Q, id), id});
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          return a.second == b.second;
                        }),
            out.end());
  return out;
}

}  // namespace specials
