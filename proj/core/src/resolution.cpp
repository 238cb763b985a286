#include "specials/resolution.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "specials/hj.hpp"
#include "specials/rational.hpp"

namespace specials {

namespace {

resolution_graph chain_graph(const std::vector<long long>& alphas) {
  resolution_graph G;
  G.layout = "chain";
  for (long long a : alphas) G.self_int.push_back(-a);
  for (int i = 0; i + 1 < G.curve_count(); ++i) G.edges.push_back({i, i + 1});
  return G;
}

// Chain with one extra curve hanging off chain position `at`.
resolution_graph star_graph(const std::vector<long long>& chain, int at,
                            long long branch) {
  resolution_graph G = chain_graph(chain);
  G.layout = "star";
  G.self_int.push_back(-branch);
  G.edges.push_back({at, G.curve_count() - 1});
  return G;
}

struct toi_shape {
  std::vector<long long> chain;
  int branch_at;
};

toi_shape toi_chain(const group_params& g) {
  auto fd = compute_family_data(g);
  long long b = fd.b;
  switch (g.fam) {
    case family::T:
      switch (fd.delta) {
        case 1: return {{2, 2, b, 2, 2}, 2};
        case 3: return {{3, b, 2, 2}, 1};
        case 5: return {{3, b, 3}, 1};
      }
      break;
    case family::O:
      switch (fd.delta) {
        case 1: return {{2, 2, b, 2, 2, 2}, 2};
        case 5: return {{3, b, 2, 2, 2}, 1};
        case 7: return {{4, b, 2, 2}, 1};
        case 11: return {{3, b, 4}, 1};
      }
      break;
    case family::I:
      switch (fd.delta) {
        case 1: return {{2, 2, b, 2, 2, 2, 2}, 2};
        case 7: return {{2, 2, b, 2, 3}, 2};
        case 11: return {{3, b, 2, 2, 2, 2}, 1};
        case 13: return {{2, 2, b, 3, 2}, 2};
        case 17: return {{3, b, 2, 3}, 1};
        case 19: return {{5, b, 2, 2}, 1};
        case 23: return {{3, b, 3, 2}, 1};
        case 29: return {{3, b, 5}, 1};
      }
      break;
    default: break;
  }
  throw std::logic_error("toi_chain: unreachable");
}

}  // namespace

resolution_graph dual_graph(const group_params& g) {
  validate(g);
  switch (g.fam) {
    case family::A:
      return chain_graph(hj_expand(g.r(), g.a()).alphas);
    case family::D: {
      // Two (-2) curves attached to the alpha_1 end of the chain.
      auto alphas = hj_expand(g.n(), g.q()).alphas;
      resolution_graph G;
      G.layout = "fork";
      G.self_int = {-2, -2};
      for (long long a : alphas) G.self_int.push_back(-a);
      G.edges.push_back({0, 2});
      G.edges.push_back({1, 2});
      for (int i = 2; i + 1 < G.curve_count(); ++i) G.edges.push_back({i, i + 1});
      return G;
    }
    case family::T:
    case family::O:
    case family::I: {
      auto s = toi_chain(g);
      return star_graph(s.chain, s.branch_at, 2);
    }
  }
  throw std::logic_error("dual_graph: unreachable");
}

std::vector<std::vector<long long>> intersection_matrix(const resolution_graph& G) {
  int k = G.curve_count();
  std::vector<std::vector<long long>> M(k, std::vector<long long>(k, 0));
  for (int i = 0; i < k; ++i) M[i][i] = G.self_int[i];
  for (auto [i, j] : G.edges) {
    M[i][j] = 1;
    M[j][i] = 1;
  }
  return M;
}

bool is_negative_definite(const resolution_graph& G) {
  // Exact rational elimination; pivots are the ratios of consecutive
  // leading principal minors, so "all pivots negative" is the alternating
  // minor sign condition.
  auto M = intersection_matrix(G);
  int k = G.curve_count();
  std::vector<std::vector<rational>> A(k, std::vector<rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) A[i][j] = rational(M[i][j]);
  for (int p = 0; p < k; ++p) {
    if (!(A[p][p] < rational(0))) return false;
    for (int i = p + 1; i < k; ++i) {
      if (A[i][p] == rational(0)) continue;
      rational f = A[i][p] / A[p][p];
      for (int j = p; j < k; ++j) A[i][j] = A[i][j] - f * A[p][j];
    }
  }
  return true;
}

std::vector<long long> cycle_dot_curves(const resolution_graph& G,
                                        const std::vector<long long>& Z) {
  int k = G.curve_count();
  std::vector<long long> dot(k, 0);
  for (int i = 0; i < k; ++i) dot[i] += Z[i] * G.self_int[i];
  for (auto [i, j] : G.edges) {
    dot[i] += Z[j];
    dot[j] += Z[i];
  }
  return dot;
}

fundamental_cycle_t fundamental_cycle(const resolution_graph& G) {
  if (!is_negative_definite(G))
    throw std::runtime_error("fundamental_cycle: intersection matrix not negative definite");
  int k = G.curve_count();
  long long alpha_sum = 0;
  for (long long s : G.self_int) alpha_sum += -s;
  const long long cap = alpha_sum * k * 16;

  std::vector<long long> Z(k, 1);
  auto dot = cycle_dot_curves(G, Z);
  long long steps = 0;
  for (;;) {
    int bump = -1;
    for (int i = 0; i < k; ++i)
      if (dot[i] > 0) {
        bump = i;
        break;
      }
    if (bump < 0) break;
    if (++steps > cap)
      throw std::runtime_error("fundamental_cycle: iteration cap exceeded");
    Z[bump] += 1;
    dot[bump] += G.self_int[bump];
    for (auto [i, j] : G.edges) {
      if (i == bump) dot[j] += 1;
      if (j == bump) dot[i] += 1;
    }
  }
  return {Z};
}

fundamental_cycle_t zf_closed_form_D(long long n, long long q) {
  group_params g{family::D, n, q};
  auto fd = compute_family_data(g);
  auto alphas = hj_expand(n, q).alphas;
  long long N = static_cast<long long>(alphas.size());
  std::vector<long long> Z(static_cast<std::size_t>(N + 2), 1);
  for (long long t = 1; t <= fd.nu; ++t) Z[static_cast<std::size_t>(1 + t)] = 2;
  return {Z};
}

std::string dual_graph_dot(const resolution_graph& G) {
  std::ostringstream os;
  os << "graph dual {\n  node [shape=circle];\n";
  for (int i = 0; i < G.curve_count(); ++i)
    os << "  E" << i << " [label=\"" << G.self_int[i] << "\"];\n";
  for (auto [i, j] : G.edges) os << "  E" << i << " -- E" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace specials
