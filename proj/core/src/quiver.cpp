#include "specials/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace specials {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int translation_quiver::vid(long long column, int node) const {
  if (cyclic()) {
    long long c = column % period;
    if (c < 0) c += period;
    return static_cast<int>(c);
  }
  long long k = floor_div(column, period);
  long long c = column - k * period;
  if (k > 0) {
    for (long long i = 0; i < k; ++i) node = diag.wrap[node];
  } else if (k < 0) {
    auto inv = diag.wrap_inv();
    for (long long i = 0; i < -k; ++i) node = inv[node];
  }
  return static_cast<int>(c) * nodes() + node;
}

long long translation_quiver::mult(int from, int to) const {
  auto it = out_arrows[from].find(to);
  return it == out_arrows[from].end() ? 0 : it->second;
}

namespace {

void add_arrow(translation_quiver& Q, int from, int to) {
  Q.out_arrows[from][to] += 1;
  Q.in_arrows[to][from] += 1;
}

translation_quiver build_cyclic(const group_params& g) {
  translation_quiver Q;
  Q.group = g;
  Q.period = g.r();
  Q.nvert = static_cast<int>(g.r());
  Q.out_arrows.resize(Q.nvert);
  Q.in_arrows.resize(Q.nvert);
  Q.tau_of.resize(Q.nvert);
  Q.tau_inv_of.resize(Q.nvert);
  Q.rank_of.assign(Q.nvert, 1);
  long long r = g.r(), a = g.a();
  for (long long j = 0; j < r; ++j) {
    add_arrow(Q, static_cast<int>(j), static_cast<int>((j + 1) % r));
    add_arrow(Q, static_cast<int>(j), static_cast<int>((j + a) % r));
    Q.tau_inv_of[static_cast<int>(j)] = static_cast<int>((j + 1 + a) % r);
  }
  for (int j = 0; j < Q.nvert; ++j) Q.tau_of[Q.tau_inv_of[j]] = j;
  Q.R = 0;
  Q.omega = Q.tau_of[Q.R];
  return Q;
}

translation_quiver build_knitted(const group_params& g,
                                 const std::vector<std::pair<int, int>>& orientation) {
  translation_quiver Q;
  Q.group = g;
  Q.diag = diagram_for(g);
  Q.period = quiver_period(g);
  int nn = Q.diag.size();
  Q.nvert = static_cast<int>(Q.period) * nn;
  Q.out_arrows.resize(Q.nvert);
  Q.in_arrows.resize(Q.nvert);
  Q.tau_of.resize(Q.nvert);
  Q.tau_inv_of.resize(Q.nvert);
  Q.rank_of.resize(Q.nvert);

  for (long long t = 0; t < Q.period; ++t) {
    for (int v = 0; v < nn; ++v) {
      int id = Q.vid(t, v);
      Q.rank_of[id] = Q.diag.marks[v];
      Q.tau_of[id] = Q.vid(t - 1, v);
      Q.tau_inv_of[id] = Q.vid(t + 1, v);
    }
    for (auto [u, v] : orientation) {
      add_arrow(Q, Q.vid(t, u), Q.vid(t, v));
      add_arrow(Q, Q.vid(t, v), Q.vid(t + 1, u));
    }
  }
  Q.R = Q.vid(0, Q.diag.extending);
  Q.omega = Q.tau_of[Q.R];
  return Q;
}

std::vector<std::pair<int, int>> bipartite_orientation(const diagram& d) {
  // Edges oriented from R's column-parity class to the other; this makes
  // every arrow advance one picture column, matching the drawings.
  std::vector<std::pair<int, int>> o;
  for (auto [i, j] : d.edges) {
    if (d.parity[i] == 0)
      o.push_back({i, j});
    else
      o.push_back({j, i});
  }
  return o;
}

}  // namespace

translation_quiver build_ar_quiver(const group_params& g) {
  validate(g);
  if (g.fam == family::A) return build_cyclic(g);
  auto d = diagram_for(g);
  auto Q = build_knitted(g, bipartite_orientation(d));
  if (!affine_marks_ok(Q.diag))
    throw std::logic_error("build_ar_quiver: affine mark equation violated");
  if (!mesh_property_holds(Q))
    throw std::logic_error("build_ar_quiver: mesh property violated (construction bug)");
  return Q;
}

translation_quiver build_ar_quiver_oriented(
    const group_params& g, const std::vector<std::pair<int, int>>& orientation) {
  validate(g);
  if (g.fam == family::A) return build_cyclic(g);
  return build_knitted(g, orientation);
}

bool mesh_property_holds(const translation_quiver& Q) {
  for (int x = 0; x < Q.nvert; ++x) {
    // theta(x) == theta^-(tau x) as multisets.
    if (Q.in_arrows[x] != Q.out_arrows[Q.tau_of[x]]) return false;
    // d_{xy}: arrows x->y biject with arrows y->tau^- x.
    for (auto [y, m] : Q.out_arrows[x])
      if (Q.mult(y, Q.tau_inv_of[x]) != m) return false;
  }
  return true;
}

namespace {

struct iso_search {
  const translation_quiver& A;
  const translation_quiver& B;
  std::vector<int> img, pre;

  bool assign(int a, int b) {
    if (img[a] != -1) return img[a] == b;
    if (pre[b] != -1) return false;
    if (A.rank_of[a] != B.rank_of[b]) return false;
    if (A.out_arrows[a].size() != B.out_arrows[b].size()) return false;
    if (A.in_arrows[a].size() != B.in_arrows[b].size()) return false;
    img[a] = b;
    pre[b] = a;
    // tau closure
    if (!assign(A.tau_of[a], B.tau_of[b])) return false;
    if (!assign(A.tau_inv_of[a], B.tau_inv_of[b])) return false;
    return true;
  }

  bool extend() {
    // Pick an assigned vertex with an unassigned out-neighbour.
    for (int a = 0; a < A.nvert; ++a) {
      if (img[a] == -1) continue;
      for (auto [y, m] : A.out_arrows[a]) {
        if (img[y] != -1) {
          if (B.mult(img[a], img[y]) != m) return false;
          continue;
        }
        // Try each matching out-neighbour of img[a].
        for (auto [z, mz] : B.out_arrows[img[a]]) {
          if (mz != m || pre[z] != -1) continue;
          auto save_img = img;
          auto save_pre = pre;
          if (assign(y, z) && extend()) return true;
          img = save_img;
          pre = save_pre;
        }
        return false;
      }
    }
    // Everything connected to R assigned; verify totality and arrows.
    for (int a = 0; a < A.nvert; ++a)
      if (img[a] == -1) return false;
    for (int a = 0; a < A.nvert; ++a)
      for (auto [y, m] : A.out_arrows[a])
        if (B.mult(img[a], img[y]) != m) return false;
    return true;
  }
};

}  // namespace

bool quiver_isomorphic(const translation_quiver& A, const translation_quiver& B) {
  if (A.nvert != B.nvert) return false;
  iso_search s{A, B, std::vector<int>(A.nvert, -1), std::vector<int>(B.nvert, -1)};
  if (!s.assign(A.R, B.R)) return false;
  return s.extend();
}

namespace {

struct dual_search {
  const translation_quiver& Q;
  std::size_t limit;
  std::vector<int> img, pre;
  std::vector<std::vector<int>> found;

  // dual maps x to y with arrows reversed: out(x) matches in(y) and
  // tau(x*) = (tau^- x)*.
  bool assign(int x, int y) {
    if (img[x] != -1) return img[x] == y;
    if (pre[y] != -1) return false;
    if (Q.rank_of[x] != Q.rank_of[y]) return false;
    if (Q.out_arrows[x].size() != Q.in_arrows[y].size()) return false;
    if (Q.in_arrows[x].size() != Q.out_arrows[y].size()) return false;
    img[x] = y;
    pre[y] = x;
    if (!assign(Q.tau_inv_of[x], Q.tau_of[y])) return false;
    if (!assign(Q.tau_of[x], Q.tau_inv_of[y])) return false;
    return true;
  }

  void extend() {
    if (found.size() >= limit) return;
    for (int x = 0; x < Q.nvert; ++x) {
      if (img[x] == -1) continue;
      for (auto [y, m] : Q.out_arrows[x]) {
        if (img[y] != -1) {
          if (Q.mult(img[y], img[x]) != m) return;
          continue;
        }
        for (auto [z, mz] : Q.in_arrows[img[x]]) {
          if (mz != m || pre[z] != -1) continue;
          auto save_img = img;
          auto save_pre = pre;
          if (assign(y, z)) extend();
          img = save_img;
          pre = save_pre;
          if (found.size() >= limit) return;
        }
        return;
      }
    }
    for (int x = 0; x < Q.nvert; ++x)
      if (img[x] == -1) return;
    // Full candidate: exact arrow reversal and involutivity.
    for (int x = 0; x < Q.nvert; ++x) {
      if (img[img[x]] != x) return;
      for (auto [y, m] : Q.out_arrows[x])
        if (Q.mult(img[y], img[x]) != m) return;
    }
    found.push_back(img);
  }
};

}  // namespace

std::vector<std::vector<int>> dual_candidates(const translation_quiver& Q,
                                              std::size_t limit) {
  dual_search s{Q, limit, std::vector<int>(Q.nvert, -1), std::vector<int>(Q.nvert, -1), {}};
  if (!s.assign(Q.R, Q.R)) return {};
  s.extend();
  std::sort(s.found.begin(), s.found.end());
  s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
  return s.found;
}

}  // namespace specials
