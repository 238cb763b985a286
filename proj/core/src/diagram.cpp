#include "specials/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specials {

int diagram::node(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("diagram: no node named " + name);
  return static_cast<int>(it - names.begin());
}

bool diagram::twisted() const {
  for (int i = 0; i < size(); ++i)
    if (wrap[i] != i) return true;
  return false;
}

std::vector<int> diagram::wrap_inv() const {
  std::vector<int> inv(wrap.size());
  for (std::size_t i = 0; i < wrap.size(); ++i) inv[wrap[i]] = static_cast<int>(i);
  return inv;
}

namespace {

diagram affine_D(long long q, bool twist) {
  // u1, u2 fork at R's end; chain c1..c_{q-1}; w1, w2 fork at the far end.
  diagram d;
  d.names = {"u1", "u2"};
  for (long long t = 1; t < q; ++t) d.names.push_back("c" + std::to_string(t));
  d.names.push_back("w1");
  d.names.push_back("w2");
  int n = d.size();
  int c1 = 2, w1 = n - 2, w2 = n - 1;

  d.marks.assign(n, 2);
  d.marks[0] = d.marks[1] = 1;
  d.marks[w1] = d.marks[w2] = 1;

  d.edges.push_back({0, c1});
  d.edges.push_back({1, c1});
  for (int t = 1; t + 1 < q; ++t) d.edges.push_back({c1 + t - 1, c1 + t});
  int clast = c1 + static_cast<int>(q) - 2;  // c_{q-1}
  d.edges.push_back({clast, w1});
  d.edges.push_back({clast, w2});

  d.extending = 0;
  d.wrap.resize(n);
  std::iota(d.wrap.begin(), d.wrap.end(), 0);
  if (twist) std::swap(d.wrap[0], d.wrap[1]);

  d.row.assign(n, 0);
  d.parity.assign(n, 0);
  d.row[0] = 0;
  d.row[1] = 1;
  for (long long t = 1; t < q; ++t) {
    d.row[c1 + t - 1] = static_cast<int>(t);
    d.parity[c1 + t - 1] = static_cast<int>(t % 2);
  }
  // w1 shares the bottom horizontal row with c_{q-1}; for q = 2 that row is
  // u2's, so the forks get rows of their own.
  d.row[w1] = static_cast<int>(q == 2 ? q : q - 1);
  d.row[w2] = static_cast<int>(q == 2 ? q + 1 : q);
  d.parity[w1] = d.parity[w2] = static_cast<int>(q % 2);
  return d;
}

diagram affine_E6(bool twist) {
  diagram d;
  d.names = {"z", "a1", "a2", "b1", "b2", "c1", "c2"};
  d.marks = {3, 2, 1, 2, 1, 2, 1};
  d.edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  d.extending = d.node("c2");
  d.wrap.resize(7);
  std::iota(d.wrap.begin(), d.wrap.end(), 0);
  if (twist) {
    // Arm rotation fixed by the fully labelled m=3 quiver: crossing the
    // right boundary sends c -> a -> b -> c.
    d.wrap[d.node("c1")] = d.node("a1");
    d.wrap[d.node("c2")] = d.node("a2");
    d.wrap[d.node("a1")] = d.node("b1");
    d.wrap[d.node("a2")] = d.node("b2");
    d.wrap[d.node("b1")] = d.node("c1");
    d.wrap[d.node("b2")] = d.node("c2");
  }
  d.row = {2, 1, 0, 3, 4, 2, 3};
  d.parity = {0, 1, 0, 1, 0, 1, 0};
  return d;
}

diagram affine_E7() {
  diagram d;
  d.names = {"n1", "n2", "n3", "n4", "n5", "n6", "n7", "nb"};
  d.marks = {1, 2, 3, 4, 3, 2, 1, 2};
  d.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {7, 3}};
  d.extending = d.node("n7");
  d.wrap.resize(8);
  std::iota(d.wrap.begin(), d.wrap.end(), 0);
  d.row = {0, 1, 2, 3, 4, 5, 6, 3};
  d.parity = {0, 1, 0, 1, 0, 1, 0, 0};
  return d;
}

diagram affine_E8() {
  diagram d;
  d.names = {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "eb"};
  d.marks = {1, 2, 3, 4, 5, 6, 4, 2, 3};
  d.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
  d.extending = d.node("e0");
  d.wrap.resize(9);
  std::iota(d.wrap.begin(), d.wrap.end(), 0);
  d.row = {7, 6, 5, 4, 3, 2, 1, 0, 2};
  d.parity = {0, 1, 0, 1, 0, 1, 0, 1, 0};
  return d;
}

}  // namespace

diagram diagram_for(const group_params& g) {
  validate(g);
  switch (g.fam) {
    case family::D:
      return affine_D(g.q(), (g.n() - g.q()) % 2 == 0);
    case family::T:
      return affine_E6(g.m() % 6 == 3);
    case family::O:
      return affine_E7();
    case family::I:
      return affine_E8();
    case family::A:
      throw std::invalid_argument("diagram_for: family A uses the cyclic model");
  }
  throw std::logic_error("diagram_for: unreachable");
}

long long quiver_period(const group_params& g) {
  switch (g.fam) {
    case family::A: return g.r();
    case family::D: return g.n() - g.q();
    default: return g.m();
  }
}

bool affine_marks_ok(const diagram& d) {
  if (d.marks[d.extending] != 1) return false;
  std::vector<long long> nb(d.size(), 0);
  for (auto [i, j] : d.edges) {
    nb[i] += d.marks[j];
    nb[j] += d.marks[i];
  }
  for (int i = 0; i < d.size(); ++i)
    if (2 * d.marks[i] != nb[i]) return false;
  return true;
}

}  // namespace specials
