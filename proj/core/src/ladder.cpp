#include "specials/ladder.hpp"

#include <algorithm>
#include <stdexcept>

namespace specials {

namespace {

sparse_vec normalized(std::vector<std::pair<int, long long>> acc) {
  std::sort(acc.begin(), acc.end());
  sparse_vec out;
  for (auto& [i, c] : acc) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.push_back({i, c});
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.second == 0; }),
            out.end());
  return out;
}

sparse_vec theta_sparse(const translation_quiver& Q, const sparse_vec& v,
                        ladder_side side) {
  std::vector<std::pair<int, long long>> acc;
  for (auto [i, c] : v) {
    const auto& nb = side == ladder_side::left ? Q.out_arrows[i] : Q.in_arrows[i];
    for (auto [j, m] : nb) acc.push_back({j, c * m});
  }
  return normalized(std::move(acc));
}

sparse_vec tau_shift(const translation_quiver& Q, const sparse_vec& v,
                     ladder_side side) {
  // left: (tau^- v)(x) = v(tau x); right: (tau v)(x) = v(tau^- x).
  std::vector<std::pair<int, long long>> acc;
  for (auto [i, c] : v)
    acc.push_back({side == ladder_side::left ? Q.tau_inv_of[i] : Q.tau_of[i], c});
  return normalized(std::move(acc));
}

sparse_vec subtract(const sparse_vec& a, const sparse_vec& b) {
  std::vector<std::pair<int, long long>> acc(a.begin(), a.end());
  for (auto [i, c] : b) acc.push_back({i, -c});
  return normalized(std::move(acc));
}

void kill_coordinate(sparse_vec& v, int killed) {
  if (killed < 0) return;
  v.erase(std::remove_if(v.begin(), v.end(),
                         [killed](const auto& p) { return p.first == killed; }),
          v.end());
}

int killed_vertex(const translation_quiver& Q, ladder_mode mode) {
  switch (mode) {
    case ladder_mode::kill_R: return Q.R;
    case ladder_mode::kill_omega: return Q.omega;
    default: return -1;
  }
}

void split(const sparse_vec& w, sparse_vec& pos, sparse_vec& neg) {
  pos.clear();
  neg.clear();
  for (auto [i, c] : w) {
    if (c > 0) pos.push_back({i, c});
    else neg.push_back({i, -c});
  }
}

}  // namespace

sparse_vec unit_vec(int x) { return {{x, 1}}; }

long long sparse_at(const sparse_vec& v, int x) {
  for (auto [i, c] : v)
    if (i == x) return c;
  return 0;
}

count_vector theta_step(const translation_quiver& Q, const count_vector& v,
                        ladder_side side) {
  sparse_vec s;
  for (int i = 0; i < Q.nvert; ++i)
    if (v[i] != 0) s.push_back({i, v[i]});
  count_vector out(Q.nvert, 0);
  for (auto [i, c] : theta_sparse(Q, s, side)) out[i] = c;
  return out;
}

long long default_cap(const translation_quiver& Q) { return 16LL * Q.nvert; }

ladder_trace run_ladder(const translation_quiver& Q, const sparse_vec& start,
                        ladder_mode mode, ladder_side side, long long cap) {
  if (cap < 1) throw std::invalid_argument("run_ladder: cap must be >= 1");
  const int killed = killed_vertex(Q, mode);
  const bool full = mode == ladder_mode::full;

  ladder_trace tr;
  tr.mode = mode;
  tr.side = side;

  sparse_vec y0 = normalized({start.begin(), start.end()});
  kill_coordinate(y0, killed);
  tr.steps.push_back({y0, {}});
  if (!full && y0.empty()) {
    tr.terminated = true;
    return tr;
  }

  sparse_vec y1 = theta_sparse(Q, y0, side);
  kill_coordinate(y1, killed);
  tr.steps.push_back({y1, {}});

  for (long long n = 2; n <= cap; ++n) {
    const sparse_vec& prev = tr.steps[n - 1].Y;
    const sparse_vec& prev2 = tr.steps[n - 2].Y;
    sparse_vec w = subtract(theta_sparse(Q, prev, side), tau_shift(Q, prev2, side));
    kill_coordinate(w, killed);
    ladder_step st;
    split(w, st.Y, st.U);
    tr.steps.push_back(std::move(st));
    if (!full && tr.steps[n].Y.empty() && tr.steps[n - 1].Y.empty()) {
      tr.terminated = true;
      return tr;
    }
  }
  if (!full)
    throw std::runtime_error("run_ladder: step cap exceeded in a killed mode");
  return tr;
}

long long hom_dim(const translation_quiver& Q, int x, int y, ladder_mode mode) {
  auto tr = run_ladder(Q, unit_vec(x), mode, ladder_side::left, default_cap(Q));
  long long total = 0;
  for (const auto& st : tr.steps) total += sparse_at(st.Y, y);
  return total;
}

count_vector ext1_profile(const translation_quiver& Q) {
  auto tr = run_ladder(Q, unit_vec(Q.tau_inv_of[Q.R]), ladder_mode::kill_R,
                       ladder_side::left, default_cap(Q));
  count_vector profile(Q.nvert, 0);
  for (const auto& st : tr.steps)
    for (auto [i, c] : st.Y) profile[i] += c;
  profile[Q.R] = 0;
  return profile;
}

std::map<int, long long> syzygy_of(const translation_quiver& Q,
                                   const sparse_vec& start) {
  auto tr = run_ladder(Q, start, ladder_mode::kill_R, ladder_side::right,
                       default_cap(Q));
  std::map<int, long long> omega;
  for (const auto& st : tr.steps)
    for (auto [i, c] : st.U) omega[i] += c;
  return omega;
}

std::map<int, long long> syzygy(const translation_quiver& Q, int x) {
  return syzygy_of(Q, unit_vec(x));
}

std::map<int, long long> cosyzygy(const translation_quiver& Q, int x) {
  auto tr = run_ladder(Q, unit_vec(x), ladder_mode::kill_omega, ladder_side::left,
                       default_cap(Q));
  std::map<int, long long> out;
  for (const auto& st : tr.steps)
    for (auto [i, c] : st.U) out[i] += c;
  return out;
}

long long free_cover_rank(const translation_quiver& Q, int x) {
  long long total = Q.rank_of[x];
  for (auto [i, c] : syzygy(Q, x)) total += c * Q.rank_of[i];
  return total;
}

std::vector<sparse_vec> free_expansion(const translation_quiver& Q, int start,
                                       long long columns) {
  if (columns < 1) throw std::invalid_argument("free_expansion: columns must be >= 1");
  auto tr = run_ladder(Q, unit_vec(start), ladder_mode::full, ladder_side::left,
                       columns);
  std::vector<sparse_vec> out;
  for (const auto& st : tr.steps) out.push_back(st.Y);
  return out;
}

}  // namespace specials
