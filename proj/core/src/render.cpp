#include "specials/render.hpp"

#include <algorithm>
#include <sstream>

#include "specials/named.hpp"

namespace specials {

namespace {

std::string cell_text(const translation_quiver& Q, int id,
                      const std::optional<count_vector>& values) {
  if (id == Q.R) return "R";
  if (values) return std::to_string((*values)[id]);
  if (id == Q.omega) return "w";
  return ".";
}

}  // namespace

std::string ascii_quiver(const translation_quiver& Q,
                         const std::optional<count_vector>& values) {
  std::ostringstream os;
  if (Q.cyclic()) {
    for (int j = 0; j < Q.nvert; ++j) {
      os << vertex_label(Q, j);
      if (values) os << " = " << (*values)[j];
      os << "  -> S" << (j + 1) % Q.nvert << ", S"
         << static_cast<long long>((j + Q.group.a()) % Q.nvert) << "\n";
    }
    return os.str();
  }

  const auto& d = Q.diag;
  int nrows = *std::max_element(d.row.begin(), d.row.end()) + 1;
  int ncols = static_cast<int>(2 * Q.period);
  const int w = 4;
  std::vector<std::string> grid(nrows, std::string(static_cast<std::size_t>(ncols) * w, ' '));
  for (long long t = 0; t < Q.period; ++t) {
    for (int v = 0; v < d.size(); ++v) {
      int id = Q.vid(t, v);
      int col = static_cast<int>(2 * t) + d.parity[v];
      std::string s = cell_text(Q, id, values);
      if (s.size() > static_cast<std::size_t>(w - 1)) s.resize(w - 1);
      grid[d.row[v]].replace(static_cast<std::size_t>(col) * w, s.size(), s);
    }
  }
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string quiver_dot(const translation_quiver& Q) {
  std::ostringstream os;
  os << "digraph ar {\n  rankdir=LR;\n";
  for (int v = 0; v < Q.nvert; ++v) {
    os << "  v" << v << " [label=\"" << vertex_label(Q, v) << "\"";
    if (v == Q.R) os << " shape=doublecircle";
    os << "];\n";
  }
  for (int v = 0; v < Q.nvert; ++v)
    for (auto [u, m] : Q.out_arrows[v]) {
      os << "  v" << v << " -> v" << u;
      if (m > 1) os << " [label=\"" << m << "\"]";
      os << ";\n";
    }
  for (int v = 0; v < Q.nvert; ++v)
    os << "  v" << v << " -> v" << Q.tau_of[v] << " [style=dotted color=gray];\n";
  os << "}\n";
  return os.str();
}

}  // namespace specials
