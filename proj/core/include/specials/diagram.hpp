#pragma once

#include <string>
#include <vector>

#include "specials/group.hpp"

namespace specials {

// Extended Dynkin diagram underlying the translation quiver, with the
// extra data the quotient construction needs: affine marks, the extending
// node where R sits, the wrap permutation (identity unless the family and
// parameters force a twist), and drawing coordinates (row, column parity)
// used by the ASCII renderer and the named-vertex tables.
struct diagram {
  std::vector<std::string> names;
  std::vector<long long> marks;
  std::vector<std::pair<int, int>> edges;  // tree
  int extending = 0;                        // mark-1 node carrying R
  std::vector<int> wrap;                    // node permutation applied when a
                                            // column index wraps past m
  std::vector<int> row;
  std::vector<int> parity;                  // 0 = same column parity as R

  int size() const { return static_cast<int>(names.size()); }
  int node(const std::string& name) const;
  bool twisted() const;
  std::vector<int> wrap_inv() const;
};

// D: affine D_{q+2}; T/O/I: affine E6/E7/E8. Not defined for family A
// (type A uses the cyclic model directly).
diagram diagram_for(const group_params& g);

// Number of columns of the quotient quiver: n-q for D, m for T/O/I.
long long quiver_period(const group_params& g);

// 2*mark(v) == sum of neighbour marks, extending node has mark 1.
bool affine_marks_ok(const diagram& d);

}  // namespace specials
