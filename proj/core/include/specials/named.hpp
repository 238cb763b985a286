#pragma once

#include <map>
#include <string>

#include "specials/quiver.hpp"

namespace specials {

// Distinguished vertices by name.
//   A:     S0..S{r-1} (S0 = R)
//   D:     V1..V{q-1} on the diagonal from R, W+ / W- terminating it,
//          W1..W{n-q} on the top zigzag
//   T:     A1, A2 (top outer arm), B1, B2 (bottom outer arm), C1, C2 (R's arm)
//   O:     D1, D2, D3, E1, E2, F, N
//   I:     A1..A4, B1, B2, C, M
// plus "R" and "omega" for every family. Positions are measured as column
// offsets from R and folded into the finite quiver where necessary.
std::map<std::string, int> named_vertices(const translation_quiver& Q);

// First name attached to the vertex, or its id as text.
std::string vertex_label(const translation_quiver& Q, int id);

// Accepts a name from named_vertices or a bare vertex id.
int resolve_vertex(const translation_quiver& Q, const std::string& token);

}  // namespace specials
