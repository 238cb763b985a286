#pragma once

#include <optional>
#include <string>

#include "specials/ladder.hpp"
#include "specials/quiver.hpp"

namespace specials {

// Slanted text layout in the style of the usual drawings: rows are the
// diagram rows, every vertex sits at picture column 2*column + parity.
// When `values` is given each cell shows the count at that vertex instead
// of its label; R and omega are always marked. Type A renders as a list.
std::string ascii_quiver(const translation_quiver& Q,
                         const std::optional<count_vector>& values = std::nullopt);

std::string quiver_dot(const translation_quiver& Q);

}  // namespace specials
