#pragma once

#include <string>
#include <vector>

#include "specials/json_io.hpp"

namespace specials {

// Golden data: every fixture names a group (or a raw graph), a kind and a
// payload; verification recomputes the payload from scratch and diffs.
//
// kinds and payload schemas:
//   specials_set          {"specials":[{"column","node"}...]} or {"s_indices":[...]}
//   ext1_table            {"entries":[{"column","node","value"}...]}  (complete)
//   syzygy_trace          {"start":[name...], "omega":[{"column","node","mult"}...],
//                          "free_cover_rank": k}
//   free_expansion        {"start":"name", "steps":[{"step","column","node","value"}...]}
//   free_expansion_window {"t":3, "base":12, "entries":[{"offset","node","value"}...]}
//                          (value asserted at ladder step base*(t-2)+offset)
//   quiver                {"renditions":{label:[{"column","node"}...]},
//                          "arrows":[[from,to]...], "tau":{label:label}, "R":label}
//   zf                    {"zf":[...]} or {"graph":{"self_int":[...],"edges":[[i,j]...]},
//                          "zf":[...]} for raw-graph fixtures (group = "")
struct fixture {
  std::string id;
  std::string group;
  std::string kind;
  json payload;
  std::string ref;
};

struct fixture_result {
  std::string id;
  bool pass = false;
  std::string diff;
};

// SPECIALS_FIXTURES_DIR env var if set, otherwise the directory baked in
// at configure time.
std::string default_fixtures_dir();

// Every *.json file in dir; a file may hold one fixture object or an array.
std::vector<fixture> load_fixtures(const std::string& dir);

fixture parse_fixture(const json& j);
fixture_result verify_fixture(const fixture& f);

}  // namespace specials
