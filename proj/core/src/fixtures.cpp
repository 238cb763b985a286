#include "specials/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "specials/named.hpp"

namespace specials {

namespace {

int payload_vertex(const translation_quiver& Q, const json& e) {
  return Q.vid(e.at("column").get<long long>(),
               Q.diag.node(e.at("node").get<std::string>()));
}

fixture_result fail(const fixture& f, const std::string& diff) {
  return {f.id, false, diff};
}

fixture_result check_specials(const fixture& f) {
  auto g = parse_group(f.group);
  auto Q = build_ar_quiver(g);
  std::set<int> expected{Q.R};
  if (f.payload.contains("s_indices")) {
    for (const auto& j : f.payload.at("s_indices"))
      expected.insert(static_cast<int>(j.get<long long>() % g.r()));
  } else {
    for (const auto& e : f.payload.at("specials"))
      expected.insert(payload_vertex(Q, e));
  }
  auto counting = specials_by_counting(Q);
  std::set<int> actual(counting.begin(), counting.end());
  std::set<int> closed;
  for (const auto& [name, id] : specials_closed_form(Q)) closed.insert(id);
  if (actual != expected || closed != expected) {
    std::ostringstream os;
    os << "expected {";
    for (int v : expected) os << vertex_label(Q, v) << ' ';
    os << "} counting {";
    for (int v : actual) os << vertex_label(Q, v) << ' ';
    os << "} closed {";
    for (int v : closed) os << vertex_label(Q, v) << ' ';
    os << "}";
    return fail(f, os.str());
  }
  return {f.id, true, ""};
}

fixture_result check_ext1(const fixture& f) {
  auto Q = build_ar_quiver(parse_group(f.group));
  auto profile = ext1_profile(Q);
  std::vector<bool> seen(Q.nvert, false);
  for (const auto& e : f.payload.at("entries")) {
    int v = payload_vertex(Q, e);
    long long want = e.at("value").get<long long>();
    seen[v] = true;
    if (profile[v] != want) {
      std::ostringstream os;
      os << "at " << vertex_label(Q, v) << ": expected " << want << ", got "
         << profile[v];
      return fail(f, os.str());
    }
  }
  for (int v = 0; v < Q.nvert; ++v)
    if (!seen[v]) return fail(f, "table does not cover vertex " + vertex_label(Q, v));
  return {f.id, true, ""};
}

fixture_result check_syzygy(const fixture& f) {
  auto Q = build_ar_quiver(parse_group(f.group));
  sparse_vec start;
  long long start_rank = 0;
  for (const auto& name : f.payload.at("start")) {
    int v = resolve_vertex(Q, name.get<std::string>());
    start.push_back({v, 1});
    start_rank += Q.rank_of[v];
  }
  std::sort(start.begin(), start.end());
  auto omega = syzygy_of(Q, start);
  std::map<int, long long> expected;
  for (const auto& e : f.payload.at("omega"))
    expected[payload_vertex(Q, e)] += e.at("mult").get<long long>();
  if (omega != expected) {
    std::ostringstream os;
    os << "syzygy {";
    for (auto [v, c] : omega) os << vertex_label(Q, v) << "x" << c << ' ';
    os << "} expected {";
    for (auto [v, c] : expected) os << vertex_label(Q, v) << "x" << c << ' ';
    os << "}";
    return fail(f, os.str());
  }
  long long rank = start_rank;
  for (auto [v, c] : omega) rank += c * Q.rank_of[v];
  long long want_rank = f.payload.at("free_cover_rank").get<long long>();
  if (rank != want_rank) {
    std::ostringstream os;
    os << "free cover rank " << rank << ", expected " << want_rank;
    return fail(f, os.str());
  }
  return {f.id, true, ""};
}

// Free-expansion fixtures always start at tau^- R; entry positions are
// derived from the step index (the wave at step n sits at picture column
// n + 2, column 0 being R's).
fixture_result check_free_expansion(const fixture& f, bool window) {
  auto Q = build_ar_quiver(parse_group(f.group));
  int from = Q.tau_inv_of[Q.R];

  long long tshift = 0, base = 0;
  if (window) {
    base = f.payload.at("base").get<long long>();
    tshift = base * (f.payload.at("t").get<long long>() - 2);
  }
  long long max_step = 0;
  for (const auto& e : f.payload.at("entries")) {
    long long n = window ? tshift + e.at("offset").get<long long>()
                         : e.at("step").get<long long>();
    max_step = std::max(max_step, n);
  }
  auto Y = free_expansion(Q, from, max_step + 1);
  for (const auto& e : f.payload.at("entries")) {
    long long n = window ? tshift + e.at("offset").get<long long>()
                         : e.at("step").get<long long>();
    int node = Q.diag.node(e.at("node").get<std::string>());
    long long pic = n + 2;
    if ((pic - Q.diag.parity[node]) % 2 != 0)
      return fail(f, "entry parity mismatch at step " + std::to_string(n));
    int v = Q.vid((pic - Q.diag.parity[node]) / 2, node);
    long long got = sparse_at(Y[static_cast<std::size_t>(n)], v);
    long long want = e.at("value").get<long long>();
    if (got != want) {
      std::ostringstream os;
      os << "step " << n << " node " << e.at("node").get<std::string>()
         << ": expected " << want << ", got " << got;
      return fail(f, os.str());
    }
  }
  return {f.id, true, ""};
}

fixture_result check_quiver(const fixture& f) {
  auto Q = build_ar_quiver(parse_group(f.group));
  std::map<std::string, int> ids;
  for (const auto& [label, rends] : f.payload.at("renditions").items()) {
    int id = -1;
    for (const auto& e : rends) {
      int v = payload_vertex(Q, e);
      if (id == -1) id = v;
      if (id != v)
        return fail(f, "renditions of " + label + " fold to different vertices");
    }
    ids[label] = id;
  }
  std::set<int> distinct;
  for (const auto& [label, id] : ids) distinct.insert(id);
  if (static_cast<int>(distinct.size()) != Q.nvert ||
      static_cast<int>(ids.size()) != Q.nvert)
    return fail(f, "labels do not biject with quiver vertices");
  if (ids.at(f.payload.at("R").get<std::string>()) != Q.R)
    return fail(f, "R label does not land on R");
  for (const auto& a : f.payload.at("arrows")) {
    int from = ids.at(a.at(0).get<std::string>());
    int to = ids.at(a.at(1).get<std::string>());
    if (Q.mult(from, to) < 1) {
      std::ostringstream os;
      os << "missing arrow " << a.at(0).get<std::string>() << " -> "
         << a.at(1).get<std::string>();
      return fail(f, os.str());
    }
  }
  for (const auto& [from, to] : f.payload.at("tau").items())
    if (Q.tau_of[ids.at(from)] != ids.at(to.get<std::string>()))
      return fail(f, "tau mismatch at " + from);
  return {f.id, true, ""};
}

fixture_result check_zf(const fixture& f) {
  resolution_graph G;
  if (!f.group.empty()) {
    G = dual_graph(parse_group(f.group));
  } else {
    for (const auto& s : f.payload.at("graph").at("self_int"))
      G.self_int.push_back(s.get<long long>());
    for (const auto& e : f.payload.at("graph").at("edges"))
      G.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    G.layout = "custom";
  }
  auto zf = fundamental_cycle(G);
  std::vector<long long> want;
  for (const auto& c : f.payload.at("zf")) want.push_back(c.get<long long>());
  if (zf.coeffs != want) {
    std::ostringstream os;
    os << "Z_f (";
    for (auto c : zf.coeffs) os << c << ' ';
    os << ") expected (";
    for (auto c : want) os << c << ' ';
    os << ")";
    return fail(f, os.str());
  }
  return {f.id, true, ""};
}

}  // namespace

std::string default_fixtures_dir() {
  if (const char* env = std::getenv("SPECIALS_FIXTURES_DIR"); env && *env)
    return env;
#ifdef SPECIALS_DEFAULT_FIXTURES_DIR
  return SPECIALS_DEFAULT_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

fixture parse_fixture(const json& j) {
  fixture f;
  f.id = j.at("id").get<std::string>();
  f.group = j.value("group", std::string());
  f.kind = j.at("kind").get<std::string>();
  f.payload = j.at("payload");
  f.ref = j.value("ref", std::string());
  if (!f.group.empty()) parse_group(f.group);  // validate early
  return f;
}

std::vector<fixture> load_fixtures(const std::string& dir) {
  std::vector<fixture> out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open fixture file " + p.string());
    json j = json::parse(in);
    if (j.is_array())
      for (const auto& item : j) out.push_back(parse_fixture(item));
    else
      out.push_back(parse_fixture(j));
  }
  return out;
}

fixture_result verify_fixture(const fixture& f) {
  try {
    if (f.kind == "specials_set") return check_specials(f);
    if (f.kind == "ext1_table") return check_ext1(f);
    if (f.kind == "syzygy_trace") return check_syzygy(f);
    if (f.kind == "free_expansion") return check_free_expansion(f, false);
    if (f.kind == "free_expansion_window") return check_free_expansion(f, true);
    if (f.kind == "quiver") return check_quiver(f);
    if (f.kind == "zf") return check_zf(f);
    return {f.id, false, "unknown fixture kind '" + f.kind + "'"};
  } catch (const std::exception& e) {
    return {f.id, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace specials
