#include "specials/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <ostream>
#include <thread>

#include "specials/fixtures.hpp"
#include "specials/named.hpp"
#include "specials/render.hpp"

namespace specials {

namespace {

hj_data hj_from_arg(const std::string& frac) {
  auto slash = frac.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("expected r/a, e.g. 23/18");
  long long r = std::stoll(frac.substr(0, slash));
  long long a = std::stoll(frac.substr(slash + 1));
  return hj_expand(r, a);
}

int run_batch(const std::string& fam_letter, long long max_p, const std::string& out_path,
              std::ostream& err) {
  family fam;
  switch (fam_letter.empty() ? '?' : fam_letter[0]) {
    case 'A': fam = family::A; break;
    case 'D': fam = family::D; break;
    case 'T': fam = family::T; break;
    case 'O': fam = family::O; break;
    case 'I': fam = family::I; break;
    default: throw std::invalid_argument("batch: --family must be A, D, T, O or I");
  }
  auto groups = sweep_family(fam, max_p);
  std::vector<std::string> lines(groups.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= groups.size()) return;
      auto rep = classify(groups[i]);
      if (!rep.pass()) failed = true;
      lines[i] = report_json(rep).dump();
    }
  };
  unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < nthreads && i + 1 < groups.size(); ++i)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("batch: cannot open " + out_path);
  for (const auto& line : lines) out << line << "\n";
  if (failed) {
    err << "batch: at least one group failed its cross-checks\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"AR quivers and special CM modules of quotient surface singularities"};
  app.require_subcommand(1);

  std::string frac, group_spec, vertex, format = "json", fam_letter, out_path;
  long long steps = 12, max_p = 0;
  bool as_json = false;

  auto* hj_cmd = app.add_subcommand("hj", "HJ continued fraction of r/a");
  hj_cmd->add_option("fraction", frac, "r/a")->required();

  auto* dg = app.add_subcommand("dualgraph", "dual graph of the minimal resolution");
  dg->add_option("group", group_spec)->required();
  dg->add_option("--format", format, "json|dot");

  auto* fc = app.add_subcommand("fundcycle", "fundamental cycle of the dual graph");
  fc->add_option("group", group_spec)->required();

  auto* qv = app.add_subcommand("quiver", "AR quiver of the invariant ring");
  qv->add_option("group", group_spec)->required();
  qv->add_option("--format", format, "json|dot|ascii");

  auto* ex = app.add_subcommand("ext1", "Ext^1(-,R) profile over the AR quiver");
  ex->add_option("group", group_spec)->required();
  ex->add_flag("--json", as_json);

  auto* sy = app.add_subcommand("syzygy", "syzygy of a vertex");
  sy->add_option("group", group_spec)->required();
  sy->add_option("vertex", vertex, "name (V4, W+, S3, ...) or id")->required();

  auto* fe = app.add_subcommand("freeexp", "free expansion from tau^- R");
  fe->add_option("group", group_spec)->required();
  fe->add_option("--steps", steps, "number of layers");

  auto* cl = app.add_subcommand("classify", "classify the special CM modules");
  cl->add_option("group", group_spec)->required();
  cl->add_flag("--json", as_json);

  auto* ba = app.add_subcommand("batch", "classify a whole family into a jsonl db");
  ba->add_option("--family", fam_letter)->required();
  ba->add_option("--max-n,--max-r,--max-m", max_p, "largest first parameter")->required();
  ba->add_option("--out", out_path)->required();

  auto* vf = app.add_subcommand("verify-fixtures", "replay the golden fixture corpus");
  std::string fixtures_dir;
  vf->add_option("--dir", fixtures_dir, "fixture directory override");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (hj_cmd->parsed()) {
      out << hj_json(hj_from_arg(frac)).dump() << "\n";
      return 0;
    }
    if (dg->parsed() || fc->parsed()) {
      auto g = parse_group(group_spec);
      auto G = dual_graph(g);
      if (dg->parsed() && format == "dot")
        out << dual_graph_dot(G);
      else
        out << graph_json(G, fundamental_cycle(G)).dump() << "\n";
      return 0;
    }
    if (qv->parsed()) {
      auto Q = build_ar_quiver(parse_group(group_spec));
      if (format == "dot") {
        out << quiver_dot(Q);
      } else if (format == "ascii") {
        out << ascii_quiver(Q);
      } else {
        auto dual = compute_dual(Q);
        out << quiver_json(Q, &dual).dump() << "\n";
      }
      return 0;
    }
    if (ex->parsed()) {
      auto Q = build_ar_quiver(parse_group(group_spec));
      auto profile = ext1_profile(Q);
      if (as_json)
        out << profile_json(Q, profile).dump() << "\n";
      else
        out << ascii_quiver(Q, profile);
      return 0;
    }
    if (sy->parsed()) {
      auto Q = build_ar_quiver(parse_group(group_spec));
      int v = resolve_vertex(Q, vertex);
      auto omega = syzygy(Q, v);
      json j;
      j["group"] = format_group(Q.group);
      j["vertex"] = vertex_label(Q, v);
      j["syzygy"] = multiset_json(Q, omega);
      j["free_cover_rank"] = free_cover_rank(Q, v);
      out << j.dump() << "\n";
      return 0;
    }
    if (fe->parsed()) {
      auto Q = build_ar_quiver(parse_group(group_spec));
      auto layers = free_expansion(Q, Q.tau_inv_of[Q.R], steps);
      json j;
      j["group"] = format_group(Q.group);
      j["steps"] = json::array();
      for (const auto& layer : layers) {
        json l = json::object();
        for (auto [i, c] : layer) l[std::to_string(i)] = c;
        j["steps"].push_back(l);
      }
      out << j.dump() << "\n";
      return 0;
    }
    if (cl->parsed()) {
      auto rep = classify(parse_group(group_spec));
      if (as_json) {
        out << report_json(rep).dump() << "\n";
      } else {
        auto Q = build_ar_quiver(rep.group);
        out << "group " << format_group(rep.group) << ": " << rep.vertex_count
            << " vertices, " << rep.specials_counting.size() << " specials\n";
        out << "specials:";
        for (int v : rep.specials_counting) out << ' ' << vertex_label(Q, v);
        out << "\nchecks: oracle " << (rep.oracle_equivalence.pass ? "ok" : "FAIL")
            << ", ranks-vs-Zf " << (rep.wunram.pass ? "ok" : "FAIL")
            << ", omega-duality " << (rep.omega_duality.pass ? "ok" : "FAIL") << "\n";
        for (const auto* c : {&rep.oracle_equivalence, &rep.wunram, &rep.omega_duality})
          if (!c->pass) out << "  " << c->diagnostic << "\n";
      }
      return rep.pass() ? 0 : 2;
    }
    if (ba->parsed()) return run_batch(fam_letter, max_p, out_path, err);
    if (vf->parsed()) {
      auto dir = fixtures_dir.empty() ? default_fixtures_dir() : fixtures_dir;
      auto fixtures = load_fixtures(dir);
      bool all_ok = true;
      for (const auto& f : fixtures) {
        auto res = verify_fixture(f);
        out << (res.pass ? "PASS " : "FAIL ") << f.id;
        if (!res.pass) {
          out << ": " << res.diff;
          all_ok = false;
        }
        out << "\n";
      }
      out << (all_ok ? "all fixtures pass" : "fixture failures above") << "\n";
      return all_ok ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "unknown command\n";
  return 1;
}

}  // namespace specials
