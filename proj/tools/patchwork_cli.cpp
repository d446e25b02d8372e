// patchwork: command-line front end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "patchwork/all.hpp"

#ifndef PATCHWORK_DATA_DIR
#define PATCHWORK_DATA_DIR "data"
#endif

using namespace patchwork;

namespace {

/// Catalog key, "honeycomb" / "bow_tie" / "framed_chessboard" (needs the
/// degree), or a triangulation JSON file.
Triangulation resolve_triangulation(const std::string& name, int degree) {
  if (in_catalog(name)) return catalog(name);
  if (name == "honeycomb") return honeycomb(degree);
  if (name == "bow_tie") return bow_tie(degree);
  if (name == "framed_chessboard") return framed_chessboard(degree);
  if (std::filesystem::exists(name)) return triangulation_from_json(read_json_file(name));
  throw InputError("unknown triangulation '" + name + "'");
}

std::vector<std::string> default_search_triangulations(int d) {
  if (d == 6) return {"bat", "moth"};
  if (d == 7) return {"radiant", "split_radiant", "frayed_radiant", "honeycomb7"};
  return {"honeycomb"};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot write " + path);
  os << text;
}

int cmd_catalog() {
  std::cout << std::left << std::setw(16) << "name" << std::setw(8) << "degree" << std::setw(11) << "triangles"
            << std::setw(10) << "lifting" << "checksum\n";
  for (const auto& name : catalog_names()) {
    const Triangulation t = catalog(name);
    const bool ok = t.lifting() && verify_lifting(t).empty();
    std::cout << std::setw(16) << name << std::setw(8) << t.degree() << std::setw(11) << t.triangles().size()
              << std::setw(10) << (ok ? "valid" : "INVALID") << std::hex << checksum(t) << std::dec << '\n';
  }
  return 0;
}

int cmd_scheme(const std::string& file, bool as_json) {
  const auto in = patchwork_input_from_json(read_json_file(file));
  const Patchwork p(in.triangulation, in.signs);
  if (as_json) std::cout << evaluation_json(p).dump(2) << '\n';
  else std::cout << p.scheme().render() << '\n';
  return 0;
}

int cmd_render(const std::string& file, const std::string& out) {
  const auto in = patchwork_input_from_json(read_json_file(file));
  const Patchwork p(in.triangulation, in.signs);
  write_text(out, render_svg(p));
  std::cout << p.scheme().render() << " -> " << out << '\n';
  return 0;
}

int cmd_verify_liftings() {
  int bad = 0;
  for (const auto& name : catalog_names()) {
    const Triangulation t = catalog(name);
    if (!t.lifting()) {
      std::cout << name << ": no lifting\n";
      ++bad;
      continue;
    }
    const auto v = verify_lifting(t);
    std::cout << name << ": " << folding_conditions(t).size() << " conditions, " << v.size() << " violations\n";
    for (const auto& x : v) std::cout << "  " << format_violation(t, x) << '\n';
    bad += v.empty() ? 0 : 1;
  }
  return bad == 0 ? 0 : 1;
}

int cmd_verify_table(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open " + path);
  const auto rep = verify_support_table(read_support_table(is));
  for (const auto& r : rep.rows) {
    if (r.pass) continue;
    std::cout << "FAIL " << r.row.scheme << " on " << r.row.triangulation << " [" << r.row.signs << "]: "
              << (r.error.empty() ? "computed " + r.computed : r.error) << '\n';
  }
  std::cout << rep.passed << "/" << rep.rows.size() << " rows verified\n";
  return rep.ok() ? 0 : 1;
}

struct CensusArgs {
  int degree = 6;
  std::string triangulation = "bat";
  int jobs = 0;
  std::string out;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  std::string checkpoint;
  bool resume = false;
  bool quiet = false;
};

int cmd_census(const CensusArgs& a) {
  const Triangulation t = resolve_triangulation(a.triangulation, a.degree);
  if (t.degree() != a.degree)
    throw InputError("triangulation '" + a.triangulation + "' has degree " + std::to_string(t.degree()));
  Histogram h;
  if (a.sample > 0) {
    h = sample(t, a.triangulation, a.sample, a.seed, a.jobs);
  } else {
    ExhaustiveOptions opt;
    opt.workers = a.jobs;
    opt.checkpoint_path = a.checkpoint;
    opt.resume = a.resume;
    if (!a.quiet)
      opt.progress = [](std::uint64_t done, std::uint64_t total) {
        std::cerr << "\r" << done << "/" << total << std::flush;
        if (done == total) std::cerr << '\n';
      };
    h = exhaustive(t, a.triangulation, opt);
  }
  if (a.out.empty()) {
    std::cout << h.to_csv();
  } else {
    write_text(a.out, h.to_csv());
    write_text(a.out + ".json", h.to_json().dump(2) + "\n");
  }
  std::cerr << h.total << " classes, " << h.counts.size() << " schemes, mean loops " << std::fixed
            << std::setprecision(4) << h.mean_loops() << ", " << std::setprecision(1) << h.elapsed_seconds << " s\n";
  return 0;
}

struct SearchArgs {
  int degree = 6;
  std::string targets = "all";
  std::uint64_t budget = 10'000'000;
  std::string strategy = "family-seeded";
  std::string triangulations;
  std::uint64_t seed = 1;
  std::string out;
  std::string seeds_file;
};

int cmd_search(const SearchArgs& a) {
  std::vector<RealScheme> targets;
  if (a.targets == "all") {
    for (const auto& s : enumerate_schemes(a.degree))
      if (s.ovals() > 0 || s.pseudo_line()) targets.push_back(s);
  } else {
    for (const auto& s : split(a.targets, ';')) targets.push_back(parse_scheme(s));
  }
  const auto keys = a.triangulations.empty() ? default_search_triangulations(a.degree) : split(a.triangulations, ',');
  std::vector<std::pair<std::string, Triangulation>> ts;
  for (const auto& k : keys) ts.emplace_back(k, resolve_triangulation(k, a.degree));

  SearchOptions opt;
  opt.budget = a.budget;
  opt.strategy = parse_strategy(a.strategy);
  opt.seed = a.seed;
  std::string seeds = a.seeds_file;
  if (seeds.empty() && a.degree == 6) seeds = std::string(PATCHWORK_DATA_DIR) + "/table1.csv";
  if (!seeds.empty() && std::filesystem::exists(seeds)) {
    std::ifstream is(seeds);
    for (const auto& row : read_support_table(is)) opt.extra_seeds.push_back(parse_signs(a.degree, row.signs).mask());
  }
  const SearchResult r = search(targets, ts, opt);

  std::ostringstream csv;
  csv << "scheme,triangulation,signs,class_index\n";
  for (const auto& t : targets) {
    const auto& hit = r.hits.at(t.code());
    if (hit) csv << t.render() << ',' << hit->triangulation << ',' << format_signs(parse_signs(a.degree, hit->signs)) << ','
                 << hit->class_index << '\n';
  }
  if (a.out.empty()) std::cout << csv.str();
  else write_text(a.out, csv.str());
  for (const auto& m : r.missing()) std::cerr << "missing " << m.render() << '\n';
  std::cerr << r.found() << "/" << targets.size() << " found in " << r.evaluations << " evaluations\n";
  return r.complete ? 0 : 3;
}

int cmd_families(const std::string& name, int degree) {
  const auto names = name == "all" ? family_names() : std::vector<std::string>{name};
  int bad = 0;
  for (const auto& n : names) {
    const FamilySpec f = family(n, degree);
    const Patchwork p(f.triangulation, f.signs);
    const bool ok = p.scheme() == f.expected_scheme;
    std::cout << n << " d=" << degree << ": expected " << f.expected_scheme.render() << ", computed "
              << p.scheme().render() << (ok ? "  ok" : "  MISMATCH") << '\n';
    bad += ok ? 0 : 1;
  }
  return bad == 0 ? 0 : 1;
}

int cmd_export_poly(const std::string& file, const std::string& t) {
  const auto in = patchwork_input_from_json(read_json_file(file));
  const Polynomial f = export_polynomial(in.triangulation, in.signs);
  std::cout << (t.empty() ? f.to_string() : f.to_string(parse_rational(t))) << '\n';
  return 0;
}

int cmd_serve(const std::string& host, int port) {
  httplib::Server srv;
  const auto forward = [](const httplib::Request& req, httplib::Response& res) {
    const auto r = service::handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  srv.Get("/catalog", forward);
  srv.Post("/evaluate", forward);
  srv.Post("/flip", forward);
  srv.Post("/toggle", forward);
  srv.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
  if (!srv.bind_to_port(host, port)) throw Error("startup", "cannot bind " + host + ":" + std::to_string(port));
  std::cerr << "listening on http://" << host << ":" << port << '\n';
  srv.listen_after_bind();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial patchworking: T-curves from triangulations and sign distributions"};
  app.require_subcommand(1);

  app.add_subcommand("catalog", "List the shipped triangulations");

  std::string file, svg_out, t_value, table = std::string(PATCHWORK_DATA_DIR) + "/table1.csv";
  bool as_json = false;
  auto* scheme = app.add_subcommand("scheme", "Real scheme of a patchwork JSON file");
  scheme->add_option("file", file, "patchwork JSON")->required();
  scheme->add_flag("--json", as_json, "print the full evaluation");

  auto* render = app.add_subcommand("render", "Draw a patchwork as SVG");
  render->add_option("file", file, "patchwork JSON")->required();
  render->add_option("--svg", svg_out, "output file")->required();

  app.add_subcommand("verify-liftings", "Check the folding conditions of every catalog lifting");

  auto* vt = app.add_subcommand("verify-table", "Verify a support table (scheme,triangulation,signs)");
  vt->add_option("csv", table, "table CSV");

  CensusArgs ca;
  auto* census = app.add_subcommand("census", "Scheme histogram over canonical sign classes");
  census->add_option("--degree", ca.degree)->required();
  census->add_option("--triangulation", ca.triangulation, "catalog key, builder name or JSON file")->required();
  census->add_option("--jobs", ca.jobs, "worker threads (0: all cores)")->envname("PATCHWORK_JOBS");
  census->add_option("--out", ca.out, "CSV output; a JSON mirror is written to <out>.json");
  census->add_option("--sample", ca.sample, "sample this many classes instead of enumerating");
  census->add_option("--seed", ca.seed);
  census->add_option("--checkpoint", ca.checkpoint, "checkpoint file for exhaustive runs");
  census->add_flag("--resume", ca.resume, "continue from the checkpoint");
  census->add_flag("--quiet", ca.quiet);

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Find realizers of target schemes");
  search_cmd->add_option("--degree", sa.degree)->required();
  search_cmd->add_option("--targets", sa.targets, "'all' or ';'-separated schemes");
  search_cmd->add_option("--budget", sa.budget, "evaluation budget");
  search_cmd->add_option("--strategy", sa.strategy, "sequential | random | family-seeded");
  search_cmd->add_option("--triangulations", sa.triangulations, "comma-separated keys");
  search_cmd->add_option("--seed", sa.seed);
  search_cmd->add_option("--seeds-file", sa.seeds_file, "support-table CSV whose sign vectors seed the search");
  search_cmd->add_option("--out", sa.out, "realizer CSV");

  std::string fam = "all";
  int fam_degree = 8;
  auto* families = app.add_subcommand("families", "Check family members against their closed forms");
  families->add_option("--name", fam, "onion | special_harnack | nested_box | arrowheads_row | arrowheads_both | all");
  families->add_option("--degree", fam_degree)->required();

  auto* export_poly = app.add_subcommand("export-poly", "Emit the patchworked polynomial family");
  export_poly->add_option("file", file, "patchwork JSON")->required();
  export_poly->add_option("--t", t_value, "substitute t = p/q");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the local evaluation service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "catalog") return cmd_catalog();
    if (name == "scheme") return cmd_scheme(file, as_json);
    if (name == "render") return cmd_render(file, svg_out);
    if (name == "verify-liftings") return cmd_verify_liftings();
    if (name == "verify-table") return cmd_verify_table(table);
    if (name == "census") return cmd_census(ca);
    if (name == "search") return cmd_search(sa);
    if (name == "families") return cmd_families(fam, fam_degree);
    if (name == "export-poly") return cmd_export_poly(file, t_value);
    if (name == "serve") return cmd_serve(host, port);
  } catch (const Error& e) {
    std::cerr << nlohmann::json{{"error", e.kind()}, {"detail", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "internal"}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  }
  return 1;
}
