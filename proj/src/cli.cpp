#include "geodex/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "geodex/autgroup.hpp"
#include "geodex/classify.hpp"
#include "geodex/families.hpp"
#include "geodex/graph6.hpp"
#include "geodex/report.hpp"
#include "geodex/selftest.hpp"

namespace geodex {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct RunOptions {
  bool json = false;
  bool tsv = false;
  bool oracle = false;
  int cap = -1;  // -1: GEODEX_CAP or the built-in default
  bool early_exit = true;
};

struct FamilyEntry {
  std::size_t arity;
  std::function<Graph(const std::vector<int>&, int cap)> build;
};

const std::map<std::string, FamilyEntry>& family_registry() {
  static const std::map<std::string, FamilyEntry> reg = {
      {"complete", {1, [](const std::vector<int>& a, int) { return complete(a[0]); }}},
      {"complete_bipartite",
       {1, [](const std::vector<int>& a, int) { return complete_bipartite(a[0]); }}},
      {"crown", {1, [](const std::vector<int>& a, int) { return crown(a[0]); }}},
      {"complete_multipartite",
       {2, [](const std::vector<int>& a, int) { return complete_multipartite(a[0], a[1]); }}},
      {"cycle", {1, [](const std::vector<int>& a, int) { return cycle(a[0]); }}},
      {"hamming", {2, [](const std::vector<int>& a, int) { return hamming(a[0], a[1]); }}},
      {"folded_cube", {1, [](const std::vector<int>& a, int) { return folded_cube(a[0]); }}},
      {"johnson", {2, [](const std::vector<int>& a, int c) { return johnson(a[0], a[1], c); }}},
      {"odd", {1, [](const std::vector<int>& a, int c) { return odd_graph(a[0], c); }}},
      {"odd_graph", {1, [](const std::vector<int>& a, int c) { return odd_graph(a[0], c); }}},
      {"grassmann",
       {3, [](const std::vector<int>& a, int c) { return grassmann(a[0], a[1], a[2], c); }}},
      {"doubled_grassmann",
       {2, [](const std::vector<int>& a, int c) { return doubled_grassmann(a[0], a[1], c); }}},
      {"pg2", {1, [](const std::vector<int>& a, int) { return pg2_incidence(a[0]); }}},
      {"pg2_incidence", {1, [](const std::vector<int>& a, int) { return pg2_incidence(a[0]); }}},
      {"ag2", {1, [](const std::vector<int>& a, int) { return ag2_minus_parallel(a[0]); }}},
      {"ag2_minus_parallel",
       {1, [](const std::vector<int>& a, int) { return ag2_minus_parallel(a[0]); }}},
      {"paley", {1, [](const std::vector<int>& a, int) { return paley(a[0]); }}},
      {"ag2_cayley", {1, [](const std::vector<int>& a, int) { return ag2_cayley(a[0]); }}},
      {"g22_6", {0, [](const std::vector<int>&, int) { return g22_6(); }}},
      {"g64_8", {0, [](const std::vector<int>&, int) { return g64_8(); }}},
  };
  return reg;
}

std::string family_id(const std::string& name, const std::vector<int>& params) {
  std::string id = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i)
    id += (i ? "," : "") + std::to_string(params[i]);
  return id + ")";
}

std::string known_family_names() {
  std::string s;
  for (const auto& [name, entry] : family_registry()) {
    (void)entry;
    if (!s.empty()) s += ", ";
    s += name;
  }
  return s;
}

// classify + oracle cross-checks; returns 1 on oracle disagreement, else 0
int build_document(const Graph& g, const std::string& id, const std::string& provenance,
                   const RunOptions& opts, std::vector<std::string> warnings,
                   double construction_ms, ReportDocument& doc) {
  auto t1 = Clock::now();
  AutResult aut = automorphism_group(g);
  double aut_ms = ms_since(t1);

  auto t2 = Clock::now();
  ClassifyOptions copts;
  copts.early_exit = opts.early_exit;
  ClassificationReport rep = classify_with_group(g, id, aut.group, copts);
  double classify_ms = ms_since(t2);

  int rc = 0;
  if (opts.oracle) {
    // transitive on i-geodesics for exactly i <= geodesic_level
    for (int i = 1; i <= rep.geodesic_level + 1 && i <= rep.diameter; ++i) {
      long long cnt = 0;
      try {
        cnt = brute_force_geodesic_orbit_count(g, aut.group, i);
      } catch (const std::runtime_error& e) {
        warnings.push_back("oracle skipped at i=" + std::to_string(i) + ": " + e.what());
        break;
      }
      bool want_one = i <= rep.geodesic_level;
      if (want_one != (cnt == 1)) {
        std::cerr << "oracle mismatch for " << id << ": " << cnt << " orbit(s) on " << i
                  << "-geodesics but geodesic level is " << rep.geodesic_level << "\n";
        rc = 1;
      }
    }
  }
  if (rep.arc.cap_reached)
    warnings.push_back("arc transitivity verified through level 7 only; reported level is a cap");

  doc.source_id = id;
  doc.provenance = provenance;
  doc.report = std::move(rep);
  doc.timings = {construction_ms, aut_ms, classify_ms};
  doc.warnings = std::move(warnings);
  return rc;
}

void emit_human(const ReportDocument& doc, std::ostream& out) {
  const ClassificationReport& r = doc.report;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "id:              " << doc.source_id << "\n";
  out << "provenance:      " << doc.provenance << "\n";
  out << "vertices:        " << r.n << "\n";
  out << "valency:         " << (r.valency < 0 ? std::string("-") : std::to_string(r.valency))
      << "\n";
  out << "array:           " << (r.array ? r.array->to_string() : std::string("not distance-regular"))
      << "\n";
  out << "diameter:        " << r.diameter << "\n";
  out << "girth:           " << (r.girth ? std::to_string(*r.girth) : std::string("infinity"))
      << "\n";
  out << "arc level:       "
      << (r.arc.unbounded ? std::string("unbounded") : std::to_string(r.arc.level))
      << (r.arc.cap_reached ? " (cap)" : "") << "\n";
  out << "geodesic level:  " << r.geodesic_level << "\n";
  out << "vertex trans.:   " << yn(r.vt) << "\n";
  out << "distance trans.: " << yn(r.dt) << "\n";
  out << "geodesic trans.: " << yn(r.gt) << "\n";
  out << "|Aut|:           " << r.aut_order.str() << "\n";
  out << "|Aut_u|:         " << r.vertex_stabilizer_order.str() << "\n";
  std::ostringstream t;
  t.setf(std::ios::fixed);
  t.precision(2);
  t << "construction " << doc.timings.construction_ms << ", aut " << doc.timings.aut_ms
    << ", classify " << doc.timings.classify_ms;
  out << "timings (ms):    " << t.str() << "\n";
  for (const auto& w : doc.warnings) out << "warning:         " << w << "\n";
}

void emit(const std::vector<ReportDocument>& docs, const RunOptions& opts, std::ostream& out) {
  if (opts.json) {
    for (const auto& d : docs) out << to_json(d) << "\n";
    return;
  }
  if (opts.tsv) {
    out << tsv_header() << "\n";
    for (const auto& d : docs) out << to_tsv_row(d) << "\n";
    return;
  }
  bool first = true;
  for (const auto& d : docs) {
    if (!first) out << "\n";
    first = false;
    emit_human(d, out);
  }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const fs::path& p, const std::string& content) {
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, p);
}

enum class FileFormat { Graph6, Matrix };

std::optional<FileFormat> format_from_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  if (ext == ".g6") return FileFormat::Graph6;
  if (ext == ".txt" || ext == ".mat" || ext == ".am" || ext == ".adj") return FileFormat::Matrix;
  return std::nullopt;
}

struct NamedGraph {
  std::string id;
  Graph graph;
  double construction_ms = 0;
};

// .g6 files hold one graph per non-empty line; matrix files hold one graph
std::vector<NamedGraph> load_graph_file(const fs::path& path, FileFormat fmt) {
  std::vector<NamedGraph> out;
  auto t0 = Clock::now();
  std::string text = read_file(path);
  double read_ms = ms_since(t0);
  std::string stem = path.stem().string();
  if (fmt == FileFormat::Matrix) {
    out.push_back({stem, parse_adjacency_matrix(text), ms_since(t0)});
    return out;
  }
  std::vector<std::string> lines;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur)) {
    while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' ')) cur.pop_back();
    if (!cur.empty()) lines.push_back(cur);
  }
  if (lines.empty()) throw std::runtime_error(path.string() + ": no graph6 records");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto tl = Clock::now();
    Graph g = parse_graph6(lines[i]);
    std::string id = lines.size() == 1 ? stem : stem + "#" + std::to_string(i + 1);
    out.push_back({std::move(id), std::move(g), ms_since(tl)});
  }
  out.front().construction_ms += read_ms;  // file read attributed to the first record
  return out;
}

int cmd_family(const std::string& name, const std::vector<int>& params, const RunOptions& opts) {
  auto it = family_registry().find(name);
  if (it == family_registry().end()) {
    std::cerr << "unknown family '" << name << "'; known: " << known_family_names() << "\n";
    return 2;
  }
  if (params.size() != it->second.arity) {
    std::cerr << "family '" << name << "' takes " << it->second.arity << " parameter(s), got "
              << params.size() << "\n";
    return 2;
  }
  std::vector<std::string> warnings;
  if ((name == "ag2" || name == "ag2_minus_parallel") && !params.empty() && params[0] == 2)
    warnings.push_back("ag2(2) is an 8-cycle; some references list C_4 for this case");
  Graph g;
  auto t0 = Clock::now();
  try {
    g = it->second.build(params, opts.cap);
  } catch (const std::exception& e) {
    std::cerr << "cannot construct " << family_id(name, params) << ": " << e.what() << "\n";
    return 2;
  }
  double cms = ms_since(t0);
  ReportDocument doc;
  int rc = build_document(g, family_id(name, params), "family", opts, std::move(warnings), cms, doc);
  emit({doc}, opts, std::cout);
  return rc;
}

int cmd_file(const std::string& path_str, const std::string& format_flag, const RunOptions& opts) {
  fs::path path(path_str);
  FileFormat fmt;
  if (format_flag == "graph6") {
    fmt = FileFormat::Graph6;
  } else if (format_flag == "matrix") {
    fmt = FileFormat::Matrix;
  } else if (format_flag.empty()) {
    auto guess = format_from_extension(path);
    if (!guess) {
      std::cerr << "cannot infer format of " << path_str << "; pass --format graph6|matrix\n";
      return 2;
    }
    fmt = *guess;
  } else {
    std::cerr << "unknown format '" << format_flag << "'\n";
    return 2;
  }
  std::vector<NamedGraph> graphs;
  try {
    graphs = load_graph_file(path, fmt);
  } catch (const MatrixParseError& e) {
    std::cerr << path_str << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << path_str << ": " << e.what() << "\n";
    return 2;
  }
  int rc = 0;
  std::vector<ReportDocument> docs;
  for (auto& ng : graphs) {
    ReportDocument doc;
    rc = std::max(rc, build_document(ng.graph, ng.id, "external", opts, {}, ng.construction_ms, doc));
    docs.push_back(std::move(doc));
  }
  emit(docs, opts, std::cout);
  return rc;
}

int cmd_batch(const std::string& dir_str, const std::string& out_str, const RunOptions& opts) {
  fs::path dir(dir_str);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << dir_str << ": not a directory\n";
    return 2;
  }
  fs::path outdir = out_str.empty() ? dir / "reports" : fs::path(out_str);
  fs::create_directories(outdir, ec);
  if (ec) {
    std::cerr << "cannot create " << outdir.string() << ": " << ec.message() << "\n";
    return 2;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  int rc = 0;
  bool input_error = false;
  std::vector<ReportDocument> docs;
  for (const auto& path : files) {
    auto fmt = format_from_extension(path);
    if (!fmt) continue;  // not a graph file
    std::vector<NamedGraph> graphs;
    try {
      graphs = load_graph_file(path, *fmt);
    } catch (const std::exception& e) {
      std::cerr << path.string() << ": " << e.what() << "\n";
      input_error = true;
      continue;
    }
    for (auto& ng : graphs) {
      ReportDocument doc;
      try {
        rc = std::max(
            rc, build_document(ng.graph, ng.id, "external", opts, {}, ng.construction_ms, doc));
      } catch (const std::exception& e) {
        std::cerr << ng.id << ": " << e.what() << "\n";
        input_error = true;
        continue;
      }
      write_file_atomic(outdir / (ng.id + ".json"), to_json(doc) + "\n");
      docs.push_back(std::move(doc));
    }
  }
  std::cout << tsv_header() << "\n";
  for (const auto& d : docs) std::cout << to_tsv_row(d) << "\n";
  if (input_error) return 2;
  return rc;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"construct, ingest and classify highly symmetric graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json etc. appear after subcommand arguments

  RunOptions opts;
  bool no_early_exit = false;
  app.add_flag("--json", opts.json, "emit the JSON report");
  app.add_flag("--tsv", opts.tsv, "emit the TSV summary row")->excludes("--json");
  app.add_flag("--oracle", opts.oracle, "cross-check levels against brute-force orbit counts");
  app.add_option("--cap", opts.cap, "vertex cap for enumerating families")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-early-exit", no_early_exit, "disable the b_i <= 1 geodesic shortcut");

  std::string fam_name;
  std::vector<int> fam_params;
  auto* fam = app.add_subcommand("family", "construct a named family member and classify it");
  fam->add_option("name", fam_name, "family name")->required();
  fam->add_option("params", fam_params, "integer parameters");

  std::string file_path, file_format;
  auto* fil = app.add_subcommand("file", "classify a graph file");
  fil->add_option("path", file_path, "graph6 or adjacency-matrix file")->required();
  fil->add_option("--format", file_format, "graph6|matrix (default: by extension)");

  std::string batch_dir, batch_out;
  auto* bat = app.add_subcommand("batch", "classify every graph file in a directory");
  bat->add_option("dir", batch_dir, "input directory")->required();
  bat->add_option("--out", batch_out, "report directory (default: <dir>/reports)");

  auto* st = app.add_subcommand("selftest", "classify the built-in golden suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opts.early_exit = !no_early_exit;

  try {
    if (fam->parsed()) return cmd_family(fam_name, fam_params, opts);
    if (fil->parsed()) return cmd_file(file_path, file_format, opts);
    if (bat->parsed()) return cmd_batch(batch_dir, batch_out, opts);
    if (st->parsed()) return run_selftest(std::cout) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable; require_subcommand guarantees one branch
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("geodex");
  for (const auto& a : args) storage.push_back(a);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace geodex
