// canvaslab command line: validate, color, critical, extract, scan, draw,
// replay. Exit codes: 0 success / positive verdict, 1 negative verdict or
// violations, 2 usage or format errors.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "canvaslab/canvas_io.hpp"
#include "canvaslab/critical.hpp"
#include "canvaslab/deficiency.hpp"
#include "canvaslab/draw.hpp"
#include "canvaslab/structure.hpp"
#include "canvaslab/verifier.hpp"
#include "json.hpp"

namespace {

using namespace canvaslab;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

NamedCanvas load_or_exit(const std::string& path) {
  try {
    return load_canvas_file(path);
  } catch (const ParseError& e) {
    std::cerr << path << ": parse error at byte " << e.byte_offset << ": " << e.what()
              << "\n";
    std::exit(kExitUsage);
  }
}

ColorCache* shared_cache() {
  static ColorCache cache;
  static bool init = false;
  if (!init) {
    init = true;
    if (const char* dir = std::getenv("CANVASLAB_CACHE_DIR")) cache.set_disk_dir(dir);
  }
  return &cache;
}

int cmd_validate(const std::string& path) {
  auto named = load_or_exit(path);
  const Canvas& t = named.canvas;
  auto emb = check_embedding(t.graph);
  if (!emb.ok) {
    for (const auto& v : emb.violations) std::cout << "embedding: " << v << "\n";
    return kExitFalse;
  }
  auto r = validate_canvas(t.graph, t.outer, t.lists);
  for (const auto& v : r.violations) {
    std::cout << to_string(v.kind);
    if (v.vertex >= 0) std::cout << " (vertex " << v.vertex << ")";
    std::cout << ": " << v.detail << "\n";
  }
  if (r.ok) std::cout << "ok\n";
  return r.ok ? kExitTrue : kExitFalse;
}

PartialColoring parse_phi(const Canvas& t, const std::string& arg) {
  auto phi = PartialColoring::empty(t.graph.slots());
  if (arg.empty()) return phi;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw PreconditionError("--phi entries look like vertex=color");
    int v = std::stoi(item.substr(0, eq));
    int c = std::stoi(item.substr(eq + 1));
    if (v < 0 || v >= t.graph.slots() || !t.outer.contains(v))
      throw PreconditionError("--phi names non-boundary vertex " + std::to_string(v));
    phi.color[v] = c;
  }
  return phi;
}

int cmd_color(const std::string& path, const std::string& phi_arg) {
  auto named = load_or_exit(path);
  const Canvas& t = named.canvas;
  PartialColoring phi;
  try {
    phi = parse_phi(t, phi_arg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  auto result = extend(t.graph, t.lists, phi, shared_cache());
  if (!result) {
    std::cout << "NO_EXTENSION\n";
    return kExitFalse;
  }
  for (Vertex v : t.graph.vertices()) std::cout << v << "=" << result->color[v] << "\n";
  return kExitTrue;
}

nlohmann::json phi_json(const PartialColoring& phi) {
  nlohmann::json m;
  for (int v = 0; v < static_cast<int>(phi.color.size()); ++v)
    if (phi.color[v] >= 0) m[std::to_string(v)] = phi.color[v];
  return m;
}

std::string criticality_certificate_json(const Canvas& t,
                                         const CriticalityCertificate& cert) {
  nlohmann::json j;
  j["type"] = "criticality";
  j["canvas"] = serialize_canvas(t);
  j["verdict"] = cert.verdict;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : cert.witnesses) {
    nlohmann::json row;
    if (w.vertex_deletion)
      row["vertex"] = w.removed_vertex;
    else
      row["edge"] = {w.removed_edge.a, w.removed_edge.b};
    row["phi"] = phi_json(w.phi);
    ws.push_back(row);
  }
  j["witnesses"] = ws;
  if (cert.failure) {
    nlohmann::json row;
    if (cert.failure->vertex_deletion)
      row["vertex"] = cert.failure->removed_vertex;
    else
      row["edge"] = {cert.failure->removed_edge.a, cert.failure->removed_edge.b};
    j["failure"] = row;
  }
  return j.dump();
}

int cmd_critical(const std::string& path) {
  auto named = load_or_exit(path);
  const Canvas& t = named.canvas;
  auto emb = check_embedding(t.graph);
  if (!emb.ok) {
    std::cerr << "invalid embedding: " << emb.violations.front() << "\n";
    return kExitUsage;
  }
  auto cert = is_critical_canvas(t, shared_cache());
  std::cout << criticality_certificate_json(t, cert) << "\n";
  return cert.verdict ? kExitTrue : kExitFalse;
}

int cmd_extract(const std::string& path) {
  auto named = load_or_exit(path);
  const Canvas& t = named.canvas;
  auto res = extract_minimal_extender(t.graph, t.outer, t.lists, shared_cache());
  ListAssignment L;
  L.lists.assign(t.graph.slots(), {});
  for (Vertex v : res.h.vertices())
    if (v < static_cast<int>(t.lists.lists.size())) L.lists[v] = t.lists.lists[v];
  auto oc = outer_cycle(res.h);
  Canvas hc{res.h, *oc, L};
  auto [compacted, old_ids] = compact_ids(hc);
  bool renumbered = false;
  for (size_t i = 0; i < old_ids.size(); ++i)
    if (old_ids[i] != static_cast<int>(i)) renumbered = true;
  if (renumbered) {
    std::cerr << "vertex ids compacted; original ids:";
    for (size_t i = 0; i < old_ids.size(); ++i) std::cerr << " " << i << "<-" << old_ids[i];
    std::cerr << "\n";
  }
  std::string name = named.name.empty() ? std::string() : named.name + "-extender";
  std::cout << serialize_canvas(compacted, name);
  return kExitTrue;
}

std::vector<int> parse_k_values(const std::string& arg) {
  std::vector<int> ks;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash != std::string::npos && dash > 0) {
      int lo = std::stoi(item.substr(0, dash));
      int hi = std::stoi(item.substr(dash + 1));
      for (int k = lo; k <= hi; ++k) ks.push_back(k);
    } else {
      ks.push_back(std::stoi(item));
    }
  }
  return ks;
}

int cmd_scan(const std::string& k_arg, int m, const std::string& mode,
             const std::string& params_arg, int universe, int jobs, bool verbose,
             std::uint64_t stop_after, const std::string& checkpoint,
             const std::string& report_path, bool full_suite, std::uint64_t seed) {
  std::vector<int> ks;
  try {
    ks = parse_k_values(k_arg);
    if (ks.empty()) throw PreconditionError("no outer cycle lengths given");
  } catch (const std::exception& e) {
    std::cerr << "bad --k: " << e.what() << "\n";
    return kExitUsage;
  }

  Rational e(1, 18), a(1, 12), g(2, 3);
  if (!params_arg.empty()) {
    std::stringstream ss(params_arg);
    std::string item;
    std::vector<Rational> vals;
    try {
      while (std::getline(ss, item, ',')) vals.push_back(Rational::parse(item));
      if (vals.size() != 3) throw PreconditionError("--params takes e,a,g");
    } catch (const std::exception& ex) {
      std::cerr << "bad --params: " << ex.what() << "\n";
      return kExitUsage;
    }
    e = vals[0];
    a = vals[1];
    g = vals[2];
  }
  std::string bad = Params::violated_inequality(e, a, g);
  if (!bad.empty()) {
    std::cerr << "parameters rejected: " << bad << "\n";
    return kExitUsage;
  }
  Params params(e, a, g);

  GenSpec spec;
  spec.max_internal = m;
  spec.universe = universe;
  spec.seed = seed;
  try {
    spec.mode = boundary_mode_from_string(mode);
  } catch (const std::exception& ex) {
    std::cerr << ex.what() << "\n";
    return kExitUsage;
  }

  ScanOptions opts;
  opts.jobs = jobs;
  opts.verbose = verbose;
  opts.stop_after = stop_after;
  opts.checkpoint_path = checkpoint;

  std::ofstream report_file;
  if (!report_path.empty()) {
    report_file.open(report_path, std::ios::binary);
    if (!report_file) {
      std::cerr << "cannot write " << report_path << "\n";
      return kExitUsage;
    }
    opts.report_sink = &report_file;
  } else {
    opts.report_sink = &std::cout;
  }

  auto suite = full_suite ? all_theorems() : default_suite();
  auto rep = scan(ks, spec, params, suite, opts);
  std::cerr << "instances: " << rep.instances << ", critical: " << rep.critical_instances
            << ", violations: " << rep.violations.size() << ", wall: " << rep.wall_seconds
            << "s\n";
  return rep.violations.empty() ? kExitTrue : kExitFalse;
}

int cmd_draw(const std::string& path, const std::string& svg_out,
             const std::string& dot_out) {
  auto named = load_or_exit(path);
  const Canvas& t = named.canvas;
  if (!is_two_connected(t.graph)) {
    std::cerr << "refusing to draw: graph is not 2-connected\n";
    return kExitFalse;
  }
  auto write = [&](const std::string& out, const std::string& text) {
    if (out == "-" || out.empty()) {
      std::cout << text;
      return true;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return false;
    }
    f << text;
    return true;
  };
  if (!svg_out.empty() && !write(svg_out, svg_drawing(t, named.name))) return kExitUsage;
  if (!dot_out.empty() && !write(dot_out, dot_drawing(t, named.name))) return kExitUsage;
  if (svg_out.empty() && dot_out.empty()) std::cout << svg_drawing(t, named.name);
  return kExitTrue;
}

int cmd_replay(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  auto r = replay_certificate(buf.str());
  std::cout << r.message << "\n";
  if (!r.well_formed) return kExitUsage;
  return r.matches ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane-canvas toolkit: validation, coloring, criticality, scans"};
  app.require_subcommand(1);

  std::string path, phi_arg, svg_out, dot_out;
  std::string k_arg = "3-5", mode = "singleton", params_arg, checkpoint, report_path;
  int m = 2, universe = 5, jobs = 1;
  bool verbose = false, full_suite = false;
  std::uint64_t stop_after = 0, seed = 0;

  auto* validate = app.add_subcommand("validate", "check a canvas file");
  validate->add_option("path", path)->required();

  auto* color = app.add_subcommand("color", "find a list coloring extending --phi");
  color->add_option("path", path)->required();
  color->add_option("--phi", phi_arg, "comma list of vertex=color on the outer cycle");

  auto* critical = app.add_subcommand("critical", "certify criticality");
  critical->add_option("path", path)->required();

  auto* extract = app.add_subcommand("extract", "minimal extender subgraph");
  extract->add_option("path", path)->required();

  auto* scan_cmd = app.add_subcommand("scan", "verify the statements over generated instances");
  scan_cmd->add_option("--k", k_arg, "outer cycle lengths, e.g. 3-5 or 4,6");
  scan_cmd->add_option("--m", m, "max internal vertices");
  scan_cmd->add_option("--mode", mode, "singleton|pairs|mixed");
  scan_cmd->add_option("--universe", universe, "number of colors");
  scan_cmd->add_option("--params", params_arg, "epsilon,alpha,gamma as fractions");
  scan_cmd->add_option("--jobs", jobs, "worker threads");
  scan_cmd->add_flag("--verbose", verbose, "one report line per instance");
  scan_cmd->add_option("--stop-after", stop_after, "pause after N instances");
  scan_cmd->add_option("--checkpoint", checkpoint, "checkpoint file for resume");
  scan_cmd->add_option("--report", report_path, "report file (default stdout)");
  scan_cmd->add_flag("--full-suite", full_suite, "include the subcycle criticality sweep");
  scan_cmd->add_option("--seed", seed, "seed echoed into the report header");

  auto* draw = app.add_subcommand("draw", "emit a drawing");
  draw->add_option("path", path)->required();
  draw->add_option("--svg", svg_out, "SVG output file or -");
  draw->add_option("--dot", dot_out, "DOT output file or -");

  auto* replay = app.add_subcommand("replay", "re-verify a certificate file");
  replay->add_option("path", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (color->parsed()) return cmd_color(path, phi_arg);
    if (critical->parsed()) return cmd_critical(path);
    if (extract->parsed()) return cmd_extract(path);
    if (scan_cmd->parsed())
      return cmd_scan(k_arg, m, mode, params_arg, universe, jobs, verbose, stop_after,
                      checkpoint, report_path, full_suite, seed);
    if (draw->parsed()) return cmd_draw(path, svg_out, dot_out);
    if (replay->parsed()) return cmd_replay(path);
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.byte_offset << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
