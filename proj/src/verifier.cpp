#include "canvaslab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "canvaslab/canvas_io.hpp"
#include "json.hpp"

namespace canvaslab {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::THM_2_8: return "THM-2.8";
    case TheoremId::PROP_2_10_1: return "PROP-2.10-1";
    case TheoremId::PROP_2_10_2: return "PROP-2.10-2";
    case TheoremId::THM_3_4: return "THM-3.4";
    case TheoremId::LEM_3_2: return "LEM-3.2";
    case TheoremId::LEM_3_3: return "LEM-3.3";
    case TheoremId::LEM_3_5: return "LEM-3.5";
    case TheoremId::PROP_4_3: return "PROP-4.3";
    case TheoremId::COR_4_4: return "COR-4.4";
    case TheoremId::PROP_4_5: return "PROP-4.5";
    case TheoremId::THM_4_6: return "THM-4.6";
    case TheoremId::THM_6_1: return "THM-6.1";
    case TheoremId::COR_6_2: return "COR-6.2";
    case TheoremId::THM_6_3: return "THM-6.3";
    case TheoremId::COR_2_7: return "COR-2.7";
    case TheoremId::LEM_2_4: return "LEM-2.4";
  }
  return "?";
}

TheoremId theorem_from_string(const std::string& s) {
  for (TheoremId id : all_theorems())
    if (to_string(id) == s) return id;
  throw PreconditionError("unknown theorem id: " + s);
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::THM_2_8,  TheoremId::PROP_2_10_1, TheoremId::PROP_2_10_2,
          TheoremId::THM_3_4,  TheoremId::LEM_3_2,     TheoremId::LEM_3_3,
          TheoremId::LEM_3_5,  TheoremId::PROP_4_3,    TheoremId::COR_4_4,
          TheoremId::PROP_4_5, TheoremId::THM_4_6,     TheoremId::THM_6_1,
          TheoremId::COR_6_2,  TheoremId::THM_6_3,     TheoremId::COR_2_7,
          TheoremId::LEM_2_4};
}

std::vector<TheoremId> default_suite() {
  std::vector<TheoremId> out;
  for (TheoremId id : all_theorems())
    if (id != TheoremId::COR_2_7) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------------------
// Per-instance checks

namespace {

CheckOutcome pass() { return {CheckStatus::Pass, ""}; }
CheckOutcome fail(std::string why) { return {CheckStatus::Fail, std::move(why)}; }
CheckOutcome skip(std::string why) { return {CheckStatus::Skipped, std::move(why)}; }

// Sub-embedding of g on the given edge set (plus their endpoints).
PlaneGraph edge_subgraph(const PlaneGraph& g, const std::set<Edge>& keep) {
  PlaneGraph out;
  out.rotation.assign(g.slots(), {});
  out.present.assign(g.slots(), 0);
  for (Vertex v : g.vertices()) {
    for (Vertex w : g.neighbors(v))
      if (keep.count(Edge(v, w))) out.rotation[v].push_back(w);
    if (!out.rotation[v].empty()) out.present[v] = 1;
  }
  return out;
}

// Deterministic 2-connected subgraphs containing C used by the
// decomposition checks: C + one chord, C + the boundary star of one
// internal vertex, and the graph itself.
std::vector<PlaneGraph> decomposition_candidates(const Canvas& t, size_t cap = 3) {
  std::vector<PlaneGraph> out;
  auto ces = t.outer.edge_set();
  size_t chords_used = 0;
  for (Edge e : t.graph.edges()) {
    if (chords_used >= cap) break;
    if (ces.count(e) || !t.outer.contains(e.a) || !t.outer.contains(e.b)) continue;
    auto keep = ces;
    keep.insert(e);
    PlaneGraph sub = edge_subgraph(t.graph, keep);
    designate_outer_face(sub, t.outer);
    out.push_back(std::move(sub));
    ++chords_used;
  }
  size_t stars_used = 0;
  for (Vertex v : t.internal_vertices()) {
    if (stars_used >= cap) break;
    auto keep = ces;
    int spokes = 0;
    for (Vertex w : t.graph.neighbors(v))
      if (t.outer.contains(w)) {
        keep.insert(Edge(v, w));
        ++spokes;
      }
    if (spokes < 2) continue;
    PlaneGraph sub = edge_subgraph(t.graph, keep);
    designate_outer_face(sub, t.outer);
    out.push_back(std::move(sub));
    ++stars_used;
  }
  out.push_back(t.graph);
  return out;
}

// All cycles of length <= 4, one representative each.
std::vector<CycleRef> short_cycles(const PlaneGraph& g) {
  std::vector<CycleRef> out;
  auto vs = g.vertices();
  for (Vertex a : vs) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a || c == b) continue;
        if (g.has_edge(c, a)) out.push_back(CycleRef{{a, b, c}});
      }
    }
  }
  for (Vertex a : vs) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a || c == b) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d <= a || d == b || d == c || d <= b) continue;
          if (g.has_edge(d, a) && !((g.has_edge(a, c) && false)))
            out.push_back(CycleRef{{a, b, c, d}});
        }
      }
    }
  }
  return out;
}

// Every simple cycle (anchored at its least vertex, one direction).
std::vector<CycleRef> every_cycle(const PlaneGraph& g) {
  std::vector<CycleRef> cycles;
  std::vector<Vertex> path;
  std::vector<char> used(g.slots(), 0);
  auto dfs = [&](auto&& self, Vertex anchor, Vertex v) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (w == anchor && path.size() >= 3) {
        if (path[1] < path.back()) cycles.push_back(CycleRef{path});
        continue;
      }
      if (w <= anchor || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, anchor, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex s : g.vertices()) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    dfs(dfs, s, s);
  }
  return cycles;
}

CheckOutcome eval_theorem(TheoremId id, const Canvas& t, const Params& p, bool critical,
                          ColorCache* cache) {
  switch (id) {
    case TheoremId::LEM_3_2: {
      int a = deficiency(t), b = deficiency_via_faces(t);
      if (a == b) return pass();
      return fail("def " + std::to_string(a) + " != face formula " + std::to_string(b));
    }
    case TheoremId::LEM_3_3:
    case TheoremId::PROP_4_3: {
      for (const PlaneGraph& g2 : decomposition_candidates(t)) {
        auto r = decomposition_check(t, g2, p);
        if (id == TheoremId::LEM_3_3 && !r.def_identity)
          return fail("def identity fails: " + std::to_string(r.def_lhs) + " vs " +
                      std::to_string(r.def_rhs));
        if (id == TheoremId::PROP_4_3 && !r.all_hold())
          return fail("decomposition comparison fails");
      }
      return pass();
    }
    case TheoremId::LEM_3_5: {
      auto r = defbound_check(t);
      if (!r.applicable) return skip("internal vertex of degree < 5");
      if (!r.holds)
        return fail("def " + std::to_string(r.lhs) + " < bound " + std::to_string(r.rhs));
      return pass();
    }
    case TheoremId::COR_4_4: {
      for (Edge e : chords(t)) {
        auto r = split_bounds_check(t, e, p);
        if (!r.holds)
          return fail("chord (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                      ") slack " + r.slack.str());
      }
      for (Vertex v : t.internal_vertices()) {
        std::vector<Vertex> cn;
        for (Vertex w : t.graph.neighbors(v))
          if (t.outer.contains(w)) cn.push_back(w);
        for (size_t i = 0; i < cn.size(); ++i)
          for (size_t j = i + 1; j < cn.size(); ++j) {
            auto r = split_bounds_check(t, v, cn[i], cn[j], p);
            if (!r.holds)
              return fail("vertex " + std::to_string(v) + " split slack " + r.slack.str());
          }
      }
      return pass();
    }
    case TheoremId::PROP_4_5: {
      int v = t.internal_count();
      if (v > 1) return skip("v(T) > 1");
      int extra = t.graph.edge_count() - t.outer.length();
      Rational expected =
          v == 0 ? Rational(extra)
                 : Rational(extra) - Rational(3) - (Rational(2) * p.alpha + p.epsilon);
      Rational actual = d_value(t, p);
      if (actual == expected) return pass();
      return fail("d = " + actual.str() + ", closed form " + expected.str());
    }
    case TheoremId::THM_3_4: {
      if (!critical) return skip("not critical");
      int d = deficiency(t);
      if (d >= 1) return pass();
      return fail("def = " + std::to_string(d) + " < 1");
    }
    case TheoremId::THM_4_6: {
      if (!critical) return skip("not critical");
      if (t.internal_count() < 2) return skip("v(T) < 2");
      Rational d = d_value(t, p);
      Rational bound = Rational(3) - p.gamma;
      if (d >= bound) return pass();
      return fail("d = " + d.str() + " < " + bound.str());
    }
    case TheoremId::THM_6_1: {
      if (!critical) return skip("not critical");
      Rational lhs(t.internal_count(), 18);
      int face_sum = 0;
      for (const auto& f : trace_faces(t.graph))
        if (f.id != t.graph.outer_face_id) face_sum += f.length() - 3;
      lhs = lhs + Rational(face_sum);
      Rational rhs(t.outer.length() - 4);
      if (lhs <= rhs) return pass();
      return fail("v/18 + sum = " + lhs.str() + " > " + rhs.str());
    }
    case TheoremId::COR_6_2: {
      if (!critical) return skip("not critical");
      for (const auto& f : trace_faces(t.graph)) {
        if (f.id == t.graph.outer_face_id) continue;
        if (f.length() >= t.outer.length() - 1)
          return fail("internal face of length " + std::to_string(f.length()));
      }
      return pass();
    }
    case TheoremId::THM_6_3: {
      if (!critical) return skip("not critical");
      if (t.graph.vertex_count() <= 19 * t.outer.length()) return pass();
      return fail(std::to_string(t.graph.vertex_count()) + " vertices > 19|C|");
    }
    case TheoremId::THM_2_8: {
      if (!critical) return skip("not critical");
      CriticalityCertificate stub;
      stub.verdict = true;
      auto w = chord_or_tripod_witness(t, stub);
      if (w.kind != ChordOrTripodWitness::Kind::TheoremViolation) return pass();
      return fail("no chord and no pod vertex");
    }
    case TheoremId::PROP_2_10_1: {
      if (!critical) return skip("not critical");
      for (const auto& c : short_cycles(t.graph)) {
        auto disk = disk_subgraph(t.graph, c);
        int inside = disk.whole_graph ? t.graph.vertex_count() : disk.graph.vertex_count();
        if (inside > c.length())
          return fail("cycle of length " + std::to_string(c.length()) + " bounds a vertex");
      }
      return pass();
    }
    case TheoremId::PROP_2_10_2: {
      if (!critical) return skip("not critical");
      for (Vertex v : t.internal_vertices())
        if (t.graph.degree(v) < 5)
          return fail("internal vertex " + std::to_string(v) + " has degree " +
                      std::to_string(t.graph.degree(v)));
      return pass();
    }
    case TheoremId::COR_2_7: {
      if (!critical) return skip("not critical");
      for (const auto& c : every_cycle(t.graph)) {
        auto disk = disk_subgraph(t.graph, c);
        bool trivial = !disk.whole_graph && disk.graph.edge_count() == c.length() &&
                       disk.graph.vertex_count() == c.length();
        if (trivial) continue;
        Canvas sub = disk.whole_graph ? t : subcanvas_by_cycle(t, c);
        auto cert = is_T_critical(sub.graph, SubgraphSpec::of_cycle(sub.outer), sub.lists,
                                  cache);
        if (!cert.verdict) return fail("subcanvas on a cycle is not critical");
      }
      return pass();
    }
    case TheoremId::LEM_2_4: {
      if (!critical) return skip("not critical");
      if (is_two_connected(t.graph)) return pass();
      return fail("critical canvas is not 2-connected");
    }
  }
  return skip("unhandled");
}

}  // namespace

InstanceResult check_instance(const Canvas& t, const Params& p,
                              const std::vector<TheoremId>& suite, ColorCache* cache) {
  InstanceResult r;
  r.valid_canvas = validate_canvas(t.graph, t.outer, t.lists).ok;
  if (!r.valid_canvas) {
    for (TheoremId id : suite) r.outcomes[id] = skip("invalid canvas");
    return r;
  }
  // The bare cycle G = C is not critical (the definition demands G != T).
  if (t.graph.vertex_count() == t.outer.length() &&
      t.graph.edge_count() == t.outer.length()) {
    r.critical = false;
  } else {
    auto cert = is_critical_canvas(t, cache);
    r.critical = cert.verdict;
    r.criticality_witnesses = static_cast<int>(cert.witnesses.size());
  }
  for (TheoremId id : suite) r.outcomes[id] = eval_theorem(id, t, p, r.critical, cache);
  return r;
}

// ---------------------------------------------------------------------------
// Certificates

std::string make_certificate(const Canvas& t, TheoremId id, const Params& p,
                             const std::string& detail, std::uint64_t ordinal) {
  nlohmann::json j;
  j["type"] = "violation";
  j["theorem"] = to_string(id);
  j["ordinal"] = ordinal;
  j["params"] = {p.epsilon.str(), p.alpha.str(), p.gamma.str()};
  j["canvas"] = serialize_canvas(t);
  j["detail"] = detail;
  return j.dump();
}

ReplayResult replay_certificate(const std::string& json_text) {
  ReplayResult out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
    if (!j.is_object() || !j.contains("type")) throw std::runtime_error("not a certificate");
  } catch (const std::exception& e) {
    out.message = std::string("malformed certificate: ") + e.what();
    return out;
  }
  try {
    std::string type = j.at("type").get<std::string>();
    if (type == "violation") {
      auto named = parse_canvas_text(j.at("canvas").get<std::string>());
      auto ps = j.at("params");
      Params p(Rational::parse(ps.at(0).get<std::string>()),
               Rational::parse(ps.at(1).get<std::string>()),
               Rational::parse(ps.at(2).get<std::string>()));
      TheoremId id = theorem_from_string(j.at("theorem").get<std::string>());
      out.well_formed = true;
      auto r = check_instance(named.canvas, p, {id});
      bool fails_again = r.outcomes.at(id).status == CheckStatus::Fail;
      out.matches = fails_again;
      out.message = fails_again ? "verdict reproduced: " + r.outcomes.at(id).reason
                                : "verdict mismatch: check passes on replay";
      return out;
    }
    if (type == "criticality") {
      auto named = parse_canvas_text(j.at("canvas").get<std::string>());
      const Canvas& t = named.canvas;
      bool recorded = j.at("verdict").get<bool>();
      out.well_formed = true;
      auto cert = is_critical_canvas(t);
      if (cert.verdict != recorded) {
        out.message = "verdict mismatch";
        return out;
      }
      // Witnesses must re-verify in both directions.
      for (const auto& w : j.at("witnesses")) {
        PartialColoring phi = PartialColoring::empty(t.graph.slots());
        for (const auto& [key, val] : w.at("phi").items())
          phi.color[std::stoi(key)] = val.get<int>();
        PlaneGraph sub = w.contains("edge")
                             ? t.graph.without_edge(
                                   Edge(w["edge"][0].get<int>(), w["edge"][1].get<int>()))
                             : t.graph.without_vertex(w["vertex"].get<int>());
        if (extend(t.graph, t.lists, phi) || !extend(sub, t.lists, phi)) {
          out.message = "witness fails to re-verify";
          return out;
        }
      }
      out.matches = true;
      out.message = "verdict reproduced";
      return out;
    }
    out.message = "unknown certificate type: " + type;
    return out;
  } catch (const std::exception& e) {
    out.well_formed = false;
    out.matches = false;
    out.message = std::string("malformed certificate: ") + e.what();
    return out;
  }
}

// ---------------------------------------------------------------------------
// Scan

namespace {

nlohmann::json suite_json(const std::vector<TheoremId>& suite) {
  nlohmann::json a = nlohmann::json::array();
  for (TheoremId id : suite) a.push_back(to_string(id));
  return a;
}

}  // namespace

std::string ScanReport::header_line() const {
  nlohmann::json j;
  j["type"] = "header";
  j["k"] = outer_lens;
  j["m"] = spec_template.max_internal;
  j["mode"] = to_string(spec_template.mode);
  j["universe"] = spec_template.universe;
  j["seed"] = spec_template.seed;
  j["symmetry_reduction"] = spec_template.symmetry_reduction;
  j["params"] = {params.epsilon.str(), params.alpha.str(), params.gamma.str()};
  j["suite"] = suite_json(suite);
  return j.dump();
}

std::string ScanReport::footer_line() const {
  nlohmann::json j;
  j["type"] = "footer";
  j["instances"] = instances;
  j["valid_canvases"] = valid_canvases;
  j["critical_instances"] = critical_instances;
  nlohmann::json per;
  for (TheoremId id : suite) {
    nlohmann::json row;
    row["pass"] = pass.count(id) ? pass.at(id) : 0;
    row["fail"] = fail.count(id) ? fail.at(id) : 0;
    row["skip"] = skip.count(id) ? skip.at(id) : 0;
    per[to_string(id)] = row;
  }
  j["per_theorem"] = per;
  j["violations"] = violations.size();
  return j.dump();
}

ScanReport scan(const std::vector<int>& outer_lens, const GenSpec& spec_template,
                const Params& p, const std::vector<TheoremId>& suite,
                const ScanOptions& options) {
  auto t0 = std::chrono::steady_clock::now();

  ScanReport rep;
  rep.outer_lens = outer_lens;
  rep.spec_template = spec_template;
  rep.params = p;
  rep.suite = suite;
  for (TheoremId id : suite) rep.pass[id] = rep.fail[id] = rep.skip[id] = 0;

  // Resume from a checkpoint when one is present and compatible.
  std::uint64_t resume_at = 0;
  bool already_complete = false;
  if (!options.checkpoint_path.empty()) {
    std::ifstream in(options.checkpoint_path);
    if (in) {
      nlohmann::json ck = nlohmann::json::parse(in, nullptr, false);
      if (!ck.is_discarded() && ck.value("header", "") == rep.header_line()) {
        resume_at = ck.at("next_ordinal").get<std::uint64_t>();
        rep.instances = ck.at("instances").get<std::uint64_t>();
        rep.valid_canvases = ck.at("valid_canvases").get<std::uint64_t>();
        rep.critical_instances = ck.at("critical_instances").get<std::uint64_t>();
        for (TheoremId id : suite) {
          auto row = ck.at("per_theorem").at(to_string(id));
          rep.pass[id] = row.at("pass").get<std::uint64_t>();
          rep.fail[id] = row.at("fail").get<std::uint64_t>();
          rep.skip[id] = row.at("skip").get<std::uint64_t>();
        }
        for (const auto& v : ck.at("violations"))
          rep.violations.push_back({v.at("ordinal").get<std::uint64_t>(),
                                    theorem_from_string(v.at("theorem").get<std::string>()),
                                    v.at("certificate").get<std::string>()});
        already_complete = ck.value("complete", false);
      }
    }
  }

  if (options.report_sink) *options.report_sink << rep.header_line() << "\n";

  auto save_checkpoint = [&](std::uint64_t next_ordinal, bool complete) {
    if (options.checkpoint_path.empty()) return;
    nlohmann::json ck;
    ck["header"] = rep.header_line();
    ck["next_ordinal"] = next_ordinal;
    ck["instances"] = rep.instances;
    ck["valid_canvases"] = rep.valid_canvases;
    ck["critical_instances"] = rep.critical_instances;
    nlohmann::json per;
    for (TheoremId id : suite) {
      nlohmann::json row;
      row["pass"] = rep.pass[id];
      row["fail"] = rep.fail[id];
      row["skip"] = rep.skip[id];
      per[to_string(id)] = row;
    }
    ck["per_theorem"] = per;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : rep.violations) {
      nlohmann::json row;
      row["ordinal"] = v.ordinal;
      row["theorem"] = to_string(v.theorem);
      row["certificate"] = v.certificate;
      vs.push_back(row);
    }
    ck["violations"] = vs;
    ck["complete"] = complete;
    std::ofstream out(options.checkpoint_path);
    out << ck.dump() << "\n";
  };

  std::uint64_t ordinal = 0;
  bool paused = false;

  if (!already_complete) {
    int jobs = std::max(1, options.jobs);
    const size_t chunk_size = std::max<size_t>(1, options.chunk);
    std::vector<Canvas> chunk;
    std::vector<std::uint64_t> ords;

    auto process_chunk = [&]() {
      if (chunk.empty()) return;
      std::vector<InstanceResult> results(chunk.size());
      auto worker = [&](int w) {
        ColorCache cache;
        for (size_t i = w; i < chunk.size(); i += jobs)
          results[i] = check_instance(chunk[i], p, suite, &cache);
      };
      if (jobs == 1) {
        worker(0);
      } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& th : threads) th.join();
      }
      for (size_t i = 0; i < chunk.size(); ++i) {
        const auto& r = results[i];
        rep.instances += 1;
        rep.valid_canvases += r.valid_canvas ? 1 : 0;
        rep.critical_instances += r.critical ? 1 : 0;
        for (const auto& [id, oc] : r.outcomes) {
          if (oc.status == CheckStatus::Pass) rep.pass[id] += 1;
          if (oc.status == CheckStatus::Fail) {
            rep.fail[id] += 1;
            rep.violations.push_back(
                {ords[i], id, make_certificate(chunk[i], id, p, oc.reason, ords[i])});
          }
          if (oc.status == CheckStatus::Skipped) rep.skip[id] += 1;
        }
        if (options.report_sink && options.verbose) {
          nlohmann::json line;
          line["type"] = "instance";
          line["ordinal"] = ords[i];
          line["critical"] = r.critical;
          nlohmann::json oj;
          for (const auto& [id, oc] : r.outcomes)
            oj[to_string(id)] = oc.status == CheckStatus::Pass
                                    ? "pass"
                                    : (oc.status == CheckStatus::Fail ? "fail" : "skip");
          line["results"] = oj;
          *options.report_sink << line.dump() << "\n";
        }
      }
      chunk.clear();
      ords.clear();
    };

    for (int k : outer_lens) {
      if (paused) break;
      GenSpec spec = spec_template;
      spec.outer_len = k;
      InstanceStream stream(spec);
      while (auto t = stream.next()) {
        std::uint64_t ord = ordinal++;
        if (ord < resume_at) continue;  // replayed prefix, already aggregated
        chunk.push_back(std::move(*t));
        ords.push_back(ord);
        if (chunk.size() >= chunk_size) {
          process_chunk();
          if (options.stop_after && rep.instances >= options.stop_after) {
            paused = true;
            break;
          }
        }
      }
      if (!paused) process_chunk();
      if (options.stop_after && rep.instances >= options.stop_after) paused = true;
    }
  }

  save_checkpoint(rep.instances, !paused);
  if (options.report_sink && !paused) *options.report_sink << rep.footer_line() << "\n";

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace canvaslab
