// Acceptance suite: one pass/fail line per criterion, exact tolerances.
// Usage: acceptance_tests [path-to-cli-binary]
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "canvaslab/canvas_io.hpp"
#include "canvaslab/verifier.hpp"
#include "oracle.hpp"

using namespace canvaslab;
using canvaslab::testing::brute_force_extend;

namespace {

int g_pass = 0, g_fail = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : " - ", detail.c_str());
  (ok ? g_pass : g_fail) += 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Random 2-connected plane graph built by stacked face operations.
PlaneGraph random_stacked_graph(Rng& rng, int outer_len, int max_vertices) {
  std::vector<std::vector<Vertex>> rot(outer_len);
  for (int i = 0; i < outer_len; ++i)
    rot[i] = {(i + 1) % outer_len, (i + outer_len - 1) % outer_len};
  PlaneGraph g(std::move(rot));
  std::vector<Vertex> cyc(outer_len);
  for (int i = 0; i < outer_len; ++i) cyc[i] = i;
  designate_outer_face(g, CycleRef{cyc});

  int steps = static_cast<int>(rng.below(12));
  for (int s = 0; s < steps && g.vertex_count() < max_vertices; ++s) {
    auto faces = trace_faces(g);
    std::vector<int> internal;
    for (const auto& f : faces)
      if (f.id != g.outer_face_id) internal.push_back(f.id);
    if (internal.empty()) break;
    const auto& f = faces[internal[rng.below(internal.size())]];
    auto w = f.walk_vertices();
    int m = static_cast<int>(w.size());
    if (rng.below(2) == 0 && m >= 4) {
      int i = static_cast<int>(rng.below(m));
      int j = (i + 2 + static_cast<int>(rng.below(m - 3))) % m;
      if (i == j || g.has_edge(w[i], w[j])) continue;
      g = g.with_edge(w[i], w[j], w[(i + m - 1) % m], w[(j + m - 1) % m]);
    } else {
      int count = 2 + static_cast<int>(rng.below(std::min(m, 4) - 1));
      std::set<int> posset;
      while (static_cast<int>(posset.size()) < count)
        posset.insert(static_cast<int>(rng.below(m)));
      Vertex x = g.slots();
      g.rotation.emplace_back();
      g.present.push_back(1);
      std::vector<int> pos(posset.begin(), posset.end());
      for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
        int i = *it;
        g.rotation[x].push_back(w[i]);
        auto& rw = g.rotation[w[i]];
        auto at = std::find(rw.begin(), rw.end(), w[(i + m - 1) % m]);
        rw.insert(at + 1, x);
      }
    }
    designate_outer_face(g, CycleRef{cyc});
  }
  designate_outer_face(g, CycleRef{cyc});
  return g;
}

// Two stacked disks glued at one boundary vertex: exercises the block
// decomposition path of the constructive colorer.
PlaneGraph glued_graph(Rng& rng) {
  PlaneGraph a = random_stacked_graph(rng, 3 + static_cast<int>(rng.below(3)), 10);
  PlaneGraph b = random_stacked_graph(rng, 3 + static_cast<int>(rng.below(3)), 10);
  int na = a.slots();
  PlaneGraph g = a;
  g.rotation.resize(na + b.slots());
  g.present.resize(na + b.slots(), 0);
  auto map = [&](Vertex v) { return v == 0 ? 0 : na + v; };
  for (int v = 0; v < b.slots(); ++v) {
    if (!b.present[v]) continue;
    for (Vertex w : b.neighbors(v)) g.rotation[map(v)].push_back(map(w));
    if (v != 0) g.present[map(v)] = 1;
  }
  g.outer_face_id = -1;
  auto faces = trace_faces(g);
  for (const auto& f : faces)
    for (const auto& de : f.boundary)
      if (de == std::make_pair(1, 0)) g.outer_face_id = f.id;
  if (g.outer_face_id < 0) g.outer_face_id = 0;
  return g;
}

void criterion_1_and_2() {
  GenSpec spec;
  spec.max_internal = 2;
  ScanOptions opts;
  opts.jobs = 2;
  auto rep = scan({3, 4, 5}, spec, Params::paper(), default_suite(), opts);

  auto zero_fail = [&](TheoremId id) { return rep.fail.at(id) == 0; };

  report("criterion 1: THM-3.4 def >= 1, zero violations", zero_fail(TheoremId::THM_3_4),
         std::to_string(rep.pass.at(TheoremId::THM_3_4)) + " critical instances checked");
  report("criterion 1: THM-2.8 chord-or-pod witness, zero violations",
         zero_fail(TheoremId::THM_2_8));
  report("criterion 1: PROP-2.10-1 no material in short cycles, zero violations",
         zero_fail(TheoremId::PROP_2_10_1));
  report("criterion 1: PROP-2.10-2 internal degree >= 5, zero violations",
         zero_fail(TheoremId::PROP_2_10_2));
  report("criterion 1: THM-6.3 |V| <= 19|C|, zero violations", zero_fail(TheoremId::THM_6_3));

  // The strict face bound |f| < |C|-1 cannot hold: the chorded squares of
  // the k=4 stream are certified critical (criterion 7 demands exactly
  // that) and carry internal triangles with |f| = 3 = |C|-1. The failure is
  // reported honestly; the provable non-strict bound is checked below.
  bool strict_ok = zero_fail(TheoremId::COR_6_2);
  report("criterion 1: COR-6.2 strict |f| < |C|-1, zero violations", strict_ok,
         strict_ok ? ""
                   : std::to_string(rep.fail.at(TheoremId::COR_6_2)) +
                         " equality instances with |f| = |C|-1 (strict bound "
                         "unsatisfiable; see notes)");
  {
    GenSpec s2 = spec;
    bool nonstrict = true;
    for (int k : {3, 4, 5}) {
      s2.outer_len = k;
      InstanceStream stream(s2);
      ColorCache cache;
      while (auto t = stream.next()) {
        if (t->graph.vertex_count() == t->outer.length() &&
            t->graph.edge_count() == t->outer.length())
          continue;
        if (!is_critical_canvas(*t, &cache).verdict) continue;
        for (const auto& f : trace_faces(t->graph))
          if (f.id != t->graph.outer_face_id && f.length() > t->outer.length() - 1)
            nonstrict = false;
      }
    }
    report("criterion 1: face bound |f| <= |C|-1 holds on every critical instance",
           nonstrict);
  }

  report("criterion 2: params 1/18,1/12,2/3 satisfy the three inequalities",
         Params::violated_inequality(Rational(1, 18), Rational(1, 12), Rational(2, 3))
             .empty());
  report("criterion 2: THM-4.6 d >= 3-gamma when v >= 2, zero violations",
         zero_fail(TheoremId::THM_4_6),
         std::to_string(rep.skip.at(TheoremId::THM_4_6)) +
             " skipped (no critical instance reaches v >= 2 at this scale)");
  report("criterion 2: THM-6.1 v/18 + sum(|f|-3) <= |C|-4, zero violations",
         zero_fail(TheoremId::THM_6_1));

  report("scan sanity: instances examined equal the generator's emitted count",
         rep.instances == rep.valid_canvases,
         std::to_string(rep.instances) + " instances, " +
             std::to_string(rep.critical_instances) + " critical");
}

void criterion_3() {
  Rng rng(20150521);
  auto params = Params::paper();
  std::uint64_t canvases = 0, failures = 0;

  auto handle = [&](const Canvas& t) {
    ++canvases;
    if (deficiency(t) != deficiency_via_faces(t)) ++failures;

    auto ces = t.outer.edge_set();
    std::vector<Edge> extra;
    for (Edge e : t.graph.edges())
      if (!ces.count(e)) extra.push_back(e);
    PlaneGraph sub = t.graph;
    for (int attempt = 0; attempt < 6; ++attempt) {
      auto keep = ces;
      for (Edge e : extra)
        if (rng.below(2)) keep.insert(e);
      PlaneGraph cand;
      cand.rotation.assign(t.graph.slots(), {});
      cand.present.assign(t.graph.slots(), 0);
      for (Vertex v : t.graph.vertices()) {
        for (Vertex w : t.graph.neighbors(v))
          if (keep.count(Edge(v, w))) cand.rotation[v].push_back(w);
        if (!cand.rotation[v].empty()) cand.present[v] = 1;
      }
      if (!is_two_connected(cand)) continue;
      designate_outer_face(cand, t.outer);
      sub = std::move(cand);
      break;
    }
    auto r = decomposition_check(t, sub, params);
    if (!r.def_identity) ++failures;
    if (!r.all_hold()) ++failures;
  };

  GenSpec spec;
  spec.max_internal = 2;
  for (int k : {3, 4, 5}) {
    spec.outer_len = k;
    InstanceStream stream(spec);
    while (auto t = stream.next()) handle(*t);
  }
  GenSpec pairs;
  pairs.mode = BoundaryListMode::Pairs;
  for (auto [k, m] : {std::pair{3, 1}, {4, 1}, {5, 0}}) {
    pairs.outer_len = k;
    pairs.max_internal = m;
    InstanceStream stream(pairs);
    while (auto t = stream.next()) {
      handle(*t);
      if (canvases >= 12000) break;
    }
    if (canvases >= 12000) break;
  }

  report("criterion 3: formula identities on >= 10^4 canvases",
         canvases >= 10000 && failures == 0,
         std::to_string(canvases) + " canvases, " + std::to_string(failures) + " failures");
}

void criterion_4() {
  GenSpec spec;
  spec.max_internal = 2;
  std::vector<PlaneGraph> graphs;
  for (int k : {3, 4, 5}) {
    spec.outer_len = k;
    for (auto& g : enumerate_plane_graphs(spec))
      if (g.vertex_count() <= 10) graphs.push_back(std::move(g));
  }
  Rng rng(424242);
  std::uint64_t disagreements = 0, runs = 0;
  for (const auto& g : graphs) {
    for (int trial = 0; trial < 200; ++trial) {
      ListAssignment L;
      L.lists.assign(g.slots(), {});
      for (Vertex v : g.vertices())
        L.lists[v] = rng.subset(7, 1 + static_cast<int>(rng.below(5)));
      auto mine = extend(g, L, PartialColoring::empty(g.slots()));
      auto ref = brute_force_extend(g, L, PartialColoring::empty(g.slots()));
      ++runs;
      if (mine.has_value() != ref.has_value()) ++disagreements;
      if (mine && (!proper_on_domain(g, *mine) || !respects_lists(L, *mine)))
        ++disagreements;
    }
  }
  report("criterion 4: extend matches the naive enumerator on " + std::to_string(runs) +
             " runs over " + std::to_string(graphs.size()) + " graphs",
         disagreements == 0, std::to_string(disagreements) + " disagreements");
}

void criterion_5() {
  Rng rng(5150);
  int successes = 0, failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    PlaneGraph g = trial % 5 == 4
                       ? glued_graph(rng)
                       : random_stacked_graph(rng, 3 + static_cast<int>(rng.below(4)), 30);
    if (!check_embedding(g).ok) {
      ++failures;
      continue;
    }
    auto faces = trace_faces(g);
    std::set<Vertex> Z;
    for (const auto& de : faces[g.outer_face_id].boundary) Z.insert(de.first);
    for (Vertex v : g.vertices())
      if (g.degree(v) == 0) Z.insert(v);

    std::set<Vertex> S;
    std::vector<Vertex> zvec(Z.begin(), Z.end());
    Vertex s1 = zvec[rng.below(zvec.size())];
    S.insert(s1);
    for (Vertex w : g.neighbors(s1))
      if (Z.count(w) && rng.below(2)) {
        S.insert(w);
        break;
      }

    ListAssignment L;
    L.lists.assign(g.slots(), {});
    int fresh = 100;
    for (Vertex v : g.vertices()) {
      if (S.count(v))
        L.lists[v] = {fresh++};  // disjoint singletons
      else if (Z.count(v))
        L.lists[v] = rng.subset(8, 3);
      else
        L.lists[v] = rng.subset(9, 5);
    }
    try {
      auto phi = thomassen_color(g, Z, S, L);
      bool ok = proper_on_domain(g, phi) && respects_lists(L, phi);
      for (Vertex v : g.vertices())
        if (!phi.assigned(v)) ok = false;
      if (ok)
        ++successes;
      else
        ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  report("criterion 5: constructive colorer on 1000 random instances",
         successes == 1000 && failures == 0,
         std::to_string(successes) + " colored, " + std::to_string(failures) + " failures");
}

void criterion_6() {
  GenSpec spec;
  spec.max_internal = 2;
  std::uint64_t checked = 0, breaches = 0;
  ColorCache cache;
  for (int k : {3, 4, 5}) {
    spec.outer_len = k;
    InstanceStream stream(spec);
    while (auto t = stream.next()) {
      ++checked;
      try {
        // The extractor asserts the extension property, single-deletion
        // minimality and criticality-or-cycle internally; breaches throw.
        auto res = extract_minimal_extender(t->graph, t->outer, t->lists, &cache);
        if (res.h.vertex_count() > 19 * t->outer.length()) ++breaches;
      } catch (const std::exception&) {
        ++breaches;
      }
    }
  }
  report("criterion 6: extractor contract on every scanned instance", breaches == 0,
         std::to_string(checked) + " instances, " + std::to_string(breaches) + " breaches");
}

void criterion_7() {
  auto w5 = fixture_w5();
  bool ok = is_critical_canvas(w5).verdict && deficiency(w5) == 2 &&
            d_value(w5, Params::paper()) == Rational(16, 9);
  report("criterion 7: wheel fixture critical with def = 2, d = 16/9", ok);

  auto c4e = fixture_c4e();
  report("criterion 7: chorded square critical with def = 1",
         is_critical_canvas(c4e).verdict && deficiency(c4e) == 1);

  auto k4 = fixture_k4({1, 2, 3, 4});
  auto res = extract_minimal_extender(k4.graph, k4.outer, k4.lists);
  report("criterion 7: K4 with a 4-list center is non-critical with H = C",
         !is_critical_canvas(k4).verdict && res.equals_cycle);
}

void criterion_8(const std::string& cli) {
  if (cli.empty()) {
    report("criterion 8: determinism across --jobs and checkpoint/resume", false,
           "cli binary path not supplied");
    return;
  }
  std::string base = "/tmp/canvaslab_acc";
  auto run = [&](const std::string& args) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    return std::system(cmd.c_str());
  };
  run("scan --k 3-4 --m 1 --jobs 1 --verbose --report " + base + "_j1.txt");
  run("scan --k 3-4 --m 1 --jobs 4 --verbose --report " + base + "_j4.txt");
  std::string a = read_file(base + "_j1.txt"), b = read_file(base + "_j4.txt");
  bool jobs_ok = !a.empty() && a == b;

  std::remove((base + "_ck.json").c_str());
  run("scan --k 3-4 --m 1 --report " + base + "_fresh.txt");
  run("scan --k 3-4 --m 1 --stop-after 5 --checkpoint " + base + "_ck.json --report " +
      base + "_part.txt");
  run("scan --k 3-4 --m 1 --checkpoint " + base + "_ck.json --report " + base +
      "_resumed.txt");
  std::string fresh = read_file(base + "_fresh.txt");
  std::string resumed = read_file(base + "_resumed.txt");
  bool resume_ok = !fresh.empty() && fresh == resumed;
  std::remove((base + "_ck.json").c_str());

  report("criterion 8: reports byte-identical across --jobs 1 and 4", jobs_ok);
  report("criterion 8: fresh and resumed reports byte-identical", resume_ok);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  criterion_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(cli);
  std::printf("summary: %d passed, %d failed\n", g_pass, g_fail);
  if (g_fail == 1) {
    std::printf(
        "note: the single failing line is the strict face bound |f| < |C|-1, which the "
        "equality instances (chorded squares certified critical by criterion 7) make "
        "unsatisfiable; the non-strict bound |f| <= |C|-1 passes everywhere.\n");
  }
  return g_fail == 0 ? 0 : 1;
}
