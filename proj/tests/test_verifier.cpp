#include <cstdio>
#include <sstream>

#include "canvaslab/canvas_io.hpp"
#include "canvaslab/verifier.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_helpers.hpp"

using namespace canvaslab;
using namespace canvaslab::testing;

TEST_CASE("check_instance on the wheel fixture") {
  auto t = fixture_w5();
  auto r = check_instance(t, Params::paper(), all_theorems());
  CHECK(r.valid_canvas);
  CHECK(r.critical);
  CHECK(r.outcomes.at(TheoremId::THM_3_4).status == CheckStatus::Pass);
  CHECK(r.outcomes.at(TheoremId::THM_4_6).status == CheckStatus::Skipped);  // v = 1
  CHECK(r.outcomes.at(TheoremId::THM_6_3).status == CheckStatus::Pass);
  CHECK(r.outcomes.at(TheoremId::THM_2_8).status == CheckStatus::Pass);
  CHECK(r.outcomes.at(TheoremId::COR_6_2).status == CheckStatus::Pass);
  CHECK(r.outcomes.at(TheoremId::LEM_3_2).status == CheckStatus::Pass);
  CHECK(r.outcomes.at(TheoremId::COR_2_7).status == CheckStatus::Pass);
  CHECK(r.outcomes.at(TheoremId::PROP_4_5).status == CheckStatus::Pass);
}

TEST_CASE("check_instance on the chorded square") {
  auto t = fixture_c4e();
  auto r = check_instance(t, Params::paper(), all_theorems());
  CHECK(r.critical);
  CHECK(r.outcomes.at(TheoremId::THM_3_4).status == CheckStatus::Pass);
  CHECK(r.outcomes.at(TheoremId::THM_2_8).status == CheckStatus::Pass);
  CHECK(r.outcomes.at(TheoremId::COR_4_4).status == CheckStatus::Pass);
}

TEST_CASE("non-critical instances skip the gated checks") {
  auto t = fixture_k4({1, 2, 3, 4});
  // Not a valid canvas (short center list): everything is skipped.
  auto r = check_instance(t, Params::paper(), {TheoremId::THM_3_4});
  CHECK_FALSE(r.valid_canvas);
  CHECK(r.outcomes.at(TheoremId::THM_3_4).status == CheckStatus::Skipped);

  // A valid but non-critical canvas skips with the right reason.
  auto dw = fixture_double_wheel();
  auto r2 = check_instance(dw, Params::paper(), {TheoremId::THM_3_4, TheoremId::LEM_3_2});
  CHECK(r2.valid_canvas);
  CHECK_FALSE(r2.critical);
  CHECK(r2.outcomes.at(TheoremId::THM_3_4).status == CheckStatus::Skipped);
  CHECK(r2.outcomes.at(TheoremId::LEM_3_2).status == CheckStatus::Pass);
}

TEST_CASE("small scan: every check passes except the strict face bound") {
  GenSpec spec;
  spec.max_internal = 1;
  auto rep = scan({3, 4}, spec, Params::paper(), default_suite());
  CHECK(rep.instances > 0);
  // k = 4 singleton: the critical instances are exactly the chorded squares
  // whose chord ends share a color; the chord is the only extra edge. Their
  // internal triangles sit at |f| = |C| - 1 exactly, so the strict face
  // bound records them while every other statement holds.
  CHECK(rep.critical_instances == 2);
  for (TheoremId id : default_suite())
    if (id != TheoremId::COR_6_2) CHECK(rep.fail.at(id) == 0);
  CHECK(rep.fail.at(TheoremId::COR_6_2) == 2);
  for (const auto& v : rep.violations) CHECK(v.theorem == TheoremId::COR_6_2);
  // The equality cases replay: the strict statement really does fail there.
  for (const auto& v : rep.violations) {
    auto r = replay_certificate(v.certificate);
    CHECK(r.well_formed);
    CHECK(r.matches);
  }
}

TEST_CASE("scan reports are byte-identical across job counts") {
  GenSpec spec;
  spec.max_internal = 1;
  std::ostringstream out1, out4;
  ScanOptions o1, o4;
  o1.jobs = 1;
  o1.report_sink = &out1;
  o1.verbose = true;
  o4.jobs = 4;
  o4.report_sink = &out4;
  o4.verbose = true;
  auto r1 = scan({4}, spec, Params::paper(), default_suite(), o1);
  auto r4 = scan({4}, spec, Params::paper(), default_suite(), o4);
  CHECK(out1.str() == out4.str());
  CHECK(r1.footer_line() == r4.footer_line());
}

TEST_CASE("scan resumes from a checkpoint with an identical footer") {
  GenSpec spec;
  spec.max_internal = 1;
  std::string ckpath = "/tmp/canvaslab_test_ck.json";
  std::remove(ckpath.c_str());

  auto fresh = scan({4}, spec, Params::paper(), default_suite());

  ScanOptions stop;
  stop.stop_after = 5;
  stop.chunk = 4;
  stop.checkpoint_path = ckpath;
  auto partial = scan({4}, spec, Params::paper(), default_suite(), stop);
  CHECK(partial.instances >= 5);
  CHECK(partial.instances < fresh.instances);

  ScanOptions resume;
  resume.checkpoint_path = ckpath;
  auto resumed = scan({4}, spec, Params::paper(), default_suite(), resume);
  CHECK(resumed.instances == fresh.instances);
  CHECK(resumed.footer_line() == fresh.footer_line());
  std::remove(ckpath.c_str());
}

TEST_CASE("violation certificates replay") {
  auto t = fixture_w5();
  // Manufacture a certificate for a statement this canvas genuinely fails:
  // the bare d >= 3 - gamma bound does not hold at v = 1, so fake a record
  // from a passing theorem instead and expect a mismatch; a real violation
  // cannot be produced from a correct implementation.
  auto cert = make_certificate(t, TheoremId::THM_3_4, Params::paper(), "fabricated", 0);
  auto r = replay_certificate(cert);
  CHECK(r.well_formed);
  CHECK_FALSE(r.matches);  // the check passes on replay, exposing the fabrication
}

TEST_CASE("criticality certificates replay and detect tampering") {
  auto t = fixture_w5();
  auto cert = is_critical_canvas(t);
  nlohmann::json j;
  j["type"] = "criticality";
  j["canvas"] = serialize_canvas(t);
  j["verdict"] = cert.verdict;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : cert.witnesses) {
    nlohmann::json row;
    row["edge"] = {w.removed_edge.a, w.removed_edge.b};
    nlohmann::json phi;
    for (int v = 0; v < static_cast<int>(w.phi.color.size()); ++v)
      if (w.phi.color[v] >= 0) phi[std::to_string(v)] = w.phi.color[v];
    row["phi"] = phi;
    ws.push_back(row);
  }
  j["witnesses"] = ws;

  auto ok = replay_certificate(j.dump());
  CHECK(ok.well_formed);
  CHECK(ok.matches);

  // Tamper with one list element of the embedded canvas.
  std::string canvas_text = j["canvas"].get<std::string>();
  auto at = canvas_text.find("\"lists\":[[0]");
  REQUIRE(at != std::string::npos);
  canvas_text.replace(at + 9, 3, "[3]");
  nlohmann::json tampered = j;
  tampered["canvas"] = canvas_text;
  auto bad = replay_certificate(tampered.dump());
  CHECK_FALSE(bad.matches);

  // Truncation is malformed.
  auto trunc = replay_certificate(j.dump().substr(0, 40));
  CHECK_FALSE(trunc.well_formed);
}

TEST_CASE("instance accounting matches the generator") {
  GenSpec spec;
  spec.max_internal = 1;
  InstanceStream stream([&] {
    GenSpec s = spec;
    s.outer_len = 4;
    return s;
  }());
  std::uint64_t emitted = 0;
  while (stream.next()) ++emitted;
  auto rep = scan({4}, spec, Params::paper(), {TheoremId::LEM_3_2});
  CHECK(rep.instances == emitted);
  CHECK(rep.valid_canvases == emitted);
}
