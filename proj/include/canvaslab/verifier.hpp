// Scan harness: runs every checkable statement over generated or supplied
// instances and emits machine-replayable violation certificates (expected:
// none) plus deterministic aggregate reports.
#ifndef CANVASLAB_VERIFIER_HPP
#define CANVASLAB_VERIFIER_HPP

#include <iosfwd>
#include <map>

#include "canvaslab/critical.hpp"
#include "canvaslab/deficiency.hpp"
#include "canvaslab/genlab.hpp"
#include "canvaslab/structure.hpp"

namespace canvaslab {

enum class TheoremId {
  THM_2_8,     // chord or pod vertex on critical canvases
  PROP_2_10_1, // no material inside cycles of length <= 4
  PROP_2_10_2, // internal degree >= 5
  THM_3_4,     // def >= 1
  LEM_3_2,     // face formula for def
  LEM_3_3,     // def decomposition identity
  LEM_3_5,     // def >= 2v - |E(G - V(C))|
  PROP_4_3,    // v/b/q/s/d comparisons under decomposition
  COR_4_4,     // split bounds
  PROP_4_5,    // closed forms for d when v <= 1
  THM_4_6,     // d >= 3 - gamma when v >= 2
  THM_6_1,     // v/18 + sum(|f|-3) <= |C| - 4
  COR_6_2,     // |f| < |C| - 1
  THM_6_3,     // |V(G)| <= 19 |V(C)|
  COR_2_7,     // subcycle criticality
  LEM_2_4,     // critical graphs are 2-connected
};

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& s);
std::vector<TheoremId> all_theorems();
// Everything except the subcycle criticality sweep, which re-certifies a
// canvas per cycle and dominates runtime.
std::vector<TheoremId> default_suite();

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckOutcome {
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;  // skip reason or failure detail
};

struct InstanceResult {
  bool valid_canvas = false;
  bool critical = false;
  int criticality_witnesses = 0;
  std::map<TheoremId, CheckOutcome> outcomes;
};

// Evaluates the selected statements on one canvas. Criticality-dependent
// checks run only when the canvas is certified critical and are reported
// as skipped otherwise.
InstanceResult check_instance(const Canvas& t, const Params& p,
                              const std::vector<TheoremId>& suite,
                              ColorCache* cache = nullptr);

struct ViolationRecord {
  std::uint64_t ordinal = 0;
  TheoremId theorem;
  std::string certificate;  // self-contained JSON, see replay_certificate
};

struct ScanReport {
  std::vector<int> outer_lens;
  GenSpec spec_template;            // k is taken from outer_lens
  Params params = Params::paper();
  std::vector<TheoremId> suite;
  std::uint64_t instances = 0;      // equals the generator's emitted count
  std::uint64_t valid_canvases = 0;
  std::uint64_t critical_instances = 0;
  std::map<TheoremId, std::uint64_t> pass, fail, skip;
  std::vector<ViolationRecord> violations;
  double wall_seconds = 0;          // never serialized into the report body

  std::string header_line() const;  // spec echo, deterministic
  std::string footer_line() const;  // aggregate, deterministic
};

struct ScanOptions {
  int jobs = 1;
  bool verbose = false;             // per-instance report lines
  std::uint64_t stop_after = 0;     // pause after this many instances (0 = run out)
  std::string checkpoint_path;      // load if present, saved on pause/finish
  std::ostream* report_sink = nullptr;
  size_t chunk = 64;                // instances handed to the workers at a time
};

// Folds check_instance over the generated stream, instance-parallel with a
// deterministic merge; the report is byte-identical for any job count and
// across checkpoint/resume.
ScanReport scan(const std::vector<int>& outer_lens, const GenSpec& spec_template,
                const Params& p, const std::vector<TheoremId>& suite,
                const ScanOptions& options = {});

// Serialized violation certificate for one canvas + theorem.
std::string make_certificate(const Canvas& t, TheoremId id, const Params& p,
                             const std::string& detail, std::uint64_t ordinal);

struct ReplayResult {
  bool well_formed = false;
  bool matches = false;  // re-run agrees with the recorded verdict
  std::string message;
};

ReplayResult replay_certificate(const std::string& json_text);

}  // namespace canvaslab

#endif
