#ifndef FINTOP_PIPELINE_HPP
#define FINTOP_PIPELINE_HPP

#include <functional>
#include <string>
#include <vector>

#include "fintop/h1_action.hpp"
#include "fintop/presentation.hpp"

namespace fintop {

struct StageRecord {
  std::string name;
  std::string hash;
  std::vector<std::pair<std::string, long long>> sizes;
  double millis = 0.0;
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PipelineReport {
  std::vector<StageRecord> stages;
  std::vector<CheckRecord> checks;

  long long aut_order = -1;
  AbelianGroup h1;
  AbelianGroup target_abelianization;
  std::vector<std::pair<std::string, std::string>> action_matrices;  // element -> matrix text
  std::string equivalence;  // equivalent / not_equivalent / inconclusive
  bool minimal = false;
  int w_level = 0;
  int band_dimension = 0;
  bool include_timings = false;
  bool ok = false;

  std::string to_json() const;
};

struct VerifyOptions {
  int band_dimension = 0;           // <= 0: max(3, dim K + 2)
  int w_level = 0;                  // <= 0: auto by chain length
  bool timings = false;             // include stage timings in the report
  std::uint64_t aut_budget = 400000000ULL;
  std::function<void(const std::string&)> log;  // progress lines (stderr-style)
};

// Runs the full chain: symmetric presentation, presentation complex with its
// G-action, rigidification (trivial-group variant for |G| = 1), face poset,
// beat-point gluing, then verifies minimality, automorphism count, H1 and the
// equivalence of the induced H1 action with the input action.
PipelineReport run_verify(const GroupAction& action, const VerifyOptions& opts = {});

}  // namespace fintop

#endif
