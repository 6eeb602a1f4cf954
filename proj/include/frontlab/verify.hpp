#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frontlab/fixtures.hpp"
#include "frontlab/invariants.hpp"
#include "frontlab/shadow.hpp"

namespace frontlab {

struct VerifyFailure {
  std::string id;       // fixture or case identifier
  std::string message;  // what went wrong
  std::string repro;    // command line reproducing the case
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int count = 20;          // instances per move family
  int corpus = 100;        // corpus size for the identity suites
  bool tamper_gleam = false;  // negative control: corrupt every gleam by one
};

// Move invariance of l, l_q, S(lambda), l_F and the split polynomial across
// seeded before/after pairs of every family, plus the combinatorial deltas.
SuiteResult run_moves_suite(const VerifyOptions& opt);

// sigma = ind, gleam parity, the per-crossing split identities, the
// projection identity, the conversion round trips, and the orbifold
// degeneration over a seeded random corpus.
SuiteResult run_identities_suite(const VerifyOptions& opt);

// Relation-generator consistency up to mu = 12 and cone-passage pairs.
SuiteResult run_orbifold_suite(const VerifyOptions& opt);

// Wall-crossing pairs: the s_lambda jump must match the two loop classes.
SuiteResult run_wall_suite(const VerifyOptions& opt);

// Quantum decomposition round trips and constraint checks.
SuiteResult run_quantum_suite(const VerifyOptions& opt);

// Exactly one labeling convention and exactly one corner rule pass; the
// frozen constants must be the winners.
SuiteResult run_calibration_suite(const VerifyOptions& opt);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt);

// s_lambda computed under an explicit labeling convention (calibration).
LaurentHalf s_lambda_with_sign(const Front& f, int plus_corner_sign);

// sigma and parity under an explicit corner rule (calibration).
struct RuleOutcome {
  bool sigma_matches_index = true;
  bool parity_holds = true;
};
RuleOutcome shadow_rule_outcome(const Front& f, bool corner_rule_same,
                                bool tamper_gleam = false);

}  // namespace frontlab
