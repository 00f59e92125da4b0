#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uglov/error.hpp"
#include "uglov/relabel.hpp"

namespace uglov {

// Shared knobs for the verification grids.  budget caps the number of
// bipartitions any one suite may enumerate; jobs bounds the worker pool.
struct VerifyOptions {
  int e_min = 2, e_max = 4;
  int n_min = 0, n_max = 8;
  long long budget = 1'000'000;
  int jobs = 1;
  unsigned seed = 20260822;
  int samples = 1000;            // inverse-law suite
  std::optional<Charge> window;  // restrict window-grid suites to one charge
};

struct SuiteResult {
  std::string suite;
  long long checks = 0;
  long long failures = 0;
  double seconds = 0.0;
  std::vector<std::string> messages; // first few failure details

  bool ok() const { return failures == 0; }
};

// pair_swap == relabel_recursive pointwise over every window 0<=s0<=s1<e.
SuiteResult verify_main(const VerifyOptions& opts);
// enumerate_uglov == brute-force FLOTW filter per rank.
SuiteResult verify_flotw(const VerifyOptions& opts);
// Uglov set == asymptotic set once the charge gap passes the threshold,
// on both sides (minus: s1-s0 in {n, n+1}; plus: s0-s1 in {n-e, n+1-e}).
SuiteResult verify_stabilize(const VerifyOptions& opts);
// top_degree_term == pair_swap, with a unique maximal degree.
SuiteResult verify_degree_max(const VerifyOptions& opts);
// |set| preserved and relabel image exactly the target set, for a family of
// congruence-compatible source/target pairs (shift, swap, raises, asymptotic).
SuiteResult verify_cardinality(const VerifyOptions& opts);
// padding independence of pair_swap and pair_swap_inverse . pair_swap == id
// on randomized members.
SuiteResult verify_inverse(const VerifyOptions& opts);
// basic_set_charge against exhaustive modular arithmetic, even l only.
SuiteResult verify_hecke(const VerifyOptions& opts);

std::vector<SuiteResult> verify_all(const VerifyOptions& opts);

// Suites by CLI name: main | flotw | stabilize | degree-max | cardinality |
// inverse | hecke | all.
std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opts);

} // namespace uglov
