#pragma once

#include "wallcx/builders.hpp"
#include "wallcx/homology.hpp"
#include "wallcx/rng.hpp"
#include "wallcx/wall.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wallcx {

/* One named check with a three-valued verdict. FAIL means the claimed
   property was refuted on the stated parameters; INCONCLUSIVE means a
   resource cap stopped the check before it could decide. The wall-clock
   time is informational and deliberately kept out of canonical report
   text so that reports stay byte-identical across runs. */
struct CheckResult {
  std::string id;
  std::string claim;
  Verdict verdict = Verdict::FAIL;
  std::string parameters;
  std::string note;
  double seconds = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t budget = 2;
  std::vector<CheckResult> checks;

  bool any(Verdict v) const;
  /* 0 all pass, 1 any fail, 2 no fail but something inconclusive. */
  int exit_code() const;
  std::string to_text(bool timings = false) const;
};

/* Algebra layer. */
CheckResult check_generator_tables(std::size_t max_g);
CheckResult check_lambda_bilinear(std::size_t max_g, coeff_t bound);
CheckResult check_q_bilinear(std::size_t max_g, coeff_t bound);
CheckResult check_alpha_summation(std::size_t max_g, coeff_t bound);
CheckResult check_rho_uniqueness(std::size_t max_g);
CheckResult check_complement_rank(std::size_t g, std::size_t trials, coeff_t bound,
                                  std::uint64_t seed);
CheckResult check_torsion_duality(std::size_t max_g, std::size_t trials,
                                  std::uint64_t seed);

/* Poset layer. The two seeded checks regenerate the same instance list
   from the same seed, so they exercise identical posets. */
CheckResult check_link_suspension(std::size_t instances, std::uint64_t seed);
CheckResult check_extendable_inclusion(std::size_t instances, std::uint64_t seed);
CheckResult check_retraction(std::size_t max_g, const EnumerationBounds& b);
CheckResult check_restriction_identities(std::size_t max_g, const EnumerationBounds& b);
CheckResult check_splitting_bijection(std::size_t g, const EnumerationBounds& b);
CheckResult check_link_identification(std::size_t g, const EnumerationBounds& b);

/* Homology calibration. */
CheckResult check_sphere_boundaries(std::size_t max_k);
CheckResult check_projective_plane();
CheckResult check_euler_identity();

/* Expanding-bound connectivity probes. */
enum class ProbeFamily { unimodular, pair_complex };
CheckResult check_family_connectivity(ProbeFamily fam, std::size_t g, long long degree,
                                      std::size_t initial_bound, std::size_t budget);

/* The seeded random chain-condition poset used by the poset checks,
   exposed so tests can pin its shape. */
SequencePoset random_chain_poset(Rng& rng, std::size_t max_ground);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 2;
  /* 0 consults the WALLCX_WORKERS environment variable, defaulting to 1.
     Checks are independent, so the report does not depend on the pool
     size; results are assembled in canonical order afterward. */
  std::size_t workers = 0;
};

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace wallcx
