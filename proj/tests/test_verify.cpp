#include "wallcx/verify.hpp"

#include "wallcx/seq_poset.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdlib>

using namespace wallcx;

namespace {

CheckResult made(const char* id, Verdict v) {
  CheckResult c;
  c.id = id;
  c.claim = "x";
  c.verdict = v;
  return c;
}

}  // namespace

TEST_CASE("report verdict dominance and exit codes") {
  VerificationReport rep;
  rep.suite = "x";
  rep.checks = {made("a", Verdict::PASS), made("b", Verdict::PASS)};
  CHECK(rep.exit_code() == 0);
  CHECK_FALSE(rep.any(Verdict::FAIL));

  rep.checks.push_back(made("c", Verdict::INCONCLUSIVE));
  CHECK(rep.exit_code() == 2);

  rep.checks.push_back(made("d", Verdict::FAIL));
  CHECK(rep.exit_code() == 1);  // FAIL dominates INCONCLUSIVE

  std::string text = rep.to_text();
  CHECK(text.find("summary: pass=2 fail=1 inconclusive=1") != std::string::npos);
  CHECK(text.find("verdict: FAIL") != std::string::npos);
  CHECK(text.find("time:") == std::string::npos);
  CHECK(rep.to_text(true).find("time:") != std::string::npos);
}

TEST_CASE("suite roster and unknown names") {
  const auto names = suite_names();
  CHECK(names == std::vector<std::string>{"algebra", "posets", "complexes",
                                          "connectivity", "all"});
  SuiteOptions opt;
  CHECK_THROWS_AS(run_suite("algbra", opt), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("", opt), std::invalid_argument);
}

TEST_CASE("the full suite passes and lists every check once in canonical order") {
  SuiteOptions opt;
  opt.seed = 42;
  opt.workers = 4;
  const VerificationReport rep = run_suite("all", opt);
  const std::vector<std::string> expect = {
      "algebra.generator-tables",
      "algebra.lambda-bilinear",
      "algebra.q-bilinear",
      "algebra.alpha-summation",
      "algebra.rho-uniqueness",
      "algebra.complement-rank",
      "algebra.torsion-duality",
      "posets.link-suspension",
      "posets.extendable-inclusion",
      "posets.retraction",
      "posets.restriction-identities",
      "posets.splitting-bijection",
      "posets.link-identification",
      "complexes.sphere-boundaries",
      "complexes.projective-plane",
      "complexes.euler-identity",
      "connectivity.unimodular-rank2-nonempty",
      "connectivity.unimodular-rank3-connected",
      "connectivity.pair-rank1-nonempty",
      "connectivity.pair-rank3-connected",
  };
  REQUIRE(rep.checks.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(rep.checks[i].id == expect[i]);
    CHECK(rep.checks[i].verdict == Verdict::PASS);
  }
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  SuiteOptions a, b;
  a.seed = 7;
  b.seed = 7;
  a.workers = 1;
  b.workers = 3;
  CHECK(run_suite("posets", a).to_text() == run_suite("posets", b).to_text());
  CHECK(run_suite("complexes", a).to_text() == run_suite("complexes", b).to_text());

  SuiteOptions c = a;
  c.seed = 8;
  CHECK(run_suite("posets", a).to_text() != run_suite("posets", c).to_text());
}

TEST_CASE("worker pool size falls back to the environment") {
  setenv("WALLCX_WORKERS", "3", 1);
  SuiteOptions opt;
  opt.seed = 5;
  opt.workers = 0;
  const std::string with_env = run_suite("complexes", opt).to_text();
  unsetenv("WALLCX_WORKERS");
  const std::string without = run_suite("complexes", opt).to_text();
  CHECK(with_env == without);
}

TEST_CASE("random chain posets satisfy the chain condition deterministically") {
  Rng a(99), b(99);
  for (int i = 0; i < 10; ++i) {
    const SequencePoset pa = random_chain_poset(a, 6);
    const SequencePoset pb = random_chain_poset(b, 6);
    CHECK(pa.ground == pb.ground);
    CHECK(pa.elements == pb.elements);
    CHECK(pa.ground.size() >= 3);
    CHECK(pa.ground.size() <= 6);
    CHECK_FALSE(pa.elements.empty());
    CHECK(satisfies_chain_condition(pa));
    const std::size_t longest =
        std::max_element(pa.elements.begin(), pa.elements.end(),
                         [](const Seq& x, const Seq& y) { return x.size() < y.size(); })
            ->size();
    CHECK(longest >= 2);
  }
  CHECK_THROWS_AS(random_chain_poset(a, 2), std::invalid_argument);
}

TEST_CASE("individual checks pass on their reference parameters") {
  EnumerationBounds b1;
  b1.coeff_bound = 1;
  CHECK(check_generator_tables(2).verdict == Verdict::PASS);
  CHECK(check_alpha_summation(2, 1).verdict == Verdict::PASS);
  CHECK(check_rho_uniqueness(2).verdict == Verdict::PASS);
  CHECK(check_complement_rank(3, 10, 2, 11).verdict == Verdict::PASS);
  CHECK(check_torsion_duality(2, 10, 12).verdict == Verdict::PASS);
  CHECK(check_sphere_boundaries(4).verdict == Verdict::PASS);
  CHECK(check_projective_plane().verdict == Verdict::PASS);
  CHECK(check_euler_identity().verdict == Verdict::PASS);
  CHECK(check_retraction(1, b1).verdict == Verdict::PASS);
  CHECK(check_restriction_identities(1, b1).verdict == Verdict::PASS);
  CHECK(check_splitting_bijection(2, b1).verdict == Verdict::PASS);
  CHECK(check_link_identification(2, b1).verdict == Verdict::PASS);
}

TEST_CASE("rank one splitting is vacuous and the guard says so") {
  /* Splitting off the only dual pair empties both sides; the checks
     refuse to call an all-empty comparison a pass. */
  EnumerationBounds b1;
  b1.coeff_bound = 1;
  const CheckResult split = check_splitting_bijection(1, b1);
  CHECK(split.verdict == Verdict::FAIL);
  CHECK(split.note.find("no elements") != std::string::npos);
}

TEST_CASE("vacuous seeded checks fail instead of passing silently") {
  const CheckResult a = check_link_suspension(0, 1);
  CHECK(a.verdict == Verdict::FAIL);
  const CheckResult b = check_extendable_inclusion(0, 1);
  CHECK(b.verdict == Verdict::FAIL);
}

TEST_CASE("a genuinely disconnected family is reported as a failure") {
  /* Rank one: the only primitive bounded vectors are plus and minus the
     generator, two isolated vertices at every bound. */
  const CheckResult nonempty =
      check_family_connectivity(ProbeFamily::unimodular, 1, -1, 1, 0);
  CHECK(nonempty.verdict == Verdict::PASS);
  const CheckResult connected =
      check_family_connectivity(ProbeFamily::unimodular, 1, 0, 1, 1);
  CHECK(connected.verdict == Verdict::FAIL);
  CHECK(connected.note.find("degree 0") != std::string::npos);
}

TEST_CASE("seeded poset checks share their instance stream") {
  const CheckResult a = check_link_suspension(5, 31337);
  const CheckResult b = check_extendable_inclusion(5, 31337);
  CHECK(a.verdict == Verdict::PASS);
  CHECK(b.verdict == Verdict::PASS);
  CHECK(a.parameters.find("seed=31337") != std::string::npos);
  CHECK(b.parameters.find("seed=31337") != std::string::npos);
}
