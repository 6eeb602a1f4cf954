// Acceptance suite: one pass/fail line per criterion, exact checks only.

#include <chrono>
#include <iostream>

#include "frontlab/fixtures.hpp"
#include "frontlab/invariants.hpp"
#include "frontlab/orbifold.hpp"
#include "frontlab/report.hpp"
#include "frontlab/verify.hpp"

using namespace frontlab;

namespace {

int g_failures = 0;

void outcome(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << name << ": " << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string first_failure(const SuiteResult& r) {
  if (r.ok()) return "";
  return r.failures.front().id + ": " + r.failures.front().message;
}

}  // namespace

int main() {
  VerifyOptions opt;
  opt.seed = 20240801;
  opt.count = 20;    // instances per move family
  opt.corpus = 100;  // corpus size

  // A1: move invariance across >= 7 families x >= 20 seeded instances, < 30 s.
  {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = run_moves_suite(opt);
    double dt = seconds_since(t0);
    bool enough = r.cases >= 7 * 20;
    outcome("A1 move invariance (l, l_q, S, l_F, S'_K)",
            r.ok() && enough && dt < 30.0,
            r.ok() ? (enough ? "runtime " + std::to_string(dt) + "s"
                             : "too few cases")
                   : first_failure(r));
  }

  // A2-A6, A10 run over one seeded corpus of >= 100 fronts.
  {
    auto t0 = std::chrono::steady_clock::now();
    int n = opt.corpus;
    int bad_sigma = 0, bad_parity = 0, bad_ident = 0, bad_pr = 0, bad_conv = 0,
        bad_degen = 0;
    std::string d2, d3, d4, d5, d6, d10;
    for (int i = 0; i < n; ++i) {
      std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i) * 101;
      Front f = random_front(seed);
      int h = index_of(f);
      Shadow s = shadow_of_front(f);
      if (sigma(s) != h) {
        ++bad_sigma;
        d2 = "seed " + std::to_string(seed);
      }
      if (!parity_check(s)) {
        ++bad_parity;
        d3 = "seed " + std::to_string(seed);
      }
      if (!check_split_identities(f).ok()) {
        ++bad_ident;
        d4 = "seed " + std::to_string(seed);
      }
      if (pr_map_plane(s_lambda(f)) != l_f_plane(f)) {
        ++bad_pr;
        d5 = "seed " + std::to_string(seed);
      }
      LaurentHalf sl = s_lambda(f), ql = lq(f);
      if (to_lq(sl, h) != ql || to_s(ql, h) != sl ||
          ql.eval_one() != Half::whole(bennequin(f))) {
        ++bad_conv;
        d6 = "seed " + std::to_string(seed);
      }
      auto orb = s_lambda_orbifold(f, {});
      LaurentHalf embedded;
      for (const auto& [el, c2] : orb.value.terms2())
        embedded.add_term(
            static_cast<int>(
                orb.context.homology.group->cyclic_exponent(el).get_si()),
            Half::of_twice(c2));
      if (embedded != sl) {
        ++bad_degen;
        d10 = "seed " + std::to_string(seed);
      }
    }
    double dt = seconds_since(t0);
    outcome("A2 sigma(shadow) = index over the corpus",
            bad_sigma == 0 && dt < 30.0,
            bad_sigma ? d2 : "runtime " + std::to_string(dt) + "s");
    outcome("A3 gleam parity over the corpus", bad_parity == 0, d3);
    outcome("A4 split identities at every double point", bad_ident == 0, d4);
    outcome("A5 pr(S(lambda)) = l_F over the corpus", bad_pr == 0, d5);
    outcome("A6 conversion round trips and q = 1 specialization", bad_conv == 0,
            d6);
    outcome("A10 cone-free orbifold value embeds to the plane value",
            bad_degen == 0, d10);
  }

  // A7: wall-crossing jumps on >= 10 pairs.
  {
    SuiteResult r = run_wall_suite(opt);
    outcome("A7 dangerous-tangency jump (f-1)(f^a + f^b)",
            r.ok() && r.cases >= 10,
            r.ok() ? "only " + std::to_string(r.cases) + " pairs"
                   : first_failure(r));
  }

  // A8: relation-generator consistency and cone passages, < 30 s.
  {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = run_orbifold_suite(opt);
    double dt = seconds_since(t0);
    outcome("A8 R-generator consistency (mu <= 12) and cone passages",
            r.ok() && dt < 30.0,
            r.ok() ? "runtime " + std::to_string(dt) + "s" : first_failure(r));
  }

  // A9: quantum decomposition reconstructions.
  {
    SuiteResult r = run_quantum_suite(opt);
    outcome("A9 quantum decomposition (500 reconstructions)",
            r.ok() && r.cases >= 500, first_failure(r));
  }

  // A11: calibration uniqueness.
  {
    SuiteResult r = run_calibration_suite(opt);
    outcome("A11 calibration uniqueness (labeling and corner rule)", r.ok(),
            first_failure(r));
  }

  // Fixture anchors.
  {
    bool ok = bennequin(circle_fixture()) == 1;
    outcome("anchor l(circle) = 1", ok);
    ok = bennequin(saucer_fixture()) == 1;
    outcome("anchor l(saucer) = 1", ok);
    LaurentHalf fm1;
    fm1.add_term(1, Half::whole(1));
    fm1.add_term(0, Half::whole(-1));
    outcome("anchor S(saucer) = f - 1", s_lambda(saucer_fixture()) == fm1);
    outcome("anchor l_q(saucer) = 1",
            lq(saucer_fixture()) == LaurentHalf::constant(Half::whole(1)));
    outcome("anchor S(eight) = f - 1", s_lambda(eight_fixture()) == fm1);
    outcome("anchor S'_K(eight) = 0", sk_polynomial(eight_fixture()).is_zero());
    bool lens_ok = true;
    for (int k : {1, 2, 3}) {
      LensFixture lf = lens_fixture(k, 5);
      SeifertHomology h = seifert_homology(lf.orbifold);
      GroupElement cls = class_of_front(lf.front, lf.orbifold, h);
      GroupElement want = h.group->mul(h.f(), h.group->pow(h.fa(0), -k));
      if (!(cls == want)) lens_ok = false;
    }
    outcome("anchor class(lens k, mu) = f * fa^{-k}", lens_ok);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL")
            << " (" << g_failures << " failing criteria)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
