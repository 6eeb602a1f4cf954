#include "frontlab/verify.hpp"

#include <sstream>

#include "frontlab/orbifold.hpp"

namespace frontlab {

namespace {

std::string fixture_repro(const std::string& what, std::uint64_t seed) {
  std::ostringstream os;
  os << "frontlab fixtures " << what << " --seed " << seed;
  return os.str();
}

}  // namespace

LaurentHalf s_lambda_with_sign(const Front& f, int plus_corner_sign) {
  int h = index_of(f);
  auto cd = cusp_data(f);
  LaurentHalf out;
  for (const auto& v : double_points(f)) {
    auto [plus, minus] = smooth_split_labeled(f, v, plus_corner_sign);
    int ip = index_of(plus), im = index_of(minus);
    out.add_term(ip + (1 - v.eps) / 2, Half::whole(1));
    out.add_term(im + (1 + v.eps) / 2, Half::whole(-1));
  }
  out.add_term(1, cd.c_plus);
  out.add_term(h, -cd.c_plus);
  out.add_term(h + 1, cd.c_minus);
  out.add_term(0, -cd.c_minus);
  return out;
}

RuleOutcome shadow_rule_outcome(const Front& f, bool corner_rule_same,
                                bool tamper_gleam) {
  Arrangement arr(f);
  RuleOutcome out;
  Half acc = Half::of_twice(0);
  for (const auto& r : arr.regions()) {
    RegionStats st = arr.stats_with_rule(r.id, corner_rule_same);
    if (!r.compact) continue;
    Half gleam = Half::of_twice(2 * st.chi + st.c_in - st.c_out - st.v_corners);
    if (tamper_gleam) gleam = gleam + Half::whole(1);
    bool even_corners = st.corner_visits % 2 == 0;
    if (gleam.is_integer() != even_corners) out.parity_holds = false;
    acc = acc + gleam * arr.region_index(r.id);
  }
  if (!acc.is_integer() || acc.as_integer() != index_of(f))
    out.sigma_matches_index = false;
  return out;
}

SuiteResult run_moves_suite(const VerifyOptions& opt) {
  SuiteResult res{"moves", 0, {}};
  for (MoveFamily fam : all_move_families()) {
    for (int i = 0; i < opt.count; ++i) {
      std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
      std::string id = family_name(fam) + "#" + std::to_string(seed);
      std::string repro = fixture_repro(family_name(fam), seed);
      res.cases++;
      try {
        MovePair mp = move_pair(fam, seed);
        auto vb = validate(mp.before), va = validate(mp.after);
        if (!vb.ok() || !va.ok()) {
          res.failures.push_back({id, "fixture not generic: " + vb.summary() +
                                          va.summary(), repro});
          continue;
        }
        // Combinatorial shape of the move.  A cusp birth carries the new
        // crossing of the freshly grown tail along with the two folds.
        int want_cusps = 0, want_cross = 0;
        switch (fam) {
          case MoveFamily::kCuspBirthA:
          case MoveFamily::kCuspBirthB:
            want_cusps = 2;
            want_cross = 1;
            break;
          case MoveFamily::kSafeTangency1:
          case MoveFamily::kSafeTangency2:
          case MoveFamily::kSafeTangency3: want_cross = 2; break;
          default: break;
        }
        if (mp.delta_cusps != want_cusps)
          res.failures.push_back({id, "cusp delta " + std::to_string(mp.delta_cusps) +
                                          " wanted " + std::to_string(want_cusps),
                                  repro});
        if (mp.delta_crossings != want_cross)
          res.failures.push_back(
              {id, "crossing delta " + std::to_string(mp.delta_crossings) +
                       " wanted " + std::to_string(want_cross),
               repro});

        if (bennequin(mp.before) != bennequin(mp.after))
          res.failures.push_back({id, "l changed across the move", repro});
        if (lq(mp.before) != lq(mp.after))
          res.failures.push_back({id, "l_q changed across the move", repro});
        if (s_lambda(mp.before) != s_lambda(mp.after))
          res.failures.push_back({id, "S(lambda) changed across the move", repro});
        if (l_f_plane(mp.before) != l_f_plane(mp.after))
          res.failures.push_back({id, "l_F changed across the move", repro});
        if (sk_polynomial(mp.before) != sk_polynomial(mp.after))
          res.failures.push_back({id, "S'_K changed across the move", repro});
      } catch (const std::exception& e) {
        res.failures.push_back({id, std::string("exception: ") + e.what(), repro});
      }
    }
  }
  return res;
}

SuiteResult run_identities_suite(const VerifyOptions& opt) {
  SuiteResult res{"identities", 0, {}};
  for (int i = 0; i < opt.corpus; ++i) {
    std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i) * 101;
    std::string id = "corpus#" + std::to_string(seed);
    std::string repro = fixture_repro("corpus", seed);
    res.cases++;
    try {
      Front f = random_front(seed);
      int h = index_of(f);

      // sigma = ind and gleam parity (optionally tampered as a negative control).
      Shadow s = shadow_of_front(f);
      if (opt.tamper_gleam) {
        for (auto& r : s.regions)
          if (r.gleam) r.gleam = *r.gleam + Half::whole(1);
      }
      if (sigma(s) != h)
        res.failures.push_back({id, "sigma != index", repro});
      if (!parity_check(s))
        res.failures.push_back({id, "gleam parity violated", repro});

      // Split identities at every double point.
      auto idrep = check_split_identities(f);
      for (const auto& fail : idrep.failures)
        res.failures.push_back(
            {id, "double point " + std::to_string(fail.double_point) + ": " +
                     fail.what,
             repro});

      // Projection identity.
      if (pr_map_plane(s_lambda(f)) != l_f_plane(f))
        res.failures.push_back({id, "pr(S(lambda)) != l_F", repro});

      // Conversion round trips and the q = 1 specialization.
      LaurentHalf sl = s_lambda(f), ql = lq(f);
      if (to_lq(sl, h) != ql)
        res.failures.push_back({id, "to_lq(S) != l_q", repro});
      if (to_s(ql, h) != sl)
        res.failures.push_back({id, "to_s(l_q) != S", repro});
      if (ql.eval_one() != Half::whole(bennequin(f)))
        res.failures.push_back({id, "l_q at q=1 != l", repro});

      // Orbifold degeneration with an empty cone list.
      OrbifoldDisk none;
      auto orb = s_lambda_orbifold(f, none);
      LaurentHalf embedded;
      for (const auto& [g, c] : orb.value.terms2()) {
        Int e = orb.context.homology.group->cyclic_exponent(g);
        embedded.add_term(static_cast<int>(e.get_si()), Half::of_twice(c));
      }
      if (embedded != sl)
        res.failures.push_back({id, "cone-free orbifold value != plane value", repro});
    } catch (const std::exception& e) {
      res.failures.push_back({id, std::string("exception: ") + e.what(), repro});
    }
  }
  return res;
}

SuiteResult run_orbifold_suite(const VerifyOptions& opt) {
  SuiteResult res{"orbifold", 0, {}};
  res.cases++;
  auto rep = verify_r_consistency(12);
  for (const auto& e : rep.def_bar_mismatches)
    res.failures.push_back({"r_consistency mu=" + std::to_string(e.mu) +
                                " lambda=" + e.lambda_name,
                            e.what, "frontlab verify --suite orbifold"});

  for (int mu : {2, 3, 4, 5}) {
    for (bool reversed : {false, true}) {
      res.cases++;
      std::string id = "cone_passage mu=" + std::to_string(mu) +
                       (reversed ? " reversed" : "");
      std::string repro = fixture_repro("cone_passage", opt.seed) +
                          " --mu " + std::to_string(mu);
      try {
        ConePassagePair cp = cone_passage_pair(mu, reversed, opt.seed);
        auto vb = validate(cp.before), va = validate(cp.after);
        if (!vb.ok() || !va.ok()) {
          res.failures.push_back(
              {id, "fixture not generic: " + vb.summary() + va.summary(), repro});
          continue;
        }
        SeifertHomology h = seifert_homology(cp.orbifold);
        auto before = s_lambda_orbifold(cp.before, cp.orbifold, h);
        auto after = s_lambda_orbifold(cp.after, cp.orbifold, h);
        if (!equal_in_J(before.value, after.value, after.context))
          res.failures.push_back({id, "S(lambda) not equal in J across the passage",
                                  repro});
      } catch (const std::exception& e) {
        res.failures.push_back({id, std::string("exception: ") + e.what(), repro});
      }
    }
  }
  return res;
}

SuiteResult run_wall_suite(const VerifyOptions& opt) {
  SuiteResult res{"wall", 0, {}};
  int total = 0;
  for (int variant = 0; variant < wall_pair_variants() && total < 12; ++variant) {
    for (int rep = 0; rep < 2 && total < 12; ++rep, ++total) {
      std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(rep);
      std::string id = "wall#" + std::to_string(variant) + "." + std::to_string(seed);
      std::string repro = fixture_repro("wall", seed) + " --variant " +
                          std::to_string(variant);
      res.cases++;
      try {
        WallPair wp = wall_pair(variant, seed);
        auto vb = validate(wp.before), va = validate(wp.after);
        if (!vb.ok() || !va.ok()) {
          res.failures.push_back(
              {id, "fixture not generic: " + vb.summary() + va.summary(), repro});
          continue;
        }
        LaurentHalf delta =
            wall_crossing_delta(wp.before, wp.after, {wp.loop_ind_a, wp.loop_ind_b});
        LaurentHalf want;  // (f - e)(f^a + f^b)
        want.add_term(wp.loop_ind_a + 1, Half::whole(1));
        want.add_term(wp.loop_ind_b + 1, Half::whole(1));
        want.add_term(wp.loop_ind_a, Half::whole(-1));
        want.add_term(wp.loop_ind_b, Half::whole(-1));
        if (delta != want && delta != -want)
          res.failures.push_back(
              {id,
               "jump " + delta.str("f") + " is not +-[(f-1)(f^a+f^b)] with a=" +
                   std::to_string(wp.loop_ind_a) + " b=" +
                   std::to_string(wp.loop_ind_b),
               repro});
      } catch (const std::exception& e) {
        res.failures.push_back({id, std::string("exception: ") + e.what(), repro});
      }
    }
  }
  return res;
}

SuiteResult run_quantum_suite(const VerifyOptions& opt) {
  SuiteResult res{"quantum", 0, {}};
  Rng rng(opt.seed ^ 0xabcdef1234567ull);
  for (int i = 0; i < 500; ++i) {
    res.cases++;
    std::string id = "quant#" + std::to_string(i);
    // Random valid combination: distinct |m| in [1,12], n_m in (0,5] half-ints.
    std::map<int, Half> truth;
    int terms = static_cast<int>(1 + rng.below(5));
    for (int t = 0; t < terms; ++t) {
      int mag = static_cast<int>(1 + rng.below(12));
      int m = rng.coin() ? mag : -mag;
      if (truth.count(m) || truth.count(-m)) continue;
      truth[m] = Half::of_twice(rng.range(1, 10));
    }
    LaurentHalf p;
    for (const auto& [m, n] : truth) p = p + quantum_number(m).scaled(n);
    try {
      auto back = quantum_decompose(p);
      if (back != truth) {
        res.failures.push_back({id, "reconstruction mismatch", ""});
        continue;
      }
      for (const auto& [m, n] : back) {
        if (m == 0) res.failures.push_back({id, "n_0 present", ""});
        if (!(n > Half::whole(0))) res.failures.push_back({id, "n_m <= 0", ""});
        if (back.count(-m)) res.failures.push_back({id, "m and -m both present", ""});
      }
    } catch (const std::exception& e) {
      res.failures.push_back({id, std::string("exception: ") + e.what(), ""});
    }
  }
  // Asymmetric input must be rejected.
  res.cases++;
  try {
    quantum_decompose(LaurentHalf::monomial(1, Half::whole(1)));
    res.failures.push_back({"quant#asym", "asymmetric input accepted", ""});
  } catch (const AlgebraError&) {
  }
  return res;
}

SuiteResult run_calibration_suite(const VerifyOptions& opt) {
  SuiteResult res{"calibration", 0, {}};

  // Corner rule: sigma = ind and parity over the corpus must hold for exactly
  // one of the two candidate rules.
  bool rule_ok[2] = {true, true};  // index 0: mixed, 1: same
  int corpus = std::max(20, opt.corpus / 2);
  for (int i = 0; i < corpus; ++i) {
    std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i) * 13;
    Front f = random_front(seed);
    for (int rule = 0; rule < 2; ++rule) {
      if (!rule_ok[rule]) continue;
      RuleOutcome oc = shadow_rule_outcome(f, rule == 1, opt.tamper_gleam);
      if (!oc.sigma_matches_index || !oc.parity_holds) rule_ok[rule] = false;
    }
  }
  // The nested-loop fixture separates the rules even on a tiny corpus.
  for (Front f : {eight_fixture(), limacon_fixture()}) {
    for (int rule = 0; rule < 2; ++rule) {
      if (!rule_ok[rule]) continue;
      RuleOutcome oc = shadow_rule_outcome(f, rule == 1, opt.tamper_gleam);
      if (!oc.sigma_matches_index || !oc.parity_holds) rule_ok[rule] = false;
    }
  }
  res.cases++;
  if (rule_ok[0] == rule_ok[1])
    res.failures.push_back({"corner-rule",
                            rule_ok[0] ? "both corner rules pass"
                                       : "no corner rule passes",
                            "frontlab verify --suite calibration"});
  else if (!rule_ok[kCornerRuleSame ? 1 : 0])
    res.failures.push_back({"corner-rule",
                            "the frozen corner rule is not the passing one",
                            "frontlab verify --suite calibration"});

  // Split labeling: S(lambda) must be move-invariant for exactly one corner
  // sign.
  bool sign_ok[2] = {true, true};  // index 0: -1, 1: +1
  for (MoveFamily fam : all_move_families()) {
    for (int i = 0; i < std::max(3, opt.count / 4); ++i) {
      MovePair mp = move_pair(fam, opt.seed + static_cast<std::uint64_t>(i));
      for (int si = 0; si < 2; ++si) {
        if (!sign_ok[si]) continue;
        int sign = si == 0 ? -1 : +1;
        if (s_lambda_with_sign(mp.before, sign) != s_lambda_with_sign(mp.after, sign))
          sign_ok[si] = false;
      }
    }
  }
  res.cases++;
  if (sign_ok[0] == sign_ok[1])
    res.failures.push_back({"split-labeling",
                            sign_ok[0] ? "both labelings pass" : "no labeling passes",
                            "frontlab verify --suite calibration"});
  else if (!sign_ok[kSplitPlusCornerSign > 0 ? 1 : 0])
    res.failures.push_back({"split-labeling",
                            "the frozen labeling is not the passing one",
                            "frontlab verify --suite calibration"});
  return res;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt) {
  return {run_moves_suite(opt),    run_identities_suite(opt),
          run_orbifold_suite(opt), run_wall_suite(opt),
          run_quantum_suite(opt),  run_calibration_suite(opt)};
}

}  // namespace frontlab
