#include "doctest.h"
#include "frontlab/fixtures.hpp"
#include "frontlab/verify.hpp"

using namespace frontlab;

TEST_CASE("move pairs are generic and have the right combinatorial deltas") {
  for (MoveFamily fam : all_move_families()) {
    CAPTURE(family_name(fam));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      MovePair mp = move_pair(fam, seed);
      auto vb = validate(mp.before);
      auto va = validate(mp.after);
      CAPTURE(vb.summary());
      CAPTURE(va.summary());
      CHECK(vb.ok());
      CHECK(va.ok());
      switch (fam) {
        case MoveFamily::kCuspBirthA:
        case MoveFamily::kCuspBirthB:
          CHECK(mp.delta_cusps == 2);
          CHECK(mp.delta_crossings == 1);
          break;
        case MoveFamily::kSafeTangency1:
        case MoveFamily::kSafeTangency2:
        case MoveFamily::kSafeTangency3:
          CHECK(mp.delta_cusps == 0);
          CHECK(mp.delta_crossings == 2);
          break;
        case MoveFamily::kTriplePoint1:
        case MoveFamily::kTriplePoint2:
        case MoveFamily::kCuspCrossing:
          CHECK(mp.delta_cusps == 0);
          CHECK(mp.delta_crossings == 0);
          break;
      }
    }
  }
}

TEST_CASE("move pairs are deterministic under the seed") {
  MovePair a = move_pair(MoveFamily::kSafeTangency2, 9);
  MovePair b = move_pair(MoveFamily::kSafeTangency2, 9);
  CHECK(serialize_front(a.before) == serialize_front(b.before));
  CHECK(serialize_front(a.after) == serialize_front(b.after));
}

TEST_CASE("wall pairs are generic with measured loops") {
  for (int variant = 0; variant < wall_pair_variants(); ++variant) {
    CAPTURE(variant);
    WallPair wp = wall_pair(variant, 3);
    auto vb = validate(wp.before);
    auto va = validate(wp.after);
    CAPTURE(vb.summary());
    CAPTURE(va.summary());
    CHECK(vb.ok());
    CHECK(va.ok());
    CHECK(static_cast<int>(double_points(wp.after).size()) -
              static_cast<int>(double_points(wp.before).size()) ==
          2);
  }
}

TEST_CASE("cone passage fixtures are generic") {
  for (int mu : {2, 3, 4, 5}) {
    CAPTURE(mu);
    for (bool rev : {false, true}) {
      ConePassagePair cp = cone_passage_pair(mu, rev, 1);
      auto vb = validate(cp.before);
      auto va = validate(cp.after);
      CAPTURE(vb.summary());
      CAPTURE(va.summary());
      CHECK(vb.ok());
      CHECK(va.ok());
      CHECK_FALSE(point_on_front(cp.before, Pt{Rat(0), Rat(0)}));
      CHECK_FALSE(point_on_front(cp.after, Pt{Rat(0), Rat(0)}));
    }
  }
}

TEST_CASE("random corpus fronts are valid and deterministic") {
  CorpusOptions opt;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Front f = random_front(seed, opt);
    CAPTURE(seed);
    CHECK(validate(f).ok());
    CHECK(static_cast<int>(double_points(f).size()) <= opt.max_crossings);
    CHECK(f.cusp_count() <= opt.max_cusps);
    Front g = random_front(seed, opt);
    CHECK(serialize_front(f) == serialize_front(g));
  }
  // Some corpus members must actually carry crossings and cusps.
  int with_cross = 0, with_cusp = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Front f = random_front(seed, opt);
    if (!double_points(f).empty()) ++with_cross;
    if (f.cusp_count() > 0) ++with_cusp;
  }
  CHECK(with_cross >= 10);
  CHECK(with_cusp >= 10);
}

TEST_CASE("negative control: tampered gleams fail the identities suite") {
  VerifyOptions opt;
  opt.seed = 2;
  opt.corpus = 3;
  opt.count = 2;
  opt.tamper_gleam = true;
  SuiteResult res = run_identities_suite(opt);
  CHECK_FALSE(res.ok());
}
