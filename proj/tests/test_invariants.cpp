#include "doctest.h"
#include "frontlab/fixtures.hpp"
#include "frontlab/invariants.hpp"

using namespace frontlab;

namespace {

LaurentHalf f_minus_one() {
  LaurentHalf p;
  p.add_term(1, Half::whole(1));
  p.add_term(0, Half::whole(-1));
  return p;
}

}  // namespace

TEST_CASE("split indices at the eight crossing") {
  Front e = eight_fixture();
  auto dps = double_points(e);
  REQUIRE(dps.size() == 1);
  auto si = split_indices(e, dps[0]);
  CHECK(si.eps == 1);
  CHECK(si.ind_plus == 1);
  CHECK(si.ind_minus == -1);
  CHECK(si.ind_tilde_plus == 1);
  CHECK(si.ind_tilde_minus == 0);
  CHECK(si.ind_tilde_plus + si.ind_tilde_minus == index_of(e) + 1);
  CHECK((1 - si.eps) / 2 == 0);
}

TEST_CASE("plane invariants on the anchors") {
  Front c = circle_fixture(), s = saucer_fixture(), e = eight_fixture();

  CHECK(s_integer(c) == 0);
  CHECK(s_integer(s) == 0);
  CHECK(s_integer(e) == 1);

  CHECK(bennequin(c) == 1);
  CHECK(bennequin(s) == 1);
  CHECK(bennequin(e) == 1);

  CHECK(lq(c) == LaurentHalf::constant(Half::whole(1)));
  CHECK(lq(s) == LaurentHalf::constant(Half::whole(1)));
  CHECK(lq(e) == LaurentHalf::constant(Half::whole(1)));

  CHECK(s_lambda(c).is_zero());
  CHECK(s_lambda(s) == f_minus_one());
  CHECK(s_lambda(e) == f_minus_one());

  CHECK(l_f_plane(c) == Half::whole(0));
  CHECK(l_f_plane(s) == Half::whole(1));
  CHECK(l_f_plane(e) == Half::whole(1));

  CHECK(sk_polynomial(c).is_zero());
  CHECK(sk_polynomial(e).is_zero());  // its only pair is {1, 0}, excluded
}

TEST_CASE("identity checks pass on fixtures and corpus samples") {
  for (Front f : {circle_fixture(), saucer_fixture(), eight_fixture(),
                  limacon_fixture()})
    CHECK(check_split_identities(f).ok());
  for (std::uint64_t seed : {2u, 8u, 31u})
    CHECK(check_split_identities(random_front(seed)).ok());
}

TEST_CASE("projection of S(lambda) is l_F") {
  for (Front f : {circle_fixture(), saucer_fixture(), eight_fixture(),
                  limacon_fixture()})
    CHECK(pr_map_plane(s_lambda(f)) == l_f_plane(f));
}

TEST_CASE("conversions between S and l_q") {
  SUBCASE("worked examples") {
    CHECK(to_lq(f_minus_one(), 0) == LaurentHalf::constant(Half::whole(1)));

    LaurentHalf f2_minus_one;  // f^2 - 1 with h = 1 -> 1 + q + q^-1
    f2_minus_one.add_term(2, Half::whole(1));
    f2_minus_one.add_term(0, Half::whole(-1));
    LaurentHalf want = LaurentHalf::constant(Half::whole(1)) + quantum_number(2);
    CHECK(to_lq(f2_minus_one, 1) == want);
    CHECK(to_s(want, 1) == f2_minus_one);

    CHECK(to_lq(LaurentHalf{}, 0).is_zero());
    CHECK(to_s(LaurentHalf::constant(Half::whole(1)), 0) == f_minus_one());
    // [h]_q h alone decomposes to the empty S.
    CHECK(to_s(quantum_number(2).scaled(Half::whole(2)), 2).is_zero());
  }
  SUBCASE("asymmetric input is rejected") {
    CHECK_THROWS_AS(to_s(LaurentHalf::monomial(1, Half::whole(1)), 0),
                    AlgebraError);
  }
  SUBCASE("roundtrip on the fixtures") {
    for (Front f : {circle_fixture(), saucer_fixture(), eight_fixture(),
                    limacon_fixture()}) {
      int h = index_of(f);
      CHECK(to_lq(s_lambda(f), h) == lq(f));
      CHECK(to_s(lq(f), h) == s_lambda(f));
      CHECK(lq(f).eval_one() == Half::whole(bennequin(f)));
    }
  }
}

TEST_CASE("wall crossing delta") {
  SUBCASE("identical fronts give zero") {
    Front f = eight_fixture();
    CHECK(wall_crossing_delta(f, f, {0, 0}).is_zero());
  }
  SUBCASE("pairs jump by (f-1)(f^a + f^b)") {
    for (int variant = 0; variant < wall_pair_variants(); ++variant) {
      WallPair wp = wall_pair(variant, 5);
      REQUIRE(validate(wp.before).ok());
      REQUIRE(validate(wp.after).ok());
      LaurentHalf delta =
          wall_crossing_delta(wp.before, wp.after, {wp.loop_ind_a, wp.loop_ind_b});
      LaurentHalf want;
      want.add_term(wp.loop_ind_a + 1, Half::whole(1));
      want.add_term(wp.loop_ind_b + 1, Half::whole(1));
      want.add_term(wp.loop_ind_a, Half::whole(-1));
      want.add_term(wp.loop_ind_b, Half::whole(-1));
      bool match = delta == want || delta == -want;
      CHECK(match);
    }
  }
  SUBCASE("unrelated fronts are rejected") {
    CHECK_THROWS_AS(
        wall_crossing_delta(circle_fixture(), saucer_fixture(), {0, 0}),
        FrontError);
  }
}
