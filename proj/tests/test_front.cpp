#include "doctest.h"
#include "frontlab/fixtures.hpp"
#include "frontlab/front.hpp"

using namespace frontlab;

TEST_CASE("rational parsing reduces and validates") {
  CHECK(rat_str(parse_rat("2/4")) == "1/2");
  CHECK(rat_str(parse_rat("-6/4")) == "-3/2");
  CHECK(rat_str(parse_rat("7")) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("FRONT v1 parse and canonical serialization") {
  std::string text =
      "FRONT 1\n"
      "V 1 0\nV 0 1\nV -1 0\nV 0 -1\n"
      "SEED LEFT\n";
  Front f = parse_front(text);
  CHECK(f.size() == 4);
  CHECK(f.seed == Side::kLeft);
  CHECK(serialize_front(f) == text);

  SUBCASE("rationals re-emitted reduced") {
    Front g = parse_front("FRONT 1\nV 2/4 0\nV 1 0\nV 0 1\nSEED RIGHT\n");
    CHECK(rat_str(g.vertex(0).x) == "1/2");
    CHECK(serialize_front(g).find("1/2 0") != std::string::npos);
  }
  SUBCASE("version error") {
    CHECK_THROWS_AS(parse_front("FRONT 2\nV 0 0\nSEED LEFT\n"), ParseError);
  }
  SUBCASE("missing and duplicate SEED") {
    CHECK_THROWS_AS(parse_front("FRONT 1\nV 0 0\nV 1 0\nV 0 1\n"), ParseError);
    CHECK_THROWS_AS(
        parse_front("FRONT 1\nV 0 0\nV 1 0\nV 0 1\nSEED LEFT\nSEED LEFT\n"),
        ParseError);
  }
  SUBCASE("comments and cones") {
    Front g = parse_front(
        "FRONT 1  # header\nV 0 0\nV 4 0 CUSP\nV 0 4\nSEED RIGHT\nCONE 1 1 3\n");
    CHECK(g.cones.size() == 1);
    CHECK(g.cones[0].mu == 3);
    CHECK(g.is_cusp(1));
  }
  SUBCASE("json mirror") {
    Front g = parse_front(front_to_json(f));
    CHECK(serialize_front(g) == serialize_front(f));
  }
  SUBCASE("roundtrip on fixtures") {
    for (Front fix : {circle_fixture(), saucer_fixture(), eight_fixture()}) {
      Front back = parse_front(serialize_front(fix));
      CHECK(serialize_front(back) == serialize_front(fix));
    }
  }
}

TEST_CASE("validation catches the named violations") {
  CHECK(validate(circle_fixture()).ok());
  CHECK(validate(saucer_fixture()).ok());
  CHECK(validate(eight_fixture()).ok());
  CHECK(validate(limacon_fixture()).ok());

  SUBCASE("odd cusp count") {
    Front f = circle_fixture();
    f.verts[0].cusp = true;  // not even a fold, but parity reported first
    auto rep = validate(f);
    bool odd = false;
    for (const auto& v : rep.violations)
      if (v.code == Violation::kOddCuspCount) odd = true;
    CHECK(odd);
  }
  SUBCASE("collinear overlap") {
    Front f = parse_front("FRONT 1\nV 0 0\nV 4 0\nV 2 0\nV 2 4\nSEED LEFT\n");
    auto rep = validate(f);
    bool hit = false;
    for (const auto& v : rep.violations)
      if (v.code == Violation::kCollinearOverlap) hit = true;
    CHECK(hit);
  }
  SUBCASE("sharp regular turn rejected strictly, allowed relaxed") {
    Front f = parse_front("FRONT 1\nV 0 0\nV 4 0\nV 1 1\nSEED LEFT\n");
    CHECK_FALSE(validate(f).ok());
    CHECK(validate(f, true).ok());
  }
  SUBCASE("cusp must fold") {
    Front f = parse_front("FRONT 1\nV 0 0 CUSP\nV 4 0 CUSP\nV 0 4\nSEED LEFT\n");
    auto rep = validate(f);
    bool hit = false;
    for (const auto& v : rep.violations)
      if (v.code == Violation::kCuspNotFold) hit = true;
    CHECK(hit);
  }
  SUBCASE("vertex on another edge") {
    Front f =
        parse_front("FRONT 1\nV 0 0\nV 4 0\nV 4 4\nV 2 0\nV 0 4\nSEED LEFT\n");
    CHECK_FALSE(validate(f).ok());
  }
}

TEST_CASE("index of the basic fixtures") {
  CHECK(index_of(circle_fixture()) == 1);
  CHECK(index_of(circle_fixture().reversed()) == -1);
  CHECK(index_of(circle_fixture().cooriented_flipped()) == 1);
  CHECK(index_of(saucer_fixture()) == 0);
  CHECK(index_of(eight_fixture()) == 0);
  CHECK(index_of(limacon_fixture()) == 2);

  SUBCASE("invariant under re-rooting and placement") {
    Front f = eight_fixture();
    for (int k = 1; k < f.size(); ++k) CHECK(index_of(f.rotated_start(k)) == 0);
  }
}

TEST_CASE("cusp data of the saucer") {
  auto cd = cusp_data(saucer_fixture());
  REQUIRE(cd.signs.size() == 2);
  // Both folds of the lens turn the normal the same way; reversal negates.
  CHECK(cd.signs[0] == cd.signs[1]);
  CHECK(cd.c_plus + cd.c_minus == Half::whole(1));
  auto rd = cusp_data(saucer_fixture().reversed());
  CHECK(rd.signs[0] == -cd.signs[0]);
  CHECK(rd.signs[1] == -cd.signs[1]);
  // index = tangent winding + C+ - C- on every fixture.
  CHECK(index_of(saucer_fixture()) == 0);
}

TEST_CASE("double points") {
  CHECK(double_points(circle_fixture()).empty());
  auto dps = double_points(eight_fixture());
  REQUIRE(dps.size() == 1);
  CHECK(dps[0].pos == Pt{Rat(0), Rat(0)});
  CHECK(dps[0].eps == 1);

  SUBCASE("cusp-free fronts have positive crossings only") {
    for (std::uint64_t seed : {3u, 9u, 21u}) {
      Front f = random_front(seed);
      if (f.cusp_count() != 0) continue;
      for (const auto& dp : double_points(f)) CHECK(dp.eps == 1);
    }
  }
  SUBCASE("coorientation flip negates branch signs") {
    auto flipped = double_points(eight_fixture().cooriented_flipped());
    CHECK(flipped[0].sign_a == -dps[0].sign_a);
    CHECK(flipped[0].sign_b == -dps[0].sign_b);
    CHECK(flipped[0].eps == 1);
  }
}

TEST_CASE("winding numbers by exact ray crossings") {
  Front c = circle_fixture();
  CHECK(winding_number(c, Pt{Rat(0), Rat(0)}) == 1);
  CHECK(winding_number(c, Pt{Rat(10), Rat(0)}) == 0);
  CHECK(winding_number(c.reversed(), Pt{Rat(0), Rat(0)}) == -1);
  CHECK_THROWS_AS(winding_number(c, Pt{Rat(2), Rat(1)}), FrontError);

  Front e = eight_fixture();
  CHECK(winding_number(e, Pt{Rat(2), Rat(0)}) == 1);   // ccw lobe
  CHECK(winding_number(e, Pt{Rat(-2), Rat(0)}) == -1); // cw lobe

  SUBCASE("independent of the ray") {
    for (Vec ray : {Vec{0, 1}, Vec{1, 4}, Vec{4, 1}, Vec{-3, 7}}) {
      CHECK(winding_number_ray(e, Pt{Rat(2), Rat(0)}, ray) == 1);
      CHECK(winding_number_ray(e, Pt{Rat(-2), Rat(0)}, ray) == -1);
    }
    // The horizontal ray from (2,0) passes through the vertex (7/2, 0).
    CHECK_THROWS_AS(winding_number_ray(e, Pt{Rat(2), Rat(0)}, Vec{1, 0}),
                    FrontError);
  }
}

TEST_CASE("smooth split of the figure eight") {
  Front e = eight_fixture();
  auto dps = double_points(e);
  REQUIRE(dps.size() == 1);
  auto [plus, minus] = smooth_split(e, dps[0]);
  CHECK(validate(plus, true).ok());
  CHECK(validate(minus, true).ok());
  CHECK(index_of(plus) == 1);
  CHECK(index_of(minus) == -1);
  CHECK(index_of(plus) + index_of(minus) == index_of(e));
  // The joint is a regular vertex here: both branches carry the same side.
  CHECK(plus.cusp_count() == 0);
  CHECK(minus.cusp_count() == 0);
}
