#include "doctest.h"
#include "frontlab/algebra.hpp"
#include "frontlab/fixtures.hpp"

using namespace frontlab;

TEST_CASE("quantum numbers") {
  CHECK(quantum_number(0).is_zero());
  CHECK(quantum_number(1) == LaurentHalf::constant(Half::whole(1)));
  LaurentHalf two;
  two.add_term(1, Half::whole(1));
  two.add_term(-1, Half::whole(1));
  CHECK(quantum_number(2) == two);
  CHECK(quantum_number(-2) == -two);
  for (int n = -6; n <= 6; ++n) {
    CHECK(quantum_number(n).eval_one() == Half::whole(n));
    CHECK(quantum_number(n).symmetric());
  }
}

TEST_CASE("quantum decomposition") {
  CHECK(quantum_decompose(LaurentHalf{}).empty());

  LaurentHalf p = quantum_number(2);
  auto d = quantum_decompose(p);
  REQUIRE(d.size() == 1);
  CHECK(d.at(2) == Half::whole(1));

  // -1 = -[1]_q = [-1]_q.
  auto m = quantum_decompose(LaurentHalf::constant(Half::whole(-1)));
  REQUIRE(m.size() == 1);
  CHECK(m.at(-1) == Half::whole(1));

  CHECK_THROWS_AS(quantum_decompose(LaurentHalf::monomial(2, Half::whole(1))),
                  AlgebraError);

  SUBCASE("reconstruction of random combinations") {
    Rng rng(42);
    for (int rep = 0; rep < 200; ++rep) {
      std::map<int, Half> truth;
      for (int t = 0; t < 4; ++t) {
        int mag = static_cast<int>(1 + rng.below(12));
        int mm = rng.coin() ? mag : -mag;
        if (truth.count(mm) || truth.count(-mm)) continue;
        truth[mm] = Half::of_twice(rng.range(1, 10));
      }
      LaurentHalf sum;
      for (auto& [mm, n] : truth) sum = sum + quantum_number(mm).scaled(n);
      CHECK(quantum_decompose(sum) == truth);
    }
  }
}

TEST_CASE("laurent text forms") {
  LaurentHalf p = LaurentHalf::parse("f-1", "f");
  CHECK(p.coeff(1) == Half::whole(1));
  CHECK(p.coeff(0) == Half::whole(-1));
  CHECK(p.str("f") == "f-1");
  LaurentHalf q = LaurentHalf::parse("1/2f^2-3/2f^-1+2", "f");
  CHECK(q.coeff(2) == Half::of_twice(1));
  CHECK(q.coeff(-1) == Half::of_twice(-3));
  CHECK(q.coeff(0) == Half::whole(2));
  CHECK(LaurentHalf::parse(q.str("f"), "f") == q);
  CHECK(LaurentHalf::parse("q+q^-1", "q") == quantum_number(2));
  CHECK_THROWS_AS(LaurentHalf::parse("", "f"), AlgebraError);
  CHECK_THROWS_AS(LaurentHalf::parse("1/3f", "f"), AlgebraError);
}

TEST_CASE("groups by presentation") {
  SUBCASE("free rank one") {
    FGAbelianGroup g({"f"}, {});
    CHECK(g.is_infinite_cyclic());
    CHECK(g.cyclic_exponent(g.pow(g.generator(0), 5)) == 5);
  }
  SUBCASE("square root generator") {
    FGAbelianGroup g({"f", "f_a"}, {{-1, 2}});  // f_a^2 = f
    CHECK(g.is_infinite_cyclic());
    CHECK(g.cyclic_exponent(g.generator(0)) == 2);
    CHECK(g.cyclic_exponent(g.generator(1)) == 1);
  }
  SUBCASE("cyclic of order two") {
    FGAbelianGroup g({"g"}, {{2}});
    CHECK(g.free_rank() == 0);
    REQUIRE(g.torsion_orders().size() == 1);
    CHECK(g.torsion_orders()[0] == 2);
    auto x = g.generator(0);
    CHECK(g.mul(x, x) == g.identity());
    CHECK_FALSE(x == g.identity());
  }
  SUBCASE("coordinate arithmetic is a homomorphism") {
    FGAbelianGroup g({"a", "b", "c"}, {{2, 0, 4}, {0, 3, -1}});
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
      std::vector<long> e1(3), e2(3), sum(3);
      for (int k = 0; k < 3; ++k) {
        e1[k] = rng.range(-6, 6);
        e2[k] = rng.range(-6, 6);
        sum[k] = e1[k] + e2[k];
      }
      CHECK(g.mul(g.from_exponents(e1), g.from_exponents(e2)) ==
            g.from_exponents(sum));
    }
  }
}

TEST_CASE("group ring arithmetic") {
  FGAbelianGroup g({"f"}, {});
  auto f1 = g.generator(0);
  auto e = g.identity();
  GroupRingHalf a = GroupRingHalf::term(f1, Half::whole(1)) -
                    GroupRingHalf::term(e, Half::whole(1));
  CHECK((a + (-a)).is_zero());
  GroupRingHalf half = a.scaled(Half::of_twice(1));
  CHECK(half.terms2().at(f1) == 1);
  GroupRingHalf shifted = a.mul_by_element(f1);
  CHECK(shifted.terms2().at(g.pow(f1, 2)) == 2);
  CHECK(shifted.terms2().at(f1) == -2);
}

TEST_CASE("span membership") {
  FGAbelianGroup g({"x", "y"}, {});
  auto e1 = g.generator(0), e2 = g.generator(1);
  auto unit = [&](const GroupElement& el) {
    return GroupRingHalf::term(el, Half::whole(1));
  };
  GroupRingHalf two_e1 = unit(e1).scaled(Half::whole(2));
  GroupRingHalf e1e2 = unit(e1) + unit(e2);
  GroupRingHalf diff = unit(e1) - unit(e2);
  CHECK(span_membership(diff, {two_e1, e1e2}));
  CHECK_FALSE(span_membership(unit(e1), {two_e1}));
  CHECK_FALSE(span_membership(unit(e1), {}));
  CHECK(span_membership(GroupRingHalf(&g), {}));

  SUBCASE("closure under addition; generators belong") {
    std::vector<GroupRingHalf> rels = {two_e1, e1e2};
    for (const auto& r : rels) CHECK(span_membership(r, rels));
    GroupRingHalf s = two_e1 + e1e2;
    CHECK(span_membership(s, rels));
  }
}

TEST_CASE("pr map on the infinite cyclic ring") {
  FGAbelianGroup g({"f"}, {});
  auto fpow = [&](long k) { return g.pow(g.generator(0), k); };
  GroupRingHalf x = GroupRingHalf::term(fpow(1), Half::whole(1)) -
                    GroupRingHalf::term(g.identity(), Half::whole(1));
  CHECK(pr_map(x) == Half::whole(1));
  GroupRingHalf y = GroupRingHalf::term(fpow(3), Half::of_twice(1)) +
                    GroupRingHalf::term(fpow(1), Half::of_twice(1));
  CHECK(pr_map(y) == Half::whole(2));
  CHECK(pr_map(GroupRingHalf(&g)) == Half::whole(0));

  FGAbelianGroup t({"g"}, {{2}});
  GroupRingHalf bad = GroupRingHalf::term(t.generator(0), Half::whole(1));
  CHECK_THROWS_AS(pr_map(bad), AlgebraError);
}

TEST_CASE("hermite normal form spans the same lattice") {
  std::vector<std::vector<Int>> m = {{Int(4), Int(2)}, {Int(6), Int(4)}};
  auto h = hnf_rows(m);
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] > 0);
  // det is preserved up to sign: |4*4 - 2*6| = 4.
  CHECK(h[0][0] * h[1][1] == 4);
}
