#include "frontlab/orbifold.hpp"

#include <sstream>

namespace frontlab {

GroupElement SeifertHomology::element(long fe, const std::vector<long>& ae) const {
  std::vector<long> exps(1 + ae.size(), 0);
  exps[0] = fe;
  for (std::size_t i = 0; i < ae.size(); ++i) exps[1 + i] = ae[i];
  return group->from_exponents(exps);
}

SeifertHomology seifert_homology(const OrbifoldDisk& o) {
  SeifertHomology h;
  int n = static_cast<int>(o.cones.size());
  std::vector<std::string> names{"f"};
  for (int i = 0; i < n; ++i) names.push_back("f_a" + std::to_string(i));
  std::vector<std::vector<long>> rels;
  for (int i = 0; i < n; ++i) {
    // f_ai^{mu_i} * f^{-1} = e
    std::vector<long> row(1 + n, 0);
    row[0] = -1;
    row[1 + i] = o.cones[i].mu;
    rels.push_back(row);
    h.mus.push_back(o.cones[i].mu);
  }
  h.group = std::make_shared<FGAbelianGroup>(names, rels);
  return h;
}

GroupElement class_of_front(const Front& f, const OrbifoldDisk& o,
                            const SeifertHomology& h) {
  long ind = index_of(f);
  long wsum = 0;
  std::vector<long> w;
  for (const auto& cone : o.cones) {
    if (point_on_front(f, cone.p))
      throw FrontError("front passes through a cone point");
    long wa = winding_number(f, cone.p);
    w.push_back(wa);
    wsum += wa;
  }
  return h.element(ind - wsum, w);
}

std::pair<std::set<int>, std::set<int>> n_sets(int mu, int nu, NSetVariant variant) {
  if (mu < 1) throw AlgebraError("n_sets needs mu >= 1");
  std::set<int> n1, n2;
  auto residue = [&](long val) {
    // val * pi / mu reduced into [0, 2*mu) so that pi corresponds to mu.
    long m = 2L * mu;
    long r = val % m;
    if (r < 0) r += m;
    return r;
  };
  for (int k = 1; k <= mu; ++k) {
    switch (variant) {
      case NSetVariant::kDef: {
        long r = residue(2L * k * nu);
        if (r > 0 && r <= mu) n1.insert(k);
        if (r > 0 && r < mu) n2.insert(k);
        break;
      }
      case NSetVariant::kBar: {
        long r = 2L * k;  // in (0, 2*mu], no reduction in the source
        if (r > 0 && r <= mu) n1.insert(k);
        if (r > 0 && r < mu) n2.insert(k);
        break;
      }
      case NSetVariant::kSix: {
        long r1 = residue(-2L * k);
        long r2 = residue(2L * k);
        if (r1 > 0 && r1 <= mu) n1.insert(k);
        if (r2 > 0 && r2 < mu) n2.insert(k);
        break;
      }
    }
  }
  return {n1, n2};
}

std::pair<GroupRingHalf, GroupRingHalf> r_generators(const SeifertHomology& h,
                                                     int cone,
                                                     const GroupElement& lambda_class,
                                                     NSetVariant variant, int nu) {
  int mu = h.mus.at(cone);
  auto [n1, n2] = n_sets(mu, nu, variant);
  const auto& g = *h.group;
  GroupRingHalf r1(&g), r2(&g);
  auto fa_pow = [&](long k) { return g.pow(h.fa(cone), k); };

  if (variant == NSetVariant::kBar) {
    // R1 = sum_{N1} ([l] fa^k - fa^{mu-k}) - sum_{N2} (fa^k - [l] fa^{mu-k})
    for (int k : n1) {
      r1.add_term(g.mul(lambda_class, fa_pow(k)), Half::whole(1));
      r1.add_term(fa_pow(mu - k), Half::whole(-1));
      r2.add_term(fa_pow(k), Half::whole(1));
      r2.add_term(g.mul(lambda_class, fa_pow(mu - k)), Half::whole(-1));
    }
    for (int k : n2) {
      r1.add_term(fa_pow(k), Half::whole(-1));
      r1.add_term(g.mul(lambda_class, fa_pow(mu - k)), Half::whole(1));
      r2.add_term(g.mul(lambda_class, fa_pow(k)), Half::whole(-1));
      r2.add_term(fa_pow(mu - k), Half::whole(1));
    }
    return {r1, r2};
  }

  // R1 = sum_{N1} ([l] fa^{mu-k} - fa^k) - sum_{N2} (fa^{mu-k} - [l] fa^k)
  // R2 = sum_{N1} (fa^{mu-k} - [l] fa^k) - sum_{N2} ([l] fa^{mu-k} - fa^k)
  for (int k : n1) {
    r1.add_term(g.mul(lambda_class, fa_pow(mu - k)), Half::whole(1));
    r1.add_term(fa_pow(k), Half::whole(-1));
    r2.add_term(fa_pow(mu - k), Half::whole(1));
    r2.add_term(g.mul(lambda_class, fa_pow(k)), Half::whole(-1));
  }
  for (int k : n2) {
    r1.add_term(fa_pow(mu - k), Half::whole(-1));
    r1.add_term(g.mul(lambda_class, fa_pow(k)), Half::whole(1));
    r2.add_term(g.mul(lambda_class, fa_pow(mu - k)), Half::whole(-1));
    r2.add_term(fa_pow(k), Half::whole(1));
  }
  return {r1, r2};
}

RConsistencyReport verify_r_consistency(int mu_max) {
  RConsistencyReport rep;
  for (int mu = 1; mu <= mu_max; ++mu) {
    OrbifoldDisk o;
    o.cones.push_back({Pt{0, 0}, mu});
    // mu = 1 is a regular point; model it with an empty relation exponent.
    if (mu == 1) o.cones[0].mu = 1;
    SeifertHomology h = seifert_homology(o);
    const auto& g = *h.group;
    std::vector<std::pair<std::string, GroupElement>> classes = {
        {"e", g.identity()},
        {"f", h.f()},
        {"f_a", h.fa(0)},
        {"f_a^2", g.pow(h.fa(0), 2)},
    };
    for (const auto& [name, lam] : classes) {
      rep.cases++;
      auto [d1, d2] = r_generators(h, 0, lam, NSetVariant::kDef, -1);
      auto [b1, b2] = r_generators(h, 0, lam, NSetVariant::kBar, -1);
      auto [s1, s2] = r_generators(h, 0, lam, NSetVariant::kSix, -1);
      if (!(d1 == b1))
        rep.def_bar_mismatches.push_back({mu, name, "R1: DEF(nu=-1) != BAR"});
      if (!(d2 == b2))
        rep.def_bar_mismatches.push_back({mu, name, "R2: DEF(nu=-1) != BAR"});
      if (!(s1 == b1))
        rep.six_notes.push_back({mu, name, "R1 differs under the mixed-sign sets"});
      if (!(s2 == b2))
        rep.six_notes.push_back({mu, name, "R2 differs under the mixed-sign sets"});
    }
  }
  return rep;
}

OrbifoldSLambda s_lambda_orbifold(const Front& f, const OrbifoldDisk& o) {
  return s_lambda_orbifold(f, o, seifert_homology(o));
}

// Overload sharing one homology across several fronts, so values obtained
// from different fronts over the same orbifold can be compared.
OrbifoldSLambda s_lambda_orbifold(const Front& f, const OrbifoldDisk& o,
                                  const SeifertHomology& h) {
  const auto& g = *h.group;
  GroupElement lam = class_of_front(f, o, h);

  auto class_of_component = [&](const Front& comp, int tilde_correction) {
    long ind = index_of(comp) + tilde_correction;
    long wsum = 0;
    std::vector<long> w;
    for (const auto& cone : o.cones) {
      long wa = winding_number(comp, cone.p);
      w.push_back(wa);
      wsum += wa;
    }
    // The correction arcs are local at the joint and wind around no cone, so
    // the correction lands on the fiber exponent only.
    return h.element(ind - wsum, w);
  };

  GroupRingHalf value(&g);
  for (const auto& v : double_points(f)) {
    auto [plus, minus] = smooth_split(f, v);
    value.add_term(class_of_component(plus, (1 - v.eps) / 2), Half::whole(1));
    value.add_term(class_of_component(minus, (1 + v.eps) / 2), Half::whole(-1));
  }
  auto cd = cusp_data(f);
  // (f - [lambda]) C+ + ([lambda] f - e) C-.
  value.add_term(h.f(), cd.c_plus);
  value.add_term(lam, -cd.c_plus);
  value.add_term(g.mul(lam, h.f()), cd.c_minus);
  value.add_term(g.identity(), -cd.c_minus);

  OrbifoldSLambda out{value, lam, QuotientJ{h, {}}};
  for (int c = 0; c < static_cast<int>(o.cones.size()); ++c) {
    auto [r1, r2] = r_generators(h, c, lam, NSetVariant::kDef, -1);
    out.context.relations.push_back(r1.scaled(Half::of_twice(1)));
    out.context.relations.push_back(r2.scaled(Half::of_twice(1)));
  }
  return out;
}

bool equal_in_J(const GroupRingHalf& x, const GroupRingHalf& y, const QuotientJ& ctx) {
  if (x.group() != y.group() && x.group() != nullptr && y.group() != nullptr)
    throw AlgebraError("equal_in_J: group mismatch");
  return span_membership(x - y, ctx.relations);
}

}  // namespace frontlab
