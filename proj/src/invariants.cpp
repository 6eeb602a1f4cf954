#include "frontlab/invariants.hpp"

#include <sstream>

namespace frontlab {

SplitIndices split_indices(const Front& f, const DoublePoint& v) {
  auto [plus, minus] = smooth_split(f, v);
  SplitIndices si;
  si.eps = v.eps;
  si.ind_plus = index_of(plus);
  si.ind_minus = index_of(minus);
  si.ind_tilde_plus = si.ind_plus + (1 - si.eps) / 2;
  si.ind_tilde_minus = si.ind_minus + (1 + si.eps) / 2;

  int h = index_of(f);
  if (si.ind_plus + si.ind_minus != h)
    throw FrontError("split indices do not add up to the index of the front");
  if (si.ind_tilde_plus + si.ind_tilde_minus != h + 1)
    throw FrontError("corrected split indices do not add up to index + 1");
  return si;
}

namespace {

struct PlaneData {
  int h;
  Half c_plus, c_minus;
  std::vector<SplitIndices> splits;
};

PlaneData plane_data(const Front& f) {
  PlaneData d;
  d.h = index_of(f);
  auto cd = cusp_data(f);
  d.c_plus = cd.c_plus;
  d.c_minus = cd.c_minus;
  for (const auto& v : double_points(f)) d.splits.push_back(split_indices(f, v));
  return d;
}

}  // namespace

int s_integer(const Front& f) {
  int s = 0;
  for (const auto& v : double_points(f)) {
    auto si = split_indices(f, v);
    s += si.ind_plus - si.ind_minus - si.eps;
  }
  return s;
}

int bennequin(const Front& f) {
  PlaneData d = plane_data(f);
  int s = 0;
  for (const auto& si : d.splits) s += si.ind_plus - si.ind_minus - si.eps;
  Half l = Half::whole(s) + d.c_plus * (1 - d.h) + d.c_minus * (d.h + 1) +
           Half::whole(d.h * d.h);
  if (!l.is_integer())
    throw FrontError("bennequin value is not an integer (convention bug)");
  return static_cast<int>(l.as_integer());
}

LaurentHalf lq(const Front& f) {
  PlaneData d = plane_data(f);
  LaurentHalf out;
  for (const auto& si : d.splits)
    out = out + quantum_number(si.ind_plus - si.ind_minus - si.eps);
  out = out + quantum_number(1 - d.h).scaled(d.c_plus);
  out = out + quantum_number(d.h + 1).scaled(d.c_minus);
  out = out + quantum_number(d.h).scaled(Half::whole(d.h));
  return out;
}

LaurentHalf s_lambda(const Front& f) {
  PlaneData d = plane_data(f);
  LaurentHalf out;
  for (const auto& si : d.splits) {
    out.add_term(si.ind_tilde_plus, Half::whole(1));
    out.add_term(si.ind_tilde_minus, Half::whole(-1));
  }
  // (f - f^h) C+ and (f^{h+1} - e) C-.
  out.add_term(1, d.c_plus);
  out.add_term(d.h, -d.c_plus);
  out.add_term(d.h + 1, d.c_minus);
  out.add_term(0, -d.c_minus);
  return out;
}

Half l_f_plane(const Front& f) {
  PlaneData d = plane_data(f);
  int s = 0;
  for (const auto& si : d.splits) s += si.ind_plus - si.ind_minus - si.eps;
  return Half::whole(s) + d.c_plus * (1 - d.h) + d.c_minus * (d.h + 1);
}

Half pr_map_plane(const LaurentHalf& x) {
  std::int64_t total2 = 0;
  for (const auto& [e, c2] : x.terms2()) total2 += c2 * e;
  return Half::of_twice(total2);
}

LaurentHalf sk_polynomial(const Front& f) {
  LaurentHalf out;
  for (const auto& v : double_points(f)) {
    auto si = split_indices(f, v);
    bool excluded = si.ind_tilde_plus == 0 || si.ind_tilde_plus == 1 ||
                    si.ind_tilde_minus == 0 || si.ind_tilde_minus == 1;
    if (excluded) continue;
    out.add_term(si.ind_tilde_plus, Half::whole(1));
    out.add_term(si.ind_tilde_minus, Half::whole(-1));
  }
  return out;
}

IdentityReport check_split_identities(const Front& f) {
  IdentityReport rep;
  int h = index_of(f);
  for (const auto& v : double_points(f)) {
    auto [plus, minus] = smooth_split(f, v);
    int ip = index_of(plus), im = index_of(minus);
    int tp = ip + (1 - v.eps) / 2, tm = im + (1 + v.eps) / 2;
    auto fail = [&](const std::string& what) {
      rep.failures.push_back({v.id, what});
    };
    if (tp - tm != ip - im - v.eps) fail("difference identity");
    if (tp + tm != h + 1) fail("sum identity (corrected)");
    if (ip + im != h) fail("sum identity");
    // Exponent form of the class identity for the two splittings.
    if ((ip - im - v.eps) != (tp - tm)) fail("class identity (exponents)");
  }
  return rep;
}

LaurentHalf to_lq(const LaurentHalf& s, int h) {
  LaurentHalf out = quantum_number(h).scaled(Half::whole(h));
  for (const auto& [l, c2] : s.terms2()) {
    if (c2 <= 0) continue;
    out = out + quantum_number(2 * l - h - 1).scaled(Half::of_twice(c2));
  }
  return out;
}

LaurentHalf to_s(const LaurentHalf& lq_val, int h) {
  LaurentHalf rest = lq_val - quantum_number(h).scaled(Half::whole(h));
  auto decomp = quantum_decompose(rest);
  LaurentHalf out;
  for (const auto& [m, n] : decomp) {
    if ((h + 1 + m) % 2 != 0)
      throw AlgebraError("decomposition exponent (h+1+m)/2 is not an integer");
    out.add_term((h + 1 + m) / 2, n);
    out.add_term((h + 1 - m) / 2, -n);
  }
  return out;
}

LaurentHalf wall_crossing_delta(const Front& before, const Front& after,
                                const WallPairing&) {
  if (!validate(before).ok() || !validate(after).ok())
    throw FrontError("wall pair not recognized: fronts are not generic");
  auto cb = cusp_data(before), ca = cusp_data(after);
  if (cb.c_plus != ca.c_plus || cb.c_minus != ca.c_minus)
    throw FrontError("wall pair not recognized: cusp data differs");
  if (index_of(before) != index_of(after))
    throw FrontError("wall pair not recognized: index differs");
  if (serialize_front(before) == serialize_front(after)) return {};
  long db = static_cast<long>(double_points(before).size());
  long da = static_cast<long>(double_points(after).size());
  if (db - da != 2 && da - db != 2)
    throw FrontError("wall pair not recognized: crossing counts do not differ by 2");
  return s_lambda(after) - s_lambda(before);
}

}  // namespace frontlab
