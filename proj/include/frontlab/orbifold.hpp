#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frontlab/algebra.hpp"
#include "frontlab/front.hpp"

namespace frontlab {

// Plane with marked cone points; every cone carries fiber type (mu, -1).
struct OrbifoldDisk {
  std::vector<Cone> cones;
};

// First homology of the fibered total space over the orbifold disk:
// generators f, f_a1, ..., f_an with relations f_ai^{mu_i} = f.
struct SeifertHomology {
  std::shared_ptr<FGAbelianGroup> group;
  std::vector<int> mus;

  GroupElement f() const { return group->generator(0); }
  GroupElement fa(int cone) const { return group->generator(1 + cone); }
  GroupElement e() const { return group->identity(); }
  // f^{fe} * prod f_ai^{ae[i]}
  GroupElement element(long fe, const std::vector<long>& ae) const;
};

SeifertHomology seifert_homology(const OrbifoldDisk& o);

// Homology class of the lift: f^{ind - sum w_a} * prod f_a^{w_a}, where w_a
// is the winding of the front around cone a.
GroupElement class_of_front(const Front& f, const OrbifoldDisk& o,
                            const SeifertHomology& h);

enum class NSetVariant {
  kDef,  // (2 pi k nu / mu) mod 2 pi in (0, pi] resp. (0, pi)
  kBar,  // (2 pi k / mu) in (0, pi] resp. (0, pi)
  kSix,  // (-2 pi k / mu) mod 2 pi in (0, pi] and (+2 pi k / mu) mod 2 pi in (0, pi)
};

// Index sets N1, N2 over k in {1, ..., mu}; membership decided by integer
// comparisons of 2 k nu mod 2 mu against mu.
std::pair<std::set<int>, std::set<int>> n_sets(int mu, int nu, NSetVariant variant);

// Relation generators R^1_a, R^2_a for the given cone and class of the front.
std::pair<GroupRingHalf, GroupRingHalf> r_generators(const SeifertHomology& h,
                                                     int cone,
                                                     const GroupElement& lambda_class,
                                                     NSetVariant variant,
                                                     int nu = -1);

struct RConsistencyReport {
  struct Entry {
    int mu;
    std::string lambda_name;
    std::string what;
  };
  std::vector<Entry> def_bar_mismatches;  // must stay empty
  std::vector<Entry> six_notes;           // informational discrepancies
  int cases = 0;
  bool ok() const { return def_bar_mismatches.empty(); }
};

// Compares the variants elementwise for mu = 1..mu_max over sample classes
// {e, f, f_a, f_a^2}.  DEF(nu = -1) must equal BAR; the third variant is
// reported as data.
RConsistencyReport verify_r_consistency(int mu_max);

struct QuotientJ {
  SeifertHomology homology;
  std::vector<GroupRingHalf> relations;  // halves of the R generators
};

struct OrbifoldSLambda {
  GroupRingHalf value;
  GroupElement lambda_class;
  QuotientJ context;
};

OrbifoldSLambda s_lambda_orbifold(const Front& f, const OrbifoldDisk& o);
OrbifoldSLambda s_lambda_orbifold(const Front& f, const OrbifoldDisk& o,
                                  const SeifertHomology& h);

bool equal_in_J(const GroupRingHalf& x, const GroupRingHalf& y, const QuotientJ& ctx);

}  // namespace frontlab
