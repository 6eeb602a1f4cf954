#pragma once

#include <string>
#include <vector>

#include "frontlab/algebra.hpp"
#include "frontlab/front.hpp"

namespace frontlab {

struct SplitIndices {
  int ind_plus = 0, ind_minus = 0;              // indices of the two smoothings
  int ind_tilde_plus = 0, ind_tilde_minus = 0;  // isotopy-corrected versions
  int eps = 0;
};

// Indices of the two labeled smoothings at v plus the corrected values
// solving m = ind+ - ind- - eps, t+ + t- = ind + 1, t+ - t- = m.
SplitIndices split_indices(const Front& f, const DoublePoint& v);

// S = sum over double points of (ind+ - ind- - eps).
int s_integer(const Front& f);

// l = S + (1 - ind) C+ + (ind + 1) C- + ind^2.
int bennequin(const Front& f);

// l_q = sum_v [m_v]_q + [1 - ind]_q C+ + [ind + 1]_q C- + [ind]_q * ind.
LaurentHalf lq(const Front& f);

// S(lambda) in the variable f: sum_v (f^{t+} - f^{t-})
//   + (f - f^h) C+ + (f^{h+1} - 1) C-, with h = ind.
LaurentHalf s_lambda(const Front& f);

// Half-integer degree: sum_v m_v + (1 - h) C+ + (h + 1) C-.
Half l_f_plane(const Front& f);

// Additive avatar of the exponential map on plane values: sum of
// coefficient times exponent.
Half pr_map_plane(const LaurentHalf& x);

// sum over double points whose corrected index pair avoids {0, 1} of
// t^{t+} - t^{t-}.
LaurentHalf sk_polynomial(const Front& f);

struct IdentityReport {
  struct Failure {
    int double_point;
    std::string what;
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

// Re-checks, per double point, the three split-index identities and the
// exponent form of the class identity relating the two splittings.
IdentityReport check_split_identities(const Front& f);

// Conversions between S(lambda) and l_q for plane fronts of index h.
LaurentHalf to_lq(const LaurentHalf& s, int h);
LaurentHalf to_s(const LaurentHalf& lq_val, int h);

struct WallPairing {
  int loop_ind_a = 0;
  int loop_ind_b = 0;
};

// s_lambda(after) - s_lambda(before) for a dangerous self-tangency pair.
// Throws unless the pair is recognizable as one (same cusp data and index,
// crossing counts differing by exactly two).
LaurentHalf wall_crossing_delta(const Front& before, const Front& after,
                                const WallPairing& pairing);

}  // namespace frontlab
