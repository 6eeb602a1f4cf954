#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frontlab/half.hpp"
#include "frontlab/rational.hpp"

namespace frontlab {

class AlgebraError : public std::runtime_error {
 public:
  explicit AlgebraError(const std::string& m) : std::runtime_error(m) {}
};

// Finite-support Laurent polynomial with exact half-integer coefficients.
class LaurentHalf {
 public:
  LaurentHalf() = default;
  static LaurentHalf monomial(int exp, Half coeff);
  static LaurentHalf constant(Half c) { return monomial(0, c); }

  void add_term(int exp, Half c);
  Half coeff(int exp) const;
  bool is_zero() const { return c2_.empty(); }
  const std::map<int, std::int64_t>& terms2() const { return c2_; }

  LaurentHalf operator+(const LaurentHalf& o) const;
  LaurentHalf operator-(const LaurentHalf& o) const;
  LaurentHalf operator-() const;
  LaurentHalf operator*(const LaurentHalf& o) const;
  LaurentHalf scaled(Half s) const;
  LaurentHalf shifted(int k) const;  // multiply by x^k
  bool operator==(const LaurentHalf& o) const { return c2_ == o.c2_; }
  bool operator!=(const LaurentHalf& o) const { return !(*this == o); }

  Half eval_one() const;  // value at x = 1
  bool symmetric() const;  // invariant under x -> 1/x
  int max_exp() const;

  std::string str(const std::string& var) const;
  static LaurentHalf parse(const std::string& text, const std::string& var);

 private:
  std::map<int, std::int64_t> c2_;  // exponent -> doubled coefficient
};

// [n]_q as a Laurent polynomial in q; [0]_q = 0 and [-n]_q = -[n]_q.
LaurentHalf quantum_number(int n);

// Unique expansion P = sum n_m [m]_q with n_m > 0 half-integers, no n_0,
// and never both m and -m.  Throws unless P is symmetric under q -> 1/q.
std::map<int, Half> quantum_decompose(const LaurentHalf& p);

// --- finitely generated abelian groups by presentation -----------------------

class FGAbelianGroup;

// Element in canonical coordinates: torsion entries reduced mod their orders,
// then the free entries.
class GroupElement {
 public:
  GroupElement() = default;
  const FGAbelianGroup* group() const { return g_; }
  const std::vector<Int>& coords() const { return c_; }
  bool operator==(const GroupElement& o) const { return g_ == o.g_ && c_ == o.c_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;  // for map keys within one group
  bool is_identity() const;

 private:
  friend class FGAbelianGroup;
  const FGAbelianGroup* g_ = nullptr;
  std::vector<Int> c_;
};

// Abelian group <generators | integer relations>, with unique canonical
// coordinates obtained from the Smith normal form of the relation matrix.
class FGAbelianGroup {
 public:
  FGAbelianGroup(std::vector<std::string> gen_names,
                 const std::vector<std::vector<long>>& relations);

  int num_generators() const { return static_cast<int>(names_.size()); }
  const std::string& gen_name(int i) const { return names_[i]; }

  GroupElement identity() const;
  GroupElement generator(int i) const;
  GroupElement from_exponents(const std::vector<long>& e) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, long k) const;

  int free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion_orders() const { return torsion_; }
  bool is_infinite_cyclic() const { return free_rank_ == 1 && torsion_.empty(); }

  // For an infinite cyclic group: the coordinate of x (x = g^k for the
  // canonical free generator).
  Int cyclic_exponent(const GroupElement& x) const;

  std::string describe() const;

 private:
  GroupElement canonical(std::vector<Int> raw) const;
  std::vector<std::string> names_;
  // basis change: raw generator exponents -> SNF coordinates
  std::vector<std::vector<Int>> to_snf_;  // row i = image of generator i
  std::vector<Int> diag_;                 // diagonal entry per coordinate, 0 = free
  std::vector<Int> torsion_;              // diagonal entries > 1
  std::vector<int> torsion_pos_;          // positions among SNF coords
  std::vector<int> free_pos_;
  int free_rank_ = 0;
};

// Formal half-integer combination of group elements (all in one group).
class GroupRingHalf {
 public:
  GroupRingHalf() = default;
  explicit GroupRingHalf(const FGAbelianGroup* g) : g_(g) {}
  static GroupRingHalf term(const GroupElement& x, Half c);

  const FGAbelianGroup* group() const { return g_; }
  void add_term(const GroupElement& x, Half c);
  bool is_zero() const { return c2_.empty(); }
  const std::map<GroupElement, std::int64_t>& terms2() const { return c2_; }

  GroupRingHalf operator+(const GroupRingHalf& o) const;
  GroupRingHalf operator-(const GroupRingHalf& o) const;
  GroupRingHalf operator-() const;
  GroupRingHalf scaled(Half s) const;
  GroupRingHalf mul_by_element(const GroupElement& x) const;
  bool operator==(const GroupRingHalf& o) const;

  std::string str() const;

 private:
  void check_group(const GroupRingHalf& o) const;
  const FGAbelianGroup* g_ = nullptr;
  std::map<GroupElement, std::int64_t> c2_;
};

// Does x lie in the integer span of rels?  Decided exactly over the lattice
// of doubled coefficients on the joint support.
bool span_membership(const GroupRingHalf& x, const std::vector<GroupRingHalf>& rels);

// sum n_i g_i  ->  sum n_i * exponent(g_i), for infinite cyclic groups.
Half pr_map(const GroupRingHalf& x);

// Hermite normal form (row style) of an integer matrix; rows span the same
// lattice as the input rows.  Exposed for tests.
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> m);

}  // namespace frontlab
