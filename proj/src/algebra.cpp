#include "frontlab/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <sstream>

namespace frontlab {

// --- LaurentHalf ---------------------------------------------------------------

LaurentHalf LaurentHalf::monomial(int exp, Half c) {
  LaurentHalf p;
  p.add_term(exp, c);
  return p;
}

void LaurentHalf::add_term(int exp, Half c) {
  if (c.twice == 0) return;
  auto it = c2_.find(exp);
  if (it == c2_.end()) {
    c2_[exp] = c.twice;
  } else {
    it->second += c.twice;
    if (it->second == 0) c2_.erase(it);
  }
}

Half LaurentHalf::coeff(int exp) const {
  auto it = c2_.find(exp);
  return it == c2_.end() ? Half{} : Half::of_twice(it->second);
}

LaurentHalf LaurentHalf::operator+(const LaurentHalf& o) const {
  LaurentHalf r = *this;
  for (const auto& [e, c] : o.c2_) r.add_term(e, Half::of_twice(c));
  return r;
}

LaurentHalf LaurentHalf::operator-(const LaurentHalf& o) const {
  LaurentHalf r = *this;
  for (const auto& [e, c] : o.c2_) r.add_term(e, Half::of_twice(-c));
  return r;
}

LaurentHalf LaurentHalf::operator-() const {
  LaurentHalf r;
  for (const auto& [e, c] : c2_) r.c2_[e] = -c;
  return r;
}

LaurentHalf LaurentHalf::operator*(const LaurentHalf& o) const {
  LaurentHalf r;
  for (const auto& [e1, c1] : c2_)
    for (const auto& [e2, c2] : o.c2_) {
      std::int64_t t = c1 * c2;
      if (t % 2 != 0) throw AlgebraError("product left the half-integers");
      r.add_term(e1 + e2, Half::of_twice(t / 2));
    }
  return r;
}

LaurentHalf LaurentHalf::scaled(Half s) const {
  LaurentHalf r;
  for (const auto& [e, c] : c2_) {
    std::int64_t t = c * s.twice;
    if (t % 2 != 0) throw AlgebraError("scaling left the half-integers");
    if (t != 0) r.c2_[e] = t / 2;
  }
  return r;
}

LaurentHalf LaurentHalf::shifted(int k) const {
  LaurentHalf r;
  for (const auto& [e, c] : c2_) r.c2_[e + k] = c;
  return r;
}

Half LaurentHalf::eval_one() const {
  std::int64_t t = 0;
  for (const auto& [e, c] : c2_) t += c;
  return Half::of_twice(t);
}

bool LaurentHalf::symmetric() const {
  for (const auto& [e, c] : c2_) {
    auto it = c2_.find(-e);
    if (it == c2_.end() || it->second != c) return false;
  }
  return true;
}

int LaurentHalf::max_exp() const {
  if (c2_.empty()) throw AlgebraError("max_exp of zero polynomial");
  return c2_.rbegin()->first;
}

std::string LaurentHalf::str(const std::string& var) const {
  if (c2_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent first reads like the usual polynomial notation.
  for (auto it = c2_.rbegin(); it != c2_.rend(); ++it) {
    auto [e, c] = *it;
    Half h = Half::of_twice(c);
    if (h.twice > 0 && !first) os << "+";
    std::string mag = (h.twice < 0 ? (-h).str() : h.str());
    if (h.twice < 0) os << "-";
    if (e == 0) {
      os << mag;
    } else {
      if (mag != "1") os << mag;
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentHalf LaurentHalf::parse(const std::string& text, const std::string& var) {
  LaurentHalf p;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw AlgebraError("empty polynomial");
  bool any = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any) {
      throw AlgebraError("expected '+' or '-' in polynomial");
    }
    // Optional coefficient: integer or integer/2.
    std::int64_t num = 1, den = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      have_coeff = true;
      num = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        num = num * 10 + (text[i++] - '0');
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          den = den * 10 + (text[i++] - '0');
        if (den != 2 && den != 1)
          throw AlgebraError("coefficients must be half-integers");
      }
    }
    if (i < text.size() && text[i] == '*') ++i;
    int exp = 0;
    bool have_var = false;
    if (i + var.size() <= text.size() && text.compare(i, var.size(), var) == 0) {
      have_var = true;
      i += var.size();
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        int esign = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          if (text[i] == '-') esign = -1;
          ++i;
        }
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw AlgebraError("bad exponent");
        int e = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          e = e * 10 + (text[i++] - '0');
        exp = esign * e;
      }
    }
    if (!have_coeff && !have_var)
      throw AlgebraError("bad term in polynomial at offset " + std::to_string(i));
    std::int64_t twice = sign * num * (den == 2 ? 1 : 2);
    p.add_term(exp, Half::of_twice(twice));
    any = true;
  }
  if (!any) throw AlgebraError("empty polynomial");
  return p;
}

// --- quantum numbers -------------------------------------------------------------

LaurentHalf quantum_number(int n) {
  LaurentHalf p;
  int a = n < 0 ? -n : n;
  for (int e = a - 1; e >= 1 - a; e -= 2) p.add_term(e, Half::whole(n < 0 ? -1 : 1));
  return p;
}

std::map<int, Half> quantum_decompose(const LaurentHalf& p) {
  if (!p.symmetric())
    throw AlgebraError("polynomial is not in the span of quantum numbers");
  std::map<int, Half> out;
  LaurentHalf rest = p;
  while (!rest.is_zero()) {
    int d = rest.max_exp();
    if (d < 0) throw AlgebraError("internal: symmetric polynomial with max_exp < 0");
    Half c = rest.coeff(d);
    int m = d + 1;
    rest = rest - quantum_number(m).scaled(c);
    if (c.twice > 0)
      out[m] = c;
    else
      out[-m] = -c;
  }
  return out;
}

// --- FGAbelianGroup -----------------------------------------------------------------

namespace {

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

bool GroupElement::operator<(const GroupElement& o) const {
  assert(g_ == o.g_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool GroupElement::is_identity() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

FGAbelianGroup::FGAbelianGroup(std::vector<std::string> gen_names,
                               const std::vector<std::vector<long>>& relations)
    : names_(std::move(gen_names)) {
  int n = static_cast<int>(names_.size());
  int m = static_cast<int>(relations.size());
  std::vector<std::vector<Int>> a(m, std::vector<Int>(n, 0));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(relations[i].size()) != n)
      throw AlgebraError("relation length does not match generator count");
    for (int j = 0; j < n; ++j) a[i][j] = relations[i][j];
  }
  // Diagonalize a = U a0 V by elementary row and column operations, tracking
  // only the column operations in V (rows act on relations, which are free).
  std::vector<std::vector<Int>> v(n, std::vector<Int>(n, 0));
  for (int j = 0; j < n; ++j) v[j][j] = 1;

  auto swap_cols = [&](int c1, int c2) {
    for (int i = 0; i < m; ++i) std::swap(a[i][c1], a[i][c2]);
    for (int i = 0; i < n; ++i) std::swap(v[i][c1], v[i][c2]);
  };
  auto addmul_col = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
    for (int i = 0; i < n; ++i) v[i][dst] -= q * v[i][src];
  };

  int t = 0;
  while (t < m && t < n) {
    // Bring a smallest-magnitude nonzero entry of the submatrix to (t, t).
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        if (pi == -1 || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == -1) break;
    std::swap(a[t], a[pi]);
    if (pj != t) swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = fdiv(a[i][t], a[t][t]);
        for (int j = 0; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = fdiv(a[t][j], a[t][t]);
        addmul_col(j, t, q);
        if (a[t][j] != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
    }
    if (a[t][t] < 0) {
      for (int i = 0; i < m; ++i) a[i][t] = -a[i][t];
      for (int i = 0; i < n; ++i) v[i][t] = -v[i][t];
    }
    ++t;
  }

  to_snf_ = std::move(v);
  for (int k = 0; k < n; ++k) {
    if (k < t) {
      Int d = a[k][k];
      if (d > 1) {
        torsion_.push_back(d);
        torsion_pos_.push_back(k);
      }
      // d == 1: coordinate is always zero after reduction.
    } else {
      free_pos_.push_back(k);
    }
  }
  free_rank_ = static_cast<int>(free_pos_.size());
  diag_.assign(n, Int(0));
  for (int k = 0; k < t; ++k) diag_[k] = a[k][k];
}

GroupElement FGAbelianGroup::canonical(std::vector<Int> raw) const {
  int n = num_generators();
  for (int k = 0; k < n; ++k) {
    if (diag_[k] == 0) continue;  // free coordinate
    if (diag_[k] == 1) {
      raw[k] = 0;
    } else {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), raw[k].get_mpz_t(), diag_[k].get_mpz_t());
      raw[k] = r;
    }
  }
  GroupElement e;
  e.g_ = this;
  e.c_ = std::move(raw);
  return e;
}

GroupElement FGAbelianGroup::identity() const {
  return canonical(std::vector<Int>(num_generators(), Int(0)));
}

GroupElement FGAbelianGroup::generator(int i) const {
  std::vector<long> e(num_generators(), 0);
  e[i] = 1;
  return from_exponents(e);
}

GroupElement FGAbelianGroup::from_exponents(const std::vector<long>& e) const {
  int n = num_generators();
  if (static_cast<int>(e.size()) != n)
    throw AlgebraError("exponent vector length mismatch");
  std::vector<Int> y(n, 0);
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    for (int j = 0; j < n; ++j) y[j] += Int(e[i]) * to_snf_[i][j];
  }
  return canonical(std::move(y));
}

GroupElement FGAbelianGroup::mul(const GroupElement& a, const GroupElement& b) const {
  if (a.group() != this || b.group() != this)
    throw AlgebraError("group mismatch in mul");
  std::vector<Int> y(num_generators());
  for (int i = 0; i < num_generators(); ++i) y[i] = a.c_[i] + b.c_[i];
  return canonical(std::move(y));
}

GroupElement FGAbelianGroup::inv(const GroupElement& a) const {
  if (a.group() != this) throw AlgebraError("group mismatch in inv");
  std::vector<Int> y(num_generators());
  for (int i = 0; i < num_generators(); ++i) y[i] = -a.c_[i];
  return canonical(std::move(y));
}

GroupElement FGAbelianGroup::pow(const GroupElement& a, long k) const {
  if (a.group() != this) throw AlgebraError("group mismatch in pow");
  std::vector<Int> y(num_generators());
  for (int i = 0; i < num_generators(); ++i) y[i] = Int(k) * a.c_[i];
  return canonical(std::move(y));
}

Int FGAbelianGroup::cyclic_exponent(const GroupElement& x) const {
  if (!is_infinite_cyclic())
    throw AlgebraError("cyclic_exponent on a non-cyclic group");
  return x.c_[free_pos_[0]];
}

std::string FGAbelianGroup::describe() const {
  std::ostringstream os;
  os << "Z^" << free_rank_;
  for (const auto& d : torsion_) os << " x Z/" << d.get_str();
  return os.str();
}

// --- GroupRingHalf ----------------------------------------------------------------

GroupRingHalf GroupRingHalf::term(const GroupElement& x, Half c) {
  GroupRingHalf r(x.group());
  r.add_term(x, c);
  return r;
}

void GroupRingHalf::add_term(const GroupElement& x, Half c) {
  if (g_ == nullptr) g_ = x.group();
  if (x.group() != g_) throw AlgebraError("group mismatch in add_term");
  if (c.twice == 0) return;
  auto it = c2_.find(x);
  if (it == c2_.end()) {
    c2_.emplace(x, c.twice);
  } else {
    it->second += c.twice;
    if (it->second == 0) c2_.erase(it);
  }
}

void GroupRingHalf::check_group(const GroupRingHalf& o) const {
  if (g_ != nullptr && o.g_ != nullptr && g_ != o.g_)
    throw AlgebraError("group mismatch");
}

GroupRingHalf GroupRingHalf::operator+(const GroupRingHalf& o) const {
  check_group(o);
  GroupRingHalf r = *this;
  if (r.g_ == nullptr) r.g_ = o.g_;
  for (const auto& [x, c] : o.c2_) r.add_term(x, Half::of_twice(c));
  return r;
}

GroupRingHalf GroupRingHalf::operator-(const GroupRingHalf& o) const {
  check_group(o);
  GroupRingHalf r = *this;
  if (r.g_ == nullptr) r.g_ = o.g_;
  for (const auto& [x, c] : o.c2_) r.add_term(x, Half::of_twice(-c));
  return r;
}

GroupRingHalf GroupRingHalf::operator-() const {
  GroupRingHalf r(g_);
  for (const auto& [x, c] : c2_) r.c2_.emplace(x, -c);
  return r;
}

GroupRingHalf GroupRingHalf::scaled(Half s) const {
  GroupRingHalf r(g_);
  for (const auto& [x, c] : c2_) {
    std::int64_t t = c * s.twice;
    if (t % 2 != 0) throw AlgebraError("scaling left the half-integers");
    if (t != 0) r.c2_.emplace(x, t / 2);
  }
  return r;
}

GroupRingHalf GroupRingHalf::mul_by_element(const GroupElement& x) const {
  GroupRingHalf r(g_);
  for (const auto& [y, c] : c2_) r.add_term(g_->mul(y, x), Half::of_twice(c));
  return r;
}

bool GroupRingHalf::operator==(const GroupRingHalf& o) const {
  check_group(o);
  return c2_ == o.c2_;
}

std::string GroupRingHalf::str() const {
  if (c2_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : c2_) {
    Half h = Half::of_twice(c);
    if (!first) os << (h.twice > 0 ? " + " : " - ");
    else if (h.twice < 0) os << "-";
    Half mag = h.twice < 0 ? -h : h;
    os << mag.str() << "*[";
    bool inner = false;
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
      if (inner) os << ",";
      os << x.coords()[i].get_str();
      inner = true;
    }
    os << "]";
    first = false;
  }
  return os.str();
}

// --- lattice membership --------------------------------------------------------------

std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> m) {
  if (m.empty()) return m;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Reduce column c below row r to a single nonzero pivot by gcd steps.
    while (true) {
      int pivot = -1;
      for (int i = r; i < rows; ++i)
        if (m[i][c] != 0 && (pivot == -1 || cmp(abs(m[i][c]), abs(m[pivot][c])) < 0))
          pivot = i;
      if (pivot == -1) break;
      std::swap(m[r], m[pivot]);
      bool others = false;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = fdiv(m[i][c], m[r][c]);
        for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (m[r][c] != 0) {
      if (m[r][c] < 0)
        for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
      ++r;
    }
  }
  m.resize(r);
  return m;
}

bool span_membership(const GroupRingHalf& x, const std::vector<GroupRingHalf>& rels) {
  // Joint support.
  std::set<GroupElement> support;
  for (const auto& [k, c] : x.terms2()) support.insert(k);
  for (const auto& rel : rels)
    for (const auto& [k, c] : rel.terms2()) support.insert(k);
  std::vector<GroupElement> idx(support.begin(), support.end());
  auto col_of = [&](const GroupElement& e) {
    return static_cast<int>(std::lower_bound(idx.begin(), idx.end(), e) - idx.begin());
  };
  int cols = static_cast<int>(idx.size());
  if (cols == 0) return true;  // x == 0

  std::vector<std::vector<Int>> m;
  for (const auto& rel : rels) {
    if (rel.is_zero()) continue;
    std::vector<Int> row(cols, 0);
    for (const auto& [k, c] : rel.terms2()) row[col_of(k)] = c;
    m.push_back(std::move(row));
  }
  std::vector<Int> v(cols, 0);
  for (const auto& [k, c] : x.terms2()) v[col_of(k)] = c;

  auto h = hnf_rows(std::move(m));
  // Forward-eliminate v by the echelon rows.
  std::size_t row = 0;
  for (int c = 0; c < cols; ++c) {
    if (row < h.size()) {
      // Find this row's pivot column.
      int pc = 0;
      while (pc < cols && h[row][pc] == 0) ++pc;
      if (pc == c) {
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[c].get_mpz_t(),
                    h[row][c].get_mpz_t());
        if (rem != 0) return false;
        for (int j = 0; j < cols; ++j) v[j] -= q * h[row][j];
        ++row;
        continue;
      }
    }
    if (v[c] != 0) return false;
  }
  for (int j = 0; j < cols; ++j)
    if (v[j] != 0) return false;
  return true;
}

Half pr_map(const GroupRingHalf& x) {
  const FGAbelianGroup* g = x.group();
  if (g == nullptr) return Half{};
  if (!g->is_infinite_cyclic())
    throw AlgebraError("pr_map needs an infinite cyclic group");
  std::int64_t total2 = 0;
  for (const auto& [k, c] : x.terms2()) {
    Int e = g->cyclic_exponent(k);
    if (!e.fits_slong_p()) throw AlgebraError("exponent too large");
    total2 += c * e.get_si();
  }
  return Half::of_twice(total2);
}

}  // namespace frontlab
