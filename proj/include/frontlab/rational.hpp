#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace frontlab {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Rat& r) { return sgn(r.get_num()); }

// Parses "a" or "a/b" into an exact rational; denominator must be nonzero.
Rat parse_rat(const std::string& tok);

// Canonical text form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string rat_str(const Rat& r);

struct Vec {
  Rat x, y;

  Vec() : x(0), y(0) {}
  Vec(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
  Vec(long xx, long yy) : x(xx), y(yy) {}

  Vec operator+(const Vec& o) const { return {x + o.x, y + o.y}; }
  Vec operator-(const Vec& o) const { return {x - o.x, y - o.y}; }
  Vec operator-() const { return {-x, -y}; }
  Vec operator*(const Rat& s) const { return {x * s, y * s}; }
  bool operator==(const Vec& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec& o) const { return !(*this == o); }

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
};

using Pt = Vec;

inline Rat cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

// Rotation by +90 degrees (counterclockwise).
inline Vec perp(const Vec& v) { return {-v.y, v.x}; }

// Sign of the signed area of triangle a,b,c.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
  return sgn(Rat(cross(b - a, c - a)));
}

// Lexicographic comparison (x, then y).
inline bool lex_less(const Pt& a, const Pt& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

// True if p lies on the closed segment [a, b].
bool on_segment(const Pt& a, const Pt& b, const Pt& p);

// Proper (interior, transverse) intersection of segments [a,b] and [c,d].
std::optional<Pt> proper_intersection(const Pt& a, const Pt& b, const Pt& c,
                                      const Pt& d);

// Angular comparator for nonzero direction vectors, counterclockwise from
// the positive x-axis.  Total order on directions (not on magnitudes).
int angle_quadrant(const Vec& v);
bool angle_less(const Vec& a, const Vec& b);

}  // namespace frontlab
