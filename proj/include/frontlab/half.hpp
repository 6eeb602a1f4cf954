#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frontlab {

// Exact half-integer, stored as a doubled integer.  No floating point.
struct Half {
  std::int64_t twice = 0;

  static Half whole(std::int64_t n) { return Half{2 * n}; }
  static Half of_twice(std::int64_t t) { return Half{t}; }

  Half operator+(Half o) const { return Half{twice + o.twice}; }
  Half operator-(Half o) const { return Half{twice - o.twice}; }
  Half operator-() const { return Half{-twice}; }
  Half operator*(std::int64_t k) const { return Half{twice * k}; }
  bool operator==(Half o) const { return twice == o.twice; }
  bool operator!=(Half o) const { return twice != o.twice; }
  bool operator<(Half o) const { return twice < o.twice; }
  bool operator>(Half o) const { return twice > o.twice; }

  bool is_integer() const { return twice % 2 == 0; }
  bool is_zero() const { return twice == 0; }

  std::int64_t as_integer() const {
    if (!is_integer()) throw std::logic_error("half-integer is not integral");
    return twice / 2;
  }

  // "n" when integral, "p/2" otherwise.
  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

inline Half half_product(Half a, Half b) {
  std::int64_t t = a.twice * b.twice;
  if (t % 2 != 0) throw std::logic_error("half*half left the half-integers");
  return Half::of_twice(t / 2);
}

}  // namespace frontlab
