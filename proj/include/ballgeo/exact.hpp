#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ballgeo {

/// Exact element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// Edge lengths of the graph fixtures are integers or integer multiples of
/// sqrt(2) (diamond sides), and every graph quantity we need (path sums,
/// ball endpoints, crossing points of distance profiles) stays inside this
/// field, so comparisons are exact.
class Exact {
 public:
  Exact() = default;
  Exact(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Exact(mpq_class rational, mpq_class sqrt2_coeff = 0);

  static Exact sqrt2() { return Exact(0, 1); }
  static Exact ratio(long num, long den);

  /// Parses "3/2", "-0.25", "sqrt2", "sqrt2/2", "1/2*sqrt2", "1+3*sqrt2", ...
  static Exact parse(std::string_view text);

  const mpq_class& rational_part() const { return rational_; }
  const mpq_class& sqrt2_part() const { return sqrt2_; }
  bool is_rational() const { return sgn(sqrt2_) == 0; }

  int sign() const;
  double to_double() const;
  std::string str() const;

  Exact operator-() const { return Exact(-rational_, -sqrt2_); }
  Exact& operator+=(const Exact& o);
  Exact& operator-=(const Exact& o);
  Exact& operator*=(const Exact& o);
  Exact half() const { return Exact(rational_ / 2, sqrt2_ / 2); }

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }

  friend bool operator==(const Exact& a, const Exact& b) {
    return a.rational_ == b.rational_ && a.sqrt2_ == b.sqrt2_;
  }
  friend std::strong_ordering operator<=>(const Exact& a, const Exact& b);

 private:
  mpq_class rational_{0};
  mpq_class sqrt2_{0};
};

inline Exact abs(const Exact& x) { return x.sign() < 0 ? -x : x; }
inline const Exact& min(const Exact& a, const Exact& b) { return b < a ? b : a; }
inline const Exact& max(const Exact& a, const Exact& b) { return a < b ? b : a; }

}  // namespace ballgeo
