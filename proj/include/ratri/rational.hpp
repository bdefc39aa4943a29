#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ratri {

using Int = boost::multiprecision::cpp_int;

/// Reduced fraction over arbitrary-precision integers.
///
/// Invariants: den > 0 (sign lives in num), gcd(|num|, den) = 1, zero is
/// stored as 0/1. Reduction happens eagerly at construction, so equality
/// and ordering are structural and values are safe to share across threads.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}

  /// Canonicalizes num/den. Throws std::domain_error if den == 0.
  Rational(Int num, Int den);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_negative() const noexcept { return num_ < 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on o == 0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Canonical text form "num/den", denominator always present ("7/6",
  /// "-3/4", "0/1"). Used verbatim in JSON and CSV output.
  std::string str() const;

  /// Display-only conversion; correctly rounded.
  double to_double() const;

  /// Parses "p/q" or a bare integer "p". Throws ValidationError on anything
  /// else, std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

 private:
  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Canonical reduced fraction num/den. Throws std::domain_error if den == 0.
inline Rational reduce(Int num, Int den) {
  return Rational(std::move(num), std::move(den));
}

struct IsqrtResult {
  Int root;    // floor(sqrt(n))
  bool exact;  // root * root == n
};

/// Integer square root by Newton iteration on big ints; no floating point,
/// correct for arbitrarily large n. Throws std::domain_error if n < 0.
IsqrtResult isqrt(const Int& n);

/// If q = t^2 for a nonnegative rational t, returns t (reduced); otherwise
/// nullopt. Negative q is simply not a square, not an error. Because q is
/// stored reduced, q is a square iff num and den are both perfect squares.
std::optional<Rational> is_rational_square(const Rational& q);

}  // namespace ratri
