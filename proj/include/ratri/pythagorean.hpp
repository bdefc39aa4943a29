#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ratri/errors.hpp"
#include "ratri/rational.hpp"

namespace ratri {

/// a/b in lowest terms has no integer hypotenuse: a^2 + b^2 is not a
/// perfect square. Carries the reduced legs and their squared sum so
/// callers can report the failing value.
class NotPythagoreanError : public std::domain_error {
 public:
  NotPythagoreanError(Int num, Int den, Int legs_squared);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }
  const Int& legs_squared() const noexcept { return legs_squared_; }

 private:
  Int num_;
  Int den_;
  Int legs_squared_;
};

/// One row of the two-parameter triple family:
/// a = d(m^2 - n^2), b = d(2mn), c = d(m^2 + n^2); primitive iff d = 1.
struct PythTriple {
  Int a, b, c;
  Int d, m, n;
};

/// Validates d >= 1, m > n >= 1, gcd(m, n) = 1, m + n odd, then
/// instantiates the row. Throws ValidationError naming the violated
/// constraint.
PythTriple triple_from_params(const Int& d, const Int& m, const Int& n);

/// All primitive triples with 2 <= m <= max_m, ascending lexicographic
/// (m, n) order.
std::vector<PythTriple> enumerate_primitive(const Int& max_m);

/// Area of the parametrized right triangle: d^2 * m * n * (m^2 - n^2).
/// Same parameter constraints as triple_from_params.
Int pythagorean_number(const Int& d, const Int& m, const Int& n);

class PythRational;

PythRational pyth_rational(const Int& p, const Int& q);
PythRational reciprocal(const PythRational& r);

/// A positive rational a/b in lowest terms whose numerator and denominator
/// are the legs of a primitive right triangle: a^2 + b^2 = c^2 with the
/// hypotenuse witness c stored. Never an integer (b = 1 would need
/// a^2 + 1 to be a perfect square).
class PythRational {
 public:
  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }
  const Int& hyp() const noexcept { return hyp_; }

  Rational value() const { return Rational(num_, den_); }

  /// Human form "a/b (c=5)".
  std::string str() const;

  friend bool operator==(const PythRational&, const PythRational&) = default;

 private:
  PythRational(Int num, Int den, Int hyp)
      : num_(std::move(num)), den_(std::move(den)), hyp_(std::move(hyp)) {}

  friend PythRational pyth_rational(const Int& p, const Int& q);
  friend PythRational reciprocal(const PythRational& r);

  Int num_;
  Int den_;
  Int hyp_;
};

/// Reduces p/q, then accepts iff num^2 + den^2 is a perfect square.
/// Throws ValidationError for nonpositive input, NotPythagoreanError when
/// the hypotenuse test fails.
PythRational pyth_rational(const Int& p, const Int& q);

/// b/a with the same hypotenuse witness; an involution.
PythRational reciprocal(const PythRational& r);

/// Smallest member of the (m^2-1)/(2m), n = 1, even-m family whose value
/// strictly exceeds bound. Linear scan; the family is unbounded, so this
/// always terminates.
PythRational exceeding_slope(const Rational& bound);

}  // namespace ratri
