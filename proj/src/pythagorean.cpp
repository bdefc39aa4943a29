#include "ratri/pythagorean.hpp"

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ratri {

namespace mp = boost::multiprecision;

NotPythagoreanError::NotPythagoreanError(Int num, Int den, Int legs_squared)
    : std::domain_error(num.str() + "/" + den.str() +
                        " is not a Pythagorean rational: " + num.str() + "^2 + " +
                        den.str() + "^2 = " + legs_squared.str() +
                        " is not a perfect square"),
      num_(std::move(num)),
      den_(std::move(den)),
      legs_squared_(std::move(legs_squared)) {}

static void check_params(const Int& d, const Int& m, const Int& n) {
  if (d < 1) {
    throw ValidationError("triple parameters: d must be >= 1 (got " + d.str() + ")");
  }
  if (n < 1) {
    throw ValidationError("triple parameters: n must be >= 1 (got " + n.str() + ")");
  }
  if (m <= n) {
    throw ValidationError("triple parameters: m > n required (got m = " + m.str() +
                          ", n = " + n.str() + ")");
  }
  if (mp::gcd(m, n) != 1) {
    throw ValidationError("triple parameters: m and n must be coprime (got m = " +
                          m.str() + ", n = " + n.str() + ")");
  }
  if ((m + n) % 2 == 0) {
    throw ValidationError("triple parameters: m + n must be odd (got m = " + m.str() +
                          ", n = " + n.str() + ")");
  }
}

PythTriple triple_from_params(const Int& d, const Int& m, const Int& n) {
  check_params(d, m, n);
  Int mm = m * m;
  Int nn = n * n;
  return PythTriple{d * (mm - nn), d * (2 * m * n), d * (mm + nn), d, m, n};
}

std::vector<PythTriple> enumerate_primitive(const Int& max_m) {
  std::vector<PythTriple> rows;
  for (Int m = 2; m <= max_m; ++m) {
    // Opposite parity: even m pairs with odd n and vice versa.
    for (Int n = (m % 2 == 0) ? 1 : 2; n < m; n += 2) {
      if (mp::gcd(m, n) == 1) {
        rows.push_back(triple_from_params(1, m, n));
      }
    }
  }
  return rows;
}

Int pythagorean_number(const Int& d, const Int& m, const Int& n) {
  check_params(d, m, n);
  return d * d * m * n * (m * m - n * n);
}

PythRational pyth_rational(const Int& p, const Int& q) {
  if (p <= 0) {
    throw ValidationError("Pythagorean rational: numerator must be positive (got " +
                          p.str() + ")");
  }
  if (q <= 0) {
    throw ValidationError("Pythagorean rational: denominator must be positive (got " +
                          q.str() + ")");
  }
  Int g = mp::gcd(p, q);
  Int a = p / g;
  Int b = q / g;
  Int sum = a * a + b * b;
  IsqrtResult root = isqrt(sum);
  if (!root.exact) {
    throw NotPythagoreanError(std::move(a), std::move(b), std::move(sum));
  }
  return PythRational(std::move(a), std::move(b), std::move(root.root));
}

PythRational reciprocal(const PythRational& r) {
  // Legs swap, hypotenuse stays: a^2 + b^2 = b^2 + a^2.
  return PythRational(r.den_, r.num_, r.hyp_);
}

PythRational exceeding_slope(const Rational& bound) {
  for (Int m = 2;; m += 2) {
    Int num = m * m - 1;
    Int den = 2 * m;
    // num/den > bound, cross-multiplied (both denominators positive).
    if (num * bound.den() > bound.num() * den) {
      return pyth_rational(num, den);
    }
  }
}

std::string PythRational::str() const {
  return num_.str() + "/" + den_.str() + " (c=" + hyp_.str() + ")";
}

}  // namespace ratri
