#include "ratri/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratri/errors.hpp"

namespace ratri {

namespace mp = boost::multiprecision;

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = mp::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) {
    throw std::domain_error("Rational: division by zero");
  }
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
  return mp::cpp_rational(num_, den_).convert_to<double>();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, bool allow_sign) -> Int {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) {
      throw ValidationError("not a fraction: empty integer part");
    }
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
        throw ValidationError("not a fraction: invalid character in \"" +
                              std::string(s) + "\"");
      }
    }
    return Int(std::string(s));
  };

  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, true));
  }
  Int num = parse_int(text.substr(0, slash), true);
  Int den = parse_int(text.substr(slash + 1), false);
  return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

IsqrtResult isqrt(const Int& n) {
  if (n < 0) {
    throw std::domain_error("isqrt: negative input");
  }
  if (n == 0) {
    return {Int(0), true};
  }
  // Start from 2^ceil(bits/2) >= sqrt(n); Newton from above lands on floor.
  unsigned bits = mp::msb(n) + 1;
  Int x = Int(1) << ((bits + 1) / 2);
  for (;;) {
    Int y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  return {x, x * x == n};
}

std::optional<Rational> is_rational_square(const Rational& q) {
  if (q.is_negative()) {
    return std::nullopt;
  }
  IsqrtResult num_root = isqrt(q.num());
  if (!num_root.exact) {
    return std::nullopt;
  }
  IsqrtResult den_root = isqrt(q.den());
  if (!den_root.exact) {
    return std::nullopt;
  }
  // num and den are coprime, so their roots are too: no reduction happens.
  return Rational(std::move(num_root.root), std::move(den_root.root));
}

}  // namespace ratri
