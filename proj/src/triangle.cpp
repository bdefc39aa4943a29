#include "ratri/triangle.hpp"

#include <stdexcept>
#include <utility>

namespace ratri {

RationalTriangle::RationalTriangle(PythRational r1, PythRational r2)
    : r1_(std::move(r1)), r2_(std::move(r2)) {
  const Int& a1 = r1_.num();
  const Int& b1 = r1_.den();
  const Int& a2 = r2_.num();
  const Int& b2 = r2_.den();

  side_a_ = Rational(r1_.hyp(), b1);
  side_b_ = Rational(r2_.hyp(), b2);
  Int cross = a1 * b2 + a2 * b1;  // m1 - m2 over the common denominator
  side_g_ = Rational(cross, b1 * b2);
  area_ = Rational(std::move(cross), 2 * b1 * b2);
}

RationalTriangle construct(const PythRational& r1, const PythRational& r2) {
  RationalTriangle t(r1, r2);
  // Heron cross-check: a failure here can only mean an arithmetic bug,
  // never bad input, so it is a logic error rather than a validation error.
  std::optional<Rational> heron =
      is_rational_square(heron_squared_area(t.side_a(), t.side_b(), t.side_g()));
  if (!heron || *heron != t.area()) {
    throw std::logic_error("construct: Heron area does not match closed form for " +
                           r1.str() + ", " + r2.str());
  }
  return t;
}

Heights heights(const RationalTriangle& t) {
  const Int& a1 = t.r1().num();
  const Int& b1 = t.r1().den();
  const Int& a2 = t.r2().num();
  const Int& b2 = t.r2().den();
  Int cross = a1 * b2 + a2 * b1;
  return Heights{
      Rational(cross, t.r1().hyp() * b2),
      Rational(cross, t.r2().hyp() * b1),
      Rational(1),
  };
}

AngleSet angles(const RationalTriangle& t) {
  const Int& a1 = t.r1().num();
  const Int& b1 = t.r1().den();
  const Int& c1 = t.r1().hyp();
  const Int& a2 = t.r2().num();
  const Int& b2 = t.r2().den();
  const Int& c2 = t.r2().hyp();

  AngleSet out;
  out.cos_j1 = Rational(b1, c1);
  out.sin_j1 = Rational(a1, c1);
  out.cos_j2 = Rational(b2, c2);
  out.sin_j2 = Rational(a2, c2);
  out.cos_j = Rational(b1 * b2 - a1 * a2, c1 * c2);
  out.sin_j = Rational(a1 * b2 + a2 * b1, c1 * c2);
  out.cos_w1 = Rational(a1, c1);
  out.sin_w1 = Rational(b1, c1);
  out.cos_w2 = Rational(a2, c2);
  out.sin_w2 = Rational(b2, c2);
  return out;
}

Rational circumradius(const RationalTriangle& t) {
  return Rational(t.r1().hyp() * t.r2().hyp(), 2 * t.r1().den() * t.r2().den());
}

Rational inradius(const RationalTriangle& t) {
  return Rational(2) * t.area() / (t.side_a() + t.side_b() + t.side_g());
}

Classification classify(const RationalTriangle& t) {
  const Int& a1 = t.r1().num();
  const Int& b1 = t.r1().den();
  const Int& a2 = t.r2().num();
  const Int& b2 = t.r2().den();
  return Classification{a1 * a2 == b1 * b2, a1 * b2 == a2 * b1};
}

static void validate_sides(const Rational& a, const Rational& b, const Rational& g) {
  auto positive = [](const Rational& s, const char* name) {
    if (!(s > Rational(0))) {
      throw ValidationError(std::string("sides: ") + name + " must be positive (got " +
                            s.str() + ")");
    }
  };
  positive(a, "a");
  positive(b, "b");
  positive(g, "g");
  auto strict = [](const Rational& x, const Rational& y, const Rational& z,
                   const char* text) {
    if (!(x + y > z)) {
      throw ValidationError(std::string("triangle inequality ") + text +
                            " violated (" + x.str() + " + " + y.str() +
                            " <= " + z.str() + ")");
    }
  };
  strict(a, b, g, "a + b > g");
  strict(b, g, a, "b + g > a");
  strict(a, g, b, "a + g > b");
}

SideCosines cos_from_sides(const Rational& a, const Rational& b, const Rational& g) {
  validate_sides(a, b, g);
  Rational aa = a * a;
  Rational bb = b * b;
  Rational gg = g * g;
  return SideCosines{
      (bb + gg - aa) / (Rational(2) * b * g),
      (aa + gg - bb) / (Rational(2) * a * g),
      (aa + bb - gg) / (Rational(2) * a * b),
  };
}

Rational heron_squared_area(const Rational& a, const Rational& b, const Rational& g) {
  return (a + b + g) * (-a + b + g) * (a - b + g) * (a + b - g) / Rational(16);
}

std::optional<Rational> heron_area(const Rational& a, const Rational& b,
                                   const Rational& g) {
  validate_sides(a, b, g);
  return is_rational_square(heron_squared_area(a, b, g));
}

RationalityReport is_rational_triangle(const Rational& a, const Rational& b,
                                       const Rational& g) {
  validate_sides(a, b, g);
  Rational squared = heron_squared_area(a, b, g);
  std::optional<Rational> root = is_rational_square(squared);
  return RationalityReport{root.has_value(), std::move(root), std::move(squared)};
}

}  // namespace ratri
