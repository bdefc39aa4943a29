#pragma once

#include <optional>

#include "ratri/pythagorean.hpp"
#include "ratri/rational.hpp"

namespace ratri {

struct Heights {
  Rational h_a, h_b, h_g;  // h_i * side_i = 2 * area; h_g is always 1
};

/// Exact cosine/sine pairs for the five construction angles: j1 and j2
/// between each ray and the x-axis, j = j1 + j2 at the origin, w1 and w2
/// at the other two vertices. Every pair satisfies cos^2 + sin^2 = 1, and
/// w1 + w2 = 180deg - j holds under the exact addition formulas.
struct AngleSet {
  Rational cos_j1, sin_j1;
  Rational cos_j2, sin_j2;
  Rational cos_j, sin_j;
  Rational cos_w1, sin_w1;
  Rational cos_w2, sin_w2;
};

struct Classification {
  bool is_right;      // a1*a2 == b1*b2, equivalently side_a^2 + side_b^2 == side_g^2
  bool is_isosceles;  // a1*b2 == a2*b1, equivalently side_a == side_b
};

/// Law-of-cosines values, each named for the side its angle faces.
struct SideCosines {
  Rational cos_a, cos_b, cos_g;
};

class RationalTriangle;

RationalTriangle construct(const PythRational& r1, const PythRational& r2);

/// The triangle with vertices O(0,0), A1(1, m1), A2(1, m2), where m1 is the
/// value of r1 and m2 is minus the value of r2. Sides and area come out
/// exactly rational:
///   side_a = |OA1| = c1/b1, side_b = |OA2| = c2/b2,
///   side_g = |A1A2| = m1 - m2, area = side_g / 2 (unit base-to-line height).
/// The Heron value of the sides is recomputed at construction and must match
/// the closed-form area; a mismatch is an internal arithmetic bug.
class RationalTriangle {
 public:
  const PythRational& r1() const noexcept { return r1_; }
  const PythRational& r2() const noexcept { return r2_; }
  const Rational& side_a() const noexcept { return side_a_; }
  const Rational& side_b() const noexcept { return side_b_; }
  const Rational& side_g() const noexcept { return side_g_; }
  const Rational& area() const noexcept { return area_; }

 private:
  RationalTriangle(PythRational r1, PythRational r2);
  friend RationalTriangle construct(const PythRational& r1, const PythRational& r2);

  PythRational r1_;
  PythRational r2_;
  Rational side_a_, side_b_, side_g_;
  Rational area_;
};

Heights heights(const RationalTriangle& t);
AngleSet angles(const RationalTriangle& t);

/// c1*c2 / (2*b1*b2); equal to side_a*side_b*side_g / (4*area).
Rational circumradius(const RationalTriangle& t);

/// 2*area / (side_a + side_b + side_g).
Rational inradius(const RationalTriangle& t);

Classification classify(const RationalTriangle& t);

/// Law of cosines for arbitrary positive rational sides. Throws
/// ValidationError when the sides are nonpositive or violate a strict
/// triangle inequality.
SideCosines cos_from_sides(const Rational& a, const Rational& b, const Rational& g);

/// Squared Heron area (a+b+g)(-a+b+g)(a-b+g)(a+b-g) / 16; rational for any
/// rational sides, and a rational square exactly when the area is rational.
Rational heron_squared_area(const Rational& a, const Rational& b, const Rational& g);

/// Exact Heron area when it is rational, nullopt when irrational.
std::optional<Rational> heron_area(const Rational& a, const Rational& b,
                                   const Rational& g);

struct RationalityReport {
  bool is_rational;
  std::optional<Rational> area;  // engaged iff is_rational
  Rational squared_area;         // certificate either way
};

/// Decides whether rational sides make a rational triangle (rational area),
/// with the exact area on success and the non-square squared area as the
/// counterexample certificate on failure.
RationalityReport is_rational_triangle(const Rational& a, const Rational& b,
                                       const Rational& g);

}  // namespace ratri
