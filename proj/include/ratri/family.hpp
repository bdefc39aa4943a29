#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ratri/triangle.hpp"

namespace ratri {

/// Side lengths sorted ascending; equal keys <=> congruent triangles (SSS).
using CongruenceKey = std::array<Rational, 3>;

CongruenceKey canonical_key(const RationalTriangle& t);

struct CongruenceClass {
  CongruenceKey key;
  std::vector<int> members;  // 1-based member indices, ascending
};

class TriangleFamily;

TriangleFamily eight_triangles(const PythRational& r, const PythRational& s);

/// The eight triangles obtainable from two distinct Pythagorean rationals
/// r and s, in the fixed slope-pair order
///   (r,-s), (r,-1/s), (s,-r), (s,-1/r),
///   (1/r,-s), (1/r,-1/s), (1/s,-r), (1/s,-1/r),
/// partitioned into congruence classes. When r, s, 1/r, 1/s are four
/// distinct values the partition is four pairs: {1,3}, {2,7}, {4,5}, {6,8}.
class TriangleFamily {
 public:
  const PythRational& r() const noexcept { return r_; }
  const PythRational& s() const noexcept { return s_; }
  const std::vector<RationalTriangle>& members() const noexcept { return members_; }

  /// Classes ordered by smallest member index; members ascending within each.
  const std::vector<CongruenceClass>& classes() const noexcept { return classes_; }

 private:
  TriangleFamily(PythRational r, PythRational s);
  friend TriangleFamily eight_triangles(const PythRational& r, const PythRational& s);

  PythRational r_;
  PythRational s_;
  std::vector<RationalTriangle> members_;
  std::vector<CongruenceClass> classes_;
};

/// Builds the family. Throws ValidationError when r = s as reduced fractions.
TriangleFamily eight_triangles(const PythRational& r, const PythRational& s);

/// The family's congruence partition (same data as f.classes()).
const std::vector<CongruenceClass>& congruence_classes(const TriangleFamily& f);

struct Catalog {
  Int max_m;
  std::vector<PythTriple> triples;
  std::uint64_t pair_count = 0;
  std::uint64_t triangle_count = 0;  // 8 * pair_count
  std::uint64_t class_count = 0;     // sum of per-family class counts
  std::vector<TriangleFamily> families;  // filled only when requested
};

/// Enumerates the families over all unordered pairs of primitive-triple
/// rows with m <= max_m, in lexicographic row-index order, the earlier row
/// supplying r. Counts are always aggregated; member data is materialized
/// only when with_families is set.
Catalog enumerate_catalog(const Int& max_m, bool with_families = false);

}  // namespace ratri
