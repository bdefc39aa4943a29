#include "ratri/family.hpp"

#include <algorithm>
#include <utility>

namespace ratri {

CongruenceKey canonical_key(const RationalTriangle& t) {
  CongruenceKey key{t.side_a(), t.side_b(), t.side_g()};
  std::sort(key.begin(), key.end());
  return key;
}

TriangleFamily::TriangleFamily(PythRational r, PythRational s)
    : r_(std::move(r)), s_(std::move(s)) {
  PythRational ir = reciprocal(r_);
  PythRational is = reciprocal(s_);

  // Slope-magnitude pairs (m1, -m2) in the fixed member order 1..8.
  const std::array<std::pair<const PythRational*, const PythRational*>, 8> pairs{{
      {&r_, &s_},
      {&r_, &is},
      {&s_, &r_},
      {&s_, &ir},
      {&ir, &s_},
      {&ir, &is},
      {&is, &r_},
      {&is, &ir},
  }};

  members_.reserve(8);
  for (const auto& [m1, m2] : pairs) {
    members_.push_back(construct(*m1, *m2));
  }

  for (int i = 0; i < 8; ++i) {
    CongruenceKey key = canonical_key(members_[static_cast<std::size_t>(i)]);
    auto it = std::find_if(classes_.begin(), classes_.end(),
                           [&](const CongruenceClass& c) { return c.key == key; });
    if (it == classes_.end()) {
      classes_.push_back(CongruenceClass{std::move(key), {i + 1}});
    } else {
      it->members.push_back(i + 1);
    }
  }
  // Built in member order, so classes are already sorted by smallest member.
}

TriangleFamily eight_triangles(const PythRational& r, const PythRational& s) {
  if (r == s) {
    throw ValidationError("family: distinct Pythagorean rationals required (got " +
                          r.str() + " twice)");
  }
  return TriangleFamily(r, s);
}

const std::vector<CongruenceClass>& congruence_classes(const TriangleFamily& f) {
  return f.classes();
}

Catalog enumerate_catalog(const Int& max_m, bool with_families) {
  Catalog cat;
  cat.max_m = max_m;
  cat.triples = enumerate_primitive(max_m);

  std::vector<PythRational> slopes;
  slopes.reserve(cat.triples.size());
  for (const PythTriple& t : cat.triples) {
    slopes.push_back(pyth_rational(t.a, t.b));
  }

  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      TriangleFamily fam = eight_triangles(slopes[i], slopes[j]);
      cat.pair_count += 1;
      cat.triangle_count += fam.members().size();
      cat.class_count += fam.classes().size();
      if (with_families) {
        cat.families.push_back(std::move(fam));
      }
    }
  }
  return cat;
}

}  // namespace ratri
