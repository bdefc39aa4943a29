#include "ratri/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace ratri {

using ordered_json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

namespace {

std::string quoted(const Rational& r) { return "\"" + r.str() + "\""; }

ordered_json pyth_json(const PythRational& r) {
  return ordered_json{{"num", r.num().str()}, {"den", r.den().str()}, {"hyp", r.hyp().str()}};
}

ordered_json triple_json(const PythTriple& t) {
  return ordered_json{{"d", t.d.str()}, {"m", t.m.str()}, {"n", t.n.str()},
                      {"a", t.a.str()}, {"b", t.b.str()}, {"c", t.c.str()}};
}

ordered_json triangle_json(const RationalTriangle& t) {
  Heights h = heights(t);
  AngleSet ang = angles(t);
  Classification cls = classify(t);
  return ordered_json{
      {"r1", pyth_json(t.r1())},
      {"r2", pyth_json(t.r2())},
      {"sides", {t.side_a().str(), t.side_b().str(), t.side_g().str()}},
      {"area", t.area().str()},
      {"heights", {h.h_a.str(), h.h_b.str(), h.h_g.str()}},
      {"angles",
       {{"cos_j1", ang.cos_j1.str()},
        {"sin_j1", ang.sin_j1.str()},
        {"cos_j2", ang.cos_j2.str()},
        {"sin_j2", ang.sin_j2.str()},
        {"cos_j", ang.cos_j.str()},
        {"sin_j", ang.sin_j.str()},
        {"cos_w1", ang.cos_w1.str()},
        {"sin_w1", ang.sin_w1.str()},
        {"cos_w2", ang.cos_w2.str()},
        {"sin_w2", ang.sin_w2.str()}}},
      {"circumradius", circumradius(t).str()},
      {"inradius", inradius(t).str()},
      {"right", cls.is_right},
      {"isosceles", cls.is_isosceles},
  };
}

ordered_json family_json(const TriangleFamily& fam) {
  ordered_json members = ordered_json::array();
  for (const RationalTriangle& t : fam.members()) {
    members.push_back(triangle_json(t));
  }
  ordered_json classes = ordered_json::array();
  for (const CongruenceClass& c : fam.classes()) {
    classes.push_back(c.members);
  }
  return ordered_json{
      {"r", pyth_json(fam.r())},
      {"s", pyth_json(fam.s())},
      {"members", members},
      {"classes", classes},
  };
}

constexpr char kTriangleCsvHeader[] = "r1,r2,a,b,g,E,h_a,h_b,h_g,R,r,right,isosceles";

std::string triangle_csv_row(const RationalTriangle& t) {
  Heights h = heights(t);
  Classification cls = classify(t);
  std::ostringstream out;
  out << quoted(t.r1().value()) << ',' << quoted(t.r2().value()) << ','
      << quoted(t.side_a()) << ',' << quoted(t.side_b()) << ',' << quoted(t.side_g())
      << ',' << quoted(t.area()) << ',' << quoted(h.h_a) << ',' << quoted(h.h_b) << ','
      << quoted(h.h_g) << ',' << quoted(circumradius(t)) << ',' << quoted(inradius(t))
      << ',' << (cls.is_right ? "true" : "false") << ','
      << (cls.is_isosceles ? "true" : "false");
  return out.str();
}

constexpr char kFamilyCsvHeader[] =
    "family_r,family_s,member,class,r1,r2,a,b,g,E,h_a,h_b,h_g,R,r,right,isosceles";

void family_csv_rows(const TriangleFamily& fam, std::ostringstream& out) {
  for (std::size_t i = 0; i < fam.members().size(); ++i) {
    int member = static_cast<int>(i) + 1;
    int class_id = 0;
    for (std::size_t c = 0; c < fam.classes().size(); ++c) {
      const auto& ms = fam.classes()[c].members;
      if (std::find(ms.begin(), ms.end(), member) != ms.end()) {
        class_id = static_cast<int>(c) + 1;
        break;
      }
    }
    out << quoted(fam.r().value()) << ',' << quoted(fam.s().value()) << ',' << member
        << ',' << class_id << ',' << triangle_csv_row(fam.members()[i]) << '\n';
  }
}

double degrees_of(const Rational& cos_v, const Rational& sin_v) {
  return std::atan2(sin_v.to_double(), cos_v.to_double()) * 180.0 / std::numbers::pi;
}

std::string fmt_degrees(double deg) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", deg);
  return buf;
}

std::string triangle_text(const RationalTriangle& t, bool with_degrees) {
  Heights h = heights(t);
  AngleSet ang = angles(t);
  Classification cls = classify(t);
  std::ostringstream out;
  out << "r1 = " << t.r1().str() << "\n";
  out << "r2 = " << t.r2().str() << "\n";
  out << "sides: a = " << t.side_a() << ", b = " << t.side_b()
      << ", g = " << t.side_g() << "\n";
  out << "area: " << t.area() << "\n";
  out << "heights: h_a = " << h.h_a << ", h_b = " << h.h_b << ", h_g = " << h.h_g
      << "\n";
  out << "angles:\n";
  out << "  cos_j1 = " << ang.cos_j1 << ", sin_j1 = " << ang.sin_j1 << "\n";
  out << "  cos_j2 = " << ang.cos_j2 << ", sin_j2 = " << ang.sin_j2 << "\n";
  out << "  cos_j  = " << ang.cos_j << ", sin_j  = " << ang.sin_j << "\n";
  out << "  cos_w1 = " << ang.cos_w1 << ", sin_w1 = " << ang.sin_w1 << "\n";
  out << "  cos_w2 = " << ang.cos_w2 << ", sin_w2 = " << ang.sin_w2 << "\n";
  out << "circumradius: " << circumradius(t) << "\n";
  out << "inradius: " << inradius(t) << "\n";
  out << "right: " << (cls.is_right ? "yes" : "no")
      << ", isosceles: " << (cls.is_isosceles ? "yes" : "no") << "\n";
  if (with_degrees) {
    out << "degrees (approx):\n";
    out << "  j1 = " << fmt_degrees(degrees_of(ang.cos_j1, ang.sin_j1)) << "\n";
    out << "  j2 = " << fmt_degrees(degrees_of(ang.cos_j2, ang.sin_j2)) << "\n";
    out << "  j  = " << fmt_degrees(degrees_of(ang.cos_j, ang.sin_j)) << "\n";
    out << "  w1 = " << fmt_degrees(degrees_of(ang.cos_w1, ang.sin_w1)) << "\n";
    out << "  w2 = " << fmt_degrees(degrees_of(ang.cos_w2, ang.sin_w2)) << "\n";
  }
  return out.str();
}

std::string family_text(const TriangleFamily& fam) {
  std::ostringstream out;
  out << "r = " << fam.r().str() << "\n";
  out << "s = " << fam.s().str() << "\n";
  out << "members:\n";
  for (std::size_t i = 0; i < fam.members().size(); ++i) {
    const RationalTriangle& t = fam.members()[i];
    out << "  " << (i + 1) << ": m1 = " << t.r1().value() << ", m2 = -"
        << t.r2().value() << ", sides (" << t.side_a() << ", " << t.side_b() << ", "
        << t.side_g() << ")\n";
  }
  out << "classes:";
  for (const CongruenceClass& c : fam.classes()) {
    out << " {";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i > 0) out << ',';
      out << c.members[i];
    }
    out << "}";
  }
  out << "\n";
  return out.str();
}

}  // namespace

std::string render_triples(const std::vector<PythTriple>& rows, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const PythTriple& t : rows) {
        arr.push_back(triple_json(t));
      }
      return ordered_json{{"triples", arr}}.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "d,m,n,a,b,c\n";
      for (const PythTriple& t : rows) {
        out << t.d << ',' << t.m << ',' << t.n << ',' << t.a << ',' << t.b << ','
            << t.c << '\n';
      }
      return out.str();
    }
    case OutputFormat::text: {
      // Column-aligned table in the d, m, n, a, b, c order.
      std::array<std::string, 6> headers{"d", "m", "n", "a", "b", "c"};
      std::vector<std::array<std::string, 6>> cells;
      cells.reserve(rows.size());
      for (const PythTriple& t : rows) {
        cells.push_back({t.d.str(), t.m.str(), t.n.str(), t.a.str(), t.b.str(),
                         t.c.str()});
      }
      std::array<std::size_t, 6> width{};
      for (std::size_t c = 0; c < 6; ++c) {
        width[c] = headers[c].size();
        for (const auto& row : cells) {
          width[c] = std::max(width[c], row[c].size());
        }
      }
      std::ostringstream out;
      auto emit = [&](const std::array<std::string, 6>& row) {
        for (std::size_t c = 0; c < 6; ++c) {
          if (c > 0) out << "  ";
          out << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << '\n';
      };
      emit(headers);
      for (const auto& row : cells) {
        emit(row);
      }
      return out.str();
    }
  }
  return {};
}

std::string render_triangle(const RationalTriangle& t, OutputFormat fmt,
                            bool with_degrees) {
  switch (fmt) {
    case OutputFormat::json:
      return triangle_json(t).dump(2) + "\n";
    case OutputFormat::csv:
      return std::string(kTriangleCsvHeader) + "\n" + triangle_csv_row(t) + "\n";
    case OutputFormat::text:
      return triangle_text(t, with_degrees);
  }
  return {};
}

std::string render_family(const TriangleFamily& fam, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json:
      return family_json(fam).dump(2) + "\n";
    case OutputFormat::csv: {
      std::ostringstream out;
      out << kFamilyCsvHeader << '\n';
      family_csv_rows(fam, out);
      return out.str();
    }
    case OutputFormat::text:
      return family_text(fam);
  }
  return {};
}

std::string render_catalog(const Catalog& cat, OutputFormat fmt, bool full) {
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json triples = ordered_json::array();
      for (const PythTriple& t : cat.triples) {
        triples.push_back(triple_json(t));
      }
      ordered_json out{
          {"max_m", cat.max_m.str()},
          {"triples", triples},
          {"pair_count", cat.pair_count},
          {"triangle_count", cat.triangle_count},
          {"class_count", cat.class_count},
      };
      if (full) {
        ordered_json families = ordered_json::array();
        for (const TriangleFamily& fam : cat.families) {
          families.push_back(family_json(fam));
        }
        out["families"] = families;
      }
      return out.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      if (!full) {
        out << "max_m,pair_count,triangle_count,class_count\n";
        out << cat.max_m << ',' << cat.pair_count << ',' << cat.triangle_count << ','
            << cat.class_count << '\n';
        return out.str();
      }
      out << kFamilyCsvHeader << '\n';
      for (const TriangleFamily& fam : cat.families) {
        family_csv_rows(fam, out);
      }
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      out << "pairs: " << cat.pair_count << ", triangles: " << cat.triangle_count
          << ", classes: " << cat.class_count << "\n";
      if (full) {
        for (const TriangleFamily& fam : cat.families) {
          out << '\n' << family_text(fam);
        }
      }
      return out.str();
    }
  }
  return {};
}

std::string render_check(const std::array<Rational, 3>& sides,
                         const RationalityReport& report, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json out{
          {"sides", {sides[0].str(), sides[1].str(), sides[2].str()}},
          {"rational", report.is_rational},
      };
      if (report.is_rational) {
        SideCosines cos = cos_from_sides(sides[0], sides[1], sides[2]);
        out["area"] = report.area->str();
        out["cosines"] = ordered_json{{"cos_a", cos.cos_a.str()},
                                      {"cos_b", cos.cos_b.str()},
                                      {"cos_g", cos.cos_g.str()}};
      } else {
        out["heron_product"] = report.squared_area.str();
      }
      return out.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "a,b,g,rational,area,P\n";
      out << quoted(sides[0]) << ',' << quoted(sides[1]) << ',' << quoted(sides[2])
          << ',' << (report.is_rational ? "true" : "false") << ',';
      if (report.is_rational) {
        out << quoted(*report.area) << ",\"\"";
      } else {
        out << "\"\"," << quoted(report.squared_area);
      }
      out << '\n';
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      if (report.is_rational) {
        SideCosines cos = cos_from_sides(sides[0], sides[1], sides[2]);
        out << "rational: yes\n";
        out << "area = " << *report.area << "\n";
        out << "cos_a = " << cos.cos_a << ", cos_b = " << cos.cos_b
            << ", cos_g = " << cos.cos_g << "\n";
      } else {
        out << "rational: no\n";
        out << "P = " << report.squared_area << " (not a rational square)\n";
      }
      return out.str();
    }
  }
  return {};
}

}  // namespace ratri
