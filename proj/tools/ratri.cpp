// ratri: generate Pythagorean triples and exact rational triangles, and
// verify rationality of arbitrary rational-sided triangles.
//
// Exit codes: 0 success (including a "not rational" verdict), 1 domain or
// validation failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratri/errors.hpp"
#include "ratri/family.hpp"
#include "ratri/pythagorean.hpp"
#include "ratri/rational.hpp"
#include "ratri/render.hpp"
#include "ratri/triangle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ratri::Int parse_positive_int(const std::string& text, const std::string& flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(flag + " expects a positive integer (got \"" + text + "\")");
  }
  ratri::Int value(text);
  if (value < 1) {
    throw UsageError(flag + " must be >= 1 (got " + text + ")");
  }
  return value;
}

// Slope inputs are strictly "p/q" with positive integers on both sides.
ratri::PythRational parse_slope(const std::string& text, const std::string& flag) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    throw UsageError(flag + " expects a fraction \"p/q\" (got \"" + text + "\")");
  }
  std::string p = text.substr(0, slash);
  std::string q = text.substr(slash + 1);
  if (p.empty() || q.empty() ||
      p.find_first_not_of("0123456789") != std::string::npos ||
      q.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(flag + " expects a fraction \"p/q\" (got \"" + text + "\")");
  }
  return ratri::pyth_rational(ratri::Int(p), ratri::Int(q));
}

// Sides accept "p/q" or a whole-number shorthand "p".
ratri::Rational parse_side(const std::string& text) {
  try {
    return ratri::Rational::parse(text);
  } catch (const ratri::ValidationError& e) {
    throw UsageError(std::string("side: ") + e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("side: ") + e.what());
  }
}

int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path \"" << out_path << "\"\n";
    return kExitDomain;
  }
  out << body;
  if (!out.good()) {
    std::cerr << "error: failed writing to \"" << out_path << "\"\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational triangles from Pythagorean rationals"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string out_path;
  app.add_option("--format", format_name, "output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  auto* cmd_triples =
      app.add_subcommand("triples", "enumerate primitive Pythagorean triples");
  std::string triples_max_m;
  std::string triples_d = "1";
  cmd_triples->add_option("--max-m", triples_max_m, "largest generator m")->required();
  cmd_triples->add_option("--d", triples_d, "scale factor applied to every triple")
      ->capture_default_str();

  auto* cmd_triangle =
      app.add_subcommand("triangle", "construct the triangle of two slopes");
  std::string r1_text, r2_text;
  bool degrees = false;
  cmd_triangle->add_option("--r1", r1_text, "first slope, a Pythagorean rational p/q")
      ->required();
  cmd_triangle->add_option("--r2", r2_text, "second slope magnitude p/q")->required();
  cmd_triangle->add_flag("--degrees", degrees,
                         "append approximate degree measures (text format)");

  auto* cmd_family =
      app.add_subcommand("family", "the eight triangles of two distinct slopes");
  std::string fam_r_text, fam_s_text;
  cmd_family->add_option("--r", fam_r_text, "first Pythagorean rational p/q")
      ->required();
  cmd_family->add_option("--s", fam_s_text, "second Pythagorean rational p/q")
      ->required();

  auto* cmd_catalog =
      app.add_subcommand("catalog", "families over all pairs of primitive triples");
  std::string catalog_max_m;
  bool full = false;
  cmd_catalog->add_option("--max-m", catalog_max_m, "largest generator m")->required();
  cmd_catalog->add_flag("--full", full, "emit every family, not just the counts");

  auto* cmd_check =
      app.add_subcommand("check", "decide whether three sides make a rational triangle");
  std::vector<std::string> side_texts;
  cmd_check->add_option("sides", side_texts, "three side lengths, p/q or integer")
      ->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  ratri::OutputFormat format = ratri::OutputFormat::text;
  try {
    auto parsed = ratri::parse_format(format_name);
    if (!parsed) {
      throw UsageError("--format must be text, json or csv (got \"" + format_name +
                       "\")");
    }
    format = *parsed;

    if (cmd_triples->parsed()) {
      ratri::Int max_m = parse_positive_int(triples_max_m, "--max-m");
      ratri::Int d = parse_positive_int(triples_d, "--d");
      std::vector<ratri::PythTriple> rows = ratri::enumerate_primitive(max_m);
      if (d > 1) {
        for (ratri::PythTriple& row : rows) {
          row = ratri::triple_from_params(d, row.m, row.n);
        }
      }
      return emit(ratri::render_triples(rows, format), out_path);
    }

    if (cmd_triangle->parsed()) {
      ratri::PythRational r1 = parse_slope(r1_text, "--r1");
      ratri::PythRational r2 = parse_slope(r2_text, "--r2");
      ratri::RationalTriangle t = ratri::construct(r1, r2);
      return emit(ratri::render_triangle(t, format, degrees), out_path);
    }

    if (cmd_family->parsed()) {
      ratri::PythRational r = parse_slope(fam_r_text, "--r");
      ratri::PythRational s = parse_slope(fam_s_text, "--s");
      ratri::TriangleFamily fam = ratri::eight_triangles(r, s);
      return emit(ratri::render_family(fam, format), out_path);
    }

    if (cmd_catalog->parsed()) {
      ratri::Int max_m = parse_positive_int(catalog_max_m, "--max-m");
      ratri::Catalog cat = ratri::enumerate_catalog(max_m, full);
      return emit(ratri::render_catalog(cat, format, full), out_path);
    }

    if (cmd_check->parsed()) {
      std::array<ratri::Rational, 3> sides{parse_side(side_texts[0]),
                                           parse_side(side_texts[1]),
                                           parse_side(side_texts[2])};
      ratri::RationalityReport report =
          ratri::is_rational_triangle(sides[0], sides[1], sides[2]);
      return emit(ratri::render_check(sides, report, format), out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  } catch (const ratri::NotPythagoreanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ratri::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  return kExitOk;
}
