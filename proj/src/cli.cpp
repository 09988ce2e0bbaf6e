#include "pdisk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <regex>
#include <sstream>

#include "pdisk/radius.hpp"
#include "pdisk/symmetric.hpp"
#include "pdisk/triangle.hpp"
#include "pdisk/verify.hpp"

namespace pdisk {

using nlohmann::json;

namespace {

std::string g12(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

mpq_class rational_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return mpq_class(mpz_class(v.dump()));
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(where + ": must be finite");
    return mpq_class(d);
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  throw SchemaError(where + ": expected a number or a rational string");
}

}  // namespace

mpq_class parse_rational(const std::string& s) {
  static const std::regex fraction(R"(\s*([+-]?\d+)\s*(/\s*(\d+))?\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)\.(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    mpz_class den(m[3].matched ? m[3].str() : "1", 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, m, decimal)) {
    const std::string digits = (m[2].str().empty() ? "0" : m[2].str()) + m[3].str();
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].str().size());
    mpq_class q(num, den);
    q.canonicalize();
    return m[1].str() == "-" ? mpq_class(-q) : q;
  }
  throw std::invalid_argument("not a rational number: '" + s + "'");
}

CollectionDocument parse_collection_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("document: expected a JSON object");
  if (!doc.contains("disks")) throw SchemaError("document: missing field 'disks'");
  const json& disks = doc["disks"];
  if (!disks.is_array()) throw SchemaError("disks: expected an array");
  if (disks.empty()) throw SchemaError("disks: must contain at least one disk");

  std::vector<GaussianRational> centers;
  std::vector<mpq_class> radii;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const std::string where = "disks[" + std::to_string(i) + "]";
    const json& d = disks[i];
    if (!d.is_object()) throw SchemaError(where + ": expected an object");
    if (!d.contains("center")) throw SchemaError(where + ": missing field 'center'");
    if (!d.contains("radius")) throw SchemaError(where + ": missing field 'radius'");
    const json& c = d["center"];
    if (!c.is_array() || c.size() != 2) throw SchemaError(where + ".center: expected [re, im]");
    centers.emplace_back(rational_field(c[0], where + ".center[0]"), rational_field(c[1], where + ".center[1]"));
    mpq_class r = rational_field(d["radius"], where + ".radius");
    if (sgn(r) <= 0) throw SchemaError(where + ".radius: must be positive");
    radii.push_back(std::move(r));
  }
  std::map<std::string, std::string> metadata;
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw SchemaError("metadata: expected an object");
    for (const auto& [k, v] : doc["metadata"].items()) metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  try {
    RationalDiskCollection exact(std::move(centers), std::move(radii));
    DiskCollection<double> floating = exact.to_floating();
    return {std::move(exact), std::move(floating), std::move(metadata)};
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("disks: ") + e.what());
  }
}

namespace {

json certificate_json(const Certificate& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LeadingMinors>)
          return {{"type", "leading_minors"}, {"values", v.values}, {"signs", v.signs}};
        else if constexpr (std::is_same_v<T, FailingPivot>)
          return {{"type", "failing_pivot"}, {"index", v.index}, {"value", v.value}};
        else if constexpr (std::is_same_v<T, PivotSequence>)
          return {{"type", "pivot_sequence"}, {"order", v.order}, {"pivots", v.pivots}};
        else
          return {{"type", "eigenvalues"}, {"values", v.values}};
      },
      c);
}

std::string certificate_text(const Certificate& c) {
  auto list = [](const auto& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + g12(static_cast<double>(xs[i]));
    return s;
  };
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LeadingMinors>)
          return "leading minors: " + list(v.values);
        else if constexpr (std::is_same_v<T, FailingPivot>)
          return "failing pivot at disk " + std::to_string(v.index) + ": " + g12(v.value);
        else if constexpr (std::is_same_v<T, PivotSequence>)
          return "pivot order: " + list(v.order) + "; pivots: " + list(v.pivots);
        else
          return "eigenvalues: " + list(v.values);
      },
      c);
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

struct CheckFlags {
  std::string input = "-";
  std::string mode = "floating";
  double tol = 1e-10;
  bool scale = false;
  bool strict = false;
  bool eigenvalues = false;
  std::string format = "text";
};

int cmd_check(const CheckFlags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  CollectionDocument doc = [&] { return parse_collection_document(read_input(f.input, in)); }();
  const bool admissible = is_admissible(doc.exact);
  if (f.strict && !admissible) {
    err << "error: collection is not admissible (some center lies in the closure of another disk)\n";
    return exit_code::inadmissible;
  }
  const int n = doc.floating.size();
  std::optional<double> beta;
  if (n >= 2) beta = overlap_measure(doc.floating);

  PositivityReport rep;
  if (f.mode == "exact") {
    rep = is_positive_definite(build_q_matrix(doc.exact));
  } else {
    rep = is_positive_definite(build_q_matrix(doc.floating), f.tol, f.eigenvalues);
  }
  std::optional<double> scale;
  if (f.scale) scale = max_uniform_scale(doc.floating);

  if (f.format == "json") {
    json j{{"n", n},
           {"admissible", admissible},
           {"mode", f.mode},
           {"verdict", to_string(rep.verdict)},
           {"tolerance", rep.tolerance_used},
           {"certificate", certificate_json(rep.certificate)}};
    j["beta"] = beta ? json(*beta) : json(nullptr);
    if (scale) j["max_uniform_scale"] = std::isinf(*scale) ? json(nullptr) : json(*scale);
    if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
    out << j.dump(2) << "\n";
  } else {
    out << "disks:       " << n << "\n";
    out << "admissible:  " << (admissible ? "yes" : "no") << "\n";
    out << "beta:        " << (beta ? g12(*beta) : std::string("n/a")) << "\n";
    out << "mode:        " << f.mode << "\n";
    out << "verdict:     " << to_string(rep.verdict) << "\n";
    out << "tolerance:   " << g12(rep.tolerance_used) << "\n";
    out << "certificate: " << certificate_text(rep.certificate) << "\n";
    if (scale) out << "max scale:   " << g12(*scale) << "\n";
  }
  return exit_code::ok;
}

struct RhoFlags {
  int n = 0;
  std::string range;
  double precision = 1e-13;
  bool csv = false;
  bool limits = false;
};

int cmd_rho(const RhoFlags& f, std::ostream& out, std::ostream& err) {
  int a = f.n, b = f.n;
  if (!f.range.empty()) {
    std::smatch m;
    static const std::regex re(R"((\d+)\.\.(\d+))");
    if (!std::regex_match(f.range, m, re)) {
      err << "error: --range expects a..b\n";
      return exit_code::usage;
    }
    a = std::stoi(m[1].str());
    b = std::stoi(m[2].str());
  }
  if (a < 2 || b < a || b > 256) {
    err << "error: need 2 <= n (and a <= b <= 256), got " << a << ".." << b << "\n";
    return exit_code::usage;
  }
  if (!(f.precision > 0)) {
    err << "error: --precision must be positive\n";
    return exit_code::usage;
  }
  const std::vector<std::string> header{"n", "rho", "mu", "lower_bound", "upper_bound", "beta", "n_rho"};
  std::vector<std::vector<std::string>> rows;
  for (int n = a; n <= b; ++n) {
    const RadiusResult r = maximal_radius(n, f.precision);
    rows.push_back({std::to_string(n), g12(r.rho), g12(r.mu), r.lower_bound ? g12(*r.lower_bound) : "",
                    r.upper_bound ? g12(*r.upper_bound) : "", g12(r.beta), g12(n * r.rho)});
  }
  if (f.limits) {
    const double j11 = bessel_j1_first_zero();
    rows.push_back({"limit", "", "", "", "", g12(j11 / std::acos(-1.0)), g12(j11)});
  }
  if (f.csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], std::max<std::size_t>(row[i].size(), 1));
    auto emit = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        const std::string cell = row[i].empty() ? "-" : row[i];
        out << (i ? "  " : "") << std::string(width[i] - cell.size(), ' ') << cell;
      }
      out << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
  }
  return exit_code::ok;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<CheckOutcome> results;
  try {
    results = run_verification(opts);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " (" << r.cases << " cases";
    if (!r.passed()) out << ", " << r.failures << " failed";
    out << ")\n";
    if (!r.passed()) {
      out << "  first counterexample: " << r.first_counterexample << "\n";
      ++failed;
    }
  }
  out << (failed ? "FAILED: " : "OK: ") << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
      << " checks passed (seed " << opts.seed << ")\n";
  return failed ? exit_code::verification_failed : exit_code::ok;
}

int cmd_triangle(const std::vector<double>& radii, std::ostream& out, std::ostream& err) {
  try {
    const TriangleVerdict v = triangle_verdict(radii[0], radii[1], radii[2]);
    const auto d = triangle_minors(radii[0] * radii[0], radii[1] * radii[1], radii[2] * radii[2]);
    out << "sum R^2:  " << g12(v.radius_square_sum) << "\n";
    out << "positive: " << (v.positive ? "yes" : "no") << "\n";
    if (v.near_boundary) out << "warning:  within 1e-12 of the boundary R1^2 + R2^2 + R3^2 = 3\n";
    out << "minors:   " << g12(d[0]) << " " << g12(d[1]) << " " << g12(d[2]) << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::ok;
}

int cmd_tpoly(int n, std::optional<int> m, std::ostream& out, std::ostream& err) {
  if (n < 2 || n > 256 || (m && (*m < 1 || *m > n))) {
    err << "error: need 2 <= n <= 256 and 1 <= m <= n\n";
    return exit_code::usage;
  }
  for (int k = m.value_or(1); k <= m.value_or(n); ++k)
    out << "T_" << n << "," << k << "(z) = " << t_polynomial(n, k).to_string("z") << "\n";
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive definiteness of disk-collection matrices and maximal radii of regular n-gons", "pdisk"};
  app.require_subcommand(1);

  CheckFlags check;
  auto* sc = app.add_subcommand("check", "Decide positivity of a disk collection given as JSON");
  sc->add_option("input", check.input, "JSON document, '-' for stdin")->capture_default_str();
  sc->add_option("--mode", check.mode, "floating or exact")
      ->check(CLI::IsMember({"floating", "exact"}))
      ->capture_default_str();
  sc->add_option("--tol", check.tol, "Relative pivot tolerance (floating mode)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sc->add_flag("--scale", check.scale, "Also report the maximal uniform radius scale");
  sc->add_flag("--strict-admissible", check.strict, "Exit with code 3 on inadmissible input");
  sc->add_flag("--eigenvalues", check.eigenvalues, "Report eigenvalues instead of the pivot sequence when positive");
  sc->add_option("--format", check.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  RhoFlags rho;
  auto* sr = app.add_subcommand("rho", "Maximal radius table for regular n-gons");
  auto* n_opt = sr->add_option("--n", rho.n, "Single n");
  auto* range_opt = sr->add_option("--range", rho.range, "Range a..b");
  n_opt->excludes(range_opt);
  sr->add_option("--precision", rho.precision, "Absolute precision of rho")->capture_default_str();
  sr->add_flag("--csv", rho.csv, "CSV output");
  sr->add_flag("--limits", rho.limits, "Append the limit row (j11/pi for beta, j11 for n*rho)");

  VerifyOptions verify;
  auto* sv = app.add_subcommand("verify", "Run property suites");
  sv->add_option("--suite", verify.suite, "core, symmetric, orthopoly, radius, triangle or all")->capture_default_str();
  sv->add_option("--nmax", verify.nmax, "Largest n (0 for the suite default)")->capture_default_str();
  sv->add_option("--seed", verify.seed, "Seed for randomized checks")->capture_default_str();

  std::vector<double> tri_radii;
  auto* st = app.add_subcommand("triangle", "Three disks at the cube roots of unity");
  st->add_option("radii", tri_radii, "R1 R2 R3")->expected(3)->required();

  int tp_n = 0;
  std::optional<int> tp_m;
  auto* stp = app.add_subcommand("tpoly", "Print T-polynomials");
  stp->add_option("--n", tp_n, "n")->required();
  stp->add_option("--m", tp_m, "m (all when omitted)");

  std::vector<std::string> storage{"pdisk"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    if (sc->parsed()) return cmd_check(check, in, out, err);
    if (sr->parsed()) {
      if (n_opt->count() == 0 && range_opt->count() == 0) {
        err << "error: rho needs --n or --range\n";
        return exit_code::usage;
      }
      return cmd_rho(rho, out, err);
    }
    if (sv->parsed()) return cmd_verify(verify, out, err);
    if (st->parsed()) return cmd_triangle(tri_radii, out, err);
    if (stp->parsed()) return cmd_tpoly(tp_n, tp_m, out, err);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace pdisk
