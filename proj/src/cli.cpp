// Copyright 2026 The curvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "curvlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "curvlab/curvature.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/framespec.hpp"
#include "curvlab/invariants.hpp"
#include "curvlab/nc.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/projection.hpp"
#include "curvlab/report.hpp"

namespace curvlab::cli {

namespace {

using ojson = nlohmann::ordered_json;

double parse_real(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw ValidationError("cannot parse complex number '" + whole + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out += c;
  }
  return out;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) {
    throw ValidationError("empty complex number");
  }
  if (const auto comma = s.find(','); comma != std::string::npos) {
    return {parse_real(s.substr(0, comma), text),
            parse_real(s.substr(comma + 1), text)};
  }
  const char last = s.back();
  if (last != 'i' && last != 'j') {
    return {parse_real(s, text), 0.0};
  }
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  const std::string im = split == std::string::npos ? body : body.substr(split);
  double imag;
  if (im.empty() || im == "+") {
    imag = 1.0;
  } else if (im == "-") {
    imag = -1.0;
  } else {
    imag = parse_real(im, text);
  }
  return {re.empty() ? 0.0 : parse_real(re, text), imag};
}

namespace {

ojson complex_json(Complex z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

ojson frame_meta(const HolomorphicFrame& f) {
  ojson m;
  m["label"] = f.label();
  m["N"] = f.dim();
  m["n"] = f.rank();
  m["radius"] = std::isinf(f.radius()) ? ojson(nullptr) : ojson(f.radius());
  return m;
}

CovariantPath parse_path(const std::string& name) {
  if (name == "zbar-first") return CovariantPath::kZbarFirst;
  if (name == "z-first") return CovariantPath::kZFirst;
  throw ValidationError("unknown covariant path '" + name + "'");
}

std::pair<double, double> parse_grid(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    throw ValidationError("--grid expects r,step");
  }
  const double r = parse_real(trim(spec.substr(0, comma)), spec);
  const double step = parse_real(trim(spec.substr(comma + 1)), spec);
  if (!(r >= 0.0) || !(step > 0.0)) {
    throw ValidationError("--grid needs r >= 0 and step > 0");
  }
  return {r, step};
}

void emit(const GridReport& report, const std::string& path,
          ReportFormat format, std::ostream& out) {
  if (!path.empty()) {
    write_report(report, path, format);
  } else if (format == ReportFormat::kCsv) {
    out << to_csv(report);
  } else {
    out << to_json(report);
  }
}

// ---------------------------------------------------------------- curvature

struct CurvatureArgs {
  std::string frame;
  std::string point;
  std::string grid;
  int order = 1;
  std::string path = "zbar-first";
  std::string out;
  std::string format = "csv";
};

int cmd_curvature(const CurvatureArgs& a, std::ostream& out) {
  const HolomorphicFrame f = load_frame_file(a.frame);
  const ReportFormat format = parse_format(a.format);
  const CovariantPath path = parse_path(a.path);
  if (a.order < 0) {
    throw ValidationError("--order must be nonnegative");
  }
  std::vector<Complex> points;
  ojson sampling;
  if (!a.point.empty()) {
    points.push_back(parse_complex(a.point));
    sampling["point"] = complex_json(points.front());
  } else {
    const auto [r, step] = parse_grid(a.grid);
    points = disk_grid(r, step);
    sampling["grid"] = ojson{{"radius", r}, {"step", step}};
  }
  for (Complex z : points) {
    if (!f.contains(z)) {
      std::ostringstream os;
      os << "point " << z << " lies outside the frame domain";
      throw DomainError(os.str());
    }
  }

  const int k = a.order;
  const int n = f.rank();
  GridReport report;
  report.meta["command"] = "curvature";
  report.meta["version"] = kToolVersion;
  report.meta["frame"] = frame_meta(f);
  report.meta["order"] = k;
  report.meta["path"] = a.path;
  report.meta["sampling"] = sampling;
  report.meta["tolerances"] = ojson{{"singular_rcond", kSingularRcond}};
  report.columns = {"re", "im"};
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          std::ostringstream name;
          name << "K_" << i << "_" << j << "_" << r << "_" << c;
          report.columns.push_back(name.str() + "_re");
          report.columns.push_back(name.str() + "_im");
        }
      }
    }
  }
  report.rows = parallel_map(points.size(), [&](std::size_t p) {
    const Complex z = points[p];
    const CurvatureTable table = covariant_table(metric_jet(f, z, k + 1), k, path);
    std::vector<double> row{z.real(), z.imag()};
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        const CMatrix& m = table.at(i, j);
        for (int r = 0; r < n; ++r) {
          for (int c = 0; c < n; ++c) {
            row.push_back(m(r, c).real());
            row.push_back(m(r, c).imag());
          }
        }
      }
    }
    return row;
  });
  emit(report, a.out, format, out);
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string frame;
  std::string suite = "all";
  int max_order = 3;
  std::uint64_t seed = 1;
  int points = 5;
  bool negative_control = false;
};

struct Check {
  std::string suite;
  std::string name;
  Complex point;
  int i = 0;
  int j = 0;
  double residual = 0.0;
  double tolerance = 0.0;

  bool passed() const { return residual <= tolerance; }
};

constexpr double kIdentitiesTol = 1e-8;
constexpr double kClaim1Tol = 1e-9;
constexpr double kClaim2Tol = 1e-7;
constexpr double kProp41Tol = 1e-7;
constexpr double kCor42Tol = 1e-6;

std::vector<Check> identity_checks(const HolomorphicFrame& f, Complex z,
                                   int k) {
  std::vector<Check> out;
  const ProjectionJet p = projection_jet(f, z, k, k);
  for (int m = 1; m <= k; ++m) {
    for (const IdentityResidual& r : structural_residuals(p, m, m)) {
      if (r.identity == "holomorphy" && m > 1) continue;
      const bool dbar_side = r.identity == "dbar_d_conj" ||
                             r.identity == "dbar_annihilate";
      out.push_back({"identities", r.identity, z, dbar_side ? r.order : 0,
                     dbar_side ? 0 : r.order, r.residual, kIdentitiesTol});
    }
  }
  return out;
}

std::vector<Check> run_suite(const std::string& suite,
                             const HolomorphicFrame& f, Complex z, int k) {
  std::vector<Check> out;
  if (suite == "identities") {
    return identity_checks(f, z, k);
  }
  if (suite == "claim1") {
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        out.push_back({suite, "binomial_expansion", z, i, j,
                       claim1_crosscheck(f, z, i, j), kClaim1Tol});
      }
    }
    return out;
  }
  if (suite == "claim2") {
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        out.push_back({suite, "curvature_formula", z, i, j,
                       nc::curvature_formula_residual(f, z, i, j), kClaim2Tol});
      }
    }
    return out;
  }
  if (suite == "prop41") {
    for (int s = 1; s <= k; ++s) {
      for (int t = 1; t <= k; ++t) {
        out.push_back({suite, "trace_identity", z, s, t,
                       trace_identity_residual(f, z, s, t), kProp41Tol});
      }
    }
    return out;
  }
  if (suite == "cor42") {
    out.push_back({suite, "mean_curvature", z, 0, 0,
                   mean_curvature_residual(f, z), kCor42Tol});
    return out;
  }
  throw ValidationError("unknown suite '" + suite + "'");
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kSuites = {"identities", "claim1",
                                                   "claim2", "prop41", "cor42"};
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), a.suite) !=
             kSuites.end()) {
    suites = {a.suite};
  } else {
    throw ValidationError("unknown suite '" + a.suite + "'");
  }
  if (a.max_order < 1 || a.points < 1) {
    throw ValidationError("--max-order and --points must be at least 1");
  }

  std::vector<Check> checks;
  std::string label;
  if (a.negative_control) {
    // Pointwise field with no holomorphy guarantee: only the identities
    // suite applies, and it is expected to fail.
    label = "untrusted_control_field";
    for (Complex z : random_disk_points(a.seed, a.points, 0.7)) {
      checks.push_back({"identities", "holomorphy", z, 1, 0,
                        pointwise_holomorphy_residual(untrusted_control_field, z),
                        kIdentitiesTol});
    }
  } else {
    const HolomorphicFrame f = load_frame_file(a.frame);
    label = f.label();
    const double radius = 0.7 * std::min(f.radius(), 1.0);
    const std::vector<Complex> pts = random_disk_points(a.seed, a.points, radius);
    for (const std::string& suite : suites) {
      auto per_point = parallel_map(pts.size(), [&](std::size_t p) {
        return run_suite(suite, f, pts[p], a.max_order);
      });
      for (auto& v : per_point) checks.insert(checks.end(), v.begin(), v.end());
    }
  }

  int failed = 0;
  out << "suite,check,re,im,i,j,residual,tolerance,status\r\n";
  for (const Check& c : checks) {
    out << c.suite << ',' << c.name << ',' << format_number(c.point.real())
        << ',' << format_number(c.point.imag()) << ',' << c.i << ',' << c.j
        << ',' << format_number(c.residual) << ','
        << format_number(c.tolerance) << ',' << (c.passed() ? "pass" : "FAIL")
        << "\r\n";
    if (!c.passed()) ++failed;
  }
  err << "verify " << label << ": " << checks.size() << " checks, " << failed
      << " failed (seed " << a.seed << ")\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- compare

struct CompareArgs {
  std::string frame_a;
  std::string frame_b;
  std::vector<std::string> points{"0"};
  int contact_order = 2;
  std::string method = "both";
  int word_length = 4;
  bool no_unitary_search = false;
  std::uint64_t seed = 1;
};

ojson verdict_json(const ContactVerdict& v) {
  ojson j;
  j["point"] = complex_json(v.point);
  j["method"] = v.method;
  j["order"] = v.order;
  j["status"] = to_string(v.status);
  j["words_checked"] = v.words_checked;
  if (v.witness) {
    j["witness"] = ojson{{"word", v.witness->word},
                         {"value_a", complex_json(v.witness->value_p)},
                         {"value_b", complex_json(v.witness->value_q)},
                         {"difference", v.witness->difference()},
                         {"tolerance", v.witness->tolerance}};
  } else {
    j["witness"] = nullptr;
  }
  j["unitary_residual"] =
      v.unitary_residual ? ojson(*v.unitary_residual) : ojson(nullptr);
  return j;
}

int severity(Verdict v) {
  switch (v) {
    case Verdict::kDistinct:
      return 2;
    case Verdict::kInconclusive:
      return 1;
    case Verdict::kMatched:
      return 0;
  }
  return 0;
}

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  const HolomorphicFrame f = load_frame_file(a.frame_a);
  const HolomorphicFrame g = load_frame_file(a.frame_b);
  if (a.method != "contact" && a.method != "theorem29" && a.method != "both") {
    throw ValidationError("unknown method '" + a.method + "'");
  }
  if (a.contact_order < 1 || a.word_length < 1) {
    throw ValidationError("--contact-order and --word-length must be >= 1");
  }
  std::vector<Complex> points;
  for (const std::string& s : a.points) points.push_back(parse_complex(s));

  CompareOptions options;
  options.word_len = a.word_length;
  options.unitary_search = !a.no_unitary_search;
  options.seed = a.seed;

  ojson doc;
  doc["command"] = "compare";
  doc["version"] = kToolVersion;
  doc["frame_a"] = frame_meta(f);
  doc["frame_b"] = frame_meta(g);
  doc["contact_order"] = a.contact_order;
  doc["word_length"] = a.word_length;
  doc["unitary_search"] = options.unitary_search;
  doc["seed"] = a.seed;
  doc["tolerance_rule"] = "1e-9 * 10^order, relative";
  auto verdicts = ojson::array();

  int worst = 0;
  bool disagreement = false;
  for (Complex z : points) {
    std::optional<Verdict> contact_status;
    if (a.method != "theorem29") {
      const ContactVerdict v = contact_compare(f, g, z, a.contact_order, options);
      verdicts.push_back(verdict_json(v));
      worst = std::max(worst, severity(v.status));
      contact_status = v.status;
    }
    if (a.method != "contact") {
      const ContactVerdict v =
          theorem29_compare(f, g, z, a.contact_order, options);
      verdicts.push_back(verdict_json(v));
      worst = std::max(worst, severity(v.status));
      if (contact_status && *contact_status != v.status) {
        disagreement = true;
        std::ostringstream os;
        os << "compare: contact and theorem29 disagree at " << z << " ("
           << to_string(*contact_status) << " vs " << to_string(v.status)
           << ")\n";
        err << os.str();
      }
    }
  }
  doc["verdicts"] = std::move(verdicts);
  out << doc.dump(2) << "\n";
  if (disagreement) return kExitCheckFailed;
  static const int kCodes[] = {kExitOk, kExitInconclusive, kExitDistinct};
  return kCodes[worst];
}

// ------------------------------------------------------------------ ktscan

struct KTArgs {
  std::string frame;
  double radius = 0.6;
  double step = 0.05;
  double multiplier = 1.0;
  std::string out;
  std::string format = "csv";
};

int cmd_ktscan(const KTArgs& a, std::ostream& out, std::ostream& err) {
  const HolomorphicFrame f = load_frame_file(a.frame);
  const ReportFormat format = parse_format(a.format);
  const KTScan scan = kwon_treil_scan(f, a.radius, a.step, a.multiplier);

  GridReport report;
  report.meta["command"] = "ktscan";
  report.meta["version"] = kToolVersion;
  report.meta["frame"] = frame_meta(f);
  report.meta["grid"] = ojson{{"radius", a.radius}, {"step", a.step}};
  report.meta["multiplier"] = a.multiplier;
  auto nan_null = [](double v) { return std::isnan(v) ? ojson(nullptr) : ojson(v); };
  report.meta["summary"] = ojson{{"max_g", scan.max_g},
                                 {"min_g", scan.min_g},
                                 {"max_abs_g", scan.max_abs_g},
                                 {"min_laplacian", nan_null(scan.min_laplacian)}};
  report.columns = {"re", "im", "hs2", "g", "laplacian"};
  for (const KTPoint& p : scan.points) {
    report.rows.push_back({p.z.real(), p.z.imag(), p.hs2, p.g, p.laplacian});
  }
  emit(report, a.out, format, out);
  err << "ktscan " << f.label() << ": " << scan.points.size()
      << " points, max g " << scan.max_g << ", min g " << scan.min_g
      << ", min laplacian " << scan.min_laplacian << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Curvature invariants of holomorphic curves", "curvlab"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print the tool version");

  CurvatureArgs curv;
  auto* c = app.add_subcommand("curvature", "Covariant curvature table");
  c->add_option("frame", curv.frame, "FrameSpec file")->required();
  auto* point_opt = c->add_option("--point", curv.point, "Single point");
  auto* grid_opt = c->add_option("--grid", curv.grid, "Disk grid r,step");
  point_opt->excludes(grid_opt);
  c->add_option("--order", curv.order, "Table order k");
  c->add_option("--path", curv.path, "zbar-first or z-first");
  c->add_option("--out", curv.out, "Output file (stdout when omitted)");
  c->add_option("--format", curv.format, "csv or json");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Residual suites at random points");
  v->add_option("frame", ver.frame, "FrameSpec file");
  v->add_option("--suite", ver.suite,
                "identities, claim1, claim2, prop41, cor42 or all");
  v->add_option("--max-order", ver.max_order, "Highest derivative order");
  v->add_option("--seed", ver.seed, "Sampling seed");
  v->add_option("--points", ver.points, "Number of sample points");
  v->add_flag("--negative-control", ver.negative_control,
              "Run the identities suite on a non-holomorphic field");

  CompareArgs cmp;
  auto* m = app.add_subcommand("compare", "Compare two curves at points");
  m->add_option("frame_a", cmp.frame_a, "First FrameSpec file")->required();
  m->add_option("frame_b", cmp.frame_b, "Second FrameSpec file")->required();
  m->add_option("--points", cmp.points, "Points to compare at");
  m->add_option("--contact-order", cmp.contact_order, "Contact order");
  m->add_option("--method", cmp.method, "contact, theorem29 or both");
  m->add_option("--word-length", cmp.word_length, "Longest trace word");
  m->add_flag("--no-unitary-search", cmp.no_unitary_search,
              "Trace words only for rank > 1");
  m->add_option("--seed", cmp.seed, "Seed for the unitary search");

  KTArgs kt;
  auto* k = app.add_subcommand("ktscan", "Kwon-Treil functional on a grid");
  k->add_option("frame", kt.frame, "FrameSpec file")->required();
  k->add_option("--radius", kt.radius, "Grid radius (< 1)");
  k->add_option("--step", kt.step, "Grid spacing");
  k->add_option("--multiplier", kt.multiplier, "Multiplicity m in n m/(1-r^2)^2");
  k->add_option("--out", kt.out, "Output file (stdout when omitted)");
  k->add_option("--format", kt.format, "csv or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "curvlab: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (version) {
      out << kToolVersion << "\n";
      return kExitOk;
    }
    if (c->parsed()) {
      if (curv.point.empty() == curv.grid.empty()) {
        throw ValidationError("curvature: give exactly one of --point, --grid");
      }
      return cmd_curvature(curv, out);
    }
    if (v->parsed()) {
      if (ver.frame.empty() && !ver.negative_control) {
        throw ValidationError("verify: a FrameSpec file is required");
      }
      return cmd_verify(ver, out, err);
    }
    if (m->parsed()) return cmd_compare(cmp, out, err);
    if (k->parsed()) return cmd_ktscan(kt, out, err);
    out << app.help();
    return kExitValidation;
  } catch (const SingularityError& e) {
    err << "curvlab: singular: " << e.what() << " (rcond " << e.rcond() << ")\n";
    return kExitSingular;
  } catch (const Error& e) {
    err << "curvlab: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace curvlab::cli
