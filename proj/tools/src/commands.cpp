#include "unitcircle_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "unitcircle/chebyshev.hpp"
#include "unitcircle/circle.hpp"
#include "unitcircle/errors.hpp"
#include "unitcircle/extremal.hpp"
#include "unitcircle/family.hpp"
#include "unitcircle/regions.hpp"
#include "unitcircle/verify.hpp"
#include "unitcircle/version.hpp"
#include "unitcircle_cli/svg.hpp"

namespace unitcircle::cli {

namespace {

using nlohmann::ordered_json;

// Thrown for inputs that parse but make no sense together.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& item : items) out.push_back(parse_rational(item));
  return out;
}

ordered_json strings(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json strings(const Polynomial& p) {
  ordered_json a = ordered_json::array();
  for (const auto& s : coefficient_strings(p)) a.push_back(s);
  return a;
}

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string joined(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  return joined(s);
}

std::string header(const std::string& command) { return std::string("# unitcircle ") + kVersion + " " + command; }

ordered_json envelope(const std::string& kind) {
  ordered_json j;
  j["schema"] = "unitcircle." + kind + "/1";
  j["tool"] = {{"name", "unitcircle"}, {"version", kVersion}};
  return j;
}

std::string real(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format " + format);
}

struct Options {
  int n = -1;
  std::optional<int> s;
  std::vector<std::string> gamma;
  std::vector<std::string> coeffs;
  std::string resolution = "1/50";
  double tol = 1e-9;
  std::string format;
  std::string out;
  int max_n = 20;
  std::string json_path;
  int tau_samples = 400;
  unsigned threads = 0;
};

int cmd_extremal(const Options& o, std::ostream& out) {
  if (!o.s) throw UsageError("--s is required");
  const GammaVector g = extremal_gamma(o.n, *o.s);
  const Polynomial p = build_p(g);
  const std::string format = o.format.empty() ? "text" : o.format;
  check_format(format, {"text", "json"});
  if (format == "json") {
    ordered_json j = envelope("extremal");
    j["N"] = o.n;
    j["s"] = *o.s;
    j["gamma"] = strings(g.values());
    j["coefficients"] = strings(p);
    emit(j.dump(1) + "\n", o.out, out);
    return kOk;
  }
  std::ostringstream os;
  os << header("extremal") << " N=" << o.n << " s=" << *o.s << "\n";
  os << "gamma = [" << joined(g.values()) << "]\n";
  os << "coefficients = [" << joined(coefficient_strings(p)) << "]\n";
  os << "P(z) = " << to_string(p) << "\n";
  emit(os.str(), o.out, out);
  return kOk;
}

Polynomial polynomial_from_options(const Options& o) {
  if (!o.coeffs.empty()) {
    if (o.n >= 0 || !o.gamma.empty()) throw UsageError("give either --coeffs or --N/--s/--gamma");
    return Polynomial(parse_list(o.coeffs));
  }
  if (o.n < 0) throw UsageError("give --coeffs or --N with --gamma");
  const std::vector<Rational> tail = parse_list(o.gamma);
  if (o.s && *o.s != static_cast<int>(tail.size()))
    throw UsageError("--s does not match the number of --gamma values");
  return build_p(GammaVector::from_tail(o.n, tail));
}

int cmd_oncircle(const Options& o, std::ostream& out) {
  const Polynomial p = polynomial_from_options(o);
  const CircleReport r = all_zeros_on_unit_circle(p);
  const std::string format = o.format.empty() ? "text" : o.format;
  check_format(format, {"text", "json"});
  if (format == "json") {
    ordered_json j = envelope("oncircle");
    j["coefficients"] = strings(p);
    j["all_on_circle"] = r.all_on_circle;
    j["degree"] = r.degree;
    j["zeros_on_circle_with_multiplicity"] = r.zeros_on_circle_with_multiplicity;
    j["multiplicity_at_1"] = r.mult_at_plus1;
    j["multiplicity_at_minus_1"] = r.mult_at_minus1;
    j["reciprocal"] = to_string(r.kind);
    j["reduced_q"] = strings(r.reduced_q);
    emit(j.dump(1) + "\n", o.out, out);
  } else {
    std::ostringstream os;
    os << header("oncircle") << "\n";
    os << "P(z) = " << to_string(p) << "\n";
    os << "reciprocal: " << to_string(r.kind) << "\n";
    os << "degree: " << r.degree << "\n";
    os << "zeros on the circle (with multiplicity): " << r.zeros_on_circle_with_multiplicity << "\n";
    os << "multiplicity at z=1: " << r.mult_at_plus1 << "\n";
    os << "multiplicity at z=-1: " << r.mult_at_minus1 << "\n";
    if (!r.reduced_q.is_zero()) os << "Q(x) = " << to_string(r.reduced_q) << "\n";
    os << "verdict: " << (r.all_on_circle ? "all zeros on the unit circle" : "not all zeros on the unit circle")
       << "\n";
    emit(os.str(), o.out, out);
  }
  return r.all_on_circle ? kOk : kNegative;
}

Rational resolution(const Options& o) {
  const Rational step = parse_rational(o.resolution);
  if (step <= 0) throw UsageError("--resolution must be positive");
  return step;
}

int cmd_region(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.s) throw UsageError("--s is required");
  if (*o.s != 1 && *o.s != 2) {
    err << "closed-form boundary unavailable; use classify\n";
    return kUsage;
  }
  const std::string format = o.format.empty() ? "csv" : o.format;
  check_format(format, {"csv", "json", "svg"});
  if (format == "svg" && *o.s != 2) throw UsageError("svg output needs s = 2");
  RegionOptions ro;
  ro.tau_samples = o.tau_samples;
  ro.threads = o.threads;
  const RegionDataset d = classify_grid(o.n, *o.s, default_lattice(o.n, *o.s, resolution(o)), ro);
  if (format == "csv") emit(region_to_csv(d, kVersion), o.out, out);
  if (format == "json") emit(region_to_json(d, kVersion), o.out, out);
  if (format == "svg") emit(region_to_svg(d, kVersion), o.out, out);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (!o.s) throw UsageError("--s is required");
  if (*o.s < 1) throw UsageError("classify needs s >= 1");
  const std::string format = o.format.empty() ? "csv" : o.format;
  check_format(format, {"csv", "json"});
  const LatticeSpec lattice = default_lattice(o.n, *o.s, resolution(o));
  long total = 1;
  for (long k : lattice.axis_sizes()) {
    if (k > 0 && total > 4'000'000 / k) throw UsageError("lattice too large; use a coarser --resolution");
    total *= k;
  }
  RegionOptions ro;
  ro.threads = o.threads;
  RegionDataset d = classify_grid(o.n, *o.s, lattice, ro);
  d.segments.clear();
  d.curves.clear();
  if (format == "csv") emit(region_to_csv(d, kVersion), o.out, out);
  if (format == "json") emit(region_to_json(d, kVersion), o.out, out);
  return kOk;
}

int cmd_cheb(const Options& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("--N must be nonnegative");
  const int s = o.s.value_or(0);
  check_derivative_index(o.n, s);
  const Polynomial u = chebyshev_u(o.n), t = chebyshev_t(o.n), d = u_derivative_explicit(o.n, s);
  const std::string format = o.format.empty() ? "text" : o.format;
  check_format(format, {"text", "json"});
  if (format == "json") {
    ordered_json j = envelope("cheb");
    j["N"] = o.n;
    j["s"] = s;
    j["U"] = strings(u);
    j["T"] = strings(t);
    j["U_derivative"] = strings(d);
    j["symmetrized"] = strings(symmetrized_coeffs(o.n, s));
    j["F"] = strings(f_ns(o.n, s));
    j["theta"] = to_string(theta(o.n, s));
    emit(j.dump(1) + "\n", o.out, out);
    return kOk;
  }
  std::ostringstream os;
  os << header("cheb") << " N=" << o.n << " s=" << s << "\n";
  os << "U_" << o.n << "(z) = " << to_string(u) << "\n";
  os << "T_" << o.n << "(z) = " << to_string(t) << "\n";
  os << "U_" << o.n << "^(" << s << ")(z) = " << to_string(d) << "\n";
  os << "F_" << o.n << "," << s << "(z) = " << to_string(f_ns(o.n, s)) << "\n";
  os << "Theta = " << to_string(theta(o.n, s)) << "\n";
  emit(os.str(), o.out, out);
  return kOk;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  if (!o.s) throw UsageError("--s is required");
  if (!(o.tol > 0)) throw UsageError("--tol must be positive");
  const ExtremalFactorization f = extremal_factorization(o.n, *o.s, std::numeric_limits<double>::infinity());
  const bool ok = f.max_deviation < o.tol;
  const std::string format = o.format.empty() ? "text" : o.format;
  check_format(format, {"text", "json"});
  if (format == "json") {
    ordered_json j = envelope("factorize");
    j["N"] = o.n;
    j["s"] = *o.s;
    j["nu"] = f.nu;
    j["coefficients"] = f.coeffs;
    j["exact_coefficients"] = strings(build_p(extremal_gamma(o.n, *o.s)));
    j["max_deviation"] = f.max_deviation;
    j["tol"] = o.tol;
    j["within_tol"] = ok;
    emit(j.dump(1) + "\n", o.out, out);
  } else {
    std::ostringstream os;
    os << header("factorize") << " N=" << o.n << " s=" << *o.s << "\n";
    os << "P(z) = (1-z)^" << 2 * *o.s + 1 << ((o.n - *o.s) % 2 == 1 ? " (1+z)" : "");
    for (std::size_t j = 0; j < f.nu.size(); ++j) os << " (z^2 + 1 + 2z(1 - 2 nu_" << j + 1 << "^2))";
    os << "\n";
    for (std::size_t j = 0; j < f.nu.size(); ++j) os << "nu_" << j + 1 << " = " << real(f.nu[j]) << "\n";
    os << "max deviation = " << real(f.max_deviation) << " (tol " << real(o.tol) << ")\n";
    emit(os.str(), o.out, out);
  }
  return ok ? kOk : kNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_n < 5) throw UsageError("--max-n must be at least 5");
  const VerificationReport r = run_full_suite(o.max_n);
  if (!o.json_path.empty()) emit(report_to_json(r, kVersion), o.json_path, out);
  emit(header("verify") + "\n" + report_to_text(r), o.out, out);
  return r.all_passed() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomials with all zeros on the unit circle: exact tests, extremal bounds, regions", "unitcircle"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_n = [&o](CLI::App* c) { c->add_option("--N", o.n, "degree parameter N")->required()->check(CLI::NonNegativeNumber); };
  auto add_s = [&o](CLI::App* c, bool required) {
    auto* opt = c->add_option("--s", o.s, "number of free coefficients s")->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  };
  auto add_out = [&o](CLI::App* c, const std::string& formats) {
    c->add_option("--format", o.format, "output format: " + formats);
    c->add_option("--out", o.out, "write to this file instead of stdout");
  };

  auto* extremal = app.add_subcommand("extremal", "extremal coefficient vector and polynomial");
  add_n(extremal);
  add_s(extremal, true);
  add_out(extremal, "text|json");

  auto* oncircle = app.add_subcommand("oncircle", "exact test: are all zeros on the unit circle?");
  oncircle->add_option("--N", o.n, "degree parameter N")->check(CLI::NonNegativeNumber);
  add_s(oncircle, false);
  oncircle->add_option("--gamma", o.gamma, "gamma_1..gamma_s, comma separated rationals")->delimiter(',');
  oncircle->add_option("--coeffs", o.coeffs, "coefficients, lowest power first, comma separated")->delimiter(',');
  add_out(oncircle, "text|json");

  auto* region = app.add_subcommand("region", "lattice classification with boundary curves (s = 1, 2)");
  add_n(region);
  add_s(region, true);
  region->add_option("--resolution", o.resolution, "lattice step, e.g. 1/50");
  region->add_option("--tau-samples", o.tau_samples, "samples of the double-zero curve")->check(CLI::PositiveNumber);
  region->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  add_out(region, "csv|json|svg");

  auto* classify = app.add_subcommand("classify", "lattice classification, any s");
  add_n(classify);
  add_s(classify, true);
  classify->add_option("--resolution", o.resolution, "lattice step, e.g. 1/50");
  classify->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  add_out(classify, "csv|json");

  auto* cheb = app.add_subcommand("cheb", "U_N, T_N and the s-th derivative of U_N");
  add_n(cheb);
  add_s(cheb, false);
  add_out(cheb, "text|json");

  auto* factorize = app.add_subcommand("factorize", "extremal polynomial rebuilt from zeros of U_N^(s)");
  add_n(factorize);
  add_s(factorize, true);
  factorize->add_option("--tol", o.tol, "allowed scaled coefficient deviation");
  add_out(factorize, "text|json");

  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--max-n", o.max_n, "largest N to check");
  verify->add_option("--json", o.json_path, "also write the JSON report here");
  verify->add_option("--out", o.out, "write the text summary to this file");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (extremal->parsed()) return cmd_extremal(o, out);
    if (oncircle->parsed()) return cmd_oncircle(o, out);
    if (region->parsed()) return cmd_region(o, out, err);
    if (classify->parsed()) return cmd_classify(o, out);
    if (cheb->parsed()) return cmd_cheb(o, out);
    if (factorize->parsed()) return cmd_factorize(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ToleranceNotReached& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace unitcircle::cli
