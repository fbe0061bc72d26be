// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "unitcircle/circle.hpp"
#include "unitcircle/errors.hpp"
#include "unitcircle/extremal.hpp"
#include "unitcircle/regions.hpp"
#include "unitcircle/verify.hpp"
#include "unitcircle/version.hpp"
#include "unitcircle_cli/svg.hpp"

namespace uc = unitcircle;
using uc::Polynomial;
using uc::Rational;
using uc::ratio;

namespace {

// Pinned tolerances and ranges.
constexpr int kIdentityMaxN = 40;
constexpr int kExpansionMaxN = 25;
constexpr double kIdentitySeconds = 120.0;
constexpr int kCircleMaxN = 20;
constexpr long kFigureStepDen = 50;  // lattice step 1/50 = 0.02
constexpr int kFigureTauSamples = 4000;
constexpr double kFigureSeconds = 300.0;
constexpr double kNumericTol = 1e-8;
constexpr int kNumericMaxN = 20;
constexpr int kQuadMaxN = 15;
constexpr int kL1BallCases = 200;
constexpr int kAlgebraCases = 500;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Counts exact entries that are not exact-zero passes.
void tally_exact(const uc::ReportEntry& e, long& checked, Outcome& o) {
  ++checked;
  if (!(e.passed && e.exact_zero && e.max_residual == 0.0)) o.require(false, e.identity + " " + e.range);
}

Outcome exact_identities() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  long checked = 0;
  for (int n = 0; n <= kIdentityMaxN; ++n)
    for (int s = 0; s <= n; ++s)
      for (const auto& e : uc::verify_fns_closed_form(n, s)) tally_exact(e, checked, o);
  for (int n = 0; n <= kExpansionMaxN; ++n) {
    for (int s = 0; s <= n; ++s) {
      tally_exact(uc::verify_weighted_u_expansion(n, s), checked, o);
      for (const auto& e : uc::verify_expansions(n, s)) tally_exact(e, checked, o);
    }
    tally_exact(uc::verify_vanishing_combinations(n), checked, o);
  }
  const double secs = seconds_since(t0);
  o.require(secs < kIdentitySeconds, "took " + fmt("%.1f", secs) + " s");
  o.detail = std::to_string(checked) + " exact checks, " + fmt("%.1f", secs) + " s" +
             (o.detail.empty() ? "" : "; failed: " + o.detail);
  return o;
}

Outcome derivative_agreement() {
  Outcome o;
  long checked = 0, notes = 0;
  for (int n = 0; n <= kExpansionMaxN; ++n)
    for (int s = 0; s <= n; ++s) {
      const auto e = uc::verify_derivative_agreement(n, s);
      tally_exact(e, checked, o);
      if (!e.notes.empty()) ++notes;
    }
  o.detail = std::to_string(checked) + " (N,s) pairs, three constructions identical, " + std::to_string(notes) +
             " discrepancy notes" + (o.detail.empty() ? "" : "; failed: " + o.detail);
  return o;
}

Outcome circle_test() {
  Outcome o;
  long extremal = 0, probes = 0;
  for (int n = 0; n <= kCircleMaxN; ++n)
    for (int s = 0; s <= n; ++s) {
      ++extremal;
      if (!uc::all_zeros_on_unit_circle(uc::build_p(uc::extremal_gamma(n, s))).all_on_circle)
        o.require(false, "extremal N=" + std::to_string(n) + " s=" + std::to_string(s));
    }
  for (int n = 2; n <= kCircleMaxN; ++n) {
    const auto iv = uc::s1_interval(n);
    const Rational lo = n % 2 ? Rational(-1) : ratio(-(n + 2), n), hi = ratio(n + 2, n);
    if (iv.lo != lo || iv.hi != hi) o.require(false, "interval N=" + std::to_string(n));
    std::vector<Rational> pts{lo, hi, (lo + hi) / 2, 0};
    for (long k : {10L, 1000L, 1000000L}) {
      const Rational e = ratio(1, k);
      for (Rational x : {Rational(lo - e), Rational(lo + e), Rational(hi - e), Rational(hi + e)}) pts.push_back(x);
    }
    for (int k = -60; k <= 60; ++k) pts.push_back(ratio(k, 20));
    for (const auto& x : pts) {
      ++probes;
      const bool want = lo <= x && x <= hi;
      if (uc::classify_point(n, {x}) != want) o.require(false, "N=" + std::to_string(n) + " gamma_1=" + x.get_str());
    }
  }
  o.detail = std::to_string(extremal) + " extremal polynomials on the circle, " + std::to_string(probes) +
             " s=1 probes match the interval" + (o.detail.empty() ? "" : "; failed: " + o.detail);
  return o;
}

Outcome figure() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Rational step = ratio(1, kFigureStepDen);
  const double cell = std::sqrt(2.0) * step.get_d();
  std::string info;
  for (int n : {11, 12}) {
    const std::string tag = "N=" + std::to_string(n) + ": ";
    uc::RegionOptions opt;
    opt.tau_samples = kFigureTauSamples;
    const auto d = uc::classify_grid(n, 2, uc::default_lattice(n, 2, step), opt);

    const auto c = uc::check_containment(d);
    o.require(c.tilde_points > 0 && c.tilde_not_inside == 0, tag + "tilde box not inside");
    o.require(c.inside_outside_hat == 0, tag + "inside point beyond the bound box");

    // Corners of the bound box: the extremal vertex is always reached, its
    // mirror (-b1, b2) exactly when N - s is odd, the lower corners never.
    const Rational b1 = d.box_hat.bound(1), b2 = d.box_hat.bound(2);
    const bool mirrored = (n - 2) % 2 == 1;
    const bool corner_ok = uc::classify_point(n, {b1, b2}) && uc::classify_point(n, {-b1, b2}) == mirrored &&
                           !uc::classify_point(n, {b1, -b2}) && !uc::classify_point(n, {-b1, -b2});
    o.require(corner_ok, tag + "corner pattern");

    const auto a = uc::check_boundary_agreement(d, cell);
    o.require(a.grid_boundary_points > 0 && a.max_grid_to_curve <= cell, tag + "grid boundary far from curves");
    o.require(a.curve_samples_without_outside == 0, tag + "curve sample with no outside lattice point nearby");

    long off = 0, samples = 0;
    for (const auto& curve : d.curves)
      for (bool on : curve.on_circle) {
        ++samples;
        if (!on) ++off;
      }
    o.require(samples > 0 && off == 0, tag + std::to_string(off) + " curve samples off the circle");

    const std::string svg = unitcircle::cli::region_to_svg(d, uc::kVersion);
    const bool dashed = svg.find("stroke-dasharray") != std::string::npos &&
                        svg.find("id=\"box-hat\"") != std::string::npos &&
                        svg.find("id=\"box-tilde\"") != std::string::npos;
    bool solid = true;
    for (const char* cls : {"U_0", "U_pi", "U_tau"})
      solid = solid && svg.find(std::string("<polyline class=\"") + cls + "\"") != std::string::npos;
    o.require(dashed && solid, tag + "svg layout");

    info += tag + std::to_string(c.inside_points) + " inside, boundary gap " + fmt("%.4f", a.max_grid_to_curve) +
            ", " + std::to_string(samples) + " curve samples, " + std::to_string(d.skipped_t.size()) + " skipped; ";
  }
  const double secs = seconds_since(t0);
  o.require(secs < kFigureSeconds, "took " + fmt("%.1f", secs) + " s");
  o.detail = info + fmt("%.1f", secs) + " s" + (o.detail.empty() ? "" : "; failed: " + o.detail);
  return o;
}

Outcome numeric_factorization() {
  Outcome o;
  double worst = 0.0, worst_quad = 0.0;
  auto take = [&](const uc::ReportEntry& e, double& w) {
    w = std::max(w, e.max_residual);
    if (!(e.passed && e.max_residual < kNumericTol)) o.require(false, e.identity + " " + e.range);
  };
  for (int n = 1; n <= kNumericMaxN; ++n)
    for (int s = 0; s < n; ++s) {
      try {
        take(uc::verify_zero_factorization(n, s, kNumericTol), worst);
        take(uc::verify_extremal_numeric(n, s, kNumericTol), worst);
      } catch (const uc::Error& ex) {
        o.require(false, ex.what());
      }
    }
  for (int n = 4; n <= kQuadMaxN; ++n)
    for (const auto& e : uc::verify_quadrinomial_crosscheck(n, kNumericTol)) {
      if (e.identity == "quadrinomial_interval")
        o.require(e.passed, e.identity + " " + e.range);
      else
        take(e, worst_quad);
    }
  o.detail = "max residual " + fmt("%.2e", worst) + " (zero products / extremal), " + fmt("%.2e", worst_quad) +
             " (quadrinomials), tol " + fmt("%.0e", kNumericTol) + (o.detail.empty() ? "" : "; failed: " + o.detail);
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(0x5eed);

  long l1_false_negatives = 0;
  std::uniform_int_distribution<int> sdist(1, 4), w(-1000, 1000), scale(0, 8);
  for (int i = 0; i < kL1BallCases; ++i) {
    const int s = sdist(rng);
    std::uniform_int_distribution<int> ndist(s, 15);
    const int n = ndist(rng);
    std::vector<Rational> raw(static_cast<std::size_t>(s));
    Rational total = 0;
    for (auto& x : raw) {
      x = w(rng);
      total += uc::abs(x);
    }
    const Rational target = ratio(scale(rng), 8);
    std::vector<Rational> g{1};
    for (const auto& x : raw) g.push_back(total == 0 ? Rational(0) : Rational(x * target / total));
    const uc::GammaVector gv(n, g);
    if (!uc::l1_ball_sufficient(gv)) o.require(false, "generator produced a vector outside the l1 ball");
    if (!uc::all_zeros_on_unit_circle(uc::build_p(gv)).all_on_circle) ++l1_false_negatives;
  }
  o.require(l1_false_negatives == 0, std::to_string(l1_false_negatives) + " false negatives inside the l1 ball");

  long roundtrip_bad = 0;
  for (int i = 0; i < kAlgebraCases; ++i) {
    const auto a = testing_support::random_polynomial(rng, 8);
    const auto b = testing_support::random_nonzero_polynomial(rng, 8);
    const auto c = testing_support::random_polynomial(rng, 8);
    if (uc::divide_exact(a * b, b) != a || (a + c) * b != a * b + c * b) ++roundtrip_bad;
  }
  o.require(roundtrip_bad == 0, std::to_string(roundtrip_bad) + " algebra round-trip failures");

  long sturm_bad = 0;
  for (int i = 0; i < kAlgebraCases; ++i) {
    const auto inst = testing_support::random_rooted_instance(rng);
    const Rational bound = uc::cauchy_bound(inst.p);
    const auto found = testing_support::bisection_roots(inst.p, -bound, bound);
    if (found.size() != inst.roots.size() || uc::sturm_count(inst.p, -bound, bound) != static_cast<int>(found.size()))
      ++sturm_bad;
  }
  o.require(sturm_bad == 0, std::to_string(sturm_bad) + " Sturm/bisection disagreements");

  o.detail = std::to_string(kL1BallCases) + " l1-ball cases, " + std::to_string(kAlgebraCases) + " round-trips, " +
             std::to_string(kAlgebraCases) + " Sturm/bisection cases" + (o.detail.empty() ? "" : "; failed: " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact identity suite", exact_identities},
      {"derivative triple agreement", derivative_agreement},
      {"circle test correctness", circle_test},
      {"figure reproduction N=11,12 s=2", figure},
      {"numeric factorization", numeric_factorization},
      {"property tests", properties},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, check] : criteria) {
    ++k;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& ex) {
      o.passed = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    all = all && o.passed;
    std::printf("criterion %d [%s] %s: %s\n", k, o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
