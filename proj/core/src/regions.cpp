#include "unitcircle/regions.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "unitcircle/chebyshev.hpp"
#include "unitcircle/circle.hpp"
#include "unitcircle/errors.hpp"

namespace unitcircle {

namespace {

constexpr double kPi = std::numbers::pi;

void check_t(double t) {
  if (!(t >= 0.0 && t <= kPi)) throw InvalidInterval("t must lie in [0, pi]");
}

}  // namespace

TrigPair eval_s_c(int n, std::span<const double> gamma, double t) {
  check_t(t);
  if (gamma.empty()) throw BadGammaVector("gamma vector is empty");
  const int s = static_cast<int>(gamma.size()) - 1;
  const double m = n + s + 1;
  TrigPair out;
  for (int j = 0; j <= s; ++j) {
    const double g = (j % 2 == 0 ? 1.0 : -1.0) * gamma[static_cast<std::size_t>(j)];
    const double freq = m / 2.0 - j;
    out.s += g * std::sin(freq * t);
    out.c += g * ((m - 2.0 * j) / m) * std::cos(freq * t);
  }
  return out;
}

TrigPair eval_s_c(const GammaVector& g, double t) {
  std::vector<double> v;
  for (const auto& x : g.values()) v.push_back(x.get_d());
  return eval_s_c(g.n(), v, t);
}

RationalInterval s1_interval(int n) {
  if (n < 2) throw IndexOutOfRange("s1_interval needs N >= 2");
  const Rational right = ratio(n + 2, n);
  if (n % 2 == 0) return {Rational(-right), right};
  return {Rational(-1), right};
}

std::array<double, 2> u_tau_curve_s2(int n, double t) {
  if (!(t > 0.0 && t < kPi)) throw InvalidInterval("t must lie in (0, pi)");
  const double den = n * std::sin(t) - std::sin(n * t);
  if (std::fabs(den) < 1e-12) throw DegenerateDenominator("N sin t - sin Nt vanishes at t=" + std::to_string(t));
  const double g1 = ((n + 1) * std::sin(2 * t) - 2 * std::sin((n + 1) * t)) / den;
  const double g2 = ((n + 2) * std::sin(t) - std::sin((n + 2) * t)) / den;
  return {g1, g2};
}

std::array<Rational, 2> u_tau_point_exact(int n, const Rational& c) {
  if (!(c > -1 && c < 1)) throw InvalidInterval("cos t must lie in (-1, 1)");
  const Rational den = Rational(n) - chebyshev_u(n - 1)(c);
  if (den == 0) throw DegenerateDenominator("N - U_{N-1}(c) vanishes at c=" + to_string(c));
  Rational g1 = (2 * (n + 1) * c - 2 * chebyshev_u(n)(c)) / den;
  Rational g2 = (Rational(n + 2) - chebyshev_u(n + 1)(c)) / den;
  return {g1, g2};
}

std::vector<BoundarySegment> u0_u_pi_segments(int n, int s) {
  if (s == 1) {
    const RationalInterval iv = s1_interval(n);
    return {{"U_0", {iv.hi}, {iv.hi}}, {"U_pi", {iv.lo}, {iv.lo}}};
  }
  if (s != 2) throw IndexOutOfRange("closed-form boundary is only available for s = 1 and s = 2");
  if (n < 2) throw IndexOutOfRange("s = 2 needs N >= 2");

  // U_0: P''(1) vanishes, (N+1) gamma_1 - (N-1) gamma_2 = N+3.
  const auto u0 = [n](const Rational& g1) {
    Rational v = (Rational(n + 1) * g1 - (n + 3)) / (n - 1);
    v.canonicalize();
    return v;
  };
  const Rational right = ratio(2 * (n + 3), n);
  if (n % 2 == 1) {
    // Mirror image under gamma_1 -> -gamma_1 (z -> -z maps the family to itself).
    const auto upi = [&](const Rational& g1) { return u0(Rational(-g1)); };
    return {{"U_0", {Rational(0), u0(0)}, {right, u0(right)}},
            {"U_pi", {Rational(-right), upi(Rational(-right))}, {Rational(0), upi(0)}}};
  }
  // Even N: U_pi is gamma_2 = -gamma_1 - 1 on [-2(N+1)/N, 2/N]; U_0 starts
  // where the two lines meet, at gamma_1 = 2/N.
  const Rational meet = ratio(2, n);
  const Rational left = ratio(-2 * (n + 1), n);
  const auto upi = [](const Rational& g1) { return Rational(-g1 - 1); };
  return {{"U_0", {meet, u0(meet)}, {right, u0(right)}}, {"U_pi", {left, upi(left)}, {meet, upi(meet)}}};
}

std::vector<long> LatticeSpec::axis_sizes() const {
  std::vector<long> sizes;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    const Rational span = (hi[j] - lo[j]) / step;
    Integer k = span.get_num() / span.get_den();  // floor for span >= 0
    sizes.push_back(span < 0 ? 0 : k.get_si() + 1);
  }
  return sizes;
}

LatticeSpec default_lattice(int n, int s, const Rational& step, const Rational& margin) {
  if (step <= 0) throw InvalidInterval("lattice step must be positive");
  const BoundBox box = bound_box(n, s);
  LatticeSpec spec;
  spec.step = step;
  for (int j = 1; j <= s; ++j) {
    const Rational reach = box.bound(j) * margin / step;
    Integer k = reach.get_num() / reach.get_den();
    if (k * reach.get_den() != reach.get_num()) k += 1;  // ceil
    const Rational extent = step * Rational(k);
    spec.lo.push_back(-extent);
    spec.hi.push_back(extent);
  }
  return spec;
}

bool classify_point(int n, const std::vector<Rational>& tail) {
  return all_zeros_on_unit_circle(build_p(GammaVector::from_tail(n, tail))).all_on_circle;
}

bool classify_sample(int n, std::span<const double> tail, double probe_radius) {
  std::vector<Rational> exact;
  for (double x : tail) exact.push_back(from_double(x));
  if (classify_point(n, exact)) return true;

  std::vector<std::vector<double>> probes;
  if (tail.size() == 2) {
    for (int k = 0; k < 16; ++k) {
      const double a = 2 * kPi * k / 16;
      probes.push_back({tail[0] + probe_radius * std::cos(a), tail[1] + probe_radius * std::sin(a)});
    }
  } else {
    for (std::size_t j = 0; j < tail.size(); ++j)
      for (double sign : {-1.0, 1.0}) {
        std::vector<double> p(tail.begin(), tail.end());
        p[j] += sign * probe_radius;
        probes.push_back(std::move(p));
      }
  }
  for (const auto& p : probes) {
    std::vector<Rational> q;
    for (double x : p) q.push_back(from_double(x));
    if (classify_point(n, q)) return true;
  }
  return false;
}

namespace {

std::vector<Rational> lattice_point(const LatticeSpec& spec, const std::vector<long>& sizes, long index) {
  std::vector<Rational> g;
  for (std::size_t axis = 0; axis < sizes.size(); ++axis) {
    g.push_back(spec.coordinate(static_cast<int>(axis), index % sizes[axis]));
    index /= sizes[axis];
  }
  return g;
}

BoundaryCurve sample_segment(int n, const BoundarySegment& seg, int samples) {
  BoundaryCurve curve;
  curve.name = seg.name;
  for (int k = 0; k < samples; ++k) {
    const Rational w = ratio(k, samples - 1);
    std::vector<Rational> p;
    for (std::size_t j = 0; j < seg.from.size(); ++j) p.push_back(seg.from[j] + (seg.to[j] - seg.from[j]) * w);
    curve.points.push_back({p[0].get_d(), p.size() > 1 ? p[1].get_d() : 0.0});
    curve.on_circle.push_back(classify_point(n, p));
  }
  return curve;
}

}  // namespace

RegionDataset classify_grid(int n, int s, const LatticeSpec& lattice, const RegionOptions& options) {
  if (s < 1 || s > n) throw IndexOutOfRange("classify_grid needs 1 <= s <= N");
  if (static_cast<int>(lattice.lo.size()) != s || lattice.hi.size() != lattice.lo.size())
    throw InvalidInterval("lattice dimension must equal s");

  RegionDataset d;
  d.n = n;
  d.s = s;
  d.lattice = lattice;
  d.box_hat = bound_box(n, s);

  const std::vector<long> sizes = lattice.axis_sizes();
  long total = 1;
  for (long k : sizes) total *= k;
  d.grid.resize(static_cast<std::size_t>(total));

  // Each worker owns a contiguous block; results land in lattice order.
  unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<long>(workers, std::max<long>(total, 1)));
  const long block = (total + workers - 1) / std::max(1u, workers);
  auto work = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      GridPoint& gp = d.grid[static_cast<std::size_t>(i)];
      gp.gamma = lattice_point(lattice, sizes, i);
      gp.inside = classify_point(n, gp.gamma);
    }
  };
  if (workers <= 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const long begin = w * block;
      const long end = std::min(total, begin + block);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  if (s <= 2) d.segments = u0_u_pi_segments(n, s);
  if (s == 2) {
    for (const auto& seg : d.segments) d.curves.push_back(sample_segment(n, seg, 101));
    BoundaryCurve tau;
    tau.name = "U_tau";
    const int k = std::max(2, options.tau_samples);
    const double eps = options.tau_epsilon;
    for (int i = 0; i < k; ++i) {
      const double t = eps + (kPi - 2 * eps) * i / (k - 1);
      try {
        u_tau_curve_s2(n, t);  // throws on a vanishing denominator
        // cos t is rounded once; the point is then exactly on the curve.
        const auto exact = u_tau_point_exact(n, from_double(std::cos(t)));
        tau.points.push_back({exact[0].get_d(), exact[1].get_d()});
        tau.t.push_back(t);
        tau.on_circle.push_back(classify_point(n, {exact[0], exact[1]}));
      } catch (const DegenerateDenominator&) {
        d.skipped_t.push_back(t);
      }
    }
    d.curves.push_back(std::move(tau));
  }
  return d;
}

ContainmentCheck check_containment(const RegionDataset& d) {
  ContainmentCheck c;
  for (const auto& gp : d.grid) {
    Rational l1 = 0;
    bool in_hat = true;
    for (std::size_t j = 0; j < gp.gamma.size(); ++j) {
      l1 += abs(gp.gamma[j]);
      if (abs(gp.gamma[j]) > d.box_hat.bound(static_cast<int>(j) + 1)) in_hat = false;
    }
    if (l1 <= d.box_tilde_radius) {
      ++c.tilde_points;
      if (!gp.inside) ++c.tilde_not_inside;
    }
    if (gp.inside) {
      ++c.inside_points;
      if (!in_hat) ++c.inside_outside_hat;
    }
  }
  return c;
}

namespace {

double point_segment_distance(std::array<double, 2> p, std::array<double, 2> a, std::array<double, 2> b) {
  const double vx = b[0] - a[0], vy = b[1] - a[1];
  const double wx = p[0] - a[0], wy = p[1] - a[1];
  const double len2 = vx * vx + vy * vy;
  double u = len2 > 0 ? (wx * vx + wy * vy) / len2 : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  return std::hypot(wx - u * vx, wy - u * vy);
}

}  // namespace

BoundaryAgreement check_boundary_agreement(const RegionDataset& d, double radius) {
  if (d.s != 2) throw IndexOutOfRange("boundary agreement is defined for s = 2");
  BoundaryAgreement out;
  out.radius = radius;
  const std::vector<long> sizes = d.lattice.axis_sizes();
  const long nx = sizes[0], ny = sizes[1];
  const double h = d.lattice.step.get_d();
  const double x0 = d.lattice.lo[0].get_d(), y0 = d.lattice.lo[1].get_d();
  auto inside_at = [&](long ix, long iy) {
    if (ix < 0 || iy < 0 || ix >= nx || iy >= ny) return false;
    return d.grid[static_cast<std::size_t>(iy * nx + ix)].inside;
  };

  std::vector<std::array<std::array<double, 2>, 2>> pieces;
  for (const auto& curve : d.curves)
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) pieces.push_back({curve.points[i], curve.points[i + 1]});

  for (long iy = 0; iy < ny; ++iy)
    for (long ix = 0; ix < nx; ++ix) {
      if (!inside_at(ix, iy)) continue;
      if (inside_at(ix - 1, iy) && inside_at(ix + 1, iy) && inside_at(ix, iy - 1) && inside_at(ix, iy + 1)) continue;
      ++out.grid_boundary_points;
      const std::array<double, 2> p{x0 + ix * h, y0 + iy * h};
      double best = std::numeric_limits<double>::infinity();
      for (const auto& [a, b] : pieces) best = std::min(best, point_segment_distance(p, a, b));
      out.max_grid_to_curve = std::max(out.max_grid_to_curve, best);
    }

  const long reach = static_cast<long>(std::ceil(radius / h)) + 1;
  for (const auto& curve : d.curves)
    for (const auto& p : curve.points) {
      ++out.curve_samples;
      const long cx = std::lround((p[0] - x0) / h), cy = std::lround((p[1] - y0) / h);
      bool near_in = false, near_out = false;
      for (long iy = cy - reach; iy <= cy + reach; ++iy)
        for (long ix = cx - reach; ix <= cx + reach; ++ix) {
          if (std::hypot(x0 + ix * h - p[0], y0 + iy * h - p[1]) > radius) continue;
          (inside_at(ix, iy) ? near_in : near_out) = true;
        }
      if (!near_in) ++out.curve_samples_without_inside;
      if (!near_out) ++out.curve_samples_without_outside;
    }
  return out;
}

std::string region_to_csv(const RegionDataset& d, const std::string& tool_version) {
  std::ostringstream os;
  os << "# unitcircle " << tool_version << " region N=" << d.n << " s=" << d.s << " step=" << d.lattice.step.get_str()
     << "\n";
  for (int j = 1; j <= d.s; ++j) os << "gamma" << j << ",";
  os << "verdict\n";
  for (const auto& gp : d.grid) {
    for (const auto& g : gp.gamma) os << g.get_str() << ",";
    os << (gp.inside ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string region_to_json(const RegionDataset& d, const std::string& tool_version) {
  using nlohmann::ordered_json;
  auto strings = [](const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  ordered_json j;
  j["schema"] = "unitcircle.region/1";
  j["tool"] = {{"name", "unitcircle"}, {"version", tool_version}};
  j["N"] = d.n;
  j["s"] = d.s;
  j["lattice"] = {{"lo", strings(d.lattice.lo)}, {"hi", strings(d.lattice.hi)}, {"step", d.lattice.step.get_str()}};
  std::vector<Rational> hat(d.box_hat.bounds.begin() + 1, d.box_hat.bounds.end());
  j["box_hat"] = {{"kind", "box"}, {"half_widths", strings(hat)}};
  j["box_tilde"] = {{"kind", "l1_ball"}, {"radius", d.box_tilde_radius.get_str()}};
  ordered_json segs = ordered_json::array();
  for (const auto& s : d.segments) segs.push_back({{"name", s.name}, {"from", strings(s.from)}, {"to", strings(s.to)}});
  j["segments"] = segs;
  ordered_json curves = ordered_json::array();
  for (const auto& c : d.curves) {
    ordered_json pts = ordered_json::array();
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      ordered_json p = {{"gamma1", c.points[i][0]}, {"gamma2", c.points[i][1]}, {"on_circle", bool(c.on_circle[i])}};
      if (!c.t.empty()) p["t"] = c.t[i];
      pts.push_back(p);
    }
    curves.push_back({{"name", c.name}, {"samples", pts}});
  }
  j["curves"] = curves;
  j["skipped_t"] = d.skipped_t;
  ordered_json grid = ordered_json::array();
  for (const auto& gp : d.grid) grid.push_back({{"gamma", strings(gp.gamma)}, {"inside", gp.inside}});
  j["grid"] = grid;
  return j.dump(1) + "\n";
}

}  // namespace unitcircle
