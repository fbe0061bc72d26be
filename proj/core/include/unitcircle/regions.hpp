#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "unitcircle/extremal.hpp"
#include "unitcircle/family.hpp"
#include "unitcircle/rational.hpp"

namespace unitcircle {

/// Values of the trigonometric pair at t, with M = N+s+1:
///   S(t) = sum_j (-1)^j gamma_j sin((M/2 - j) t)
///   C(t) = sum_j (-1)^j gamma_j ((M - 2j)/M) cos((M/2 - j) t) = (2/M) S'(t)
struct TrigPair {
  double s = 0.0;
  double c = 0.0;
};

TrigPair eval_s_c(const GammaVector& g, double t);
/// gamma includes gamma_0.
TrigPair eval_s_c(int n, std::span<const double> gamma, double t);

struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// Admissible gamma_1 for s = 1: [-(N+2)/N, (N+2)/N] for even N and
/// [-1, (N+2)/N] for odd N. Requires N >= 2.
RationalInterval s1_interval(int n);

/// Point of the s = 2 double-zero curve at t in (0, pi):
///   gamma_1 = ((N+1) sin 2t - 2 sin((N+1)t)) / (N sin t - sin Nt)
///   gamma_2 = ((N+2) sin t - sin((N+2)t)) / (N sin t - sin Nt)
/// Throws DegenerateDenominator when |N sin t - sin Nt| < 1e-12.
std::array<double, 2> u_tau_curve_s2(int n, double t);

/// The same point written through c = cos t, which keeps it exact:
///   gamma_1 = (2(N+1) c - 2 U_N(c)) / (N - U_{N-1}(c))
///   gamma_2 = (N+2 - U_{N+1}(c)) / (N - U_{N-1}(c))
/// Requires -1 < c < 1; throws DegenerateDenominator if the denominator vanishes.
std::array<Rational, 2> u_tau_point_exact(int n, const Rational& c);

/// Straight boundary pieces where P has a multiple zero at z = 1 (U_0) or at
/// z = -1 (U_pi). For s = 1 both ends coincide (a single gamma_1 value).
struct BoundarySegment {
  std::string name;
  std::vector<Rational> from;
  std::vector<Rational> to;
};

/// s in {1, 2}; throws IndexOutOfRange otherwise.
std::vector<BoundarySegment> u0_u_pi_segments(int n, int s);

/// Rational lattice lo[j] + k * step, k >= 0, up to hi[j] per coordinate.
struct LatticeSpec {
  std::vector<Rational> lo;
  std::vector<Rational> hi;
  Rational step;

  std::vector<long> axis_sizes() const;
  Rational coordinate(int axis, long k) const { return lo[static_cast<std::size_t>(axis)] + step * k; }
};

/// Lattice of the given step covering margin * box, aligned to multiples of step
/// (so the origin is a lattice point).
LatticeSpec default_lattice(int n, int s, const Rational& step, const Rational& margin = Rational(11, 10));

struct GridPoint {
  std::vector<Rational> gamma;  ///< gamma_1..gamma_s
  bool inside = false;
};

struct BoundaryCurve {
  std::string name;
  std::vector<std::array<double, 2>> points;
  std::vector<double> t;         ///< parameter per sample (empty for segments)
  std::vector<bool> on_circle;   ///< exact classification per sample
};

struct RegionDataset {
  int n = 0;
  int s = 0;
  LatticeSpec lattice;
  /// Last coordinate outermost, gamma_1 fastest.
  std::vector<GridPoint> grid;
  BoundBox box_hat;
  Rational box_tilde_radius = 1;  ///< sum |gamma_j| <= radius
  std::vector<BoundarySegment> segments;
  std::vector<BoundaryCurve> curves;
  std::vector<double> skipped_t;
};

struct RegionOptions {
  int tau_samples = 400;
  double tau_epsilon = 1e-3;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Exact on-circle test of the family member with the given gamma_1..gamma_s.
bool classify_point(int n, const std::vector<Rational>& tail);

/// On-circle test for a floating-point point, e.g. a sample of a boundary curve.
/// The exact binary value is tested first; failing that, 16 points on a circle
/// of radius probe_radius around it (s = 2) or the two neighbours (s = 1) are
/// tried, which absorbs the rounding of points that sit on the boundary.
bool classify_sample(int n, std::span<const double> tail, double probe_radius = 1e-7);

/// Classifies every lattice point exactly; for s <= 2 also attaches the
/// boundary segments and, for s = 2, the sampled double-zero curve.
RegionDataset classify_grid(int n, int s, const LatticeSpec& lattice, const RegionOptions& options = {});

struct ContainmentCheck {
  long tilde_points = 0;
  long tilde_not_inside = 0;      ///< lattice points of the l1 ball classified outside
  long inside_points = 0;
  long inside_outside_hat = 0;    ///< inside points beyond the bound box
};

ContainmentCheck check_containment(const RegionDataset& d);

struct BoundaryAgreement {
  long grid_boundary_points = 0;
  double max_grid_to_curve = 0.0;     ///< boundary lattice point -> nearest curve
  long curve_samples = 0;
  long curve_samples_without_inside = 0;   ///< no inside lattice point within radius
  long curve_samples_without_outside = 0;  ///< no outside lattice point within radius
  double radius = 0.0;
};

/// Compares the classified lattice with the boundary curves (s = 2 only).
/// A lattice point is on the grid boundary when it is inside and has a
/// 4-neighbour outside. radius is the allowed distance.
BoundaryAgreement check_boundary_agreement(const RegionDataset& d, double radius);

std::string region_to_csv(const RegionDataset& d, const std::string& tool_version);
std::string region_to_json(const RegionDataset& d, const std::string& tool_version);

}  // namespace unitcircle
