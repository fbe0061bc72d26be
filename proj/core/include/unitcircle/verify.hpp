#pragma once

#include <string>
#include <vector>

namespace unitcircle {

struct ReportEntry {
  std::string identity;
  std::string range;  ///< e.g. "N=7,s=3" or "0<=s<=N<=25"
  bool passed = false;
  /// Exact polynomial identity whose difference vanished identically;
  /// max_residual is then exactly 0.
  bool exact_zero = false;
  double max_residual = 0.0;
  std::string notes;
};

struct VerificationReport {
  int max_n = 0;
  std::vector<ReportEntry> entries;

  bool all_passed() const;
};

/// U_N^(s) three ways: formal differentiation, the double-binomial sum and
/// the U-combination. A failure of the (s-1)! U-combination is reported
/// in notes together with the verdict of the s!-denominator variant.
ReportEntry verify_derivative_agreement(int n, int s);

/// z^((N-s)/2) U_N^(s)((z^(1/2) + z^(-1/2))/2) = 2^s s! sum C(N-j,s) C(s+j,s) z^j.
ReportEntry verify_half_angle_sum(int n, int s);

/// T-kind expansion, the vanishing companion sum, both U-expansions and the
/// telescoped form with Theta. One entry each.
std::vector<ReportEntry> verify_expansions(int n, int s);

/// Half-angle images of U_N and U_N'. Requires N >= 1.
ReportEntry verify_low_order_sums(int n);

/// (1-z)^(2s+1) F_{N,s} against the closed j-sum, its factorial form, the
/// coefficient formula for A_p (zero for s < p < N+1) and the binomial
/// identity C(s,j)/C(N,j) = C(N-j,N-s)/C(N,s). One entry each.
std::vector<ReportEntry> verify_fns_closed_form(int n, int s);

/// The extremal polynomial equals (1-z)^(2s+1) F_{N,s} exactly.
ReportEntry verify_extremal_exact(int n, int s);

/// Extremal polynomial rebuilt from floating zeros of U_N^(s); requires s < N.
ReportEntry verify_extremal_numeric(int n, int s, double tol = 1e-8);

/// (2^s/s!)(1-z^2)^s U_N^(s) = (-1)^s sum_j (-1)^j C(N-j,N-s) C(N+s+1,j) U_{N+s-2j},
/// and the factorial form of the same identity. 0 <= s <= N.
ReportEntry verify_weighted_u_expansion(int n, int s);

/// Closed forms for s = 1, 2, 3, N-2, N-1, N. Requires N >= 4.
std::vector<ReportEntry> verify_special_orders(int n);

/// The three vanishing combinations of U_j. N >= 0.
ReportEntry verify_vanishing_combinations(int n);

/// F_{N,s} rebuilt from the zeros of U_N^(s) against its exact coefficients,
/// residual scaled by max(1, max |coefficient|). Requires s < N. Throws
/// ToleranceNotReached when the residual is not below tol.
ReportEntry verify_zero_factorization(int n, int s, double tol = 1e-8);

/// q(z) = 1 + kappa (z - z^(N-1)) - z^N: the exact on-circle interval over a
/// kappa grid, then the endpoint factorizations through zeros of U_{N-2}' and
/// U_{N-2}. Requires N >= 4.
std::vector<ReportEntry> verify_quadrinomial_crosscheck(int n, double tol = 1e-8);

/// Floating-point Cohn check on the extremal polynomial: after removing the
/// known multiple zeros at +-1, the zeros of P' lie in |z| <= 1 + tol.
ReportEntry verify_cohn_numeric(int n, int s, double tol = 1e-8);

/// Every verifier over its range up to max_n (numeric ones capped at 20, the
/// quadrinomials at 15), one aggregated entry per identity in a fixed order.
/// Requires max_n >= 5.
VerificationReport run_full_suite(int max_n);

std::string report_to_json(const VerificationReport& r, const std::string& tool_version);
std::string report_to_text(const VerificationReport& r);

}  // namespace unitcircle
