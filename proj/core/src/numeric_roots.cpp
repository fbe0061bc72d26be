#include "unitcircle/numeric_roots.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace unitcircle {

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n == 0) throw std::invalid_argument("roots of the zero polynomial");
  const Eigen::Index deg = static_cast<Eigen::Index>(n) - 1;
  if (deg == 0) return {};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  const double lead = coeffs[n - 1];
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue iteration failed");
  const auto& ev = solver.eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
  return out;
}

}  // namespace unitcircle
