#pragma once

#include <complex>
#include <vector>

namespace unitcircle {

/// All complex roots of sum_i coeffs[i] z^i (lowest power first) as the
/// eigenvalues of the companion matrix. Trailing zero coefficients are ignored.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

}  // namespace unitcircle
