#pragma once

#include <complex>
#include <cstdint>

#include "qwalk/types.hpp"

namespace qwalk::oracle {

enum class Branch { Up, Down };

/// Dispersion of the Hadamard walk, omega_k = asin(sin k / sqrt 2).
double omega(double k);

/// Exact wave-function amplitude psi(x, t) for the symmetric initial state,
/// by Gauss-Legendre quadrature of the closed-form momentum integral.
/// `panels` overrides the resolution heuristic (0 = automatic).
std::complex<double> analytic_amplitude(std::int64_t x, std::int64_t t, Branch b,
                                        int panels = 0);

/// P(x, t) on all live-parity sites from the quadrature amplitudes.
/// Intended for t up to a couple of thousand steps.
Distribution analytic_distribution(std::int64_t t, int panels = 0);

/// Max over positions with min(Pa, Pb) > floor of |Pa-Pb| / max(Pa, Pb).
/// The two distributions must share a position grid.
double compare(const Distribution& a, const Distribution& b, double floor);

}  // namespace qwalk::oracle
