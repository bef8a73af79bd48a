#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk::classical {

/// Binomial walk distribution P(x) = 2^-n C(n, (n-x)/2) on live-parity sites.
/// Log-space evaluation, stable up to n ~ 1e6.
Distribution binomial_distribution(std::int64_t n);

/// Row n of Pascal's triangle, exact integers. n <= 64 (C(64,32) fits in
/// 64 bits); larger n must use the real-valued API.
std::vector<std::uint64_t> binomial_coefficient_row(int n);

/// ln C(n, k) via lgamma; -inf if k is out of range.
double log_binomial(std::int64_t n, std::int64_t k);

/// 2D Gaussian limit of the classical walk: (1/(2 pi n)) exp(-(x^2+y^2)/(2n)).
double gaussian_2d(std::int64_t n, double x, double y);

}  // namespace qwalk::classical
