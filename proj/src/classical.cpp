#include "qwalk/classical.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qwalk::classical {

double log_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

Distribution binomial_distribution(std::int64_t n) {
    if (n < 0) throw error("binomial_distribution: n must be >= 0");
    Distribution d;
    d.protocol = Protocol::Classical1D;
    d.n_steps = n;
    d.parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
    const double ln2n = static_cast<double>(n) * std::numbers::ln2;
    d.positions.resize(static_cast<std::size_t>(n + 1));
    d.probs.resize(static_cast<std::size_t>(n + 1));
    for (std::int64_t j = 0; j <= n; ++j) {
        const std::int64_t x = 2 * j - n;
        d.positions[static_cast<std::size_t>(j)] = x;
        d.probs[static_cast<std::size_t>(j)] = std::exp(log_binomial(n, j) - ln2n);
    }
    return d;
}

std::vector<std::uint64_t> binomial_coefficient_row(int n) {
    if (n < 0) throw error("binomial_coefficient_row: n must be >= 0");
    if (n > 64)
        throw error("binomial_coefficient_row: exact mode is limited to n <= 64; "
                    "use binomial_distribution for larger n");
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row;
}

double gaussian_2d(std::int64_t n, double x, double y) {
    if (n <= 0) throw error("gaussian_2d: n must be > 0");
    const double nn = static_cast<double>(n);
    return std::exp(-(x * x + y * y) / (2.0 * nn)) / (2.0 * std::numbers::pi * nn);
}

}  // namespace qwalk::classical
