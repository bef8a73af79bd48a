#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qwalk {

/// Pairwise (tree) sum with a fixed leaf size, so the summation order is
/// independent of how callers partition work.
double pairwise_sum(std::span<const double> v);

/// Run fn(begin, end) over [0, n) in fixed-size blocks distributed over
/// `threads` std::threads. Blocks never overlap and the per-block work is
/// position-independent, so results are identical for any thread count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace qwalk
