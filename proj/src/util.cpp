#include "qwalk/util.hpp"

#include <algorithm>
#include <thread>

namespace qwalk {

namespace {
constexpr std::size_t kLeaf = 1024;

double sum_range(std::span<const double> v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= kLeaf) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    // split at a leaf-aligned midpoint so the tree shape is canonical
    std::size_t half = (hi - lo) / 2;
    std::size_t mid = lo + ((half + kLeaf - 1) / kLeaf) * kLeaf;
    if (mid >= hi) mid = lo + half;
    return sum_range(v, lo, mid) + sum_range(v, mid, hi);
}
}  // namespace

double pairwise_sum(std::span<const double> v) {
    if (v.empty()) return 0.0;
    return sum_range(v, 0, v.size());
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    constexpr std::size_t kBlock = 8192;
    std::size_t nblocks = (n + kBlock - 1) / kBlock;
    if (threads <= 1 || nblocks == 1) {
        fn(0, n);
        return;
    }
    std::size_t nthreads = std::min<std::size_t>(threads, nblocks);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t b = t; b < nblocks; b += nthreads) {
                std::size_t lo = b * kBlock;
                std::size_t hi = std::min(n, lo + kBlock);
                fn(lo, hi);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace qwalk
