#pragma once

#include <complex>
#include <map>
#include <set>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk::walk1d {

using cplx = std::complex<double>;

/// Coin-resolved state after t steps. Amplitudes are indexed by position
/// i in [-t, t]; sites whose parity differs from t are exactly zero.
struct WalkState1D {
    std::int64_t t = 0;
    std::vector<cplx> up;    // spin-up amplitudes, index i + t
    std::vector<cplx> down;  // spin-down amplitudes

    cplx amp_up(std::int64_t i) const;
    cplx amp_down(std::int64_t i) const;
    double norm() const;
};

/// (|up> + i |down>)/sqrt(2) at the origin.
WalkState1D symmetric_initial();

/// Arbitrary coin state (cu|up> + cd|down>) at the origin; not normalized
/// for the caller.
WalkState1D initial_state(cplx cu, cplx cd);

/// One Hadamard-coin + shift step.
WalkState1D step(const WalkState1D& s);

Distribution probability(const WalkState1D& s);

/// Evolve n steps and return the distribution at each checkpoint.
/// Checkpoints must lie in [0, n].
std::map<std::int64_t, Distribution> evolve(std::int64_t n,
                                            const std::set<std::int64_t>& checkpoints,
                                            int threads = 1);

/// Final distribution only.
Distribution distribution(std::int64_t n, int threads = 1);

/// Normalization drift budget: |sum P - 1| <= max(1e-9, n * 1e-12).
double drift_tolerance(std::int64_t n);

}  // namespace qwalk::walk1d
