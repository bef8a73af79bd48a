#include "qwalk/walk1d.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/util.hpp"

namespace qwalk::walk1d {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

cplx WalkState1D::amp_up(std::int64_t i) const {
    if (i < -t || i > t) return {};
    return up[static_cast<std::size_t>(i + t)];
}

cplx WalkState1D::amp_down(std::int64_t i) const {
    if (i < -t || i > t) return {};
    return down[static_cast<std::size_t>(i + t)];
}

double WalkState1D::norm() const {
    std::vector<double> sq(up.size());
    for (std::size_t i = 0; i < up.size(); ++i)
        sq[i] = std::norm(up[i]) + std::norm(down[i]);
    return pairwise_sum(sq);
}

WalkState1D symmetric_initial() {
    return initial_state(kInvSqrt2, cplx(0.0, kInvSqrt2));
}

WalkState1D initial_state(cplx cu, cplx cd) {
    WalkState1D s;
    s.t = 0;
    s.up = {cu};
    s.down = {cd};
    return s;
}

namespace {

/// Fused coin+shift sweep from amplitudes at step t (arrays sized 2*cap+1,
/// position i at index i+cap) into the next step's buffers. Only sites with
/// the live output parity are written; everything else in [lo-1, hi+1] is
/// zeroed by the parity interleave (outputs of the dead parity stay zero
/// because their sources are zero).
void sweep(const cplx* up_in, const cplx* dn_in, cplx* up_out, cplx* dn_out,
           std::int64_t cap, std::int64_t t, int threads) {
    // output positions j = -(t+1) .. t+1 with j ≡ t+1 (mod 2), step 2
    const std::int64_t jlo = -(t + 1);
    const std::size_t count = static_cast<std::size_t>(t + 2);  // number of live outputs
    parallel_for(count, threads, [&](std::size_t b0, std::size_t b1) {
        for (std::size_t n = b0; n < b1; ++n) {
            const std::int64_t j = jlo + 2 * static_cast<std::int64_t>(n);
            const std::size_t idx = static_cast<std::size_t>(j + cap);
            // up(j) <- coin-up at j-1, down(j) <- coin-down at j+1
            const cplx ul = up_in[idx - 1], dl = dn_in[idx - 1];
            const cplx ur = up_in[idx + 1], dr = dn_in[idx + 1];
            up_out[idx] = (ul + dl) * kInvSqrt2;
            dn_out[idx] = (ur - dr) * kInvSqrt2;
        }
    });
}

Distribution make_distribution(const cplx* up, const cplx* dn, std::int64_t cap,
                               std::int64_t t, Protocol proto) {
    Distribution d;
    d.protocol = proto;
    d.n_steps = t;
    d.parity = (t % 2 == 0) ? Parity::Even : Parity::Odd;
    const std::int64_t first = -t;
    const std::size_t nlive = static_cast<std::size_t>(t + 1);
    d.positions.resize(nlive);
    d.probs.resize(nlive);
    for (std::size_t n = 0; n < nlive; ++n) {
        const std::int64_t x = first + 2 * static_cast<std::int64_t>(n);
        const std::size_t idx = static_cast<std::size_t>(x + cap);
        d.positions[n] = x;
        d.probs[n] = std::norm(up[idx]) + std::norm(dn[idx]);
    }
    return d;
}

}  // namespace

WalkState1D step(const WalkState1D& s) {
    // pad capacity by one site so the sweep's edge reads stay in range
    const std::int64_t cap = s.t + 2;
    const std::size_t len = static_cast<std::size_t>(2 * cap + 1);
    std::vector<cplx> ui(len), di(len), uo(len), do_(len);
    for (std::int64_t i = -s.t; i <= s.t; ++i) {
        ui[static_cast<std::size_t>(i + cap)] = s.amp_up(i);
        di[static_cast<std::size_t>(i + cap)] = s.amp_down(i);
    }
    sweep(ui.data(), di.data(), uo.data(), do_.data(), cap, s.t, 1);

    WalkState1D out;
    out.t = s.t + 1;
    const std::size_t olen = static_cast<std::size_t>(2 * out.t + 1);
    out.up.resize(olen);
    out.down.resize(olen);
    for (std::int64_t i = -out.t; i <= out.t; ++i) {
        out.up[static_cast<std::size_t>(i + out.t)] = uo[static_cast<std::size_t>(i + cap)];
        out.down[static_cast<std::size_t>(i + out.t)] = do_[static_cast<std::size_t>(i + cap)];
    }
    return out;
}

Distribution probability(const WalkState1D& s) {
    // pack into a capacity-t array and reuse the shared path
    const std::int64_t cap = std::max<std::int64_t>(s.t, 0);
    std::vector<cplx> u(static_cast<std::size_t>(2 * cap + 1));
    std::vector<cplx> d(static_cast<std::size_t>(2 * cap + 1));
    for (std::int64_t i = -s.t; i <= s.t; ++i) {
        u[static_cast<std::size_t>(i + cap)] = s.amp_up(i);
        d[static_cast<std::size_t>(i + cap)] = s.amp_down(i);
    }
    return make_distribution(u.data(), d.data(), cap, s.t, Protocol::Quantum1D);
}

std::map<std::int64_t, Distribution> evolve(std::int64_t n,
                                            const std::set<std::int64_t>& checkpoints,
                                            int threads) {
    if (n < 0) throw error("evolve: n must be >= 0");
    for (auto c : checkpoints)
        if (c < 0 || c > n)
            throw error("evolve: checkpoint " + std::to_string(c) +
                        " outside [0, " + std::to_string(n) + "]");

    const std::int64_t cap = n + 1;
    const std::size_t len = static_cast<std::size_t>(2 * cap + 1);
    std::vector<cplx> ua(len), da(len), ub(len), db(len);
    ua[static_cast<std::size_t>(cap)] = kInvSqrt2;
    da[static_cast<std::size_t>(cap)] = cplx(0.0, kInvSqrt2);

    std::map<std::int64_t, Distribution> out;
    if (checkpoints.count(0))
        out.emplace(0, make_distribution(ua.data(), da.data(), cap, 0, Protocol::Quantum1D));

    cplx *ucur = ua.data(), *dcur = da.data(), *unew = ub.data(), *dnew = db.data();
    for (std::int64_t t = 0; t < n; ++t) {
        sweep(ucur, dcur, unew, dnew, cap, t, threads);
        std::swap(ucur, unew);
        std::swap(dcur, dnew);
        if (checkpoints.count(t + 1))
            out.emplace(t + 1,
                        make_distribution(ucur, dcur, cap, t + 1, Protocol::Quantum1D));
    }
    return out;
}

Distribution distribution(std::int64_t n, int threads) {
    auto m = evolve(n, {n}, threads);
    return std::move(m.at(n));
}

double drift_tolerance(std::int64_t n) {
    return std::max(1e-9, static_cast<double>(n) * 1e-12);
}

}  // namespace qwalk::walk1d
