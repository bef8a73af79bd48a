#include "qwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qwalk::oracle {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// 16-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kNodes[8] = {
    0.09501250983763744019, 0.28160355077925891323,
    0.45801677765722738634, 0.61787624440264374845,
    0.75540440835500303390, 0.86563120238783174388,
    0.94457502307323257608, 0.98940093499164993260,
};
constexpr double kWeights[8] = {
    0.18945061045506849629, 0.18260341504492358887,
    0.16915651939500253819, 0.14959598881657673208,
    0.12462897125553387205, 0.09515851168249278481,
    0.06225352393864789286, 0.02715245941175409485,
};

struct NodeSet {
    std::vector<double> k, w;
};

NodeSet build_nodes(int panels) {
    // panel edges over [-pi, pi]; +-pi/2 are always edges
    std::vector<double> edges;
    int per_quarter = std::max(1, (panels + 3) / 4);
    edges.reserve(static_cast<std::size_t>(4 * per_quarter + 1));
    for (int q = 0; q < 4; ++q) {
        double a = -kPi + q * kPi / 2.0;
        for (int i = 0; i < per_quarter; ++i)
            edges.push_back(a + i * (kPi / 2.0) / per_quarter);
    }
    edges.push_back(kPi);
    NodeSet ns;
    ns.k.reserve(edges.size() * 16);
    ns.w.reserve(edges.size() * 16);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double mid = 0.5 * (edges[e] + edges[e + 1]);
        const double half = 0.5 * (edges[e + 1] - edges[e]);
        for (int i = 7; i >= 0; --i) {
            ns.k.push_back(mid - half * kNodes[i]);
            ns.w.push_back(half * kWeights[i]);
        }
        for (int i = 0; i < 8; ++i) {
            ns.k.push_back(mid + half * kNodes[i]);
            ns.w.push_back(half * kWeights[i]);
        }
    }
    return ns;
}

int auto_panels(std::int64_t xmax, std::int64_t t) {
    const double cycles = static_cast<double>(xmax) + 0.708 * static_cast<double>(t) + 4.0;
    return std::max(8, static_cast<int>(std::ceil(2.0 * cycles)));
}

// weighted integrand values w * g(k) for both branches at all nodes
void weighted_kernels(const NodeSet& ns, std::int64_t t, std::vector<cplx>& gu,
                      std::vector<cplx>& gd) {
    const double inv = 1.0 / (2.0 * std::sqrt(2.0));
    const double sg = (t % 2 == 0) ? 1.0 : -1.0;  // e^{-i pi t}
    gu.resize(ns.k.size());
    gd.resize(ns.k.size());
    for (std::size_t j = 0; j < ns.k.size(); ++j) {
        const double k = ns.k[j];
        const double c = std::cos(k);
        const double root = std::sqrt(1.0 + c * c);
        const double om = std::asin(std::sin(k) / std::sqrt(2.0));
        const cplx ph1 = std::polar(1.0, -om * static_cast<double>(t));
        const cplx ph2 = sg * std::conj(ph1);  // e^{i(om-pi) t}
        const cplx em = std::polar(1.0, -k);   // e^{-ik}
        const cplx ep = std::conj(em);
        const cplx iu(0.0, 1.0);
        const cplx au = root + c + iu * em;
        const cplx bu = root - c - iu * em;
        const cplx ad = root - c - iu * ep;
        const cplx bd = root + c + iu * ep;
        const double wn = ns.w[j] * inv / root;
        gu[j] = wn * (ph1 * au + ph2 * bu);
        gd[j] = wn * iu * (ph1 * ad + ph2 * bd);
    }
}

}  // namespace

double omega(double k) { return std::asin(std::sin(k) / std::sqrt(2.0)); }

std::complex<double> analytic_amplitude(std::int64_t x, std::int64_t t, Branch b,
                                        int panels) {
    if (std::llabs(x) > t) throw error("analytic_amplitude: |x| > t");
    const NodeSet ns = build_nodes(panels > 0 ? panels : auto_panels(std::llabs(x), t));
    std::vector<cplx> gu, gd;
    weighted_kernels(ns, t, gu, gd);
    const auto& g = (b == Branch::Up) ? gu : gd;
    cplx acc{};
    for (std::size_t j = 0; j < ns.k.size(); ++j)
        acc += g[j] * std::polar(1.0, ns.k[j] * static_cast<double>(x));
    return acc / (2.0 * kPi);
}

Distribution analytic_distribution(std::int64_t t, int panels) {
    if (t < 0) throw error("analytic_distribution: t must be >= 0");
    const NodeSet ns = build_nodes(panels > 0 ? panels : auto_panels(t, t));
    std::vector<cplx> gu, gd;
    weighted_kernels(ns, t, gu, gd);

    const std::size_t nlive = static_cast<std::size_t>(t + 1);
    std::vector<cplx> au(nlive), ad(nlive);
    for (std::size_t j = 0; j < ns.k.size(); ++j) {
        const double k = ns.k[j];
        const cplx rot = std::polar(1.0, 2.0 * k);  // live sites step by 2
        cplx phase = std::polar(1.0, -static_cast<double>(t) * k);
        const cplx wu = gu[j], wd = gd[j];
        for (std::size_t n = 0; n < nlive; ++n) {
            au[n] += wu * phase;
            ad[n] += wd * phase;
            phase *= rot;
            if ((n & 63u) == 63u)  // keep the rotation on the unit circle
                phase = std::polar(1.0, (static_cast<double>(2 * (n + 1)) -
                                         static_cast<double>(t)) * k);
        }
    }

    Distribution d;
    d.protocol = Protocol::Quantum1D;
    d.n_steps = t;
    d.parity = (t % 2 == 0) ? Parity::Even : Parity::Odd;
    d.positions.resize(nlive);
    d.probs.resize(nlive);
    const double inv2pi = 1.0 / (2.0 * kPi);
    for (std::size_t n = 0; n < nlive; ++n) {
        d.positions[n] = -t + 2 * static_cast<std::int64_t>(n);
        d.probs[n] = std::norm(au[n] * inv2pi) + std::norm(ad[n] * inv2pi);
    }
    return d;
}

double compare(const Distribution& a, const Distribution& b, double floor) {
    if (floor < 0) throw error("compare: floor must be >= 0");
    if (a.positions != b.positions)
        throw error("compare: position grids differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.probs.size(); ++i) {
        const double pa = a.probs[i], pb = b.probs[i];
        if (std::min(pa, pb) > floor)
            worst = std::max(worst, std::abs(pa - pb) / std::max(pa, pb));
    }
    return worst;
}

}  // namespace qwalk::oracle
