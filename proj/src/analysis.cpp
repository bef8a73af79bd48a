#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwalk::analysis {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

LineFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw error("linear_fit: need >= 2 points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) throw error("linear_fit: degenerate abscissae");
    LineFit f;
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    double rss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        rss += r * r;
    }
    f.residual = std::sqrt(rss / n);
    return f;
}

std::vector<std::size_t> peak_indices(const std::vector<double>& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] > v[i - 1] && v[i] > v[i + 1]) out.push_back(i);
    return out;
}

PeakReport find_peaks(const Distribution& d, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw error("find_peaks: empty window");
    PeakReport r;
    r.window_lo = lo;
    r.window_hi = hi;
    for (auto i : peak_indices(d.probs)) {
        const std::int64_t x = d.positions[i];
        if (x >= lo && x <= hi) r.peak_positions.push_back(x);
    }
    return r;
}

std::int64_t total_peaks(const Distribution& d) {
    if (d.positions.size() == 1) return 1;
    std::int64_t c = 0;
    for (auto i : peak_indices(d.probs))
        if (d.positions[i] >= 0) ++c;
    return c;
}

std::pair<std::int64_t, double> locate_xmax(const Distribution& d) {
    if (d.positions.empty()) throw error("locate_xmax: empty distribution");
    std::int64_t best_x = 0;
    double best_p = -1.0;
    for (std::size_t i = 0; i < d.positions.size(); ++i) {
        if (d.positions[i] < 0) continue;
        if (d.probs[i] >= best_p) {
            best_p = d.probs[i];
            best_x = d.positions[i];
        }
    }
    return {best_x, best_p};
}

double envelope_value_at(const Distribution& d, double x) {
    const std::size_t j = d.index_near(x);
    double v = d.probs[j];
    if (j > 0 && j + 1 < d.probs.size())
        v = std::max(v, 0.5 * (d.probs[j - 1] + d.probs[j + 1]));
    return v;
}

std::map<std::string, double> reference_points(const Distribution& d) {
    const double n = static_cast<double>(d.n_steps);
    auto [xm, pm] = locate_xmax(d);
    return {
        {"P0", envelope_value_at(d, 0.0)},
        {"P_half_edge", envelope_value_at(d, n / (2.0 * kSqrt2))},
        {"P_N_2", envelope_value_at(d, n / 2.0)},
        {"P_xmax", pm},
        {"P_edge", envelope_value_at(d, n / kSqrt2)},
        {"P_beyond", envelope_value_at(d, 0.7072 * n)},
        {"xmax", static_cast<double>(xm)},
    };
}

EnvelopeSeries extract_envelope(const Distribution& d, bool upper, std::int64_t lo,
                                std::int64_t hi) {
    std::size_t nlive = 0;
    EnvelopeSeries e;
    e.upper = upper;
    for (std::size_t i = 1; i + 1 < d.positions.size(); ++i) {
        const std::int64_t x = d.positions[i];
        if (x < lo || x > hi) continue;
        ++nlive;
        const bool extremum = upper
                                  ? (d.probs[i] > d.probs[i - 1] && d.probs[i] > d.probs[i + 1])
                                  : (d.probs[i] < d.probs[i - 1] && d.probs[i] < d.probs[i + 1]);
        if (extremum)
            e.points.push_back({static_cast<double>(x), d.probs[i]});
    }
    if (nlive < 3) throw error("extract_envelope: fewer than 3 live sites in window");
    return e;
}

EnvelopeSeries binmax_envelope(const std::vector<double>& x, const std::vector<double>& v,
                               double lo, double hi, int nbins) {
    if (nbins < 1 || hi <= lo) throw error("binmax_envelope: bad window");
    EnvelopeSeries e;
    e.upper = true;
    for (int b = 0; b < nbins; ++b) {
        const double a0 = lo + (hi - lo) * b / nbins;
        const double a1 = lo + (hi - lo) * (b + 1) / nbins;
        double best = -1.0, bx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < a0 || x[i] >= a1) continue;
            if (v[i] > best) {
                best = v[i];
                bx = x[i];
            }
        }
        if (best > 0.0) e.points.push_back({bx, best});
    }
    return e;
}

FitResult fit_envelope_outer(const EnvelopeSeries& e, std::int64_t n) {
    const double b = static_cast<double>(n) / kSqrt2;
    const double p0 = -1.884 / static_cast<double>(n);
    std::vector<double> X, Y;
    for (const auto& pt : e.points) {
        if (pt.x >= b) continue;
        const double dv = pt.value - p0;
        if (dv <= 0.0) throw error("fit_envelope_outer: non-positive shifted envelope value");
        X.push_back(std::log(b - pt.x));
        Y.push_back(std::log(dv));
    }
    if (X.size() < 3) throw error("fit_envelope_outer: too few envelope points");
    const LineFit f = linear_fit(X, Y);
    FitResult r;
    r.model = FitModel::OuterAlgebraic;
    r.params = {{"P0", p0}, {"a", std::exp(f.intercept)}, {"b", b}, {"c", -f.slope}};
    r.window_lo = e.points.front().x;
    r.window_hi = e.points.back().x;
    r.residual = f.residual;
    return r;
}

FitResult fit_envelope_center(const EnvelopeSeries& e, std::int64_t n) {
    const double nn = static_cast<double>(n);
    double p0 = std::numeric_limits<double>::infinity();
    for (const auto& pt : e.points)
        if (pt.x <= 0.02 * nn) p0 = std::min(p0, pt.value);
    if (!std::isfinite(p0)) {
        for (const auto& pt : e.points) p0 = std::min(p0, pt.value);
    }
    std::vector<double> px, pv;
    for (const auto& pt : e.points) {
        px.push_back(pt.x);
        pv.push_back(pt.value);
    }
    const EnvelopeSeries coarse = binmax_envelope(px, pv, 0.04 * nn, 0.2 * nn, 24);
    std::vector<double> X, Y;
    for (const auto& pt : coarse.points) {
        const double dv = pt.value - p0;
        if (pt.x <= 0.0 || dv <= 0.0) continue;
        X.push_back(std::log(pt.x));
        Y.push_back(std::log(dv));
    }
    if (X.size() < 3) throw error("fit_envelope_center: too few envelope points");
    const LineFit f = linear_fit(X, Y);
    FitResult r;
    r.model = FitModel::CentralQuadratic;
    r.params = {{"P0", p0}, {"a", std::exp(f.intercept)}, {"c", f.slope}};
    r.window_lo = 0.0;
    r.window_hi = 0.2 * nn;
    r.residual = f.residual;
    return r;
}

FitResult fit_tail(const Distribution& d, std::int64_t n) {
    const double b = static_cast<double>(n) / kSqrt2;
    const double rootn = std::sqrt(static_cast<double>(n));
    std::vector<double> X, Y;
    for (std::size_t i = 0; i < d.positions.size(); ++i) {
        const double x = static_cast<double>(d.positions[i]);
        if (x <= b || d.probs[i] < 1e-280) continue;
        X.push_back(std::pow(x - b, 1.5) / rootn);
        Y.push_back(std::log(d.probs[i]));
    }
    if (X.size() < 3) throw error("fit_tail: empty tail window");
    const LineFit f = linear_fit(X, Y);
    FitResult r;
    r.model = FitModel::Tail;
    r.params = {{"P0", 0.0}, {"a", std::exp(f.intercept)}, {"b", b}, {"d", -f.slope}};
    r.window_lo = b;
    r.window_hi = static_cast<double>(d.positions.back());
    r.residual = f.residual;
    return r;
}

namespace {

BeatReport beats_impl(const std::vector<double>& x, const std::vector<double>& v,
                      double lo, double hi, double threshold) {
    std::vector<double> wx, wv;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] >= lo && x[i] <= hi) {
            wx.push_back(x[i]);
            wv.push_back(v[i]);
        }
    if (wx.size() < 8) throw error("detect_beats: window too small");

    std::vector<double> amp(wv.size() - 1), ax(wv.size() - 1);
    for (std::size_t i = 0; i + 1 < wv.size(); ++i) {
        amp[i] = std::abs(wv[i + 1] - wv[i]);
        ax[i] = 0.5 * (wx[i] + wx[i + 1]);
    }
    std::vector<double> sorted = amp;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double cutoff = threshold * median;
    const double step = (wx.size() > 1) ? (wx[1] - wx[0]) : 1.0;

    // sub-threshold local minima of the oscillation amplitude, merged when
    // within four samples; node position is the mean of the merged group
    BeatReport r;
    std::vector<double> group;
    double last_pos = -1e300;
    auto flush = [&]() {
        if (!group.empty()) {
            double s = 0;
            for (double g : group) s += g;
            r.nodes.push_back(s / static_cast<double>(group.size()));
            group.clear();
        }
    };
    for (std::size_t i = 1; i + 1 < amp.size(); ++i) {
        if (!(amp[i] <= amp[i - 1] && amp[i] <= amp[i + 1])) continue;
        if (amp[i] >= cutoff) continue;
        if (!group.empty() && ax[i] - last_pos > 4.0 * step) flush();
        group.push_back(ax[i]);
        last_pos = ax[i];
    }
    flush();

    const auto pk = peak_indices(wv);
    for (std::size_t s = 0; s + 1 < r.nodes.size(); ++s) {
        BeatSegment seg;
        seg.lo = r.nodes[s];
        seg.hi = r.nodes[s + 1];
        for (auto i : pk)
            if (wx[i] > seg.lo && wx[i] < seg.hi) ++seg.peak_count;
        r.segments.push_back(seg);
    }
    return r;
}

}  // namespace

BeatReport detect_beats(const Distribution& d, std::int64_t lo, std::int64_t hi,
                        double threshold) {
    std::vector<double> x(d.positions.begin(), d.positions.end());
    return beats_impl(x, d.probs, static_cast<double>(lo), static_cast<double>(hi),
                      threshold);
}

BeatReport detect_beats_series(const std::vector<double>& x, const std::vector<double>& v,
                               double lo, double hi, double threshold) {
    return beats_impl(x, v, lo, hi, threshold);
}

double fwhm_of_main_peak(const Distribution& d) {
    auto [xm, pm] = locate_xmax(d);
    const double half = 0.5 * pm;
    std::size_t i = d.index_near(static_cast<double>(xm));
    std::size_t r = i;
    while (r + 1 < d.probs.size() && d.probs[r] > half) ++r;
    std::size_t l = i;
    while (l > 0 && d.probs[l] > half) --l;
    if (d.probs[r] > half || d.probs[l] > half)
        throw error("fwhm_of_main_peak: no half-maximum crossing");
    auto interp = [&](std::size_t lo_i, std::size_t hi_i) {
        const double x0 = static_cast<double>(d.positions[lo_i]);
        const double x1 = static_cast<double>(d.positions[hi_i]);
        const double p0 = d.probs[lo_i], p1 = d.probs[hi_i];
        return x0 + (half - p0) * (x1 - x0) / (p1 - p0);
    };
    const double xr = interp(r - 1, r);
    const double xl = interp(l + 1, l);
    return xr - xl;
}

WidthScalings width_scalings(const std::map<std::int64_t, const Distribution*>& runs) {
    if (runs.size() < 4) throw error("width_scalings: need >= 4 values of N");
    const double span = static_cast<double>(runs.rbegin()->first) /
                        static_cast<double>(runs.begin()->first);
    if (span < 100.0) throw error("width_scalings: N range must span >= 2 decades");

    std::vector<double> ns, w10, wlast, wf;
    for (const auto& [n, dp] : runs) {
        const Distribution& d = *dp;
        std::vector<std::int64_t> pk_pos;
        for (auto i : peak_indices(d.probs))
            if (d.positions[i] >= 0) pk_pos.push_back(d.positions[i]);
        if (pk_pos.size() < 10) throw error("width_scalings: fewer than 10 peaks");
        auto [xm, pm] = locate_xmax(d);
        std::vector<std::int64_t> upto;
        for (auto p : pk_pos)
            if (p <= xm) upto.push_back(p);
        if (upto.size() < 10) throw error("width_scalings: fewer than 10 peaks below x_max");
        ns.push_back(static_cast<double>(n));
        w10.push_back(static_cast<double>(pk_pos[9]));
        wlast.push_back(static_cast<double>(upto.back() - upto[upto.size() - 10]));
        wf.push_back(fwhm_of_main_peak(d));
    }
    return {power_law_fit(ns, w10), power_law_fit(ns, wlast), power_law_fit(ns, wf)};
}

FitResult power_law_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw error("power_law_fit: need >= 3 points");
    std::vector<double> X, Y;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0) throw error("power_law_fit: inputs must be positive");
        X.push_back(std::log(x[i]));
        Y.push_back(std::log(y[i]));
    }
    const LineFit f = linear_fit(X, Y);
    FitResult r;
    r.model = FitModel::PowerLaw;
    r.params = {{"exponent", f.slope}, {"prefactor", std::exp(f.intercept)}};
    r.window_lo = x.front();
    r.window_hi = x.back();
    r.residual = f.residual;
    return r;
}

FitResult fit_gaussian(const std::vector<double>& x, const std::vector<double>& v) {
    if (x.size() != v.size() || x.empty()) throw error("fit_gaussian: empty input");
    const double vmax = *std::max_element(v.begin(), v.end());
    const double floor = vmax * std::exp(-4.5);
    std::vector<double> X, Y;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (v[i] <= floor) continue;
        X.push_back(x[i] * x[i]);
        Y.push_back(std::log(v[i]));
    }
    if (X.size() < 3) throw error("fit_gaussian: too few points above the floor");
    const LineFit f = linear_fit(X, Y);
    if (f.slope >= 0.0) throw error("fit_gaussian: data is not bell-shaped");
    FitResult r;
    r.model = FitModel::Gaussian;
    r.params = {{"sigma", std::sqrt(-0.5 / f.slope)},
                {"A", 0.5 * std::exp(f.intercept)}};
    r.residual = f.residual;
    return r;
}

}  // namespace qwalk::analysis
