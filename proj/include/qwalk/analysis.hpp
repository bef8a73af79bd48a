#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk::analysis {

/// Least-squares line y = slope*x + intercept; rms residual.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};
LineFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Indices of strict local maxima of v (interior points only).
std::vector<std::size_t> peak_indices(const std::vector<double>& v);

/// Strict local maxima of the live-parity sequence inside the closed window
/// [lo, hi]. Peaks are certified against their neighbors in the full
/// distribution, so a peak may sit on a window endpoint.
PeakReport find_peaks(const Distribution& d, std::int64_t lo, std::int64_t hi);

/// Peak count over x >= 0 (one half of the symmetric distribution).
/// A single-site distribution counts as one peak.
std::int64_t total_peaks(const Distribution& d);

/// Global maximum over x >= 0; ties break toward larger x.
std::pair<std::int64_t, double> locate_xmax(const Distribution& d);

/// Upper-envelope probabilities at the six reference abscissae
/// {0, N/(2 sqrt 2), N/2, x_max, N/sqrt 2, 0.7072 N}. Point estimate is
/// max(site value, mean of the two live neighbours), site rounded toward zero.
std::map<std::string, double> reference_points(const Distribution& d);

double envelope_value_at(const Distribution& d, double x);

/// Strict local extrema of the live sequence within [lo, hi].
EnvelopeSeries extract_envelope(const Distribution& d, bool upper, std::int64_t lo,
                                std::int64_t hi);

/// Coarse upper envelope: per-bin maxima over nbins equal bins of [lo, hi].
EnvelopeSeries binmax_envelope(const std::vector<double>& x, const std::vector<double>& v,
                               double lo, double hi, int nbins);

/// P_e(x) = P0 + a (b-x)^-c with b = N/sqrt2 and P0 = -1.884/N pinned;
/// log-log regression for a and c. Envelope should cover [0.4 N, x_max].
FitResult fit_envelope_outer(const EnvelopeSeries& e, std::int64_t n);

/// P_e(x) = P0 + a' x^c' near the center. P0 is the flat central plateau
/// (minimum envelope value at x <= 0.02 N); the regression runs on per-bin
/// maxima over [0.04 N, 0.2 N].
FitResult fit_envelope_center(const EnvelopeSeries& e, std::int64_t n);

/// P(x) = a exp(-d (x-b)^1.5 / sqrt N) for x > b = N/sqrt2 (P0 = 0 pinned).
FitResult fit_tail(const Distribution& d, std::int64_t n);

/// Beat nodes: local minima of the site-to-site oscillation amplitude
/// |P_{i+1}-P_i| falling below `threshold` times its window median;
/// adjacent sub-threshold minima merge into one node. Segments are the
/// intervals between consecutive nodes with strict-peak counts inside.
BeatReport detect_beats(const Distribution& d, std::int64_t lo, std::int64_t hi,
                        double threshold = 0.25);

/// Same node rule on an arbitrary sampled sequence.
BeatReport detect_beats_series(const std::vector<double>& x, const std::vector<double>& v,
                               double lo, double hi, double threshold = 0.25);

struct WidthScalings {
    FitResult first10;  // width of the first 10 peaks from x=0 vs N
    FitResult last10;   // width of the last 10 peaks up to x_max vs N
    FitResult fwhm;     // FWHM of the tallest peak vs N
};

/// Requires >= 4 values of N spanning >= 2 decades.
WidthScalings width_scalings(const std::map<std::int64_t, const Distribution*>& runs);

double fwhm_of_main_peak(const Distribution& d);

/// Log-log least squares; all inputs must be positive, >= 3 points.
FitResult power_law_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Centered Gaussian P = A exp(-x^2/(2 sigma^2)) fitted on sites with
/// P > max(P) e^-4.5. The reported amplitude is per unit x (site value
/// halved, live sites being two apart).
FitResult fit_gaussian(const std::vector<double>& x, const std::vector<double>& v);

}  // namespace qwalk::analysis
