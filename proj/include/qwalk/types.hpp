#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Protocol { Quantum1D, Classical1D, Tensor2D, Aqw2D, Grover2D };
enum class Parity { Even, Odd, All };

const char* to_string(Protocol p);
const char* to_string(Parity p);
Protocol protocol_from_string(const std::string& s);
Parity parity_from_string(const std::string& s);

/// Probability distribution on integer positions, live-parity sites only,
/// positions strictly ascending.
struct Distribution {
    Protocol protocol = Protocol::Quantum1D;
    std::int64_t n_steps = 0;
    Parity parity = Parity::All;
    std::string slice;  // empty, or "A"/"B"/"C" for 2D slices
    std::vector<std::int64_t> positions;
    std::vector<double> probs;

    double total() const;
    std::size_t size() const { return positions.size(); }
    // index of the live site nearest to x, rounding toward zero
    std::size_t index_near(double x) const;
    double prob_at(std::int64_t x) const;  // 0 if x is not a live site
};

/// Dense square grid of probabilities, both axes on [grid_min, grid_max].
struct Distribution2D {
    Protocol protocol = Protocol::Tensor2D;
    std::int64_t n_steps = 0;
    std::int64_t grid_min = 0;
    std::int64_t grid_max = 0;
    std::vector<double> p;  // row-major, index (x - grid_min)*side + (y - grid_min)

    std::int64_t side() const { return grid_max - grid_min + 1; }
    double& at(std::int64_t x, std::int64_t y);
    double at(std::int64_t x, std::int64_t y) const;
    double total() const;
};

/// Real Fourier components F(k_m) of a 1D distribution,
/// k_m = 2*pi*m/M on (-pi, pi], M = n_steps + 1; components stored for m >= 0
/// (F is even in m).
struct Spectrum {
    std::int64_t n_steps = 0;
    std::int64_t grid_size = 0;  // M
    std::vector<double> k;       // k_m for m = 0..M/2
    std::vector<double> f;

    std::size_t half_size() const { return f.size(); }
};

/// 2D Fourier components F(k_m1, k_m2), separable cosine kernels per axis;
/// stored for m1, m2 >= 0 (even in both arguments).
struct Spectrum2D {
    std::int64_t n_steps = 0;
    std::int64_t grid_size = 0;  // M per axis
    std::vector<double> k;       // shared axis grid, m = 0..M/2
    std::vector<double> f;       // row-major (m1, m2)

    std::size_t half_size() const { return k.size(); }
    double at(std::size_t m1, std::size_t m2) const { return f[m1 * half_size() + m2]; }
};

enum class FitModel {
    OuterAlgebraic,   // P = P0 + a*(b-x)^(-c)
    CentralQuadratic, // P = P0 + a*x^c
    Tail,             // P = a*exp(-d*(x-b)^1.5/sqrt(N))
    Gaussian,         // P = A*exp(-x^2/(2 sigma^2)), density-normalized
    FourierSmallK,    // F = (A/sqrt(N))*(k/pi)^(-c)
    FourierLargeK,    // F = (A/sqrt(N))*(1-k/pi)^c
    Slice2D,          // y = c1 + c2*(b-x)^(-c)
    PowerLaw,         // y = A*x^c
};

const char* to_string(FitModel m);

struct FitResult {
    FitModel model = FitModel::PowerLaw;
    std::map<std::string, double> params;
    double window_lo = 0.0;
    double window_hi = 0.0;
    double residual = 0.0;  // rms residual in log space

    double param(const std::string& name) const;
};

struct PeakReport {
    std::int64_t window_lo = 0;
    std::int64_t window_hi = 0;
    std::vector<std::int64_t> peak_positions;
    std::int64_t count() const { return static_cast<std::int64_t>(peak_positions.size()); }
};

struct EnvelopePoint {
    double x = 0.0;
    double value = 0.0;
};

struct EnvelopeSeries {
    bool upper = true;
    std::vector<EnvelopePoint> points;
};

struct BeatSegment {
    double lo = 0.0;
    double hi = 0.0;
    std::int64_t peak_count = 0;
    double width() const { return hi - lo; }
};

struct BeatReport {
    std::vector<double> nodes;
    std::vector<BeatSegment> segments;
};

}  // namespace qwalk
