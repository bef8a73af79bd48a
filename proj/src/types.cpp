#include "qwalk/types.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/util.hpp"

namespace qwalk {

const char* to_string(Protocol p) {
    switch (p) {
        case Protocol::Quantum1D: return "quantum-1d";
        case Protocol::Classical1D: return "classical-1d";
        case Protocol::Tensor2D: return "tensor-2d";
        case Protocol::Aqw2D: return "aqw-2d";
        case Protocol::Grover2D: return "grover-2d";
    }
    return "unknown";
}

const char* to_string(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        case Parity::All: return "all";
    }
    return "unknown";
}

Protocol protocol_from_string(const std::string& s) {
    if (s == "quantum-1d") return Protocol::Quantum1D;
    if (s == "classical-1d") return Protocol::Classical1D;
    if (s == "tensor-2d") return Protocol::Tensor2D;
    if (s == "aqw-2d") return Protocol::Aqw2D;
    if (s == "grover-2d") return Protocol::Grover2D;
    throw error("unknown protocol: " + s);
}

Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    if (s == "all") return Parity::All;
    throw error("unknown parity: " + s);
}

double Distribution::total() const { return pairwise_sum(probs); }

std::size_t Distribution::index_near(double x) const {
    if (positions.empty()) throw error("empty distribution");
    const double step = positions.size() > 1
                            ? static_cast<double>(positions[1] - positions[0])
                            : 1.0;
    // round toward zero onto the live grid
    double offs = (x - static_cast<double>(positions.front())) / step;
    double t = (x >= 0.0) ? std::floor(offs) : std::ceil(offs);
    auto j = static_cast<std::int64_t>(t);
    j = std::clamp<std::int64_t>(j, 0, static_cast<std::int64_t>(positions.size()) - 1);
    return static_cast<std::size_t>(j);
}

double Distribution::prob_at(std::int64_t x) const {
    auto it = std::lower_bound(positions.begin(), positions.end(), x);
    if (it == positions.end() || *it != x) return 0.0;
    return probs[static_cast<std::size_t>(it - positions.begin())];
}

double& Distribution2D::at(std::int64_t x, std::int64_t y) {
    return p[static_cast<std::size_t>((x - grid_min) * side() + (y - grid_min))];
}

double Distribution2D::at(std::int64_t x, std::int64_t y) const {
    return p[static_cast<std::size_t>((x - grid_min) * side() + (y - grid_min))];
}

double Distribution2D::total() const { return pairwise_sum(p); }

const char* to_string(FitModel m) {
    switch (m) {
        case FitModel::OuterAlgebraic: return "outer-algebraic";
        case FitModel::CentralQuadratic: return "central-quadratic";
        case FitModel::Tail: return "tail";
        case FitModel::Gaussian: return "gaussian";
        case FitModel::FourierSmallK: return "fourier-small-k";
        case FitModel::FourierLargeK: return "fourier-large-k";
        case FitModel::Slice2D: return "slice-2d";
        case FitModel::PowerLaw: return "power-law";
    }
    return "unknown";
}

double FitResult::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw error("fit result has no parameter '" + name + "'");
    return it->second;
}

}  // namespace qwalk
