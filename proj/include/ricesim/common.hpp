#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ricesim {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Axis-aligned box. Entries may be +-inf for unbounded axes. A zero-dimensional
// box is valid and contains the (unique) empty vector.
struct Box {
    Vec lo;
    Vec hi;

    Box() = default;
    Box(Vec lower, Vec upper) : lo(std::move(lower)), hi(std::move(upper)) {
        if (lo.size() != hi.size()) throw std::invalid_argument("Box: lo/hi size mismatch");
        for (int i = 0; i < lo.size(); ++i) {
            if (!(lo[i] < hi[i])) throw std::invalid_argument("Box: lo must be < hi per axis");
        }
    }

    static Box all(int d) {
        return Box(Vec::Constant(d, -kInf), Vec::Constant(d, kInf));
    }
    static Box empty_window() { return Box(Vec(0), Vec(0)); }

    [[nodiscard]] int dim() const { return static_cast<int>(lo.size()); }

    [[nodiscard]] bool contains(const Vec& x) const {
        for (int i = 0; i < lo.size(); ++i) {
            if (x[i] < lo[i] || x[i] > hi[i]) return false;
        }
        return true;
    }

    [[nodiscard]] bool interior_contains(const Vec& x) const {
        for (int i = 0; i < lo.size(); ++i) {
            if (!(x[i] > lo[i] && x[i] < hi[i])) return false;
        }
        return true;
    }

    [[nodiscard]] bool bounded() const {
        for (int i = 0; i < lo.size(); ++i) {
            if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) return false;
        }
        return true;
    }

    [[nodiscard]] double volume() const {
        double v = 1.0;
        for (int i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
        return v;
    }

    // Widen every bounded axis symmetrically about its midpoint.
    [[nodiscard]] Box widened(double factor) const {
        Vec l = lo, h = hi;
        for (int i = 0; i < lo.size(); ++i) {
            if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) continue;
            const double mid = 0.5 * (lo[i] + hi[i]);
            const double half = 0.5 * (hi[i] - lo[i]) * factor;
            l[i] = mid - half;
            h[i] = mid + half;
        }
        return Box(l, h);
    }
};

// Error types raised on contract violations. Warnings (grazing brackets,
// domain exits) travel as flags on result structs instead.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};
struct StepError : std::runtime_error {
    explicit StepError(const std::string& msg) : std::runtime_error(msg) {}
};
struct OutOfWindow : std::runtime_error {
    explicit OutOfWindow(const std::string& msg) : std::runtime_error(msg) {}
};
struct OutOfBox : std::runtime_error {
    explicit OutOfBox(const std::string& msg) : std::runtime_error(msg) {}
};
struct DegenerateFrame : std::runtime_error {
    explicit DegenerateFrame(const std::string& msg) : std::runtime_error(msg) {}
};
struct TangentialError : std::runtime_error {
    explicit TangentialError(const std::string& msg) : std::runtime_error(msg) {}
};
struct MajorantViolation : std::runtime_error {
    explicit MajorantViolation(const std::string& msg) : std::runtime_error(msg) {}
};
struct ExplosionGuard : std::runtime_error {
    explicit ExplosionGuard(const std::string& msg) : std::runtime_error(msg) {}
};
struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& msg) : std::runtime_error(msg) {}
};
struct TooFewEvents : std::runtime_error {
    explicit TooFewEvents(const std::string& msg) : std::runtime_error(msg) {}
};
struct ResolutionError : std::runtime_error {
    explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ZeroSlice : std::runtime_error {
    explicit ZeroSlice(const std::string& msg) : std::runtime_error(msg) {}
};
struct DivergentNormalizer : std::runtime_error {
    explicit DivergentNormalizer(const std::string& msg) : std::runtime_error(msg) {}
};
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ricesim
