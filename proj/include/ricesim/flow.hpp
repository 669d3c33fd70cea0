#pragma once

#include "ricesim/common.hpp"
#include "ricesim/field.hpp"

#include <functional>
#include <optional>

namespace ricesim {

class Surface;

struct FlowResult {
    Vec endpoint;
    bool exited_domain = false;
    long steps_used = 0;
};

// One classical RK4 step of size dt (dt may be negative). No domain check.
Vec rk4_step(const VectorField& field, const Vec& x, double dt);

// Integral curve endpoint q(x,t) by fixed-step RK4. If the curve leaves the
// field's box domain the result carries the boundary point (localized to tol
// in time) and exited_domain = true. StepError on nonfinite state.
FlowResult integrate_flow(const VectorField& field, const Vec& x, double t,
                          double step, double tol = 1e-10);

// Central-difference approximation of d q(x,t) / d x.
Mat flow_jacobian(const VectorField& field, const Vec& x, double t,
                  double step, double fd_h);

struct HittingResult {
    std::optional<double> time;
    bool grazing = false;  // bracket had |<n,mu>| below the transversality floor
};

// First positive root of signed_fn along the integral curve from x, bracketed
// at step endpoints and bisected to time tolerance tol.
HittingResult hitting_time(const VectorField& field, const Vec& x,
                           const std::function<double(const Vec&)>& signed_fn,
                           double t_max, double step, double tol,
                           const std::function<double(const Vec&)>& margin_fn = {},
                           double transversality_floor = 0.0);

// Convenience overload against a surface's signed function (window ignored;
// callers filter hits by window themselves).
HittingResult hitting_time(const VectorField& field, const Vec& x, const Surface& surface,
                           double t_max, double step, double tol,
                           double transversality_floor = 0.0);

}  // namespace ricesim
