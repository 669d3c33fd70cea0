#include "ricesim/flow.hpp"

#include "ricesim/surface.hpp"

#include <cmath>

namespace ricesim {

namespace {

bool finite(const Vec& x) {
    for (int i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i])) return false;
    }
    return true;
}

}  // namespace

Vec rk4_step(const VectorField& field, const Vec& x, double dt) {
    const int d = field.dim();
    Vec k1(d), k2(d), k3(d), k4(d), tmp(d);
    field.eval_into(x, k1);
    tmp = x + (0.5 * dt) * k1;
    field.eval_into(tmp, k2);
    tmp = x + (0.5 * dt) * k2;
    field.eval_into(tmp, k3);
    tmp = x + dt * k3;
    field.eval_into(tmp, k4);
    return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

FlowResult integrate_flow(const VectorField& field, const Vec& x, double t,
                          double step, double tol) {
    if (!(step > 0.0)) throw std::invalid_argument("integrate_flow: step must be > 0");
    if (!field.domain().contains(x)) throw DomainError("integrate_flow: start outside domain");

    FlowResult result;
    result.endpoint = x;
    const double dir = t >= 0.0 ? 1.0 : -1.0;
    double remaining = std::abs(t);
    const Box& box = field.domain();

    while (remaining > 0.0) {
        const double dt = std::min(step, remaining) * dir;
        Vec next = rk4_step(field, result.endpoint, dt);
        ++result.steps_used;
        if (!finite(next)) throw StepError("integrate_flow: nonfinite state");
        if (!box.contains(next)) {
            // Bisect the exit time; keep the last inside point.
            double lo = 0.0, hi = std::abs(dt);
            Vec inside = result.endpoint;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                Vec probe = rk4_step(field, result.endpoint, mid * dir);
                if (box.contains(probe)) {
                    lo = mid;
                    inside = std::move(probe);
                } else {
                    hi = mid;
                }
            }
            result.endpoint = std::move(inside);
            result.exited_domain = true;
            return result;
        }
        result.endpoint = std::move(next);
        remaining -= std::abs(dt);
    }
    return result;
}

Mat flow_jacobian(const VectorField& field, const Vec& x, double t,
                  double step, double fd_h) {
    if (!(fd_h > 0.0)) throw std::invalid_argument("flow_jacobian: fd_h must be > 0");
    const int d = field.dim();
    Mat jac(d, d);
    for (int i = 0; i < d; ++i) {
        Vec xp = x, xm = x;
        xp[i] += fd_h;
        xm[i] -= fd_h;
        const FlowResult fp = integrate_flow(field, xp, t, step);
        const FlowResult fm = integrate_flow(field, xm, t, step);
        if (fp.exited_domain || fm.exited_domain) {
            throw DomainError("flow_jacobian: probe curve exited field domain");
        }
        jac.col(i) = (fp.endpoint - fm.endpoint) / (2.0 * fd_h);
    }
    return jac;
}

HittingResult hitting_time(const VectorField& field, const Vec& x,
                           const std::function<double(const Vec&)>& signed_fn,
                           double t_max, double step, double tol,
                           const std::function<double(const Vec&)>& margin_fn,
                           double transversality_floor) {
    if (!(step > 0.0) || !(tol > 0.0)) {
        throw std::invalid_argument("hitting_time: step and tol must be > 0");
    }
    HittingResult result;
    Vec cur = x;
    double t_cur = 0.0;
    double g_prev = signed_fn(cur);
    // A start exactly on the surface does not count; seek the next return.
    int last_sign = g_prev > 0.0 ? 1 : (g_prev < 0.0 ? -1 : 0);

    while (t_cur < t_max) {
        const double dt = std::min(step, t_max - t_cur);
        Vec next = rk4_step(field, cur, dt);
        if (!finite(next)) throw StepError("hitting_time: nonfinite state");
        const double g_next = signed_fn(next);
        const int next_sign = g_next > 0.0 ? 1 : (g_next < 0.0 ? -1 : 0);

        const bool bracket = last_sign != 0 && next_sign != 0 && next_sign != last_sign;
        const bool exact_hit = last_sign != 0 && next_sign == 0;
        if (bracket || exact_hit) {
            double lo = 0.0, hi = dt;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double g_mid = signed_fn(rk4_step(field, cur, mid));
                if (g_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((g_mid > 0.0 ? 1 : -1) == last_sign) lo = mid;
                else hi = mid;
            }
            const double tau = 0.5 * (lo + hi);
            result.time = t_cur + tau;
            if (margin_fn && transversality_floor > 0.0) {
                const Vec hit = rk4_step(field, cur, tau);
                if (std::abs(margin_fn(hit)) < transversality_floor) result.grazing = true;
            }
            return result;
        }
        if (next_sign != 0) last_sign = next_sign;
        cur = std::move(next);
        t_cur += dt;
    }
    return result;
}

HittingResult hitting_time(const VectorField& field, const Vec& x, const Surface& surface,
                           double t_max, double step, double tol,
                           double transversality_floor) {
    auto signed_fn = [&surface](const Vec& p) { return surface.signed_raw(p); };
    std::function<double(const Vec&)> margin_fn;
    if (transversality_floor > 0.0) {
        margin_fn = [&surface, &field](const Vec& p) {
            return surface.normal_at(p).dot(field.evaluate(p));
        };
    }
    return hitting_time(field, x, signed_fn, t_max, step, tol, margin_fn, transversality_floor);
}

}  // namespace ricesim
