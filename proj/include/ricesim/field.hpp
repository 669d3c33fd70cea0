#pragma once

#include "ricesim/common.hpp"

#include <string>
#include <variant>

namespace ricesim {

// Built-in drift families. All are C1 on their domain by construction.

struct ConstantField {
    Vec c;
};

// mu(x) = A x + b. Covers linear decay mu(x) = -x.
struct AffineField {
    Mat a;
    Vec b;
};

// mu_i(x) = -rate_i * tanh(x_i + offset_i). Drains near zero, pushes up when
// the component is deeply negative; a smooth stand-in for idle/busy service.
struct SoftIdleField {
    Vec rate;
    Vec offset;
};

// Constant tectonic loading drift.
struct StressDriftField {
    Vec load;
};

class VectorField {
public:
    using Variant = std::variant<ConstantField, AffineField, SoftIdleField, StressDriftField>;

    VectorField(Variant spec, Box domain);

    static VectorField constant(Vec c);
    static VectorField affine(Mat a, Vec b);
    static VectorField affine(Mat a, Vec b, Box domain);
    static VectorField linear_decay(int d);  // affine(-I, 0)
    static VectorField soft_idle(Vec rate, Vec offset);
    static VectorField stress_drift(Vec load);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] const Box& domain() const { return domain_; }
    [[nodiscard]] const Variant& spec() const { return spec_; }

    // mu(x); DomainError outside the closed domain box.
    [[nodiscard]] Vec evaluate(const Vec& x) const;
    Vec operator()(const Vec& x) const { return evaluate(x); }

    // No domain check; hot paths guard separately.
    void eval_into(const Vec& x, Vec& out) const;

    [[nodiscard]] std::string describe() const;

private:
    Variant spec_;
    Box domain_;
    int dim_;
};

}  // namespace ricesim
