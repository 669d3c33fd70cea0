#include "ricesim/field.hpp"

#include <cmath>
#include <sstream>

namespace ricesim {

namespace {

int variant_dim(const VectorField::Variant& v) {
    return std::visit(
        [](const auto& f) -> int {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ConstantField>) return static_cast<int>(f.c.size());
            else if constexpr (std::is_same_v<T, AffineField>) return static_cast<int>(f.a.rows());
            else if constexpr (std::is_same_v<T, SoftIdleField>) return static_cast<int>(f.rate.size());
            else return static_cast<int>(f.load.size());
        },
        v);
}

}  // namespace

VectorField::VectorField(Variant spec, Box domain)
    : spec_(std::move(spec)), domain_(std::move(domain)), dim_(variant_dim(spec_)) {
    if (domain_.dim() != dim_) throw std::invalid_argument("VectorField: domain dimension mismatch");
    if (const auto* a = std::get_if<AffineField>(&spec_)) {
        if (a->a.rows() != a->a.cols() || a->b.size() != a->a.rows()) {
            throw std::invalid_argument("VectorField: affine shape mismatch");
        }
    }
    if (const auto* s = std::get_if<SoftIdleField>(&spec_)) {
        if (s->offset.size() != s->rate.size()) {
            throw std::invalid_argument("VectorField: soft-idle shape mismatch");
        }
        for (int i = 0; i < s->rate.size(); ++i) {
            if (!(s->rate[i] > 0.0)) throw std::invalid_argument("VectorField: soft-idle rates must be > 0");
        }
    }
}

VectorField VectorField::constant(Vec c) {
    const int d = static_cast<int>(c.size());
    return {ConstantField{std::move(c)}, Box::all(d)};
}

VectorField VectorField::affine(Mat a, Vec b) {
    const int d = static_cast<int>(a.rows());
    return {AffineField{std::move(a), std::move(b)}, Box::all(d)};
}

VectorField VectorField::affine(Mat a, Vec b, Box domain) {
    return {AffineField{std::move(a), std::move(b)}, std::move(domain)};
}

VectorField VectorField::linear_decay(int d) {
    return affine(-Mat::Identity(d, d), Vec::Zero(d));
}

VectorField VectorField::soft_idle(Vec rate, Vec offset) {
    const int d = static_cast<int>(rate.size());
    return {SoftIdleField{std::move(rate), std::move(offset)}, Box::all(d)};
}

VectorField VectorField::stress_drift(Vec load) {
    const int d = static_cast<int>(load.size());
    return {StressDriftField{std::move(load)}, Box::all(d)};
}

Vec VectorField::evaluate(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("VectorField: point dimension mismatch");
    if (!domain_.contains(x)) throw DomainError("VectorField: point outside field domain");
    Vec out(dim_);
    eval_into(x, out);
    return out;
}

void VectorField::eval_into(const Vec& x, Vec& out) const {
    switch (spec_.index()) {
        case 0:
            out = std::get<ConstantField>(spec_).c;
            break;
        case 1: {
            const auto& f = std::get<AffineField>(spec_);
            out.noalias() = f.a * x;
            out += f.b;
            break;
        }
        case 2: {
            const auto& f = std::get<SoftIdleField>(spec_);
            for (int i = 0; i < dim_; ++i) out[i] = -f.rate[i] * std::tanh(x[i] + f.offset[i]);
            break;
        }
        default:
            out = std::get<StressDriftField>(spec_).load;
            break;
    }
}

std::string VectorField::describe() const {
    std::ostringstream os;
    switch (spec_.index()) {
        case 0: os << "constant"; break;
        case 1: os << "affine"; break;
        case 2: os << "soft_idle"; break;
        default: os << "stress_drift"; break;
    }
    os << "(d=" << dim_ << ")";
    return os.str();
}

}  // namespace ricesim
