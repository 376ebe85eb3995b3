#include "antipod/norms.hpp"

namespace antipod {

namespace {

bool perfect_square(const Scalar& q, Scalar& root) {
    if (q < 0) {
        return false;
    }
    const Int num = numerator(q), den = denominator(q);
    const Int rn = sqrt(num), rd = sqrt(den);
    if (rn * rn == num && rd * rd == den) {
        root = Scalar(rn, rd);
        return true;
    }
    return false;
}

}  // namespace

NormValue NormValue::rational(Scalar v) {
    if (v < 0) {
        throw PreconditionError("NormValue: negative magnitude");
    }
    NormValue out;
    out.rational_ = true;
    out.squared_ = v * v;
    out.value_ = std::move(v);
    return out;
}

NormValue NormValue::sqrt_of(Scalar squared) {
    if (squared < 0) {
        throw PreconditionError("NormValue: negative radicand");
    }
    Scalar root;
    if (perfect_square(squared, root)) {
        return rational(std::move(root));
    }
    NormValue out;
    out.rational_ = false;
    out.squared_ = std::move(squared);
    return out;
}

const Scalar& NormValue::rational_value() const {
    if (!rational_) {
        throw Error("NormValue: irrational value has no rational form");
    }
    return value_;
}

NormValue NormValue::scaled(const Scalar& factor) const {
    if (factor < 0) {
        throw PreconditionError("NormValue::scaled: negative factor");
    }
    if (rational_) {
        return rational(value_ * factor);
    }
    return sqrt_of(squared_ * factor * factor);
}

std::string NormValue::str() const {
    if (rational_) {
        return scalar_str(value_);
    }
    return "sqrt(" + scalar_str(squared_) + ")";
}

int cmp(const NormValue& a, const NormValue& b) {
    if (a.squared() < b.squared()) {
        return -1;
    }
    return a.squared() > b.squared() ? 1 : 0;
}

int cmp_scalar(const NormValue& a, const Scalar& q) {
    if (q < 0) {
        return 1;
    }
    const Scalar qq = q * q;
    if (a.squared() < qq) {
        return -1;
    }
    return a.squared() > qq ? 1 : 0;
}

bool le_sum(const NormValue& a, const NormValue& b, const NormValue& c) {
    // a <= b + c  <=>  A - B - C <= 2 sqrt(BC), everything nonnegative.
    const Scalar t = a.squared() - b.squared() - c.squared();
    if (t <= 0) {
        return true;
    }
    return t * t <= 4 * b.squared() * c.squared();
}

Scalar ratio_squared(const NormValue& num, const NormValue& den) {
    if (den.squared() == 0) {
        throw PreconditionError("ratio_squared: zero denominator");
    }
    return num.squared() / den.squared();
}

QuadraticValue quadratic_of(const NormValue& v) {
    if (v.is_rational()) {
        return QuadraticValue{v.rational_value(), Scalar(0), Scalar(0)};
    }
    return QuadraticValue{Scalar(0), Scalar(1), v.squared()};
}

QuadraticValue quadratic_add_scalar(const QuadraticValue& v, const Scalar& s) {
    return QuadraticValue{v.a + s, v.b, v.r};
}

QuadraticValue quadratic_pow(const QuadraticValue& v, unsigned e) {
    QuadraticValue out{Scalar(1), Scalar(0), v.r};
    QuadraticValue base = v;
    while (e > 0) {
        if (e & 1u) {
            out = QuadraticValue{out.a * base.a + out.b * base.b * v.r,
                                 out.a * base.b + out.b * base.a, v.r};
        }
        base = QuadraticValue{base.a * base.a + base.b * base.b * v.r,
                              2 * base.a * base.b, v.r};
        e >>= 1u;
    }
    return out;
}

int quadratic_cmp_scalar(const QuadraticValue& v, const Scalar& s) {
    // sign of (a - s) + b*sqrt(r) with b >= 0
    const Scalar alpha = v.a - s;
    const Scalar beta_sq = v.b * v.b * v.r;
    if (alpha >= 0) {
        return (alpha == 0 && beta_sq == 0) ? 0 : 1;
    }
    const Scalar a2 = alpha * alpha;
    if (beta_sq > a2) {
        return 1;
    }
    return beta_sq == a2 ? 0 : -1;
}

std::string quadratic_str(const QuadraticValue& v) {
    if (v.b == 0 || v.r == 0) {
        return scalar_str(v.a);
    }
    return scalar_str(v.a) + " + " + scalar_str(v.b) + "*sqrt(" + scalar_str(v.r) + ")";
}

Norm Norm::l1() {
    return Norm(NormKind::L1);
}

Norm Norm::l2() {
    return Norm(NormKind::L2);
}

Norm Norm::linf() {
    return Norm(NormKind::Linf);
}

Norm Norm::relative(VertexSet body) {
    if (body.affine_dim() == 0) {
        throw PreconditionError("relative norm: degenerate unit ball (single point)");
    }
    Norm n(NormKind::Relative);
    n.generators_ = std::make_shared<const VertexSet>(difference_generators(body));
    n.body_ = std::make_shared<const VertexSet>(std::move(body));
    return n;
}

const VertexSet& Norm::body() const {
    if (!body_) {
        throw Error("Norm: not a relative norm");
    }
    return *body_;
}

const VertexSet& Norm::generators() const {
    if (!generators_) {
        throw Error("Norm: not a relative norm");
    }
    return *generators_;
}

std::string Norm::name() const {
    switch (kind_) {
        case NormKind::L1:
            return "l1";
        case NormKind::L2:
            return "l2";
        case NormKind::Linf:
            return "linf";
        case NormKind::Relative:
            return "relative";
    }
    return "?";
}

NormValue norm_eval(const Norm& n, const Vec& x) {
    switch (n.kind()) {
        case NormKind::L1: {
            Scalar s(0);
            for (const auto& c : x) {
                s += abs(c);
            }
            return NormValue::rational(std::move(s));
        }
        case NormKind::Linf: {
            Scalar s(0);
            for (const auto& c : x) {
                Scalar a = abs(c);
                if (a > s) {
                    s = std::move(a);
                }
            }
            return NormValue::rational(std::move(s));
        }
        case NormKind::L2: {
            Scalar s(0);
            for (const auto& c : x) {
                s += c * c;
            }
            return NormValue::sqrt_of(std::move(s));
        }
        case NormKind::Relative:
            break;
    }

    const VertexSet& gens = n.generators();
    if (x.size() != gens.ambient_dim()) {
        throw PreconditionError("norm_eval: dimension mismatch");
    }
    // Minkowski functional of the difference body: the least total weight of
    // a conic combination of generators reproducing x.
    const std::size_t m = gens.size();
    LinearProgram lp = LinearProgram::minimize(Vec(m, Scalar(1)));
    for (std::size_t k = 0; k < m; ++k) {
        lp.set_lower(k, Scalar(0));
    }
    for (std::size_t r = 0; r < gens.ambient_dim(); ++r) {
        Vec row(m);
        for (std::size_t k = 0; k < m; ++k) {
            row[k] = gens.point(k)[r];
        }
        lp.add(std::move(row), Rel::Eq, x[r]);
    }
    const LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::Optimal) {
        throw PreconditionError(
            "relative norm: degenerate unit ball (vector outside the difference body span)");
    }
    return NormValue::rational(*out.objective_value);
}

NormValue distance(const Norm& n, const Vec& a, const Vec& b) {
    return norm_eval(n, sub(a, b));
}

NormValue dual_eval(const Norm& n, const Vec& f) {
    switch (n.kind()) {
        case NormKind::L1:
            return norm_eval(Norm::linf(), f);
        case NormKind::Linf:
            return norm_eval(Norm::l1(), f);
        case NormKind::L2:
            return norm_eval(Norm::l2(), f);
        case NormKind::Relative:
            break;
    }
    const VertexSet& gens = n.generators();
    if (f.size() != gens.ambient_dim()) {
        throw PreconditionError("dual_eval: dimension mismatch");
    }
    Scalar best(0);
    for (const auto& g : gens.points()) {
        Scalar v = dot(f, g);
        if (v > best) {
            best = std::move(v);
        }
    }
    return NormValue::rational(std::move(best));
}

}  // namespace antipod
