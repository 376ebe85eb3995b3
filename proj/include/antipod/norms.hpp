#pragma once

#include <string>

#include "antipod/polytope.hpp"

namespace antipod {

// Exact nonnegative magnitude: either a rational or the square root of a
// rational (l2 lengths). All comparisons go through squares, so mixed-tag
// comparisons stay exact; sqrt_of() collapses perfect squares back to the
// rational tag.
class NormValue {
public:
    NormValue() = default;  // zero
    static NormValue rational(Scalar v);
    static NormValue sqrt_of(Scalar squared);

    bool is_rational() const { return rational_; }
    const Scalar& rational_value() const;
    const Scalar& squared() const { return squared_; }
    bool is_zero() const { return squared_ == 0; }

    NormValue scaled(const Scalar& factor) const;  // factor >= 0
    std::string str() const;

private:
    bool rational_ = true;
    Scalar value_;    // meaningful when rational_
    Scalar squared_;  // always maintained
};

int cmp(const NormValue& a, const NormValue& b);            // sign of a - b
int cmp_scalar(const NormValue& a, const Scalar& q);        // sign of a - q
bool le_sum(const NormValue& a, const NormValue& b, const NormValue& c);  // a <= b + c
Scalar ratio_squared(const NormValue& num, const NormValue& den);

// a + b*sqrt(r) with b, r >= 0; closes (lambda + 1)^d so bound checks against
// integers stay exact even for irrational lambda.
struct QuadraticValue {
    Scalar a;
    Scalar b;
    Scalar r;
};

QuadraticValue quadratic_of(const NormValue& v);
QuadraticValue quadratic_add_scalar(const QuadraticValue& v, const Scalar& s);
QuadraticValue quadratic_pow(const QuadraticValue& v, unsigned e);
int quadratic_cmp_scalar(const QuadraticValue& v, const Scalar& s);
std::string quadratic_str(const QuadraticValue& v);

enum class NormKind { L1, L2, Linf, Relative };

// Evaluable, exactly comparable norm. The relative norm of a polytope P has
// unit ball conv(P - P); for lower-dimensional P it is the norm of the
// affine hull's direction space, and evaluation outside that span errors.
class Norm {
public:
    static Norm l1();
    static Norm l2();
    static Norm linf();
    static Norm relative(VertexSet body);

    NormKind kind() const { return kind_; }
    const VertexSet& body() const;
    const VertexSet& generators() const;
    std::string name() const;

private:
    explicit Norm(NormKind kind) : kind_(kind) {}
    NormKind kind_;
    std::shared_ptr<const VertexSet> body_;
    std::shared_ptr<const VertexSet> generators_;
};

NormValue norm_eval(const Norm& n, const Vec& x);
NormValue distance(const Norm& n, const Vec& a, const Vec& b);

// sup{ <f, y> : ||y|| <= 1 }; for the relative norm the sup runs over the
// difference-body generators, where a linear functional attains its maximum.
NormValue dual_eval(const Norm& n, const Vec& f);

}  // namespace antipod
