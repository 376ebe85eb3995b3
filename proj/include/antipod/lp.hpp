#pragma once

#include <optional>
#include <vector>

#include "antipod/vec.hpp"

namespace antipod {

enum class Rel { Le, Eq, Ge };
enum class Sense { Minimize, Maximize };

struct Constraint {
    Vec coeffs;
    Rel rel = Rel::Le;
    Scalar rhs;
};

// General-form exact LP:
//   optimize c.x  subject to  a_i.x (<=|=|>=) b_i,  l_j <= x_j <= u_j
// with per-variable bounds optional on either side.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t num_vars, Sense sense = Sense::Minimize);

    static LinearProgram minimize(Vec objective);
    static LinearProgram maximize(Vec objective);
    static LinearProgram feasibility(std::size_t num_vars);  // zero objective

    void add(Vec coeffs, Rel rel, Scalar rhs);
    void set_lower(std::size_t var, Scalar bound);
    void set_upper(std::size_t var, Scalar bound);

    std::size_t num_vars() const { return num_vars_; }
    Sense sense() const { return sense_; }
    const Vec& objective() const { return objective_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::optional<Scalar>& lower(std::size_t var) const { return lower_.at(var); }
    const std::optional<Scalar>& upper(std::size_t var) const { return upper_.at(var); }

private:
    std::size_t num_vars_;
    Sense sense_;
    Vec objective_;
    std::vector<Constraint> constraints_;
    std::vector<std::optional<Scalar>> lower_;
    std::vector<std::optional<Scalar>> upper_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// Optimal: primal, objective_value and one dual multiplier per constraint,
// satisfying exact complementary slackness and strong duality. Dual signs
// follow the shadow-price convention: for minimize, y_i >= 0 on >= rows and
// y_i <= 0 on <= rows; for maximize the senses flip.
//
// Infeasible: `dual` is a Farkas certificate w, one entry per constraint,
// w_i >= 0 on >= rows und w_i <= 0 on <= rows, such that the combined valid
// inequality (sum_i w_i a_i).x >= sum_i w_i b_i already fails on the bound
// box alone.
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::optional<Vec> primal;
    std::optional<Scalar> objective_value;
    std::optional<Vec> dual;
};

// Two-phase primal simplex over exact rationals, Bland's rule throughout.
// Deterministic: identical inputs produce identical outcomes.
LpOutcome solve_lp(const LinearProgram& lp);

// Exact certificate replay. For Optimal checks primal feasibility, dual
// feasibility, complementary slackness and objective equality; for Infeasible
// checks the Farkas contradiction; Unbounded is accepted as-is.
bool verify_outcome(const LinearProgram& lp, const LpOutcome& out);

}  // namespace antipod
