#include "antipod/lp.hpp"

#include <algorithm>
#include <cassert>

namespace antipod {

LinearProgram::LinearProgram(std::size_t num_vars, Sense sense)
    : num_vars_(num_vars),
      sense_(sense),
      objective_(num_vars, Scalar(0)),
      lower_(num_vars),
      upper_(num_vars) {
    if (num_vars == 0) {
        throw PreconditionError("LinearProgram: at least one variable required");
    }
}

LinearProgram LinearProgram::minimize(Vec objective) {
    LinearProgram lp(objective.size(), Sense::Minimize);
    lp.objective_ = std::move(objective);
    return lp;
}

LinearProgram LinearProgram::maximize(Vec objective) {
    LinearProgram lp(objective.size(), Sense::Maximize);
    lp.objective_ = std::move(objective);
    return lp;
}

LinearProgram LinearProgram::feasibility(std::size_t num_vars) {
    return LinearProgram(num_vars, Sense::Minimize);
}

void LinearProgram::add(Vec coeffs, Rel rel, Scalar rhs) {
    if (coeffs.size() != num_vars_) {
        throw PreconditionError("LinearProgram::add: coefficient length mismatch");
    }
    constraints_.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::set_lower(std::size_t var, Scalar bound) {
    lower_.at(var) = std::move(bound);
}

void LinearProgram::set_upper(std::size_t var, Scalar bound) {
    upper_.at(var) = std::move(bound);
}

namespace {

// Internal standard form: min c.p  s.t.  T p = rhs, p >= 0, with one slack
// per inequality row and one artificial per row (identity start basis; the
// artificial columns expose B^-1, which is where duals are read from).
struct Tableau {
    std::size_t P = 0;  // expanded variables
    std::size_t S = 0;  // slacks
    std::size_t M = 0;  // rows
    std::size_t N = 0;  // total columns (P + S + M), rhs at index N

    std::vector<Vec> T;
    std::vector<std::size_t> basis;
    Vec cost;  // phase-2 costs per column

    struct RowSrc {
        long orig = -1;  // -1 for internal bound rows
        int sigma = 1;
    };
    std::vector<RowSrc> row_src;

    struct VarMap {
        int kind = 0;  // 0: x = off + p, 1: x = off - p, 2: x = p - q
        std::size_t p = 0, q = 0;
        Scalar off;
    };
    std::vector<VarMap> vmap;

    std::size_t art_col(std::size_t i) const { return P + S + i; }
    bool is_art(std::size_t j) const { return j >= P + S; }
};

Tableau build_tableau(const LinearProgram& lp) {
    Tableau tb;
    const std::size_t n = lp.num_vars();

    tb.vmap.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto& vm = tb.vmap[j];
        if (lp.lower(j)) {
            vm.kind = 0;
            vm.off = *lp.lower(j);
            vm.p = tb.P++;
        } else if (lp.upper(j)) {
            vm.kind = 1;
            vm.off = *lp.upper(j);
            vm.p = tb.P++;
        } else {
            vm.kind = 2;
            vm.p = tb.P++;
            vm.q = tb.P++;
        }
    }

    struct RawRow {
        Vec a;
        Rel rel;
        Scalar b;
        long orig;
    };
    std::vector<RawRow> raw;
    for (std::size_t i = 0; i < lp.constraints().size(); ++i) {
        const auto& c = lp.constraints()[i];
        Vec a(tb.P, Scalar(0));
        Scalar b = c.rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (c.coeffs[j] == 0) {
                continue;
            }
            const auto& vm = tb.vmap[j];
            if (vm.kind == 0) {
                a[vm.p] += c.coeffs[j];
                b -= c.coeffs[j] * vm.off;
            } else if (vm.kind == 1) {
                a[vm.p] -= c.coeffs[j];
                b -= c.coeffs[j] * vm.off;
            } else {
                a[vm.p] += c.coeffs[j];
                a[vm.q] -= c.coeffs[j];
            }
        }
        raw.push_back(RawRow{std::move(a), c.rel, std::move(b), static_cast<long>(i)});
    }
    // Doubly bounded variables get an internal row p <= u - l (resp. l <= u).
    for (std::size_t j = 0; j < n; ++j) {
        if (lp.lower(j) && lp.upper(j)) {
            Vec a(tb.P, Scalar(0));
            a[tb.vmap[j].p] = 1;
            raw.push_back(RawRow{std::move(a), Rel::Le, *lp.upper(j) - *lp.lower(j), -1});
        }
    }

    tb.M = raw.size();
    for (auto& r : raw) {
        if (r.rel != Rel::Eq) {
            ++tb.S;
        }
        (void)r;
    }
    tb.N = tb.P + tb.S + tb.M;

    tb.T.assign(tb.M, Vec(tb.N + 1, Scalar(0)));
    tb.row_src.resize(tb.M);
    std::size_t slack = tb.P;
    for (std::size_t i = 0; i < tb.M; ++i) {
        auto& r = raw[i];
        int sigma = 1;
        if (r.b < 0) {
            sigma = -1;
            for (auto& x : r.a) {
                x = -x;
            }
            r.b = -r.b;
            if (r.rel == Rel::Le) {
                r.rel = Rel::Ge;
            } else if (r.rel == Rel::Ge) {
                r.rel = Rel::Le;
            }
        }
        for (std::size_t p = 0; p < tb.P; ++p) {
            tb.T[i][p] = r.a[p];
        }
        if (r.rel == Rel::Le) {
            tb.T[i][slack++] = 1;
        } else if (r.rel == Rel::Ge) {
            tb.T[i][slack++] = -1;
        }
        tb.T[i][tb.art_col(i)] = 1;
        tb.T[i][tb.N] = r.b;
        tb.row_src[i] = Tableau::RowSrc{r.orig, sigma};
    }

    tb.basis.resize(tb.M);
    for (std::size_t i = 0; i < tb.M; ++i) {
        tb.basis[i] = tb.art_col(i);
    }

    tb.cost.assign(tb.N, Scalar(0));
    const bool flip = lp.sense() == Sense::Maximize;
    for (std::size_t j = 0; j < n; ++j) {
        Scalar cj = lp.objective()[j];
        if (flip) {
            cj = -cj;
        }
        if (cj == 0) {
            continue;
        }
        const auto& vm = tb.vmap[j];
        if (vm.kind == 0) {
            tb.cost[vm.p] += cj;
        } else if (vm.kind == 1) {
            tb.cost[vm.p] -= cj;
        } else {
            tb.cost[vm.p] += cj;
            tb.cost[vm.q] -= cj;
        }
    }
    return tb;
}

void pivot(Tableau& tb, std::vector<Vec*>& obj_rows, std::size_t r, std::size_t s) {
    Vec& row = tb.T[r];
    const Scalar piv = row[s];
    assert(piv != 0);
    if (piv != 1) {
        for (auto& x : row) {
            x /= piv;
        }
    }
    for (std::size_t i = 0; i < tb.M; ++i) {
        if (i == r || tb.T[i][s] == 0) {
            continue;
        }
        const Scalar f = tb.T[i][s];
        for (std::size_t j = 0; j <= tb.N; ++j) {
            tb.T[i][j] -= f * row[j];
        }
    }
    for (Vec* o : obj_rows) {
        if ((*o)[s] == 0) {
            continue;
        }
        const Scalar f = (*o)[s];
        for (std::size_t j = 0; j <= tb.N; ++j) {
            (*o)[j] -= f * row[j];
        }
    }
    tb.basis[r] = s;
}

enum class PhaseResult { OptimalBasis, Unbounded };

// Bland's rule: lowest-index entering column with negative reduced cost,
// lowest basic-variable index among minimum-ratio rows. Artificial columns
// never enter.
PhaseResult run_simplex(Tableau& tb, Vec& obj, std::vector<Vec*>& obj_rows) {
    for (;;) {
        std::size_t enter = tb.N;
        for (std::size_t j = 0; j < tb.P + tb.S; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == tb.N) {
            return PhaseResult::OptimalBasis;
        }
        std::size_t leave = tb.M;
        Scalar best_ratio;
        for (std::size_t i = 0; i < tb.M; ++i) {
            if (tb.T[i][enter] <= 0) {
                continue;
            }
            Scalar ratio = tb.T[i][tb.N] / tb.T[i][enter];
            if (leave == tb.M || ratio < best_ratio ||
                (ratio == best_ratio && tb.basis[i] < tb.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == tb.M) {
            return PhaseResult::Unbounded;
        }
        pivot(tb, obj_rows, leave, enter);
    }
}

Vec recover_primal(const LinearProgram& lp, const Tableau& tb) {
    Vec p(tb.P, Scalar(0));
    for (std::size_t i = 0; i < tb.M; ++i) {
        if (tb.basis[i] < tb.P) {
            p[tb.basis[i]] = tb.T[i][tb.N];
        }
    }
    Vec x(lp.num_vars());
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        const auto& vm = tb.vmap[j];
        if (vm.kind == 0) {
            x[j] = vm.off + p[vm.p];
        } else if (vm.kind == 1) {
            x[j] = vm.off - p[vm.p];
        } else {
            x[j] = p[vm.p] - p[vm.q];
        }
    }
    return x;
}

bool box_empty(const LinearProgram& lp) {
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (lp.lower(j) && lp.upper(j) && *lp.lower(j) > *lp.upper(j)) {
            return true;
        }
    }
    return false;
}

bool verify_farkas(const LinearProgram& lp, const Vec& w) {
    if (w.size() != lp.constraints().size()) {
        return false;
    }
    if (box_empty(lp)) {
        return true;  // bounds alone are contradictory
    }
    Vec g(lp.num_vars(), Scalar(0));
    Scalar rhs_combo(0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& c = lp.constraints()[i];
        if (c.rel == Rel::Le && w[i] > 0) {
            return false;
        }
        if (c.rel == Rel::Ge && w[i] < 0) {
            return false;
        }
        if (w[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < g.size(); ++j) {
            g[j] += w[i] * c.coeffs[j];
        }
        rhs_combo += w[i] * c.rhs;
    }
    // The combination proves g.x >= rhs_combo for every feasible x; it is a
    // contradiction iff even the best x in the bound box stays below.
    Scalar box_sup(0);
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] > 0) {
            if (!lp.upper(j)) {
                return false;
            }
            box_sup += g[j] * *lp.upper(j);
        } else if (g[j] < 0) {
            if (!lp.lower(j)) {
                return false;
            }
            box_sup += g[j] * *lp.lower(j);
        }
    }
    return box_sup < rhs_combo;
}

// Derives a Farkas certificate over the original rows by solving a small
// auxiliary LP: find row weights whose combined inequality fails on the bound
// box by at least 1. Feasible whenever the input system is infeasible.
Vec derive_farkas(const LinearProgram& lp) {
    const std::size_t m = lp.constraints().size();
    const std::size_t n = lp.num_vars();

    // Variables: one weight per row (nonnegative magnitude; equalities are
    // split), plus one box-supremum variable per doubly bounded x_j.
    std::vector<std::size_t> w_pos(m), w_neg(m, SIZE_MAX);
    std::size_t nv = 0;
    for (std::size_t i = 0; i < m; ++i) {
        w_pos[i] = nv++;
        if (lp.constraints()[i].rel == Rel::Eq) {
            w_neg[i] = nv++;
        }
    }
    std::vector<std::size_t> t_var(n, SIZE_MAX);
    for (std::size_t j = 0; j < n; ++j) {
        if (lp.lower(j) && lp.upper(j)) {
            t_var[j] = nv++;
        }
    }

    LinearProgram aux = LinearProgram::feasibility(nv);
    for (std::size_t i = 0; i < m; ++i) {
        aux.set_lower(w_pos[i], Scalar(0));
        if (w_neg[i] != SIZE_MAX) {
            aux.set_lower(w_neg[i], Scalar(0));
        }
    }

    // Signed weight of row i on variable index v: Ge rows contribute +w,
    // Le rows -w, Eq rows w_pos - w_neg.
    auto add_weight_coeffs = [&](Vec& row, std::size_t j, const Scalar& scale) {
        for (std::size_t i = 0; i < m; ++i) {
            const auto& c = lp.constraints()[i];
            if (c.coeffs[j] == 0) {
                continue;
            }
            const Scalar v = scale * c.coeffs[j];
            if (c.rel == Rel::Ge) {
                row[w_pos[i]] += v;
            } else if (c.rel == Rel::Le) {
                row[w_pos[i]] -= v;
            } else {
                row[w_pos[i]] += v;
                row[w_neg[i]] -= v;
            }
        }
    };

    // Gap row: sum_i w_i b_i - sum_j sup_j >= 1, where sup_j is the largest
    // value g_j x_j can take over the box.
    Vec gap(nv, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints()[i];
        if (c.rel == Rel::Ge) {
            gap[w_pos[i]] += c.rhs;
        } else if (c.rel == Rel::Le) {
            gap[w_pos[i]] -= c.rhs;
        } else {
            gap[w_pos[i]] += c.rhs;
            gap[w_neg[i]] -= c.rhs;
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        const bool has_l = lp.lower(j).has_value();
        const bool has_u = lp.upper(j).has_value();
        if (has_l && has_u) {
            // t_j >= g_j * l_j and t_j >= g_j * u_j; subtract t_j from gap.
            for (const Scalar& bnd : {*lp.lower(j), *lp.upper(j)}) {
                Vec row(nv, Scalar(0));
                row[t_var[j]] = 1;
                add_weight_coeffs(row, j, -bnd);
                aux.add(std::move(row), Rel::Ge, Scalar(0));
            }
            gap[t_var[j]] -= 1;
        } else if (has_l) {
            // sup over x_j >= l_j finite iff g_j <= 0; then sup_j = g_j l_j.
            Vec row(nv, Scalar(0));
            add_weight_coeffs(row, j, Scalar(1));
            aux.add(row, Rel::Le, Scalar(0));
            add_weight_coeffs(gap, j, -*lp.lower(j));
        } else if (has_u) {
            Vec row(nv, Scalar(0));
            add_weight_coeffs(row, j, Scalar(1));
            aux.add(row, Rel::Ge, Scalar(0));
            add_weight_coeffs(gap, j, -*lp.upper(j));
        } else {
            Vec row(nv, Scalar(0));
            add_weight_coeffs(row, j, Scalar(1));
            aux.add(row, Rel::Eq, Scalar(0));
        }
    }
    aux.add(std::move(gap), Rel::Ge, Scalar(1));

    const LpOutcome out = solve_lp(aux);
    if (out.status != LpStatus::Optimal) {
        throw Error("internal: Farkas derivation failed on an infeasible program");
    }
    Vec w(m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints()[i];
        const Scalar mag = (*out.primal)[w_pos[i]];
        if (c.rel == Rel::Ge) {
            w[i] = mag;
        } else if (c.rel == Rel::Le) {
            w[i] = -mag;
        } else {
            w[i] = mag - (*out.primal)[w_neg[i]];
        }
    }
    if (!verify_farkas(lp, w)) {
        throw Error("internal: derived Farkas certificate failed verification");
    }
    return w;
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
    LpOutcome out;
    if (box_empty(lp)) {
        out.status = LpStatus::Infeasible;
        out.dual = Vec(lp.constraints().size(), Scalar(0));
        return out;
    }

    Tableau tb = build_tableau(lp);

    // Phase 1: minimize the artificial sum from the identity basis.
    Vec w(tb.N + 1, Scalar(0));
    for (std::size_t j = 0; j < tb.P + tb.S; ++j) {
        for (std::size_t i = 0; i < tb.M; ++i) {
            w[j] -= tb.T[i][j];
        }
    }
    for (std::size_t i = 0; i < tb.M; ++i) {
        w[tb.N] -= tb.T[i][tb.N];
    }
    std::vector<Vec*> obj_rows{&w};
    const PhaseResult p1 = run_simplex(tb, w, obj_rows);
    assert(p1 == PhaseResult::OptimalBasis);  // phase-1 objective bounded below by 0
    (void)p1;
    if (w[tb.N] != 0) {
        out.status = LpStatus::Infeasible;
        out.dual = derive_farkas(lp);
        return out;
    }

    // Drive leftover artificials out of the basis (degenerate rows stay inert).
    for (std::size_t i = 0; i < tb.M; ++i) {
        if (!tb.is_art(tb.basis[i])) {
            continue;
        }
        for (std::size_t j = 0; j < tb.P + tb.S; ++j) {
            if (tb.T[i][j] != 0) {
                pivot(tb, obj_rows, i, j);
                break;
            }
        }
    }

    // Phase 2.
    Vec z(tb.N + 1, Scalar(0));
    for (std::size_t j = 0; j <= tb.N; ++j) {
        z[j] = j < tb.N ? tb.cost[j] : Scalar(0);
        for (std::size_t i = 0; i < tb.M; ++i) {
            if (tb.cost[tb.basis[i]] != 0) {
                z[j] -= tb.cost[tb.basis[i]] * tb.T[i][j];
            }
        }
    }
    std::vector<Vec*> obj_rows2{&z};
    if (run_simplex(tb, z, obj_rows2) == PhaseResult::Unbounded) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    out.status = LpStatus::Optimal;
    out.primal = recover_primal(lp, tb);
    out.objective_value = dot(lp.objective(), *out.primal);

    Vec dual(lp.constraints().size(), Scalar(0));
    for (std::size_t i = 0; i < tb.M; ++i) {
        const auto& src = tb.row_src[i];
        if (src.orig < 0) {
            continue;
        }
        Scalar y = -z[tb.art_col(i)];
        if (src.sigma < 0) {
            y = -y;
        }
        if (lp.sense() == Sense::Maximize) {
            y = -y;
        }
        dual[static_cast<std::size_t>(src.orig)] = y;
    }
    out.dual = std::move(dual);
    return out;
}

bool verify_outcome(const LinearProgram& lp, const LpOutcome& out) {
    const auto& cons = lp.constraints();
    if (out.status == LpStatus::Unbounded) {
        return true;
    }
    if (out.status == LpStatus::Infeasible) {
        return out.dual && verify_farkas(lp, *out.dual);
    }
    if (!out.primal || !out.dual || !out.objective_value) {
        return false;
    }
    const Vec& x = *out.primal;
    if (x.size() != lp.num_vars() || out.dual->size() != cons.size()) {
        return false;
    }

    for (const auto& c : cons) {
        const Scalar v = dot(c.coeffs, x);
        if (c.rel == Rel::Le && !(v <= c.rhs)) {
            return false;
        }
        if (c.rel == Rel::Ge && !(v >= c.rhs)) {
            return false;
        }
        if (c.rel == Rel::Eq && v != c.rhs) {
            return false;
        }
    }
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (lp.lower(j) && x[j] < *lp.lower(j)) {
            return false;
        }
        if (lp.upper(j) && x[j] > *lp.upper(j)) {
            return false;
        }
    }
    if (*out.objective_value != dot(lp.objective(), x)) {
        return false;
    }

    // Normalize to a minimization problem for the dual conditions.
    const bool flip = lp.sense() == Sense::Maximize;
    Vec c_min = lp.objective();
    Vec y = *out.dual;
    if (flip) {
        for (auto& v : c_min) {
            v = -v;
        }
        for (auto& v : y) {
            v = -v;
        }
    }

    Scalar dual_value(0);
    for (std::size_t i = 0; i < cons.size(); ++i) {
        if (cons[i].rel == Rel::Le && y[i] > 0) {
            return false;
        }
        if (cons[i].rel == Rel::Ge && y[i] < 0) {
            return false;
        }
        if (y[i] != 0 && dot(cons[i].coeffs, x) != cons[i].rhs) {
            return false;  // complementary slackness on rows
        }
        dual_value += y[i] * cons[i].rhs;
    }
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        Scalar r = c_min[j];
        for (std::size_t i = 0; i < cons.size(); ++i) {
            r -= y[i] * cons[i].coeffs[j];
        }
        const bool has_l = lp.lower(j).has_value();
        const bool has_u = lp.upper(j).has_value();
        if (!has_l && !has_u && r != 0) {
            return false;
        }
        if (has_l && !has_u && r < 0) {
            return false;
        }
        if (!has_l && has_u && r > 0) {
            return false;
        }
        if (r > 0) {
            if (!has_l || x[j] != *lp.lower(j)) {
                return false;  // complementary slackness at lower bound
            }
            dual_value += r * *lp.lower(j);
        } else if (r < 0) {
            if (!has_u || x[j] != *lp.upper(j)) {
                return false;
            }
            dual_value += r * *lp.upper(j);
        }
    }
    return dual_value == dot(c_min, x);
}

}  // namespace antipod
