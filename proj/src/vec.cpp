#include "antipod/vec.hpp"

namespace antipod {

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw PreconditionError("dot: dimension mismatch");
    }
    Scalar out(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out += a[i] * b[i];
    }
    return out;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw PreconditionError("add: dimension mismatch");
    }
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw PreconditionError("sub: dimension mismatch");
    }
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Vec scaled(const Vec& a, const Scalar& s) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] * s;
    }
    return out;
}

bool is_zero(const Vec& a) {
    for (const auto& x : a) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

Vec zero_vec(std::size_t n) {
    return Vec(n, Scalar(0));
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec out(n, Scalar(0));
    out.at(i) = 1;
    return out;
}

std::size_t rank(const std::vector<Vec>& rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t m = rows.size();
    const std::size_t n = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != n) {
            throw PreconditionError("rank: ragged matrix");
        }
    }

    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<Int>> a(m, std::vector<Int>(n));
    for (std::size_t i = 0; i < m; ++i) {
        Int l(1);
        for (const auto& x : rows[i]) {
            l = lcm(l, Int(denominator(x)));
        }
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Int(numerator(rows[i][j])) * (l / Int(denominator(rows[i][j])));
        }
    }

    std::size_t rk = 0;
    Int prev(1);
    for (std::size_t col = 0; col < n && rk < m; ++col) {
        std::size_t piv = rk;
        while (piv < m && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == m) {
            continue;
        }
        std::swap(a[rk], a[piv]);
        for (std::size_t i = rk + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                a[i][j] = (a[rk][col] * a[i][j] - a[i][col] * a[rk][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

}  // namespace antipod
