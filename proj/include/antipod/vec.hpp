#pragma once

#include <cstddef>
#include <vector>

#include "antipod/scalar.hpp"

namespace antipod {

using Vec = std::vector<Scalar>;

Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Scalar& s);
bool is_zero(const Vec& a);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

// Exact linear rank via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
std::size_t rank(const std::vector<Vec>& rows);

}  // namespace antipod
