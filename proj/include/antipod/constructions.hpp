#pragma once

#include <cstdint>
#include <string>

#include "antipod/norms.hpp"

namespace antipod {

enum class Family { Simplex, Hypercube, CrossPolytope, L1Subspace, Talata, Random };

struct FamilySpec {
    Family family = Family::Hypercube;
    std::size_t dim = 2;
    Scalar eps;                   // Talata: 0 < eps < (dim-1)/2 - 1
    std::uint64_t seed = 0;       // Random
    std::size_t point_count = 6;  // Random
    long coordinate_bound = 4;    // Random
};

struct Generated {
    VertexSet vertices;
    Norm recommended;
    std::string family_name;
};

// Deterministic generators for the standard test families:
//   Simplex(d)       regular d-simplex {e_1..e_{d+1}} in R^{d+1}, l2
//   Hypercube(d)     {0,1}^d corners, linf
//   CrossPolytope(d) {+-e_i} in R^d, l1
//   L1Subspace(d)    {d e_i - c : i <= d} u {+-2 e_{d+1}} in the hyperplane
//                    sum_{i<=d} x_i = 0 of R^{d+1}, l1
//   Talata(d, eps)   {o, e_1..e_d, p, e_d + t p} with p = 2/(d-1) sum_{i<d} e_i
//                    and t = (d-1)/2 - eps, relative norm
//   Random(...)      seeded points of bounded height reduced to convex position
Generated generate(const FamilySpec& spec);

Family family_from_name(const std::string& name);
std::string family_name(Family f);

}  // namespace antipod
