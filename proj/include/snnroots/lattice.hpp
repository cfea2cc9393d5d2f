#pragma once

// Exact lattice-point counting in dilates of small integer simplices, and
// the Ehrhart/h* extraction built on those counts.  Membership tests run
// in exact integer arithmetic (one adjugate solve per simplex, reused per
// point), so every count is exact; floating point appears only when the
// interpolated polynomial leaves the module.

#include <cstdint>
#include <string>
#include <vector>

#include "snnroots/hstar.hpp"

namespace snn {

struct LatticeSimplex {
    int dim = 1;                                  // 1 <= dim <= 4
    std::vector<std::vector<long long>> vertices; // dim+1 points in Z^dim

    LatticeSimplex() = default;
    LatticeSimplex(int d, std::vector<std::vector<long long>> verts);
};

// Exact number of lattice points in t * S; t = 0 gives 1.  Throws
// std::length_error when the bounding box exceeds 1e8 points.
long long count_dilate(const LatticeSimplex& S, long long t);

// Count of lattice points strictly inside S (all barycentric coordinates
// positive); equals h*_d of the simplex.
long long count_interior(const LatticeSimplex& S);

// The degree-dim interpolant through (t, count_dilate(S, t)), t = 0..dim,
// computed in exact rational arithmetic and converted to doubles at the
// boundary.
MonomialPolynomial ehrhart_of(const LatticeSimplex& S);

// monomial_to_hstar(ehrhart_of(S), dim), with every entry asserted to be
// a nonnegative integer (within 1e-6) and snapped exactly; anything else
// signals an internal counting bug and throws std::logic_error.
HStarVector hstar_of(const LatticeSimplex& S);

// JSON object {"dim": d, "vertices": [[...], ...]}.
LatticeSimplex simplex_from_json(const std::string& text);
std::string to_json(const LatticeSimplex& S);

} // namespace snn
