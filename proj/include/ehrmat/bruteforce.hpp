#pragma once

#include "ehrmat/exactmath.hpp"
#include "ehrmat/vertices.hpp"

#include <vector>

namespace ehrmat {

/// #(kP cap Z^n) by enumerating the box 0 <= x_i <= k f({i}) and testing every subset
/// inequality (plus sum x = k f([n]) for the bases family).
Integer count_direct(const PolytopeSpec& spec, long k, const Budget& budget = {});

/// The lattice points themselves, in lexicographic order.
std::vector<IntVec> lattice_points(const PolytopeSpec& spec, long k, const Budget& budget = {});

/// Affine dimension of P, from its lattice points.
std::size_t lattice_dimension(const PolytopeSpec& spec, const Budget& budget = {});

/// The polynomial of degree <= dim P through (k, count_direct(k)) for k = 0..dim P.
RationalPolynomial ehrhart_by_interpolation(const PolytopeSpec& spec, const Budget& budget = {});

}  // namespace ehrmat
