#pragma once

#include "ehrmat/exactmath.hpp"

#include <vector>

namespace ehrmat::lp {

/// maximize c^T x  subject to  A x = b,  x >= 0, over exact rationals.
struct Problem {
    RationalMatrix A;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rational objective;
    std::vector<Rational> x;
};

/// Two-phase dense-tableau simplex with Bland's rule (terminates on degenerate input).
Solution solve(const Problem& problem);

/// True if { x >= 0 : A x = b } is nonempty.
bool feasible(const RationalMatrix& A, const std::vector<Rational>& b);

/// True if `target` is a non-negative combination of `generators`.
bool in_cone(const std::vector<IntVec>& generators, const IntVec& target);

}  // namespace ehrmat::lp
