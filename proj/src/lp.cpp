#include "ehrmat/lp.hpp"

#include <stdexcept>

namespace ehrmat::lp {

namespace {

// Tableau rows 0..m-1 are constraints, row m is the objective (reduced costs of a
// maximization: entering columns have a positive entry). Column `width-1` is the RHS.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t width) : m_(m), width_(width), cells_((m + 1) * width), basis_(m) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
    Rational& rhs(std::size_t r) { return at(r, width_ - 1); }

    std::size_t rows() const { return m_; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rational piv = at(pr, pc);
        for (std::size_t c = 0; c < width_; ++c)
            if (at(pr, c) != 0) at(pr, c) /= piv;
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r == pr || at(r, pc) == 0) continue;
            const Rational f = at(r, pc);
            for (std::size_t c = 0; c < width_; ++c)
                if (at(pr, c) != 0) at(r, c) -= f * at(pr, c);
        }
        basis_[pr] = pc;
    }

    // Runs Bland's rule over columns [0, active). Returns false if unbounded.
    bool optimize(std::size_t active) {
        for (;;) {
            std::size_t enter = active;
            for (std::size_t c = 0; c < active; ++c) {
                if (at(m_, c) > 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == active) return true;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (at(r, enter) <= 0) continue;
                Rational ratio = at(r, width_ - 1) / at(r, enter);
                if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void drop_row(std::size_t r) {
        for (std::size_t rr = r; rr < m_; ++rr) {
            for (std::size_t c = 0; c < width_; ++c) at(rr, c) = at(rr + 1, c);
            if (rr + 1 < m_) basis_[rr] = basis_[rr + 1];
        }
        --m_;
        cells_.resize((m_ + 1) * width_);
        basis_.resize(m_);
    }

private:
    std::size_t m_;
    std::size_t width_;
    std::vector<Rational> cells_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem) {
    const std::size_t m = problem.A.rows();
    const std::size_t n = problem.A.cols();
    if (problem.b.size() != m || problem.c.size() != n) throw std::invalid_argument("lp::solve: dimension mismatch");

    // Columns: n structural, m artificial, RHS.
    const std::size_t width = n + m + 1;
    Tableau t(m, width);
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = problem.b[r] < 0;
        for (std::size_t c = 0; c < n; ++c) t.at(r, c) = flip ? -problem.A(r, c) : problem.A(r, c);
        t.at(r, n + r) = 1;
        t.rhs(r) = flip ? -problem.b[r] : problem.b[r];
        t.basic(r) = n + r;
    }
    // Phase 1: maximize -sum(artificials); express in non-basic terms.
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < width; ++c)
            if (c < n || c == width - 1) t.at(m, c) += t.at(r, c);
    t.optimize(n + m);
    if (t.at(m, width - 1) != 0) return {Status::Infeasible, 0, {}};

    // Drive artificials out of the basis; rows that cannot pivot are redundant.
    for (std::size_t r = 0; r < t.rows();) {
        if (t.basic(r) < n) {
            ++r;
            continue;
        }
        std::size_t col = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (t.at(r, c) != 0) {
                col = c;
                break;
            }
        }
        if (col == n) {
            t.drop_row(r);
        } else {
            t.pivot(r, col);
            ++r;
        }
    }

    // Phase 2 objective row: c_j - c_B B^-1 A_j, restricted to structural columns.
    const std::size_t rows = t.rows();
    for (std::size_t c = 0; c < width; ++c) t.at(rows, c) = 0;
    for (std::size_t c = 0; c < n; ++c) t.at(rows, c) = problem.c[c];
    for (std::size_t r = 0; r < rows; ++r) {
        const Rational cb = problem.c[t.basic(r)];
        if (cb == 0) continue;
        for (std::size_t c = 0; c < n; ++c) t.at(rows, c) -= cb * t.at(r, c);
        t.at(rows, width - 1) -= cb * t.rhs(r);
    }
    if (!t.optimize(n)) return {Status::Unbounded, 0, {}};

    Solution s;
    s.status = Status::Optimal;
    s.x.assign(n, 0);
    for (std::size_t r = 0; r < rows; ++r) s.x[t.basic(r)] = t.rhs(r);
    for (std::size_t c = 0; c < n; ++c) s.objective += problem.c[c] * s.x[c];
    return s;
}

bool feasible(const RationalMatrix& A, const std::vector<Rational>& b) {
    Problem p{A, b, std::vector<Rational>(A.cols())};
    return solve(p).status != Status::Infeasible;
}

bool in_cone(const std::vector<IntVec>& generators, const IntVec& target) {
    const std::size_t n = target.size();
    RationalMatrix A(n, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) A(i, j) = generators[j][i];
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = target[i];
    return feasible(A, b);
}

}  // namespace ehrmat::lp
