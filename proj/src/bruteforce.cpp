#include "ehrmat/bruteforce.hpp"

#include <functional>
#include <stdexcept>

namespace ehrmat {

namespace {

class BoxEnumerator {
public:
    BoxEnumerator(const PolytopeSpec& spec, long k, const Budget& budget)
        : n_(spec.n), budget_(budget), bases_(spec.family == Family::Bases) {
        if (k < 0) throw std::invalid_argument("count_direct: negative dilation");
        if (n_ > budget.max_ground_bruteforce)
            throw BudgetExceeded("brute force: ground set of size " + std::to_string(n_) + " exceeds the limit " +
                                 std::to_string(budget.max_ground_bruteforce));
        const std::vector<int> f = spec.rank.tabulate(budget);
        bound_.resize(f.size());
        for (std::size_t a = 0; a < f.size(); ++a) bound_[a] = k * f[a];
        target_ = bound_.back();
        x_.assign(n_, 0);
        sums_.assign(f.size(), 0);
    }

    void run(const std::function<void(const std::vector<long>&)>& visit) {
        visit_ = &visit;
        descend(0);
    }

private:
    bool assign(std::size_t i, long value) {
        x_[i] = value;
        const Subset bit = Subset{1} << i;
        bool ok = true;
        for (Subset a = 0; a < bit; ++a) {
            sums_[a | bit] = sums_[a] + value;
            if (sums_[a | bit] > bound_[a | bit]) ok = false;
        }
        return ok;
    }

    void descend(std::size_t i) {
        if (++nodes_ > budget_.max_candidates)
            throw BudgetExceeded("brute force: more than " + std::to_string(budget_.max_candidates) + " nodes");
        if (i == n_) {
            if (!bases_ || sums_.back() == target_) (*visit_)(x_);
            return;
        }
        const long box = bound_[Subset{1} << i];
        if (bases_ && i + 1 == n_) {
            const long rest = target_ - sums_[(Subset{1} << i) - 1];
            if (rest >= 0 && rest <= box && assign(i, rest)) descend(i + 1);
            return;
        }
        for (long value = 0; value <= box; ++value) {
            if (assign(i, value)) descend(i + 1);
        }
    }

    std::size_t n_;
    const Budget& budget_;
    bool bases_;
    std::vector<long> bound_;
    long target_ = 0;
    std::vector<long> x_;
    std::vector<long> sums_;
    std::uint64_t nodes_ = 0;
    const std::function<void(const std::vector<long>&)>* visit_ = nullptr;
};

}  // namespace

Integer count_direct(const PolytopeSpec& spec, long k, const Budget& budget) {
    Integer total = 0;
    BoxEnumerator(spec, k, budget).run([&](const std::vector<long>&) { ++total; });
    return total;
}

std::vector<IntVec> lattice_points(const PolytopeSpec& spec, long k, const Budget& budget) {
    std::vector<IntVec> out;
    BoxEnumerator(spec, k, budget).run([&](const std::vector<long>& x) {
        IntVec v(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
        out.push_back(std::move(v));
    });
    return out;
}

std::size_t lattice_dimension(const PolytopeSpec& spec, const Budget& budget) {
    const std::vector<IntVec> pts = lattice_points(spec, 1, budget);
    if (pts.empty()) throw std::logic_error("lattice_dimension: empty polytope");
    SpanBasis span(spec.n);
    for (std::size_t i = 1; i < pts.size(); ++i) span.add(pts[i] - pts[0]);
    return span.dimension();
}

RationalPolynomial ehrhart_by_interpolation(const PolytopeSpec& spec, const Budget& budget) {
    const std::size_t d = lattice_dimension(spec, budget);
    std::vector<std::pair<long, Integer>> points;
    points.emplace_back(0, Integer(1));
    for (std::size_t k = 1; k <= d; ++k) points.emplace_back(static_cast<long>(k), count_direct(spec, static_cast<long>(k), budget));
    return poly_interpolate(points);
}

}  // namespace ehrmat
