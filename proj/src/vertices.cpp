#include "ehrmat/vertices.hpp"

#include "ehrmat/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ehrmat {

const char* family_name(Family f) {
    switch (f) {
    case Family::Bases: return "bases";
    case Family::Independence: return "independence";
    case Family::Polymatroid: return "polymatroid";
    }
    return "?";
}

PolytopeSpec::PolytopeSpec(Family family, RankFunction rank)
    : family(family), rank(std::move(rank)), n(this->rank.ground_size()), r(this->rank.total_rank()) {
    if (family != Family::Polymatroid && !this->rank.is_matroid())
        throw ValidationError(std::string(family_name(family)) + " family needs a matroid rank function");
}

namespace {

IntVec incidence(Subset s, std::size_t n) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (contains(s, i)) v[i] = 1;
    return v;
}

// Visits every k-subset of [n] in increasing bitmask order (Gosper's hack).
template <typename F>
void for_each_k_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    if (k == 0) {
        f(Subset{0});
        return;
    }
    const Subset limit = Subset{1} << n;
    for (Subset s = (Subset{1} << k) - 1; s < limit;) {
        f(s);
        const Subset c = s & (~s + 1);
        const Subset r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

void check_candidates(std::uint64_t count, const Budget& budget, const char* what) {
    if (count > budget.max_candidates)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(count) + " candidates exceed the budget of " +
                             std::to_string(budget.max_candidates));
}

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
    const Integer b = binomial(static_cast<long>(n), static_cast<long>(k));
    return b.fits_ulong_p() ? b.get_ui() : ~std::uint64_t{0};
}

// Depth-first enumeration of integer points x >= 0 with sum_{A} x <= psi(A). Each subset
// inequality is checked once its largest element is assigned, using running subset sums.
class PolymatroidVertexSearch {
public:
    PolymatroidVertexSearch(const std::vector<int>& psi, std::size_t n, const Budget& budget)
        : psi_(psi), n_(n), budget_(budget), x_(n, 0), sums_(psi.size(), 0) {}

    std::vector<LatticePoint> run() {
        descend(0);
        return std::move(found_);
    }

private:
    void descend(std::size_t i) {
        if (i == n_) {
            if (is_vertex()) {
                IntVec v(n_);
                for (std::size_t j = 0; j < n_; ++j) v[j] = x_[j];
                found_.push_back(std::move(v));
            }
            return;
        }
        const Subset bit = Subset{1} << i;
        for (int value = 0;; ++value) {
            check_candidates(++visited_, budget_, "polymatroid vertex enumeration");
            x_[i] = value;
            bool ok = true;
            for (Subset a = 0; a < bit; ++a) {
                sums_[a | bit] = sums_[a] + value;
                if (sums_[a | bit] > psi_[a | bit]) ok = false;
            }
            if (!ok) break;  // every constraint only gets tighter as x_i grows
            descend(i + 1);
        }
        x_[i] = 0;
    }

    bool is_vertex() const {
        SpanBasis span(n_);
        for (std::size_t j = 0; j < n_; ++j)
            if (x_[j] == 0 && span.add(IntVec::unit(n_, j)) && span.dimension() == n_) return true;
        for (Subset a = 1; a < psi_.size(); ++a) {
            if (sums_[a] != psi_[a]) continue;
            if (span.add(incidence(a, n_)) && span.dimension() == n_) return true;
        }
        return span.dimension() == n_;
    }

    const std::vector<int>& psi_;
    std::size_t n_;
    const Budget& budget_;
    std::vector<int> x_;
    std::vector<int> sums_;
    std::uint64_t visited_ = 0;
    std::vector<LatticePoint> found_;
};

bool is_exchange(const IntVec& d) {
    int plus = 0, minus = 0;
    for (const Integer& c : d) {
        if (c == 1) ++plus;
        else if (c == -1) ++minus;
        else if (c != 0) return false;
    }
    return plus == 1 && minus == 1;
}

// Groups the other vertices by primitive direction from vertex i. For each direction only
// the nearest vertex can be a neighbor.
struct DirectionGroups {
    std::vector<IntVec> directions;
    std::vector<std::size_t> nearest;
};

DirectionGroups group_directions(const VertexSet& vs, std::size_t i) {
    std::map<IntVec, std::pair<Integer, std::size_t>> best;
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (j == i) continue;
        const IntVec d = vs.points[j] - vs.points[i];
        const IntVec p = primitive(d);
        Integer scale;
        for (std::size_t c = 0; c < d.size(); ++c) {
            if (p[c] != 0) {
                scale = d[c] / p[c];
                break;
            }
        }
        auto it = best.find(p);
        if (it == best.end() || scale < it->second.first) best[p] = {scale, j};
    }
    DirectionGroups g;
    for (auto& [dir, entry] : best) {
        g.directions.push_back(dir);
        g.nearest.push_back(entry.second);
    }
    return g;
}

bool extreme_in(const std::vector<IntVec>& directions, std::size_t k) {
    std::vector<IntVec> others;
    others.reserve(directions.size() - 1);
    for (std::size_t j = 0; j < directions.size(); ++j)
        if (j != k) others.push_back(directions[j]);
    return !lp::in_cone(others, directions[k]);
}

}  // namespace

std::vector<Subset> enumerate_bases(const RankFunction& phi, const Budget& budget) {
    const std::size_t n = phi.ground_size();
    const int r = phi.total_rank();
    if (r < 0 || static_cast<std::size_t>(r) > n) throw ValidationError("rank exceeds ground set size");
    check_candidates(binomial_u64(n, static_cast<std::size_t>(r)), budget, "basis enumeration");
    if (phi.kind() == RankFunction::Kind::Bases) return phi.bases();
    std::vector<Subset> bases;
    for_each_k_subset(n, static_cast<std::size_t>(r), [&](Subset s) {
        if (phi(s) == r) bases.push_back(s);
    });
    return bases;
}

VertexSet enumerate_vertices(const PolytopeSpec& spec, const Budget& budget) {
    VertexSet vs;
    vs.family = spec.family;
    const std::size_t n = spec.n;
    switch (spec.family) {
    case Family::Bases:
        for (Subset b : enumerate_bases(spec.rank, budget)) vs.points.push_back(incidence(b, n));
        break;
    case Family::Independence: {
        std::uint64_t total = 0;
        for (int k = 0; k <= spec.r; ++k) total += binomial_u64(n, static_cast<std::size_t>(k));
        check_candidates(total, budget, "independent-set enumeration");
        for (int k = 0; k <= spec.r; ++k) {
            for_each_k_subset(n, static_cast<std::size_t>(k), [&](Subset s) {
                if (spec.rank(s) == k) vs.points.push_back(incidence(s, n));
            });
        }
        break;
    }
    case Family::Polymatroid: {
        const std::vector<int> psi = spec.rank.tabulate(budget);
        vs.points = PolymatroidVertexSearch(psi, n, budget).run();
        break;
    }
    }
    vs.dimension = affine_dimension(vs.points);
    return vs;
}

LatticePoint edmonds_generate(const RankFunction& psi, const std::vector<int>& order) {
    const std::size_t n = psi.ground_size();
    IntVec v(n);
    Subset chain = 0;
    int previous = psi(0);
    for (int e : order) {
        if (e < 1 || static_cast<std::size_t>(e) > n) throw std::out_of_range("edmonds_generate: label out of range");
        const Subset bit = Subset{1} << (e - 1);
        if (chain & bit) throw std::invalid_argument("edmonds_generate: repeated element");
        chain |= bit;
        const int value = psi(chain);
        v[static_cast<std::size_t>(e - 1)] = value - previous;
        previous = value;
    }
    return v;
}

std::vector<std::size_t> adjacent_vertices(const VertexSet& vs, std::size_t i) {
    if (i >= vs.size()) throw std::out_of_range("adjacent_vertices: index out of range");
    const DirectionGroups g = group_directions(vs, i);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < g.directions.size(); ++k)
        if (extreme_in(g.directions, k)) out.push_back(g.nearest[k]);
    std::sort(out.begin(), out.end());
    return out;
}

void compute_adjacency(VertexSet& vs, AdjacencyMode mode) {
    const std::size_t m = vs.size();
    vs.adjacency.assign(m, {});
    if (mode == AdjacencyMode::BasisExchange) {
        if (vs.family != Family::Bases) throw std::invalid_argument("basis-exchange adjacency needs the bases family");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (is_exchange(vs.points[j] - vs.points[i])) {
                    vs.adjacency[i].push_back(j);
                    vs.adjacency[j].push_back(i);
                }
        for (auto& list : vs.adjacency) std::sort(list.begin(), list.end());
        return;
    }
    // Each edge {i, j} is decided once, from the endpoint with the smaller index.
    for (std::size_t i = 0; i < m; ++i) {
        const DirectionGroups g = group_directions(vs, i);
        for (std::size_t k = 0; k < g.directions.size(); ++k) {
            const std::size_t j = g.nearest[k];
            if (j < i || !extreme_in(g.directions, k)) continue;
            vs.adjacency[i].push_back(j);
            vs.adjacency[j].push_back(i);
        }
    }
    for (auto& list : vs.adjacency) std::sort(list.begin(), list.end());
    if (vs.family == Family::Bases) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const bool edge = std::binary_search(vs.adjacency[i].begin(), vs.adjacency[i].end(), j);
                if (edge != is_exchange(vs.points[j] - vs.points[i]))
                    throw std::logic_error("bases polytope edge " + vs.points[i].str() + " -- " + vs.points[j].str() +
                                           " contradicts the basis-exchange characterization");
            }
    }
}

std::size_t affine_dimension(const std::vector<LatticePoint>& points) {
    if (points.empty()) return 0;
    SpanBasis span(points.front().size());
    for (std::size_t i = 1; i < points.size(); ++i) span.add(points[i] - points[0]);
    return span.dimension();
}

}  // namespace ehrmat
