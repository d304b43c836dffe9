#include "ehrmat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ehrmat {

Subset subset_of(std::initializer_list<int> elements) {
    return subset_of(std::vector<int>(elements));
}

Subset subset_of(const std::vector<int>& elements) {
    Subset s = 0;
    for (int e : elements) {
        if (e < 1 || e > static_cast<int>(kMaxGroundSet)) throw std::out_of_range("element label out of range");
        s |= Subset{1} << (e - 1);
    }
    return s;
}

std::vector<int> elements_of(Subset s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

Budget Budget::from_environment() {
    Budget b;
    const char* env = std::getenv("EHRMAT_BUDGET");
    if (!env) return b;
    char* end = nullptr;
    const unsigned long long f = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || f == 0) throw ValidationError("EHRMAT_BUDGET must be a positive integer");
    const std::size_t extra = static_cast<std::size_t>(std::bit_width(f) - 1);
    b.max_ground_exhaustive += extra;
    b.max_ground_bruteforce += extra;
    b.max_candidates *= f;
    return b;
}

RankFunction RankFunction::uniform(std::size_t n, std::size_t r) {
    if (n == 0 || n > kMaxGroundSet) throw ValidationError("uniform: ground set size out of range");
    if (r > n) throw ValidationError("uniform: rank exceeds ground set size");
    RankFunction f(Kind::Uniform, n);
    f.r_ = r;
    return f;
}

RankFunction RankFunction::graphic(std::vector<std::pair<int, int>> edges) {
    if (edges.empty() || edges.size() > kMaxGroundSet) throw ValidationError("graphic: edge count out of range");
    RankFunction f(Kind::Graphic, edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1) throw ValidationError("graphic: vertex labels are 1-based");
        f.vertex_count_ = std::max({f.vertex_count_, u, v});
    }
    f.edges_ = std::move(edges);
    return f;
}

RankFunction RankFunction::from_bases(std::size_t n, std::vector<Subset> bases) {
    if (n == 0 || n > kMaxGroundSet) throw ValidationError("bases: ground set size out of range");
    if (bases.empty()) throw ValidationError("bases: at least one basis required");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const int r = cardinality(bases.front());
    for (Subset b : bases) {
        if (b & ~full_set(n)) throw ValidationError("bases: element outside the ground set");
        if (cardinality(b) != r) throw ValidationError("bases: bases of different cardinality");
    }
    RankFunction f(Kind::Bases, n);
    f.r_ = static_cast<std::size_t>(r);
    f.bases_ = std::move(bases);
    return f;
}

RankFunction RankFunction::polymatroid_table(std::size_t n, std::map<Subset, int> values) {
    if (n == 0 || n > kMaxGroundSet) throw ValidationError("table: ground set size out of range");
    values.emplace(0, 0);
    for (auto [s, v] : values) {
        if (s & ~full_set(n)) throw ValidationError("table: subset outside the ground set");
        if (v < 0) throw ValidationError("table: negative value");
    }
    if (n < 64 && values.size() != (Subset{1} << n))
        throw ValidationError("table: every nonempty subset needs a value");
    RankFunction f(Kind::Table, n);
    f.table_ = std::move(values);
    return f;
}

namespace {

int graphic_rank(const std::vector<std::pair<int, int>>& edges, int vertex_count, Subset a) {
    std::vector<int> parent(static_cast<std::size_t>(vertex_count) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int r = 0;
    for (int e : elements_of(a)) {
        auto [u, v] = edges[static_cast<std::size_t>(e - 1)];
        const int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            ++r;
        }
    }
    return r;
}

}  // namespace

int RankFunction::operator()(Subset a) const {
    if (a & ~full_set(n_)) throw std::out_of_range("rank: subset has elements outside the ground set");
    switch (kind_) {
    case Kind::Uniform:
        return std::min(cardinality(a), static_cast<int>(r_));
    case Kind::Graphic:
        return graphic_rank(edges_, vertex_count_, a);
    case Kind::Bases: {
        // Greedy: X stays independent as long as it fits inside some basis.
        Subset x = 0;
        for (int e : elements_of(a)) {
            const Subset y = x | (Subset{1} << (e - 1));
            if (std::any_of(bases_.begin(), bases_.end(), [y](Subset b) { return (y & ~b) == 0; })) x = y;
        }
        return cardinality(x);
    }
    case Kind::Table:
        return table_.at(a);
    case Kind::Dual: {
        const Subset full = full_set(n_);
        return cardinality(a) + (*left_)(full & ~a) - (*left_)(full);
    }
    case Kind::DirectSum: {
        const std::size_t n1 = left_->ground_size();
        return (*left_)(a & full_set(n1)) + (*right_)(a >> n1);
    }
    }
    return 0;
}

std::vector<int> RankFunction::tabulate(const Budget& budget) const {
    if (n_ > budget.max_ground_exhaustive)
        throw BudgetExceeded("ground set of size " + std::to_string(n_) + " exceeds the exhaustive limit " +
                             std::to_string(budget.max_ground_exhaustive));
    const Subset count = Subset{1} << n_;
    std::vector<int> values(count);
    for (Subset s = 0; s < count; ++s) values[s] = (*this)(s);
    return values;
}

RankFunction dual(const RankFunction& f) {
    if (!f.is_matroid()) throw std::invalid_argument("dual: requires a matroid rank function");
    RankFunction d(RankFunction::Kind::Dual, f.n_);
    d.left_ = std::make_shared<const RankFunction>(f);
    return d;
}

RankFunction direct_sum(const RankFunction& a, const RankFunction& b) {
    if (!a.is_matroid() || !b.is_matroid()) throw std::invalid_argument("direct_sum: requires matroid rank functions");
    if (a.n_ + b.n_ > kMaxGroundSet) throw ValidationError("direct_sum: ground set too large");
    RankFunction s(RankFunction::Kind::DirectSum, a.n_ + b.n_);
    s.left_ = std::make_shared<const RankFunction>(a);
    s.right_ = std::make_shared<const RankFunction>(b);
    return s;
}

namespace {

std::string describe(Subset s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements_of(s)) {
        os << (first ? "" : ",") << e;
        first = false;
    }
    os << '}';
    return os.str();
}

AxiomReport fail(int axiom, Subset x, Subset y, std::string message) {
    return {false, axiom, x, y, std::move(message)};
}

// Monotonicity and submodularity in their local forms: r(X) <= r(X+e) and
// r(X+e) + r(X+f) >= r(X+e+f) + r(X). Each is equivalent to the all-pairs statement.
AxiomReport check_local(const std::vector<int>& r, std::size_t n) {
    const Subset count = Subset{1} << n;
    for (Subset x = 0; x < count; ++x) {
        for (std::size_t e = 0; e < n; ++e) {
            const Subset xe = x | (Subset{1} << e);
            if (xe == x) continue;
            if (r[xe] < r[x])
                return fail(2, x, xe, "not monotone: r(" + describe(x) + ") > r(" + describe(xe) + ")");
        }
    }
    for (Subset x = 0; x < count; ++x) {
        for (std::size_t e = 0; e < n; ++e) {
            if (contains(x, e)) continue;
            const Subset xe = x | (Subset{1} << e);
            for (std::size_t f = e + 1; f < n; ++f) {
                if (contains(x, f)) continue;
                const Subset xf = x | (Subset{1} << f);
                if (r[xe] + r[xf] < r[xe | xf] + r[x])
                    return fail(3, xe, xf, "not submodular on " + describe(xe) + ", " + describe(xf));
            }
        }
    }
    return {};
}

}  // namespace

AxiomReport check_matroid_axioms(const RankFunction& f, const Budget& budget) {
    const std::vector<int> r = f.tabulate(budget);
    for (Subset x = 0; x < r.size(); ++x) {
        if (r[x] < 0 || r[x] > cardinality(x))
            return fail(1, x, x, "r(" + describe(x) + ") = " + std::to_string(r[x]) + " is outside [0, |X|]");
    }
    return check_local(r, f.ground_size());
}

AxiomReport check_polymatroid_axioms(const RankFunction& f, const Budget& budget) {
    const std::vector<int> r = f.tabulate(budget);
    if (r[0] != 0) return fail(1, 0, 0, "value on the empty set is " + std::to_string(r[0]));
    return check_local(r, f.ground_size());
}

}  // namespace ehrmat
