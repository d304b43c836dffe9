#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ehrmat {

/// Subset of the ground set [n] as a bitmask; bit i stands for element i+1.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxGroundSet = 63;

inline int cardinality(Subset s) { return __builtin_popcountll(s); }
inline bool contains(Subset s, std::size_t element) { return (s >> element) & 1U; }
inline Subset full_set(std::size_t n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

/// Builds a subset from 1-based element labels.
Subset subset_of(std::initializer_list<int> elements);
Subset subset_of(const std::vector<int>& elements);
/// Sorted 1-based labels of a subset.
std::vector<int> elements_of(Subset s);

/// Malformed input: bad rank table, inconsistent bases, axiom violation on load.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration guards. `EHRMAT_BUDGET=f` (a positive integer) multiplies the candidate
/// limit by f and raises the ground-set limits by floor(log2 f).
struct Budget {
    std::size_t max_ground_exhaustive = 20;  // axiom checks and vertex enumeration
    std::size_t max_ground_bruteforce = 12;  // direct lattice-point counting
    std::uint64_t max_candidates = 50'000'000;

    static Budget from_environment();
};

/// Rank-function oracle on subsets of [n].
///
/// Matroid kinds: uniform, graphic, explicit bases, and the derived dual/direct sum.
/// The table kind is an integral polymatroid rank function given by lookup.
class RankFunction {
public:
    enum class Kind { Uniform, Graphic, Bases, Table, Dual, DirectSum };

    static RankFunction uniform(std::size_t n, std::size_t r);
    /// Edges are pairs of 1-based vertex labels; element i is edge i.
    static RankFunction graphic(std::vector<std::pair<int, int>> edges);
    /// Bases as subsets of [n]; all must have the same cardinality.
    static RankFunction from_bases(std::size_t n, std::vector<Subset> bases);
    /// Sparse table; the empty set maps to 0 implicitly, every other subset must be present.
    static RankFunction polymatroid_table(std::size_t n, std::map<Subset, int> values);

    Kind kind() const { return kind_; }
    bool is_matroid() const { return kind_ != Kind::Table; }
    std::size_t ground_size() const { return n_; }

    /// Rank of A. Throws std::out_of_range if A has elements outside [n].
    int operator()(Subset a) const;
    int rank(Subset a) const { return (*this)(a); }
    int total_rank() const { return (*this)(full_set(n_)); }

    /// Kind-specific data, for serialization.
    std::size_t uniform_rank() const { return r_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Subset>& bases() const { return bases_; }
    const std::map<Subset, int>& table() const { return table_; }

    /// All 2^n values, index = subset bitmask. Requires n <= budget.
    std::vector<int> tabulate(const Budget& budget = {}) const;

    friend RankFunction dual(const RankFunction& f);
    friend RankFunction direct_sum(const RankFunction& a, const RankFunction& b);

private:
    RankFunction(Kind kind, std::size_t n) : kind_(kind), n_(n) {}

    Kind kind_;
    std::size_t n_;
    std::size_t r_ = 0;
    std::vector<std::pair<int, int>> edges_;
    int vertex_count_ = 0;
    std::vector<Subset> bases_;
    std::map<Subset, int> table_;
    std::shared_ptr<const RankFunction> left_;
    std::shared_ptr<const RankFunction> right_;
};

/// rank*(A) = |A| + rank([n] \ A) - rank([n]). Throws std::invalid_argument for the table kind.
RankFunction dual(const RankFunction& f);

/// Ground sets concatenated: elements of `b` are shifted by |E(a)|.
RankFunction direct_sum(const RankFunction& a, const RankFunction& b);

/// Outcome of an exhaustive axiom check. `axiom` numbers follow the usual listing:
/// matroid (1) 0 <= r(X) <= |X|, (2) monotone, (3) submodular;
/// polymatroid (1) r(empty) = 0, (2) monotone, (3) submodular.
struct AxiomReport {
    bool ok = true;
    int axiom = 0;
    Subset x = 0;
    Subset y = 0;
    std::string message;
};

AxiomReport check_matroid_axioms(const RankFunction& f, const Budget& budget = {});
AxiomReport check_polymatroid_axioms(const RankFunction& f, const Budget& budget = {});

}  // namespace ehrmat
