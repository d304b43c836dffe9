#pragma once

#include "ehrmat/exactmath.hpp"
#include "ehrmat/matroid.hpp"

#include <vector>

namespace ehrmat {

using LatticePoint = IntVec;

/// Which polytope a rank function describes:
///   Bases        P(M)    = conv{ e_B : B basis }
///   Independence P^In(M) = conv{ e_I : I independent }
///   Polymatroid  P(psi)  = { x >= 0 : sum_{i in A} x_i <= psi(A) for all A }
enum class Family { Bases, Independence, Polymatroid };

const char* family_name(Family f);

struct PolytopeSpec {
    PolytopeSpec(Family family, RankFunction rank);

    Family family;
    RankFunction rank;
    std::size_t n;
    /// phi([n]) for matroids, max_A psi(A) = psi([n]) for polymatroids.
    int r;
};

enum class AdjacencyMode {
    /// w is adjacent to v iff w - v is an extreme ray of cone{u - v}, decided by exact LP.
    LinearProgram,
    /// Bases family only: adjacent iff the incidence vectors differ by e_i - e_j.
    BasisExchange,
};

struct VertexSet {
    Family family = Family::Bases;
    std::vector<LatticePoint> points;
    /// adjacency[i] lists neighbor indices in increasing order; empty until computed.
    std::vector<std::vector<std::size_t>> adjacency;
    /// Dimension of the affine hull, rank{v_i - v_0}.
    std::size_t dimension = 0;

    std::size_t size() const { return points.size(); }
    bool has_adjacency() const { return adjacency.size() == points.size(); }
};

/// All r-subsets B with phi(B) = r, in increasing bitmask order.
std::vector<Subset> enumerate_bases(const RankFunction& phi, const Budget& budget = {});

/// Vertices of the polytope (adjacency not filled in).
VertexSet enumerate_vertices(const PolytopeSpec& spec, const Budget& budget = {});

/// v_i = psi(F_i) - psi(F_{i-1}) for the chain F_i = {f_1..f_i}; other coordinates 0.
/// `order` holds distinct 1-based labels.
LatticePoint edmonds_generate(const RankFunction& psi, const std::vector<int>& order);

/// Neighbors of vertex i by the extreme-ray LP test.
std::vector<std::size_t> adjacent_vertices(const VertexSet& vs, std::size_t i);

/// Fills vs.adjacency. In LinearProgram mode on the bases family it also checks that
/// adjacency coincides with "differs by e_i - e_j" and throws std::logic_error otherwise.
void compute_adjacency(VertexSet& vs, AdjacencyMode mode = AdjacencyMode::LinearProgram);

/// rank{v_i - v_0}.
std::size_t affine_dimension(const std::vector<LatticePoint>& points);

}  // namespace ehrmat
