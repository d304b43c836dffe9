#pragma once

#include "ehrmat/exactmath.hpp"
#include "ehrmat/vertices.hpp"

#include <vector>

namespace ehrmat {

/// Coordinates S (|S| = dim L) on which the projection of the linear space L is injective.
/// Every polytope is handled in one chart, so pieces at different vertices agree on normals.
class LatticeChart {
public:
    LatticeChart() = default;
    /// Chart for the span of `directions` in Z^ambient.
    static LatticeChart for_span(const std::vector<IntVec>& directions, std::size_t ambient);
    /// Chart for the direction space of a vertex set.
    static LatticeChart for_vertices(const VertexSet& vs);

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return coords_.size(); }
    const std::vector<std::size_t>& coordinates() const { return coords_; }

    IntVec project(const IntVec& v) const;
    /// Places a functional on chart coordinates back into Z^ambient (zeros elsewhere).
    IntVec embed(const IntVec& u) const;

private:
    std::size_t ambient_ = 0;
    std::vector<std::size_t> coords_;
};

struct TangentCone {
    LatticePoint apex;
    /// Primitive extreme directions, in the order of the apex's adjacency list.
    std::vector<IntVec> rays;
};

/// apex + { sum t_j b_j : t_j >= 0, and t_j > 0 where open[j] }.
struct HalfOpenSimplicialCone {
    LatticePoint apex;
    std::vector<IntVec> rays;
    std::vector<bool> open;
    /// Outward facet normals: normals[j] vanishes on every ray but j and is negative on ray j.
    std::vector<IntVec> normals;
};

enum class Visibility {
    /// Exact LP on the segment from the query to the facet centroid.
    LinearProgram,
    /// Sign of the query's barycentric coordinate opposite the facet.
    Barycentric,
};

struct ConeOptions {
    Visibility visibility = Visibility::LinearProgram;
    AdjacencyMode adjacency = AdjacencyMode::LinearProgram;
};

TangentCone tangent_cone(const VertexSet& vs, std::size_t i);

/// True if `facet` (indices into points, spanning a boundary facet of conv(points)) is
/// visible from `query`, i.e. the segment from query to the facet centroid meets
/// conv(points) only at the centroid.
bool visible(const std::vector<IntVec>& points, const std::vector<std::size_t>& facet, const IntVec& query);

/// Placing triangulation of conv(points), inserting in the given order. Maximal simplices
/// are returned as sorted index lists.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVec>& points,
                                                            Visibility mode = Visibility::LinearProgram);

/// Triangulation of the cone by joining 0 to the boundary facets of a placing triangulation
/// of {0} u rays (0 inserted first) that avoid 0. Returns ray index sets.
std::vector<std::vector<std::size_t>> triangulate_cone(const TangentCone& cone, const LatticeChart& chart,
                                                       Visibility mode = Visibility::LinearProgram);

/// Outward normals of the simplicial cone spanned by `rays` (chart-independent up to scale).
std::vector<IntVec> facet_normals(const std::vector<IntVec>& rays, const LatticeChart& chart);

/// Moment-curve scan: first y = (1, xi, .., xi^(d-1)), xi = 1, 2, .., with every pairing nonzero.
IntVec pick_generic_y(const std::vector<IntVec>& normals);

/// A vector with every pairing nonzero and the same sign as <u, interior> wherever that is
/// nonzero: D * interior + m with m from pick_generic_y on the normals orthogonal to
/// `interior`. With `interior` inside the cone, the outer facets of the cone stay closed.
IntVec interior_generic_y(const std::vector<IntVec>& normals, const IntVec& interior);

/// Flags ray j open iff <normal_j, y> > 0. Throws std::invalid_argument if some pairing is 0.
std::vector<HalfOpenSimplicialCone> half_open_decompose(const LatticePoint& apex,
                                                        const std::vector<std::vector<IntVec>>& cones,
                                                        const LatticeChart& chart, const IntVec& y);

/// gcd of the maximal minors of the n x N matrix with the given columns; 1 iff the
/// columns form a basis of the lattice points of their span.
Integer lattice_index(const std::vector<IntVec>& columns);

struct VertexDecomposition {
    TangentCone cone;
    std::vector<std::vector<std::size_t>> simplices;
    IntVec y;
    std::vector<HalfOpenSimplicialCone> pieces;
};

struct Decomposition {
    VertexSet vertices;
    LatticeChart chart;
    std::vector<VertexDecomposition> per_vertex;
};

/// Vertices with adjacency, and the chart of their affine hull.
struct Skeleton {
    VertexSet vertices;
    LatticeChart chart;
};

Skeleton skeleton(const PolytopeSpec& spec, const ConeOptions& options = {}, const Budget& budget = {});

/// Distinct primitive edge directions; they are the rays of every tangent cone.
std::vector<IntVec> edge_directions(const Skeleton& sk);

/// Tangent cone, triangulation and half-open pieces at vertex i. `basis_det` is |det| of a
/// lattice basis in chart coordinates, 0 until the first piece fixes it; every piece must
/// match it (std::logic_error otherwise).
VertexDecomposition decompose_vertex(const Skeleton& sk, std::size_t i, Visibility mode, Integer& basis_det);

/// All vertices' decompositions.
Decomposition decompose(const PolytopeSpec& spec, const ConeOptions& options = {}, const Budget& budget = {});

}  // namespace ehrmat
