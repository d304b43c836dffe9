#include "ehrmat/cones.hpp"

#include "ehrmat/lp.hpp"

#include <algorithm>
#include <unordered_map>
#include <stdexcept>

namespace ehrmat {

LatticeChart LatticeChart::for_span(const std::vector<IntVec>& directions, std::size_t ambient) {
    SpanBasis span(ambient);
    for (const IntVec& d : directions) {
        span.add(d);
        if (span.dimension() == ambient) break;
    }
    LatticeChart chart;
    chart.ambient_ = ambient;
    chart.coords_ = span.pivots();
    std::sort(chart.coords_.begin(), chart.coords_.end());
    return chart;
}

LatticeChart LatticeChart::for_vertices(const VertexSet& vs) {
    if (vs.points.empty()) throw std::invalid_argument("LatticeChart: empty vertex set");
    std::vector<IntVec> directions;
    for (std::size_t i = 1; i < vs.size(); ++i) directions.push_back(vs.points[i] - vs.points[0]);
    return for_span(directions, vs.points[0].size());
}

IntVec LatticeChart::project(const IntVec& v) const {
    IntVec out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = v[coords_[i]];
    return out;
}

IntVec LatticeChart::embed(const IntVec& u) const {
    IntVec out(ambient_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out[coords_[i]] = u[i];
    return out;
}

TangentCone tangent_cone(const VertexSet& vs, std::size_t i) {
    if (!vs.has_adjacency()) throw std::logic_error("tangent_cone: adjacency not computed");
    TangentCone cone;
    cone.apex = vs.points.at(i);
    for (std::size_t j : vs.adjacency[i]) cone.rays.push_back(primitive(vs.points[j] - cone.apex));
    return cone;
}

bool visible(const std::vector<IntVec>& points, const std::vector<std::size_t>& facet, const IntVec& query) {
    if (facet.empty()) throw std::invalid_argument("visible: empty facet");
    const std::size_t d = query.size();
    const std::size_t m = points.size();
    std::vector<Rational> z(d);
    for (std::size_t idx : facet)
        for (std::size_t c = 0; c < d; ++c) z[c] += points.at(idx)[c];
    for (auto& zc : z) zc /= static_cast<long>(facet.size());

    // Variables: y_1..y_m, lambda, slack s. Rows: sum y_i v^i - lambda (query - z) = z,
    // sum y_i = 1, lambda + s = 1. The facet is visible iff max lambda = 0.
    lp::Problem p{RationalMatrix(d + 2, m + 2), std::vector<Rational>(d + 2), std::vector<Rational>(m + 2)};
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t i = 0; i < m; ++i) p.A(c, i) = points[i][c];
        p.A(c, m) = z[c] - query[c];
        p.b[c] = z[c];
    }
    for (std::size_t i = 0; i < m; ++i) p.A(d, i) = 1;
    p.b[d] = 1;
    p.A(d + 1, m) = 1;
    p.A(d + 1, m + 1) = 1;
    p.b[d + 1] = 1;
    p.c[m] = 1;
    const lp::Solution s = lp::solve(p);
    if (s.status != lp::Status::Optimal) throw std::logic_error("visible: facet centroid outside the hull");
    return s.objective == 0;
}

namespace {

using Facet = std::vector<std::size_t>;

Facet without(const std::vector<std::size_t>& simplex, std::size_t pos) {
    Facet f;
    f.reserve(simplex.size() - 1);
    for (std::size_t i = 0; i < simplex.size(); ++i)
        if (i != pos) f.push_back(simplex[i]);
    return f;
}

struct FacetHash {
    std::size_t operator()(const Facet& f) const {
        std::size_t h = f.size();
        for (std::size_t x : f) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct PlacingResult {
    std::vector<std::vector<std::size_t>> simplices;
    std::vector<Facet> boundary;
};

// Keeps the boundary facets of the current triangulation, each with the simplex it bounds
// and the position of the opposite vertex. Points are inserted in index order, so every
// vertex list stays sorted.
class PlacingTriangulation {
public:
    PlacingTriangulation(const std::vector<IntVec>& points, Visibility mode)
        : points_(points), mode_(mode), hull_(points.empty() ? 0 : points[0].size()) {
        wide_points_ = true;
        for (const IntVec& p : points) {
            std::vector<Wide> w(p.size());
            for (std::size_t c = 0; c < p.size() && wide_points_; ++c) {
                const auto x = to_wide(p[c]);
                wide_points_ = x.has_value();
                if (wide_points_) w[c] = *x;
            }
            if (!wide_points_) break;
            wide_.push_back(std::move(w));
        }
    }

    PlacingResult run() {
        if (points_.empty()) return {};
        simplices_.emplace_back(std::vector<std::size_t>{0});
        boundary_.push_back({{}, 0, 0});
        for (std::size_t idx = 1; idx < points_.size(); ++idx) insert(idx);
        PlacingResult out;
        for (auto& s : simplices_) out.simplices.push_back(std::move(s.vertices));
        std::sort(out.simplices.begin(), out.simplices.end());
        for (auto& b : boundary_) out.boundary.push_back(std::move(b.facet));
        std::sort(out.boundary.begin(), out.boundary.end());
        return out;
    }

private:
    struct Simplex {
        explicit Simplex(std::vector<std::size_t> v) : vertices(std::move(v)) {}

        std::vector<std::size_t> vertices;
        Integer scale;
        IntMatrix inverse;  // scale * M^-1 for the homogeneous vertex matrix M
        bool ready = false;
        bool wide = false;  // scale and inverse held in wscale and winverse instead
        Wide wscale = 0;
        std::vector<Wide> winverse;
    };

    struct BoundaryFacet {
        Facet facet;
        std::size_t simplex;
        std::size_t pos;
    };

    void insert(std::size_t idx) {
        if (hull_.add(points_[idx] - points_[0])) {
            // The new point is off the affine hull: every simplex becomes a pyramid over it.
            std::vector<BoundaryFacet> next;
            for (std::size_t si = 0; si < simplices_.size(); ++si) {
                Simplex& s = simplices_[si];
                next.push_back({s.vertices, si, s.vertices.size()});
                s.vertices.push_back(idx);
                s.ready = false;
            }
            for (auto& b : boundary_) {
                b.facet.push_back(idx);
                next.push_back(std::move(b));
            }
            boundary_ = std::move(next);
            coords_ = hull_.pivots();
            return;
        }
        if (mode_ == Visibility::LinearProgram)
            current_.assign(points_.begin(), points_.begin() + static_cast<long>(idx));
        else
            set_query(idx);
        std::vector<BoundaryFacet> kept;
        const std::size_t first_new = simplices_.size();
        for (auto& b : boundary_) {
            if (b.facet.empty() || !is_visible(b, idx)) {
                kept.push_back(std::move(b));
                continue;
            }
            std::vector<std::size_t> v = std::move(b.facet);
            v.push_back(idx);
            simplices_.emplace_back(std::move(v));
        }
        // A facet through idx is shared by two new simplices or lies on the boundary.
        std::unordered_map<Facet, std::pair<int, std::pair<std::size_t, std::size_t>>, FacetHash> fresh;
        for (std::size_t si = first_new; si < simplices_.size(); ++si) {
            const auto& v = simplices_[si].vertices;
            for (std::size_t pos = 0; pos + 1 < v.size(); ++pos) {
                auto& e = fresh[without(v, pos)];
                if (e.first++ == 0) e.second = {si, pos};
            }
        }
        for (auto& [facet, e] : fresh)
            if (e.first == 1) kept.push_back({facet, e.second.first, e.second.second});
        boundary_ = std::move(kept);
    }

    void set_query(std::size_t idx) {
        query_ = homogeneous(idx);
        wide_query_ = wide_points_;
        if (wide_query_) wquery_ = homogeneous_wide(idx);
    }

    // Homogeneous coordinates (1, projected p - p_0) in the current affine hull.
    IntVec homogeneous(std::size_t idx) const {
        IntVec h(coords_.size() + 1);
        h[0] = 1;
        for (std::size_t c = 0; c < coords_.size(); ++c) h[c + 1] = points_[idx][coords_[c]] - points_[0][coords_[c]];
        return h;
    }

    std::vector<Wide> homogeneous_wide(std::size_t idx) const {
        std::vector<Wide> h(coords_.size() + 1);
        h[0] = 1;
        for (std::size_t c = 0; c < coords_.size(); ++c) h[c + 1] = wide_[idx][coords_[c]] - wide_[0][coords_[c]];
        return h;
    }

    bool is_visible(const BoundaryFacet& b, std::size_t idx) {
        if (mode_ == Visibility::LinearProgram) return visible(current_, b.facet, points_[idx]);
        Simplex& s = simplices_[b.simplex];
        if (!s.ready) prepare(s);
        // Barycentric coordinate of the query with respect to the vertex opposite the facet.
        const std::size_t k = query_.size();
        if (s.wide && wide_query_) {
            Wide mu = 0;
            bool overflow = false;
            for (std::size_t c = 0; c < k && !overflow; ++c) {
                Wide t;
                overflow = __builtin_mul_overflow(s.winverse[b.pos * k + c], wquery_[c], &t) ||
                           __builtin_add_overflow(mu, t, &mu);
            }
            if (!overflow) return mu != 0 && (mu > 0) != (s.wscale > 0);
        }
        if (s.wide) {
            s.scale = to_integer(s.wscale);
            s.inverse = IntMatrix(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) s.inverse(i, j) = to_integer(s.winverse[i * k + j]);
            s.wide = false;
        }
        Integer mu = 0;
        for (std::size_t c = 0; c < query_.size(); ++c) mu += s.inverse(b.pos, c) * query_[c];
        return sgn(mu) * sgn(s.scale) < 0;
    }

    void prepare(Simplex& s) {
        const std::size_t k = s.vertices.size();
        s.ready = true;
        if (wide_points_) {
            std::vector<Wide> wm(k * k);
            for (std::size_t c = 0; c < k; ++c) {
                const std::vector<Wide> h = homogeneous_wide(s.vertices[c]);
                for (std::size_t r = 0; r < k; ++r) wm[r * k + c] = h[r];
            }
            if (scaled_inverse_wide(wm, k, s.wscale, s.winverse)) {
                s.wide = true;
                return;
            }
        }
        IntMatrix m(k, k);
        for (std::size_t c = 0; c < k; ++c) {
            const IntVec h = homogeneous(s.vertices[c]);
            for (std::size_t r = 0; r < k; ++r) m(r, c) = h[r];
        }
        auto [d, inv] = scaled_inverse(m);
        s.scale = std::move(d);
        s.inverse = std::move(inv);
        s.wide = false;
    }

    const std::vector<IntVec>& points_;
    Visibility mode_;
    SpanBasis hull_;
    std::vector<std::size_t> coords_;
    std::vector<IntVec> current_;
    IntVec query_;
    std::vector<Wide> wquery_;
    bool wide_query_ = false;
    std::vector<std::vector<Wide>> wide_;  // machine-integer copy of the points, if they fit
    bool wide_points_ = false;
    std::vector<Simplex> simplices_;
    std::vector<BoundaryFacet> boundary_;
};

IntMatrix chart_matrix(const std::vector<IntVec>& rays, const LatticeChart& chart) {
    const std::size_t n = chart.dimension();
    if (rays.size() != n) throw std::invalid_argument("simplicial cone needs as many rays as the chart dimension");
    IntMatrix b(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) b(i, j) = rays[j][chart.coordinates()[i]];
    return b;
}

// Outward normals together with |det| of the ray matrix in chart coordinates.
std::pair<std::vector<IntVec>, Integer> normals_and_det(const std::vector<IntVec>& rays, const LatticeChart& chart) {
    const std::size_t n = chart.dimension();
    auto [d, inv] = scaled_inverse(chart_matrix(rays, chart));
    std::vector<IntVec> normals;
    normals.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        // Row j of B^-1 is the inward normal of the facet opposite ray j.
        IntVec u(n);
        for (std::size_t c = 0; c < n; ++c) u[c] = d > 0 ? -inv(j, c) : Integer(inv(j, c));
        normals.push_back(chart.embed(primitive(u)));
    }
    return {std::move(normals), abs(d)};
}

Integer pairing(const IntVec& normal, const LatticeChart& chart, const IntVec& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < chart.dimension(); ++i) s += normal[chart.coordinates()[i]] * y[i];
    return s;
}

HalfOpenSimplicialCone make_piece(const LatticePoint& apex, std::vector<IntVec> rays, std::vector<IntVec> normals,
                                  const LatticeChart& chart, const IntVec& y) {
    HalfOpenSimplicialCone c;
    c.apex = apex;
    for (const IntVec& u : normals) {
        const Integer p = pairing(u, chart, y);
        if (p == 0) throw std::invalid_argument("half_open_decompose: y is not generic");
        c.open.push_back(p > 0);
    }
    c.rays = std::move(rays);
    c.normals = std::move(normals);
    return c;
}

}  // namespace

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVec>& points, Visibility mode) {
    return PlacingTriangulation(points, mode).run().simplices;
}

std::vector<std::vector<std::size_t>> triangulate_cone(const TangentCone& cone, const LatticeChart& chart,
                                                       Visibility mode) {
    const std::size_t n = chart.dimension();
    if (n == 0) return {{}};
    std::vector<IntVec> points{IntVec(n)};
    for (const IntVec& r : cone.rays) points.push_back(chart.project(r));
    const PlacingResult placed = PlacingTriangulation(points, mode).run();
    for (const auto& s : placed.simplices)
        if (s.size() != n + 1) throw std::logic_error("triangulate_cone: rays do not span the chart");
    // Boundary facets avoiding 0 whose rays are independent; facets with dependent rays
    // lie in a hull facet through 0, i.e. on the boundary of the cone.
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& facet : placed.boundary) {
        if (facet.front() == 0) continue;
        IntMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) m(i, j) = points[facet[j]][i];
        if (det(m) == 0) continue;
        std::vector<std::size_t> rays;
        for (std::size_t idx : facet) rays.push_back(idx - 1);
        cones.push_back(std::move(rays));
    }
    return cones;
}

std::vector<IntVec> facet_normals(const std::vector<IntVec>& rays, const LatticeChart& chart) {
    return normals_and_det(rays, chart).first;
}

IntVec pick_generic_y(const std::vector<IntVec>& normals) {
    if (normals.empty()) return {};
    const std::size_t d = normals.front().size();
    for (long xi = 1;; ++xi) {
        IntVec y(d);
        Integer power = 1;
        for (std::size_t i = 0; i < d; ++i, power *= xi) y[i] = power;
        if (std::all_of(normals.begin(), normals.end(), [&](const IntVec& u) { return dot(u, y) != 0; })) return y;
    }
}

IntVec interior_generic_y(const std::vector<IntVec>& normals, const IntVec& interior) {
    std::vector<IntVec> flat;
    for (const IntVec& u : normals)
        if (dot(u, interior) == 0) flat.push_back(u);
    if (flat.empty()) return interior;
    const IntVec m = pick_generic_y(flat);
    // Large enough that m cannot flip the sign of any nonzero pairing with `interior`.
    Integer scale = 1;
    for (const IntVec& u : normals)
        if (dot(u, interior) != 0) scale = std::max(scale, Integer(abs(dot(u, m)) + 1));
    return interior * scale + m;
}

std::vector<HalfOpenSimplicialCone> half_open_decompose(const LatticePoint& apex,
                                                        const std::vector<std::vector<IntVec>>& cones,
                                                        const LatticeChart& chart, const IntVec& y) {
    std::vector<HalfOpenSimplicialCone> out;
    for (const auto& rays : cones) out.push_back(make_piece(apex, rays, facet_normals(rays, chart), chart, y));
    return out;
}

Integer lattice_index(const std::vector<IntVec>& columns) {
    if (columns.empty()) return 1;
    const std::size_t n = columns.front().size();
    const std::size_t k = columns.size();
    if (k > n) return 0;
    Integer g = 0;
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    for (;;) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = columns[j][rows[i]];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det(m).get_mpz_t());
        if (g == 1) return g;
        std::size_t i = k;
        while (i > 0 && rows[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++rows[i - 1];
        for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
    }
    return g;
}

Skeleton skeleton(const PolytopeSpec& spec, const ConeOptions& options, const Budget& budget) {
    Skeleton sk;
    sk.vertices = enumerate_vertices(spec, budget);
    compute_adjacency(sk.vertices, options.adjacency);
    sk.chart = LatticeChart::for_vertices(sk.vertices);
    return sk;
}

std::vector<IntVec> edge_directions(const Skeleton& sk) {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < sk.vertices.size(); ++i)
        for (std::size_t j : sk.vertices.adjacency[i]) out.push_back(primitive(sk.vertices.points[j] - sk.vertices.points[i]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexDecomposition decompose_vertex(const Skeleton& sk, std::size_t i, Visibility mode, Integer& basis_det) {
    const LatticeChart& chart = sk.chart;
    VertexDecomposition vd;
    vd.cone = tangent_cone(sk.vertices, i);
    vd.simplices = triangulate_cone(vd.cone, chart, mode);
    std::vector<std::vector<IntVec>> ray_sets;
    std::vector<std::vector<IntVec>> normal_sets;
    std::vector<IntVec> projected;
    for (const auto& s : vd.simplices) {
        std::vector<IntVec> rays;
        for (std::size_t r : s) rays.push_back(vd.cone.rays[r]);
        auto [normals, d] = normals_and_det(rays, chart);
        if (basis_det == 0) {
            const Integer index = lattice_index(rays);
            if (d % index != 0) throw std::logic_error("decompose: inconsistent lattice index");
            basis_det = d / index;
        }
        if (d != basis_det) throw std::logic_error("decompose: non-unimodular cone at vertex " + vd.cone.apex.str());
        for (const IntVec& u : normals) projected.push_back(chart.project(u));
        ray_sets.push_back(std::move(rays));
        normal_sets.push_back(std::move(normals));
    }
    if (chart.dimension() > 0) {
        IntVec interior(chart.ambient());
        for (const IntVec& r : vd.cone.rays) interior += r;
        vd.y = interior_generic_y(projected, chart.project(interior));
    }
    for (std::size_t c = 0; c < ray_sets.size(); ++c)
        vd.pieces.push_back(make_piece(vd.cone.apex, std::move(ray_sets[c]), std::move(normal_sets[c]), chart, vd.y));
    return vd;
}

Decomposition decompose(const PolytopeSpec& spec, const ConeOptions& options, const Budget& budget) {
    Skeleton sk = skeleton(spec, options, budget);
    Decomposition out;
    Integer basis_det = 0;
    for (std::size_t i = 0; i < sk.vertices.size(); ++i)
        out.per_vertex.push_back(decompose_vertex(sk, i, options.visibility, basis_det));
    out.vertices = std::move(sk.vertices);
    out.chart = std::move(sk.chart);
    return out;
}

}  // namespace ehrmat
