#pragma once

#include "ehrmat/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace ehrmat::testing {

inline std::filesystem::path data_dir() { return EHRMAT_DATA_DIR; }

inline Json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    return Json::parse(in);
}

inline MatroidDocument corpus(const std::string& name) { return load_document((data_dir() / "matroids" / (name + ".json")).string()); }

inline Json golden(const std::string& name) { return read_json(data_dir() / "goldens" / (name + ".ehrhart.json")); }

inline RationalPolynomial polynomial_of(const Json& coefficients) {
    std::vector<Rational> c;
    for (const auto& s : coefficients) c.push_back(parse_rational(s.get<std::string>()));
    return RationalPolynomial(std::move(c));
}

/// Names of the bundled basis-list matroids, by ground-set size.
inline std::vector<std::string> corpus_names(std::size_t max_n = 100) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(data_dir() / "matroids")) {
        const Json j = read_json(e.path());
        if (j.value("family", "") != "bases" || j.value("kind", "") == "uniform") continue;
        const MatroidDocument d = parse_document(j);
        if (d.rank.ground_size() <= max_n) out.push_back(d.name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Lattice points x of Z^n with |x_i - centre_i| <= radius satisfying `inside`.
template <class F>
std::vector<IntVec> box_points(const IntVec& centre, long radius, F inside) {
    const std::size_t n = centre.size();
    std::vector<IntVec> out;
    std::vector<long> off(n, -radius);
    while (true) {
        IntVec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = centre[i] + off[i];
        if (inside(x)) out.push_back(x);
        std::size_t i = 0;
        while (i < n && off[i] == radius) off[i++] = -radius;
        if (i == n) break;
        ++off[i];
    }
    return out;
}

inline Rational random_rational(std::mt19937& rng, long span = 5, long den = 4) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> d(1, den);
    return make_rational(num(rng), d(rng));
}

// h(x) = x / (1 - e^-x) by dividing 1 by (1 - e^-x)/x = sum (-1)^n x^n / (n+1)!.
inline std::vector<Rational> todd_by_division(std::size_t m) {
    std::vector<Rational> d(m + 1), h(m + 1);
    for (std::size_t n = 0; n <= m; ++n) d[n] = Rational((n % 2 ? -1 : 1)) / Rational(factorial(n + 1));
    for (std::size_t n = 0; n <= m; ++n) {
        Rational acc = n == 0 ? 1 : 0;
        for (std::size_t k = 1; k <= n; ++k) acc -= d[k] * h[n - k];
        h[n] = acc / d[0];
    }
    return h;
}

// x^m coefficient of prod_j h(xi_j x), multiplying full polynomials before truncating.
inline Rational todd_oracle(const std::vector<Rational>& xi, std::size_t m) {
    const auto h = todd_by_division(m);
    std::vector<Rational> prod{1};
    for (const Rational& x : xi) {
        std::vector<Rational> f(m + 1);
        Rational p = 1;
        for (std::size_t n = 0; n <= m; ++n, p *= x) f[n] = h[n] * p;
        std::vector<Rational> next(prod.size() + m, Rational(0));
        for (std::size_t a = 0; a < prod.size(); ++a)
            for (std::size_t b = 0; b <= m; ++b) next[a + b] += prod[a] * f[b];
        prod = std::move(next);
    }
    return m < prod.size() ? prod[m] : Rational(0);
}

/// Checks that the half-open pieces at each vertex partition its tangent cone on the lattice
/// points of a box around the apex. The cone is rebuilt from the constraints tight at the
/// vertex. Returns an empty string on success, otherwise a description of the first failure.
inline std::string partition_violation(const PolytopeSpec& spec, const Decomposition& d, long radius) {
    const std::size_t n = spec.n;
    const auto f = spec.rank.tabulate();
    const bool sum_fixed = spec.family == Family::Bases;
    for (const auto& vd : d.per_vertex) {
        std::vector<long> v;
        for (const Integer& x : vd.cone.apex) v.push_back(x.get_si());
        std::vector<Subset> tight;
        for (Subset a = 1; a <= full_set(n); ++a) {
            long s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (contains(a, i)) s += v[i];
            if (s == f[a]) tight.push_back(a);
        }
        auto in_cone = [&](const std::vector<long>& off) {
            for (std::size_t i = 0; i < n; ++i)
                if (v[i] == 0 && off[i] < 0) return false;
            for (Subset a : tight) {
                long s = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (contains(a, i)) s += off[i];
                if (s > 0) return false;
            }
            return true;
        };
        struct Piece {
            std::vector<std::vector<long>> normals;
            std::vector<long> scale;
            std::vector<bool> open;
        };
        std::vector<Piece> pieces;
        for (const auto& p : vd.pieces) {
            Piece q;
            for (std::size_t j = 0; j < p.rays.size(); ++j) {
                std::vector<long> nrm;
                for (const Integer& x : p.normals[j]) nrm.push_back(x.get_si());
                q.normals.push_back(std::move(nrm));
                q.scale.push_back(dot(p.normals[j], p.rays[j]).get_si());
            }
            q.open = p.open;
            pieces.push_back(std::move(q));
        }
        // Enumerate the box; with a fixed coordinate sum the last offset is determined.
        const std::size_t free = sum_fixed ? n - 1 : n;
        std::vector<long> off(n, -radius);
        while (true) {
            bool valid = true;
            if (sum_fixed) {
                long s = 0;
                for (std::size_t i = 0; i < free; ++i) s += off[i];
                off[n - 1] = -s;
                valid = off[n - 1] >= -radius && off[n - 1] <= radius;
            }
            if (valid) {
                std::size_t hits = 0;
                for (const auto& q : pieces) {
                    bool in = true;
                    for (std::size_t j = 0; j < q.normals.size() && in; ++j) {
                        long s = 0;
                        for (std::size_t i = 0; i < n; ++i) s += q.normals[j][i] * off[i];
                        if (s % q.scale[j] != 0) in = false;
                        const long t = s / q.scale[j];
                        if (t < 0 || (q.open[j] && t == 0)) in = false;
                    }
                    hits += in;
                }
                if (hits != (in_cone(off) ? 1U : 0U)) {
                    std::string where;
                    for (long x : off) where += std::to_string(x) + " ";
                    return "apex " + vd.cone.apex.str() + ", offset " + where + ": " + std::to_string(hits) + " pieces";
                }
            }
            std::size_t i = 0;
            while (i < free && off[i] == radius) off[i++] = -radius;
            if (i == free) break;
            ++off[i];
        }
    }
    return {};
}

}  // namespace ehrmat::testing
