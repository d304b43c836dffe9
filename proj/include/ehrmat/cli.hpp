#pragma once

#include "ehrmat/cones.hpp"
#include "ehrmat/matroid.hpp"
#include "ehrmat/specialize.hpp"
#include "ehrmat/vertices.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace ehrmat {

using Json = nlohmann::ordered_json;

/// A matroid or polymatroid read from JSON:
///   {"name": .., "family": "bases" | "independence" | "polymatroid",
///    "kind": "uniform", "n": .., "r": ..
///          | "graphic", "edges": [[u, v], ..]
///          | "bases", "n": .., "bases": [[1, 2, ..], ..]
///          | "table", "n": .., "table": [{"set": [..], "value": ..}, ..],
///    "provenance": ..}   (provenance optional)
struct MatroidDocument {
    std::string name;
    Family family = Family::Bases;
    RankFunction rank = RankFunction::uniform(1, 0);
    std::string provenance;

    PolytopeSpec spec() const { return PolytopeSpec(family, rank); }
};

/// Parses and validates: the rank function must pass the matroid axiom check (bases and
/// independence families) or the polymatroid one. Throws ValidationError.
MatroidDocument parse_document(const Json& j, const Budget& budget = {});
MatroidDocument load_document(const std::string& path, const Budget& budget = {});

/// Pipeline switches shared by the commands.
struct RunOptions {
    /// Barycentric visibility, basis-exchange adjacency (bases family) and power-sum Todd
    /// products instead of the LP tests and successive products.
    bool fast = false;
    Budget budget;

    ConeOptions cone_options(Family family) const;
    ToddMethod todd_method() const;
};

/// {name, coefficients: ["p/q", ..], volumeNormalized, dim}
Json cmd_ehrhart(const MatroidDocument& doc, const RunOptions& options = {});

/// {name, hstar: [..], unimodal}
Json cmd_hstar(const MatroidDocument& doc, const RunOptions& options = {});

/// Pipeline against brute force: coefficient-exact comparison and counts for k = 0..kmax.
/// With a golden Ehrhart document, its coefficients are compared as well. "match" is false
/// on any difference and "firstDifference" names the first differing coefficient.
Json cmd_verify(const MatroidDocument& doc, long kmax, const Json* golden = nullptr, const RunOptions& options = {});

/// {name, ambient, dimension, terms: [{sign, a, v, b: [..]}, ..]}
Json cmd_genfun(const MatroidDocument& doc, const RunOptions& options = {});

/// Conjecture report for U^{r,n}, 2 <= n <= nmax, 1 <= r <= min(n - 1, rmax), from the
/// closed forms. Rows are written to `out` in (n, r) order as CSV or JSON lines; Ehrhart
/// positivity is evaluated for rank 2. Returns the number of violations.
std::size_t cmd_scan_uniform(std::size_t nmax, std::size_t rmax, bool csv, std::ostream& out);

}  // namespace ehrmat
