#include "ehrmat/cli.hpp"

#include <fstream>
#include <sstream>

namespace ehrmat {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("document: missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t positive_size(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long>() < 0)
        throw ValidationError(std::string("document: \"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

Subset parse_subset(const Json& j, std::size_t n) {
    if (!j.is_array()) throw ValidationError("document: subsets are arrays of 1-based labels");
    Subset s = 0;
    int previous = 0;
    for (const Json& e : j) {
        if (!e.is_number_integer()) throw ValidationError("document: subset labels must be integers");
        const int x = e.get<int>();
        if (x < 1 || static_cast<std::size_t>(x) > n) throw ValidationError("document: label outside [n]");
        if (x <= previous) throw ValidationError("document: subsets must be sorted without repeats");
        previous = x;
        s |= Subset{1} << (x - 1);
    }
    return s;
}

Family parse_family(const std::string& name) {
    if (name == "bases") return Family::Bases;
    if (name == "independence") return Family::Independence;
    if (name == "polymatroid") return Family::Polymatroid;
    throw ValidationError("document: unknown family \"" + name + "\"");
}

RankFunction parse_rank(const Json& j, const std::string& kind) {
    if (kind == "uniform") return RankFunction::uniform(positive_size(j, "n"), positive_size(j, "r"));
    if (kind == "graphic") {
        std::vector<std::pair<int, int>> edges;
        for (const Json& e : field(j, "edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ValidationError("document: edges are pairs of vertex labels");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return RankFunction::graphic(std::move(edges));
    }
    const std::size_t n = positive_size(j, "n");
    if (n == 0 || n > kMaxGroundSet) throw ValidationError("document: n out of range");
    if (kind == "bases") {
        std::vector<Subset> bases;
        for (const Json& b : field(j, "bases")) bases.push_back(parse_subset(b, n));
        return RankFunction::from_bases(n, std::move(bases));
    }
    if (kind == "table") {
        std::map<Subset, int> values;
        for (const Json& row : field(j, "table")) {
            const Subset s = parse_subset(field(row, "set"), n);
            const Json& v = field(row, "value");
            if (!v.is_number_integer()) throw ValidationError("document: table values must be integers");
            if (!values.emplace(s, v.get<int>()).second) throw ValidationError("document: repeated table entry");
        }
        return RankFunction::polymatroid_table(n, std::move(values));
    }
    throw ValidationError("document: unknown kind \"" + kind + "\"");
}

}  // namespace

MatroidDocument parse_document(const Json& j, const Budget& budget) {
    if (!j.is_object()) throw ValidationError("document: expected a JSON object");
    MatroidDocument doc;
    doc.name = field(j, "name").get<std::string>();
    doc.family = parse_family(field(j, "family").get<std::string>());
    doc.rank = parse_rank(j, field(j, "kind").get<std::string>());
    if (j.contains("provenance")) doc.provenance = j.at("provenance").get<std::string>();

    // Uniform and graphic rank functions are matroids by construction, so the exhaustive
    // check is only required when it fits the budget.
    const bool structural = doc.rank.kind() == RankFunction::Kind::Uniform ||
                            doc.rank.kind() == RankFunction::Kind::Graphic;
    if (structural && doc.rank.ground_size() > budget.max_ground_exhaustive) return doc;
    const AxiomReport report = doc.family == Family::Polymatroid ? check_polymatroid_axioms(doc.rank, budget)
                                                                 : check_matroid_axioms(doc.rank, budget);
    if (!report.ok) throw ValidationError(doc.name + ": " + report.message);
    if (doc.family != Family::Polymatroid && !doc.rank.is_matroid())
        throw ValidationError(doc.name + ": " + family_name(doc.family) + " family needs a matroid kind");
    return doc;
}

MatroidDocument load_document(const std::string& path, const Budget& budget) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
    try {
        return parse_document(j, budget);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace ehrmat
