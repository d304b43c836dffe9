#include "ehrmat/bruteforce.hpp"
#include "ehrmat/cli.hpp"
#include "ehrmat/genfun.hpp"
#include "ehrmat/hstar.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace ehrmat {

ConeOptions RunOptions::cone_options(Family family) const {
    ConeOptions o;
    if (fast) {
        o.visibility = Visibility::Barycentric;
        if (family == Family::Bases) o.adjacency = AdjacencyMode::BasisExchange;
    }
    return o;
}

ToddMethod RunOptions::todd_method() const { return fast ? ToddMethod::PowerSums : ToddMethod::SuccessiveProducts; }

namespace {

Json rational_array(const RationalPolynomial& p) {
    Json a = Json::array();
    for (const auto& s : p.coefficient_strings()) a.push_back(s);
    return a;
}

Json integer_array(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const Integer& x : v) {
        if (x.fits_slong_p()) a.push_back(x.get_si());
        else a.push_back(x.get_str());
    }
    return a;
}

Json vector_json(const IntVec& v) {
    Json a = Json::array();
    for (const Integer& x : v) a.push_back(x.get_si());
    return a;
}

struct EhrhartRun {
    RationalPolynomial polynomial;
    std::size_t dimension;
};

EhrhartRun run_ehrhart(const MatroidDocument& doc, const RunOptions& options) {
    const PolytopeSpec spec = doc.spec();
    const StreamedEhrhart s =
        ehrhart_polynomial_streamed(spec, options.cone_options(spec.family), options.todd_method(), options.budget);
    return {s.ehrhart, s.dimension};
}

}  // namespace

Json cmd_ehrhart(const MatroidDocument& doc, const RunOptions& options) {
    const EhrhartRun run = run_ehrhart(doc, options);
    Json out;
    out["name"] = doc.name;
    out["coefficients"] = rational_array(run.polynomial);
    out["volumeNormalized"] = to_string(run.polynomial.coefficient(run.dimension) * Rational(factorial(run.dimension)));
    out["dim"] = run.dimension;
    return out;
}

Json cmd_hstar(const MatroidDocument& doc, const RunOptions& options) {
    const EhrhartRun run = run_ehrhart(doc, options);
    const std::vector<Integer> h = ehrhart_to_hstar(run.polynomial, run.dimension);
    Json out;
    out["name"] = doc.name;
    out["hstar"] = integer_array(h);
    out["unimodal"] = is_unimodal(h);
    return out;
}

Json cmd_verify(const MatroidDocument& doc, long kmax, const Json* golden, const RunOptions& options) {
    const PolytopeSpec spec = doc.spec();
    if (spec.n > options.budget.max_ground_bruteforce)
        throw BudgetExceeded("verify: n = " + std::to_string(spec.n) + " exceeds the brute-force limit of " +
                             std::to_string(options.budget.max_ground_bruteforce));
    if (kmax < 0) throw ValidationError("verify: kmax must be non-negative");
    const EhrhartRun run = run_ehrhart(doc, options);
    const RationalPolynomial brute = ehrhart_by_interpolation(spec, options.budget);

    Json out;
    out["name"] = doc.name;
    out["pipeline"] = rational_array(run.polynomial);
    out["bruteforce"] = rational_array(brute);
    bool match = run.polynomial == brute;
    Json first = nullptr;
    const std::size_t len = std::max(run.polynomial.coefficients().size(), brute.coefficients().size());
    for (std::size_t i = 0; i < len && first.is_null(); ++i) {
        if (run.polynomial.coefficient(i) != brute.coefficient(i))
            first = Json{{"against", "bruteforce"},
                         {"index", i},
                         {"pipeline", to_string(run.polynomial.coefficient(i))},
                         {"expected", to_string(brute.coefficient(i))}};
    }
    if (golden) {
        const Json& coeffs = golden->at("coefficients");
        out["golden"] = coeffs;
        const std::size_t glen = std::max(coeffs.size(), run.polynomial.coefficients().size());
        for (std::size_t i = 0; i < glen; ++i) {
            const Rational expected = i < coeffs.size() ? parse_rational(coeffs[i].get<std::string>()) : Rational(0);
            if (run.polynomial.coefficient(i) == expected) continue;
            match = false;
            if (first.is_null())
                first = Json{{"against", "golden"},
                             {"index", i},
                             {"pipeline", to_string(run.polynomial.coefficient(i))},
                             {"expected", to_string(expected)}};
            break;
        }
    }
    Json counts = Json::array();
    for (long k = 0; k <= kmax; ++k) {
        const Integer direct = count_direct(spec, k, options.budget);
        const Rational value = run.polynomial(Rational(k));
        const bool same = value == Rational(direct);
        match = match && same;
        counts.push_back(Json{{"k", k}, {"pipeline", to_string(value)}, {"bruteforce", direct.get_str()}, {"match", same}});
    }
    out["counts"] = std::move(counts);
    out["firstDifference"] = std::move(first);
    out["match"] = match;
    return out;
}

Json cmd_genfun(const MatroidDocument& doc, const RunOptions& options) {
    const PolytopeSpec spec = doc.spec();
    const GenFun g = build_genfun(spec, options.cone_options(spec.family), options.budget);
    Json terms = Json::array();
    for (const auto& t : g.terms) {
        Json b = Json::array();
        for (const IntVec& d : t.denominators) b.push_back(vector_json(d));
        terms.push_back(Json{{"sign", t.sign}, {"a", vector_json(t.numerator)}, {"v", vector_json(t.apex)}, {"b", b}});
    }
    Json out;
    out["name"] = doc.name;
    out["ambient"] = g.ambient;
    out["dimension"] = g.dimension;
    out["terms"] = std::move(terms);
    return out;
}

namespace {

struct ScanRow {
    std::size_t n;
    std::size_t r;
    ConjectureReport report;
    bool ehrhart_checked;
};

std::vector<ScanRow> scan_n(std::size_t n, std::size_t rmax, const KatzmanTable& table) {
    const auto all = uniform_hstar_all_ranks(n, table);
    std::vector<ScanRow> rows;
    for (std::size_t r = 1; r <= std::min(n - 1, rmax); ++r) {
        ScanRow row{n, r, {}, r == 2};
        const auto& h = all[r - 1];
        // Positivity is only evaluated in rank 2, where the closed form is cheap.
        const RationalPolynomial e = row.ehrhart_checked ? uniform_ehrhart(n, r) : RationalPolynomial::constant(1);
        row.report = conjecture_report(e, h);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::size_t cmd_scan_uniform(std::size_t nmax, std::size_t rmax, bool csv, std::ostream& out) {
    if (nmax > 100) throw BudgetExceeded("scan-uniform: nmax is limited to 100");
    if (nmax < 2) return 0;
    const KatzmanTable table(nmax);
    if (csv) out << "n,r,hstar_unimodal,hstar_witness,ehrhart_positive,ehrhart_witness\n";
    std::size_t violations = 0;
    // Each n is an independent task; results are written in order as they complete.
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::future<std::vector<ScanRow>>> pending;
    std::size_t next = 2;
    auto launch = [&] {
        const std::size_t n = next++;
        pending.push_back(std::async(std::launch::async, [n, rmax, &table] { return scan_n(n, rmax, table); }));
    };
    while (next <= nmax && pending.size() < workers) launch();
    for (std::size_t i = 0; i < pending.size(); ++i) {
        for (const ScanRow& row : pending[i].get()) {
            const bool ok = row.report.hstar_unimodal && row.report.ehrhart_positive;
            if (!ok) ++violations;
            if (csv) {
                out << row.n << ',' << row.r << ',' << (row.report.hstar_unimodal ? "true" : "false") << ','
                    << row.report.hstar_witness << ',';
                if (row.ehrhart_checked)
                    out << (row.report.ehrhart_positive ? "true" : "false") << ',' << row.report.ehrhart_witness;
                else
                    out << ',';
                out << '\n';
            } else {
                Json j{{"n", row.n}, {"r", row.r}, {"hstarUnimodal", row.report.hstar_unimodal},
                       {"hstarWitness", row.report.hstar_witness}};
                j["ehrhartPositive"] = row.ehrhart_checked ? Json(row.report.ehrhart_positive) : Json(nullptr);
                j["ehrhartWitness"] = row.ehrhart_checked ? Json(row.report.ehrhart_witness) : Json(nullptr);
                out << j.dump() << '\n';
            }
        }
        if (next <= nmax) launch();
    }
    return violations;
}

}  // namespace ehrmat
