#include "ehrmat/specialize.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ehrmat {

std::vector<Integer> todd_c(std::size_t m) {
    std::vector<Integer> c(m + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= m; ++n) {
        Integer sum = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            // n! / (n-j+1)! = n (n-1) ... (n-j+2)
            Integer falling = 1;
            for (std::size_t t = n - j + 2; t <= n; ++t) falling *= static_cast<unsigned long>(t);
            Integer term = binomial(static_cast<long>(n + 1), static_cast<long>(j + 1)) * falling * c[n - j];
            if (j % 2 == 1) sum += term;
            else sum -= term;
        }
        c[n] = sum;
    }
    return c;
}

Rational todd_b(std::size_t n) {
    return make_rational(todd_c(n)[n], factorial(n) * factorial(n + 1));
}

namespace {

std::vector<Rational> todd_b_table(std::size_t m) {
    const std::vector<Integer> c = todd_c(m);
    std::vector<Rational> b(m + 1);
    for (std::size_t n = 0; n <= m; ++n) b[n] = make_rational(c[n], factorial(n) * factorial(n + 1));
    return b;
}

RationalPolynomial todd_series(std::span<const Rational> xi, std::size_t m, const std::vector<Rational>& b) {
    RationalPolynomial product = RationalPolynomial::constant(1);
    std::vector<Rational> factor(m + 1);
    for (const Rational& x : xi) {
        Rational power = 1;
        for (std::size_t n = 0; n <= m; ++n, power *= x) factor[n] = b[n] * power;
        product = series_mul_trunc(product, RationalPolynomial(factor), m);
    }
    return product;
}

// Taylor coefficients of log h up to x^m, from k l_k = k b_k - sum_{j<k} j l_j b_{k-j}.
std::vector<Rational> log_todd_table(const std::vector<Rational>& b) {
    const std::size_t m = b.size() - 1;
    std::vector<Rational> l(m + 1);
    for (std::size_t k = 1; k <= m; ++k) {
        Rational acc = Rational(static_cast<long>(k)) * b[k];
        for (std::size_t j = 1; j < k; ++j) acc -= Rational(static_cast<long>(j)) * l[j] * b[k - j];
        l[k] = acc / static_cast<long>(k);
    }
    return l;
}

struct ToddTables {
    std::vector<Rational> b;
    std::vector<Rational> log;
};

ToddTables todd_tables(std::size_t m) {
    ToddTables t{todd_b_table(m), {}};
    t.log = log_todd_table(t.b);
    return t;
}

template <typename T>
RationalPolynomial todd_series_power_sums(std::span<const T> xi, std::size_t m, const std::vector<Rational>& log) {
    // q_k = k l_k p_k; e_0 = 1, n e_n = sum_k q_k e_{n-k}.
    std::vector<Rational> q(m + 1);
    std::vector<T> powers(xi.begin(), xi.end());
    for (std::size_t k = 1; k <= m; ++k) {
        if (k > 1)
            for (std::size_t j = 0; j < xi.size(); ++j) powers[j] *= xi[j];
        if (log[k] == 0) continue;
        T p = 0;
        for (const T& x : powers) p += x;
        q[k] = Rational(static_cast<long>(k)) * log[k] * p;
    }
    std::vector<Rational> e(m + 1);
    e[0] = 1;
    for (std::size_t n = 1; n <= m; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (q[k] != 0) acc += q[k] * e[n - k];
        e[n] = acc / static_cast<long>(n);
    }
    return RationalPolynomial(std::move(e));
}

}  // namespace

RationalPolynomial todd_series_power_sums(std::span<const Rational> xi, std::size_t m) {
    return todd_series_power_sums<Rational>(xi, m, todd_tables(m).log);
}

RationalPolynomial todd_series(std::span<const Rational> xi, std::size_t m) {
    return todd_series(xi, m, todd_b_table(m));
}

Rational todd_eval(std::span<const Rational> xi, std::size_t m) {
    return todd_series(xi, m).coefficient(m);
}

IntVec find_lambda(const std::vector<IntVec>& bs, std::size_t ambient) {
    std::unordered_set<IntVec, IntVecHash> distinct;
    for (const IntVec& b : bs) {
        if (b.size() != ambient) throw std::invalid_argument("find_lambda: length mismatch");
        if (b.is_zero()) throw std::invalid_argument("find_lambda: zero vector");
        distinct.insert(b);
    }
    for (long xi = 0;; ++xi) {
        IntVec lambda(ambient);
        Integer power = 1;
        for (std::size_t i = 0; i < ambient; ++i, power *= xi) lambda[i] = power;
        if (std::all_of(distinct.begin(), distinct.end(), [&](const IntVec& b) { return dot(lambda, b) != 0; }))
            return lambda;
    }
}

namespace {

std::vector<Rational> weights(std::span<const Integer> beta, const ToddTables& tables, ToddMethod method) {
    const std::size_t s = beta.size();
    Integer prod = 1;
    for (std::size_t j = 0; j < s; ++j) {
        if (beta[j] == 0) throw std::invalid_argument("weights: zero pairing");
        prod *= beta[j];
    }
    RationalPolynomial td;
    if (method == ToddMethod::PowerSums) {
        std::vector<Integer> neg(beta.begin(), beta.end());
        for (auto& x : neg) x = -x;
        td = todd_series_power_sums<Integer>(neg, s, tables.log);
    } else {
        std::vector<Rational> neg(beta.begin(), beta.end());
        for (auto& x : neg) x = -x;
        td = todd_series(neg, s, tables.b);
    }
    std::vector<Rational> w(s + 1);
    Integer lfact = 1;
    for (std::size_t l = 0; l <= s; ++l) {
        if (l > 0) lfact *= static_cast<unsigned long>(l);
        w[l] = td.coefficient(s - l) / Rational(lfact * prod);
        if (s % 2 == 1) w[l] = -w[l];
    }
    return w;
}

}  // namespace

std::vector<Rational> weights(std::span<const Integer> beta, ToddMethod method) {
    return weights(beta, todd_tables(beta.size()), method);
}

namespace {

TermPlan plan_term(const GenFunTerm& t, const IntVec& lambda, const ToddTables& tables, ToddMethod method) {
    TermPlan tp;
    tp.lambda_a = dot(lambda, t.numerator);
    tp.lambda_v = dot(lambda, t.apex);
    for (const IntVec& d : t.denominators) tp.beta.push_back(dot(lambda, d));
    tp.w = weights(tp.beta, tables, method);
    return tp;
}

// Adds sign * sum_l w_l (a + v k)^l, a = <lambda, numerator - apex>, v = <lambda, apex>, to
// the coefficients in k. Horner runs over integers after clearing the common denominator
// of the weights.
void add_term(int sign, const TermPlan& tp, std::vector<Rational>& coeffs) {
    const std::size_t s = tp.w.size() - 1;
    if (coeffs.size() < s + 1) coeffs.resize(s + 1);
    const Integer a = tp.lambda_a - tp.lambda_v;
    const Integer& v = tp.lambda_v;
    Integer den = 1;
    for (const Rational& w : tp.w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
    std::vector<Integer> acc(s + 1);
    acc[0] = tp.w[s].get_num() * (den / tp.w[s].get_den());
    for (std::size_t l = s; l-- > 0;) {
        for (std::size_t m = s - l; m > 0; --m) acc[m] = acc[m] * a + acc[m - 1] * v;
        acc[0] = acc[0] * a + tp.w[l].get_num() * (den / tp.w[l].get_den());
    }
    for (std::size_t m = 0; m <= s; ++m) {
        const Rational term = make_rational(acc[m], den);
        if (sign > 0) coeffs[m] += term;
        else coeffs[m] -= term;
    }
}

RationalPolynomial finish(std::vector<Rational> coeffs, std::size_t dimension) {
    for (std::size_t m = dimension + 1; m < coeffs.size(); ++m)
        if (coeffs[m] != 0) throw std::logic_error("ehrhart_polynomial: nonzero coefficient above dim P");
    if (coeffs.size() > dimension + 1) coeffs.resize(dimension + 1);
    return RationalPolynomial(std::move(coeffs));
}

}  // namespace

SpecializationPlan plan_specialization(const GenFun& g, ToddMethod method) {
    SpecializationPlan plan;
    std::vector<IntVec> bs;
    std::size_t smax = 0;
    for (const auto& t : g.terms) {
        bs.insert(bs.end(), t.denominators.begin(), t.denominators.end());
        smax = std::max(smax, t.denominators.size());
    }
    plan.lambda = find_lambda(bs, g.ambient);
    const ToddTables tables = todd_tables(smax);
    plan.terms.reserve(g.terms.size());
    for (const auto& t : g.terms) plan.terms.push_back(plan_term(t, plan.lambda, tables, method));
    return plan;
}

Integer count_dilation(const GenFun& g, long k) {
    if (k < 0) throw std::invalid_argument("count_dilation: negative dilation");
    if (k == 0) return 1;
    const SpecializationPlan plan = plan_specialization(g);
    Rational total = 0;
    for (std::size_t i = 0; i < g.terms.size(); ++i) {
        const TermPlan& tp = plan.terms[i];
        const Integer x = tp.lambda_a + Integer(k - 1) * tp.lambda_v;
        Rational value = 0;
        for (std::size_t l = tp.w.size(); l-- > 0;) value = value * x + tp.w[l];
        total += g.terms[i].sign * value;
    }
    if (total.get_den() != 1) throw std::logic_error("count_dilation: non-integral count " + to_string(total));
    return total.get_num();
}

Integer count(const GenFun& g) { return count_dilation(g, 1); }

RationalPolynomial ehrhart_polynomial(const GenFun& g, ToddMethod method) {
    return ehrhart_polynomial(g, plan_specialization(g, method));
}

RationalPolynomial ehrhart_polynomial(const GenFun& g, const SpecializationPlan& plan) {
    std::vector<Rational> coeffs(1);
    for (std::size_t i = 0; i < g.terms.size(); ++i) add_term(g.terms[i].sign, plan.terms[i], coeffs);
    return finish(std::move(coeffs), g.dimension);
}

StreamedEhrhart ehrhart_polynomial_streamed(const PolytopeSpec& spec, const ConeOptions& options, ToddMethod method,
                                            const Budget& budget) {
    const Skeleton sk = skeleton(spec, options, budget);
    StreamedEhrhart out;
    out.dimension = sk.chart.dimension();
    out.vertices = sk.vertices.size();
    // The denominators of every term are edge directions, so lambda is fixed up front.
    out.lambda = find_lambda(edge_directions(sk), sk.chart.ambient());
    const ToddTables tables = todd_tables(out.dimension);
    std::vector<Rational> coeffs(1);
    Integer basis_det = 0;
    for (std::size_t i = 0; i < sk.vertices.size(); ++i) {
        const VertexDecomposition vd = decompose_vertex(sk, i, options.visibility, basis_det);
        for (const auto& piece : vd.pieces) {
            const GenFunTerm t = unimodular_term(piece);
            add_term(t.sign, plan_term(t, out.lambda, tables, method), coeffs);
            ++out.terms;
        }
    }
    out.ehrhart = finish(std::move(coeffs), out.dimension);
    return out;
}

}  // namespace ehrmat
