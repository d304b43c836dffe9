#include "ehrmat/hstar.hpp"

#include <map>
#include <stdexcept>

namespace ehrmat {

std::vector<Integer> ehrhart_to_hstar(const RationalPolynomial& p, std::size_t d) {
    if (p.degree() > static_cast<long>(d)) throw std::invalid_argument("ehrhart_to_hstar: degree exceeds dimension");
    std::vector<Rational> values(d + 1);
    for (std::size_t k = 0; k <= d; ++k) values[k] = p(Rational(static_cast<long>(k)));
    std::vector<Integer> h(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        Rational sum = 0;
        for (std::size_t i = 0; i <= j; ++i) {
            const Rational term = binomial(static_cast<long>(d + 1), static_cast<long>(i)) * values[j - i];
            if (i % 2 == 0) sum += term;
            else sum -= term;
        }
        if (sum.get_den() != 1) throw std::domain_error("ehrhart_to_hstar: non-integral h*_" + std::to_string(j));
        if (sum < 0) throw std::domain_error("ehrhart_to_hstar: negative h*_" + std::to_string(j));
        h[j] = sum.get_num();
    }
    return h;
}

std::vector<Integer> katzman(std::size_t n, std::size_t r) {
    if (r == 0) throw std::invalid_argument("katzman: r must be positive");
    std::vector<Integer> a{1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Integer> next(m * (r - 1) + 1);
        // Sliding window of width r over the previous row.
        Integer window = 0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (i < a.size()) window += a[i];
            if (i >= r && i - r < a.size()) window -= a[i - r];
            next[i] = window;
        }
        a = std::move(next);
    }
    return a;
}

std::vector<Integer> katzman_multinomial(std::size_t n, std::size_t r) {
    if (r == 0) throw std::invalid_argument("katzman_multinomial: r must be positive");
    std::vector<Integer> a(n * (r - 1) + 1);
    std::vector<std::size_t> parts(r, 0);
    const Integer nfact = factorial(n);
    // Compositions of n into r parts, a_0 + .. + a_{r-1} = n.
    auto visit = [&](auto&& self, std::size_t idx, std::size_t left, std::size_t weight, Integer denom) -> void {
        if (idx + 1 == r) {
            a[weight + idx * left] += nfact / (denom * factorial(left));
            return;
        }
        for (std::size_t c = 0; c <= left; ++c)
            self(self, idx + 1, left - c, weight + idx * c, denom * factorial(c));
    };
    visit(visit, 0, n, 0, Integer(1));
    return a;
}

std::vector<Integer> katzman_rank_recurrence(std::size_t n, std::size_t r) {
    if (r == 0) throw std::invalid_argument("katzman_rank_recurrence: r must be positive");
    if (r == 1) return {1};
    std::vector<Integer> a(n * (r - 1) + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::vector<Integer> lower = katzman_rank_recurrence(k, r - 1);
        const Integer c = binomial(static_cast<long>(n), static_cast<long>(k));
        for (std::size_t l = 0; l < lower.size(); ++l) a[k + l] += c * lower[l];
    }
    return a;
}

Integer katzman_at(const std::vector<Integer>& a, long i) {
    if (i < 0 || i >= static_cast<long>(a.size())) return 0;
    return a[static_cast<std::size_t>(i)];
}

RationalPolynomial uniform_ehrhart(std::size_t n, std::size_t r) {
    if (r < 1 || r > n) throw std::invalid_argument("uniform_ehrhart: need 1 <= r <= n");
    RationalPolynomial p;
    for (std::size_t s = 0; s < r; ++s) {
        RationalPolynomial term = binomial_polynomial(Rational(static_cast<long>(r - s)),
                                                      Rational(static_cast<long>(n - 1) - static_cast<long>(s)), n - 1);
        term *= Rational(binomial(static_cast<long>(n), static_cast<long>(s)));
        if (s % 2 == 0) p += term;
        else p -= term;
    }
    return p;
}

std::vector<Integer> uniform_hstar(std::size_t n, std::size_t r) {
    if (r < 1 || r > n) throw std::invalid_argument("uniform_hstar: need 1 <= r <= n");
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Integer>> cache;
    auto A = [&](std::size_t m, std::size_t t) -> const std::vector<Integer>& {
        auto it = cache.find({m, t});
        if (it == cache.end()) it = cache.emplace(std::pair{m, t}, katzman(m, t)).first;
        return it->second;
    };
    std::vector<Integer> h(n);
    for (std::size_t l = 0; l < n; ++l) {
        Integer sum = 0;
        for (std::size_t s = 0; s < r; ++s)
            for (std::size_t j = 0; j <= s; ++j)
                for (std::size_t k = 0; k <= j; ++k) {
                    const std::size_t t = r - s;
                    const long idx = (static_cast<long>(l) - static_cast<long>(k)) * static_cast<long>(t);
                    Integer term = binomial(static_cast<long>(n), static_cast<long>(s)) *
                                   binomial(static_cast<long>(s), static_cast<long>(j)) *
                                   binomial(static_cast<long>(j), static_cast<long>(k)) * katzman_at(A(n - j, t), idx);
                    if ((s + j + k) % 2 == 0) sum += term;
                    else sum -= term;
                }
        h[l] = sum;
    }
    return h;
}

std::vector<Integer> uniform_hstar_rank2(std::size_t n) {
    std::vector<Integer> h(n);
    for (std::size_t l = 0; l < n; ++l) h[l] = binomial(static_cast<long>(n), static_cast<long>(2 * l));
    if (n > 1) h[1] -= static_cast<long>(n);
    return h;
}

std::vector<Integer> uniform_hstar_rank3(std::size_t n) {
    const std::vector<Integer> a = katzman(n, 3);
    std::vector<Integer> h(n);
    for (std::size_t l = 0; l < n; ++l) {
        h[l] = katzman_at(a, static_cast<long>(3 * l)) -
               Integer(static_cast<long>(n)) * binomial(static_cast<long>(n), 2 * static_cast<long>(l) - 1);
        if (l == 2) h[l] += binomial(static_cast<long>(n), 2);
    }
    return h;
}

KatzmanTable::KatzmanTable(std::size_t nmax) : nmax_(nmax), a_(nmax + 1) {
    for (std::size_t t = 1; t <= nmax; ++t) {
        a_[t].assign(nmax + 1, std::vector<Integer>(nmax));
        std::vector<Integer> row{1};
        for (std::size_t m = 0; m <= nmax; ++m) {
            if (m > 0) {
                std::vector<Integer> next(m * (t - 1) + 1);
                Integer window = 0;
                for (std::size_t i = 0; i < next.size(); ++i) {
                    if (i < row.size()) window += row[i];
                    if (i >= t && i - t < row.size()) window -= row[i - t];
                    next[i] = window;
                }
                row = std::move(next);
            }
            for (std::size_t l = 0; l < nmax && l * t < row.size(); ++l) a_[t][m][l] = row[l * t];
        }
    }
}

const Integer& KatzmanTable::at(std::size_t t, std::size_t m, long l) const {
    if (l < 0 || l >= static_cast<long>(nmax_)) return zero_;
    return a_.at(t).at(m)[static_cast<std::size_t>(l)];
}

std::vector<std::vector<Integer>> uniform_hstar_all_ranks(std::size_t n, const KatzmanTable& table) {
    if (n > table.nmax()) throw std::invalid_argument("uniform_hstar_all_ranks: table too small");
    if (n < 2) return {};
    // F[t][j][l] = sum_k (-1)^k C(j,k) A^{n-j,t}_{(l-k)t}, for t + j <= n - 1.
    std::vector<std::vector<std::vector<Integer>>> f(n);
    for (std::size_t t = 1; t < n; ++t) {
        f[t].assign(n - t, std::vector<Integer>(n));
        for (std::size_t j = 0; j + t < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Integer sum = 0;
                for (std::size_t k = 0; k <= j && k <= l; ++k) {
                    const Integer term = binomial(static_cast<long>(j), static_cast<long>(k)) *
                                         table.at(t, n - j, static_cast<long>(l - k));
                    if (k % 2 == 0) sum += term;
                    else sum -= term;
                }
                f[t][j][l] = std::move(sum);
            }
    }
    std::vector<std::vector<Integer>> out;
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Integer> h(n);
        for (std::size_t l = 0; l < n; ++l) {
            Integer total = 0;
            for (std::size_t s = 0; s < r; ++s) {
                Integer inner = 0;
                for (std::size_t j = 0; j <= s; ++j) {
                    const Integer term = binomial(static_cast<long>(s), static_cast<long>(j)) * f[r - s][j][l];
                    if (j % 2 == 0) inner += term;
                    else inner -= term;
                }
                inner *= binomial(static_cast<long>(n), static_cast<long>(s));
                if (s % 2 == 0) total += inner;
                else total -= inner;
            }
            h[l] = std::move(total);
        }
        out.push_back(std::move(h));
    }
    return out;
}

bool is_unimodal(std::span<const Integer> v) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
    while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
    return i + 1 >= v.size();
}

ConjectureReport conjecture_report(const RationalPolynomial& ehrhart, std::span<const Integer> hstar) {
    ConjectureReport report;
    std::size_t i = 0;
    while (i + 1 < hstar.size() && hstar[i] <= hstar[i + 1]) ++i;
    while (i + 1 < hstar.size() && hstar[i] >= hstar[i + 1]) ++i;
    if (i + 1 < hstar.size()) {
        report.hstar_unimodal = false;
        report.hstar_witness = static_cast<long>(i + 1);
    }
    const auto& c = ehrhart.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m] <= 0) {
            report.ehrhart_positive = false;
            report.ehrhart_witness = static_cast<long>(m);
            break;
        }
    }
    return report;
}

std::vector<std::optional<std::size_t>> partial_unimodality_scan(std::size_t max_index, std::size_t nmin,
                                                                 std::size_t nmax) {
    if (nmin < 4 || nmin > nmax) throw std::invalid_argument("partial_unimodality_scan: need 4 <= nmin <= nmax");
    std::vector<std::vector<Integer>> h;
    for (std::size_t n = nmin; n <= nmax; ++n) h.push_back(uniform_hstar_rank3(n));
    auto prefix_ok = [&](const std::vector<Integer>& v, std::size_t idx) {
        for (std::size_t i = 0; i < idx; ++i)
            if (katzman_at(v, static_cast<long>(i)) > katzman_at(v, static_cast<long>(i + 1))) return false;
        return true;
    };
    std::vector<std::optional<std::size_t>> out;
    for (std::size_t idx = 0; idx <= max_index; ++idx) {
        std::optional<std::size_t> threshold;
        for (std::size_t n = nmax + 1; n-- > nmin;) {
            if (!prefix_ok(h[n - nmin], idx)) break;
            threshold = n;
        }
        out.push_back(threshold);
    }
    return out;
}

}  // namespace ehrmat
