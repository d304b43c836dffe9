#include "ehrmat/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace ehrmat {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }
std::string to_string(const Rational& value) { return value.get_str(); }

// IntVec

IntVec::IntVec(std::initializer_list<long> init) {
    entries_.reserve(init.size());
    for (long x : init) entries_.emplace_back(x);
}

IntVec IntVec::unit(std::size_t n, std::size_t i) {
    IntVec v(n);
    v[i] = 1;
    return v;
}

bool IntVec::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntVec& IntVec::operator+=(const IntVec& other) {
    if (other.size() != size()) throw std::invalid_argument("IntVec length mismatch");
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

IntVec& IntVec::operator-=(const IntVec& other) {
    if (other.size() != size()) throw std::invalid_argument("IntVec length mismatch");
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

IntVec& IntVec::operator*=(const Integer& factor) {
    for (auto& x : entries_) x *= factor;
    return *this;
}

IntVec IntVec::operator-() const {
    IntVec r(*this);
    for (auto& x : r.entries_) x = -x;
    return r;
}

std::string IntVec::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os << ')';
}

Integer dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(std::span<const Rational> a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec primitive(const IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0 || g == 1) return v;
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

std::size_t IntVecHash::operator()(const IntVec& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& x : v) {
        h ^= static_cast<std::size_t>(mpz_get_si(x.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::from_columns(std::span<const IntVec> columns) {
    if (columns.empty()) return {};
    IntMatrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows_) throw std::invalid_argument("IntMatrix: ragged columns");
        for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVec IntMatrix::row(std::size_t r) const {
    IntVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> rows) const {
    IntMatrix m(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
    return m;
}

namespace {

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(IntMatrix& a, int& sign) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    sign = 1;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j));
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}


// Machine-word fast paths. They report failure on any overflow and the caller then
// repeats the elimination over GMP integers.

bool load_small(const IntMatrix& m, std::vector<Wide>& out) {
    out.resize(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto x = to_wide(m(i, j));
            if (!x) return false;
            out[i * m.cols() + j] = *x;
        }
    return true;
}

// (p * x - q * y) / prev, exact; false on overflow.
bool cross_step(Wide p, Wide x, Wide q, Wide y, Wide prev, Wide& out) {
    Wide a, b, c;
    if (__builtin_mul_overflow(p, x, &a) || __builtin_mul_overflow(q, y, &b) || __builtin_sub_overflow(a, b, &c))
        return false;
    out = prev == 1 ? c : c / prev;
    return true;
}

enum class Fast { Done, Singular, Overflow };

Fast det_small(const IntMatrix& m, Integer& result) {
    const std::size_t n = m.rows();
    std::vector<Wide> a;
    if (!load_small(m, a)) return Fast::Overflow;
    auto at = [&](std::size_t i, std::size_t j) -> Wide& { return a[i * n + j]; };
    int sign = 1;
    Wide prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return Fast::Singular;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                if (!cross_step(at(k, k), at(i, j), at(i, k), at(k, j), prev, at(i, j))) return Fast::Overflow;
        prev = at(k, k);
    }
    result = to_integer(sign * at(n - 1, n - 1));
    return Fast::Done;
}

}  // namespace

Integer det(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer fast;
    switch (det_small(m, fast)) {
    case Fast::Done: return fast;
    case Fast::Singular: return 0;
    case Fast::Overflow: break;
    }
    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;  // no pivot candidate: singular
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix a = m;
    int sign = 1;
    return bareiss(a, sign);
}

// RationalMatrix

RationalMatrix::RationalMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = m(r, c);
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        }
        const Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Integer to_integer(Wide v) {
    const bool neg = v < 0;
    const unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer r = Integer(static_cast<unsigned long>(u >> 64)) << 64;
    r += static_cast<unsigned long>(u);
    return neg ? Integer(-r) : r;
}

std::optional<Wide> to_wide(const Integer& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return Wide(v.get_si());
}

bool scaled_inverse_wide(std::span<const Wide> src, std::size_t n, Wide& d, std::vector<Wide>& r) {
    if (src.size() != n * n) throw std::invalid_argument("scaled_inverse_wide: size mismatch");
    const std::size_t w = 2 * n;
    std::vector<Wide> a(n * w, 0);
    auto at = [&](std::size_t i, std::size_t j) -> Wide& { return a[i * w + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) at(i, j) = src[i * n + j];
        at(i, n + i) = 1;
    }
    Wide prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) throw std::domain_error("scaled_inverse: singular matrix");
            for (std::size_t j = 0; j < w; ++j) std::swap(at(p, j), at(k, j));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || (at(i, k) == 0 && at(k, k) == prev)) continue;
            for (std::size_t j = 0; j < w; ++j) {
                if (j == k) continue;
                if (!cross_step(at(k, k), at(i, j), at(i, k), at(k, j), prev, at(i, j))) return false;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    d = prev;
    r.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] = at(i, n + j);
    return true;
}

std::pair<Integer, IntMatrix> scaled_inverse(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("scaled_inverse: matrix is not square");
    const std::size_t n = m.rows();
    if (std::vector<Wide> small; load_small(m, small)) {
        Wide d;
        std::vector<Wide> r;
        if (scaled_inverse_wide(small, n, d, r)) {
            IntMatrix out(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out(i, j) = to_integer(r[i * n + j]);
            return {to_integer(d), std::move(out)};
        }
    }
    // Fraction-free Gauss-Jordan on [A | I]; ends at [d I | d A^-1].
    IntMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) throw std::domain_error("scaled_inverse: singular matrix");
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(k, j));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
    return {n == 0 ? Integer(1) : prev, std::move(r)};
}

// SpanBasis

std::vector<Rational> SpanBasis::reduce(const IntVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("SpanBasis: length mismatch");
    std::vector<Rational> w(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) w[i] = v[i];
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (w[p] == 0) continue;
        const Rational f = w[p];
        for (std::size_t i = 0; i < ambient_; ++i)
            if (rows_[k][i] != 0) w[i] -= f * rows_[k][i];
    }
    return w;
}

bool SpanBasis::contains(const IntVec& v) const {
    const auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

bool SpanBasis::add(const IntVec& v) {
    auto w = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && w[p] == 0) ++p;
    if (p == ambient_) return false;
    const Rational piv = w[p];
    for (auto& x : w) x /= piv;
    // Keep rows fully reduced so `reduce` is a single pass.
    for (auto& row : rows_) {
        if (row[p] == 0) continue;
        const Rational f = row[p];
        for (std::size_t i = 0; i < ambient_; ++i)
            if (w[i] != 0) row[i] -= f * w[i];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial(std::vector<Rational>{c}); }

RationalPolynomial RationalPolynomial::linear(const Rational& a, const Rational& b) {
    return RationalPolynomial(std::vector<Rational>{b, a});
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational RationalPolynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& factor) {
    for (auto& c : coeffs_) c *= factor;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(r));
}

std::vector<std::string> RationalPolynomial::coefficient_strings() const {
    if (coeffs_.empty()) return {"0"};
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) {
    os << '[';
    const auto s = p.coefficient_strings();
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
    return os << ']';
}

RationalPolynomial poly_interpolate(std::span<const std::pair<long, Integer>> points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw std::invalid_argument("poly_interpolate: duplicate abscissa");

    RationalPolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RationalPolynomial::linear(1, -points[j].first);
            denom *= points[i].first - points[j].first;
        }
        result += basis * (Rational(points[i].second) / denom);
    }
    return result;
}

RationalPolynomial series_mul_trunc(const RationalPolynomial& a, const RationalPolynomial& b, std::size_t order) {
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    if (ac.empty() || bc.empty()) return {};
    std::vector<Rational> r(std::min(order + 1, ac.size() + bc.size() - 1));
    for (std::size_t i = 0; i < ac.size() && i < r.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size() && i + j < r.size(); ++j) r[i + j] += ac[i] * bc[j];
    }
    return RationalPolynomial(std::move(r));
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

RationalPolynomial binomial_polynomial(const Rational& a, const Rational& b, unsigned long m) {
    RationalPolynomial p = RationalPolynomial::constant(1);
    for (unsigned long t = 0; t < m; ++t) p = p * RationalPolynomial::linear(a, b - Rational(t));
    return p * make_rational(1, factorial(m));
}

}  // namespace ehrmat
