#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ehrmat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational p/q. Throws on q == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Dense integer vector of fixed length.
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::size_t n) : entries_(n) {}
    IntVec(std::initializer_list<long> init);
    explicit IntVec(std::vector<Integer> entries) : entries_(std::move(entries)) {}

    static IntVec unit(std::size_t n, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    Integer& operator[](std::size_t i) { return entries_[i]; }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    const std::vector<Integer>& entries() const { return entries_; }

    bool is_zero() const;

    IntVec& operator+=(const IntVec& other);
    IntVec& operator-=(const IntVec& other);
    IntVec& operator*=(const Integer& factor);

    friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
    friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
    friend IntVec operator*(IntVec a, const Integer& f) { return a *= f; }
    friend IntVec operator*(const Integer& f, IntVec a) { return a *= f; }
    IntVec operator-() const;

    friend bool operator==(const IntVec& a, const IntVec& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const IntVec& a, const IntVec& b) { return a.entries_ < b.entries_; }

    std::string str() const;

private:
    std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);

Integer dot(const IntVec& a, const IntVec& b);
Rational dot(std::span<const Rational> a, const IntVec& b);

/// Divides by the gcd of the entries. The zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const;
};

/// Rectangular integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    /// Matrix whose columns are the given vectors (all of equal length).
    static IntMatrix from_columns(std::span<const IntVec> columns);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec row(std::size_t r) const;
    IntVec column(std::size_t c) const;

    /// Submatrix picking the given rows (all columns).
    IntMatrix select_rows(std::span<const std::size_t> rows) const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

/// Rank via fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Fraction-free inverse: returns (d, R) with R = d * A^-1 and |d| = |det A|, so R is
/// integral. Throws std::domain_error if A is singular.
std::pair<Integer, IntMatrix> scaled_inverse(const IntMatrix& m);

/// Signed 128-bit machine integer for the overflow-checked fast paths.
using Wide = __int128;

Integer to_integer(Wide v);
/// nullopt unless v fits in a long.
std::optional<Wide> to_wide(const Integer& v);

/// scaled_inverse of a row-major n x n matrix of machine integers. Returns false if an
/// intermediate value overflows; throws std::domain_error if the matrix is singular.
bool scaled_inverse_wide(std::span<const Wide> a, std::size_t n, Wide& d, std::vector<Wide>& r);

/// Dense rational matrix, row-major. Used by the LP and the chart solves.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit RationalMatrix(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Inverse of a square nonsingular matrix. Throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Incremental row-echelon basis of a linear subspace of Q^n.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return rows_.size(); }

    /// True if v lies in the current span.
    bool contains(const IntVec& v) const;

    /// Adds v; returns false (and leaves the basis unchanged) if v is already spanned.
    bool add(const IntVec& v);

    /// Pivot column of each basis row, in insertion order.
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::vector<Rational> reduce(const IntVec& v) const;

    std::size_t ambient_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Univariate polynomial with exact rational coefficients; coeffs_[i] multiplies x^i.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    RationalPolynomial(std::initializer_list<Rational> coeffs);

    static RationalPolynomial constant(const Rational& c);
    /// The polynomial a*x + b.
    static RationalPolynomial linear(const Rational& a, const Rational& b);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the degree).
    Rational coefficient(std::size_t i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational leading() const;

    Rational operator()(const Rational& x) const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator-=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const Rational& factor);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& f) { return a *= f; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

    /// Coefficients as "p/q" strings, constant term first. The zero polynomial prints as ["0"].
    std::vector<std::string> coefficient_strings() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

/// The unique polynomial of degree < points.size() through the given (abscissa, value) pairs.
/// Throws std::invalid_argument on duplicate abscissae.
RationalPolynomial poly_interpolate(std::span<const std::pair<long, Integer>> points);

/// Product a*b with every term of degree > order dropped.
RationalPolynomial series_mul_trunc(const RationalPolynomial& a, const RationalPolynomial& b, std::size_t order);

/// Binomial coefficient; zero when k < 0 or k > n (n >= 0). For n < 0 uses the
/// generalized definition n(n-1)...(n-k+1)/k!.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

/// The polynomial C(a*x + b, m) = (a x + b)(a x + b - 1)...(a x + b - m + 1) / m! in x.
RationalPolynomial binomial_polynomial(const Rational& a, const Rational& b, unsigned long m);

}  // namespace ehrmat
