#pragma once

#include "ehrmat/exactmath.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ehrmat {

/// h*_j = sum_{i<=j} (-1)^i C(d+1, i) p(j-i), j = 0..d. Throws std::domain_error if an entry
/// is non-integral or negative.
std::vector<Integer> ehrhart_to_hstar(const RationalPolynomial& p, std::size_t d);

/// Katzman coefficients A_0..A_{n(r-1)} of (1 + T + .. + T^(r-1))^n, by the dimension
/// recurrence A^{n,r}_i = sum_{k=i-r+1}^{i} A^{n-1,r}_k.
std::vector<Integer> katzman(std::size_t n, std::size_t r);
/// Same numbers from the multinomial sum over (a_0..a_{r-1}) with sum a = n, sum j a_j = i.
std::vector<Integer> katzman_multinomial(std::size_t n, std::size_t r);
/// Same numbers from the rank recurrence A^{n,r}_i = sum_{k+l=i} C(n,k) A^{k,r-1}_l.
std::vector<Integer> katzman_rank_recurrence(std::size_t n, std::size_t r);

/// A_i, or 0 outside the index range.
Integer katzman_at(const std::vector<Integer>& a, long i);

/// i(P(U^{r,n}), k) = sum_{s<r} (-1)^s C(n,s) C(k(r-s) - s + n - 1, n - 1), expanded in k.
RationalPolynomial uniform_ehrhart(std::size_t n, std::size_t r);

/// h*_0..h*_{n-1} of P(U^{r,n}) by the triple sum over s, j, k of Katzman coefficients.
std::vector<Integer> uniform_hstar(std::size_t n, std::size_t r);
/// Rank 2: h*_l = C(n, 2l) - n [l = 1].
std::vector<Integer> uniform_hstar_rank2(std::size_t n);
/// Rank 3: h*_l = A^{n,3}_{3l} - n C(n, 2l-1) + C(n,2) [l = 2].
std::vector<Integer> uniform_hstar_rank3(std::size_t n);

/// Every-t-th Katzman coefficient a[t][m][l] = A^{m,t}_{lt} for t, m <= nmax and l < nmax,
/// shared by all uniform h*-vectors with n <= nmax.
class KatzmanTable {
public:
    explicit KatzmanTable(std::size_t nmax);
    std::size_t nmax() const { return nmax_; }
    const Integer& at(std::size_t t, std::size_t m, long l) const;

private:
    std::size_t nmax_;
    Integer zero_;
    std::vector<std::vector<std::vector<Integer>>> a_;
};

/// h* of P(U^{r,n}) for r = 1..n-1 (index r-1), using the triple sum with its inner sum over
/// k evaluated once per (r-s, j) as a backward difference.
std::vector<std::vector<Integer>> uniform_hstar_all_ranks(std::size_t n, const KatzmanTable& table);

/// Non-decreasing up to some index p, non-increasing after it.
bool is_unimodal(std::span<const Integer> v);

struct ConjectureReport {
    bool hstar_unimodal = true;
    bool ehrhart_positive = true;
    /// First index where the h* vector rises again after falling, or -1.
    long hstar_witness = -1;
    /// First non-positive Ehrhart coefficient, or -1.
    long ehrhart_witness = -1;
};

ConjectureReport conjecture_report(const RationalPolynomial& ehrhart, std::span<const Integer> hstar);

/// For rank 3 and each index i <= max_index: the least n in [nmin, nmax] such that h*_0 <= .. <= h*_i
/// holds for U^{3,n'} with every n' in [n, nmax]; nullopt if it fails at nmax.
std::vector<std::optional<std::size_t>> partial_unimodality_scan(std::size_t max_index, std::size_t nmin,
                                                                 std::size_t nmax);

}  // namespace ehrmat
