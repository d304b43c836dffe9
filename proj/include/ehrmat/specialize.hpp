#pragma once

#include "ehrmat/genfun.hpp"

#include <span>
#include <vector>

namespace ehrmat {

/// c_0..c_m of the Todd recursion; h(x) = x / (1 - e^-x) = sum_n c_n x^n / (n! (n+1)!).
std::vector<Integer> todd_c(std::size_t m);

/// Taylor coefficient b_n = c_n / (n! (n+1)!) of h.
Rational todd_b(std::size_t n);

/// prod_j h(x xi_j) truncated after x^m, built one factor at a time.
RationalPolynomial todd_series(std::span<const Rational> xi, std::size_t m);

/// The same truncated product as exp(sum_k l_k p_k x^k), where log h = sum_k l_k x^k and
/// p_k = sum_j xi_j^k. Costs O(m^2) per call instead of O(s m^2).
RationalPolynomial todd_series_power_sums(std::span<const Rational> xi, std::size_t m);

enum class ToddMethod { SuccessiveProducts, PowerSums };

/// td_m(xi): the x^m coefficient of prod_j h(x xi_j).
Rational todd_eval(std::span<const Rational> xi, std::size_t m);

/// Moment-curve point lambda(xi) = (1, xi, .., xi^(n-1)) for the least xi = 0, 1, .. with
/// every <lambda, b> nonzero.
IntVec find_lambda(const std::vector<IntVec>& bs, std::size_t ambient);

/// w_l = (-1)^s td_{s-l}(-beta_1, .., -beta_s) / (l! beta_1 ... beta_s) for l = 0..s,
/// where beta_j = <lambda, b_j>.
std::vector<Rational> weights(std::span<const Integer> beta, ToddMethod method = ToddMethod::SuccessiveProducts);

struct TermPlan {
    Integer lambda_a;
    Integer lambda_v;
    std::vector<Integer> beta;
    std::vector<Rational> w;
};

struct SpecializationPlan {
    IntVec lambda;
    std::vector<TermPlan> terms;
};

SpecializationPlan plan_specialization(const GenFun& g, ToddMethod method = ToddMethod::SuccessiveProducts);

/// #(kP cap Z^n); k = 0 gives 1.
Integer count_dilation(const GenFun& g, long k);
Integer count(const GenFun& g);

/// Coefficients of i(P, k) in k. Throws std::logic_error if a coefficient above dim P is nonzero.
RationalPolynomial ehrhart_polynomial(const GenFun& g, ToddMethod method = ToddMethod::SuccessiveProducts);
RationalPolynomial ehrhart_polynomial(const GenFun& g, const SpecializationPlan& plan);

struct StreamedEhrhart {
    RationalPolynomial ehrhart;
    IntVec lambda;
    std::size_t dimension = 0;
    std::size_t vertices = 0;
    std::size_t terms = 0;
};

/// The same polynomial computed vertex by vertex, so the full generating function is never
/// held in memory. lambda is chosen against every edge direction.
StreamedEhrhart ehrhart_polynomial_streamed(const PolytopeSpec& spec, const ConeOptions& options = {},
                                            ToddMethod method = ToddMethod::SuccessiveProducts,
                                            const Budget& budget = {});

}  // namespace ehrmat
