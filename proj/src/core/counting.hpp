#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>

#include "core/permutation.hpp"

namespace invfact {

/// Exact non-negative integer count; all counting in this module is exact.
using BigCount = mpz_class;
using ExactRational = mpq_class;

/// V_m(k) = sum_{j=0}^{floor(m/2)} k^{-j} m! / (2^j j! (m-2j)!), the rational
/// per-length correction factor. Equals He_m(i*sqrt(k)) / (i*sqrt(k))^m for
/// the probabilists' Hermite polynomial He_m. V_0 = V_1 = 1.
ExactRational hermite_factor(unsigned long m, unsigned long k);

/// sum_{j=0}^{floor(c/2)} k^{c-j} c! / (2^j j! (c-2j)!) = k^c * V_c(k); the
/// number of ways to factor c disjoint k-cycles jointly. Always an integer.
BigCount inner_factor(unsigned long k, unsigned long c);

/// B_n = prod over cycle lengths k of k^{c_k}.
BigCount product_of_cycle_lengths(const CycleType& t);

/// N_n = prod over k of inner_factor(k, c_k): the number of ordered pairs of
/// involutions (tau1, tau2) with tau2 o tau1 equal to any permutation of this
/// cycle type. Satisfies N_n >= B_n.
BigCount count_factorizations(const CycleType& t);

/// |T_n|, the number of involutions of [n] (OEIS A000085), via the recurrence
/// |T_n| = |T_{n-1}| + (n-1)|T_{n-2}|.
BigCount involution_count(std::size_t n);

/// Chowla-Herstein-Moore asymptotic for |T_n|:
/// (1/sqrt(2)) (n/e)^{n/2} e^{sqrt(n) - 1/4}. The log-space value is the
/// primitive (the direct value overflows doubles near n ~ 400).
struct ChmEstimate {
  double log_value = 0.0;
  std::optional<double> value;  // exp(log_value) when representable
};
ChmEstimate chm_asymptotic(std::size_t n);

/// E_n(N_n) = |T_n|^2 / n!, exact.
ExactRational mean_factorizations(std::size_t n);

/// Natural log of a positive big integer, full precision (bit length plus
/// mantissa; relative error is a few ulp regardless of magnitude).
double log_exact(const BigCount& value);

/// ln N_n computed as sum_k ln(inner_factor(k, c_k)) without forming N_n.
double log_count(const CycleType& t);

/// ln B_n = sum_k c_k ln k.
double log_cycle_length_product(const CycleType& t);

/// Calls fn with every cycle type of degree n, one per integer partition of
/// n, in descending-lexicographic partition order.
void for_each_partition(std::size_t n, const std::function<void(const CycleType&)>& fn);

}  // namespace invfact
