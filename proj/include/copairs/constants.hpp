#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "copairs/numeric.hpp"
#include "copairs/sieve.hpp"

namespace copairs {

// A truncated Euler product with a certified tail. tail_bound bounds
// |log(true / value)|, so [value*exp(-tail_bound), value*exp(tail_bound)]
// brackets the true constant whenever |eps_p| <= term_bound_c / p^2 holds
// for all primes past the truncation point.
struct EulerProductValue {
    double value = 1.0;
    std::uint64_t truncation_prime = 2;
    double tail_bound = 0.0;
    double term_bound_c = 0.0;

    double lower() const { return value * std::exp(-tail_bound); }
    double upper() const { return value * std::exp(tail_bound); }
    // Absolute half-width: |true - value| <= value*(e^tail - 1).
    double abs_error() const { return value * std::expm1(tail_bound); }
};

struct ZetaValue {
    double value = 0.0;
    double error_bound = 0.0;
};

// prod_{p <= P} (1 + eps_p), accumulated as sum log1p(eps_p) with
// compensation. Tail: |log(1+x)| <= 2|x| for |x| <= 1/2 together with
// sum_{p > P} 1/p^2 < 1/P gives |log tail| <= 2c/P, valid once P >= 2c.
template <typename TermFn>
EulerProductValue euler_product(TermFn&& term, double term_bound_c,
                                std::uint64_t truncation_prime, const SieveTables& tables) {
    if (!(term_bound_c > 0.0))
        throw std::invalid_argument("euler_product: term_bound_c must be positive");
    if (truncation_prime < 2 || truncation_prime > tables.limit())
        throw std::invalid_argument("euler_product: truncation prime outside sieve range");
    if (static_cast<double>(truncation_prime) < 2.0 * term_bound_c)
        throw std::invalid_argument(
            "euler_product: truncation prime " + std::to_string(truncation_prime) +
            " too small for term bound c = " + std::to_string(term_bound_c) +
            " (need P >= 2c)");

    CompensatedSum log_sum;
    for (const std::uint32_t p : tables.primes()) {
        if (p > truncation_prime) break;
        const double eps = term(static_cast<std::uint64_t>(p));
        if (!(eps > -1.0))
            throw std::domain_error("euler_product: factor 1 + eps_p <= 0 at p = " +
                                    std::to_string(p));
        log_sum.add(std::log1p(eps));
    }
    return {std::exp(log_sum.value()), truncation_prime,
            2.0 * term_bound_c / static_cast<double>(truncation_prime), term_bound_c};
}

// Density of pairwise-coprime k-tuples:
//   theta(k) = prod_p (1 - 1/p)^(k-1) (1 + (k-1)/p).
// The per-prime term satisfies |eps_p| <= k^2 / p^2.
inline EulerProductValue theta(int k, std::uint64_t truncation_prime, const SieveTables& tables) {
    if (k < 1 || k > 8) throw std::invalid_argument("theta: k must be in 1..8");
    const auto kk = static_cast<unsigned>(k);
    return euler_product(
        [kk](std::uint64_t p) {
            const double inv = 1.0 / static_cast<double>(p);
            return powi(1.0 - inv, kk - 1) * (1.0 + (kk - 1) * inv) - 1.0;
        },
        static_cast<double>(k) * static_cast<double>(k), truncation_prime, tables);
}

// Limiting mean of (phi(n)/n)^m:
//   A_m = prod_p (1 + ((1 - 1/p)^m - 1) / p),
// with |(1 - 1/p)^m - 1| <= m/p, so c = m.
inline EulerProductValue schur_constant(int m, std::uint64_t truncation_prime,
                                        const SieveTables& tables) {
    if (m < 1 || m > 16) throw std::invalid_argument("schur_constant: m must be in 1..16");
    const auto mm = static_cast<unsigned>(m);
    return euler_product(
        [mm](std::uint64_t p) {
            const double inv = 1.0 / static_cast<double>(p);
            return (powi(1.0 - inv, mm) - 1.0) * inv;
        },
        static_cast<double>(m), truncation_prime, tables);
}

// zeta(k) for integer k in 2..10. k = 2 is pi^2/6 in closed form; larger k
// use the partial sum to N with the integral bracket
//   N^(1-k)/(k-1) <= tail <= (N-1)^(1-k)/(k-1)
// and return the bracket midpoint. Certified error stays below 1e-12.
inline ZetaValue zeta(int k) {
    if (k < 2 || k > 10) throw std::invalid_argument("zeta: k must be in 2..10");
    if (k == 2) {
        const double v = std::numbers::pi * std::numbers::pi / 6.0;
        return {v, 4.0 * std::numeric_limits<double>::epsilon() * v};
    }
    constexpr std::uint64_t kTerms = 1'000'000;
    CompensatedSum sum;
    for (std::uint64_t n = 1; n <= kTerms; ++n)
        sum.add(powi(1.0 / static_cast<double>(n), static_cast<unsigned>(k)));
    const double tail_lo =
        powi(1.0 / static_cast<double>(kTerms), static_cast<unsigned>(k - 1)) / (k - 1);
    const double tail_hi =
        powi(1.0 / static_cast<double>(kTerms - 1), static_cast<unsigned>(k - 1)) / (k - 1);
    const double value = sum.value() + 0.5 * (tail_lo + tail_hi);
    const double error =
        0.5 * (tail_hi - tail_lo) + 8.0 * std::numeric_limits<double>::epsilon() * value;
    return {value, error};
}

// Limiting density of pairwise non-coprime triples:
//   rho = 1 - 3/zeta(2) + 3 A_2 - theta(3).
// Component tail bounds combine additively; the result's tail_bound is
// chosen so the multiplicative interval still brackets the truth
// (value * exp(-tail) = value - e on the tight side).
inline EulerProductValue rho(std::uint64_t truncation_prime, const SieveTables& tables) {
    if (truncation_prime < 1000)
        throw std::invalid_argument("rho: truncation prime must be at least 1000");
    const EulerProductValue a2 = schur_constant(2, truncation_prime, tables);
    const EulerProductValue th3 = theta(3, truncation_prime, tables);
    const ZetaValue z2 = zeta(2);

    const double value = 1.0 - 3.0 / z2.value + 3.0 * a2.value - th3.value;
    const double abs_err = 3.0 * a2.abs_error() + th3.abs_error() +
                           3.0 * z2.error_bound / (z2.value * z2.value);
    if (!(abs_err < value))
        throw std::domain_error("rho: certified error exceeds the value itself");
    const double tail = -std::log1p(-abs_err / value);
    // Combined coefficient: 3*c(A_2) + c(theta(3)).
    return {value, truncation_prime, tail, 3.0 * a2.term_bound_c + th3.term_bound_c};
}

}  // namespace copairs
