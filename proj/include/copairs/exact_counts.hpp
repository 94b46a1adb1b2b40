#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "copairs/errors.hpp"
#include "copairs/graph.hpp"
#include "copairs/int128.hpp"
#include "copairs/numeric.hpp"
#include "copairs/sieve.hpp"

namespace copairs {

enum class CountMethod {
    kMobiusFormula,
    kPhiSquareSum,
    kTripleFormula,
    kInclusionExclusion,
    kBruteForce,
};

inline std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::kMobiusFormula: return "mobius-formula";
        case CountMethod::kPhiSquareSum: return "phi-square-sum";
        case CountMethod::kTripleFormula: return "triple-formula";
        case CountMethod::kInclusionExclusion: return "inclusion-exclusion";
        case CountMethod::kBruteForce: return "brute-force";
    }
    return "unknown";
}

// An exact tuple count at height H. Counts fit 128 bits for every
// supported height (H^3 needs more than 64 bits past H ~ 2.6e6).
struct CountResult {
    std::uint64_t height = 0;
    u128 count = 0;
    CountMethod method = CountMethod::kBruteForce;
};

// phi(n, B) = #{a in [1, B] : gcd(a, n) = 1}.
struct PhiPartial {
    std::uint64_t n = 1;
    std::uint64_t bound = 0;
    std::uint64_t value = 0;
};

namespace detail {

// Squarefree divisors of n together with their Mobius signs, i.e. the
// expansion of sum_{d | rad(n)} mu(d) f(d). Reused across evaluations of
// phi(n, .) for one n.
struct MobiusExpansion {
    std::vector<std::uint64_t> divisors;
    std::vector<std::int8_t> signs;

    void load(std::uint64_t n, const SieveTables& tables) {
        divisors.assign(1, 1);
        signs.assign(1, 1);
        std::uint64_t m = n;
        while (m > 1) {
            const std::uint32_t p = tables.spf(m);
            const std::size_t count = divisors.size();
            for (std::size_t i = 0; i < count; ++i) {
                divisors.push_back(divisors[i] * p);
                signs.push_back(static_cast<std::int8_t>(-signs[i]));
            }
            while (m % p == 0) m /= p;
        }
    }

    std::uint64_t count_coprime_up_to(std::uint64_t bound) const {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < divisors.size(); ++i)
            acc += static_cast<std::int64_t>(signs[i]) *
                   static_cast<std::int64_t>(bound / divisors[i]);
        return static_cast<std::uint64_t>(acc);
    }
};

}  // namespace detail

// phi(n, bound) by Mobius inversion over the squarefree divisors of n:
// sum_{d | rad(n)} mu(d) floor(bound / d). Exact.
inline PhiPartial phi_partial(std::uint64_t n, std::uint64_t bound, const SieveTables& tables) {
    if (n == 0 || n > tables.limit())
        throw std::range_error("phi_partial: n outside sieve range");
    detail::MobiusExpansion expansion;
    expansion.load(n, tables);
    return {n, bound, expansion.count_coprime_up_to(bound)};
}

// #{(a_1..a_k) in [1,H]^k : gcd(a_1,...,a_k) = 1} via
// sum_{d<=H} mu(d) floor(H/d)^k.
inline CountResult coprime_ktuple_count(std::uint64_t height, int k, const SieveTables& tables) {
    if (k < 2 || k > 6) throw std::invalid_argument("coprime_ktuple_count: k must be in 2..6");
    if (height > tables.limit())
        throw std::range_error("coprime_ktuple_count: height exceeds sieve limit");
    if (height == 0) return {0, 0, CountMethod::kMobiusFormula};

    const auto& mobius = tables.mobius_table();
    i128 total = 0;
    for (std::uint64_t d = 1; d <= height; ++d) {
        const int mu = mobius[d];
        if (mu == 0) continue;
        const i128 block = checked_pow(static_cast<i128>(height / d), static_cast<unsigned>(k));
        total = checked_add(total, mu > 0 ? block : -block);
    }
    return {height, static_cast<u128>(total), CountMethod::kMobiusFormula};
}

// sum_{n<=H} phi(n, H)^2, which counts triples (a_1,a_2,a_3) in [1,H]^3
// with gcd(a_1,a_2) = gcd(a_1,a_3) = 1 (a_1 playing the role of n).
inline CountResult sum_phi_partial_squared(std::uint64_t height, const SieveTables& tables) {
    if (height > tables.limit())
        throw std::range_error("sum_phi_partial_squared: height exceeds sieve limit");
    i128 total = 0;
    detail::MobiusExpansion expansion;
    for (std::uint64_t n = 1; n <= height; ++n) {
        expansion.load(n, tables);
        const auto v = static_cast<i128>(expansion.count_coprime_up_to(height));
        total = checked_add(total, checked_mul(v, v));
    }
    return {height, static_cast<u128>(total), CountMethod::kPhiSquareSum};
}

// #{(a_1,a_2,a_3) in [1,H]^3 pairwise coprime}. For each a_1 = n, a Mobius
// sum over the common divisor d of (a_2, a_3) - necessarily coprime to n -
// reduces the inner count to phi(n, floor(H/d))^2:
//
//   sum_{n<=H} sum_{d<=H, gcd(d,n)=1} mu(d) phi(n, floor(H/d))^2
//
// The d-loop walks floor(H/d) blocks so each distinct quotient costs one
// phi evaluation.
inline CountResult pairwise_coprime_triple_count(std::uint64_t height, const SieveTables& tables) {
    if (height > tables.limit())
        throw std::range_error("pairwise_coprime_triple_count: height exceeds sieve limit");
    const auto& mobius = tables.mobius_table();
    const auto& rad = tables.rad_table();

    i128 total = 0;
    detail::MobiusExpansion expansion;
    for (std::uint64_t n = 1; n <= height; ++n) {
        expansion.load(n, tables);
        const std::uint64_t rad_n = rad[n];

        i128 inner = 0;
        std::uint64_t d = 1;
        while (d <= height) {
            const std::uint64_t quotient = height / d;
            const std::uint64_t block_end = height / quotient;
            std::int64_t block_mu = 0;
            for (std::uint64_t t = d; t <= block_end; ++t) {
                const int mu = mobius[t];
                if (mu == 0 || std::gcd(t, rad_n) != 1) continue;
                block_mu += mu;
            }
            if (block_mu != 0) {
                const auto v = static_cast<i128>(expansion.count_coprime_up_to(quotient));
                inner = checked_add(inner, checked_mul(static_cast<i128>(block_mu), checked_mul(v, v)));
            }
            d = block_end + 1;
        }
        total = checked_add(total, inner);
    }
    return {height, static_cast<u128>(total), CountMethod::kTripleFormula};
}

// N_3(H): triples in [1,H]^3 with every pair sharing a common factor.
// Inclusion-exclusion over the coprime pairs:
//   H^3 - 3 H P_2(H) + 3 S_2(H) - T_3(H)
// with P_2 = coprime pairs, S_2 = sum phi(n,H)^2, T_3 = pairwise-coprime
// triples.
inline CountResult noncoprime_triple_count(std::uint64_t height, const SieveTables& tables) {
    if (height > tables.limit())
        throw std::range_error("noncoprime_triple_count: height exceeds sieve limit");
    if (height == 0) return {0, 0, CountMethod::kInclusionExclusion};

    const i128 h = static_cast<i128>(height);
    const i128 cube = checked_pow(h, 3);
    const auto pairs = static_cast<i128>(coprime_ktuple_count(height, 2, tables).count);
    const auto phi_sq = static_cast<i128>(sum_phi_partial_squared(height, tables).count);
    const auto triples = static_cast<i128>(pairwise_coprime_triple_count(height, tables).count);

    i128 total = checked_sub(cube, checked_mul(3, checked_mul(h, pairs)));
    total = checked_add(total, checked_mul(3, phi_sq));
    total = checked_sub(total, triples);
    if (total < 0) throw std::logic_error("noncoprime_triple_count: negative count");
    return {height, static_cast<u128>(total), CountMethod::kInclusionExclusion};
}

namespace detail {

// Edges incident to each vertex from lower-numbered vertices, so the
// odometer can reject a partial tuple as soon as a constraint fails.
struct EdgePlan {
    std::vector<std::vector<int>> lower;  // lower[j]: vertices i < j joined to j (0-based)

    explicit EdgePlan(const ConstraintGraph& graph)
        : lower(static_cast<std::size_t>(graph.arity())) {
        for (const auto& [a, b] : graph.edges())
            lower[static_cast<std::size_t>(b - 1)].push_back(a - 1);
    }
};

inline u128 brute_force_range(std::uint64_t height, const ConstraintGraph& graph,
                              const EdgePlan& plan, std::uint64_t first_lo,
                              std::uint64_t first_hi) {
    const int arity = graph.arity();
    const bool want_coprime = graph.mode() == EdgeMode::kAllCoprime;
    std::vector<std::uint64_t> values(static_cast<std::size_t>(arity), 0);

    u128 count = 0;
    int level = 0;
    values[0] = first_lo - 1;
    while (level >= 0) {
        const std::uint64_t hi = (level == 0) ? first_hi : height;
        ++values[static_cast<std::size_t>(level)];
        if (values[static_cast<std::size_t>(level)] > hi) {
            --level;
            continue;
        }
        bool ok = true;
        for (const int i : plan.lower[static_cast<std::size_t>(level)]) {
            const bool coprime =
                std::gcd(values[static_cast<std::size_t>(level)],
                         values[static_cast<std::size_t>(i)]) == 1;
            if (coprime != want_coprime) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (level == arity - 1) {
            ++count;
            continue;
        }
        ++level;
        values[static_cast<std::size_t>(level)] = 0;
    }
    return count;
}

}  // namespace detail

// Exhaustive count of tuples in [1,H]^arity satisfying the graph's edge
// constraints. The oracle every fast formula is checked against: plain
// nested enumeration with early rejection, nothing shared with the
// formula-based paths.
//
// Work is bounded up front: H^arity must not exceed `budget` tuple visits.
// With threads > 1 the first coordinate is split into contiguous chunks
// merged in chunk order, so the count is identical to the sequential run.
inline CountResult brute_force_count(std::uint64_t height, const ConstraintGraph& graph,
                                     std::uint64_t budget = 1'000'000'000,
                                     unsigned threads = 1) {
    if (height == 0) return {0, 0, CountMethod::kBruteForce};

    constexpr u128 kMax = ~u128{0};
    u128 required = 1;
    for (int i = 0; i < graph.arity(); ++i) {
        if (required > kMax / height) {
            required = kMax;
            break;
        }
        required *= height;
    }
    if (required > budget)
        throw budget_error(required > static_cast<u128>(UINT64_MAX)
                               ? UINT64_MAX
                               : static_cast<std::uint64_t>(required),
                           budget);

    const detail::EdgePlan plan(graph);
    if (threads <= 1 || height < 2 * threads) {
        return {height, detail::brute_force_range(height, graph, plan, 1, height),
                CountMethod::kBruteForce};
    }

    const std::uint64_t chunk = (height + threads - 1) / threads;
    std::vector<u128> partial(threads, 0);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t lo = 1 + w * chunk;
        const std::uint64_t hi = std::min(height, lo + chunk - 1);
        if (lo > height) break;
        workers.emplace_back([&, w, lo, hi] {
            partial[w] = detail::brute_force_range(height, graph, plan, lo, hi);
        });
    }
    for (auto& t : workers) t.join();
    u128 count = 0;
    for (const u128 c : partial) count += c;
    return {height, count, CountMethod::kBruteForce};
}

// sum_{n<=H} (phi(n)/n)^m in double precision, compensated. Monotone
// nondecreasing in H; every term lies in (0, 1].
inline double sum_phi_ratio_power(std::uint64_t height, int m, const SieveTables& tables) {
    if (m < 1) throw std::invalid_argument("sum_phi_ratio_power: m must be >= 1");
    if (height > tables.limit())
        throw std::range_error("sum_phi_ratio_power: height exceeds sieve limit");
    const auto& phi = tables.phi_table();
    CompensatedSum sum;
    for (std::uint64_t n = 1; n <= height; ++n)
        sum.add(powi(static_cast<double>(phi[n]) / static_cast<double>(n),
                     static_cast<unsigned>(m)));
    return sum.value();
}

// sum_{l<=H} m^omega(l), exact.
inline u128 sum_omega_power(std::uint64_t height, int m, const SieveTables& tables) {
    if (m < 2) throw std::invalid_argument("sum_omega_power: m must be >= 2");
    if (height > tables.limit())
        throw std::range_error("sum_omega_power: height exceeds sieve limit");
    const auto& omega = tables.omega_table();

    // omega(n) <= 9 for n <= 4e9; precompute the few powers that occur.
    std::vector<i128> powers;
    unsigned max_omega = 0;
    for (std::uint64_t n = 1; n <= height; ++n) max_omega = std::max<unsigned>(max_omega, omega[n]);
    powers.reserve(max_omega + 1);
    for (unsigned e = 0; e <= max_omega; ++e) powers.push_back(checked_pow(m, e));

    i128 total = 0;
    for (std::uint64_t n = 1; n <= height; ++n)
        total = checked_add(total, powers[omega[n]]);
    return static_cast<u128>(total);
}

}  // namespace copairs
