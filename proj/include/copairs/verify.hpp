#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copairs/exact_counts.hpp"
#include "copairs/graph.hpp"
#include "copairs/int128.hpp"
#include "copairs/sieve.hpp"

namespace copairs {

// One fast-formula-vs-brute-force comparison over a height range.
struct VerifyCheck {
    std::string name;
    std::uint64_t max_height = 0;
    bool passed = true;
    std::vector<std::string> failures;  // one message per mismatching height
};

struct VerifyResult {
    std::uint64_t max_height = 0;
    std::vector<VerifyCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Exhaustive equivalence of the four fast counts against the brute-force
// oracle for every H in 1..max_height:
//
//   coprime pairs        vs  single-edge coprime graph
//   sum phi(n,H)^2       vs  star graph 1-2, 1-3, coprime
//   pairwise-coprime     vs  K3 coprime
//   N_3                  vs  K3 non-coprime
inline VerifyResult verify_fast_vs_brute(std::uint64_t max_height, const SieveTables& tables,
                                         std::uint64_t budget = 1'000'000'000,
                                         unsigned threads = 1) {
    const ConstraintGraph pair_graph(2, {{1, 2}}, EdgeMode::kAllCoprime);
    const ConstraintGraph star_graph = ConstraintGraph::star(3, EdgeMode::kAllCoprime);
    const ConstraintGraph triangle_coprime = ConstraintGraph::complete(3, EdgeMode::kAllCoprime);
    const ConstraintGraph triangle_noncoprime =
        ConstraintGraph::complete(3, EdgeMode::kAllNonCoprime);

    VerifyResult result;
    result.max_height = max_height;
    result.checks = {
        {"coprime-pairs vs brute", max_height, true, {}},
        {"phi-square-sum vs brute", max_height, true, {}},
        {"pairwise-coprime-triples vs brute", max_height, true, {}},
        {"n3 vs brute", max_height, true, {}},
    };

    for (std::uint64_t h = 1; h <= max_height; ++h) {
        const u128 fast[4] = {
            coprime_ktuple_count(h, 2, tables).count,
            sum_phi_partial_squared(h, tables).count,
            pairwise_coprime_triple_count(h, tables).count,
            noncoprime_triple_count(h, tables).count,
        };
        const u128 brute[4] = {
            brute_force_count(h, pair_graph, budget, threads).count,
            brute_force_count(h, star_graph, budget, threads).count,
            brute_force_count(h, triangle_coprime, budget, threads).count,
            brute_force_count(h, triangle_noncoprime, budget, threads).count,
        };
        for (int i = 0; i < 4; ++i) {
            if (fast[i] != brute[i]) {
                result.checks[static_cast<std::size_t>(i)].passed = false;
                result.checks[static_cast<std::size_t>(i)].failures.push_back(
                    "H=" + std::to_string(h) + ": fast " + to_decimal(fast[i]) + " != brute " +
                    to_decimal(brute[i]));
            }
        }
    }
    return result;
}

}  // namespace copairs
