#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "copairs/constants.hpp"
#include "copairs/exact_counts.hpp"
#include "copairs/graph.hpp"
#include "copairs/int128.hpp"
#include "copairs/numeric.hpp"
#include "copairs/sieve.hpp"

namespace copairs {

// Error normalizers used to validate growth bounds empirically. Natural
// logarithms throughout; O-notation is base-agnostic so this only rescales
// the recorded constants.
enum class NormalizerKind {
    kHeightSqLogSq,        // H^2 (ln H)^2
    kLogPowM,              // (ln H)^m
    kHeightLog,            // H ln H
    kHeightPowKMinus1,     // H^(k-1)
    kHeightLogPowMMinus1,  // H (ln H)^(m-1)
};

inline std::string to_string(NormalizerKind kind) {
    switch (kind) {
        case NormalizerKind::kHeightSqLogSq: return "H^2*log(H)^2";
        case NormalizerKind::kLogPowM: return "log(H)^m";
        case NormalizerKind::kHeightLog: return "H*log(H)";
        case NormalizerKind::kHeightPowKMinus1: return "H^(k-1)";
        case NormalizerKind::kHeightLogPowMMinus1: return "H*log(H)^(m-1)";
    }
    return "unknown";
}

struct ReportRow {
    std::uint64_t height = 0;
    bool exact_is_count = true;  // integer count vs real-valued sum
    u128 exact_count = 0;
    double exact_sum = 0.0;
    double main_term = 0.0;
    double raw_error = 0.0;         // exact - main_term
    double normalized_error = 0.0;  // |raw_error| / normalizer(H)

    double exact_as_double() const {
        return exact_is_count ? to_double(exact_count) : exact_sum;
    }
};

struct AsymptoticReport {
    NormalizerKind normalizer_kind = NormalizerKind::kHeightSqLogSq;
    std::vector<ReportRow> rows;  // sorted by height ascending
};

struct DensityEstimate {
    ConstraintGraph graph;
    std::uint64_t range_max = 1;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double ci_halfwidth = 0.0;  // 95% normal approximation
    std::uint64_t seed = 0;
};

namespace detail {

// Heights sorted ascending, deduplicated, each checked against the sieve
// and against min_height (normalizers vanishing at H = 1 reject it).
inline std::vector<std::uint64_t> prepare_heights(std::vector<std::uint64_t> heights,
                                                  const SieveTables& tables,
                                                  std::uint64_t min_height) {
    if (heights.empty()) throw std::invalid_argument("scan: empty height list");
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
    for (const std::uint64_t h : heights) {
        if (h < min_height)
            throw std::invalid_argument("scan: height " + std::to_string(h) +
                                        " rejected (normalizer vanishes below " +
                                        std::to_string(min_height) + ")");
        if (h > tables.limit())
            throw std::range_error("scan: height " + std::to_string(h) +
                                   " exceeds sieve limit");
    }
    return heights;
}

inline ReportRow make_count_row(std::uint64_t height, u128 exact, double main_term,
                                double normalizer) {
    ReportRow row;
    row.height = height;
    row.exact_is_count = true;
    row.exact_count = exact;
    row.main_term = main_term;
    row.raw_error = to_double(exact) - main_term;
    row.normalized_error = std::abs(row.raw_error) / normalizer;
    return row;
}

}  // namespace detail

// N_3(H) against rho H^3, error normalized by H^2 (ln H)^2.
inline AsymptoticReport scan_noncoprime_triples(std::vector<std::uint64_t> heights,
                                                const SieveTables& tables,
                                                const EulerProductValue& rho_value) {
    AsymptoticReport report{NormalizerKind::kHeightSqLogSq, {}};
    for (const std::uint64_t h : detail::prepare_heights(std::move(heights), tables, 2)) {
        const u128 exact = noncoprime_triple_count(h, tables).count;
        const double hd = static_cast<double>(h);
        const double log_h = std::log(hd);
        report.rows.push_back(detail::make_count_row(
            h, exact, rho_value.value * powi(hd, 3), hd * hd * log_h * log_h));
    }
    return report;
}

// sum (phi(n)/n)^m against A_m H, error normalized by (ln H)^m.
inline AsymptoticReport scan_totient_ratio_mean(int m, std::vector<std::uint64_t> heights,
                                                const SieveTables& tables,
                                                const EulerProductValue& schur_m) {
    if (m < 2) throw std::invalid_argument("scan: m must be >= 2");
    AsymptoticReport report{NormalizerKind::kLogPowM, {}};
    for (const std::uint64_t h : detail::prepare_heights(std::move(heights), tables, 2)) {
        ReportRow row;
        row.height = h;
        row.exact_is_count = false;
        row.exact_sum = sum_phi_ratio_power(h, m, tables);
        row.main_term = schur_m.value * static_cast<double>(h);
        row.raw_error = row.exact_sum - row.main_term;
        row.normalized_error =
            std::abs(row.raw_error) / powi(std::log(static_cast<double>(h)),
                                           static_cast<unsigned>(m));
        report.rows.push_back(row);
    }
    return report;
}

// Coprime k-tuples against H^k / zeta(k). The normalizer is H ln H for
// k = 2 (which rejects H = 1) and H^(k-1) otherwise (H = 1 allowed).
inline AsymptoticReport scan_coprime_ktuples(int k, std::vector<std::uint64_t> heights,
                                             const SieveTables& tables) {
    if (k < 2 || k > 4) throw std::invalid_argument("scan: k must be in 2..4");
    const ZetaValue zk = zeta(k);
    const bool pair_case = k == 2;
    AsymptoticReport report{
        pair_case ? NormalizerKind::kHeightLog : NormalizerKind::kHeightPowKMinus1, {}};
    for (const std::uint64_t h :
         detail::prepare_heights(std::move(heights), tables, pair_case ? 2 : 1)) {
        const u128 exact = coprime_ktuple_count(h, k, tables).count;
        const double hd = static_cast<double>(h);
        const double normalizer = pair_case ? hd * std::log(hd)
                                            : powi(hd, static_cast<unsigned>(k - 1));
        report.rows.push_back(detail::make_count_row(
            h, exact, powi(hd, static_cast<unsigned>(k)) / zk.value, normalizer));
    }
    return report;
}

// sum m^omega(l) as a pure upper-bound check: main term 0, ratio against
// H (ln H)^(m-1).
inline AsymptoticReport scan_omega_power_growth(int m, std::vector<std::uint64_t> heights,
                                                const SieveTables& tables) {
    if (m < 2) throw std::invalid_argument("scan: m must be >= 2");
    AsymptoticReport report{NormalizerKind::kHeightLogPowMMinus1, {}};
    for (const std::uint64_t h : detail::prepare_heights(std::move(heights), tables, 2)) {
        ReportRow row;
        row.height = h;
        row.exact_is_count = true;
        row.exact_count = sum_omega_power(h, m, tables);
        row.main_term = 0.0;
        row.raw_error = to_double(row.exact_count);
        const double hd = static_cast<double>(h);
        row.normalized_error =
            row.raw_error / (hd * powi(std::log(hd), static_cast<unsigned>(m - 1)));
        report.rows.push_back(row);
    }
    return report;
}

namespace detail {

// Uniform draw from [1, span] by rejection, so every value is equally
// likely regardless of span.
inline std::uint64_t uniform_in_range(std::mt19937_64& rng, std::uint64_t span) {
    const std::uint64_t threshold = (-span) % span;  // 2^64 mod span
    std::uint64_t r;
    do {
        r = rng();
    } while (r < threshold);
    return 1 + (r - threshold) % span;
}

}  // namespace detail

// Samples `samples` tuples uniformly from [1, range_max]^arity with a
// seeded mt19937_64 and reports the hit fraction with a 95% normal CI.
// Identical seed, identical output.
inline DensityEstimate monte_carlo_density(const ConstraintGraph& graph,
                                           std::uint64_t range_max, std::uint64_t samples,
                                           std::uint64_t seed) {
    if (range_max < 1) throw std::invalid_argument("monte_carlo_density: range_max must be >= 1");
    if (samples < 1) throw std::invalid_argument("monte_carlo_density: samples must be >= 1");

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(graph.arity()), 1);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        if (range_max > 1)
            for (auto& v : tuple) v = detail::uniform_in_range(rng, range_max);
        if (graph.satisfied_by(tuple)) ++hits;
    }

    const double estimate = static_cast<double>(hits) / static_cast<double>(samples);
    const double ci =
        1.96 * std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(samples));
    return {graph, range_max, samples, hits, estimate, ci, seed};
}

}  // namespace copairs
