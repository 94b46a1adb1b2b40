// copairs: exact counts of gcd-constrained tuples, certified Euler-product
// constants, asymptotic scans, and Monte Carlo density estimates, with
// machine-readable output.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "copairs/copairs.hpp"

namespace {

using copairs::ConstraintGraph;
using copairs::EdgeMode;
using copairs::JsonValue;
using copairs::SieveTables;

constexpr std::uint64_t kDefaultTruncation = 10'000'000;

struct GlobalOptions {
    std::uint64_t sieve_limit = 0;  // 0: derive from the request
    unsigned threads = 1;
};

// Sieve built once per process, sized to the request unless --sieve-limit
// overrides. A user-set limit smaller than the request is a usage error.
const SieveTables& sieve_for(std::uint64_t required, const GlobalOptions& global,
                             std::unique_ptr<SieveTables>& slot) {
    std::uint64_t limit = std::max<std::uint64_t>(required, 1);
    if (global.sieve_limit != 0) {
        if (global.sieve_limit < required)
            throw std::invalid_argument("--sieve-limit " + std::to_string(global.sieve_limit) +
                                        " is below the required limit " +
                                        std::to_string(required));
        limit = global.sieve_limit;
    }
    if (!slot || slot->limit() < limit) slot = std::make_unique<SieveTables>(limit);
    return *slot;
}

std::vector<std::uint64_t> parse_height_list(const std::string& text) {
    std::vector<std::uint64_t> heights;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            heights.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed height '" + item + "' in --heights");
        }
        pos = comma + 1;
    }
    if (heights.empty()) throw std::invalid_argument("--heights list is empty");
    return heights;
}

EdgeMode parse_mode(const std::string& mode) {
    if (mode == "coprime") return EdgeMode::kAllCoprime;
    if (mode == "non-coprime") return EdgeMode::kAllNonCoprime;
    throw std::invalid_argument("unknown --mode '" + mode + "' (coprime | non-coprime)");
}

ConstraintGraph graph_from_flags(int arity, const std::string& edges, const std::string& mode) {
    const EdgeMode m = parse_mode(mode);
    if (edges.empty()) return ConstraintGraph::complete(arity, m);
    return {arity, copairs::parse_edge_list(edges), m};
}

void emit(const std::string& text) { std::fwrite(text.data(), 1, text.size(), stdout); }

// --- count ---------------------------------------------------------------

struct CountArgs {
    std::string kind;
    std::uint64_t height = 0;
    int k = 2;
    std::string method = "fast";
    bool method_explicit = false;
    int arity = 3;
    std::string edges;
    std::string mode = "non-coprime";
    std::uint64_t budget = 1'000'000'000;
    std::string format = "json";
};

int run_count(const CountArgs& args, const GlobalOptions& global,
              std::unique_ptr<SieveTables>& sieve_slot) {
    copairs::CountResult result;
    if (args.kind == "graph") {
        // arbitrary graphs have no formula path; --method defaults to brute
        if (args.method_explicit && args.method == "fast")
            throw std::invalid_argument("count graph: only --method brute is available");
        result = copairs::brute_force_count(
            args.height, graph_from_flags(args.arity, args.edges, args.mode), args.budget,
            global.threads);
    } else if (args.method == "brute") {
        ConstraintGraph graph = [&]() -> ConstraintGraph {
            if (args.kind == "n3") return ConstraintGraph::complete(3, EdgeMode::kAllNonCoprime);
            if (args.kind == "phi-square-sum")
                return ConstraintGraph::star(3, EdgeMode::kAllCoprime);
            if (args.kind == "pairwise-coprime-triple")
                return ConstraintGraph::complete(3, EdgeMode::kAllCoprime);
            if (args.k != 2)
                throw std::invalid_argument(
                    "count coprime-ktuple: --method brute covers k = 2 only (joint gcd is "
                    "not an edge constraint)");
            return {2, {{1, 2}}, EdgeMode::kAllCoprime};
        }();
        result = copairs::brute_force_count(args.height, graph, args.budget, global.threads);
    } else {
        const SieveTables& tables = sieve_for(args.height, global, sieve_slot);
        if (args.kind == "n3")
            result = copairs::noncoprime_triple_count(args.height, tables);
        else if (args.kind == "coprime-ktuple")
            result = copairs::coprime_ktuple_count(args.height, args.k, tables);
        else if (args.kind == "phi-square-sum")
            result = copairs::sum_phi_partial_squared(args.height, tables);
        else  // pairwise-coprime-triple
            result = copairs::pairwise_coprime_triple_count(args.height, tables);
    }

    if (args.format == "csv") {
        emit(copairs::to_csv(result));
        return 0;
    }
    JsonValue params;
    params.set("kind", args.kind);
    params.set("height", args.height);
    if (args.kind == "coprime-ktuple") params.set("k", args.k);
    if (args.kind == "graph") {
        params.set("arity", args.arity);
        params.set("edges", args.edges.empty() ? "complete" : args.edges);
        params.set("mode", args.mode);
    }
    params.set("method", args.kind == "graph" ? "brute" : args.method);
    params.set("threads", static_cast<std::uint64_t>(global.threads));
    emit(copairs::output_record("count", std::move(params), copairs::to_json(result)));
    return 0;
}

// --- constants -------------------------------------------------------------

struct ConstantsArgs {
    std::string which;
    int k = 2;
    int m = 2;
    std::uint64_t truncation = kDefaultTruncation;
    std::string format = "json";
};

int run_constants(const ConstantsArgs& args, const GlobalOptions& global,
                  std::unique_ptr<SieveTables>& sieve_slot) {
    JsonValue params;
    params.set("which", args.which);
    JsonValue results;
    if (args.which == "zeta") {
        params.set("k", args.k);
        results = copairs::to_json(copairs::zeta(args.k));
    } else {
        const SieveTables& tables = sieve_for(args.truncation, global, sieve_slot);
        if (args.which == "rho") {
            results = copairs::to_json(copairs::rho(args.truncation, tables));
        } else if (args.which == "theta") {
            params.set("k", args.k);
            results = copairs::to_json(copairs::theta(args.k, args.truncation, tables));
        } else {  // schur
            params.set("m", args.m);
            results = copairs::to_json(copairs::schur_constant(args.m, args.truncation, tables));
        }
        params.set("truncation", args.truncation);
    }
    emit(copairs::output_record("constants", std::move(params), std::move(results)));
    return 0;
}

// --- scan --------------------------------------------------------------

struct ScanArgs {
    std::string which;
    std::string heights;
    int m = 2;
    int k = 2;
    std::string format = "json";
};

int run_scan(const ScanArgs& args, const GlobalOptions& global,
             std::unique_ptr<SieveTables>& sieve_slot) {
    const std::vector<std::uint64_t> heights = parse_height_list(args.heights);
    std::uint64_t max_height = 0;
    for (const std::uint64_t h : heights) max_height = std::max(max_height, h);

    // theorem1/lemma1 main terms need Euler products at the default
    // truncation, so the sieve must reach it.
    const bool needs_constants = args.which == "theorem1" || args.which == "lemma1";
    const SieveTables& tables = sieve_for(
        needs_constants ? std::max(max_height, kDefaultTruncation) : max_height, global,
        sieve_slot);

    copairs::AsymptoticReport report;
    JsonValue params;
    params.set("which", args.which);
    params.set("heights", args.heights);
    if (args.which == "theorem1") {
        report = copairs::scan_noncoprime_triples(heights, tables,
                                                  copairs::rho(kDefaultTruncation, tables));
    } else if (args.which == "lemma1") {
        params.set("m", args.m);
        report = copairs::scan_totient_ratio_mean(
            args.m, heights, tables, copairs::schur_constant(args.m, kDefaultTruncation, tables));
    } else if (args.which == "nymann") {
        params.set("k", args.k);
        report = copairs::scan_coprime_ktuples(args.k, heights, tables);
    } else {  // omega
        params.set("m", args.m);
        report = copairs::scan_omega_power_growth(args.m, heights, tables);
    }

    if (args.format == "csv") {
        emit(copairs::to_csv(report));
        return 0;
    }
    emit(copairs::output_record("scan", std::move(params), copairs::to_json(report)));
    return 0;
}

// --- verify ----------------------------------------------------------------

int run_verify(std::uint64_t max_height, std::uint64_t budget, const GlobalOptions& global,
               std::unique_ptr<SieveTables>& sieve_slot) {
    const SieveTables& tables = sieve_for(max_height, global, sieve_slot);
    const copairs::VerifyResult result =
        copairs::verify_fast_vs_brute(max_height, tables, budget, global.threads);
    for (const auto& check : result.checks) {
        if (check.passed) {
            std::printf("check %s: OK (H=1..%llu)\n", check.name.c_str(),
                        static_cast<unsigned long long>(check.max_height));
        } else {
            std::printf("check %s: FAIL (%zu mismatches)\n", check.name.c_str(),
                        check.failures.size());
            for (const auto& f : check.failures) std::printf("  %s\n", f.c_str());
        }
    }
    std::printf("verify: %s (4 checks, H=1..%llu)\n", result.passed() ? "PASS" : "FAIL",
                static_cast<unsigned long long>(max_height));
    return result.passed() ? 0 : 1;
}

// --- sample ----------------------------------------------------------------

struct SampleArgs {
    int arity = 3;
    std::string edges;
    std::string mode = "non-coprime";
    std::uint64_t range_max = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
};

int run_sample(const SampleArgs& args) {
    const ConstraintGraph graph = graph_from_flags(args.arity, args.edges, args.mode);
    const copairs::DensityEstimate estimate =
        copairs::monte_carlo_density(graph, args.range_max, args.samples, args.seed);

    JsonValue params;
    params.set("arity", args.arity);
    params.set("edges", args.edges.empty() ? "complete" : args.edges);
    params.set("mode", args.mode);
    params.set("range_max", args.range_max);
    params.set("samples", args.samples);
    params.set("seed", args.seed);
    emit(copairs::output_record("sample", std::move(params), copairs::to_json(estimate)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"copairs: exact gcd-constrained tuple counting and certified constants"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--sieve-limit", global.sieve_limit,
                   "sieve table size (default: sized to the request)")
        ->envname("COPAIRS_SIEVE_LIMIT");
    app.add_option("--threads", global.threads, "worker cap for brute-force counting")
        ->envname("COPAIRS_THREADS")
        ->check(CLI::Range(1u, 256u));

    CountArgs count_args;
    CLI::App* count = app.add_subcommand("count", "exact tuple counts");
    count->add_option("kind", count_args.kind, "what to count")
        ->required()
        ->check(CLI::IsMember(
            {"n3", "coprime-ktuple", "phi-square-sum", "pairwise-coprime-triple", "graph"}));
    count->add_option("--height", count_args.height, "range bound H")->required();
    count->add_option("--k", count_args.k, "tuple arity for coprime-ktuple");
    count->add_option("--method", count_args.method)->check(CLI::IsMember({"fast", "brute"}));
    count->add_option("--arity", count_args.arity, "graph arity");
    count->add_option("--edges", count_args.edges, "edge list i-j,i-j,... (default: complete)");
    count->add_option("--mode", count_args.mode)->check(CLI::IsMember({"coprime", "non-coprime"}));
    count->add_option("--budget", count_args.budget, "brute-force tuple budget");
    count->add_option("--format", count_args.format)->check(CLI::IsMember({"json", "csv"}));

    ConstantsArgs constants_args;
    CLI::App* constants = app.add_subcommand("constants", "certified constants");
    constants->add_option("which", constants_args.which)
        ->required()
        ->check(CLI::IsMember({"rho", "theta", "schur", "zeta"}));
    constants->add_option("--k", constants_args.k, "k for theta/zeta");
    constants->add_option("--m", constants_args.m, "m for schur");
    constants->add_option("--truncation", constants_args.truncation, "truncation prime");
    constants->add_option("--format", constants_args.format)->check(CLI::IsMember({"json"}));

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "asymptotic error reports");
    scan->add_option("which", scan_args.which)
        ->required()
        ->check(CLI::IsMember({"theorem1", "lemma1", "nymann", "omega"}));
    scan->add_option("--heights", scan_args.heights, "comma-separated heights")->required();
    scan->add_option("--m", scan_args.m);
    scan->add_option("--k", scan_args.k);
    scan->add_option("--format", scan_args.format)->check(CLI::IsMember({"json", "csv"}));

    std::uint64_t verify_max_height = 0;
    std::uint64_t verify_budget = 1'000'000'000;
    CLI::App* verify = app.add_subcommand("verify", "fast vs brute-force equivalence");
    verify->add_option("--max-height", verify_max_height)->required();
    verify->add_option("--budget", verify_budget, "brute-force tuple budget");

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand("sample", "Monte Carlo density estimate");
    sample->add_option("--arity", sample_args.arity)->required();
    sample->add_option("--edges", sample_args.edges, "edge list (default: complete)");
    sample->add_option("--mode", sample_args.mode)->check(CLI::IsMember({"coprime", "non-coprime"}));
    sample->add_option("--range-max", sample_args.range_max)->required();
    sample->add_option("--samples", sample_args.samples)->required();
    sample->add_option("--seed", sample_args.seed);
    sample->add_option("--format", sample_args.format)->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    count_args.method_explicit = count->count("--method") > 0;

    std::unique_ptr<SieveTables> sieve_slot;
    try {
        if (count->parsed()) return run_count(count_args, global, sieve_slot);
        if (constants->parsed()) return run_constants(constants_args, global, sieve_slot);
        if (scan->parsed()) return run_scan(scan_args, global, sieve_slot);
        if (verify->parsed())
            return run_verify(verify_max_height, verify_budget, global, sieve_slot);
        if (sample->parsed()) return run_sample(sample_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
