// Drives the copairs binary end to end. The binary path arrives as argv[1].

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only; stderr is dropped
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + "'" + g_binary + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {};
    RunResult result;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

TEST(Cli, CountN3SpecExample) {
    const auto r = run_cli("count n3 --height 3 --format json");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"count\":\"2\""), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("\"toolkit_version\":\"0.1.0\""), std::string::npos);
    ASSERT_FALSE(r.output.empty());
    EXPECT_EQ(r.output.back(), '\n');
}

TEST(Cli, RepeatInvocationsAreByteIdentical) {
    const auto a = run_cli("count n3 --height 10 --format json");
    const auto b = run_cli("count n3 --height 10 --format json");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
}

TEST(Cli, CountCsv) {
    const auto r = run_cli("count n3 --height 4 --format csv");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output, "height,count,method\n4,9,inclusion-exclusion\n");
}

TEST(Cli, CountGraphDefaultsToCompleteGraph) {
    const auto r = run_cli("count graph --height 4 --arity 3 --mode non-coprime");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"count\":\"9\""), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("\"method\":\"brute-force\""), std::string::npos);
}

TEST(Cli, CountBruteMatchesFastMethod) {
    const auto fast = run_cli("count phi-square-sum --height 2 --format json");
    const auto brute = run_cli("count phi-square-sum --height 2 --method brute --format json");
    EXPECT_EQ(fast.exit_code, 0);
    EXPECT_EQ(brute.exit_code, 0);
    EXPECT_NE(fast.output.find("\"count\":\"5\""), std::string::npos);
    EXPECT_NE(brute.output.find("\"count\":\"5\""), std::string::npos);
}

TEST(Cli, CountExplicitEdgeList) {
    const auto r =
        run_cli("count graph --height 2 --arity 3 --edges 1-2,1-3 --mode coprime");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"count\":\"5\""), std::string::npos) << r.output;
}

TEST(Cli, ConstantsZeta) {
    const auto r = run_cli("constants zeta --k 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"value\":1.2020569031595"), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("\"error_bound\":"), std::string::npos);
}

TEST(Cli, ConstantsSchurSmallTruncation) {
    const auto r = run_cli("constants schur --m 2 --truncation 100000");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"tail_bound\":"), std::string::npos);
    EXPECT_NE(r.output.find("\"lower\":"), std::string::npos);
}

// The headline constant through the real interface, default truncation.
TEST(Cli, ConstantsRhoRoundsToPaperValue) {
    const auto r = run_cli("constants rho --truncation 10000000");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"value\":0.1742"), std::string::npos) << r.output;
}

TEST(Cli, ConstantsRejectCsv) {
    EXPECT_EQ(run_cli("constants rho --truncation 100000 --format csv").exit_code, 2);
}

TEST(Cli, ScanNymannJson) {
    const auto r = run_cli("scan nymann --k 2 --heights 4 --format json");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"exact\":\"11\""), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("\"normalizer\":\"H*log(H)\""), std::string::npos);
}

TEST(Cli, ScanOmegaCsv) {
    const auto r = run_cli("scan omega --m 2 --heights 16,4 --format csv");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output.find("height,exact,main_term,raw_error,normalized_error\n"), 0u);
    EXPECT_NE(r.output.find("\n4,7,"), std::string::npos);  // sorted ascending
}

TEST(Cli, ScanRejectsHeightOneWhereNormalizerVanishes) {
    EXPECT_EQ(run_cli("scan omega --m 2 --heights 1").exit_code, 2);
}

TEST(Cli, VerifyPasses) {
    const auto r = run_cli("verify --max-height 12");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("verify: PASS"), std::string::npos) << r.output;
}

TEST(Cli, SampleSeededRunsAreByteIdentical) {
    const std::string args = "sample --arity 3 --range-max 1000 --samples 2000 --seed 42";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
    EXPECT_NE(a.output.find("\"estimate\":"), std::string::npos);
    EXPECT_NE(a.output.find("\"ci_halfwidth\":"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("count n3").exit_code, 2);  // missing --height
    EXPECT_EQ(run_cli("count n3 --height 4 --format yaml").exit_code, 2);
    EXPECT_EQ(run_cli("count n3 --height 4 --unknown-flag").exit_code, 2);
    EXPECT_EQ(run_cli("count graph --height 4 --arity 3 --mode sometimes").exit_code, 2);
    EXPECT_EQ(run_cli("count graph --height 4 --arity 3 --edges 1+2 --mode coprime").exit_code,
              2);
    EXPECT_EQ(run_cli("count graph --height 4 --arity 3 --edges 1-9 --mode coprime").exit_code,
              2);
}

TEST(Cli, ComputationErrorsExitOne) {
    EXPECT_EQ(run_cli("count graph --height 2000 --arity 3 --mode non-coprime "
                      "--budget 1000000")
                  .exit_code,
              1);
}

TEST(Cli, SieveLimitBelowRequestIsUsageError) {
    EXPECT_EQ(run_cli("count n3 --height 100 --sieve-limit 10").exit_code, 2);
}

TEST(Cli, EnvironmentVariablesActAsDefaults) {
    EXPECT_EQ(run_cli("count n3 --height 100", "COPAIRS_SIEVE_LIMIT=10 ").exit_code, 2);
    EXPECT_EQ(run_cli("count n3 --height 100", "COPAIRS_SIEVE_LIMIT=200 ").exit_code, 0);
    EXPECT_EQ(run_cli("count n3 --height 20 --method brute", "COPAIRS_THREADS=2 ").exit_code, 0);
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run_cli("--help").exit_code, 0);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_test <path-to-copairs-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
