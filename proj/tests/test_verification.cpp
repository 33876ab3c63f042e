#include <gtest/gtest.h>

#include <sstream>

#include "zdk/report.hpp"
#include "zdk/verification.hpp"

using namespace zdk;

namespace {

SuiteConfig config(const std::string& suite) {
    SuiteConfig c;
    c.suite = suite;
    return c;
}

std::string csv_without_millis(const std::vector<VerificationRecord>& records) {
    std::istringstream in(render_csv(records));
    std::string line, out;
    while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
}

}  // namespace

TEST(DeriveStatus, Rules) {
    const auto ex = FormulaPrediction::exact(3, "t");
    const auto bd = FormulaPrediction::bounds(2, 4, "t");
    const auto oor = FormulaPrediction::out_of_range("t");
    EXPECT_EQ(derive_status(ex, 3, false), Status::Match);
    EXPECT_EQ(derive_status(ex, 4, false), Status::Mismatch);
    EXPECT_EQ(derive_status(ex, std::nullopt, true), Status::Mismatch);
    EXPECT_EQ(derive_status(bd, 2, false), Status::WithinBounds);
    EXPECT_EQ(derive_status(bd, 4, false), Status::WithinBounds);
    EXPECT_EQ(derive_status(bd, 5, false), Status::Mismatch);
    EXPECT_EQ(derive_status(oor, 3, false), Status::Skipped);
    EXPECT_EQ(derive_status(ex, std::nullopt, false), Status::Skipped);
}

TEST(RunSuite, TablesReproduceAllEighteenRows) {
    const auto records = run_suite(config("tables"));
    ASSERT_EQ(records.size(), 18u);
    for (const auto& r : records) EXPECT_EQ(r.status, Status::Match) << r.ring << " k=" << *r.k;
    std::map<std::string, int> per_ring;
    for (const auto& r : records) ++per_ring[r.ring];
    EXPECT_EQ(per_ring["Z12"], 6);
    EXPECT_EQ(per_ring["Z2 x Z4"], 5);
    EXPECT_EQ(per_ring["Z9"], 3);
    EXPECT_EQ(per_ring["Z8"], 4);
}

TEST(RunSuite, ZpnHasNoMismatch) {
    auto c = config("zpn");
    c.grid = {"2 3", "2 4", "3 2", "3 3", "5 2", "7 2"};
    const auto records = run_suite(c);
    const auto s = summarize(records);
    EXPECT_EQ(s.mismatch, 0u);
    EXPECT_GT(s.match, 0u);
    for (const auto& r : records)
        if (r.status == Status::Skipped) {
            EXPECT_EQ(r.reason, "out_of_range");
        }
}

TEST(RunSuite, FormulaSuitesHaveNoMismatch) {
    for (const auto& suite : {"z2z2F", "z2FK", "z2local", "known_graphs", "bounds"}) {
        const auto s = summarize(run_suite(config(suite)));
        EXPECT_EQ(s.mismatch, 0u) << suite;
        EXPECT_EQ(s.budget_skips, 0u) << suite;
    }
}

TEST(RunSuite, FieldsMismatchesAreOnlyTheStrongAllianceClosedForm) {
    const auto records = run_suite(config("fields"));
    std::vector<std::string> mismatched;
    for (const auto& r : records) {
        if (r.check == "gamma") {
            EXPECT_NE(r.status, Status::Mismatch) << r.ring << " k=" << *r.k;
        }
        if (r.status == Status::Mismatch) mismatched.push_back(r.ring + ":" + r.check);
    }
    EXPECT_EQ(mismatched, (std::vector<std::string>{"GF(2) x GF(3):gamma_a_hat", "GF(2) x GF(5):gamma_a_hat",
                                                    "GF(2) x GF(7):gamma_a_hat"}));
}

TEST(RunSuite, VertexCapProducesSkippedRows) {
    auto c = config("zpn");
    c.grid = {"3 4"};
    c.max_vertices = 10;
    const auto records = run_suite(c);
    ASSERT_FALSE(records.empty());
    for (const auto& r : records) {
        EXPECT_EQ(r.status, Status::Skipped);
        EXPECT_EQ(r.reason.rfind("vertex_cap", 0), 0u) << r.reason;
    }
}

TEST(RunSuite, BudgetProducesSkippedRows) {
    auto c = config("z2local");
    c.grid = {"Z27"};
    c.node_budget = 5;
    const auto s = summarize(run_suite(c));
    EXPECT_GT(s.budget_skips, 0u);
    EXPECT_EQ(s.mismatch, 0u);
}

TEST(RunSuite, OrderCapProducesSkippedRows) {
    auto c = config("z2z2F");
    c.grid = {"5"};
    c.order_cap = 16;
    const auto records = run_suite(c);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].reason.rfind("order_cap", 0), 0u);
}

TEST(RunSuite, ReproducibleAcrossWorkerCounts) {
    auto one = config("z2FK");
    auto four = config("z2FK");
    four.jobs = 4;
    EXPECT_EQ(csv_without_millis(run_suite(one)), csv_without_millis(run_suite(four)));
}

TEST(RunSuite, UnknownSuiteRejected) {
    EXPECT_THROW(run_suite(config("nope")), InvalidParameter);
    auto c = config("tables");
    c.grid = {"Z4"};
    EXPECT_THROW(run_suite(c), InvalidParameter);
}

TEST(RunSuite, BoundsOnZ12) {
    auto c = config("bounds");
    c.grid = {"Z12"};
    const auto records = run_suite(c);
    long long min_a = 0;
    for (const auto& r : records) {
        EXPECT_EQ(r.observed, 8);
        EXPECT_NE(r.status, Status::Mismatch);
        if (r.check == "bound_min_A") min_a = *r.a_k;
    }
    EXPECT_EQ(min_a, 9);
}

TEST(CheckCardinalityBounds, LocalRingsMeetTheMaxMinBound) {
    auto bc_record = [](const std::string& spec) {
        const FiniteRing r = parse_ring(spec);
        const ZdGraph g = build_graph(r);
        std::map<long long, AllianceSolution> spec_results;
        for (long long k = -static_cast<long long>(g.max_degree()); k <= static_cast<long long>(g.min_degree()); ++k)
            spec_results.emplace(k, solve({g, k}));
        for (const auto& rec : check_cardinality_bounds(r, spec_results))
            if (rec.check == "local_bound_BC") return rec;
        return VerificationRecord{};
    };
    const auto z9 = bc_record("Z9");
    EXPECT_EQ(z9.b_k, 3);
    EXPECT_EQ(z9.c_k, 2);
    EXPECT_EQ(z9.predicted.upper, 3);
    EXPECT_EQ(z9.observed, 3);

    const auto z8 = bc_record("Z8");
    EXPECT_EQ(z8.b_k, 4);
    EXPECT_EQ(z8.c_k, 4);
    EXPECT_EQ(z8.observed, 4);
}

TEST(CheckCardinalityBounds, NonLocalRingHasOnlyAkRows) {
    const FiniteRing r = parse_ring("Z2 x Z4");
    const ZdGraph g = build_graph(r);
    std::map<long long, AllianceSolution> s;
    for (long long k = -3; k <= 1; ++k) s.emplace(k, solve({g, k}));
    const auto rows = check_cardinality_bounds(r, s);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows.back().check, "bound_min_A");
    EXPECT_EQ(rows.back().a_k, 7);
    EXPECT_EQ(rows.back().observed, 6);
    for (const auto& row : rows) EXPECT_FALSE(row.b_k);
}

TEST(SuiteConfigFile, ParsesKeys) {
    std::istringstream in(
        "# comment\n"
        "suite = z2local\n"
        "grid = Z4; Id(Z2,1) ; Z9\n"
        "max_vertices = 20\n"
        "node_budget = 1000\n"
        "time_budget_ms = 500\n"
        "jobs = 3\n"
        "csv = out.csv  # trailing comment\n");
    const SuiteConfig c = parse_suite_config(in);
    EXPECT_EQ(c.suite, "z2local");
    EXPECT_EQ(c.grid, (std::vector<std::string>{"Z4", "Id(Z2,1)", "Z9"}));
    EXPECT_EQ(c.max_vertices, 20u);
    EXPECT_EQ(c.node_budget, 1000u);
    EXPECT_EQ(c.time_budget_ms, 500);
    EXPECT_EQ(c.jobs, 3u);
    EXPECT_EQ(c.csv_path, "out.csv");
}

TEST(SuiteConfigFile, RejectsBadInput) {
    std::istringstream unknown("suite = zpn\ncolour = blue\n");
    EXPECT_THROW(parse_suite_config(unknown), InvalidParameter);
    std::istringstream zero("suite = zpn\njobs = 0\n");
    EXPECT_THROW(parse_suite_config(zero), InvalidParameter);
    std::istringstream no_eq("suite zpn\n");
    EXPECT_THROW(parse_suite_config(no_eq), InvalidParameter);
    std::istringstream bad_suite("suite = everything\n");
    EXPECT_THROW(parse_suite_config(bad_suite), InvalidParameter);
    auto c = config("zpn");
    c.grid = {"2"};
    EXPECT_THROW(run_suite(c), InvalidParameter);
}
