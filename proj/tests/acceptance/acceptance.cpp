// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "zdk/zdk.hpp"

using namespace zdk;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimitTables = 1.0;
constexpr double kLimitZpn = 120.0;
constexpr double kLimitFields = 60.0;
constexpr double kLimitZ2Z2F = 30.0;
constexpr double kLimitZ2FK = 600.0;
constexpr double kLimitZ2Local = 600.0;
constexpr double kLimitBounds = 600.0;
constexpr double kLimitOracle = 600.0;
constexpr double kLimitStructure = 120.0;

constexpr std::size_t kOracleVertexLimit = 22;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void info(const std::string& what) { notes.push_back("info: " + what); }
};

std::vector<VerificationRecord> suite(const std::string& name, std::vector<std::string> grid = {}) {
    SuiteConfig c;
    c.suite = name;
    c.grid = std::move(grid);
    c.jobs = 4;
    return run_suite(c);
}

std::string describe(const VerificationRecord& r) {
    std::string s = r.ring + " " + r.check;
    if (r.k) s += " k=" + std::to_string(*r.k);
    s += " predicted=" + std::to_string(r.predicted.lower);
    if (r.predicted.kind == PredictionKind::Bounds) s += ".." + std::to_string(r.predicted.upper);
    s += " solved=" + (r.infeasible ? std::string("INFEASIBLE") : std::to_string(r.observed.value_or(-1)));
    s += " status=" + to_string(r.status);
    if (!r.reason.empty()) s += " (" + r.reason + ")";
    return s;
}

// Every exact prediction matches, every bound holds, and nothing was skipped
// except rows outside the stated k range.
void require_suite_clean(Outcome& o, const std::vector<VerificationRecord>& recs, bool allow_budget_skips = false) {
    o.require(!recs.empty(), "suite produced records");
    std::size_t budget = 0;
    for (const auto& r : recs) {
        if (r.status == Status::Mismatch) o.require(false, describe(r));
        if (r.status == Status::Skipped && r.reason != "out_of_range") {
            if (allow_budget_skips && r.reason.rfind("budget", 0) == 0) {
                ++budget;
                o.info("skipped " + describe(r));
            } else {
                o.require(false, "unexpected skip " + describe(r));
            }
        }
    }
    const auto s = summarize(recs);
    o.info(std::to_string(s.match) + " match, " + std::to_string(s.within) + " within bounds, " +
           std::to_string(s.skipped) + " skipped (" + std::to_string(budget) + " on budget)");
}

ZdGraph graph_of(const std::string& spec) { return build_graph(parse_ring(spec)); }

std::string describe_set(const ZdGraph& g, const VertexSet& s) {
    std::string out = "{";
    s.for_each([&](std::size_t v) { out += (out.size() > 1 ? ", " : "") + g.label(v); });
    return out + "}";
}

Outcome criterion_tables() {
    Outcome o;
    const auto recs = suite("tables");
    o.require(recs.size() == 18, "18 table rows, got " + std::to_string(recs.size()));
    for (const auto& r : recs) o.require(r.status == Status::Match, describe(r));
    return o;
}

Outcome criterion_zpn() {
    Outcome o;
    const std::vector<std::string> grid = {"2 3", "2 4", "3 2", "3 3", "5 2", "7 2", "3 4"};
    const auto recs = suite("zpn", grid);
    require_suite_clean(o, recs);
    std::map<std::string, std::size_t> matched;
    std::size_t largest = 0;
    for (const auto& r : recs) {
        if (r.status == Status::Match) ++matched[r.ring];
        largest = std::max(largest, r.vertices);
    }
    for (const char* ring : {"Z8", "Z16", "Z9", "Z27", "Z25", "Z49", "Z81"})
        o.require(matched[ring] > 0, std::string("exact rows for ") + ring);
    o.require(largest == 26, "largest graph has 26 vertices, got " + std::to_string(largest));
    return o;
}

Outcome criterion_fields() {
    Outcome o;
    const auto recs = suite("fields");
    require_suite_clean(o, recs);
    std::size_t closed_form_rows = 0;
    for (const auto& r : recs) {
        if (r.check != "gamma") ++closed_form_rows;
        // Record the value the closed form would need to print for the failing rows.
        if (r.check == "gamma_a_hat" && r.status == Status::Mismatch)
            o.info(r.ring + ": solver gives " + std::to_string(*r.observed) + ", ceil((|F|-1)/2) + ceil((|K|-1)/2) = " +
                   std::to_string(predict_star_bipartite(r.params[0] - 1, r.params[1] - 1, AllianceVariant::GlobalStrong)));
    }
    o.require(closed_form_rows == 18, "gamma_a and gamma_a_hat rows for all 9 pairs");
    return o;
}

Outcome criterion_z2z2F() {
    Outcome o;
    const auto recs = suite("z2z2F");
    require_suite_clean(o, recs);
    std::size_t largest = 0;
    for (const auto& r : recs) largest = std::max(largest, r.vertices);
    o.require(largest == 15, "largest graph has 15 vertices, got " + std::to_string(largest));
    return o;
}

Outcome criterion_z2FK() {
    Outcome o;
    const auto recs = suite("z2FK");
    require_suite_clean(o, recs, true);
    std::size_t largest = 0;
    for (const auto& r : recs) largest = std::max(largest, r.vertices);
    o.require(largest == 27, "largest graph has 27 vertices, got " + std::to_string(largest));
    return o;
}

Outcome criterion_z2local() {
    Outcome o;
    const auto recs = suite("z2local");
    require_suite_clean(o, recs);
    std::map<std::string, std::size_t> pinned;
    for (const auto& r : recs) {
        if (r.k && *r.k >= -1 && *r.k <= 1) {
            o.require(r.predicted.is_exact() && r.status == Status::Match, describe(r));
            ++pinned[r.ring];
        }
    }
    o.require(pinned.size() == 7, "k in {-1,0,1} checked for all 7 rings");
    // Z25 is the only ring with M^2 = 0 and |M| >= 4.
    bool index2_seen = false;
    for (const auto& r : recs)
        if (r.ring == "Z2 x Z25" && r.k && *r.k >= 5 - 2 * 5 && *r.k <= -2) {
            index2_seen = true;
            o.require(r.status == Status::Match, describe(r));
        }
    o.require(index2_seen, "Z2 x Z25 index-2 interval rows present");
    for (const char* spec : {"Z2 x Z9", "Z2 x Id(Z3,1)"}) {
        const ZdGraph g = graph_of(spec);
        for (auto [k, v] : std::vector<std::pair<long long, std::size_t>>{{-5, 3}, {0, 5}, {1, 7}}) {
            const auto s = solve({g, k});
            o.require(s.feasible() && s.size == v, std::string(spec) + " k=" + std::to_string(k) + " gives " +
                                                       std::to_string(v));
        }
    }
    return o;
}

Outcome criterion_bounds() {
    Outcome o;
    const auto recs = suite("bounds");
    require_suite_clean(o, recs);
    std::map<std::string, long long> min_a, max_min_bc, observed;
    for (const auto& r : recs) {
        if (r.check == "bound_min_A") min_a[r.ring] = *r.a_k;
        if (r.check == "local_bound_BC") max_min_bc[r.ring] = r.predicted.upper;
        observed[r.ring] = r.observed.value_or(-1);
    }
    o.require(min_a["Z12"] == 9, "min A_k for Z12 is 9, got " + std::to_string(min_a["Z12"]));
    o.require(min_a["Z2 x Z4"] == 7, "min A_k for Z2 x Z4 is 7, got " + std::to_string(min_a["Z2 x Z4"]));
    o.require(max_min_bc["Z9"] == 3 && observed["Z9"] == 3, "local bound for Z9 is 3 with equality");
    o.require(max_min_bc["Z8"] == 4 && observed["Z8"] == 4, "local bound for Z8 is 4 with equality");

    // Common-neighbour refinement at k = -1 on Z2 x Z4 for the set {(1,0),(1,2)}.
    const ZdGraph g = graph_of("Z2 x Z4");
    const long long k = -1;
    const auto gamma = static_cast<long long>(solve({g, k}).size);
    auto lambda_of = [&](const VertexSet& s) {
        VertexSet common = g.all();
        s.for_each([&](std::size_t x) { common &= g.neighbors(x); });
        return static_cast<long long>((common & s.complement()).count());
    };
    const VertexSet stated = g.set_of({"(1,0)", "(1,2)"});
    const long long refined = bound_Ak(gamma, k, lambda_of(stated));
    o.require(refined == 6, "refined bound from {(1,0),(1,2)} is 6, got " + std::to_string(refined));
    o.require(refined >= static_cast<long long>(zero_divisors(parse_ring("Z2 x Z4")).size()), "refined bound >= |Z(R)|");
    o.info(std::string("{(1,0),(1,2)} is a global defensive (-1)-alliance: ") +
           (is_global_defensive_k_alliance(g, stated, k) ? "yes" : "no"));
    const auto opt = solve({g, k});
    o.info("solver witness " + describe_set(g, opt.witness) + " has |Lambda| = " + std::to_string(lambda_of(opt.witness)) +
           ", refined bound " + std::to_string(bound_Ak(gamma, k, lambda_of(opt.witness))));
    return o;
}

Outcome criterion_oracle() {
    Outcome o;
    const std::vector<std::string> corpus = {
        "Z4", "Z6", "Z8", "Z9", "Z10", "Z12", "Z14", "Z15", "Z16", "Z18", "Z20", "Z21", "Z22", "Z24", "Z25", "Z26",
        "Z27", "Z32", "Z49", "Z2 x Z4", "Z2 x Z8", "Z2 x Z9", "Z3 x Z4", "Z2 x Z2 x Z2", "Z2 x Z2 x Z3",
        "Z2 x Z2 x GF(4)", "Z2 x Z2 x GF(5)", "Z2 x Z3 x Z3", "GF(4) x GF(5)", "GF(5) x GF(7)", "GF(8) x GF(9)",
        "GF(2) x GF(4)", "GF(3) x GF(7)", "Id(Z2,1)", "Id(Z2,2)", "Id(Z2,3)", "Id(Z3,1)", "Id(Z3,2)", "Id(Z5,1)",
        "Id(Z4,1)", "Z2 x Id(Z2,1)", "Z2 x Id(Z3,1)", "Z4 x Z4", "Z2 x Z2 x Z2 x Z2", "GF(4) x GF(4)"};
    std::size_t graphs = 0, solves = 0;
    for (const auto& spec : corpus) {
        const ZdGraph g = graph_of(spec);
        if (g.vertex_count() > kOracleVertexLimit) continue;
        ++graphs;
        const std::size_t dom = domination_number(g).size;
        const auto d = static_cast<long long>(g.max_degree());
        std::optional<std::size_t> prev;
        for (long long k = -d; k <= d; ++k) {
            const auto fast = solve({g, k});
            const auto slow = oracle_solve({g, k});
            ++solves;
            o.require(fast.verdict == slow.verdict && fast.size == slow.size, spec + " k=" + std::to_string(k));
            if (!fast.feasible()) continue;
            o.require(fast.size >= dom, spec + " gamma_k >= gamma(G) at k=" + std::to_string(k));
            if (prev) o.require(fast.size >= *prev, spec + " monotone at k=" + std::to_string(k));
            prev = fast.size;
        }
    }
    o.info(std::to_string(graphs) + " graphs, " + std::to_string(solves) + " (graph, k) pairs");
    return o;
}

bool is_complete_bipartite(const ZdGraph& g, std::size_t r, std::size_t s) {
    if (g.vertex_count() != r + s || g.edge_count() != r * s) return false;
    // A 2-colouring with parts of sizes r and s where all cross pairs are edges.
    std::vector<int> side(g.vertex_count(), -1);
    side[0] = 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v) side[v] = g.adjacent(0, v) ? 1 : 0;
    std::size_t left = 0;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        if (side[a] == 0) ++left;
        for (Vertex b = a + 1; b < g.vertex_count(); ++b)
            if (g.adjacent(a, b) != (side[a] != side[b])) return false;
    }
    return (left == r && g.vertex_count() - left == s) || (left == s && g.vertex_count() - left == r);
}

Outcome criterion_structure() {
    Outcome o;
    const std::vector<long long> fields = {2, 3, 4, 5, 7, 8, 9};
    for (long long f : fields)
        for (long long q : fields) {
            if (q < f) continue;
            const std::string spec = "GF(" + std::to_string(f) + ") x GF(" + std::to_string(q) + ")";
            o.require(is_complete_bipartite(graph_of(spec), f - 1, q - 1), spec + " is K_{|F|-1,|K|-1}");
            if (f == 2) {
                const std::string z2 = "Z2 x GF(" + std::to_string(q) + ")";
                o.require(is_complete_bipartite(graph_of(z2), 1, q - 1), z2 + " is a star");
            }
        }
    std::size_t rings = 0;
    for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
        for (long long n = 1; detail::ipow(p, n) <= 27; ++n) {
            const long long q = detail::ipow(p, n);
            const std::string spec = "Id(Z" + std::to_string(p) + "," + std::to_string(n) + ")";
            const ZdGraph g = graph_of(spec);
            const auto v = static_cast<std::size_t>(q - 1);
            o.require(g.vertex_count() == v && g.edge_count() == v * (v - 1) / 2, spec + " is complete on p^n-1 vertices");
            ++rings;
            for (long long k = -(q - 2); k <= q - 2; ++k) {
                const auto s = solve({g, k});
                o.require(s.feasible() && static_cast<long long>(s.size) == ceil_half(q + k),
                          spec + " gamma_k = ceil((p^n+k)/2) at k=" + std::to_string(k));
            }
        }
    o.info(std::to_string(rings) + " idealizations with p^n <= 27");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "reference spectra of Z12, Z2 x Z4, Z9, Z8", kLimitTables, criterion_tables},
        {2, "Z_{p^n} closed form", kLimitZpn, criterion_zpn},
        {3, "F x K closed form and gamma_a / gamma_a_hat values", kLimitFields, criterion_fields},
        {4, "Z2 x Z2 x F closed form", kLimitZ2Z2F, criterion_z2z2F},
        {5, "Z2 x F x K closed form", kLimitZ2FK, criterion_z2FK},
        {6, "Z2 x local ring cases, tables and bounds", kLimitZ2Local, criterion_z2local},
        {7, "cardinality bounds A_k, B_k, C_k and the common-neighbour refinement", kLimitBounds, criterion_bounds},
        {8, "solver equals brute-force oracle, monotone spectra", kLimitOracle, criterion_oracle},
        {9, "complete / bipartite / star structure and complete-graph spectra", kLimitStructure, criterion_structure},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        char timing[96];
        std::snprintf(timing, sizeof timing, "%.3fs of %.0fs", secs, c.limit_s);
        o.require(secs < c.limit_s, std::string("time ") + timing);
        std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << timing
                  << ")\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
        std::cout << std::flush;
        if (!o.ok) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : std::string("all criteria passed\n"));
    return failed ? 1 : 0;
}
