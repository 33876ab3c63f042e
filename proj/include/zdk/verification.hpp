#pragma once

// Formula-vs-solver comparison grids and cardinality bound checks.
//
// A suite expands into instances (one ring each) and checks (one prediction
// at one k). Each distinct (instance, k) is solved once by a worker pool and
// every check on it becomes one VerificationRecord.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "zdk/alliance.hpp"
#include "zdk/error.hpp"
#include "zdk/formulas.hpp"
#include "zdk/graph.hpp"
#include "zdk/ring.hpp"
#include "zdk/ring_expr.hpp"

namespace zdk {

enum class Status { Match, WithinBounds, Mismatch, Skipped };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Match: return "MATCH";
        case Status::WithinBounds: return "WITHIN_BOUNDS";
        case Status::Mismatch: return "MISMATCH";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

inline Status status_from_string(const std::string& s) {
    if (s == "MATCH") return Status::Match;
    if (s == "WITHIN_BOUNDS") return Status::WithinBounds;
    if (s == "MISMATCH") return Status::Mismatch;
    if (s == "SKIPPED") return Status::Skipped;
    throw InvalidParameter("unknown status '" + s + "'");
}

inline bool is_pass(Status s) { return s == Status::Match || s == Status::WithinBounds; }

struct VerificationRecord {
    std::string family;
    std::vector<long long> params;  ///< numeric sort key
    std::string params_text;        ///< e.g. "p=3 n=2"
    std::string ring;
    std::size_t vertices = 0;
    std::optional<long long> k;     ///< absent for whole-ring checks
    std::string check;              ///< "gamma", "gamma_a", "bound_A", ...
    FormulaPrediction predicted;
    std::optional<long long> observed;  ///< solver size, or |Z(R)| for bound checks
    bool infeasible = false;
    std::optional<long long> gamma;     ///< solver size at k, when known
    Status status = Status::Skipped;
    std::string reason;             ///< vertex_cap, order_cap, budget, out_of_range, no_graph
    std::uint64_t nodes = 0;
    double millis = 0;
    std::optional<long long> a_k, b_k, c_k;
};

/// Deterministic status from a prediction and an observation.
inline Status derive_status(const FormulaPrediction& p, std::optional<long long> observed, bool infeasible) {
    if (p.kind == PredictionKind::OutOfStatedRange) return Status::Skipped;
    if (!observed && !infeasible) return Status::Skipped;
    if (infeasible) return Status::Mismatch;
    if (p.kind == PredictionKind::ExactValue) return *observed == p.value() ? Status::Match : Status::Mismatch;
    return (p.lower <= *observed && *observed <= p.upper) ? Status::WithinBounds : Status::Mismatch;
}

inline bool record_less(const VerificationRecord& a, const VerificationRecord& b) {
    // Whole-ring checks (no k) sort after the per-k rows of the same instance.
    auto key = [](const VerificationRecord& r) {
        return std::make_tuple(std::cref(r.family), std::cref(r.params), std::cref(r.ring), !r.k.has_value(),
                               r.k.value_or(0), std::cref(r.check));
    };
    return key(a) < key(b);
}

// ---------------------------------------------------------------------------
// Suite configuration
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"tables", "zpn",     "fields", "z2z2F",
                                                   "z2FK",   "z2local", "bounds", "known_graphs"};
    return names;
}

struct SuiteConfig {
    std::string suite;
    std::vector<std::string> grid;  ///< empty = the suite's default grid
    std::size_t max_vertices = 36;
    std::uint64_t node_budget = 200'000'000;
    long long time_budget_ms = 120'000;
    std::size_t jobs = 1;
    std::size_t order_cap = kDefaultOrderCap;
    std::string csv_path, md_path, json_path;

    void validate() const {
        if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
            throw InvalidParameter("unknown suite '" + suite + "'");
        if (max_vertices == 0 || jobs == 0 || order_cap == 0) throw InvalidParameter("caps must be positive");
        if (time_budget_ms < 0) throw InvalidParameter("time_budget_ms must be >= 0");
    }
};

namespace detail {

inline std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

inline long long parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw InvalidParameter(what + ": '" + s + "' is not an integer");
    }
    if (used != s.size()) throw InvalidParameter(what + ": '" + s + "' is not an integer");
    return v;
}

/// "3 4" or "3,4" -> {3, 4}.
inline std::vector<long long> parse_tuple(const std::string& entry, std::size_t arity) {
    std::string s = entry;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::vector<long long> out;
    std::string tok;
    while (is >> tok) out.push_back(parse_int(tok, "grid entry"));
    if (out.size() != arity)
        throw InvalidParameter("grid entry '" + entry + "' needs " + std::to_string(arity) + " integers");
    return out;
}

}  // namespace detail

/// Parse a key=value suite file. '#' starts a comment; grid entries are
/// separated by ';' (ring expressions may contain commas).
inline SuiteConfig parse_suite_config(std::istream& in) {
    SuiteConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        auto positive = [&](const std::string& what) {
            const long long v = detail::parse_int(val, what);
            if (v <= 0) throw InvalidParameter(what + " must be positive");
            return static_cast<std::size_t>(v);
        };
        if (key == "suite") c.suite = val;
        else if (key == "grid") c.grid = detail::split(val, ';');
        else if (key == "max_vertices") c.max_vertices = positive(key);
        else if (key == "node_budget") c.node_budget = static_cast<std::uint64_t>(detail::parse_int(val, key));
        else if (key == "time_budget_ms") c.time_budget_ms = detail::parse_int(val, key);
        else if (key == "jobs") c.jobs = positive(key);
        else if (key == "order_cap") c.order_cap = positive(key);
        else if (key == "csv") c.csv_path = val;
        else if (key == "md") c.md_path = val;
        else if (key == "json") c.json_path = val;
        else throw InvalidParameter("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    c.validate();
    return c;
}

inline SuiteConfig load_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open suite config " + path);
    return parse_suite_config(in);
}

// ---------------------------------------------------------------------------
// Cardinality bounds
// ---------------------------------------------------------------------------

/// Bound rows for one ring from its spectrum over [-Delta, delta]: one
/// bound_A row per feasible k (|Z(R)| <= A_k), then bound_min_A and, for
/// local rings, local_bound_BC. |Z(R)| counts 0.
inline std::vector<VerificationRecord> check_cardinality_bounds(const FiniteRing& r,
                                                                const std::map<long long, AllianceSolution>& spec,
                                                                const std::string& family = "bounds",
                                                                std::vector<long long> params = {},
                                                                const std::string& params_text = "") {
    const auto z = static_cast<long long>(zero_divisors(r).size());
    const bool local = local_structure(r).has_value();
    std::vector<VerificationRecord> out;
    std::optional<long long> min_a, min_b, min_c;

    auto base = [&] {
        VerificationRecord rec;
        rec.family = family;
        rec.params = params;
        rec.params_text = params_text;
        rec.ring = r.name();
        rec.vertices = static_cast<std::size_t>(z - 1);
        rec.observed = z;
        return rec;
    };

    for (const auto& [k, sol] : spec) {
        if (!sol.feasible()) continue;
        const auto g = static_cast<long long>(sol.size);
        const long long a = bound_Ak(g, k);
        const BoundsBC bc = bound_Bk_Ck(g, k);
        min_a = std::min(min_a.value_or(a), a);
        min_b = std::min(min_b.value_or(bc.b), bc.b);
        min_c = std::min(min_c.value_or(bc.c), bc.c);

        VerificationRecord rec = base();
        rec.k = k;
        rec.check = "bound_A";
        rec.predicted = FormulaPrediction::bounds(1, std::max(1LL, a), "bound:A_k");
        rec.gamma = g;
        rec.a_k = a;
        if (local) {
            rec.b_k = bc.b;
            rec.c_k = bc.c;
        }
        rec.nodes = sol.nodes_explored;
        rec.millis = static_cast<double>(sol.elapsed.count()) / 1000.0;
        // A_k can fall below 1 only if the bound is violated; keep the raw comparison.
        rec.status = a < z ? Status::Mismatch : Status::WithinBounds;
        out.push_back(std::move(rec));
    }
    if (min_a) {
        VerificationRecord rec = base();
        rec.check = "bound_min_A";
        rec.predicted = FormulaPrediction::bounds(1, std::max(1LL, *min_a), "bound:min_A");
        rec.a_k = *min_a;
        rec.status = *min_a < z ? Status::Mismatch : Status::WithinBounds;
        out.push_back(std::move(rec));
    }
    if (local && min_b) {
        VerificationRecord rec = base();
        rec.check = "local_bound_BC";
        const long long bound = std::max(*min_b, *min_c);
        rec.predicted = FormulaPrediction::bounds(1, std::max(1LL, bound), "bound:max_min_BC");
        rec.b_k = *min_b;
        rec.c_k = *min_c;
        rec.status = bound < z ? Status::Mismatch : Status::WithinBounds;
        out.push_back(std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace detail {

struct Check {
    long long k;
    std::string name;
    FormulaPrediction prediction;
};

struct Instance {
    std::string family;
    std::vector<long long> params;
    std::string params_text;
    std::string ring_text;
    std::string skip_reason;
    std::optional<FiniteRing> ring;
    std::optional<ZdGraph> graph;
    bool local = false;
    bool bounds_suite = false;  ///< solve [-Delta, delta] and emit bound rows instead of checks
    std::vector<Check> checks;
};

inline std::string gf_text(long long q) { return "GF(" + std::to_string(q) + ")"; }

/// Build ring and graph; on failure record why the instance is skipped.
inline void materialize(Instance& in, const SuiteConfig& cfg) {
    try {
        in.ring = parse_ring(in.ring_text, cfg.order_cap);
        in.local = local_structure(*in.ring).has_value();
        in.graph = build_graph(*in.ring);
        if (in.graph->vertex_count() > cfg.max_vertices) {
            in.skip_reason = "vertex_cap: " + std::to_string(in.graph->vertex_count()) + " > " +
                             std::to_string(cfg.max_vertices);
        }
    } catch (const CapacityError& e) {
        in.skip_reason = std::string("order_cap: ") + e.what();
    } catch (const NoGraphError& e) {
        in.skip_reason = std::string("no_graph: ") + e.what();
    }
}

inline long long delta_of(const Instance& in) {
    return in.graph ? static_cast<long long>(in.graph->max_degree()) : 0;
}

/// Adds one "gamma" check per k in [-Delta, Delta] using `predict`.
template <class Predict>
void add_gamma_checks(Instance& in, Predict predict) {
    if (!in.graph) return;
    const long long d = delta_of(in);
    for (long long k = -d; k <= d; ++k) in.checks.push_back({k, "gamma", predict(k)});
}

inline std::vector<std::vector<long long>> numeric_grid(const SuiteConfig& cfg, std::size_t arity,
                                                        std::vector<std::vector<long long>> fallback) {
    if (cfg.grid.empty()) return fallback;
    std::vector<std::vector<long long>> out;
    for (const auto& e : cfg.grid) out.push_back(parse_tuple(e, arity));
    return out;
}

inline std::vector<std::string> ring_grid(const SuiteConfig& cfg, std::vector<std::string> fallback) {
    return cfg.grid.empty() ? fallback : cfg.grid;
}

inline const std::vector<std::pair<std::string, std::vector<long long>>>& reference_spectra() {
    // Values of gamma_k^d for k = -Delta .. delta.
    static const std::vector<std::pair<std::string, std::vector<long long>>> t = {
        {"Z12", {2, 2, 2, 3, 4, 5}},
        {"Z2 x Z4", {2, 2, 2, 3, 4}},
        {"Z9", {1, 2, 2}},
        {"Z8", {1, 2, 2, 3}},
    };
    return t;
}

inline std::vector<Instance> expand_suite(const SuiteConfig& cfg) {
    std::vector<Instance> out;
    const std::string& s = cfg.suite;
    auto push = [&](std::string family, std::vector<long long> params, std::string params_text, std::string ring_text) {
        Instance in;
        in.family = std::move(family);
        in.params = std::move(params);
        in.params_text = std::move(params_text);
        in.ring_text = std::move(ring_text);
        materialize(in, cfg);
        return &out.emplace_back(std::move(in));
    };

    if (s == "tables") {
        if (!cfg.grid.empty()) throw InvalidParameter("suite 'tables' has a fixed grid");
        long long idx = 0;
        for (const auto& [ring, values] : reference_spectra()) {
            Instance* in = push("tables", {idx++}, "ring=" + ring, ring);
            if (!in->graph) continue;
            const long long d = delta_of(*in);
            if (static_cast<long long>(values.size()) != d + static_cast<long long>(in->graph->min_degree()) + 1)
                throw InternalError("reference spectrum length does not match the graph of " + ring);
            for (std::size_t i = 0; i < values.size(); ++i)
                in->checks.push_back({-d + static_cast<long long>(i), "gamma",
                                      FormulaPrediction::exact(values[i], "reference_table")});
        }
    } else if (s == "zpn") {
        for (const auto& t : numeric_grid(cfg, 2, {{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}})) {
            const long long p = t[0], n = t[1];
            if (!is_prime(static_cast<std::uint64_t>(p)) || n < 2) throw InvalidParameter("zpn needs prime p, n >= 2");
            Instance* in = push("zpn", t, "p=" + std::to_string(p) + " n=" + std::to_string(n),
                                 "Z" + std::to_string(detail::ipow(p, n)));
            add_gamma_checks(*in, [&](long long k) { return predict_zpn(p, n, k); });
        }
    } else if (s == "fields") {
        for (const auto& t : numeric_grid(cfg, 2, {{2, 3}, {2, 4}, {2, 5}, {2, 7}, {3, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 7}})) {
            const long long f = t[0], q = t[1];
            if (f < 2 || q < f) throw InvalidParameter("fields needs 2 <= |F| <= |K|");
            Instance* in = push("fields", t, "F=" + std::to_string(f) + " K=" + std::to_string(q),
                                 gf_text(f) + " x " + gf_text(q));
            add_gamma_checks(*in, [&](long long k) { return predict_two_fields(f, q, k); });
            in->checks.push_back({-1, "gamma_a", FormulaPrediction::exact(closed_form_two_fields(f, q, AllianceVariant::Global),
                                                                           "closed_form:gamma_a")});
            in->checks.push_back({0, "gamma_a_hat",
                                  FormulaPrediction::exact(closed_form_two_fields(f, q, AllianceVariant::GlobalStrong),
                                                           "closed_form:gamma_a_hat")});
        }
    } else if (s == "z2z2F") {
        for (const auto& t : numeric_grid(cfg, 1, {{2}, {3}, {4}, {5}})) {
            const long long f = t[0];
            Instance* in = push("z2z2F", t, "F=" + std::to_string(f), "Z2 x Z2 x " + gf_text(f));
            add_gamma_checks(*in, [&](long long k) { return predict_z2z2F(f, k); });
        }
    } else if (s == "z2FK") {
        for (const auto& t : numeric_grid(cfg, 2, {{3, 3}, {3, 4}, {3, 5}, {4, 5}})) {
            const long long f = t[0], q = t[1];
            if (f < 3 || q < f) throw InvalidParameter("z2FK needs 3 <= |F| <= |K|");
            Instance* in = push("z2FK", t, "F=" + std::to_string(f) + " K=" + std::to_string(q),
                                 "Z2 x " + gf_text(f) + " x " + gf_text(q));
            add_gamma_checks(*in, [&](long long k) { return predict_z2FK(f, q, k); });
        }
    } else if (s == "z2local") {
        long long idx = 0;
        for (const auto& rt : ring_grid(cfg, {"Z4", "Id(Z2,1)", "Z8", "Z9", "Id(Z3,1)", "Z25", "Z27"})) {
            // Parameters come from the ring structure, never from the solver.
            FiniteRing r = parse_ring(rt, cfg.order_cap);
            auto ls = local_structure(r);
            if (!ls || is_field(r)) throw InvalidParameter("z2local needs a local ring that is not a field: " + rt);
            const auto ro = static_cast<long long>(r.order());
            const auto zo = static_cast<long long>(ls->maximal_ideal.size());
            const bool idx2 = ls->nilpotency_index == 2;
            Instance* in = push("z2local",
                                 {ro, zo, idx++},
                                 "R=" + rt + " r=" + std::to_string(ro) + " z=" + std::to_string(zo) +
                                     " index2=" + (idx2 ? "1" : "0"),
                                 "Z2 x " + rt);
            add_gamma_checks(*in, [&](long long k) { return predict_z2_local(ro, zo, idx2, k); });
        }
    } else if (s == "bounds") {
        long long idx = 0;
        for (const auto& rt : ring_grid(cfg, {"Z12", "Z2 x Z4", "Z9", "Z8", "Z6", "Z16", "Z18", "Z20", "Z25", "Z27",
                                              "Z2 x Z2 x Z2", "Z3 x Z3", "Id(Z2,2)", "Z2 x Id(Z2,1)"})) {
            Instance* in = push("bounds", {idx++}, "ring=" + rt, rt);
            in->bounds_suite = true;
        }
    } else if (s == "known_graphs") {
        // Complete graphs from Id(Z_p, n) and stars / complete bipartite graphs from field products.
        for (const auto& t : numeric_grid(cfg, 2, {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2},
                                                   {2, 4}, {3, 3}})) {
            const long long p = t[0], n = t[1];
            const long long q = detail::ipow(p, n);
            Instance* in = push("known_graphs", {0, p, n}, "complete p=" + std::to_string(p) + " n=" + std::to_string(n),
                                 "Id(Z" + std::to_string(p) + "," + std::to_string(n) + ")");
            add_gamma_checks(*in, [&](long long k) { return predict_complete(q - 1, k); });
        }
        if (cfg.grid.empty()) {
            for (auto [f, q] : std::vector<std::pair<long long, long long>>{{2, 3}, {2, 4}, {2, 5}, {2, 7}, {3, 3},
                                                                             {3, 4}, {3, 5}, {4, 5}, {5, 7}}) {
                Instance* in = push("known_graphs", {1, f, q},
                                     "bipartite r=" + std::to_string(f - 1) + " s=" + std::to_string(q - 1),
                                     gf_text(f) + " x " + gf_text(q));
                if (!in->graph) continue;
                const long long r = f - 1, sz = q - 1;
                in->checks.push_back({-1, "gamma_a",
                                      FormulaPrediction::exact(predict_star_bipartite(r, sz, AllianceVariant::Global),
                                                               "star_bipartite:gamma_a")});
                in->checks.push_back({0, "gamma_a_hat",
                                      FormulaPrediction::exact(predict_star_bipartite(r, sz, AllianceVariant::GlobalStrong),
                                                               "star_bipartite:gamma_a_hat")});
            }
        }
    } else {
        throw InvalidParameter("unknown suite '" + s + "'");
    }
    return out;
}

struct Task {
    std::size_t instance;
    long long k;
};

struct TaskResult {
    std::optional<AllianceSolution> solution;
    std::string skip_reason;
};

}  // namespace detail

/// Expand, solve and compare. Every (instance, check) yields one record;
/// instances over the vertex cap and budget exhaustion become SKIPPED rows.
inline std::vector<VerificationRecord> run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    std::vector<detail::Instance> instances = detail::expand_suite(cfg);

    SolveOptions opt;
    opt.node_budget = cfg.node_budget;
    opt.time_budget = std::chrono::milliseconds(cfg.time_budget_ms);

    // Distinct (instance, k) pairs that need the solver.
    std::vector<detail::Task> tasks;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& in = instances[i];
        if (!in.skip_reason.empty() || !in.graph) continue;
        std::vector<long long> ks;
        if (in.bounds_suite) {
            for (long long k = -detail::delta_of(in); k <= static_cast<long long>(in.graph->min_degree()); ++k)
                ks.push_back(k);
        } else {
            for (const auto& c : in.checks)
                if (c.prediction.kind != PredictionKind::OutOfStatedRange) ks.push_back(c.k);
        }
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        for (long long k : ks) tasks.push_back({i, k});
    }

    std::vector<detail::TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            const auto& task = tasks[t];
            try {
                results[t].solution = solve({*instances[task.instance].graph, task.k}, opt);
            } catch (const BudgetExceeded& e) {
                results[t].skip_reason = std::string("budget: ") + e.what();
            }
        }
    };
    const std::size_t nthreads = std::min(cfg.jobs, std::max<std::size_t>(tasks.size(), 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < nthreads; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::map<std::pair<std::size_t, long long>, const detail::TaskResult*> by_key;
    for (std::size_t t = 0; t < tasks.size(); ++t) by_key[{tasks[t].instance, tasks[t].k}] = &results[t];

    std::vector<VerificationRecord> out;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& in = instances[i];
        auto base = [&] {
            VerificationRecord rec;
            rec.family = in.family;
            rec.params = in.params;
            rec.params_text = in.params_text;
            rec.ring = in.ring ? in.ring->name() : in.ring_text;
            rec.vertices = in.graph ? in.graph->vertex_count() : 0;
            return rec;
        };

        if (in.bounds_suite) {
            if (!in.skip_reason.empty()) {
                VerificationRecord rec = base();
                rec.check = "bound_min_A";
                rec.predicted = FormulaPrediction::out_of_range("bound:min_A");
                rec.status = Status::Skipped;
                rec.reason = in.skip_reason;
                out.push_back(std::move(rec));
                continue;
            }
            std::map<long long, AllianceSolution> spec;
            std::string budget_reason;
            for (long long k = -detail::delta_of(in); k <= static_cast<long long>(in.graph->min_degree()); ++k) {
                const auto* r = by_key.at({i, k});
                if (r->solution) spec.emplace(k, *r->solution);
                else budget_reason = r->skip_reason;
            }
            if (!budget_reason.empty()) {
                VerificationRecord rec = base();
                rec.check = "bound_min_A";
                rec.predicted = FormulaPrediction::out_of_range("bound:min_A");
                rec.status = Status::Skipped;
                rec.reason = budget_reason;
                out.push_back(std::move(rec));
                continue;
            }
            for (auto& rec : check_cardinality_bounds(*in.ring, spec, in.family, in.params, in.params_text))
                out.push_back(std::move(rec));
            continue;
        }

        if (!in.skip_reason.empty() && in.checks.empty()) {
            VerificationRecord rec = base();
            rec.check = "gamma";
            rec.predicted = FormulaPrediction::out_of_range(in.family);
            rec.status = Status::Skipped;
            rec.reason = in.skip_reason;
            out.push_back(std::move(rec));
            continue;
        }
        for (const auto& c : in.checks) {
            VerificationRecord rec = base();
            rec.k = c.k;
            rec.check = c.name;
            rec.predicted = c.prediction;
            if (!in.skip_reason.empty()) {
                rec.status = Status::Skipped;
                rec.reason = in.skip_reason;
            } else if (c.prediction.kind == PredictionKind::OutOfStatedRange) {
                rec.status = Status::Skipped;
                rec.reason = "out_of_range";
            } else {
                const auto* r = by_key.at({i, c.k});
                if (!r->solution) {
                    rec.status = Status::Skipped;
                    rec.reason = r->skip_reason;
                } else {
                    const AllianceSolution& sol = *r->solution;
                    rec.nodes = sol.nodes_explored;
                    rec.millis = static_cast<double>(sol.elapsed.count()) / 1000.0;
                    rec.infeasible = !sol.feasible();
                    if (sol.feasible()) {
                        const auto g = static_cast<long long>(sol.size);
                        rec.observed = g;
                        rec.gamma = g;
                        rec.a_k = bound_Ak(g, c.k);
                        if (in.local) {
                            const BoundsBC bc = bound_Bk_Ck(g, c.k);
                            rec.b_k = bc.b;
                            rec.c_k = bc.c;
                        }
                    }
                    rec.status = derive_status(rec.predicted, rec.observed, rec.infeasible);
                }
            }
            out.push_back(std::move(rec));
        }
    }
    std::stable_sort(out.begin(), out.end(), record_less);
    return out;
}

struct SuiteSummary {
    std::size_t match = 0, within = 0, mismatch = 0, skipped = 0;
    std::size_t budget_skips = 0;
};

inline SuiteSummary summarize(const std::vector<VerificationRecord>& records) {
    SuiteSummary s;
    for (const auto& r : records) {
        switch (r.status) {
            case Status::Match: ++s.match; break;
            case Status::WithinBounds: ++s.within; break;
            case Status::Mismatch: ++s.mismatch; break;
            case Status::Skipped:
                ++s.skipped;
                if (r.reason.rfind("budget", 0) == 0) ++s.budget_skips;
                break;
        }
    }
    return s;
}

}  // namespace zdk
