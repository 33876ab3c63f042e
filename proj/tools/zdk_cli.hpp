#pragma once

// zdk command line: ring-info, graph-export, solve, spectrum, verify, report.
// run() takes arguments without the program name and writes to the given
// streams so tests can drive it directly.
//
// Exit codes: 0 success, 1 usage or input error, 2 mismatch, 3 budget
// exhausted before a decision.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdk/zdk.hpp"

namespace zdk::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kUnknown = 3 };

/// ZDK_ORDER_CAP overrides the default ring order cap.
inline std::size_t order_cap_from_env() {
    const char* v = std::getenv("ZDK_ORDER_CAP");
    if (!v || !*v) return kDefaultOrderCap;
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (*end != '\0' || cap == 0) throw InvalidParameter(std::string("ZDK_ORDER_CAP must be a positive integer, got '") + v + "'");
    return static_cast<std::size_t>(cap);
}

inline std::string witness_text(const ZdGraph& g, const VertexSet& w) {
    std::string out = "{";
    bool first = true;
    w.for_each([&](std::size_t v) {
        if (!first) out += ", ";
        out += g.label(v);
        first = false;
    });
    return out + "}";
}

inline nlohmann::json witness_json(const ZdGraph& g, const VertexSet& w) {
    nlohmann::json arr = nlohmann::json::array();
    w.for_each([&](std::size_t v) { arr.push_back(g.label(v)); });
    return arr;
}

namespace detail {

struct Options {
    std::string spec;
    bool json = false;

    std::string format = "dot";
    std::string output;

    long long k = 0;
    bool witness = false;
    bool oracle = false;
    std::uint64_t budget = 0;
    long long time_budget_ms = 0;

    std::string suite;
    std::string config;
    std::size_t jobs = 0;
    std::string csv, md, json_out;
    std::size_t max_vertices = 0;

    std::string input;
};

inline SolveOptions solve_options(const Options& o) {
    SolveOptions s;
    s.node_budget = o.budget;
    s.time_budget = std::chrono::milliseconds(o.time_budget_ms);
    return s;
}

inline int cmd_ring_info(const Options& o, std::ostream& out) {
    const FiniteRing r = parse_ring(o.spec, order_cap_from_env());
    const RingSubset z = zero_divisors(r);
    const RingSubset u = units(r);
    const RingSubset nil = nilradical(r);
    const auto ls = local_structure(r);
    const bool field = is_field(r);

    if (o.json) {
        nlohmann::json j{{"ring", r.name()},
                         {"order", r.order()},
                         {"zero_divisors", z.size()},
                         {"units", u.size()},
                         {"nilradical", nil.size()},
                         {"reduced", is_reduced(r)},
                         {"field", field},
                         {"local", ls.has_value()}};
        if (ls) {
            j["maximal_ideal"] = ls->maximal_ideal.size();
            j["nilpotency_index"] = ls->nilpotency_index ? nlohmann::json(*ls->nilpotency_index) : nlohmann::json(nullptr);
        }
        out << j.dump() << "\n";
        return kOk;
    }
    out << "ring: " << r.name() << "\n";
    out << "order: " << r.order() << "\n";
    out << "zero_divisors: " << z.size() << "\n";
    out << "units: " << u.size() << "\n";
    out << "nilradical: " << nil.size() << "\n";
    out << "reduced: " << (is_reduced(r) ? "yes" : "no") << "\n";
    out << "field: " << (field ? "yes" : "no") << "\n";
    out << "local: " << (ls ? "yes" : "no") << "\n";
    if (ls) {
        out << "maximal_ideal: " << ls->maximal_ideal.size() << "\n";
        out << "nilpotency_index: " << (ls->nilpotency_index ? std::to_string(*ls->nilpotency_index) : "none")
            << "\n";
    }
    return kOk;
}

inline int cmd_graph_export(const Options& o, std::ostream& out) {
    const ZdGraph g = build_graph(parse_ring(o.spec, order_cap_from_env()));
    GraphFormat fmt;
    if (o.format == "dot") fmt = GraphFormat::Dot;
    else if (o.format == "dimacs") fmt = GraphFormat::Dimacs;
    else throw InvalidParameter("unknown graph format '" + o.format + "' (dot, dimacs)");
    const std::string text = export_graph(g, fmt);
    if (o.json) {
        nlohmann::json edges = nlohmann::json::array();
        for (Vertex a = 0; a < g.vertex_count(); ++a)
            for (Vertex b = a + 1; b < g.vertex_count(); ++b)
                if (g.adjacent(a, b)) edges.push_back({g.label(a), g.label(b)});
        out << nlohmann::json{{"ring", g.name()}, {"vertices", g.labels()}, {"edges", edges}}.dump() << "\n";
        return kOk;
    }
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f || !(f << text)) throw std::runtime_error("cannot write " + o.output);
    }
    return kOk;
}

inline int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    const ZdGraph g = build_graph(parse_ring(o.spec, order_cap_from_env()));
    const AllianceSolution sol = solve({g, o.k}, solve_options(o));
    std::optional<AllianceSolution> check;
    if (o.oracle) check = oracle_solve({g, o.k});
    const bool agree = !check || (check->verdict == sol.verdict && check->size == sol.size);

    if (o.json) {
        nlohmann::json j{{"ring", g.name()},
                         {"vertices", g.vertex_count()},
                         {"k", o.k},
                         {"feasible", sol.feasible()},
                         {"size", sol.feasible() ? nlohmann::json(sol.size) : nlohmann::json(nullptr)},
                         {"nodes", sol.nodes_explored}};
        if (o.witness && sol.feasible()) j["witness"] = witness_json(g, sol.witness);
        if (check) {
            j["oracle_size"] = check->feasible() ? nlohmann::json(check->size) : nlohmann::json(nullptr);
            j["oracle_agrees"] = agree;
        }
        out << j.dump() << "\n";
    } else {
        out << (sol.feasible() ? std::to_string(sol.size) : "INFEASIBLE") << "\n";
        if (o.witness && sol.feasible()) out << "witness: " << witness_text(g, sol.witness) << "\n";
        if (check) out << "oracle: " << (check->feasible() ? std::to_string(check->size) : "INFEASIBLE") << "\n";
    }
    if (!agree) {
        err << "error: solver and oracle disagree\n";
        return kMismatch;
    }
    return kOk;
}

inline int cmd_spectrum(const Options& o, std::ostream& out) {
    const ZdGraph g = build_graph(parse_ring(o.spec, order_cap_from_env()));
    const auto spec = spectrum(g, solve_options(o));
    if (o.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [k, sol] : spec)
            rows.push_back({{"k", k}, {"size", sol.feasible() ? nlohmann::json(sol.size) : nlohmann::json(nullptr)}});
        out << nlohmann::json{{"ring", g.name()},
                              {"vertices", g.vertex_count()},
                              {"max_degree", g.max_degree()},
                              {"min_degree", g.min_degree()},
                              {"spectrum", rows}}
                   .dump()
            << "\n";
        return kOk;
    }
    out << "k\tgamma\n";
    for (const auto& [k, sol] : spec) out << k << "\t" << (sol.feasible() ? std::to_string(sol.size) : "INFEASIBLE") << "\n";
    return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    SuiteConfig cfg;
    if (!o.config.empty()) cfg = load_suite_config(o.config);
    if (!o.suite.empty()) cfg.suite = o.suite;
    if (o.jobs) cfg.jobs = o.jobs;
    if (o.max_vertices) cfg.max_vertices = o.max_vertices;
    if (o.budget) cfg.node_budget = o.budget;
    if (o.time_budget_ms) cfg.time_budget_ms = o.time_budget_ms;
    if (!o.csv.empty()) cfg.csv_path = o.csv;
    if (!o.md.empty()) cfg.md_path = o.md;
    if (!o.json_out.empty()) cfg.json_path = o.json_out;
    cfg.order_cap = order_cap_from_env();
    if (cfg.suite.empty()) throw InvalidParameter("verify needs a suite name or a config with 'suite ='");
    cfg.validate();

    const auto records = run_suite(cfg);
    if (!cfg.csv_path.empty()) emit_report(records, ReportFormat::Csv, cfg.csv_path);
    if (!cfg.md_path.empty()) emit_report(records, ReportFormat::Markdown, cfg.md_path);
    if (!cfg.json_path.empty()) emit_report(records, ReportFormat::Json, cfg.json_path);

    const SuiteSummary s = summarize(records);
    if (o.json) {
        out << render_json(records);
    } else {
        for (const auto& r : records)
            if (r.status == Status::Mismatch)
                out << "MISMATCH " << r.ring << " k=" << (r.k ? std::to_string(*r.k) : "-") << " " << r.check
                    << " predicted=" << r.predicted.lower
                    << (r.predicted.kind == PredictionKind::Bounds ? ".." + std::to_string(r.predicted.upper) : "")
                    << " solved=" << (r.infeasible ? "INFEASIBLE" : std::to_string(r.observed.value_or(0))) << "\n";
        out << "suite " << cfg.suite << ": " << records.size() << " records, " << s.match << " match, " << s.within
            << " within bounds, " << s.mismatch << " mismatch, " << s.skipped << " skipped\n";
    }
    if (s.budget_skips) err << "warning: " << s.budget_skips << " records skipped on budget\n";
    return s.mismatch ? kMismatch : kOk;
}

inline int cmd_report(const Options& o, std::ostream& out) {
    const auto records = load_records_json(o.input);
    const ReportFormat fmt = o.json ? ReportFormat::Json : parse_report_format(o.format);
    if (o.output.empty()) out << render_report(records, fmt);
    else emit_report(records, fmt, o.output);
    return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero-divisor graphs and global defensive k-alliances", "zdk"};
    app.require_subcommand(1, 1);
    detail::Options o;

    auto* info = app.add_subcommand("ring-info", "Order, zero-divisors, units, locality of a ring");
    info->add_option("spec", o.spec, "Ring expression, e.g. \"Z2 x GF(4)\"")->required();
    info->add_flag("--json", o.json, "Machine-readable output");

    auto* gexp = app.add_subcommand("graph-export", "Export the zero-divisor graph");
    gexp->add_option("spec", o.spec, "Ring expression")->required();
    gexp->add_option("-f,--format", o.format, "dot or dimacs")->capture_default_str();
    gexp->add_option("-o,--output", o.output, "Output file (default stdout)");
    gexp->add_flag("--json", o.json, "Vertex and edge lists as JSON");

    auto* slv = app.add_subcommand("solve", "Exact global defensive k-alliance number");
    slv->add_option("spec", o.spec, "Ring expression")->required();
    slv->add_option("-k,--k", o.k, "Alliance parameter k")->required();
    slv->add_flag("--witness", o.witness, "Print an optimal set as ring elements");
    slv->add_flag("--oracle", o.oracle, "Cross-check with brute-force enumeration");
    slv->add_option("--budget", o.budget, "Node budget (0 = unlimited)");
    slv->add_option("--time-budget", o.time_budget_ms, "Time budget in ms (0 = unlimited)");
    slv->add_flag("--json", o.json, "Machine-readable output");

    auto* spc = app.add_subcommand("spectrum", "gamma_k^d for every k in [-Delta, Delta]");
    spc->add_option("spec", o.spec, "Ring expression")->required();
    spc->add_option("--budget", o.budget, "Node budget per k (0 = unlimited)");
    spc->add_option("--time-budget", o.time_budget_ms, "Time budget per k in ms (0 = unlimited)");
    spc->add_flag("--json", o.json, "Machine-readable output");

    auto* ver = app.add_subcommand("verify", "Run a formula-vs-solver suite");
    ver->add_option("suite", o.suite, "tables, zpn, fields, z2z2F, z2FK, z2local, bounds, known_graphs");
    ver->add_option("-c,--config", o.config, "key=value suite file");
    ver->add_option("-j,--jobs", o.jobs, "Worker threads");
    ver->add_option("--max-vertices", o.max_vertices, "Skip graphs with more vertices");
    ver->add_option("--budget", o.budget, "Node budget per solve");
    ver->add_option("--time-budget", o.time_budget_ms, "Time budget per solve in ms");
    ver->add_option("--csv", o.csv, "Write CSV report");
    ver->add_option("--md", o.md, "Write Markdown report");
    ver->add_option("--json-out", o.json_out, "Write JSON report");
    ver->add_flag("--json", o.json, "Print records as JSON instead of a summary");

    auto* rep = app.add_subcommand("report", "Re-render a JSON report");
    rep->add_option("input", o.input, "JSON report from verify")->required();
    rep->add_option("-f,--format", o.format, "csv, md or json")->required();
    rep->add_option("-o,--output", o.output, "Output file (default stdout)");
    rep->add_flag("--json", o.json, "Same as --format json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (info->parsed()) return detail::cmd_ring_info(o, out);
        if (gexp->parsed()) return detail::cmd_graph_export(o, out);
        if (slv->parsed()) return detail::cmd_solve(o, out, err);
        if (spc->parsed()) return detail::cmd_spectrum(o, out);
        if (ver->parsed()) return detail::cmd_verify(o, out, err);
        if (rep->parsed()) return detail::cmd_report(o, out);
    } catch (const BudgetExceeded& e) {
        err << "UNKNOWN: " << e.what() << "\n";
        return kUnknown;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace zdk::cli
