#pragma once

// CSV, Markdown and JSON renderings of verification records, plus a JSON
// reader so stored runs can be re-rendered.

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdk/error.hpp"
#include "zdk/verification.hpp"

namespace zdk {

enum class ReportFormat { Csv, Markdown, Json };

inline ReportFormat parse_report_format(const std::string& s) {
    if (s == "csv") return ReportFormat::Csv;
    if (s == "md" || s == "markdown") return ReportFormat::Markdown;
    if (s == "json") return ReportFormat::Json;
    throw InvalidParameter("unknown report format '" + s + "' (csv, md, json)");
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string opt_text(const std::optional<long long>& v) { return v ? std::to_string(*v) : ""; }

inline std::string solved_text(const VerificationRecord& r) {
    if (r.infeasible) return "INFEASIBLE";
    return opt_text(r.observed);
}

inline std::string millis_text(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

inline std::string predicted_lo(const VerificationRecord& r) {
    return r.predicted.kind == PredictionKind::OutOfStatedRange ? "" : std::to_string(r.predicted.lower);
}

inline std::string predicted_hi(const VerificationRecord& r) {
    return r.predicted.kind == PredictionKind::OutOfStatedRange ? "" : std::to_string(r.predicted.upper);
}

}  // namespace detail

inline std::string render_csv(const std::vector<VerificationRecord>& records) {
    std::ostringstream os;
    os << "family,params,ring,vertices,k,predicted_kind,predicted_lo,predicted_hi,solved,status,nodes,millis\n";
    for (const auto& r : records) {
        std::string status = to_string(r.status);
        if (r.status == Status::Skipped && !r.reason.empty()) status += "(" + r.reason + ")";
        os << detail::csv_field(r.family) << ',' << detail::csv_field(r.params_text) << ','
           << detail::csv_field(r.ring) << ',' << r.vertices << ',' << detail::opt_text(r.k) << ','
           << to_string(r.predicted.kind) << ',' << detail::predicted_lo(r) << ',' << detail::predicted_hi(r) << ','
           << detail::solved_text(r) << ',' << detail::csv_field(status) << ',' << r.nodes << ','
           << detail::millis_text(r.millis) << '\n';
    }
    return os.str();
}

/// One table per (family, ring): k, gamma, A_k and, for local rings, B_k and C_k.
inline std::string render_markdown(const std::vector<VerificationRecord>& records) {
    std::ostringstream os;
    std::string current;
    bool local = false;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const std::string key = r.family + "|" + r.params_text + "|" + r.ring;
        if (key != current) {
            current = key;
            local = false;
            for (std::size_t j = i; j < records.size(); ++j) {
                const auto& o = records[j];
                if (o.family + "|" + o.params_text + "|" + o.ring != key) break;
                if (o.b_k) local = true;
            }
            if (i) os << '\n';
            os << "### " << r.ring << " (" << r.family << ", " << r.params_text << ", " << r.vertices
               << " vertices)\n\n";
            os << "| k | check | gamma_k^d | observed | predicted | status | A_k |" << (local ? " B_k | C_k |" : "") << '\n';
            os << "|---|---|---|---|---|---|---|" << (local ? "---|---|" : "") << '\n';
        }
        std::string predicted;
        switch (r.predicted.kind) {
            case PredictionKind::ExactValue: predicted = std::to_string(r.predicted.value()); break;
            case PredictionKind::Bounds:
                predicted = "[" + std::to_string(r.predicted.lower) + ", " + std::to_string(r.predicted.upper) + "]";
                break;
            case PredictionKind::OutOfStatedRange: predicted = "-"; break;
        }
        std::string status = to_string(r.status);
        if (!r.reason.empty()) status += " (" + r.reason + ")";
        os << "| " << (r.k ? std::to_string(*r.k) : "-") << " | " << r.check << " | "
           << (r.gamma ? std::to_string(*r.gamma) : "-") << " | "
           << (detail::solved_text(r).empty() ? "-" : detail::solved_text(r)) << " | " << predicted << " | "
           << status << " | " << (r.a_k ? std::to_string(*r.a_k) : "-") << " |";
        if (local)
            os << ' ' << (r.b_k ? std::to_string(*r.b_k) : "-") << " | " << (r.c_k ? std::to_string(*r.c_k) : "-")
               << " |";
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json to_json(const VerificationRecord& r) {
    using nlohmann::json;
    auto opt = [](const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); };
    return json{{"family", r.family},
                {"params", r.params},
                {"params_text", r.params_text},
                {"ring", r.ring},
                {"vertices", r.vertices},
                {"k", opt(r.k)},
                {"check", r.check},
                {"predicted_kind", to_string(r.predicted.kind)},
                {"predicted_lo", r.predicted.lower},
                {"predicted_hi", r.predicted.upper},
                {"source", r.predicted.source},
                {"observed", opt(r.observed)},
                {"infeasible", r.infeasible},
                {"gamma", opt(r.gamma)},
                {"status", to_string(r.status)},
                {"reason", r.reason},
                {"nodes", r.nodes},
                {"millis", r.millis},
                {"A_k", opt(r.a_k)},
                {"B_k", opt(r.b_k)},
                {"C_k", opt(r.c_k)}};
}

inline VerificationRecord record_from_json(const nlohmann::json& j) {
    auto opt = [&](const char* key) -> std::optional<long long> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<long long>();
    };
    VerificationRecord r;
    r.family = j.at("family").get<std::string>();
    r.params = j.at("params").get<std::vector<long long>>();
    r.params_text = j.at("params_text").get<std::string>();
    r.ring = j.at("ring").get<std::string>();
    r.vertices = j.at("vertices").get<std::size_t>();
    r.k = opt("k");
    r.check = j.at("check").get<std::string>();
    const auto kind = j.at("predicted_kind").get<std::string>();
    if (kind == "exact") r.predicted.kind = PredictionKind::ExactValue;
    else if (kind == "bounds") r.predicted.kind = PredictionKind::Bounds;
    else if (kind == "out_of_range") r.predicted.kind = PredictionKind::OutOfStatedRange;
    else throw InvalidParameter("unknown predicted_kind '" + kind + "'");
    r.predicted.lower = j.at("predicted_lo").get<long long>();
    r.predicted.upper = j.at("predicted_hi").get<long long>();
    r.predicted.source = j.value("source", "");
    r.observed = opt("observed");
    r.infeasible = j.at("infeasible").get<bool>();
    r.gamma = opt("gamma");
    r.status = status_from_string(j.at("status").get<std::string>());
    r.reason = j.value("reason", "");
    r.nodes = j.value("nodes", std::uint64_t{0});
    r.millis = j.value("millis", 0.0);
    r.a_k = opt("A_k");
    r.b_k = opt("B_k");
    r.c_k = opt("C_k");
    return r;
}

inline std::string render_json(const std::vector<VerificationRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

inline std::string render_report(const std::vector<VerificationRecord>& records, ReportFormat format) {
    if (records.empty()) throw InvalidParameter("no records to report");
    switch (format) {
        case ReportFormat::Csv: return render_csv(records);
        case ReportFormat::Markdown: return render_markdown(records);
        case ReportFormat::Json: return render_json(records);
    }
    throw InternalError("unhandled report format");
}

/// Write a report; IO failures name the path.
inline void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format, const std::string& path) {
    const std::string text = render_report(records, format);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path);
}

inline std::vector<VerificationRecord> parse_records_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidParameter(std::string("malformed report JSON: ") + e.what());
    }
    if (!j.is_array()) throw InvalidParameter("report JSON must be an array of records");
    std::vector<VerificationRecord> out;
    try {
        for (const auto& item : j) out.push_back(record_from_json(item));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("bad record in report JSON: ") + e.what());
    }
    std::stable_sort(out.begin(), out.end(), record_less);
    return out;
}

inline std::vector<VerificationRecord> load_records_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_records_json(ss.str());
}

}  // namespace zdk
