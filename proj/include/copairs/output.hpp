#pragma once

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "copairs/asymptotics.hpp"
#include "copairs/constants.hpp"
#include "copairs/exact_counts.hpp"
#include "copairs/int128.hpp"
#include "copairs/version.hpp"

namespace copairs {

// Minimal JSON document with insertion-ordered objects and a pinned float
// format (17 significant digits), so identical invocations serialize to
// byte-identical text. Exact counts travel as decimal strings; JSON
// numbers would lose precision past 2^53 in typical consumers.
class JsonValue {
public:
    using Array = std::vector<JsonValue>;
    using Object = std::vector<std::pair<std::string, JsonValue>>;

    JsonValue() : data_(Object{}) {}
    JsonValue(const char* s) : data_(std::string(s)) {}
    JsonValue(std::string s) : data_(std::move(s)) {}
    JsonValue(bool b) : data_(b) {}
    JsonValue(double d) : data_(d) {}
    JsonValue(std::uint64_t u) : data_(u) {}
    JsonValue(int i) : data_(static_cast<std::uint64_t>(i)) {}
    JsonValue(Array a) : data_(std::move(a)) {}

    static JsonValue object() { return JsonValue(); }

    JsonValue& set(const std::string& key, JsonValue v) {
        std::get<Object>(data_).emplace_back(key, std::move(v));
        return *this;
    }

    void dump(std::string& out) const {
        switch (data_.index()) {
            case 0: {  // object
                out.push_back('{');
                const auto& obj = std::get<Object>(data_);
                for (std::size_t i = 0; i < obj.size(); ++i) {
                    if (i) out.push_back(',');
                    append_escaped(out, obj[i].first);
                    out.push_back(':');
                    obj[i].second.dump(out);
                }
                out.push_back('}');
                break;
            }
            case 1:  // string
                append_escaped(out, std::get<std::string>(data_));
                break;
            case 2:  // bool
                out += std::get<bool>(data_) ? "true" : "false";
                break;
            case 3: {  // double
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(data_));
                out += buf;
                break;
            }
            case 4:  // unsigned
                out += std::to_string(std::get<std::uint64_t>(data_));
                break;
            case 5: {  // array
                out.push_back('[');
                const auto& arr = std::get<Array>(data_);
                for (std::size_t i = 0; i < arr.size(); ++i) {
                    if (i) out.push_back(',');
                    arr[i].dump(out);
                }
                out.push_back(']');
                break;
            }
        }
    }

    std::string dump() const {
        std::string out;
        dump(out);
        return out;
    }

private:
    static void append_escaped(std::string& out, const std::string& s) {
        out.push_back('"');
        for (const char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out.push_back(c);
                    }
            }
        }
        out.push_back('"');
    }

    std::variant<Object, std::string, bool, double, std::uint64_t, Array> data_;
};

inline std::string format_double(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

// --- payload builders -------------------------------------------------

inline JsonValue to_json(const CountResult& r) {
    JsonValue v;
    v.set("height", r.height);
    v.set("count", to_decimal(r.count));
    v.set("method", to_string(r.method));
    return v;
}

inline JsonValue to_json(const PhiPartial& r) {
    JsonValue v;
    v.set("n", r.n);
    v.set("bound", r.bound);
    v.set("value", r.value);
    return v;
}

inline JsonValue to_json(const EulerProductValue& r) {
    JsonValue v;
    v.set("value", r.value);
    v.set("truncation_prime", r.truncation_prime);
    v.set("tail_bound", r.tail_bound);
    v.set("term_bound_c", r.term_bound_c);
    v.set("lower", r.lower());
    v.set("upper", r.upper());
    v.set("abs_error", r.abs_error());
    return v;
}

inline JsonValue to_json(const ZetaValue& r) {
    JsonValue v;
    v.set("value", r.value);
    v.set("error_bound", r.error_bound);
    return v;
}

inline JsonValue to_json(const ConstraintGraph& g) {
    JsonValue::Array edges;
    for (const auto& [a, b] : g.edges())
        edges.emplace_back(std::to_string(a) + "-" + std::to_string(b));
    JsonValue v;
    v.set("arity", static_cast<std::uint64_t>(g.arity()));
    v.set("edges", JsonValue(std::move(edges)));
    v.set("mode", to_string(g.mode()));
    return v;
}

inline JsonValue to_json(const ReportRow& row) {
    JsonValue v;
    v.set("height", row.height);
    if (row.exact_is_count)
        v.set("exact", to_decimal(row.exact_count));
    else
        v.set("exact", row.exact_sum);
    v.set("main_term", row.main_term);
    v.set("raw_error", row.raw_error);
    v.set("normalized_error", row.normalized_error);
    return v;
}

inline JsonValue to_json(const AsymptoticReport& report) {
    JsonValue v;
    v.set("normalizer", to_string(report.normalizer_kind));
    JsonValue::Array rows;
    rows.reserve(report.rows.size());
    for (const auto& row : report.rows) rows.push_back(to_json(row));
    v.set("rows", JsonValue(std::move(rows)));
    return v;
}

inline JsonValue to_json(const DensityEstimate& d) {
    JsonValue v;
    v.set("graph", to_json(d.graph));
    v.set("range_max", d.range_max);
    v.set("samples", d.samples);
    v.set("hits", d.hits);
    v.set("estimate", d.estimate);
    v.set("ci_halfwidth", d.ci_halfwidth);
    v.set("seed", d.seed);
    return v;
}

// Envelope every CLI invocation prints: command, echoed parameters,
// result payload, toolkit version.
inline std::string output_record(const std::string& command, JsonValue parameters,
                                 JsonValue results) {
    JsonValue v;
    v.set("command", command);
    v.set("parameters", std::move(parameters));
    v.set("results", std::move(results));
    v.set("toolkit_version", std::string(kToolkitVersion));
    return v.dump() + "\n";
}

// --- CSV (tabular reports) --------------------------------------------

inline std::string to_csv(const AsymptoticReport& report) {
    std::string out = "height,exact,main_term,raw_error,normalized_error\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.height);
        out.push_back(',');
        out += row.exact_is_count ? to_decimal(row.exact_count) : format_double(row.exact_sum);
        out.push_back(',');
        out += format_double(row.main_term);
        out.push_back(',');
        out += format_double(row.raw_error);
        out.push_back(',');
        out += format_double(row.normalized_error);
        out.push_back('\n');
    }
    return out;
}

inline std::string to_csv(const CountResult& r) {
    return "height,count,method\n" + std::to_string(r.height) + "," + to_decimal(r.count) +
           "," + to_string(r.method) + "\n";
}

}  // namespace copairs
