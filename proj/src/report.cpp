#include "hecke/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "hecke/errors.hpp"

namespace hecke {

using nlohmann::ordered_json;

void VerificationReport::finalize() {
    abs_error = std::abs(lhs - rhs);
    pass = abs_error <= tolerance;
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

cplx complex_from(const ordered_json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

std::string json_string(const std::string& text) { return ordered_json(text).dump(); }

std::string number_text(double x) {
    if (!std::isfinite(x)) return "null";
    return format_number(x);
}

std::string complex_text(cplx z) {
    return "{\"re\": " + number_text(z.real()) + ", \"im\": " + number_text(z.imag()) + "}";
}

// Hand-written so floats carry 17 significant digits.
std::string object_text(const VerificationReport& r, int indent, int depth) {
    const std::string nl = indent > 0 ? "\n" : "";
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    const std::string sep = indent > 0 ? ": " : ":";
    std::string params = "{";
    bool first = true;
    for (const auto& [k, v] : r.parameters) {
        if (!first) params += ", ";
        first = false;
        params += json_string(k) + sep + json_string(v);
    }
    params += "}";
    std::vector<std::pair<std::string, std::string>> items = {
        {"command", json_string(r.command)},
        {"fields", json_string(r.fields)},
        {"parameters", params},
        {"lhs", complex_text(r.lhs)},
        {"rhs", complex_text(r.rhs)},
        {"absError", number_text(r.abs_error)},
        {"tolerance", number_text(r.tolerance)},
        {"pass", r.pass ? "true" : "false"},
        {"wallTimeMs", std::to_string(r.wall_time_ms)},
    };
    std::string out = "{" + nl;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += pad + json_string(items[i].first) + sep + items[i].second;
        out += (i + 1 < items.size() ? "," : "") + nl;
    }
    return out + close_pad + "}";
}

VerificationReport from_object(const ordered_json& j) {
    VerificationReport r;
    r.command = j.at("command").get<std::string>();
    r.fields = j.at("fields").get<std::string>();
    r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    r.lhs = complex_from(j.at("lhs"));
    r.rhs = complex_from(j.at("rhs"));
    r.abs_error = j.at("absError").is_null() ? std::nan("") : j.at("absError").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.wall_time_ms = j.at("wallTimeMs").get<long long>();
    return r;
}

}  // namespace

std::string to_json(const VerificationReport& r) { return object_text(r, 2, 0); }

std::string to_json(const std::vector<VerificationReport>& rs, int indent) {
    if (rs.empty()) return "[]";
    const std::string nl = indent > 0 ? "\n" : "";
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::string out = "[" + nl;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        out += pad + object_text(rs[i], indent, 1);
        out += (i + 1 < rs.size() ? "," : "") + nl;
    }
    return out + "]";
}

VerificationReport report_from_json(const std::string& text) {
    try {
        return from_object(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("report JSON: ") + e.what());
    }
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
    try {
        std::vector<VerificationReport> out;
        for (const auto& j : ordered_json::parse(text)) out.push_back(from_object(j));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("report JSON: ") + e.what());
    }
}

}  // namespace hecke
