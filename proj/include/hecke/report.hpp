#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke/numerics.hpp"

namespace hecke {

/// One identity check: lhs against rhs with an explicit tolerance.
struct VerificationReport {
    std::string command;
    std::string fields;
    std::map<std::string, std::string> parameters;
    cplx lhs;
    cplx rhs;
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    long long wall_time_ms = 0;

    /// Sets abs_error = |lhs - rhs| and pass = abs_error <= tolerance.
    void finalize();
};

std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& rs, int indent = 2);
VerificationReport report_from_json(const std::string& text);
std::vector<VerificationReport> reports_from_json(const std::string& text);

/// Formats a double with 17 significant digits.
std::string format_number(double x);

}  // namespace hecke
