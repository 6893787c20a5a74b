#pragma once

#include "hvb/checks.hpp"
#include "hvb/cohomology.hpp"

#include <string>
#include <variant>
#include <vector>

namespace hvb {

enum class ReportFormat { Text, Structured };

/// One named payload entry of a report, kept in insertion order.
struct ReportField {
    using Value = std::variant<std::string, long long, bool, std::vector<std::string>>;
    std::string key;
    Value value;
};

/// Self-describing result document shared by every CLI command:
///   { check, algebra, window, status, <fields...>, witnesses: [{input, residual}],
///     axioms: [...], comments: [...] }
struct Report {
    std::string check;
    std::string algebra;
    int window = 0;
    bool pass = true;
    std::vector<ReportField> fields;
    std::vector<Witness> witnesses;
    std::vector<Report> axioms;

    Report& add(std::string key, ReportField::Value value)
    {
        fields.push_back({std::move(key), std::move(value)});
        return *this;
    }
};

Report make_report(const Verdict& v);
Report make_report(const BialgebraVerdict& v);
Report make_report(const H1Report& h1, const AlgebraSpec& alg);

/// Text is line oriented for people; Structured is JSON with a fixed key order.
/// Both are deterministic. Structured output adds a comment "Y[k]: r=k+1/2" for
/// every half-integer basis symbol it mentions.
std::string render(const Report& report, ReportFormat format);

}  // namespace hvb
