#include "sharp_hilbert/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sharp_hilbert::report {

VerificationEntry VerificationEntry::make(std::string name, double lhs, double rhs,
                                          double tolerance, std::string params,
                                          std::string provenance) {
    VerificationEntry e;
    e.name = std::move(name);
    e.lhs = lhs;
    e.rhs = rhs;
    e.slack = rhs - lhs;
    e.tolerance = tolerance;
    e.pass = e.slack >= -tolerance;
    e.params = std::move(params);
    e.provenance = std::move(provenance);
    return e;
}

bool VerificationReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const VerificationEntry& e) { return e.pass; });
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [](const VerificationEntry& e) { return !e.pass; }));
}

void VerificationReport::extend(const VerificationReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["all_pass"] = all_pass();
    j["failures"] = failures();
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries) {
        j["entries"].push_back({{"name", e.name},
                                {"lhs", e.lhs},
                                {"rhs", e.rhs},
                                {"slack", e.slack},
                                {"tolerance", e.tolerance},
                                {"pass", e.pass},
                                {"params", e.params},
                                {"provenance", e.provenance}});
    }
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::size_t name_w = 4, params_w = 6;
    for (const auto& e : entries) {
        name_w = std::max(name_w, e.name.size());
        params_w = std::max(params_w, e.params.size());
    }
    std::ostringstream out;
    char buf[160];
    for (const auto& e : entries) {
        std::snprintf(buf, sizeof buf, "%-*s  %-*s  lhs=%-14.8g rhs=%-14.8g slack=%-12.4g %s\n",
                      static_cast<int>(name_w), e.name.c_str(), static_cast<int>(params_w),
                      e.params.c_str(), e.lhs, e.rhs, e.slack, e.pass ? "pass" : "FAIL");
        out << buf;
    }
    return out.str();
}

}  // namespace sharp_hilbert::report
