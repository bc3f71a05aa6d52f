#pragma once

#include <string>
#include <vector>

namespace sharp_hilbert::report {

// One verified inequality instance. pass <=> slack >= -tolerance.
struct VerificationEntry {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    double tolerance = 0.0;
    bool pass = false;
    std::string params;      // e.g. "c=0.5" or "q=0.25,f=#17"
    std::string provenance;  // where the two sides come from

    static VerificationEntry make(std::string name, double lhs, double rhs, double tolerance,
                                  std::string params = {}, std::string provenance = {});
};

struct VerificationReport {
    std::vector<VerificationEntry> entries;

    bool all_pass() const;
    std::size_t failures() const;
    void append(VerificationEntry e) { entries.push_back(std::move(e)); }
    void extend(const VerificationReport& other);

    std::string to_json() const;
    // Aligned-column text, one line per entry.
    std::string to_text() const;
};

}  // namespace sharp_hilbert::report
