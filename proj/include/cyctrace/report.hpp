#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyctrace {

/// One failed law instance: which identity, where, and on what witness.
struct Violation {
    std::string identity;
    int degree = -1;
    std::string witness;
    std::string detail;

    std::string str() const {
        std::string s = identity;
        if (degree >= 0) s += " at degree " + std::to_string(degree);
        if (!witness.empty()) s += " on " + witness;
        if (!detail.empty()) s += ": " + detail;
        return s;
    }
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string identity, int degree, std::string witness, std::string detail = "") {
        violations.push_back({std::move(identity), degree, std::move(witness), std::move(detail)});
    }

    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    bool mentions(const std::string& fragment) const {
        for (const auto& v : violations)
            if (v.identity.find(fragment) != std::string::npos) return true;
        return false;
    }
};

/// Result of one named suite check.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::uint64_t seed = 0;
    double ms = 0.0;
    std::vector<std::string> notes;  // witnesses and per-law outcomes

    CheckResult() = default;
    CheckResult(std::string n, bool p) : name(std::move(n)), pass(p) {}
};

struct SuiteReport {
    std::string version;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace cyctrace
