#ifndef LGCY_REPORT_HPP
#define LGCY_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace lgcy {

struct CheckResult {
    std::string id;
    std::string ref; // the identity being verified, human readable
    bool pass = false;
    std::string residual;
    std::string tolerance;
    int order = 0;
    long precision = 0;
    double wall_ms = 0.0;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int fail_count() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    // schema v1; wall-time fields are the only nondeterministic content and
    // can be suppressed for byte-stable output
    std::string to_json(bool include_times = true) const;
    std::string to_text() const;
};

} // namespace lgcy

#endif
