#ifndef LGCY_SUITES_HPP
#define LGCY_SUITES_HPP

#include "lgcy/continuation.hpp"
#include "lgcy/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgcy {

struct RunConfig {
    int order = 12;
    long precision = 256;
    std::optional<std::string> tolerance; // decimal; default relative 2^{-prec/2}
    int mu_cap = 2;
    std::vector<std::string> suites; // empty = all, in dependency order
    std::string report_path;
    std::string format = "text"; // text | json
    std::optional<PathSpec> path;
    int taylor_order = 240;

    void validate() const; // throws std::invalid_argument on bad values
};

extern const std::vector<std::string> kAllSuites;

// Executes the selected suites in dependency order and returns the report.
Report run_suite(const RunConfig& cfg);

// Series tables for the CLI: selector in {icy, ilg, tower, mirror, f1,
// continued}; side in {cy, lg} where applicable.
std::string dump_series(const std::string& what, const std::string& side, const RunConfig& cfg);

} // namespace lgcy

#endif
