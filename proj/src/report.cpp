#include "lgcy/report.hpp"

#include <json.hpp>

#include <sstream>

namespace lgcy {

std::string Report::to_json(bool include_times) const {
    nlohmann::ordered_json j;
    j["schema"] = "lgcy-report/1";
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    j["meta"] = m;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["ref"] = c.ref;
        jc["status"] = c.pass ? "PASS" : "FAIL";
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["order"] = c.order;
        jc["precision"] = c.precision;
        if (include_times) jc["wall_ms"] = c.wall_ms;
        j["checks"].push_back(jc);
    }
    j["all_pass"] = all_pass();
    return j.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : meta) os << "# " << k << " = " << v << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  residual=" << c.residual
           << "  tol=" << c.tolerance << "  (" << c.ref << ")\n";
    }
    os << (all_pass() ? "ALL PASS" : "FAILURES: " + std::to_string(fail_count())) << "\n";
    return os.str();
}

} // namespace lgcy
