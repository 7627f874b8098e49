#include "lgcy/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

// path file: {"waypoints": [[re, im], ...], "precision": 256, "taylor_order": 240}
// with re/im given as numbers or decimal strings; the scalar keys are optional
void parse_path_file(const std::string& file, lgcy::RunConfig& cfg) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open path file " + file);
    nlohmann::json j;
    in >> j;
    if (j.contains("precision")) cfg.precision = j["precision"].get<long>();
    if (j.contains("taylor_order")) cfg.taylor_order = j["taylor_order"].get<int>();
    lgcy::PathSpec p;
    for (const auto& w : j.at("waypoints")) {
        std::string re = w.at(0).is_string() ? w.at(0).get<std::string>()
                                             : std::to_string(w.at(0).get<double>());
        std::string im = w.at(1).is_string() ? w.at(1).get<std::string>()
                                             : std::to_string(w.at(1).get<double>());
        p.waypoints.push_back(
            {lgcy::Real::parse(re, cfg.precision), lgcy::Real::parse(im, cfg.precision)});
    }
    cfg.path = std::move(p);
}

void add_common(CLI::App* cmd, lgcy::RunConfig& cfg, std::string& tolerance,
                std::string& path_file) {
    cmd->add_option("--order", cfg.order, "truncation order N")->envname("LGCY_ORDER");
    cmd->add_option("--precision", cfg.precision, "working precision in bits")
        ->envname("LGCY_PRECISION");
    cmd->add_option("--tolerance", tolerance, "override the default relative tolerance 2^(-precision/2)")
        ->envname("LGCY_TOLERANCE");
    cmd->add_option("--mu-cap", cfg.mu_cap, "mu-degree cap for twisted series")
        ->envname("LGCY_MU_CAP");
    cmd->add_option("--taylor-order", cfg.taylor_order, "Taylor order of the ODE transport")
        ->envname("LGCY_TAYLOR_ORDER");
    cmd->add_option("--path-file", path_file, "JSON file with transport waypoints")
        ->envname("LGCY_PATH_FILE");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lgcy-verify: genus-one LG/CY correspondence verification engine"};
    app.require_subcommand(1);

    lgcy::RunConfig cfg;
    std::string tolerance, path_file, suite, report_path, format = "text";

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, cfg, tolerance, path_file);
    verify->add_option("--suite", suite, "one of: constants series pf u-matrix birkhoff tower continuation genus-one (default: all)")
        ->envname("LGCY_SUITE");
    verify->add_option("--report", report_path, "write the report to this path")
        ->envname("LGCY_REPORT");
    verify->add_option("--format", format, "text | json")->envname("LGCY_FORMAT");

    CLI::App* dump = app.add_subcommand("dump", "print series tables");
    std::string what, side = "cy";
    dump->add_option("what", what, "icy | ilg | tower | mirror | f1 | continued")->required();
    dump->add_option("--side", side, "cy | lg");
    add_common(dump, cfg, tolerance, path_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!tolerance.empty()) cfg.tolerance = tolerance;
        if (!path_file.empty()) parse_path_file(path_file, cfg);
        cfg.format = format;
        cfg.report_path = report_path;
        if (!suite.empty()) cfg.suites = {suite};

        if (app.got_subcommand(dump)) {
            cfg.validate();
            std::cout << lgcy::dump_series(what, side, cfg);
            return 0;
        }

        lgcy::Report rep = lgcy::run_suite(cfg);
        std::string out = cfg.format == "json" ? rep.to_json(true) : rep.to_text();
        if (!report_path.empty()) {
            std::ofstream f(report_path);
            f << (cfg.format == "json" ? rep.to_json(true) : rep.to_text());
        }
        std::cout << out;
        return rep.all_pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
