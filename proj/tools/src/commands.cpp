#include "tropfw/commands.hpp"

#include "tropfw/csv_io.hpp"
#include "tropfw/errors.hpp"
#include "tropfw/experiments.hpp"
#include "tropfw/fermat_weber.hpp"
#include "tropfw/report.hpp"
#include "tropfw/triangle_search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace tropfw {

namespace {

nlohmann::json point_to_json(const TropicalPoint& p) {
    nlohmann::json coords = nlohmann::json::array();
    for (const Rational& c : p.coords()) coords.push_back(rational_to_json(c));
    return coords;
}

std::string pair_to_string(PairIndex pair) {
    return "(" + std::to_string(pair.d1) + "," + std::to_string(pair.d2) + ")";
}

int cmd_fw(const std::string& file, bool as_json) {
    const DataMatrix X = read_matrix_csv_file(file);
    const FwResult fw = fermat_weber_point(X);
    if (as_json) {
        const nlohmann::json out{{"point", point_to_json(fw.point)},
                                 {"objective", rational_to_json(fw.objective)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "fermat-weber point: " << fw.point.to_string() << '\n'
                  << "objective: " << to_fraction_string(fw.objective) << " ("
                  << to_double(fw.objective) << ")\n";
    }
    return 0;
}

int cmd_project(const std::string& file, const std::string& generators_file, bool as_json) {
    const DataMatrix X = read_matrix_csv_file(file);
    const DataMatrix G = read_matrix_csv_file(generators_file);
    std::vector<TropicalPoint> projections;
    projections.reserve(X.row_count());
    for (const TropicalPoint& row : X.rows())
        projections.push_back(project_onto_tconv(row, G.rows()));

    if (as_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const TropicalPoint& p : projections) rows.push_back(point_to_json(p));
        std::cout << nlohmann::json{{"projections", std::move(rows)}}.dump(2) << '\n';
    } else {
        for (const TropicalPoint& p : projections) std::cout << p.to_string() << '\n';
    }
    return 0;
}

int cmd_search(const std::string& file, const std::string& algorithm, bool as_json) {
    const DataMatrix X = read_matrix_csv_file(file);
    const SearchOutcome out =
        algorithm == "lex" ? search_lex(X) : search_priority(X);
    const bool success = out.status == SearchStatus::Success;

    if (as_json) {
        nlohmann::json visited = nlohmann::json::array();
        for (PairIndex p : out.visited) visited.push_back({p.d1, p.d2});
        nlohmann::json doc{
            {"algorithm", algorithm},
            {"status", success ? "Success" : "Fail"},
            {"steps", out.steps},
            {"visited", std::move(visited)},
            {"fermat_weber",
             {{"point", point_to_json(out.fw.point)},
              {"objective", rational_to_json(out.fw.objective)}}},
        };
        if (success) {
            doc["winning_pair"] = {out.winning_pair->d1, out.winning_pair->d2};
            nlohmann::json triangle = nlohmann::json::array();
            for (const TropicalPoint& u : out.triangle->generators())
                triangle.push_back(point_to_json(u));
            doc["triangle"] = std::move(triangle);
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "status: " << (success ? "Success" : "Fail") << '\n';
        if (success) {
            std::cout << "winning pair: " << pair_to_string(*out.winning_pair) << '\n'
                      << "triangle:\n";
            for (const TropicalPoint& u : out.triangle->generators())
                std::cout << "  " << u.to_string() << '\n';
        }
        std::cout << "steps: " << out.steps << '\n' << "visited:";
        for (PairIndex p : out.visited) std::cout << ' ' << pair_to_string(p);
        std::cout << '\n'
                  << "fermat-weber point: " << out.fw.point.to_string() << '\n'
                  << "objective: " << to_fraction_string(out.fw.objective) << " ("
                  << to_double(out.fw.objective) << ")\n";
    }
    return success ? 0 : 1;
}

int cmd_experiment(const ExperimentConfig& config, const std::string& out_prefix) {
    const ExperimentReport report = run_experiment(config);

    const std::string csv_path = out_prefix + ".csv";
    const std::string json_path = out_prefix + ".json";
    std::ofstream csv(csv_path);
    if (!csv) throw ParseError(csv_path + ": cannot open for writing");
    write_report_csv(csv, report);
    std::ofstream json(json_path);
    if (!json) throw ParseError(json_path + ": cannot open for writing");
    write_report_json(json, report);

    std::cout << "experiment: " << report.id << " (seed " << report.seed << ", "
              << report.trials_per_cell << " trials/cell, jobs " << report.jobs << ")\n";
    for (const CellStats& c : report.cells) {
        std::cout << "  m=" << c.m << " n=" << c.n << " v=" << c.v
                  << " trials=" << c.trials << " successes=" << c.successes << " rate="
                  << to_fraction_string(c.rate()) << " (" << to_double(c.rate()) << ")";
        if (c.has_steps) {
            std::cout << " mean_steps_a1=" << to_double(c.mean_steps_a1())
                      << " mean_steps_a4=" << to_double(c.mean_steps_a4())
                      << " a1>a4=" << c.a1_gt_a4 << " a1<a4=" << c.a1_lt_a4
                      << " a1=a4=" << c.a1_eq_a4;
        }
        if (c.exclusivity_violations)
            std::cout << " exclusivity_violations=" << c.exclusivity_violations;
        std::cout << '\n';
    }
    std::cout << "wrote " << csv_path << " and " << json_path << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Tropical Fermat-Weber points, projections, and triangle searches"};
    app.require_subcommand(1);

    std::string fw_file;
    bool fw_json = false;
    CLI::App* fw = app.add_subcommand("fw", "Fermat-Weber point of a point matrix");
    fw->add_option("file", fw_file, "CSV matrix, one point per line")->required();
    fw->add_flag("--json", fw_json, "emit JSON instead of text");

    std::string proj_file, proj_generators;
    bool proj_json = false;
    CLI::App* project =
        app.add_subcommand("project", "Project each point onto a tropical polytope");
    project->add_option("file", proj_file, "CSV matrix of points to project")->required();
    project->add_option("--generators", proj_generators, "CSV matrix of generators")
        ->required();
    project->add_flag("--json", proj_json, "emit JSON instead of text");

    std::string search_file, search_algorithm;
    bool search_json = false;
    CLI::App* search =
        app.add_subcommand("search", "Search coordinate pairs for a verifying triangle");
    search->add_option("file", search_file, "CSV matrix, one point per line")->required();
    search->add_option("--algorithm", search_algorithm, "traversal strategy")
        ->required()
        ->check(CLI::IsMember({"lex", "priority"}));
    search->add_flag("--json", search_json, "emit JSON instead of text");

    ExperimentConfig config;
    std::string out_prefix;
    CLI::App* experiment = app.add_subcommand("experiment", "Run a reproducible sweep");
    experiment->add_option("id", config.id, "table1, table2, table3, or steps")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "steps"}));
    experiment->add_option("--trials", config.trials, "trials per grid cell")
        ->default_val(100);
    experiment->add_option("--seed", config.seed, "master seed")->default_val(0);
    experiment->add_option("--m", config.ms, "row counts (default: per-id grid)");
    experiment->add_option("--n", config.ns, "dimensions (default: per-id grid)");
    experiment->add_option("--v", config.vs, "variances (default: per-id grid)");
    experiment->add_option("--jobs", config.jobs, "worker threads (0 = auto)")
        ->default_val(0);
    std::string gen_mode = "normalize";
    experiment->add_option("--gen-mode", gen_mode, "coordinate-1 handling when sampling")
        ->check(CLI::IsMember({"normalize", "fix-first"}));
    experiment->add_option("--out", out_prefix,
                           "output path prefix for <prefix>.csv/.json (default: the id)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (fw->parsed()) return cmd_fw(fw_file, fw_json);
        if (project->parsed()) return cmd_project(proj_file, proj_generators, proj_json);
        if (search->parsed()) return cmd_search(search_file, search_algorithm, search_json);
        config.mode = gen_mode == "fix-first" ? GenMode::FixFirst : GenMode::Normalize;
        if (out_prefix.empty()) out_prefix = config.id;
        return cmd_experiment(config, out_prefix);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {  // includes DimensionError, LpFormatError
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}
