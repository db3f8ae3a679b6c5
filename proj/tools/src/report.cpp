#include "tropfw/report.hpp"

#include <ostream>

namespace tropfw {

namespace {

Rational ratio(std::size_t num, std::size_t den) {
    if (den == 0) return Rational(0);
    return Rational(static_cast<long>(num)) / Rational(static_cast<long>(den));
}

}  // namespace

Rational CellStats::rate() const { return ratio(successes, trials); }
Rational CellStats::mean_steps_a1() const { return ratio(total_steps_a1, successes); }
Rational CellStats::mean_steps_a4() const { return ratio(total_steps_a4, successes); }

nlohmann::json rational_to_json(const Rational& q) {
    return {{"fraction", to_fraction_string(q)}, {"decimal", to_double(q)}};
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const CellStats& c : report.cells) {
        nlohmann::json cell{
            {"m", c.m},
            {"n", c.n},
            {"v", c.v},
            {"trials", c.trials},
            {"successes", c.successes},
            {"rate", rational_to_json(c.rate())},
            {"exclusivity_violations", c.exclusivity_violations},
        };
        if (c.has_steps) {
            cell["steps"] = {
                {"mean_a1", rational_to_json(c.mean_steps_a1())},
                {"mean_a4", rational_to_json(c.mean_steps_a4())},
                {"a1_gt_a4", c.a1_gt_a4},
                {"a1_lt_a4", c.a1_lt_a4},
                {"a1_eq_a4", c.a1_eq_a4},
            };
            cell["timing_ms"] = {{"mean_a1", c.mean_ms_a1}, {"mean_a4", c.mean_ms_a4}};
        }
        cells.push_back(std::move(cell));
    }
    return nlohmann::json{
        {"experiment", report.id},
        {"version", report.version},
        {"seed", report.seed},
        {"prng", report.prng},
        {"gen_mode", report.gen_mode},
        {"trials_per_cell", report.trials_per_cell},
        {"jobs", report.jobs},
        {"cells", std::move(cells)},
    };
}

void write_report_json(std::ostream& out, const ExperimentReport& report) {
    out << report_to_json(report).dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
    out << "# experiment: " << report.id << '\n'
        << "# version: " << report.version << '\n'
        << "# seed: " << report.seed << '\n'
        << "# prng: " << report.prng << '\n'
        << "# gen_mode: " << report.gen_mode << '\n'
        << "# trials_per_cell: " << report.trials_per_cell << '\n'
        << "# jobs: " << report.jobs << '\n';
    out << "m,n,v,trials,successes,rate,rate_decimal,"
           "mean_steps_a1,mean_steps_a1_decimal,mean_steps_a4,mean_steps_a4_decimal,"
           "a1_gt_a4,a1_lt_a4,a1_eq_a4,exclusivity_violations,mean_ms_a1,mean_ms_a4\n";
    for (const CellStats& c : report.cells) {
        out << c.m << ',' << c.n << ',' << c.v << ',' << c.trials << ',' << c.successes
            << ',' << to_fraction_string(c.rate()) << ',' << to_double(c.rate());
        if (c.has_steps) {
            out << ',' << to_fraction_string(c.mean_steps_a1()) << ','
                << to_double(c.mean_steps_a1()) << ','
                << to_fraction_string(c.mean_steps_a4()) << ','
                << to_double(c.mean_steps_a4()) << ',' << c.a1_gt_a4 << ',' << c.a1_lt_a4
                << ',' << c.a1_eq_a4 << ',' << c.exclusivity_violations << ','
                << c.mean_ms_a1 << ',' << c.mean_ms_a4;
        } else {
            out << ",,,,,,,," << c.exclusivity_violations << ",,";
        }
        out << '\n';
    }
}

}
