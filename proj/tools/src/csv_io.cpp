#include "tropfw/csv_io.hpp"

#include "tropfw/errors.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace tropfw {

namespace {

std::string context(const std::string& name, std::size_t line) {
    return name + ":" + std::to_string(line) + ": ";
}

}  // namespace

DataMatrix read_matrix_csv(std::istream& in, const std::string& name) {
    std::vector<std::vector<Rational>> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (const auto last = line.find_last_not_of(" \t\r"); last == std::string::npos)
            continue;
        else
            line.erase(last + 1);
        if (line.back() == ',')
            throw ParseError(context(name, lineno) + "empty trailing cell");

        std::vector<Rational> row;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                row.push_back(parse_rational(cell));
            } catch (const ParseError& e) {
                throw ParseError(context(name, lineno) + e.what());
            }
        }
        if (row.size() < 2)
            throw ParseError(context(name, lineno) +
                             "points need at least 2 coordinates, got " +
                             std::to_string(row.size()));
        if (!raw.empty() && row.size() != raw.front().size())
            throw ParseError(context(name, lineno) + "row has " +
                             std::to_string(row.size()) + " cells but earlier rows have " +
                             std::to_string(raw.front().size()));
        raw.push_back(std::move(row));
    }
    if (raw.empty()) throw ParseError(name + ": no data rows");
    return DataMatrix::from_raw(std::move(raw));
}

DataMatrix read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return read_matrix_csv(in, path);
}

void write_matrix_csv(std::ostream& out, const DataMatrix& X) {
    for (std::size_t i = 0; i < X.row_count(); ++i) {
        const auto& coords = X.row(i).coords();
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (k) out << ',';
            out << to_fraction_string(coords[k]);
        }
        out << '\n';
    }
}

}
