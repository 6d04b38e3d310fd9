#include "revlab/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "revlab/errors.hpp"

namespace revlab {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void OutputMeta::add(std::string key, std::string value) {
    entries.emplace_back(std::move(key), std::move(value));
}

std::string render_csv(const OutputMeta& meta, const std::string& header,
                       const std::vector<std::vector<std::string>>& columns) {
    std::string out;
    out += "# subcommand: " + meta.subcommand + "\n";
    for (const auto& [k, v] : meta.entries) out += "# " + k + ": " + v + "\n";
    out += header + "\n";
    if (columns.empty()) return out;
    const std::size_t rows = columns[0].size();
    for (const auto& col : columns) {
        if (col.size() != rows) throw validation_error("csv columns must have equal length");
    }
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            out += columns[c][r];
        }
        out += '\n';
    }
    return out;
}

std::vector<std::string> format_column(const Eigen::VectorXd& v) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_double(v[i]));
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw validation_error("cannot open output file: " + path);
    f << content;
    if (!f) throw validation_error("failed writing output file: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw validation_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> read_xy_csv(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::string line;
    std::vector<double> xs, ys;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {  // column-name line
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw validation_error("csv row without two columns");
        try {
            xs.push_back(std::stod(line.substr(0, comma)));
            std::string rest = line.substr(comma + 1);
            const auto next = rest.find(',');
            ys.push_back(std::stod(next == std::string::npos ? rest : rest.substr(0, next)));
        } catch (const std::exception&) {
            throw validation_error("csv row with non-numeric data: " + line);
        }
    }
    if (xs.size() < 2) throw validation_error("csv holds fewer than two samples");
    Eigen::VectorXd x(xs.size()), y(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x[static_cast<Eigen::Index>(i)] = xs[i];
        y[static_cast<Eigen::Index>(i)] = ys[i];
    }
    return {x, y};
}

}  // namespace revlab
