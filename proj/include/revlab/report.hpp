#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace revlab {

// Shortest decimal that round-trips the double (at most 17 significant
// digits); CSV and JSON outputs use it so identical configs give identical
// bytes.
std::string format_double(double v);

// '#'-prefixed metadata block embedded at the top of every output file.
struct OutputMeta {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> entries;  // key, value
    void add(std::string key, std::string value);
};

// One CSV table: metadata comments, a header line, then pre-formatted rows.
std::string render_csv(const OutputMeta& meta, const std::string& header,
                       const std::vector<std::vector<std::string>>& columns);

std::vector<std::string> format_column(const Eigen::VectorXd& v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Parses a CSV produced by render_csv: skips '#' comments and the header,
// returns the first two numeric columns.
std::pair<Eigen::VectorXd, Eigen::VectorXd> read_xy_csv(const std::string& path);

}  // namespace revlab
