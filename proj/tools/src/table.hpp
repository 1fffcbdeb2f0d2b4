#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spinchain::cli {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric output table with an optional leading label column. Values are
// rendered with 12 significant digits; NaN marks an absent entry.
struct Table {
  std::vector<std::string> columns;
  std::string label_column;          // empty = no label column
  std::vector<std::string> labels;   // one per row when label_column is set
  std::vector<std::vector<double>> rows;
};

std::string format_value(double value);

std::string render_csv(const Table& table);
std::string render_json(const Table& table);

// path "-" writes to stdout; format is "csv" or "json".
void write_table(const Table& table, const std::string& path,
                 const std::string& format);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace spinchain::cli
