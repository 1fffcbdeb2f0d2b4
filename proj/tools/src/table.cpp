#include "table.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "spinchain/errors.hpp"

namespace spinchain::cli {

std::string format_value(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string render_csv(const Table& table) {
  std::string out;
  const bool labelled = !table.label_column.empty();
  if (labelled) {
    out += table.label_column;
    if (!table.columns.empty()) {
      out += ',';
    }
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += table.columns[i];
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (labelled) {
      out += table.labels[r];
      if (!table.rows[r].empty()) {
        out += ',';
      }
    }
    for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      out += format_value(table.rows[r][c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  if (!table.label_column.empty()) {
    columns.push_back(table.label_column);
  }
  for (const std::string& column : table.columns) {
    columns.push_back(column);
  }
  doc["columns"] = columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    if (!table.label_column.empty()) {
      row.push_back(table.labels[r]);
    }
    for (double value : table.rows[r]) {
      row.push_back(value);  // non-finite values serialize as null
    }
    rows.push_back(row);
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

void write_table(const Table& table, const std::string& path,
                 const std::string& format) {
  if (format != "csv" && format != "json") {
    throw ConfigError("unknown output format: " + format);
  }
  const std::string text =
      format == "csv" ? render_csv(table) : render_json(table);
  if (path == "-") {
    std::cout << text;
    if (!std::cout) {
      throw IoError("failed writing to stdout");
    }
    return;
  }
  write_text_file(path, text);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out << text;
  if (!out) {
    throw IoError("failed writing " + path);
  }
}

}  // namespace spinchain::cli
