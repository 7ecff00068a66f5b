#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "stochuc/common.hpp"

namespace stochuc {

//! Minimal CSV table: a header row plus string cells, with typed accessors.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  }

  int require_column(const std::string& name, const std::string& file) const {
    int c = column(name);
    if (c < 0) throw ValidationError(file + ": missing column '" + name + "'");
    return c;
  }
};

inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("missing file: " + path);
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line);
    for (auto& c : cells) c = trim(c);
    if (first) {
      t.header = cells;
      first = false;
    } else {
      if (cells.size() != t.header.size())
        throw ValidationError(path + ": row with " + std::to_string(cells.size()) +
                              " cells, expected " + std::to_string(t.header.size()));
      t.rows.push_back(cells);
    }
  }
  if (first) throw ValidationError(path + ": empty file");
  return t;
}

inline double parse_double(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(context + ": not a number: '" + s + "'");
  }
}

inline long parse_long(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(context + ": not an integer: '" + s + "'");
  }
}

//! Streaming CSV writer; doubles are emitted in exact round-trip form.
class CsvWriter {
public:
  explicit CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw ValidationError("cannot open for writing: " + path);
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ofstream& stream() { return out_; }

private:
  std::ofstream out_;
};

}  // namespace stochuc
