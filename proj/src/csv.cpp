#include "catqed/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace catqed {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0; // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void CsvWriter::comment(const std::string& line) {
  out_ += "# ";
  out_ += line;
  out_ += "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) { row(columns); }

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ += ",";
    out_ += fields[i];
  }
  out_ += "\n";
}

void CsvWriter::row_numbers(const std::vector<double>& fields) {
  std::vector<std::string> s;
  s.reserve(fields.size());
  for (double v : fields) s.push_back(format_number(v));
  row(s);
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("CsvWriter: cannot open " + path);
  f << out_;
  if (!f) throw std::runtime_error("CsvWriter: write failed for " + path);
}

} // namespace catqed
