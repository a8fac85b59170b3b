#pragma once

#include <string>
#include <vector>

// CSV emission helpers: comma-separated, '#'-prefixed header comments,
// decimal fields with 12 significant digits. Formatting is locale-free so
// identical runs produce byte-identical files.

namespace catqed {

std::string format_number(double v);

class CsvWriter {
 public:
  void comment(const std::string& line);                 // "# line"
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& fields);
  void row_numbers(const std::vector<double>& fields);

  const std::string& text() const { return out_; }
  void write_file(const std::string& path) const;

 private:
  std::string out_;
};

} // namespace catqed
