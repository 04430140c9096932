#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace ncosc {

// Deterministic CSV output: comma separated, one header row, UTF-8, LF line
// endings, floats printed with 12 significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns);

  void row(std::span<const double> values);
  void row_with_status(std::span<const double> values, const std::string& status);

  static std::string format(double v);

 private:
  std::ofstream out_;
  std::size_t columns_ = 0;
};

}  // namespace ncosc
