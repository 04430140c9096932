#include "ncosc/csv.hpp"

#include <cstdio>

#include "ncosc/errors.hpp"

namespace ncosc {

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), columns_(columns.size()) {
  if (!out_) throw ConfigError("cannot open output file: " + path.string());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ << ',';
    out_ << columns[i];
  }
  out_ << '\n';
}

std::string CsvWriter::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != columns_)
    throw ConfigError("CsvWriter: row width does not match the header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format(values[i]);
  }
  out_ << '\n';
}

void CsvWriter::row_with_status(std::span<const double> values,
                                const std::string& status) {
  if (values.size() + 1 != columns_)
    throw ConfigError("CsvWriter: row width does not match the header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format(values[i]);
  }
  out_ << ',' << status << '\n';
}

}  // namespace ncosc
