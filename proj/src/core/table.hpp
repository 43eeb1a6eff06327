#pragma once

#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace ortholab {

enum class OutputFormat { CSV, JSON };

OutputFormat format_from_name(const std::string& name);

/// Shortest round-trip decimal rendering (std::to_chars); locale-independent,
/// bitwise reproducible.
std::string format_double(double v);

/// A rectangular numeric table with named columns, an optional leading label
/// column, and ordered key/value metadata. Rows are doubles; integral values
/// render without a fractional part.
class ScanTable {
 public:
  explicit ScanTable(std::vector<std::string> columns, std::string label_column = "");

  void add_row(std::vector<double> values);
  void add_row(const std::string& label, std::vector<double> values);
  void set_meta(const std::string& key, double value);
  void set_meta(const std::string& key, const std::string& value);

  const std::vector<std::string>& columns() const { return columns_; }
  bool has_labels() const { return !label_column_.empty(); }
  std::size_t num_rows() const { return rows_.size(); }
  double value(std::size_t row, const std::string& column) const;
  double value(std::size_t row, std::size_t col) const;
  const std::string& label(std::size_t row) const;
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return meta_; }
  const std::string* meta(const std::string& key) const;

  /// CSV: one header line, one line per row; metadata is not part of the CSV
  /// payload. JSON: columns, rows, labels and metadata together.
  std::string to_csv() const;
  std::string to_json() const;
  std::string render(OutputFormat f) const;
  void write(const std::string& path, OutputFormat f) const;

 private:
  std::vector<std::string> columns_;
  std::string label_column_;
  std::vector<std::string> labels_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

}  // namespace ortholab
