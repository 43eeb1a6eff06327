#include "table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "json.hpp"

namespace ortholab {

OutputFormat format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::CSV;
  if (name == "json") return OutputFormat::JSON;
  fail(errc::invalid_argument, "unknown output format: " + name);
}

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ScanTable::ScanTable(std::vector<std::string> columns, std::string label_column)
    : columns_(std::move(columns)), label_column_(std::move(label_column)) {
  require(!columns_.empty(), errc::invalid_argument, "table needs at least one column");
}

void ScanTable::add_row(std::vector<double> values) {
  require(label_column_.empty(), errc::invalid_argument, "labelled table needs a row label");
  require(values.size() == columns_.size(), errc::invalid_argument, "row width mismatch");
  rows_.push_back(std::move(values));
}

void ScanTable::add_row(const std::string& label, std::vector<double> values) {
  require(!label_column_.empty(), errc::invalid_argument, "table has no label column");
  require(values.size() == columns_.size(), errc::invalid_argument, "row width mismatch");
  labels_.push_back(label);
  rows_.push_back(std::move(values));
}

void ScanTable::set_meta(const std::string& key, double value) {
  set_meta(key, format_double(value));
}

void ScanTable::set_meta(const std::string& key, const std::string& value) {
  for (auto& kv : meta_)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  meta_.emplace_back(key, value);
}

double ScanTable::value(std::size_t row, const std::string& column) const {
  auto it = std::find(columns_.begin(), columns_.end(), column);
  require(it != columns_.end(), errc::invalid_argument, "no such column: " + column);
  return value(row, static_cast<std::size_t>(it - columns_.begin()));
}

double ScanTable::value(std::size_t row, std::size_t col) const {
  require(row < rows_.size() && col < columns_.size(), errc::invalid_argument,
          "table index out of range");
  return rows_[row][col];
}

const std::string& ScanTable::label(std::size_t row) const {
  require(has_labels() && row < labels_.size(), errc::invalid_argument,
          "table index out of range");
  return labels_[row];
}

const std::string* ScanTable::meta(const std::string& key) const {
  for (const auto& kv : meta_)
    if (kv.first == key) return &kv.second;
  return nullptr;
}

std::string ScanTable::to_csv() const {
  std::string out;
  if (has_labels()) {
    out += label_column_;
    out += ',';
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    out += columns_[c];
    out += (c + 1 < columns_.size()) ? "," : "\n";
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (has_labels()) {
      out += labels_[r];
      out += ',';
    }
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      out += format_double(rows_[r][c]);
      out += (c + 1 < columns_.size()) ? "," : "\n";
    }
  }
  return out;
}

std::string ScanTable::to_json() const {
  nlohmann::ordered_json j;
  j["columns"] = columns_;
  if (has_labels()) {
    j["label_column"] = label_column_;
    j["labels"] = labels_;
  }
  j["rows"] = rows_;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& kv : meta_) meta[kv.first] = kv.second;
  j["metadata"] = meta;
  return j.dump(2) + "\n";
}

std::string ScanTable::render(OutputFormat f) const {
  return f == OutputFormat::CSV ? to_csv() : to_json();
}

void ScanTable::write(const std::string& path, OutputFormat f) const {
  std::ofstream os(path, std::ios::binary);
  require(os.good(), errc::io, "cannot open " + path + " for writing");
  std::string s = render(f);
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
  require(os.good(), errc::io, "failed writing " + path);
}

}  // namespace ortholab
