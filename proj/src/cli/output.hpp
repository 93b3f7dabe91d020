#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace spinon::cli {

/// Shortest decimal text with 17 significant digits.
std::string format_double(double value);

std::string sha256_hex(const std::string& bytes);

/// Builds a CSV table row by row; numbers are printed with format_double.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  CsvTable& row(const std::vector<double>& values);
  CsvTable& row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::size_t width_;
  std::string text_;
};

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Standalone SVG with one polyline per series.
std::string svg_line_plot(const std::string& title, const std::vector<PlotSeries>& series);

/// Writes artifacts atomically into one directory and records their checksums.
class ArtifactWriter {
 public:
  explicit ArtifactWriter(std::filesystem::path directory);

  void write(const std::string& name, const std::string& content);
  const std::map<std::string, std::string>& checksums() const { return checksums_; }
  const std::filesystem::path& directory() const { return directory_; }

  /// manifest.json: {command, parameters, versions, checksums}.
  void write_manifest(const std::string& command, const std::string& parameters_json);

 private:
  std::filesystem::path directory_;
  std::map<std::string, std::string> checksums_;
};

}  // namespace spinon::cli
