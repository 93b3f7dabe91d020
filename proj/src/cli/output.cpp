#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <Eigen/Core>
#include <openssl/evp.h>
#include <openssl/opensslv.h>

#include "json.hpp"
#include "spinon/errors.hpp"

namespace spinon::cli {

namespace fs = std::filesystem;

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

CsvTable::CsvTable(std::vector<std::string> header) : width_(header.size()) {
  row(header);
}

CsvTable& CsvTable::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  return row(cells);
}

CsvTable& CsvTable::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::logic_error("csv row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
  return *this;
}

std::string CsvTable::str() const { return text_; }

std::string svg_line_plot(const std::string& title, const std::vector<PlotSeries>& series) {
  constexpr double kWidth = 640, kHeight = 400, kMargin = 50;
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const auto& s : series) {
    for (double x : s.x) x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
    for (double y : s.y) y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1;
  const auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
  const auto py = [&](double y) { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); };

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\">" + title + "</text>\n";
  svg += "<text x=\"" + format_double(kMargin) + "\" y=\"" + format_double(kHeight - 16) +
         "\" font-family=\"sans-serif\" font-size=\"11\">x: [" + format_double(x_lo) + ", " + format_double(x_hi) +
         "]  y: [" + format_double(y_lo) + ", " + format_double(y_hi) + "]</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kColors[i % std::size(kColors)];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" points=\"";
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t k = 0; k < n; ++k) {
      char point[64];
      std::snprintf(point, sizeof point, "%.2f,%.2f ", px(s.x[k]), py(s.y[k]));
      svg += point;
    }
    svg += "\"/>\n";
    svg += "<text x=\"" + format_double(kWidth - kMargin) + "\" y=\"" + format_double(kMargin + 14.0 * i) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" + color + "\">" +
           s.label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

ArtifactWriter::ArtifactWriter(fs::path directory) : directory_(std::move(directory)) {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) throw InvalidArgument("out: cannot create directory '" + directory_.string() + "': " + ec.message());
}

void ArtifactWriter::write(const std::string& name, const std::string& content) {
  const fs::path target = directory_ / name;
  const fs::path temp = directory_ / ("." + name + ".tmp");
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + temp.string() + "' for writing");
    out << content;
    if (!out.flush()) throw Error("write to '" + temp.string() + "' failed");
  }
  fs::rename(temp, target);
  checksums_[name] = sha256_hex(content);
}

void ArtifactWriter::write_manifest(const std::string& command, const std::string& parameters_json) {
  nlohmann::ordered_json manifest;
  manifest["command"] = command;
  manifest["parameters"] = nlohmann::json::parse(parameters_json);
  manifest["versions"] = {
      {"spinon", "1.0.0"},
      {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                    std::to_string(EIGEN_MINOR_VERSION)},
      {"openssl", OPENSSL_VERSION_TEXT},
  };
  manifest["checksums"] = checksums_;
  const std::string text = manifest.dump(2) + "\n";
  const auto sums = checksums_;
  write("manifest.json", text);
  checksums_ = sums;
}

}  // namespace spinon::cli
