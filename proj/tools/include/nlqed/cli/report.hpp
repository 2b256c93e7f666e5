#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace nlqed::cli {

// 17 significant digits: doubles round-trip exactly, so identical runs
// serialize to identical bytes.
std::string format_double(double v);

// CSV with '#'-prefixed metadata lines above the header and optional
// metadata footer, comma separators, LF endings. Rows are preformatted
// strings so the caller controls each column's representation.
class Csv {
 public:
  explicit Csv(std::vector<std::string> header);

  void add_metadata(const std::string& key, const std::string& value);
  void add_footer(const std::string& key, const std::string& value);
  void add_row(std::vector<std::string> row);

  std::size_t rows() const { return rows_.size(); }
  std::string serialize() const;

 private:
  std::vector<std::string> metadata_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> footer_;
};

struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal static line chart: one series, linear or log10 axes, fixed layout,
// deterministic output. Returns the SVG document text.
std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const PlotSeries& series, bool log_x,
                          bool log_y);

// Writes content to path, creating parent directories. Throws io_error.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace nlqed::cli
