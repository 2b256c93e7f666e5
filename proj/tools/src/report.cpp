#include "nlqed/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "nlqed/cli/config.hpp"

namespace nlqed::cli {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Csv::Csv(std::vector<std::string> header) : header_(std::move(header)) {}

void Csv::add_metadata(const std::string& key, const std::string& value) {
  metadata_.push_back("# " + key + " " + value);
}

void Csv::add_footer(const std::string& key, const std::string& value) {
  footer_.push_back("# " + key + " " + value);
}

void Csv::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::logic_error("Csv: row width does not match header");
  }
  rows_.push_back(std::move(row));
}

std::string Csv::serialize() const {
  std::string out;
  for (const auto& m : metadata_) {
    out += m;
    out += '\n';
  }
  for (size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  for (const auto& f : footer_) {
    out += f;
    out += '\n';
  }
  return out;
}

namespace {

std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const PlotSeries& series, bool log_x,
                          bool log_y) {
  if (series.x.size() != series.y.size()) {
    throw std::logic_error("svg_line_plot: x and y lengths differ");
  }
  constexpr double width = 640.0, height = 480.0;
  constexpr double left = 70.0, right = 20.0, top = 40.0, bottom = 50.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  std::vector<double> xs, ys;
  xs.reserve(series.x.size());
  ys.reserve(series.y.size());
  for (size_t i = 0; i < series.x.size(); ++i) {
    const double x = log_x ? std::log10(series.x[i]) : series.x[i];
    const double y = log_y ? std::log10(series.y[i]) : series.y[i];
    if (std::isfinite(x) && std::isfinite(y)) {
      xs.push_back(x);
      ys.push_back(y);
    }
  }

  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  if (!xs.empty()) {
    x_lo = x_hi = xs[0];
    y_lo = y_hi = ys[0];
    for (size_t i = 1; i < xs.size(); ++i) {
      x_lo = std::min(x_lo, xs[i]);
      x_hi = std::max(x_hi, xs[i]);
      y_lo = std::min(y_lo, ys[i]);
      y_hi = std::max(y_hi, ys[i]);
    }
  }
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;

  const auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  const auto py = [&](double y) { return top + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  svg += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\">" + title + "</text>\n";
  // axes
  svg += "<line x1=\"" + fmt_coord(left) + "\" y1=\"" + fmt_coord(top) + "\" x2=\"" +
         fmt_coord(left) + "\" y2=\"" + fmt_coord(top + plot_h) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt_coord(left) + "\" y1=\"" + fmt_coord(top + plot_h) + "\" x2=\"" +
         fmt_coord(left + plot_w) + "\" y2=\"" + fmt_coord(top + plot_h) +
         "\" stroke=\"black\"/>\n";
  // ticks: five per axis
  for (int i = 0; i <= 4; ++i) {
    const double fx = x_lo + (x_hi - x_lo) * i / 4.0;
    const double fy = y_lo + (y_hi - y_lo) * i / 4.0;
    const double tx = px(fx);
    const double ty = py(fy);
    svg += "<line x1=\"" + fmt_coord(tx) + "\" y1=\"" + fmt_coord(top + plot_h) + "\" x2=\"" +
           fmt_coord(tx) + "\" y2=\"" + fmt_coord(top + plot_h + 5.0) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_coord(tx) + "\" y=\"" + fmt_coord(top + plot_h + 18.0) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"10\">" +
           fmt_tick(log_x ? std::pow(10.0, fx) : fx) + "</text>\n";
    svg += "<line x1=\"" + fmt_coord(left - 5.0) + "\" y1=\"" + fmt_coord(ty) + "\" x2=\"" +
           fmt_coord(left) + "\" y2=\"" + fmt_coord(ty) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_coord(left - 8.0) + "\" y=\"" + fmt_coord(ty + 3.0) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">" +
           fmt_tick(log_y ? std::pow(10.0, fy) : fy) + "</text>\n";
  }
  svg += "<text x=\"" + fmt_coord(left + plot_w / 2.0) + "\" y=\"" + fmt_coord(height - 12.0) +
         "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" + x_label +
         "</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt_coord(top + plot_h / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
         "transform=\"rotate(-90 16 " + fmt_coord(top + plot_h / 2.0) + ")\">" + y_label +
         "</text>\n";
  if (!xs.empty()) {
    svg += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) svg += ' ';
      svg += fmt_coord(px(xs[i])) + "," + fmt_coord(py(ys[i]));
    }
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw io_error("cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("failed writing " + path.string());
}

}  // namespace nlqed::cli
