#include "pronyif/plot.hpp"

#include "pronyif/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <string>

namespace pronyif {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

constexpr std::array<const char*, 8> kPalette{"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                              "#ff7f00", "#a65628", "#f781bf", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Frame {
  double x0, x1, y0, y1;
  bool log_y = false;

  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
  double py(double y) const {
    const double a = log_y ? std::log10(y) : y;
    const double b0 = log_y ? std::log10(y0) : y0;
    const double b1 = log_y ? std::log10(y1) : y1;
    return kHeight - kBottom - (a - b0) / (b1 - b0) * (kHeight - kTop - kBottom);
  }
};

void open_svg(std::ostringstream& s) {
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& s, const Frame& f, const std::string& xlabel, const std::string& ylabel) {
  const double l = kLeft, r = kWidth - kRight, t = kTop, b = kHeight - kBottom;
  s << "<rect x=\"" << l << "\" y=\"" << t << "\" width=\"" << r - l << "\" height=\"" << b - t
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = f.x0 + (f.x1 - f.x0) * i / 4.0;
    s << "<text x=\"" << num(f.px(xv)) << "\" y=\"" << b + 15 << "\" text-anchor=\"middle\">" << tick(xv)
      << "</text>\n";
    double yv = f.y0 + (f.y1 - f.y0) * i / 4.0;
    if (f.log_y) yv = std::pow(10.0, std::log10(f.y0) + (std::log10(f.y1) - std::log10(f.y0)) * i / 4.0);
    s << "<text x=\"" << l - 5 << "\" y=\"" << num(f.py(yv) + 4) << "\" text-anchor=\"end\">" << tick(yv)
      << "</text>\n";
  }
  s << "<text x=\"" << (l + r) / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">" << xlabel
    << "</text>\n";
  s << "<text x=\"14\" y=\"" << (t + b) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << (t + b) / 2
    << ")\">" << ylabel << "</text>\n";
}

void polyline(std::ostringstream& s, const std::vector<std::pair<double, double>>& pts, const char* color) {
  if (pts.empty()) return;
  s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  for (const auto& [x, y] : pts) s << num(x) << ',' << num(y) << ' ';
  s << "\"/>\n";
}

std::string ramp(double u) {
  // dark blue -> teal -> yellow
  u = std::clamp(u, 0.0, 1.0);
  const double r = u < 0.5 ? 20 + 2 * u * 10 : 30 + (u - 0.5) * 2 * 223;
  const double g = u < 0.5 ? 20 + 2 * u * 140 : 160 + (u - 0.5) * 2 * 70;
  const double b = u < 0.5 ? 80 + 2 * u * 60 : 140 - (u - 0.5) * 2 * 110;
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(r), static_cast<int>(g), static_cast<int>(b));
  return buf;
}

// Series per mode_id, thinned to at most 600 points.
std::map<int, std::vector<std::pair<double, double>>> load_series(const std::filesystem::path& csv) {
  std::map<int, std::vector<std::pair<double, double>>> out;
  for (const auto& row : read_estimates_csv(csv)) out[row.mode_id].emplace_back(row.t, row.frequency);
  for (auto& [id, pts] : out) {
    const std::size_t stride = std::max<std::size_t>(1, pts.size() / 600);
    std::vector<std::pair<double, double>> thin;
    for (std::size_t i = 0; i < pts.size(); i += stride) thin.push_back(pts[i]);
    pts = std::move(thin);
  }
  return out;
}

void overlay(std::ostringstream& s, const Frame& f, const std::vector<std::filesystem::path>& csvs) {
  std::size_t color = 0;
  for (const auto& csv : csvs) {
    for (const auto& [id, pts] : load_series(csv)) {
      std::vector<std::pair<double, double>> px;
      for (const auto& [t, hz] : pts) {
        if (std::isfinite(hz)) px.emplace_back(f.px(t), f.py(std::clamp(hz, f.y0, f.y1)));
      }
      polyline(s, px, kPalette[color++ % kPalette.size()]);
    }
  }
}

}  // namespace

void plot_tf_svg(const std::filesystem::path& tf_csv, const std::vector<std::filesystem::path>& estimate_csvs,
                 const std::filesystem::path& svg) {
  const auto table = read_tf_csv(tf_csv);
  const Eigen::Index rows = table.values.rows();
  const Eigen::Index cols = table.values.cols();
  if (rows < 1 || cols < 2) throw IoError(tf_csv.string() + ": nothing to plot");

  // Time axis from the row count; the header only carries frequencies.
  const double df = table.frequency[1] - table.frequency[0];
  const double fs = df * static_cast<double>(cols);
  Frame f{0.0, static_cast<double>(rows) / fs, table.frequency[0], table.frequency[cols - 1] + df};

  const Eigen::Index nx = std::min<Eigen::Index>(rows, 256);
  const Eigen::Index ny = std::min<Eigen::Index>(cols, 160);
  Eigen::MatrixXd pooled = Eigen::MatrixXd::Zero(nx, ny);
  for (Eigen::Index n = 0; n < rows; ++n) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      auto& cell = pooled(n * nx / rows, k * ny / cols);
      cell = std::max(cell, table.values(n, k));
    }
  }
  const double top = pooled.maxCoeff();
  const double decades = 6.0;

  std::ostringstream s;
  open_svg(s);
  const double cw = (kWidth - kLeft - kRight) / static_cast<double>(nx);
  const double ch = (kHeight - kTop - kBottom) / static_cast<double>(ny);
  for (Eigen::Index i = 0; i < nx; ++i) {
    for (Eigen::Index j = 0; j < ny; ++j) {
      const double v = pooled(i, j);
      const double u = top > 0.0 && v > 0.0 ? 1.0 + std::log10(v / top) / decades : 0.0;
      s << "<rect x=\"" << num(kLeft + static_cast<double>(i) * cw) << "\" y=\""
        << num(kHeight - kBottom - static_cast<double>(j + 1) * ch) << "\" width=\"" << num(cw + 0.3)
        << "\" height=\"" << num(ch + 0.3) << "\" fill=\"" << ramp(u) << "\"/>\n";
    }
  }
  overlay(s, f, estimate_csvs);
  axes(s, f, "time (s)", "frequency (Hz)");
  s << "</svg>\n";
  write_text(svg, s.str());
}

void plot_estimates_svg(const std::vector<std::filesystem::path>& estimate_csvs, const std::filesystem::path& svg) {
  double t1 = 0.0, lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& csv : estimate_csvs) {
    for (const auto& row : read_estimates_csv(csv)) {
      t1 = std::max(t1, row.t);
      if (std::isfinite(row.frequency)) {
        lo = std::min(lo, row.frequency);
        hi = std::max(hi, row.frequency);
      }
    }
  }
  if (!(hi >= lo)) throw IoError("plot_estimates_svg: no finite estimates");
  const double pad = std::max(1.0, 0.05 * (hi - lo));
  Frame f{0.0, t1 > 0.0 ? t1 : 1.0, lo - pad, hi + pad};
  std::ostringstream s;
  open_svg(s);
  overlay(s, f, estimate_csvs);
  axes(s, f, "time (s)", "frequency (Hz)");
  s << "</svg>\n";
  write_text(svg, s.str());
}

void plot_errors_svg(const std::filesystem::path& error_csv, const std::filesystem::path& svg) {
  const auto rows = read_error_csv(error_csv);
  if (rows.empty()) throw IoError(error_csv.string() + ": no rows");
  std::map<std::pair<std::string, int>, std::vector<std::pair<double, double>>> series;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y0 = x0, y1 = -x0;
  for (const auto& r : rows) {
    series[{r.estimator, r.mode_id}].emplace_back(r.sigma, r.rmse);
    x0 = std::min(x0, r.sigma);
    x1 = std::max(x1, r.sigma);
    if (r.rmse > 0.0 && std::isfinite(r.rmse)) {
      y0 = std::min(y0, r.rmse);
      y1 = std::max(y1, r.rmse);
    }
  }
  if (!(y1 >= y0)) y0 = y1 = 1.0;
  if (x1 == x0) x1 = x0 + 1e-3;
  Frame f{x0, x1, std::pow(10.0, std::floor(std::log10(y0))), std::pow(10.0, std::ceil(std::log10(y1)) + 1e-9),
          true};
  if (f.y1 <= f.y0) f.y1 = f.y0 * 10.0;

  std::ostringstream s;
  open_svg(s);
  std::size_t color = 0;
  double legend_y = kTop + 14;
  for (const auto& [key, pts] : series) {
    std::vector<std::pair<double, double>> px;
    for (const auto& [x, y] : pts) {
      if (y > 0.0 && std::isfinite(y)) px.emplace_back(f.px(x), f.py(y));
    }
    const char* c = kPalette[color++ % kPalette.size()];
    polyline(s, px, c);
    s << "<text x=\"" << kWidth - kRight - 8 << "\" y=\"" << legend_y << "\" text-anchor=\"end\" fill=\"" << c
      << "\">" << key.first << " mode " << key.second << "</text>\n";
    legend_y += 14;
  }
  axes(s, f, "sigma (s)", "RMSE (Hz)");
  s << "</svg>\n";
  write_text(svg, s.str());
}

}  // namespace pronyif
