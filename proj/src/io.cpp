#include "pronyif/io.hpp"

#include <charconv>
#include <complex>
#include <limits>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pronyif {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return in;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::filesystem::path& path) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw IoError(path.string() + ": bad number '" + s + "'");
  return v;
}

long long parse_int(const std::string& s, const std::filesystem::path& path) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw IoError(path.string() + ": bad integer '" + s + "'");
  return v;
}

bool next_row(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_signal_csv(const std::filesystem::path& path, const Signal& signal) {
  auto out = open_out(path);
  out << "# sampling_rate=" << format_number(signal.sampling_rate) << "\n";
  out << "index,re,im\n";
  for (Eigen::Index n = 0; n < signal.size(); ++n) {
    out << n << ',' << format_number(signal.samples[n].real()) << ',' << format_number(signal.samples[n].imag())
        << '\n';
  }
}

Signal read_signal_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  Signal s;
  s.sampling_rate = 0.0;
  if (!next_row(in, line) || line.rfind("# sampling_rate=", 0) != 0) {
    throw IoError(path.string() + ": first line must be '# sampling_rate=<Hz>'");
  }
  s.sampling_rate = parse_double(line.substr(16), path);
  if (!next_row(in, line) || line != "index,re,im") throw IoError(path.string() + ": missing 'index,re,im' header");
  std::vector<std::complex<double>> values;
  while (next_row(in, line)) {
    const auto cells = split(line);
    if (cells.size() != 3) throw IoError(path.string() + ": expected 3 columns in '" + line + "'");
    if (parse_int(cells[0], path) != static_cast<long long>(values.size())) {
      throw IoError(path.string() + ": indices must run 0, 1, 2, ...");
    }
    values.emplace_back(parse_double(cells[1], path), parse_double(cells[2], path));
  }
  s.samples = Eigen::Map<Eigen::VectorXcd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return s;
}

void write_tf_csv(const std::filesystem::path& path, const RealTF& tf) {
  auto out = open_out(path);
  out << 'n';
  for (Eigen::Index k = 0; k < tf.bins(); ++k) out << ',' << format_number(tf.frequency(k));
  out << '\n';
  for (Eigen::Index n = 0; n < tf.times(); ++n) {
    out << n;
    for (Eigen::Index k = 0; k < tf.bins(); ++k) out << ',' << format_number(tf.values(n, k));
    out << '\n';
  }
}

TfTable read_tf_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!next_row(in, line)) throw IoError(path.string() + ": empty file");
  auto head = split(line);
  if (head.empty() || head[0] != "n") throw IoError(path.string() + ": header must start with 'n'");
  TfTable t;
  t.frequency.resize(static_cast<Eigen::Index>(head.size()) - 1);
  for (std::size_t k = 1; k < head.size(); ++k) t.frequency[static_cast<Eigen::Index>(k) - 1] = parse_double(head[k], path);
  std::vector<double> flat;
  Eigen::Index rows = 0;
  while (next_row(in, line)) {
    const auto cells = split(line);
    if (cells.size() != head.size()) throw IoError(path.string() + ": ragged row");
    for (std::size_t k = 1; k < cells.size(); ++k) flat.push_back(parse_double(cells[k], path));
    ++rows;
  }
  t.values = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(flat.data(), rows,
                                                                                                 t.frequency.size());
  return t;
}

void write_ridges_csv(const std::filesystem::path& path, const RidgeSet& ridges) {
  auto out = open_out(path);
  out << "ridge_id,n,k,hz,linked\n";
  for (std::size_t r = 0; r < ridges.ridges.size(); ++r) {
    const auto& ridge = ridges.ridges[r];
    for (Eigen::Index n = 0; n < ridge.size(); ++n) {
      out << r << ',' << n << ',' << ridge.bins[static_cast<std::size_t>(n)] << ','
          << format_number(ridge.frequency(n)) << ',' << (ridge.linked[static_cast<std::size_t>(n)] ? 1 : 0) << '\n';
    }
  }
}

void write_estimates_csv(const std::filesystem::path& path, const std::vector<IfEstimate>& estimates,
                         double sampling_rate) {
  auto out = open_out(path);
  out << "n,t_seconds,mode_id,if_hz,ia,interpolated\n";
  for (const auto& e : estimates) {
    for (Eigen::Index n = 0; n < e.size(); ++n) {
      const double ia = e.amplitude.size() == e.size() ? e.amplitude[n] : std::numeric_limits<double>::quiet_NaN();
      const bool interp = static_cast<std::size_t>(n) < e.interpolated.size() && e.interpolated[static_cast<std::size_t>(n)];
      out << n << ',' << format_number(static_cast<double>(n) / sampling_rate) << ',' << e.mode_id << ','
          << format_number(e.frequency[n]) << ',' << format_number(ia) << ',' << (interp ? 1 : 0) << '\n';
    }
  }
}

std::vector<EstimateRow> read_estimates_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!next_row(in, line) || line != "n,t_seconds,mode_id,if_hz,ia,interpolated") {
    throw IoError(path.string() + ": unexpected estimates header");
  }
  std::vector<EstimateRow> rows;
  while (next_row(in, line)) {
    const auto c = split(line);
    if (c.size() != 6) throw IoError(path.string() + ": expected 6 columns");
    rows.push_back({static_cast<Eigen::Index>(parse_int(c[0], path)), parse_double(c[1], path),
                    static_cast<int>(parse_int(c[2], path)), parse_double(c[3], path), parse_double(c[4], path),
                    parse_int(c[5], path) != 0});
  }
  return rows;
}

void write_error_csv(const std::filesystem::path& path, const std::vector<ErrorRow>& rows) {
  auto out = open_out(path);
  out << "sigma,estimator,mode_id,rmse_hz\n";
  for (const auto& r : rows) {
    out << format_number(r.sigma) << ',' << r.estimator << ',' << r.mode_id << ',' << format_number(r.rmse) << '\n';
  }
}

std::vector<ErrorRow> read_error_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!next_row(in, line) || line != "sigma,estimator,mode_id,rmse_hz") {
    throw IoError(path.string() + ": unexpected error-table header");
  }
  std::vector<ErrorRow> rows;
  while (next_row(in, line)) {
    const auto c = split(line);
    if (c.size() != 4) throw IoError(path.string() + ": expected 4 columns");
    rows.push_back({parse_double(c[0], path), c[1], static_cast<int>(parse_int(c[2], path)), parse_double(c[3], path)});
  }
  return rows;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pronyif
