#include "io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace friendjam {

namespace {

constexpr std::array<const char*, 15> kColumns = {
    "axis_value", "policy",    "alpha",     "top_closed", "top_numeric",
    "sop_upper",  "sop_lower", "top_mc",    "top_ci_lo",  "top_ci_hi",
    "sop_mc",     "sop_ci_lo", "sop_ci_hi", "n_trials",   "seed"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string();
}

std::string fmt_opt(const std::optional<std::uint64_t>& v) {
  if (!v) return {};
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(*v));
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::optional<double> parse_opt_double(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return std::strtod(cell.c_str(), nullptr);
}

std::optional<std::uint64_t> parse_opt_u64(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return std::strtoull(cell.c_str(), nullptr, 10);
}

}  // namespace

std::span<const char* const> result_columns() {
  return {kColumns.data(), kColumns.size()};
}

std::optional<double> row_value(const ResultRow& row, std::string_view column) {
  if (column == "axis_value") return row.axis_value;
  if (column == "alpha") return row.alpha;
  if (column == "top_closed") return row.top_closed;
  if (column == "top_numeric") return row.top_numeric;
  if (column == "sop_upper") return row.sop_upper;
  if (column == "sop_lower") return row.sop_lower;
  if (column == "top_mc") return row.top_mc;
  if (column == "top_ci_lo") return row.top_ci_lo;
  if (column == "top_ci_hi") return row.top_ci_hi;
  if (column == "sop_mc") return row.sop_mc;
  if (column == "sop_ci_lo") return row.sop_ci_lo;
  if (column == "sop_ci_hi") return row.sop_ci_hi;
  if (column == "n_trials")
    return row.n_trials ? std::optional<double>(static_cast<double>(*row.n_trials))
                        : std::nullopt;
  if (column == "seed")
    return row.seed ? std::optional<double>(static_cast<double>(*row.seed)) : std::nullopt;
  throw std::invalid_argument("unknown column '" + std::string(column) + "'");
}

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  for (size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
  out << "\n";
  for (const ResultRow& r : rows) {
    out << fmt(r.axis_value) << ',' << r.policy << ',' << fmt(r.alpha) << ','
        << fmt_opt(r.top_closed) << ',' << fmt_opt(r.top_numeric) << ','
        << fmt_opt(r.sop_upper) << ',' << fmt_opt(r.sop_lower) << ','
        << fmt_opt(r.top_mc) << ',' << fmt_opt(r.top_ci_lo) << ','
        << fmt_opt(r.top_ci_hi) << ',' << fmt_opt(r.sop_mc) << ','
        << fmt_opt(r.sop_ci_lo) << ',' << fmt_opt(r.sop_ci_hi) << ','
        << fmt_opt(r.n_trials) << ',' << fmt_opt(r.seed) << "\n";
  }
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  emit_csv(rows, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<ResultRow> parse_result_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::ostringstream expect;
    for (size_t i = 0; i < kColumns.size(); ++i) expect << (i ? "," : "") << kColumns[i];
    if (line != expect.str())
      throw std::runtime_error("unexpected CSV header: " + line);
  }
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != kColumns.size())
      throw std::runtime_error("bad CSV row (want " + std::to_string(kColumns.size()) +
                               " cells): " + line);
    ResultRow r;
    r.axis_value = std::strtod(cells[0].c_str(), nullptr);
    r.policy = cells[1];
    r.alpha = std::strtod(cells[2].c_str(), nullptr);
    r.top_closed = parse_opt_double(cells[3]);
    r.top_numeric = parse_opt_double(cells[4]);
    r.sop_upper = parse_opt_double(cells[5]);
    r.sop_lower = parse_opt_double(cells[6]);
    r.top_mc = parse_opt_double(cells[7]);
    r.top_ci_lo = parse_opt_double(cells[8]);
    r.top_ci_hi = parse_opt_double(cells[9]);
    r.sop_mc = parse_opt_double(cells[10]);
    r.sop_ci_lo = parse_opt_double(cells[11]);
    r.sop_ci_hi = parse_opt_double(cells[12]);
    r.n_trials = parse_opt_u64(cells[13]);
    r.seed = parse_opt_u64(cells[14]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ResultRow> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return parse_result_csv(in);
}

void emit_plotdata(const std::vector<ResultRow>& rows,
                   const std::vector<std::string>& columns, std::ostream& out) {
  if (columns.empty()) throw std::invalid_argument("plotdata: no columns requested");
  for (const std::string& c : columns) {
    row_value(ResultRow{}, c);  // throws on unknown column names
    if (c == "axis_value") throw std::invalid_argument("plotdata: axis_value is implicit");
    if (!rows.empty()) {
      bool present = false;
      for (const ResultRow& r : rows)
        if (row_value(r, c)) { present = true; break; }
      if (!present)
        throw std::invalid_argument("plotdata: column '" + c + "' has no values");
    }
  }

  out << "# friendjam plot data\n";
  out << "# block columns: axis_value";
  for (const std::string& c : columns) out << ' ' << c;
  out << "\n";

  // one block per policy, in order of first appearance
  std::vector<std::string> series;
  for (const ResultRow& r : rows)
    if (std::find(series.begin(), series.end(), r.policy) == series.end())
      series.push_back(r.policy);

  for (size_t si = 0; si < series.size(); ++si) {
    out << "\n# series: " << series[si] << "\n";
    for (const ResultRow& r : rows) {
      if (r.policy != series[si]) continue;
      out << fmt(r.axis_value);
      for (const std::string& c : columns) {
        auto v = row_value(r, c);
        out << ' ' << (v ? fmt(*v) : "nan");
      }
      out << "\n";
    }
  }
}

void write_plotdata(const std::vector<ResultRow>& rows,
                    const std::vector<std::string>& columns, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  emit_plotdata(rows, columns, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace friendjam
