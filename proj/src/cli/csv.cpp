#include "svrasym/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace svrasym::cli {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& text, std::size_t line_no) {
  const std::string t = trim(text);
  if (t == "inf") return HUGE_VAL;
  if (t == "-inf") return -HUGE_VAL;
  if (t == "nan") return std::nan("");
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + t + "'");
  return v;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match header");
  rows.push_back(std::move(row));
}

std::optional<std::size_t> Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  return std::nullopt;
}

Cell Table::at(std::size_t row, const std::string& column) const {
  const auto idx = column_index(column);
  if (!idx) throw std::out_of_range("no column '" + column + "'");
  return rows.at(row).at(*idx);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (const auto& [key, value] : table.metadata) out << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) out << format_number(*row[i]);
    }
    out << '\n';
  }
}

Table read_csv(std::istream& in) {
  Table t;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (header) throw std::runtime_error("metadata after the header line");
      const std::string body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
      const auto colon = body.find(": ");
      if (colon == std::string::npos)
        t.metadata.emplace_back(body, "");
      else
        t.metadata.emplace_back(body.substr(0, colon), body.substr(colon + 2));
      continue;
    }
    const auto cells = split(line);
    if (!header) {
      for (const auto& c : cells) t.columns.push_back(trim(c));
      header = true;
      continue;
    }
    if (cells.size() != t.columns.size())
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(t.columns.size()) + " fields");
    std::vector<Cell> row;
    row.reserve(cells.size());
    for (const auto& c : cells)
      row.push_back(trim(c).empty() ? Cell{} : Cell{parse_number(c, line_no)});
    t.rows.push_back(std::move(row));
  }
  if (!header) throw std::runtime_error("missing header line");
  return t;
}

DataFile read_data_csv(std::istream& in) {
  const Table t = read_csv(in);
  if (t.columns.size() < 2 || t.columns[0] != "y")
    throw std::runtime_error("data file header must be y,x1,...,xp");
  for (std::size_t j = 1; j < t.columns.size(); ++j)
    if (t.columns[j] != "x" + std::to_string(j))
      throw std::runtime_error("data file header must be y,x1,...,xp");
  const auto n = static_cast<Eigen::Index>(t.rows.size());
  const auto p = static_cast<Eigen::Index>(t.columns.size() - 1);
  if (n == 0) throw std::runtime_error("data file has no samples");
  DataFile d;
  d.features.resize(p, n);
  d.responses.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = t.rows[static_cast<std::size_t>(i)];
    for (const auto& c : row)
      if (!c || !std::isfinite(*c)) throw std::runtime_error("data file has missing or non-finite values");
    d.responses(i) = *row[0];
    for (Eigen::Index j = 0; j < p; ++j) d.features(j, i) = *row[static_cast<std::size_t>(j + 1)];
  }
  return d;
}

void write_data_csv(std::ostream& out, const Eigen::MatrixXd& features,
                    const Eigen::VectorXd& responses) {
  out << 'y';
  for (Eigen::Index j = 0; j < features.rows(); ++j) out << ",x" << (j + 1);
  out << '\n';
  char buf[32];
  for (Eigen::Index i = 0; i < features.cols(); ++i) {
    // 17 digits so the file reproduces the in-memory data exactly
    std::snprintf(buf, sizeof buf, "%.17g", responses(i));
    out << buf;
    for (Eigen::Index j = 0; j < features.rows(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", features(j, i));
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace svrasym::cli
