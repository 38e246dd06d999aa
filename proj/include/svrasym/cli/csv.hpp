#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace svrasym::cli {

using Cell = std::optional<double>;

/// A numeric table with `#`-prefixed metadata lines. Missing cells are written empty.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument when the row width differs from the header.
  void add_row(std::vector<Cell> row);
  std::optional<std::size_t> column_index(const std::string& name) const;
  /// Throws std::out_of_range for an unknown column.
  Cell at(std::size_t row, const std::string& column) const;
};

/// 9 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double v);

void write_csv(std::ostream& out, const Table& table);

/// Inverse of write_csv. Throws std::runtime_error on malformed input.
Table read_csv(std::istream& in);

/// Observations for the estimator command: header `y,x1,...,xp`, one sample per row.
struct DataFile {
  Eigen::MatrixXd features;  ///< p x n
  Eigen::VectorXd responses;
};

DataFile read_data_csv(std::istream& in);
void write_data_csv(std::ostream& out, const Eigen::MatrixXd& features,
                    const Eigen::VectorXd& responses);

}  // namespace svrasym::cli
