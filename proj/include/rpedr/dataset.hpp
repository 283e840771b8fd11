#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpedr/rng.hpp"

namespace rpedr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Regression sample: n x p covariates paired with an n-vector response.
// Immutable after construction and safe to share across threads.
struct Dataset {
  Matrix covariates;
  Vector response;
  int n = 0;
  int p = 0;

  Dataset(Matrix x, Vector y)
      : covariates(std::move(x)), response(std::move(y)) {
    n = static_cast<int>(covariates.rows());
    p = static_cast<int>(covariates.cols());
    if (n < 2) throw std::invalid_argument("dataset needs at least 2 rows, got " + std::to_string(n));
    if (p < 1) throw std::invalid_argument("dataset needs at least 1 covariate column");
    if (response.size() != n)
      throw std::invalid_argument("response length " + std::to_string(response.size()) +
                                  " does not match row count " + std::to_string(n));
    if (!covariates.allFinite() || !response.allFinite())
      throw std::invalid_argument("dataset contains NaN or infinite entries");
  }
};

// Train/holdout partition of {0,...,n-1}; indices are 0-based internally,
// 1-based in anything user-facing.
struct SampleSplit {
  std::vector<int> train_indices;
  std::vector<int> holdout_indices;
};

// Uniformly random n1-subset as train, complement as holdout. Deterministic
// given the stream state; the caller owns stream isolation.
inline SampleSplit draw_split(int n, int n1, rng::Stream& stream) {
  if (n1 < 1 || n1 > n - 1)
    throw std::invalid_argument("train split size " + std::to_string(n1) +
                                " outside [1, " + std::to_string(n - 1) + "]");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // partial Fisher-Yates: the first n1 entries are a uniform subset
  for (int i = 0; i < n1; ++i) {
    int j = rng::uniform_int(stream, i, n - 1);
    std::swap(idx[i], idx[j]);
  }
  SampleSplit split;
  split.train_indices.assign(idx.begin(), idx.begin() + n1);
  split.holdout_indices.assign(idx.begin() + n1, idx.end());
  std::sort(split.train_indices.begin(), split.train_indices.end());
  std::sort(split.holdout_indices.begin(), split.holdout_indices.end());
  return split;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace
    auto first = cell.find_first_not_of(" \t\r");
    auto last = cell.find_last_not_of(" \t\r");
    cells.push_back(first == std::string::npos ? std::string() : cell.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline double parse_cell(const std::string& cell, int row_1based, const std::string& column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end)
    throw std::invalid_argument("non-numeric cell '" + cell + "' at row " +
                                std::to_string(row_1based) + ", column '" + column + "'");
  if (!std::isfinite(value))
    throw std::invalid_argument("non-finite value at row " + std::to_string(row_1based) +
                                ", column '" + column + "'");
  return value;
}

}  // namespace detail

// Loads a header-first CSV of decimal reals. `response_column` is a column
// name from the header; if no name matches and the string parses as an
// integer, it is taken as a 1-based column index. Covariate column order is
// preserved from the file.
inline Dataset load_csv(const std::string& path, const std::string& response_column,
                        std::vector<std::string>* covariate_names = nullptr) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty file: " + path);
  std::vector<std::string> header = detail::split_csv_line(line);
  if (header.empty()) throw std::invalid_argument("empty header in " + path);

  int response_idx = -1;
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j] == response_column) {
      response_idx = static_cast<int>(j);
      break;
    }
  if (response_idx < 0) {
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(response_column.data(),
                                     response_column.data() + response_column.size(), parsed);
    if (ec == std::errc() && ptr == response_column.data() + response_column.size() &&
        parsed >= 1 && parsed <= static_cast<int>(header.size()))
      response_idx = parsed - 1;
  }
  if (response_idx < 0)
    throw std::invalid_argument("response column '" + response_column + "' not found in " + path);

  const int ncols = static_cast<int>(header.size());
  std::vector<std::vector<double>> rows;
  int row_1based = 1;  // header is row 1
  while (std::getline(in, line)) {
    ++row_1based;
    if (line.empty()) continue;
    std::vector<std::string> cells = detail::split_csv_line(line);
    if (static_cast<int>(cells.size()) != ncols)
      throw std::invalid_argument("row " + std::to_string(row_1based) + " has " +
                                  std::to_string(cells.size()) + " cells, expected " +
                                  std::to_string(ncols));
    std::vector<double> values(ncols);
    for (int j = 0; j < ncols; ++j) values[j] = detail::parse_cell(cells[j], row_1based, header[j]);
    rows.push_back(std::move(values));
  }
  const int n = static_cast<int>(rows.size());
  if (n < 2) throw std::invalid_argument("fewer than 2 data rows in " + path);
  const int p = ncols - 1;
  if (p < 1) throw std::invalid_argument("no covariate columns in " + path);

  Matrix x(n, p);
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    int k = 0;
    for (int j = 0; j < ncols; ++j) {
      if (j == response_idx)
        y(i) = rows[i][j];
      else
        x(i, k++) = rows[i][j];
    }
  }
  if (covariate_names) {
    covariate_names->clear();
    for (int j = 0; j < ncols; ++j)
      if (j != response_idx) covariate_names->push_back(header[j]);
  }
  return Dataset(std::move(x), std::move(y));
}

}  // namespace rpedr
