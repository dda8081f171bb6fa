#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace huberpath {

/// Raised for malformed input data (files, dimensions, non-finite values).
/// The command-line front end maps this to its data-error exit status.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense column-major matrix. Columns are contiguous, which is the access
/// pattern of every hot loop in the solver.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  std::span<const double> col(std::size_t j) const {
    return {data_.data() + j * rows_, rows_};
  }
  std::span<double> col(std::size_t j) {
    return {data_.data() + j * rows_, rows_};
  }

  const std::vector<double>& storage() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// A regression problem: response y (length n), design x (n-by-p) and
/// optional positive observation weights (empty means unit weights).
struct Dataset {
  Matrix x;
  std::vector<double> y;
  std::vector<double> weights;

  std::size_t n_obs() const { return x.rows(); }
  std::size_t n_vars() const { return x.cols(); }
  bool has_weights() const { return !weights.empty(); }
};

/// Validates shapes, finiteness and weight positivity; throws DataError.
Dataset make_dataset(Matrix x, std::vector<double> y,
                     std::vector<double> weights = {});

/// Folds observation weights into the data: row i becomes (w_i * y_i,
/// w_i * x_i). Weighted problems are solved by transforming once up front
/// and running the unweighted solver on the result; this is the only
/// weighted code path in the library.
Dataset apply_weights(const Dataset& data);

/// Loss/penalty configuration shared by all solvers.
struct HuberConfig {
  double delta = 0.5;   ///< Huber transition threshold, > 0.
  double lambda = 0.0;  ///< l1 penalty level, >= 0.
};

/// Throws std::invalid_argument unless delta > 0 and lambda >= 0 (finite).
void validate_config(const HuberConfig& config);

}  // namespace huberpath
