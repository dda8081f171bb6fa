#pragma once

#include <cstddef>
#include <span>

#include "huberpath/dataset.hpp"

namespace huberpath::kernels {

// Data-parallel primitives shared by the solvers. Every reduction uses a
// fixed blocked pairwise summation shape that does not depend on the thread
// count, so parallel and serial runs produce bitwise identical results.
// The kernels::serial namespace exposes reference implementations that run
// the same arithmetic without OpenMP; tests assert bitwise equality and the
// kernel_bench tool compares their throughput.

/// Caps the number of OpenMP threads the kernels may use. 0 restores the
/// runtime default. Thread count never changes numerical results.
void set_max_threads(int threads);
int max_threads();

/// Blocked pairwise sum of v.
double sum(std::span<const double> v);

/// Blocked pairwise dot product; a and b must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

/// Sum of |v_i| (l1 norm).
double abs_sum(std::span<const double> v);

/// max_i |v_i|; 0 for an empty span.
double max_abs(std::span<const double> v);

/// Sum of Huber losses of the entries of r.
double huber_loss_sum(std::span<const double> r, double delta);

/// out_i = clipped derivative of the Huber loss at r_i.
void huber_psi(std::span<const double> r, double delta, std::span<double> out);

/// y_i += a * x_i, element-wise parallel.
void axpy(double a, std::span<const double> x, std::span<double> y);

/// out = y - X beta, recomputed from scratch (columns with beta_j == 0 are
/// skipped, so the refresh costs O(n * nnz)).
void residuals(const Dataset& data, std::span<const double> beta,
               std::span<double> out);

/// out = X v (skips v_j == 0).
void matvec(const Matrix& x, std::span<const double> v, std::span<double> out);

/// out_j = dot(x.col(j), u); parallel over columns.
void matvec_transpose(const Matrix& x, std::span<const double> u,
                      std::span<double> out);

namespace serial {
double sum(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double abs_sum(std::span<const double> v);
double max_abs(std::span<const double> v);
double huber_loss_sum(std::span<const double> r, double delta);
void huber_psi(std::span<const double> r, double delta, std::span<double> out);
void axpy(double a, std::span<const double> x, std::span<double> y);
void residuals(const Dataset& data, std::span<const double> beta,
               std::span<double> out);
void matvec(const Matrix& x, std::span<const double> v, std::span<double> out);
void matvec_transpose(const Matrix& x, std::span<const double> u,
                      std::span<double> out);
}  // namespace serial

}  // namespace huberpath::kernels
