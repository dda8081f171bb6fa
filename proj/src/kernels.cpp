#include "huberpath/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "huberpath/loss.hpp"

namespace huberpath::kernels {

namespace {

std::atomic<int> g_max_threads{0};

int threads_for(std::size_t work_items) {
#ifdef _OPENMP
  int t = g_max_threads.load(std::memory_order_relaxed);
  if (t <= 0) t = omp_get_max_threads();
  // Keep at least a few thousand items per thread; spawning threads for
  // tiny loops costs more than it saves and never changes results anyway.
  const std::size_t per_thread = 4096;
  std::size_t cap = work_items / per_thread;
  if (cap < static_cast<std::size_t>(t)) t = static_cast<int>(cap);
  return t > 1 ? t : 1;
#else
  (void)work_items;
  return 1;
#endif
}

// --- fixed-shape reduction -------------------------------------------------
//
// Reductions are evaluated as: split the index range into fixed blocks of
// kBlock, reduce each block by pairwise recursion, then combine the block
// partials pairwise. The shape depends only on n, never on the thread
// count, so any schedule that assigns whole blocks to threads produces the
// bitwise-identical result of the serial evaluation.

constexpr std::size_t kBlock = 8192;
constexpr std::size_t kLeaf = 64;

template <class F>
double pairwise(std::size_t lo, std::size_t hi, const F& f) {
  if (hi - lo <= kLeaf) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += f(i);
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise(lo, mid, f) + pairwise(mid, hi, f);
}

template <class F>
double blocked_sum(std::size_t n, const F& f, bool parallel) {
  if (n == 0) return 0.0;
  if (n <= kBlock) return pairwise(0, n, f);
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(nblocks);
  const int nt = parallel ? threads_for(n) : 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
#endif
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    partial[static_cast<std::size_t>(b)] = pairwise(lo, hi, f);
  }
#ifndef _OPENMP
  (void)nt;
#endif
  return pairwise(0, nblocks, [&](std::size_t b) { return partial[b]; });
}

// --- shared element-wise cores ----------------------------------------------

void psi_core(std::span<const double> r, double delta, std::span<double> out,
              bool parallel) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(r.size());
  const int nt = parallel ? threads_for(r.size()) : 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        huber_deriv(r[static_cast<std::size_t>(i)], delta);
#ifndef _OPENMP
  (void)nt;
#endif
}

void axpy_core(double a, std::span<const double> x, std::span<double> y,
               bool parallel) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const int nt = parallel ? threads_for(x.size()) : 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i)
    y[static_cast<std::size_t>(i)] += a * x[static_cast<std::size_t>(i)];
#ifndef _OPENMP
  (void)nt;
#endif
}

void residuals_core(const Dataset& data, std::span<const double> beta,
                    std::span<double> out, bool parallel) {
  const std::size_t n = data.n_obs();
  for (std::size_t i = 0; i < n; ++i) out[i] = data.y[i];
  for (std::size_t j = 0; j < data.n_vars(); ++j) {
    if (beta[j] != 0.0) axpy_core(-beta[j], data.x.col(j), out, parallel);
  }
}

void matvec_core(const Matrix& x, std::span<const double> v,
                 std::span<double> out, bool parallel) {
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = 0.0;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    if (v[j] != 0.0) axpy_core(v[j], x.col(j), out, parallel);
  }
}

void matvec_transpose_core(const Matrix& x, std::span<const double> u,
                           std::span<double> out, bool parallel) {
  const std::ptrdiff_t p = static_cast<std::ptrdiff_t>(x.cols());
  // Parallel over columns; each column reduction keeps the serial shape.
  const int nt = parallel ? threads_for(x.cols() * x.rows()) : 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
#endif
  for (std::ptrdiff_t j = 0; j < p; ++j) {
    auto col = x.col(static_cast<std::size_t>(j));
    out[static_cast<std::size_t>(j)] = blocked_sum(
        col.size(), [&](std::size_t i) { return col[i] * u[i]; }, false);
  }
#ifndef _OPENMP
  (void)nt;
#endif
}

}  // namespace

void set_max_threads(int threads) {
  g_max_threads.store(threads > 0 ? threads : 0, std::memory_order_relaxed);
}

int max_threads() {
#ifdef _OPENMP
  int t = g_max_threads.load(std::memory_order_relaxed);
  return t > 0 ? t : omp_get_max_threads();
#else
  return 1;
#endif
}

double sum(std::span<const double> v) {
  return blocked_sum(v.size(), [&](std::size_t i) { return v[i]; }, true);
}

double dot(std::span<const double> a, std::span<const double> b) {
  return blocked_sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; },
                     true);
}

double abs_sum(std::span<const double> v) {
  return blocked_sum(v.size(),
                     [&](std::size_t i) { return std::fabs(v[i]); }, true);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double huber_loss_sum(std::span<const double> r, double delta) {
  return blocked_sum(
      r.size(), [&](std::size_t i) { return huber_value(r[i], delta); }, true);
}

void huber_psi(std::span<const double> r, double delta, std::span<double> out) {
  psi_core(r, delta, out, true);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  axpy_core(a, x, y, true);
}

void residuals(const Dataset& data, std::span<const double> beta,
               std::span<double> out) {
  residuals_core(data, beta, out, true);
}

void matvec(const Matrix& x, std::span<const double> v, std::span<double> out) {
  matvec_core(x, v, out, true);
}

void matvec_transpose(const Matrix& x, std::span<const double> u,
                      std::span<double> out) {
  matvec_transpose_core(x, u, out, true);
}

namespace serial {

double sum(std::span<const double> v) {
  return blocked_sum(v.size(), [&](std::size_t i) { return v[i]; }, false);
}

double dot(std::span<const double> a, std::span<const double> b) {
  return blocked_sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; },
                     false);
}

double abs_sum(std::span<const double> v) {
  return blocked_sum(v.size(),
                     [&](std::size_t i) { return std::fabs(v[i]); }, false);
}

double max_abs(std::span<const double> v) { return kernels::max_abs(v); }

double huber_loss_sum(std::span<const double> r, double delta) {
  return blocked_sum(
      r.size(), [&](std::size_t i) { return huber_value(r[i], delta); },
      false);
}

void huber_psi(std::span<const double> r, double delta, std::span<double> out) {
  psi_core(r, delta, out, false);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  axpy_core(a, x, y, false);
}

void residuals(const Dataset& data, std::span<const double> beta,
               std::span<double> out) {
  residuals_core(data, beta, out, false);
}

void matvec(const Matrix& x, std::span<const double> v, std::span<double> out) {
  matvec_core(x, v, out, false);
}

void matvec_transpose(const Matrix& x, std::span<const double> u,
                      std::span<double> out) {
  matvec_transpose_core(x, u, out, false);
}

}  // namespace serial

}  // namespace huberpath::kernels
