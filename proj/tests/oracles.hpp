// Independent reference implementations used only by the tests. Everything
// here is written from first principles (naive formulas, long double
// accumulation, classic textbook algorithms) so that agreement with the
// library is meaningful evidence rather than a tautology.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

// ---------- sums and losses ----------

inline double naive_sum(const std::vector<double>& v) {
  long double acc = 0.0L;
  for (double x : v) acc += x;
  return static_cast<double>(acc);
}

inline double naive_dot(const std::vector<double>& a,
                        const std::vector<double>& b) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += static_cast<long double>(a[i]) * b[i];
  return static_cast<double>(acc);
}

// Huber loss, restated from its definition: quadratic inside the band,
// linear outside.
inline double huber_ref(double u, double delta) {
  const double a = std::fabs(u);
  if (a <= delta) return 0.5 * u * u;
  return delta * a - 0.5 * delta * delta;
}

// Full penalized objective, naive evaluation: row-major loops, long double.
// x is column-major with leading dimension n (matching the library layout).
inline double objective_ref(const std::vector<double>& x_colmajor,
                            std::size_t n, std::size_t p,
                            const std::vector<double>& y,
                            const std::vector<double>& beta, double delta,
                            double lambda) {
  long double loss = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    long double r = y[i];
    for (std::size_t j = 0; j < p; ++j) r -= x_colmajor[j * n + i] * beta[j];
    loss += huber_ref(static_cast<double>(r), delta);
  }
  long double pen = 0.0L;
  for (double b : beta) pen += std::fabs(b);
  return static_cast<double>(loss / n + lambda * pen);
}

// ---------- univariate minimization ----------

// Golden-section search on a unimodal function over [lo, hi].
inline double golden_minimize(const std::function<double(double)>& f,
                              double lo, double hi, int iters = 200) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int k = 0; k < iters && (b - a) > 1e-15 * (1.0 + std::fabs(a)); ++k) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Dense grid scan followed by golden-section refinement between the grid
// neighbours of the best point. Suitable for convex (hence unimodal)
// objectives; the grid makes the unimodality assumption safe near kinks.
inline double grid_golden_minimize(const std::function<double(double)>& f,
                                   double lo, double hi,
                                   std::size_t n_grid = 4096) {
  if (!(hi > lo)) throw std::invalid_argument("grid_golden: empty interval");
  double best_x = lo, best_f = f(lo);
  const double step = (hi - lo) / static_cast<double>(n_grid);
  for (std::size_t k = 1; k <= n_grid; ++k) {
    const double x = lo + step * static_cast<double>(k);
    const double fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  const double a = std::max(lo, best_x - step);
  const double b = std::min(hi, best_x + step);
  return golden_minimize(f, a, b);
}

// ---------- derivatives ----------

inline double central_diff(const std::function<double(double)>& f, double x,
                           double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// ---------- eigenvalues ----------

// Cyclic Jacobi for a symmetric matrix (row-major p x p). Returns the
// largest eigenvalue. O(p^3) per sweep; fine for test sizes.
inline double jacobi_eig_max(std::vector<double> a, std::size_t p,
                             int sweeps = 64) {
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return a[i * p + j];
  };
  for (int s = 0; s < sweeps; ++s) {
    double off = 0.0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-26) break;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        if (at(i, j) == 0.0) continue;
        const double theta = (at(j, j) - at(i, i)) / (2.0 * at(i, j));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < p; ++k) {
          const double aki = at(k, i), akj = at(k, j);
          at(k, i) = c * aki - sn * akj;
          at(k, j) = sn * aki + c * akj;
        }
        for (std::size_t k = 0; k < p; ++k) {
          const double aik = at(i, k), ajk = at(j, k);
          at(i, k) = c * aik - sn * ajk;
          at(j, k) = sn * aik + c * ajk;
        }
      }
    }
  }
  double lmax = at(0, 0);
  for (std::size_t i = 1; i < p; ++i) lmax = std::max(lmax, at(i, i));
  return lmax;
}

// Largest eigenvalue of X^T X / n for a column-major X, built explicitly.
inline double gram_eig_max(const std::vector<double>& x_colmajor,
                           std::size_t n, std::size_t p) {
  std::vector<double> g(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      long double acc = 0.0L;
      for (std::size_t k = 0; k < n; ++k)
        acc += static_cast<long double>(x_colmajor[i * n + k]) *
               x_colmajor[j * n + k];
      g[i * p + j] = g[j * p + i] = static_cast<double>(acc / n);
    }
  }
  return jacobi_eig_max(std::move(g), p);
}

// ---------- correlation ----------

inline double pearson_corr(const std::vector<double>& a,
                           const std::vector<double>& b) {
  const std::size_t n = a.size();
  long double ma = 0.0L, mb = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double sab = 0.0L, sa = 0.0L, sb = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    sa += da * da;
    sb += db * db;
  }
  return static_cast<double>(sab / std::sqrt(sa * sb));
}

// Average ranks (ties get the mean of the tied positions).
inline std::vector<double> ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
  std::vector<double> r(n);
  std::size_t k = 0;
  while (k < n) {
    std::size_t m = k;
    while (m + 1 < n && v[idx[m + 1]] == v[idx[k]]) ++m;
    const double avg = 0.5 * (static_cast<double>(k) + static_cast<double>(m)) + 1.0;
    for (std::size_t t = k; t <= m; ++t) r[idx[t]] = avg;
    k = m + 1;
  }
  return r;
}

inline double spearman_corr(const std::vector<double>& a,
                            const std::vector<double>& b) {
  return pearson_corr(ranks(a), ranks(b));
}

// Kendall's tau-a by the O(n^2) definition. For every elliptical
// distribution with scale correlation rho, tau = (2/pi) asin(rho), which
// makes this a heavy-tail-robust check of correlation structure.
inline double kendall_tau(const std::vector<double>& a,
                          const std::vector<double>& b) {
  const std::size_t n = a.size();
  long long concordant_minus_discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = (a[i] - a[j]) * (b[i] - b[j]);
      if (s > 0.0) ++concordant_minus_discordant;
      else if (s < 0.0) --concordant_minus_discordant;
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
  return static_cast<double>(concordant_minus_discordant) / pairs;
}

// Sample excess kurtosis: m4 / m2^2 - 3.
inline double excess_kurtosis(const std::vector<double>& v) {
  const std::size_t n = v.size();
  long double mean = 0.0L;
  for (double x : v) mean += x;
  mean /= n;
  long double m2 = 0.0L, m4 = 0.0L;
  for (double x : v) {
    const long double d = x - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m4 /= n;
  return static_cast<double>(m4 / (m2 * m2) - 3.0L);
}

// ---------- random test instances (std::mt19937_64: independent of the
// library's own generator) ----------

struct TestRng {
  std::mt19937_64 gen;
  explicit TestRng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  double normal(double mu = 0.0, double sd = 1.0) {
    return std::normal_distribution<double>(mu, sd)(gen);
  }
  double cauchy() { return std::cauchy_distribution<double>(0.0, 1.0)(gen); }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  // Mixed-distribution sample for location-problem instances.
  std::vector<double> mixed_sample(std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) {
      switch (uniform_int(0, 2)) {
        case 0: x = normal(0.0, 1.0); break;
        case 1: x = uniform(-5.0, 5.0); break;
        default: x = cauchy(); break;
      }
    }
    return v;
  }
};

}  // namespace oracle
