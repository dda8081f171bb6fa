// Times the OpenMP kernels against their serial reference implementations
// and prints a speedup table. The two variants share one blocked pairwise
// reduction shape, so their results are bitwise identical; this tool checks
// that while it times them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "huberpath/kernels.hpp"
#include "huberpath/rng.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double time_seconds(int iters, const std::function<void()>& body) {
  // One warm-up call keeps first-touch page faults out of the timing.
  body();
  const auto start = clock_type::now();
  for (int i = 0; i < iters; ++i) body();
  const std::chrono::duration<double> dt = clock_type::now() - start;
  return dt.count() / iters;
}

std::vector<double> random_vector(std::size_t n, huberpath::rng::Stream& s) {
  std::vector<double> v(n);
  for (auto& x : v) x = s.normal();
  return v;
}

struct Row {
  std::string name;
  std::size_t n;
  double serial_s;
  double parallel_s;
  bool identical;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-18s %12s %14s %14s %9s %10s\n", "kernel", "n", "serial (s)",
              "parallel (s)", "speedup", "bitwise");
  for (const auto& r : rows) {
    std::printf("%-18s %12zu %14.3e %14.3e %8.2fx %10s\n", r.name.c_str(),
                r.n, r.serial_s, r.parallel_s, r.serial_s / r.parallel_s,
                r.identical ? "equal" : "DIFFER");
  }
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;
  int iters = 20;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--iters") == 0 && i + 1 < argc) {
      iters = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: kernel_bench [--threads N] [--iters K]\n");
      return 2;
    }
  }
  huberpath::kernels::set_max_threads(threads);
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("OpenMP enabled, max threads = %d\n",
              threads > 0 ? threads : omp_get_max_threads());
#else
  std::printf("OpenMP not available: both columns run serially\n");
#endif

  huberpath::rng::Stream stream(20240817);
  std::vector<Row> rows;
  const std::size_t sizes[] = {1u << 16, 1u << 20, 1u << 23};

  for (std::size_t n : sizes) {
    const std::vector<double> a = random_vector(n, stream);
    const std::vector<double> b = random_vector(n, stream);
    std::vector<double> out(n);

    double r_serial = 0.0, r_parallel = 0.0;
    double t_s = time_seconds(
        iters, [&] { r_serial = huberpath::kernels::serial::dot(a, b); });
    double t_p =
        time_seconds(iters, [&] { r_parallel = huberpath::kernels::dot(a, b); });
    rows.push_back({"dot", n, t_s, t_p, r_serial == r_parallel});

    t_s = time_seconds(iters, [&] {
      r_serial = huberpath::kernels::serial::huber_loss_sum(a, 0.5);
    });
    t_p = time_seconds(
        iters, [&] { r_parallel = huberpath::kernels::huber_loss_sum(a, 0.5); });
    rows.push_back({"huber_loss_sum", n, t_s, t_p, r_serial == r_parallel});

    std::vector<double> psi_s(n), psi_p(n);
    t_s = time_seconds(iters, [&] {
      huberpath::kernels::serial::huber_psi(a, 0.5, psi_s);
    });
    t_p = time_seconds(
        iters, [&] { huberpath::kernels::huber_psi(a, 0.5, psi_p); });
    rows.push_back(
        {"huber_psi", n, t_s, t_p, std::memcmp(psi_s.data(), psi_p.data(),
                                               n * sizeof(double)) == 0});
  }

  // Column-oriented kernel: X^T v over a tall matrix.
  {
    const std::size_t n = 1u << 14, p = 256;
    huberpath::Matrix x(n, p);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t i = 0; i < n; ++i) x(i, j) = stream.normal();
    const std::vector<double> v = random_vector(n, stream);
    std::vector<double> out_s(p), out_p(p);
    const double t_s = time_seconds(iters, [&] {
      huberpath::kernels::serial::matvec_transpose(x, v, out_s);
    });
    const double t_p = time_seconds(
        iters, [&] { huberpath::kernels::matvec_transpose(x, v, out_p); });
    rows.push_back({"matvec_transpose", n * p, t_s, t_p,
                    std::memcmp(out_s.data(), out_p.data(),
                                p * sizeof(double)) == 0});
  }

  print_rows(rows);
  bool all_equal = true;
  for (const auto& r : rows) all_equal = all_equal && r.identical;
  if (!all_equal) {
    std::fprintf(stderr, "FAIL: serial and parallel kernels disagree\n");
    return 1;
  }
  return 0;
}
