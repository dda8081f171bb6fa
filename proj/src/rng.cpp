#include "huberpath/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace huberpath::rng {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Stream::Stream(std::uint64_t seed) : seed_(seed) {
  std::uint64_t s = seed;
  gen_.seed(splitmix64_next(s));
}

Stream Stream::substream(std::uint64_t index) const {
  // Child seed depends only on (seed, index): mix the index into the parent
  // seed through two splitmix steps so nearby indices decorrelate.
  std::uint64_t s = seed_ ^ (0xD1B54A32D192ED03ull * (index + 1));
  const std::uint64_t first = splitmix64_next(s);
  return Stream(first ^ splitmix64_next(s));
}

double Stream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Stream::uniform_pos() {
  return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t Stream::uniform_below(std::uint64_t bound) {
  if (bound == 0)
    throw std::invalid_argument("uniform_below: bound must be >= 1");
  const std::uint64_t r =
      static_cast<std::uint64_t>(uniform() * static_cast<double>(bound));
  return r < bound ? r : bound - 1;
}

double Stream::normal() {
  const double u1 = uniform_pos();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double Stream::chi_square(int dof) {
  if (dof < 1) throw std::invalid_argument("chi_square: dof must be >= 1");
  double s = 0.0;
  for (int k = 0; k < dof; ++k) {
    const double z = normal();
    s += z * z;
  }
  return s;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0x9E3779B97F4A7C15ull * (index + 1));
  return splitmix64_next(s);
}

}  // namespace huberpath::rng
