#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

#include "latentforge/common.hpp"

namespace latentforge {

// Deterministic splitmix64 generator. All randomness in the project flows
// through this so runs are reproducible from config seeds alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream derived from (seed, stream index); used for
  // per-sample parallel-safe generation.
  static Rng child(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t h = fnv1a(&seed, sizeof(seed));
    h = fnv1a(&stream, sizeof(stream), h);
    return Rng(h);
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
  }

  // Box-Muller with a cached spare.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  Image normal_image(int h, int w) {
    Image out(h, w);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) out(y, x) = normal();
    return out;
  }

  Eigen::MatrixXd normal_matrix(int rows, int cols, double scale) {
    Eigen::MatrixXd m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = scale * normal();
    return m;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace latentforge
