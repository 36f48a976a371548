#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace latentforge {

// Single-channel images and latents live in pixel space as h x w arrays.
using Image = Eigen::ArrayXXd;
using ImageF = Eigen::ArrayXXf;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments or inconsistent shapes.
struct ValidationError : Error {
  using Error::Error;
};

// Non-finite values encountered mid-computation.
struct NumericError : Error {
  using Error::Error;
};

// Operation refused because it would exceed a configured resource cap.
struct ResourceGuardError : Error {
  using Error::Error;
};

// File-format or filesystem failures.
struct IoError : Error {
  using Error::Error;
};

// A required pipeline artifact is absent; message names the artifact.
struct MissingArtifactError : Error {
  using Error::Error;
};

inline double mse(const Image& a, const Image& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("mse: shape mismatch");
  return (a - b).square().mean();
}

inline Image to_double(const ImageF& x) { return x.cast<double>(); }
inline ImageF to_float(const Image& x) { return x.cast<float>(); }

// FNV-1a over raw bytes; used for artifact hashing and seed derivation.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t h = 1469598103934665603ull) {
  return fnv1a(s.data(), s.size(), h);
}

}  // namespace latentforge
