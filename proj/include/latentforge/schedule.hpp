#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "latentforge/common.hpp"

namespace latentforge {

enum class ScheduleKind { linear, scaled_linear };

// Variance schedule for the diffusion process. Steps are indexed t = 1..T;
// alpha_bar(0) == 1 by convention so the final sampling step is defined.
struct NoiseSchedule {
  int T = 0;
  Eigen::VectorXd betas;       // betas[t-1] = beta_t
  Eigen::VectorXd alpha_bars;  // alpha_bars[t-1] = prod_{i<=t} (1 - beta_i)
  ScheduleKind kind = ScheduleKind::linear;

  double beta(int t) const {
    check_t(t);
    return betas[t - 1];
  }
  double alpha_bar(int t) const {
    if (t == 0) return 1.0;
    check_t(t);
    return alpha_bars[t - 1];
  }

  void check_t(int t) const {
    if (t < 1 || t > T)
      throw ValidationError("schedule: step index " + std::to_string(t) +
                            " outside 1..T");
  }
};

inline NoiseSchedule make_schedule(int T, double beta_min, double beta_max,
                                   ScheduleKind kind) {
  if (T < 1) throw ValidationError("make_schedule: T must be >= 1");
  if (!(0.0 < beta_min && beta_min <= beta_max && beta_max < 1.0))
    throw ValidationError("make_schedule: need 0 < beta_min <= beta_max < 1");

  NoiseSchedule s;
  s.T = T;
  s.kind = kind;
  s.betas.resize(T);
  if (T == 1) {
    s.betas[0] = beta_min;
  } else if (kind == ScheduleKind::linear) {
    s.betas = Eigen::VectorXd::LinSpaced(T, beta_min, beta_max);
  } else {
    Eigen::VectorXd r =
        Eigen::VectorXd::LinSpaced(T, std::sqrt(beta_min), std::sqrt(beta_max));
    s.betas = r.array().square();
  }
  s.alpha_bars.resize(T);
  double prod = 1.0;
  for (int i = 0; i < T; ++i) {
    prod *= 1.0 - s.betas[i];
    s.alpha_bars[i] = prod;
  }
  return s;
}

// d x0 / d x_t from the reparameterization x_t = sqrt(ab)*x0 + sqrt(1-ab)*eps.
inline double skip_constant(const NoiseSchedule& s, int t) {
  return 1.0 / std::sqrt(s.alpha_bar(t));
}

// Closed-form forward noising.
template <typename D0, typename D1>
typename D0::PlainObject q_sample(const NoiseSchedule& s, int t,
                                  const Eigen::ArrayBase<D0>& x0,
                                  const Eigen::ArrayBase<D1>& eps) {
  if (x0.rows() != eps.rows() || x0.cols() != eps.cols())
    throw ValidationError("q_sample: eps shape must match x0");
  const double ab = s.alpha_bar(t);
  return std::sqrt(ab) * x0 + std::sqrt(1.0 - ab) * eps;
}

// Coefficients of the deterministic DDIM transition between noise levels:
//   x_to = scale_x * x_from + scale_eps * eps_hat
// Derived by mapping x_from to the predicted clean image and renoising to
// the target level; works in both directions (sampling and inversion).
struct DdimCoeffs {
  double scale_x;
  double scale_eps;
};

inline DdimCoeffs ddim_coeffs(double ab_from, double ab_to) {
  DdimCoeffs c;
  c.scale_x = std::sqrt(ab_to / ab_from);
  c.scale_eps =
      std::sqrt(1.0 - ab_to) - std::sqrt(ab_to * (1.0 - ab_from) / ab_from);
  return c;
}

// One deterministic sampling step x_t -> x_{t-1}.
template <typename D0, typename D1>
typename D0::PlainObject ddim_step(const NoiseSchedule& s, int t,
                                   const Eigen::ArrayBase<D0>& x_t,
                                   const Eigen::ArrayBase<D1>& eps_hat) {
  const DdimCoeffs c = ddim_coeffs(s.alpha_bar(t), s.alpha_bar(t - 1));
  return c.scale_x * x_t + c.scale_eps * eps_hat;
}

// One inversion step x_{t-1} -> x_t (the reverse-direction discretization).
template <typename D0, typename D1>
typename D0::PlainObject ddim_invert_step(const NoiseSchedule& s, int t,
                                          const Eigen::ArrayBase<D0>& x_prev,
                                          const Eigen::ArrayBase<D1>& eps_hat) {
  const DdimCoeffs c = ddim_coeffs(s.alpha_bar(t - 1), s.alpha_bar(t));
  return c.scale_x * x_prev + c.scale_eps * eps_hat;
}

}  // namespace latentforge
