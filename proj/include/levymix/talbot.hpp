#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "levymix/errors.hpp"

namespace levymix {

/// Fixed-contour (Talbot-type) inversion parameters. The contour crosses
/// the real axis at r = scaling * node_count / t; the default scaling 0.4
/// is the classical 2M/(5t) choice. Deterministic: a single tunable.
struct InversionConfig {
  int node_count = 32;
  double scaling = 0.4;
};

/// Inverse Laplace transform of F at t > 0 on the fixed Talbot contour
/// s(theta) = r*theta*(cot(theta) + i). F must be evaluable at complex
/// arguments in the cut plane (analytic off the negative real axis).
inline double invert_laplace(
    const std::function<std::complex<double>(std::complex<double>)>& F, double t,
    InversionConfig cfg = {}) {
  if (!(t > 0.0)) throw ParameterError("invert_laplace: t must be positive");
  if (cfg.node_count < 8) throw ConfigError("invert_laplace: node_count must be >= 8");
  const int M = cfg.node_count;
  const double pi = 3.14159265358979323846;
  const double r = cfg.scaling * M / t;

  auto guard = [&](std::complex<double> v, double theta) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericError("invert_laplace: transform returned a non-finite value on the "
                         "contour (theta=" + std::to_string(theta) + ", t=" +
                         std::to_string(t) + ")");
    return v;
  };

  double sum = 0.5 * std::exp(r * t) * guard(F(std::complex<double>(r, 0.0)), 0.0).real();
  for (int k = 1; k < M; ++k) {
    double theta = k * pi / M;
    double cot = std::cos(theta) / std::sin(theta);
    std::complex<double> s(r * theta * cot, r * theta);
    double sigma = theta + (theta * cot - 1.0) * cot;
    std::complex<double> term =
        std::exp(s * t) * guard(F(s), theta) * std::complex<double>(1.0, sigma);
    sum += term.real();
  }
  double value = sum * r / M;
  if (!std::isfinite(value))
    throw NumericError("invert_laplace: contour sum overflowed at t=" + std::to_string(t));
  return value;
}

}  // namespace levymix
