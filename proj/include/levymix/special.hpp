#pragma once

#include <cmath>
#include <limits>

#include "levymix/errors.hpp"

namespace levymix {

/// Exponential integral E1(x) = int_x^inf e^{-w}/w dw, x > 0.
/// Power series below 1, modified Lentz continued fraction above.
inline double expint_e1(double x) {
  if (!(x > 0.0)) throw ParameterError("expint_e1: argument must be positive");
  if (x > 700.0) return 0.0;  // e^{-x} underflows anyway
  constexpr double euler_gamma = 0.57721566490153286060651209008240;
  if (x <= 1.0) {
    double sum = -euler_gamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k <= 40; ++k) {
      term *= -x / k;
      double add = -term / k;
      sum += add;
      if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  // E1(x) = e^{-x} * 1/(x+1- 1/(x+3- 4/(x+5- 9/(x+7- ...))))
  double b = x + 1.0;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k <= 200; ++k) {
    double a = -static_cast<double>(k) * k;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    double delta = c * d;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

}  // namespace levymix
