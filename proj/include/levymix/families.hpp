#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "levymix/family.hpp"
#include "levymix/special.hpp"

namespace levymix {
namespace families {

/// Stable family f(lam,y) = lam^y, y in (0,1).
/// Levy density y s^{-y-1}/Gamma(1-y); everything is in closed form and the
/// conditional jump law above eps is exact Pareto: S = eps * U^{-1/y}.
inline BernsteinFamily stable() {
  BernsteinFamily fam;
  fam.name = "stable";
  fam.param_domain = {0.0, 1.0, true, true, "(0,1)"};
  fam.kill = [](double) { return 0.0; };
  fam.drift = [](double) { return 0.0; };
  fam.levy_tail = [](double s, double y) {
    return std::pow(s, -y) / std::tgamma(1.0 - y);
  };
  fam.levy_density = [](double s, double y) {
    return y * std::pow(s, -y - 1.0) / std::tgamma(1.0 - y);
  };
  fam.jump_sampler = [](double y, double eps, SplitMix64& rng) {
    return eps * std::pow(rng.uniform(), -1.0 / y);
  };
  fam.tail_primitive = [](double s, double y) {
    return std::pow(s, 1.0 - y) / std::tgamma(2.0 - y);
  };
  fam.tail_moment1 = [](double s, double y) {
    return std::pow(s, 2.0 - y) / ((2.0 - y) * std::tgamma(1.0 - y));
  };
  fam.exponent = [](double lam, double y) { return std::pow(lam, y); };
  fam.exponent_complex = [](std::complex<double> lam, double y) {
    return std::exp(y * std::log(lam));
  };
  fam.total_mass = [](double) { return std::numeric_limits<double>::infinity(); };
  fam.me_witness = [](double t, double y) {
    constexpr double pi = 3.14159265358979323846;
    return std::sin(pi * y) * std::pow(t, y) / pi;
  };
  return make_family(std::move(fam));
}

/// Gamma family f(lam,y) = log(1 + lam/y), y > 0 the rate parameter.
/// Levy density e^{-ys}/s; tail is the exponential integral E1(ys).
inline BernsteinFamily gamma() {
  BernsteinFamily fam;
  fam.name = "gamma";
  fam.param_domain = {0.0, std::numeric_limits<double>::infinity(), true, true, "(0,inf)"};
  fam.kill = [](double) { return 0.0; };
  fam.drift = [](double) { return 0.0; };
  fam.levy_tail = [](double s, double y) { return expint_e1(y * s); };
  fam.levy_density = [](double s, double y) { return std::exp(-y * s) / s; };
  fam.tail_primitive = [](double s, double y) {
    // int_0^s E1(yw) dw = (1 - e^{-ys})/y + s E1(ys)
    double x = y * s;
    if (x > 700.0) return 1.0 / y;
    return -std::expm1(-x) / y + s * expint_e1(x);
  };
  fam.tail_moment1 = [](double s, double y) {
    double x = y * s;
    double bracket;  // 1 - e^{-x}(1+x)
    if (x < 1e-3) {
      bracket = x * x / 2.0 - x * x * x / 3.0 + x * x * x * x / 8.0;
    } else if (x > 700.0) {
      bracket = 1.0;
    } else {
      bracket = 1.0 - std::exp(-x) * (1.0 + x);
    }
    double e1_term = (x > 700.0) ? 0.0 : s * s * expint_e1(x) / 2.0;
    return e1_term + bracket / (2.0 * y * y);
  };
  fam.tail_integral = [](double y, double s) {
    // int_s^inf E1(yw) dw = e^{-ys}/y - s E1(ys)
    double x = y * s;
    if (x > 700.0) return 0.0;
    return std::exp(-x) / y - s * expint_e1(x);
  };
  fam.exponent = [](double lam, double y) { return std::log1p(lam / y); };
  fam.exponent_complex = [](std::complex<double> lam, double y) {
    return std::log(1.0 + lam / y);
  };
  fam.total_mass = [](double) { return std::numeric_limits<double>::infinity(); };
  fam.me_witness = [](double t, double y) { return t > y ? 1.0 : 0.0; };
  return make_family(std::move(fam));
}

/// Pure drift f(lam,y) = y*lam.
inline BernsteinFamily drift() {
  BernsteinFamily fam;
  fam.name = "drift";
  fam.param_domain = {0.0, std::numeric_limits<double>::infinity(), false, true, "[0,inf)"};
  fam.kill = [](double) { return 0.0; };
  fam.drift = [](double y) { return y; };
  fam.levy_tail = [](double, double) { return 0.0; };
  fam.levy_density = [](double, double) { return 0.0; };
  fam.tail_primitive = [](double, double) { return 0.0; };
  fam.tail_moment1 = [](double, double) { return 0.0; };
  fam.tail_integral = [](double, double) { return 0.0; };
  fam.exponent = [](double lam, double y) { return y * lam; };
  fam.exponent_complex = [](std::complex<double> lam, double y) { return y * lam; };
  fam.total_mass = [](double) { return 0.0; };
  fam.jump_sampler = [](double, double, SplitMix64&) -> double {
    throw NumericError("drift family has no jumps");
  };
  return fam;
}

/// Pure killing f(lam,y) = y.
inline BernsteinFamily killed() {
  BernsteinFamily fam;
  fam.name = "killed";
  fam.param_domain = {0.0, std::numeric_limits<double>::infinity(), false, true, "[0,inf)"};
  fam.kill = [](double y) { return y; };
  fam.drift = [](double) { return 0.0; };
  fam.levy_tail = [](double, double) { return 0.0; };
  fam.levy_density = [](double, double) { return 0.0; };
  fam.tail_primitive = [](double, double) { return 0.0; };
  fam.tail_moment1 = [](double, double) { return 0.0; };
  fam.tail_integral = [](double, double) { return 0.0; };
  fam.exponent = [](double, double y) { return y; };
  fam.exponent_complex = [](std::complex<double>, double y) {
    return std::complex<double>(y, 0.0);
  };
  fam.total_mass = [](double) { return 0.0; };
  fam.jump_sampler = [](double, double, SplitMix64&) -> double {
    throw NumericError("killed family has no jumps");
  };
  return fam;
}

/// Compound Poisson with unit atom: nu(ds,y) = y * delta_{jump_size}(ds),
/// f(lam,y) = y (1 - e^{-lam * jump_size}).
inline BernsteinFamily compound_poisson(double jump_size = 1.0) {
  if (!(jump_size > 0.0)) throw ConfigError("compound_poisson: jump_size must be positive");
  BernsteinFamily fam;
  fam.name = "compound_poisson";
  fam.param_domain = {0.0, std::numeric_limits<double>::infinity(), false, true, "[0,inf)"};
  fam.kill = [](double) { return 0.0; };
  fam.drift = [](double) { return 0.0; };
  fam.levy_tail = [jump_size](double s, double y) { return s < jump_size ? y : 0.0; };
  fam.jump_sampler = [jump_size](double, double eps, SplitMix64&) {
    if (eps >= jump_size)
      throw NumericError("compound_poisson: no mass above epsilon");
    return jump_size;
  };
  fam.tail_primitive = [jump_size](double s, double y) {
    return y * std::min(s, jump_size);
  };
  fam.tail_moment1 = [jump_size](double s, double y) {
    double m = std::min(s, jump_size);
    return y * m * m / 2.0;
  };
  fam.tail_integral = [jump_size](double y, double s) {
    return y * std::max(jump_size - s, 0.0);
  };
  fam.exponent = [jump_size](double lam, double y) {
    return y * (-std::expm1(-lam * jump_size));
  };
  fam.exponent_complex = [jump_size](std::complex<double> lam, double y) {
    return y * (1.0 - std::exp(-lam * jump_size));
  };
  fam.total_mass = [](double y) { return y; };
  return fam;
}

/// Family with a user-tabulated tail nu((s,inf)) (independent of y):
/// log-log interpolation between knots, flat below the first knot, zero
/// beyond the last. The exponent is evaluated by quadrature only.
inline BernsteinFamily tabulated(std::vector<double> s_points, std::vector<double> tails) {
  if (s_points.size() != tails.size() || s_points.size() < 2)
    throw ConfigError("tabulated family: need matching s/tail arrays of size >= 2");
  for (std::size_t i = 0; i + 1 < s_points.size(); ++i) {
    if (!(s_points[i] > 0.0) || !(s_points[i + 1] > s_points[i]))
      throw ConfigError("tabulated family: s points must be positive and increasing");
    if (tails[i + 1] > tails[i] + 1e-12)
      throw ConfigError("tabulated family: tail must be nonincreasing");
  }
  auto interp = [s_points, tails](double s, double) {
    if (s <= s_points.front()) return tails.front();
    if (s >= s_points.back()) return 0.0;
    auto it = std::upper_bound(s_points.begin(), s_points.end(), s);
    std::size_t i = static_cast<std::size_t>(it - s_points.begin()) - 1;
    double v0 = tails[i], v1 = tails[i + 1];
    double s0 = s_points[i], s1 = s_points[i + 1];
    if (v0 > 0.0 && v1 > 0.0) {
      double t = (std::log(s) - std::log(s0)) / (std::log(s1) - std::log(s0));
      return std::exp((1.0 - t) * std::log(v0) + t * std::log(v1));
    }
    return v0 + (v1 - v0) * (s - s0) / (s1 - s0);
  };
  BernsteinFamily fam;
  fam.name = "tabulated";
  fam.param_domain = {-std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity(), true, true, "(-inf,inf)"};
  fam.kill = [](double) { return 0.0; };
  fam.drift = [](double) { return 0.0; };
  fam.levy_tail = interp;
  fam.total_mass = [m = tails.front()](double) { return m; };
  return make_family(std::move(fam));
}

}  // namespace families

/// Adds a constant killing rate on top of an existing family.
inline BernsteinFamily with_constant_kill(BernsteinFamily fam, double a0) {
  if (a0 < 0.0) throw ConfigError("kill rate must be nonnegative");
  if (a0 == 0.0) return fam;
  auto base_kill = fam.kill;
  fam.kill = [base_kill, a0](double y) { return base_kill(y) + a0; };
  if (fam.exponent) {
    auto base = fam.exponent;
    fam.exponent = [base, a0](double lam, double y) { return base(lam, y) + a0; };
  }
  if (fam.exponent_complex) {
    auto base = fam.exponent_complex;
    fam.exponent_complex = [base, a0](std::complex<double> lam, double y) {
      return base(lam, y) + a0;
    };
  }
  return fam;
}

/// Adds a constant drift on top of an existing family.
inline BernsteinFamily with_constant_drift(BernsteinFamily fam, double b0) {
  if (b0 < 0.0) throw ConfigError("drift must be nonnegative");
  if (b0 == 0.0) return fam;
  auto base_drift = fam.drift;
  fam.drift = [base_drift, b0](double y) { return base_drift(y) + b0; };
  if (fam.exponent) {
    auto base = fam.exponent;
    fam.exponent = [base, b0](double lam, double y) { return base(lam, y) + b0 * lam; };
  }
  if (fam.exponent_complex) {
    auto base = fam.exponent_complex;
    fam.exponent_complex = [base, b0](std::complex<double> lam, double y) {
      return base(lam, y) + b0 * lam;
    };
  }
  return fam;
}

}  // namespace levymix
