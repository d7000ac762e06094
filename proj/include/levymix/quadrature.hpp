#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <vector>

#include "levymix/errors.hpp"

namespace levymix {

/// Gauss-Legendre rule on [-1, 1], computed once per order and cached.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  static const GaussLegendre& get(int n) {
    static std::mutex mu;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, compute(n)).first->second;
  }

 private:
  static GaussLegendre compute(int n) {
    if (n < 1) throw ParameterError("GaussLegendre: order must be >= 1");
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      // Tricomi initial guess, then Newton on P_n.
      double x = std::cos(pi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / pp;
        x -= dx;
        if (std::fabs(dx) < 1e-15) break;
      }
      rule.nodes[i] = -x;
      rule.nodes[n - 1 - i] = x;
      double w = 2.0 / ((1.0 - x * x) * pp * pp);
      rule.weights[i] = w;
      rule.weights[n - 1 - i] = w;
    }
    return rule;
  }
};

/// Single-panel Gauss-Legendre on [a, b].
template <typename F>
double integrate_panel(F&& f, double a, double b, int order = 16) {
  const GaussLegendre& rule = GaussLegendre::get(order);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

/// tanh-sinh (double-exponential) rule on (a, b). Converges at machine
/// precision for integrable endpoint singularities like s^{-beta}; nodes
/// whose offset from the endpoint underflows are skipped (their weights
/// decay double-exponentially faster than any integrable blow-up grows).
template <typename F>
double integrate_de(F&& f, double a, double b, double rtol = 1e-12,
                    int max_level = 12, double* error_estimate = nullptr) {
  const double pi_half = 1.5707963267948966;
  const double c = 0.5 * (a + b), d = 0.5 * (b - a);
  const double tmax = 6.0;
  auto node_term = [&](double t) -> double {
    double g = pi_half * std::sinh(t);
    if (g > 300.0) return 0.0;  // offset underflows; contribution negligible
    double e2 = std::exp(-2.0 * g);
    // distance from the nearer endpoint, computed without cancellation
    double off = 2.0 * d * e2 / (1.0 + e2);
    double sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
    double w = pi_half * std::cosh(t) * sech2;
    double sum = 0.0;
    double x_hi = b - off;
    double x_lo = a + off;
    if (x_hi > a && x_hi < b) sum += w * f(x_hi);
    if (t > 0.0 && x_lo > a && x_lo < b) sum += w * f(x_lo);
    return sum;
  };
  double h = 1.0;
  double sum = node_term(0.0);
  for (double t = h; t <= tmax; t += h) sum += node_term(t);
  double prev = sum * h * d;
  double last_correction = std::fabs(prev);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t <= tmax; t += 2.0 * h) add += node_term(t);
    sum += add;
    double cur = sum * h * d;
    last_correction = std::fabs(cur - prev);
    if (level >= 3 && last_correction <= rtol * (std::fabs(cur) + 1e-300)) {
      if (error_estimate) *error_estimate = last_correction;
      return cur;
    }
    prev = cur;
  }
  if (error_estimate) *error_estimate = last_correction;
  return prev;
}

struct GradedOptions {
  int panels = 40;     // geometric subdivisions toward the singular end
  int order = 16;      // Gauss-Legendre order per panel
  double ratio = 0.5;  // panel shrink factor
};

/// Integrate f over (a, b] with geometric panels accumulating toward a.
/// Handles integrable endpoint singularities like s^{-beta}, beta < 1.
template <typename F>
double integrate_graded(F&& f, double a, double b, GradedOptions opt = {}) {
  if (!(b > a)) return 0.0;
  double len = b - a;
  double sum = 0.0;
  double hi = 1.0;
  for (int k = 0; k < opt.panels; ++k) {
    double lo = (k + 1 == opt.panels) ? 0.0 : hi * opt.ratio;
    sum += integrate_panel(f, a + lo * len, a + hi * len, opt.order);
    hi = lo;
  }
  return sum;
}

/// Same, panels accumulating toward b.
template <typename F>
double integrate_graded_upper(F&& f, double a, double b, GradedOptions opt = {}) {
  return integrate_graded([&](double u) { return f(a + b - u); }, a, b, opt);
}

struct TailIntegral {
  double value = 0.0;
  bool diverged = false;
};

/// Integral of f over (a, inf) with dyadic upper panels and divergence
/// detection: reports +inf when partial sums exceed `threshold` while the
/// panel contributions keep growing, or when contributions fail to decay
/// at the panel ceiling (geometric extrapolation beyond the threshold).
template <typename F>
TailIntegral integrate_to_infinity(F&& f, double a, double threshold = 1e12,
                                   int order = 16) {
  double lo = std::max(a, 1e-300);
  double hi = std::max(2.0 * lo, 1.0);
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  int flat = 0;
  for (int k = 0; k < 80; ++k) {
    double c = integrate_panel(f, lo, hi, order);
    sum += c;
    if (sum > threshold && c >= prev) return {std::numeric_limits<double>::infinity(), true};
    if (std::fabs(c) < 1e-16 * std::fabs(sum) + 1e-300) return {sum, false};
    flat = (c >= 0.98 * prev) ? flat + 1 : 0;
    if (flat >= 8) return {std::numeric_limits<double>::infinity(), true};
    prev = c;
    lo = hi;
    hi *= 2.0;
  }
  return {sum, false};
}

/// Laplace-type integral int_0^inf e^{-lam t} g(t) dt via the substitution
/// u = lam*t and a double-exponential rule on (0, 45] (e^{-45} ~ 3e-20),
/// which absorbs an integrable singularity of g at 0.
template <typename F>
double laplace_integral(F&& g, double lam, double rtol = 1e-12) {
  if (!(lam > 0.0)) throw ParameterError("laplace_integral: lambda must be positive");
  const double umax = 45.0;
  return integrate_de(
             [&](double u) { return std::exp(-u) * g(u / lam); }, 0.0, umax, rtol) /
         lam;
}

/// Deterministic pairwise tree summation (order independent of chunking).
inline double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return v.empty() ? 0.0 : pairwise_sum(v, 0, v.size());
}

}  // namespace levymix
