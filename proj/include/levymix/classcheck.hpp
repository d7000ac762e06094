#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "levymix/errors.hpp"
#include "levymix/mixed.hpp"
#include "levymix/quadrature.hpp"

namespace levymix {

enum class FunctionClass { CBF, SBF, TBF, ME };
enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::CBF: return "CBF";
    case FunctionClass::SBF: return "SBF";
    case FunctionClass::TBF: return "TBF";
    case FunctionClass::ME: return "ME";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// What gets checked, per kind:
///   CBF  witness = the Levy density m(s); complete monotonicity
///   SBF  witness = f(lambda) itself; lambda/f must be Bernstein
///   TBF  witness = t * tau(t); complete monotonicity
///   ME   witness = eta(t); range [0,1] plus int_0^1 eta/t finite
struct ClassCertificate {
  FunctionClass kind = FunctionClass::CBF;
  std::function<double(double)> witness;
  int check_order = 4;
  std::vector<double> grid;  // filled with the kind's default when empty
  std::string label;
};

struct ClassReport {
  Verdict verdict = Verdict::Inconclusive;
  int order_checked = 0;
  int first_violation_order = 0;  // 0 when no hard violation found
  double worst_margin = 0.0;      // most negative signed value, scaled
  double me_integral = 0.0;       // int_0^1 eta/t dt, ME only
  std::string detail;

  bool pass() const { return verdict == Verdict::Pass; }
};

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1.0));
  return g;
}

namespace detail {

/// Alternating-sign test on divided differences. `first_sign` is the sign
/// required of the order-1 divided difference; order k then requires sign
/// first_sign * (-1)^{k-1}. Values must be nonnegative at order 0.
/// A violation below the propagated rounding-noise band is reported as
/// inconclusive rather than a failure.
struct AlternationResult {
  int first_violation = 0;
  bool noise_limited = false;
  double worst_margin = 0.0;
};

inline AlternationResult alternation_check(const std::vector<double>& x,
                                           std::vector<double> dd, int max_order,
                                           double first_sign, double rtol) {
  AlternationResult res;
  std::vector<double> noise(dd.size());
  for (std::size_t i = 0; i < dd.size(); ++i)
    noise[i] = 16.0 * std::numeric_limits<double>::epsilon() * (std::fabs(dd[i]) + 1e-300);

  auto scan = [&](int order, double sign) {
    double scale = 0.0;
    for (std::size_t i = 0; i + order < x.size(); ++i)
      scale = std::max(scale, std::fabs(dd[i]));
    bool hard = false, soft = false;
    for (std::size_t i = 0; i + order < x.size(); ++i) {
      double signed_value = sign * dd[i];
      if (signed_value < 0.0) {
        double band = rtol * scale + 8.0 * noise[i];
        double margin = signed_value / (scale + 1e-300);
        res.worst_margin = std::min(res.worst_margin, margin);
        if (-signed_value > band)
          hard = true;
        else
          soft = true;
      }
    }
    if (hard && res.first_violation == 0) res.first_violation = order;
    if (soft) res.noise_limited = true;
  };

  scan(0, 1.0);
  for (int k = 1; k <= max_order; ++k) {
    for (std::size_t i = 0; i + k < x.size(); ++i) {
      double denom = x[i + k] - x[i];
      dd[i] = (dd[i + 1] - dd[i]) / denom;
      noise[i] = (noise[i + 1] + noise[i]) / denom;
    }
    dd.resize(x.size() - k);
    noise.resize(x.size() - k);
    scan(k, first_sign * ((k - 1) % 2 == 0 ? 1.0 : -1.0));
    if (res.first_violation != 0) break;
  }
  return res;
}

inline ClassReport monotonicity_report(const std::vector<double>& grid,
                                       const std::function<double(double)>& w,
                                       int order, double first_sign, double rtol) {
  ClassReport rep;
  if (static_cast<int>(grid.size()) < order + 2) {
    rep.verdict = Verdict::Inconclusive;
    rep.detail = "grid too coarse for requested order";
    return rep;
  }
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = w(grid[i]);
  auto res = alternation_check(grid, values, order, first_sign, rtol);
  rep.order_checked = order;
  rep.first_violation_order = res.first_violation;
  rep.worst_margin = res.worst_margin;
  if (res.first_violation != 0)
    rep.verdict = Verdict::Fail;
  else if (res.noise_limited)
    rep.verdict = Verdict::Inconclusive;
  else
    rep.verdict = Verdict::Pass;
  return rep;
}

}  // namespace detail

/// Finite-order class certification. A PASS is evidence up to the checked
/// order on the given grid, not a proof; the report records both.
inline ClassReport class_check(const ClassCertificate& cert, double rtol = 1e-7) {
  if (!cert.witness) throw ConfigError("class_check: certificate has no witness");
  std::vector<double> grid = cert.grid;
  switch (cert.kind) {
    case FunctionClass::CBF:
    case FunctionClass::TBF: {
      if (grid.empty()) grid = log_grid(1e-2, 1e2, 64);
      // complete monotonicity: f >= 0, f' <= 0, f'' >= 0, ...
      auto rep = detail::monotonicity_report(grid, cert.witness, cert.check_order,
                                             -1.0, rtol);
      rep.detail = std::string(to_string(cert.kind)) +
                   " witness complete-monotonicity check; " + rep.detail;
      return rep;
    }
    case FunctionClass::SBF: {
      if (grid.empty()) grid = log_grid(1e-2, 1e2, 64);
      auto conj = [&](double lam) {
        double f = cert.witness(lam);
        if (!(f > 0.0)) throw NumericError("SBF check: witness must be positive");
        return lam / f;
      };
      // lambda/f must be Bernstein: g >= 0, g' >= 0, g'' <= 0, ...
      auto rep = detail::monotonicity_report(grid, conj, cert.check_order, 1.0, rtol);
      rep.detail = "SBF check of lambda/f Bernstein pattern; " + rep.detail;
      return rep;
    }
    case FunctionClass::ME: {
      if (grid.empty()) grid = log_grid(1e-6, 1.0, 64);
      ClassReport rep;
      rep.order_checked = 0;
      double tol = 1e-9;
      bool ok = true;
      double worst = 0.0;
      for (double t : grid) {
        double v = cert.witness(t);
        if (v < -tol || v > 1.0 + tol) {
          ok = false;
          worst = std::min(worst, std::min(v, 1.0 - v));
        }
      }
      // int_0^1 eta(t)/t dt by graded quadrature; once eta is in [0,1] the
      // truncated integral is bounded by log(1/t_min), so the substantive
      // gate is the range bound.
      rep.me_integral = integrate_graded(
          [&](double t) { return cert.witness(t) / t; }, 1e-8, 1.0);
      if (rep.me_integral > 1e12) ok = false;
      rep.worst_margin = worst;
      rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
      if (!ok) rep.first_violation_order = 0;
      rep.detail = "ME range/integrability check";
      return rep;
    }
  }
  throw ConfigError("class_check: unknown kind");
}

// ---------------------------------------------------------------------------
// Certificate builders for families and node-weighted mixtures
// ---------------------------------------------------------------------------

inline ClassCertificate make_cbf_certificate(const BernsteinFamily& fam, double y) {
  if (!fam.levy_density)
    throw ConfigError("CBF certificate needs a Levy density (family '" + fam.name + "')");
  fam.require_param(y);
  return {FunctionClass::CBF,
          [fam, y](double s) { return fam.levy_density(s, y); },
          4, {}, fam.name + " CBF at y=" + std::to_string(y)};
}

inline ClassCertificate make_cbf_certificate(const MixedExponent& mixed) {
  if (!mixed.family().levy_density)
    throw ConfigError("CBF certificate needs a Levy density");
  return {FunctionClass::CBF,
          [m = mixed](double s) {
            return m.node_sum([&](double y) { return m.family().levy_density(s, y); });
          },
          4, {}, mixed.family().name + " mixed CBF"};
}

inline ClassCertificate make_tbf_certificate(const BernsteinFamily& fam, double y) {
  if (!fam.levy_density)
    throw ConfigError("TBF certificate needs a Levy density (family '" + fam.name + "')");
  fam.require_param(y);
  return {FunctionClass::TBF,
          [fam, y](double t) { return t * fam.levy_density(t, y); },
          4, {}, fam.name + " TBF at y=" + std::to_string(y)};
}

inline ClassCertificate make_tbf_certificate(const MixedExponent& mixed) {
  if (!mixed.family().levy_density)
    throw ConfigError("TBF certificate needs a Levy density");
  return {FunctionClass::TBF,
          [m = mixed](double t) {
            return t * m.node_sum([&](double y) { return m.family().levy_density(t, y); });
          },
          4, {}, mixed.family().name + " mixed TBF"};
}

inline ClassCertificate make_me_certificate(const BernsteinFamily& fam, double y) {
  if (!fam.me_witness)
    throw ConfigError("ME certificate needs an eta witness (family '" + fam.name + "')");
  fam.require_param(y);
  return {FunctionClass::ME,
          [fam, y](double t) { return fam.me_witness(t, y); },
          0, {}, fam.name + " ME at y=" + std::to_string(y)};
}

inline ClassCertificate make_me_certificate(const MixedExponent& mixed) {
  if (!mixed.family().me_witness)
    throw ConfigError("ME certificate needs an eta witness");
  return {FunctionClass::ME,
          [m = mixed](double t) {
            return m.node_sum([&](double y) { return m.family().me_witness(t, y); });
          },
          0, {}, mixed.family().name + " mixed ME"};
}

inline ClassCertificate make_sbf_certificate(const BernsteinFamily& fam, double y) {
  fam.require_param(y);
  return {FunctionClass::SBF,
          [fam, y](double lam) { return eval_f(fam, lam, y); },
          4, {}, fam.name + " SBF at y=" + std::to_string(y)};
}

inline ClassCertificate make_sbf_certificate(const MixedExponent& mixed) {
  return {FunctionClass::SBF,
          [m = mixed](double lam) { return m.f(lam); },
          4, {}, mixed.family().name + " mixed SBF"};
}

/// Bernstein-pattern spot check of an arbitrary lambda -> g(lambda)
/// (used for the mixed exponent and the inverse-local-time exponent).
inline ClassReport bernstein_spot_check(const std::function<double(double)>& g,
                                        int order = 4,
                                        std::vector<double> grid = {},
                                        double rtol = 1e-7) {
  if (grid.empty()) grid = log_grid(1e-2, 1e2, 64);
  auto rep = detail::monotonicity_report(grid, g, order, 1.0, rtol);
  rep.detail = "Bernstein pattern spot check; " + rep.detail;
  return rep;
}

}  // namespace levymix
