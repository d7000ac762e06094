#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>

#include "levymix/errors.hpp"
#include "levymix/quadrature.hpp"
#include "levymix/rng.hpp"

namespace levymix {

struct ParamDomain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool open_lo = true;
  bool open_hi = true;
  std::string description;

  bool contains(double y) const {
    if (open_lo ? !(y > lo) : !(y >= lo)) return false;
    if (open_hi ? !(y < hi) : !(y <= hi)) return false;
    return true;
  }
};

/// A parametrized Bernstein family: the triplet (a(y), b(y), nu(ds,y))
/// plus whatever closed forms the family can offer. Only `kill`, `drift`,
/// `levy_tail` and `param_domain` are mandatory; a jump sampler is derived
/// from the tail when none is supplied (see make_family below).
///
/// Optional closed forms, all per fixed y:
///   levy_density(s,y)      nu(ds,y)/ds
///   tail_integral(y,s)     int_s^inf nu((w,inf),y) dw    (only when finite)
///   tail_primitive(s,y)    int_0^s nu((w,inf),y) dw      (finite under A2)
///   tail_moment1(s,y)      int_0^s w nu((w,inf),y) dw
///   exponent(lam,y)        f(lam,y) itself
///   exponent_complex       f on the cut plane, for transform inversion
///   total_mass(y)          nu((0,inf),y), possibly +inf
///   me_witness(t,y)        eta_y(t), the ME representing density
struct BernsteinFamily {
  std::string name;
  std::function<double(double)> kill;    // a(y)
  std::function<double(double)> drift;   // b(y)
  std::function<double(double, double)> levy_tail;  // (s,y)
  std::function<double(double, double)> levy_density;
  std::function<double(double, double, SplitMix64&)> jump_sampler;  // (y,eps,rng)
  std::function<double(double, double)> tail_integral;   // (y,s)
  std::function<double(double, double)> tail_primitive;  // (s,y)
  std::function<double(double, double)> tail_moment1;    // (s,y)
  std::function<double(double, double)> exponent;        // (lam,y)
  std::function<std::complex<double>(std::complex<double>, double)> exponent_complex;
  std::function<double(double)> total_mass;
  std::function<double(double, double)> me_witness;  // (t,y)
  ParamDomain param_domain;

  void require_param(double y) const {
    if (!param_domain.contains(y))
      throw ParameterError("family '" + name + "': parameter y=" + std::to_string(y) +
                           " outside domain " + param_domain.description);
  }
};

/// Generic conditional jump sampler by bisection on the tail:
/// solves nu((S,inf),y) = U * nu((eps,inf),y) for S in (eps, inf).
inline double sample_jump_by_tail(const BernsteinFamily& fam, double y, double eps,
                                  SplitMix64& rng) {
  double tail_eps = fam.levy_tail(eps, y);
  if (!(tail_eps > 0.0))
    throw NumericError("jump sampler: zero tail mass above epsilon");
  double target = rng.uniform() * tail_eps;
  double lo = eps, hi = eps;
  for (int k = 0; k < 2000; ++k) {
    hi *= 2.0;
    if (fam.levy_tail(hi, y) <= target) break;
    lo = hi;
    if (hi > 1e300) return std::numeric_limits<double>::infinity();
  }
  for (int k = 0; k < 200; ++k) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (fam.levy_tail(mid, y) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Fills derived members (jump sampler, total-mass probe) when missing.
inline BernsteinFamily make_family(BernsteinFamily fam) {
  if (!fam.jump_sampler) {
    fam.jump_sampler = [base = fam](double y, double eps, SplitMix64& rng) {
      return sample_jump_by_tail(base, y, eps, rng);
    };
  }
  if (!fam.total_mass) {
    fam.total_mass = [base = fam](double y) {
      // Probe the tail toward s -> 0; a still-growing tail means infinite
      // activity (covers both power and logarithmic blow-ups).
      double prev = base.levy_tail(1e-2, y);
      for (double s = 1e-3; s > 1e-15; s *= 0.1) {
        double cur = base.levy_tail(s, y);
        if (cur <= prev * (1.0 + 1e-9)) return cur;  // converged
        prev = cur;
      }
      return std::numeric_limits<double>::infinity();
    };
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Per-family evaluation (mixing_core operations at fixed y)
// ---------------------------------------------------------------------------

/// nu-bar(s,y) = a(y) + nu((s,inf),y); nonincreasing and right-continuous in s.
inline double eval_tail(const BernsteinFamily& fam, double s, double y) {
  if (!(s > 0.0)) throw ParameterError("eval_tail: s must be positive");
  fam.require_param(y);
  return fam.kill(y) + fam.levy_tail(s, y);
}

/// f(lam,y) = a + b*lam + int (1-e^{-lam s}) nu(ds,y). Uses the closed form
/// when the family has one, otherwise the Laplace identity
/// f = a + b*lam + lam * int_0^inf e^{-lam s} nu((s,inf),y) ds.
inline double eval_f(const BernsteinFamily& fam, double lam, double y) {
  if (!(lam > 0.0)) throw ParameterError("eval_f: lambda must be positive");
  fam.require_param(y);
  if (fam.exponent) return fam.exponent(lam, y);
  double tail_part = laplace_integral([&](double s) { return fam.levy_tail(s, y); }, lam);
  double value = fam.kill(y) + fam.drift(y) * lam + lam * tail_part;
  if (!std::isfinite(value))
    throw NumericError("eval_f: quadrature did not converge (family '" + fam.name + "')");
  return value;
}

/// f(lam,y) for complex lam (transform inversion path). Requires a closed
/// form analytic in the cut plane; the quadrature identity only converges
/// for Re(lam) > 0 and is not usable on an inversion contour.
inline std::complex<double> eval_f_complex(const BernsteinFamily& fam,
                                           std::complex<double> lam, double y) {
  if (!fam.exponent_complex)
    throw NumericError("family '" + fam.name +
                       "' has no complex exponent; transform inversion unavailable");
  return fam.exponent_complex(lam, y);
}

/// V(y) = int_0^inf (s ^ 1) nu(ds,y) = int_0^1 nu((s,inf),y) ds,
/// by graded quadrature against the tail.
inline double eval_V(const BernsteinFamily& fam, double y) {
  fam.require_param(y);
  if (fam.tail_primitive) return fam.tail_primitive(1.0, y);
  return integrate_de([&](double s) { return fam.levy_tail(s, y); }, 0.0, 1.0);
}

/// |f(lam,y)/lam - b(y) - int_0^inf e^{-lam s} nu-bar(s,y) ds|, the
/// self-consistency residual of the integrated-by-parts representation.
inline double laplace_identity_residual(const BernsteinFamily& fam, double lam, double y) {
  if (!(lam > 0.0)) throw ParameterError("laplace_identity_residual: lambda must be positive");
  fam.require_param(y);
  double lhs = eval_f(fam, lam, y) / lam;
  double tail_transform =
      laplace_integral([&](double s) { return fam.levy_tail(s, y); }, lam) +
      fam.kill(y) / lam;
  double rhs = fam.drift(y) + tail_transform;
  double residual = std::fabs(lhs - rhs);
  if (!std::isfinite(residual))
    throw NumericError("laplace_identity_residual: quadrature failure");
  return residual;
}

}  // namespace levymix
