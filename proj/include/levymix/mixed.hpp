#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "levymix/family.hpp"
#include "levymix/measure.hpp"

namespace levymix {

/// The pair (family, measure) with the mixed quantities E a(Y), E b(Y),
/// E f(lam,Y), E nu-bar(s,Y) as fixed weighted sums over the measure's
/// node set. Immutable after construction; cheap to copy around workers.
class MixedExponent {
 public:
  MixedExponent(BernsteinFamily family, MixingMeasure measure)
      : family_(std::move(family)), measure_(std::move(measure)) {
    for (const auto& n : measure_.nodes()) family_.require_param(n.y);
    mixed_kill_ = node_sum([&](double y) { return family_.kill(y); });
    mixed_drift_ = node_sum([&](double y) { return family_.drift(y); });
  }

  const BernsteinFamily& family() const { return family_; }
  const MixingMeasure& measure() const { return measure_; }
  const std::vector<MixingMeasure::Node>& nodes() const { return measure_.nodes(); }

  double mixed_kill() const { return mixed_kill_; }
  double mixed_drift() const { return mixed_drift_; }

  /// E f(lam, Y), summed over nodes in their fixed sorted order.
  double f(double lam) const {
    double s = node_sum([&](double y) { return eval_f(family_, lam, y); });
    if (!std::isfinite(s)) throw AssumptionError("mixed_f: divergent node sum");
    return s;
  }

  std::complex<double> f_complex(std::complex<double> lam) const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& n : nodes()) s += n.w * eval_f_complex(family_, lam, n.y);
    return s;
  }

  /// E nu-bar(s, Y); nonincreasing in s.
  double tail(double s) const {
    double v = node_sum([&](double y) { return eval_tail(family_, s, y); });
    if (!std::isfinite(v)) throw AssumptionError("mixed_tail: divergent node sum");
    return v;
  }

  /// int_0^s E nu-bar(w, Y) dw, exact per node when the family carries a
  /// tail primitive, otherwise graded quadrature.
  double tail_primitive(double s) const {
    if (family_.tail_primitive)
      return mixed_kill_ * s +
             node_sum([&](double y) { return family_.tail_primitive(s, y); });
    return mixed_kill_ * s +
           integrate_de([&](double w) { return node_sum([&](double y) {
                          return family_.levy_tail(w, y);
                        }); },
                        0.0, s);
  }

  /// int_0^s w * E nu-bar(w, Y) dw.
  double tail_moment1(double s) const {
    if (family_.tail_moment1)
      return mixed_kill_ * s * s / 2.0 +
             node_sum([&](double y) { return family_.tail_moment1(s, y); });
    return mixed_kill_ * s * s / 2.0 +
           integrate_de([&](double w) { return w * node_sum([&](double y) {
                          return family_.levy_tail(w, y);
                        }); },
                        0.0, s);
  }

  /// E nu((eps,inf), Y): the total jump intensity above a truncation level.
  double jump_rate_above(double eps) const {
    return node_sum([&](double y) { return family_.levy_tail(eps, y); });
  }

  /// True when some node has infinite activity (then E nu((0,inf),Y) = inf).
  bool infinite_activity() const {
    for (const auto& n : nodes())
      if (std::isinf(family_.total_mass(n.y))) return true;
    return false;
  }

  template <typename Fn>
  double node_sum(Fn&& per_y) const {
    double s = 0.0;
    for (const auto& n : nodes()) s += n.w * per_y(n.y);
    return s;
  }

 private:
  BernsteinFamily family_;
  MixingMeasure measure_;
  double mixed_kill_ = 0.0;
  double mixed_drift_ = 0.0;
};

// Spec-facing spellings.
inline double mixed_f(const MixedExponent& m, double lam) { return m.f(lam); }
inline double mixed_tail(const MixedExponent& m, double s) { return m.tail(s); }

// ---------------------------------------------------------------------------
// Assumption checking (A1: E a, E b finite; A2: E V finite)
// ---------------------------------------------------------------------------

struct AssumptionReport {
  bool a1_pass = false;
  bool a2_pass = false;
  double mean_kill = 0.0;
  double mean_drift = 0.0;
  double mean_V = 0.0;
  std::string notes;

  bool pass() const { return a1_pass && a2_pass; }
};

namespace detail {

/// Integrates g(y)*density(y) over a continuous part with geometric panels
/// refining toward both endpoints. Detects divergence either by the partial
/// sums passing `threshold` while still growing, or by non-decaying panel
/// contributions at the refinement floor (then the geometric extrapolation
/// exceeds any threshold). Needed because endpoint blow-ups like
/// (1-y)^{-3/2} cannot push a double-precision partial sum to 1e12 before
/// y is indistinguishable from the endpoint.
template <typename G>
double part_integral_with_probe(const MixingMeasure::Part& part, G&& g,
                                double threshold = 1e12) {
  auto integrand = [&](double y) { return g(y) * part.density(y); };
  double len = part.hi - part.lo;
  double core = integrate_panel(integrand, part.lo + 0.25 * len, part.hi - 0.25 * len, 32);
  double sum = core;
  for (int side = 0; side < 2; ++side) {
    double width = 0.25 * len;
    double prev = std::numeric_limits<double>::infinity();
    int nondecaying = 0;
    for (int k = 0; k < 48; ++k) {
      double w_hi = width, w_lo = width * 0.5;
      double a = side == 0 ? part.lo + w_lo : part.hi - w_hi;
      double b = side == 0 ? part.lo + w_hi : part.hi - w_lo;
      if (b - a < 1e-16 * len) break;
      double c = integrate_panel(integrand, a, b, 16);
      sum += c;
      if (sum > threshold && c >= prev)
        return std::numeric_limits<double>::infinity();
      nondecaying = (c >= prev * 0.999) ? nondecaying + 1 : 0;
      if (nondecaying >= 6) return std::numeric_limits<double>::infinity();
      if (std::fabs(c) < 1e-15 * (std::fabs(sum) + 1e-300)) break;
      prev = c;
      width = w_lo;
    }
  }
  return sum;
}

}  // namespace detail

/// A1/A2 report: node sums for E a, E b, E V, supplemented by an
/// endpoint-refinement divergence probe on each continuous part.
/// Failures are reported, never thrown.
inline AssumptionReport check_assumptions(const BernsteinFamily& family,
                                          const MixingMeasure& measure) {
  AssumptionReport rep;
  std::ostringstream notes;
  double ea = 0.0, eb = 0.0, ev = 0.0;
  for (const auto& n : measure.nodes()) {
    ea += n.w * family.kill(n.y);
    eb += n.w * family.drift(n.y);
    ev += n.w * eval_V(family, n.y);
  }
  for (const auto& part : measure.parts()) {
    double probe_a =
        detail::part_integral_with_probe(part, [&](double y) { return family.kill(y); });
    double probe_b =
        detail::part_integral_with_probe(part, [&](double y) { return family.drift(y); });
    double probe_v =
        detail::part_integral_with_probe(part, [&](double y) { return eval_V(family, y); });
    if (std::isinf(probe_a)) ea = probe_a;
    if (std::isinf(probe_b)) eb = probe_b;
    if (std::isinf(probe_v)) {
      ev = probe_v;
      notes << "E V diverges on part '" << part.label << "'; ";
    }
  }
  rep.mean_kill = ea;
  rep.mean_drift = eb;
  rep.mean_V = ev;
  rep.a1_pass = std::isfinite(ea) && std::isfinite(eb);
  rep.a2_pass = std::isfinite(ev);
  rep.notes = notes.str();
  return rep;
}

inline AssumptionReport check_assumptions(const MixedExponent& mixed) {
  return check_assumptions(mixed.family(), mixed.measure());
}

}  // namespace levymix
