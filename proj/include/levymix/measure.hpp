#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "levymix/errors.hpp"
#include "levymix/quadrature.hpp"

namespace levymix {

/// A probability measure p on W: point atoms plus continuous parts, the
/// latter discretized once at construction into Gauss-Legendre nodes
/// (affine-mapped to the support, endpoints clipped by a relative 1e-6
/// so infinite-activity families never see a closed endpoint).
class MixingMeasure {
 public:
  struct Atom {
    double y;
    double w;
  };
  struct Part {
    std::function<double(double)> density;  // with respect to Lebesgue on (lo,hi)
    double lo;
    double hi;
    int node_count;
    std::string label;
  };
  struct Node {
    double y;
    double w;
  };

  MixingMeasure(std::vector<Atom> atoms, std::vector<Part> parts)
      : atoms_(std::move(atoms)), parts_(std::move(parts)) {
    build_nodes();
    validate();
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Part>& parts() const { return parts_; }

  /// Atoms and quadrature nodes combined, sorted by y (summation order is
  /// part of the contract: mixed quantities are fixed weighted sums).
  const std::vector<Node>& nodes() const { return nodes_; }

  double total_mass() const {
    double m = 0.0;
    for (const auto& n : nodes_) m += n.w;
    return m;
  }

 private:
  void build_nodes() {
    for (const auto& a : atoms_) {
      if (!(a.w > 0.0)) throw ConfigError("mixing measure: atom weights must be positive");
      nodes_.push_back({a.y, a.w});
    }
    for (const auto& part : parts_) {
      if (!(part.hi > part.lo)) throw ConfigError("mixing measure: empty support interval");
      if (part.node_count < 1) throw ConfigError("mixing measure: node count must be >= 1");
      const GaussLegendre& rule = GaussLegendre::get(part.node_count);
      // Nodes are clamped a relative 1e-6 away from the endpoints (weights
      // untouched), so families with endpoint singularities in y never see
      // a closed endpoint. A no-op for moderate node counts.
      double clip = 1e-6 * (part.hi - part.lo);
      double mid = 0.5 * (part.lo + part.hi), half = 0.5 * (part.hi - part.lo);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double y = mid + half * rule.nodes[i];
        y = std::min(std::max(y, part.lo + clip), part.hi - clip);
        double w = rule.weights[i] * half * part.density(y);
        if (w < 0.0) throw ConfigError("mixing measure: negative density");
        nodes_.push_back({y, w});
      }
    }
    std::sort(nodes_.begin(), nodes_.end(), [](const Node& a, const Node& b) {
      return a.y < b.y || (a.y == b.y && a.w < b.w);
    });
    if (nodes_.empty()) throw ConfigError("mixing measure: no atoms or parts");
  }

  void validate() const {
    // The probability-mass invariant is checked against the declared parts
    // (accurate quadrature of each density), not the derived node weights:
    // node sums of a singular density legitimately carry discretization
    // error, but the declared measure itself must be a probability.
    // Atom weights are exact data, checked at 1e-10. Densities are checked
    // to quadrature accuracy: a singular density near an endpoint b != 0
    // is resolvable only to ~eps*|b| in doubles (~1e-8 of mass).
    double m = 0.0, err = 0.0;
    for (const auto& a : atoms_) m += a.w;
    for (const auto& p : parts_) {
      double e = 0.0;
      m += integrate_de(p.density, p.lo, p.hi, 1e-12, 12, &e);
      err += e + 1e-7;
    }
    if (std::fabs(m - 1.0) > 1e-10 + 10.0 * err)
      throw ConfigError("mixing measure: mass " + std::to_string(m) +
                        " is not 1 (atoms plus continuous parts must be a probability)");
  }

  std::vector<Atom> atoms_;
  std::vector<Part> parts_;
  std::vector<Node> nodes_;
};

namespace measures {

inline MixingMeasure dirac(double y) { return MixingMeasure({{y, 1.0}}, {}); }

inline MixingMeasure atoms(std::vector<MixingMeasure::Atom> pts) {
  return MixingMeasure(std::move(pts), {});
}

inline MixingMeasure uniform(double lo, double hi, int nodes = 64) {
  double inv_len = 1.0 / (hi - lo);
  return MixingMeasure(
      {}, {{[inv_len](double) { return inv_len; }, lo, hi, nodes, "uniform"}});
}

/// Pareto p(dy) = beta gamma^beta y^{-beta-1} dy on [gamma, inf).
/// Substituted u = (gamma/y)^beta, uniform on (0,1): nodes y = gamma u^{-1/beta}
/// carry plain Gauss-Legendre weights, so the semi-infinite support needs no
/// truncation.
inline MixingMeasure pareto(double gamma, double beta, int nodes = 64) {
  if (!(gamma > 0.0) || !(beta > 0.0)) throw ConfigError("pareto measure: gamma, beta > 0");
  const GaussLegendre& rule = GaussLegendre::get(nodes);
  std::vector<MixingMeasure::Atom> pts;
  pts.reserve(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double u = 0.5 + 0.5 * rule.nodes[i];
    double w = 0.5 * rule.weights[i];
    pts.push_back({gamma * std::pow(u, -1.0 / beta), w});
  }
  return MixingMeasure(std::move(pts), {});
}

inline MixingMeasure tabulated(std::vector<MixingMeasure::Atom> nodes) {
  return MixingMeasure(std::move(nodes), {});
}

}  // namespace measures
}  // namespace levymix
