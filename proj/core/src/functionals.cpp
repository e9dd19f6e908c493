#include "levytree/functionals.hpp"

#include <cmath>

#include "levytree/error.hpp"

namespace levytree {

namespace {

// (a^p - b^p) / p for a >= b >= 0, p >= 1, without cancellation for large p.
double power_difference(double a, double b, double p) {
  if (p == 1.0) return a - b;
  if (!(a > 0.0)) return 0.0;
  if (!(b > 0.0)) return std::pow(a, p) / p;
  return std::pow(a, p) * -std::expm1(p * std::log(b / a)) / p;
}

// Contribution of the edge u -> v, divided by unit^beta. Heights are measured
// in multiples of `unit` so that large beta stays in range.
double edge_term(const WeightedTree& t, VertexId v, double alpha, double p, double unit) {
  const VertexId u = t.parent(v);
  const double top = t.subtree_max_height(v);
  const double a = (top - t.height(u)) / unit;
  const double b = (top - t.height(v)) / unit;
  return std::pow(t.subtree_mass(v), alpha) * unit * power_difference(a, b, p);
}

double z_leaf_in_units(const WeightedTree& t, VertexId x, const FunctionalParams& params, double unit) {
  if (x >= t.size()) throw StructuralError("vertex index out of range");
  const double p = params.beta + 1.0;
  double z = 0.0;
  for (VertexId v = x; !t.is_root(v); v = t.parent(v)) z += edge_term(t, v, params.alpha, p, unit);
  return z;
}

double z_total_in_units(const WeightedTree& t, const FunctionalParams& params, double unit) {
  const double p = params.beta + 1.0;
  double z = 0.0;
  for (VertexId v = 0; v < t.size(); ++v) {
    if (t.is_root(v)) continue;
    z += t.subtree_mass(v) * edge_term(t, v, params.alpha, p, unit);
  }
  return z;
}

}  // namespace

void validate(const FunctionalParams& params) {
  require_stability_index(params.gamma);
  if (!(params.alpha >= 0.0) || !std::isfinite(params.alpha)) throw DomainError("alpha must be >= 0");
  if (!(params.beta >= 0.0) || !std::isfinite(params.beta)) throw DomainError("beta must be >= 0");
  if (!(params.c >= 0.0)) throw DomainError("c must be >= 0");
}

double z_leaf(const WeightedTree& tree, VertexId x, const FunctionalParams& params) {
  validate(params);
  return z_leaf_in_units(tree, x, params, 1.0);
}

double z_total(const WeightedTree& tree, const FunctionalParams& params) {
  validate(params);
  return z_total_in_units(tree, params, 1.0);
}

double subcritical_factor(const FunctionalParams& params) {
  return params.alpha == 0.0 ? 1.0 : std::pow(params.alpha, 1.0 - 1.0 / params.gamma);
}

FunctionalResult normalized_values(const WeightedTree& tree, const FunctionalParams& params,
                                   VertexId designated_vertex) {
  validate(params);
  const double h = tree.total_height();
  if (params.beta > 0.0 && !(h > 0.0)) {
    throw DegenerateInputError("height normalization needs a tree of positive height");
  }
  FunctionalResult r;
  r.vertex = designated_vertex;
  r.height = h;
  r.z_total = z_total_in_units(tree, params, 1.0);
  r.z_leaf = z_leaf_in_units(tree, designated_vertex, params, 1.0);
  const double scaled = h > 0.0 ? z_total_in_units(tree, params, h) : r.z_total;
  r.normalized_subcritical = subcritical_factor(params) * scaled;
  r.normalized_supercritical = params.beta * scaled;
  return r;
}

}  // namespace levytree
