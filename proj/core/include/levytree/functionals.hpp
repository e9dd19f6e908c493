#pragma once

#include "levytree/tree.hpp"

namespace levytree {

struct FunctionalParams {
  double alpha = 0.0;  // mass exponent
  double beta = 0.0;   // height exponent
  double gamma = 2.0;  // stability index
  double c = 0.0;      // limit of beta / alpha^{1 - 1/gamma}
};

/// Throws DomainError unless alpha, beta, c >= 0 and gamma in (1, 2].
void validate(const FunctionalParams& params);

struct FunctionalResult {
  double z_total = 0.0;
  double z_leaf = 0.0;
  VertexId vertex = 0;
  double height = 0.0;  // total height of the tree
  /// alpha^{1-1/gamma} H^{-beta} z_total; the alpha factor is 1 at alpha = 0.
  double normalized_subcritical = 0.0;
  /// beta H^{-beta} z_total.
  double normalized_supercritical = 0.0;
};

/// Z_{alpha,beta}(x) = int_0^{H(x)} sigma_{r,x}^alpha H_{r,x}^beta dr,
/// integrated exactly edge by edge along the ancestral line of x.
double z_leaf(const WeightedTree& tree, VertexId x, const FunctionalParams& params);

/// Z_{alpha,beta} = sum_x m(x) Z_{alpha,beta}(x), in one pass over the edges:
///   sum_v sigma_v^{alpha+1} [(M_v - H_u)^{beta+1} - (M_v - H_v)^{beta+1}] / (beta+1)
/// with u the parent of v.
double z_total(const WeightedTree& tree, const FunctionalParams& params);

/// Throws DegenerateInputError if beta > 0 and the tree has height 0.
FunctionalResult normalized_values(const WeightedTree& tree, const FunctionalParams& params,
                                   VertexId designated_vertex);

/// Factor applied by the subcritical normalization: alpha^{1-1/gamma}, or 1 at alpha = 0.
double subcritical_factor(const FunctionalParams& params);

}  // namespace levytree
