#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace levytree {

using VertexId = std::size_t;

/// Parent value marking the root.
inline constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

/// Finite rooted tree with positive edge lengths and nonnegative vertex masses.
///
/// Edge interiors carry no mass. Every vertex other than the root owns the
/// edge joining it to its parent. Derived quantities (heights, subtree masses,
/// subtree maximal heights, the highest vertex) are computed once by `build`
/// and the object is immutable afterwards, so it can be shared read-only
/// between threads.
class WeightedTree {
 public:
  /// Validates the arrays and computes all caches in O(n).
  ///
  /// `parents[v]` is `kNoParent` for exactly one vertex. The root's entry in
  /// `edge_lens` is ignored and stored as zero.
  /// Throws StructuralError for cycles, several roots or out-of-range
  /// parents and ValidationError for bad edge lengths or masses.
  static WeightedTree build(std::vector<VertexId> parents,
                            std::vector<double> edge_lens,
                            std::vector<double> masses);

  std::size_t size() const noexcept { return parent_.size(); }
  VertexId root() const noexcept { return root_; }
  bool is_root(VertexId v) const noexcept { return v == root_; }

  VertexId parent(VertexId v) const { return parent_.at(v); }
  double edge_length(VertexId v) const { return edge_len_.at(v); }
  double mass(VertexId v) const { return mass_.at(v); }
  double height(VertexId v) const { return height_.at(v); }
  double subtree_mass(VertexId v) const { return subtree_mass_.at(v); }
  /// M(v): largest height among descendants of v, v included.
  double subtree_max_height(VertexId v) const { return subtree_max_height_.at(v); }
  /// Number of descendants of v, v included.
  std::size_t subtree_size(VertexId v) const { return subtree_size_.at(v); }

  double total_mass() const noexcept { return total_mass_; }
  double total_height() const noexcept { return total_height_; }
  /// Lowest-index vertex attaining the total height.
  VertexId argmax_vertex() const noexcept { return argmax_; }

  std::span<const VertexId> children(VertexId v) const;
  /// Vertices in depth-first preorder, children visited by increasing index.
  std::span<const VertexId> preorder() const noexcept { return order_; }

  /// Vertices on the path from the root to x, root first, x last.
  std::vector<VertexId> ancestral_line(VertexId x) const;
  /// Most recent common ancestor.
  VertexId common_ancestor(VertexId x, VertexId y) const;

  std::span<const VertexId> parents() const noexcept { return parent_; }
  std::span<const double> edge_lengths() const noexcept { return edge_len_; }
  std::span<const double> masses() const noexcept { return mass_; }
  std::span<const double> heights() const noexcept { return height_; }

 private:
  WeightedTree() = default;

  std::vector<VertexId> parent_;
  std::vector<double> edge_len_;
  std::vector<double> mass_;

  std::vector<double> height_;
  std::vector<double> subtree_mass_;
  std::vector<double> subtree_max_height_;
  std::vector<std::size_t> subtree_size_;
  std::vector<std::size_t> child_offset_;
  std::vector<VertexId> child_list_;
  std::vector<VertexId> order_;

  VertexId root_ = 0;
  double total_mass_ = 0.0;
  double total_height_ = 0.0;
  VertexId argmax_ = 0;
};

/// Mass and height of the subtree above level r containing x.
struct SubtreeSummary {
  double level = 0.0;
  double sigma = 0.0;
  double height = 0.0;
  VertexId top_vertex = 0;
};

/// Returns (sigma_{r,x}, H_{r,x}).
///
/// The subtree is identified with the first vertex of the ancestral line of x
/// whose height is at least r; a level equal to a vertex height selects that
/// vertex. Throws DomainError unless 0 <= r <= H(x).
SubtreeSummary subtree_at_level(const WeightedTree& tree, VertexId x, double r);

/// One edge u -> v of the ancestral line of x. On (lower, upper] the subtree
/// mass is constant and the subtree height is `max_height - r`.
struct SpineSegment {
  double lower = 0.0;
  double upper = 0.0;
  double sigma = 0.0;
  double max_height = 0.0;
};

/// Everything hanging off one spine vertex outside the spine, glued at a
/// zero-mass copy of that vertex.
struct GraftedSubtree {
  VertexId spine_vertex = 0;
  double graft_height = 0.0;
  double sigma = 0.0;
  double subtree_height = 0.0;
  std::size_t vertex_count = 0;  // excluding the root copy
};

struct SpineView {
  VertexId vertex = 0;
  std::vector<VertexId> spine;          // root ... vertex
  std::vector<SpineSegment> segments;   // increasing heights
  std::vector<GraftedSubtree> grafts;   // increasing graft heights
  std::vector<WeightedTree> subtrees;   // parallel to grafts; empty if not extracted
};

/// Branch-point decomposition of the path from the root to x.
///
/// Grafts are collected per spine vertex: all children of a spine vertex that
/// are not on the spine form a single grafted tree, rooted at a massless copy
/// of the spine vertex. With `extract_subtrees` the grafted trees are copied
/// out as independent WeightedTree values.
SpineView spine_view(const WeightedTree& tree, VertexId x, bool extract_subtrees = true);

/// Multiplies distances by a and masses by a^{gamma/(gamma-1)}.
WeightedTree rescale(const WeightedTree& tree, double a, double gamma);

/// Rescales to unit total mass: rescale(tree, sigma^{-1+1/gamma}, gamma).
WeightedTree normalize(const WeightedTree& tree, double gamma);

/// Upper bound 2|a-1| H + |b-1| sigma on the GHP distance between the tree and
/// the tree with distances multiplied by a and masses by b.
double ghp_scaling_certificate(const WeightedTree& tree, double a, double b);

/// Checks gamma in (1, 2], throwing DomainError otherwise.
void require_stability_index(double gamma);

}  // namespace levytree
