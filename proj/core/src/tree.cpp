#include "levytree/tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levytree/error.hpp"

namespace levytree {

void require_stability_index(double gamma) {
  if (!(gamma > 1.0 && gamma <= 2.0)) {
    throw DomainError("stability index gamma must lie in (1, 2], got " + std::to_string(gamma));
  }
}

WeightedTree WeightedTree::build(std::vector<VertexId> parents, std::vector<double> edge_lens,
                                 std::vector<double> masses) {
  const std::size_t n = parents.size();
  if (n == 0) throw StructuralError("tree must have at least one vertex");
  if (edge_lens.size() != n || masses.size() != n) {
    throw StructuralError("parents, edge_lens and masses must have equal length");
  }

  WeightedTree t;
  std::size_t roots = 0;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId p = parents[v];
    if (p == kNoParent) {
      ++roots;
      t.root_ = v;
      continue;
    }
    if (p >= n) throw StructuralError("parent index out of range at vertex " + std::to_string(v));
    if (p == v) throw StructuralError("vertex " + std::to_string(v) + " is its own parent");
    if (!(edge_lens[v] > 0.0) || !std::isfinite(edge_lens[v])) {
      throw ValidationError("edge length must be positive and finite at vertex " + std::to_string(v));
    }
  }
  if (roots != 1) throw StructuralError("expected exactly one root, found " + std::to_string(roots));
  for (VertexId v = 0; v < n; ++v) {
    if (!(masses[v] >= 0.0) || !std::isfinite(masses[v])) {
      throw ValidationError("vertex mass must be nonnegative and finite at vertex " + std::to_string(v));
    }
  }
  edge_lens[t.root_] = 0.0;

  // Children in CSR layout, each list sorted by index.
  t.child_offset_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (parents[v] != kNoParent) ++t.child_offset_[parents[v] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) t.child_offset_[i + 1] += t.child_offset_[i];
  t.child_list_.resize(n - 1);
  {
    std::vector<std::size_t> cursor(t.child_offset_.begin(), t.child_offset_.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
      if (parents[v] != kNoParent) t.child_list_[cursor[parents[v]]++] = v;
    }
  }

  t.order_.reserve(n);
  std::vector<VertexId> stack{t.root_};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    t.order_.push_back(v);
    for (std::size_t i = t.child_offset_[v + 1]; i > t.child_offset_[v]; --i) {
      stack.push_back(t.child_list_[i - 1]);
    }
  }
  if (t.order_.size() != n) {
    throw StructuralError("parent structure contains a cycle or unreachable vertices");
  }

  t.parent_ = std::move(parents);
  t.edge_len_ = std::move(edge_lens);
  t.mass_ = std::move(masses);

  t.height_.assign(n, 0.0);
  for (const VertexId v : t.order_) {
    if (v != t.root_) t.height_[v] = t.height_[t.parent_[v]] + t.edge_len_[v];
  }

  t.subtree_mass_ = t.mass_;
  t.subtree_max_height_ = t.height_;
  t.subtree_size_.assign(n, 1);
  for (auto it = t.order_.rbegin(); it != t.order_.rend(); ++it) {
    const VertexId v = *it;
    if (v == t.root_) continue;
    const VertexId p = t.parent_[v];
    t.subtree_mass_[p] += t.subtree_mass_[v];
    t.subtree_max_height_[p] = std::max(t.subtree_max_height_[p], t.subtree_max_height_[v]);
    t.subtree_size_[p] += t.subtree_size_[v];
  }

  t.total_mass_ = t.subtree_mass_[t.root_];
  t.total_height_ = t.subtree_max_height_[t.root_];
  t.argmax_ = static_cast<VertexId>(
      std::find(t.height_.begin(), t.height_.end(), t.total_height_) - t.height_.begin());
  return t;
}

std::span<const VertexId> WeightedTree::children(VertexId v) const {
  if (v >= size()) throw StructuralError("vertex index out of range");
  return std::span<const VertexId>(child_list_).subspan(child_offset_[v],
                                                        child_offset_[v + 1] - child_offset_[v]);
}

std::vector<VertexId> WeightedTree::ancestral_line(VertexId x) const {
  if (x >= size()) throw StructuralError("vertex index out of range");
  std::vector<VertexId> line;
  for (VertexId v = x; v != kNoParent; v = parent_[v]) line.push_back(v);
  std::reverse(line.begin(), line.end());
  return line;
}

VertexId WeightedTree::common_ancestor(VertexId x, VertexId y) const {
  if (x >= size() || y >= size()) throw StructuralError("vertex index out of range");
  // Heights strictly increase away from the root, so climbing the higher of
  // the two always stays on track.
  while (x != y) {
    if (height_[x] > height_[y]) {
      x = parent_[x];
    } else if (height_[y] > height_[x]) {
      y = parent_[y];
    } else {
      x = parent_[x];
      y = parent_[y];
    }
  }
  return x;
}

SubtreeSummary subtree_at_level(const WeightedTree& tree, VertexId x, double r) {
  if (x >= tree.size()) throw StructuralError("vertex index out of range");
  if (!(r >= 0.0 && r <= tree.height(x))) {
    throw DomainError("level must lie in [0, H(x)]");
  }
  const std::vector<VertexId> line = tree.ancestral_line(x);
  const auto it = std::partition_point(line.begin(), line.end(),
                                       [&](VertexId v) { return tree.height(v) < r; });
  const VertexId top = *it;
  return SubtreeSummary{r, tree.subtree_mass(top), tree.subtree_max_height(top) - r, top};
}

namespace {

// Copies the subtrees of `roots` (all children of `anchor`) below a massless
// copy of `anchor`.
WeightedTree extract_graft(const WeightedTree& tree, std::span<const VertexId> roots,
                           std::size_t vertex_count) {
  std::vector<VertexId> parents;
  std::vector<double> lens;
  std::vector<double> masses;
  parents.reserve(vertex_count + 1);
  lens.reserve(vertex_count + 1);
  masses.reserve(vertex_count + 1);
  parents.push_back(kNoParent);
  lens.push_back(0.0);
  masses.push_back(0.0);

  // (source vertex, index of its copied parent)
  std::vector<std::pair<VertexId, VertexId>> stack;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) stack.emplace_back(*it, 0);
  while (!stack.empty()) {
    const auto [v, copied_parent] = stack.back();
    stack.pop_back();
    const VertexId id = parents.size();
    parents.push_back(copied_parent);
    lens.push_back(tree.edge_length(v));
    masses.push_back(tree.mass(v));
    const auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, id);
  }
  return WeightedTree::build(std::move(parents), std::move(lens), std::move(masses));
}

}  // namespace

SpineView spine_view(const WeightedTree& tree, VertexId x, bool extract_subtrees) {
  SpineView view;
  view.vertex = x;
  view.spine = tree.ancestral_line(x);
  const auto& spine = view.spine;

  view.segments.reserve(spine.size() - 1);
  for (std::size_t j = 1; j < spine.size(); ++j) {
    const VertexId u = spine[j - 1];
    const VertexId v = spine[j];
    view.segments.push_back(
        SpineSegment{tree.height(u), tree.height(v), tree.subtree_mass(v), tree.subtree_max_height(v)});
  }

  std::vector<VertexId> off_spine;
  for (std::size_t j = 0; j < spine.size(); ++j) {
    const VertexId v = spine[j];
    const VertexId next = j + 1 < spine.size() ? spine[j + 1] : kNoParent;
    off_spine.clear();
    GraftedSubtree graft;
    graft.spine_vertex = v;
    graft.graft_height = tree.height(v);
    double top = tree.height(v);
    for (const VertexId c : tree.children(v)) {
      if (c == next) continue;
      off_spine.push_back(c);
      graft.sigma += tree.subtree_mass(c);
      graft.vertex_count += tree.subtree_size(c);
      top = std::max(top, tree.subtree_max_height(c));
    }
    if (off_spine.empty()) continue;
    graft.subtree_height = top - tree.height(v);
    if (extract_subtrees) view.subtrees.push_back(extract_graft(tree, off_spine, graft.vertex_count));
    view.grafts.push_back(graft);
  }
  return view;
}

WeightedTree rescale(const WeightedTree& tree, double a, double gamma) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("rescale factor must be positive");
  require_stability_index(gamma);
  const double mass_factor = std::pow(a, gamma / (gamma - 1.0));
  std::vector<VertexId> parents(tree.parents().begin(), tree.parents().end());
  std::vector<double> lens(tree.edge_lengths().begin(), tree.edge_lengths().end());
  std::vector<double> masses(tree.masses().begin(), tree.masses().end());
  for (double& l : lens) l *= a;
  for (double& m : masses) m *= mass_factor;
  lens[tree.root()] = 0.0;
  return WeightedTree::build(std::move(parents), std::move(lens), std::move(masses));
}

WeightedTree normalize(const WeightedTree& tree, double gamma) {
  require_stability_index(gamma);
  const double sigma = tree.total_mass();
  if (!(sigma > 0.0)) throw DegenerateInputError("cannot normalize a tree with zero total mass");
  return rescale(tree, std::pow(sigma, -1.0 + 1.0 / gamma), gamma);
}

double ghp_scaling_certificate(const WeightedTree& tree, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("dilation factors must be positive");
  return 2.0 * std::abs(a - 1.0) * tree.total_height() + std::abs(b - 1.0) * tree.total_mass();
}

}  // namespace levytree
