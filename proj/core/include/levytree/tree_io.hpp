#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levytree/tree.hpp"

namespace levytree {

/// One tree as a single-line JSON object
/// `{"parents":[null,0,...],"edge_lens":[0,1.5,...],"masses":[...]}`.
/// The root's parent is `null`; its edge length is written as 0.
std::string tree_to_json(const WeightedTree& tree);

/// Parses the object written by `tree_to_json`. Throws ValidationError for
/// malformed records and the usual build errors for invalid trees.
WeightedTree tree_from_json(std::string_view text);

/// JSON-lines corpus: one object per line.
void write_tree_corpus(std::ostream& out, std::span<const WeightedTree> trees);
std::vector<WeightedTree> read_tree_corpus(std::istream& in);

}  // namespace levytree
