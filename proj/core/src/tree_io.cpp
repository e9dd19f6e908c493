#include "levytree/tree_io.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"
#include "levytree/error.hpp"

namespace levytree {

using nlohmann::json;

std::string tree_to_json(const WeightedTree& tree) {
  json parents = json::array();
  for (const VertexId p : tree.parents()) {
    if (p == kNoParent) {
      parents.push_back(nullptr);
    } else {
      parents.push_back(p);
    }
  }
  json obj;
  obj["parents"] = std::move(parents);
  obj["edge_lens"] = std::vector<double>(tree.edge_lengths().begin(), tree.edge_lengths().end());
  obj["masses"] = std::vector<double>(tree.masses().begin(), tree.masses().end());
  return obj.dump();
}

WeightedTree tree_from_json(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed tree record: ") + e.what());
  }
  if (!obj.is_object() || !obj.contains("parents") || !obj.contains("edge_lens") ||
      !obj.contains("masses")) {
    throw ValidationError("tree record needs parents, edge_lens and masses");
  }
  try {
    std::vector<VertexId> parents;
    parents.reserve(obj["parents"].size());
    for (const auto& p : obj["parents"]) {
      if (p.is_null()) {
        parents.push_back(kNoParent);
      } else if (p.is_number_unsigned()) {
        parents.push_back(p.get<VertexId>());
      } else {
        throw ValidationError("parent entries must be null or nonnegative integers");
      }
    }
    auto lens = obj["edge_lens"].get<std::vector<double>>();
    auto masses = obj["masses"].get<std::vector<double>>();
    return WeightedTree::build(std::move(parents), std::move(lens), std::move(masses));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed tree record: ") + e.what());
  }
}

void write_tree_corpus(std::ostream& out, std::span<const WeightedTree> trees) {
  for (const auto& t : trees) out << tree_to_json(t) << '\n';
}

std::vector<WeightedTree> read_tree_corpus(std::istream& in) {
  std::vector<WeightedTree> trees;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    trees.push_back(tree_from_json(line));
  }
  return trees;
}

}  // namespace levytree
