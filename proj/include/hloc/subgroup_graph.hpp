#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hloc/word.hpp"

namespace hloc {

// Order in which pending vertices are folded. The folded core graph does
// not depend on it; the choice exists so that this can be tested.
enum class FoldSchedule { Breadth, Depth };

struct GraphEdge {
  std::size_t from;
  std::size_t to;
  GeneratorIndex label;
  friend bool operator==(GraphEdge const&, GraphEdge const&) = default;
  friend auto operator<=>(GraphEdge const&, GraphEdge const&) = default;
};

// Folded core graph of a finitely generated subgroup H of a free group.
// Vertex 0 is the basepoint and vertices are numbered in breadth-first
// order from it (neighbours visited by label, outgoing before incoming),
// so isomorphic based graphs have identical edge lists.
//
// Each edge also carries a word over new letters y1..ym, one per
// generating word. Along any closed path at the basepoint the product of
// these words, with y_i replaced by the i-th generating word, reduces to
// the word read off the path. express() returns that product.
class SubgroupGraph {
 public:
  static SubgroupGraph build(std::span<Word const> generators,
                             FoldSchedule schedule = FoldSchedule::Breadth);

  std::size_t basepoint() const noexcept { return 0; }
  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  // Sorted by (from, label, to).
  std::vector<GraphEdge> const& edges() const noexcept { return edges_; }
  std::vector<Word> const& generating_words() const noexcept {
    return generators_;
  }
  // Rank of H as a free group (edges - vertices + 1).
  std::size_t rank() const noexcept {
    return edges_.size() + 1 - out_.size();
  }

  bool contains(Word const& w) const;
  std::optional<Word> express(Word const& w) const;

  // One `v1 v2 label` line per edge.
  std::string dump() const;

  bool is_folded() const;

 private:
  SubgroupGraph() = default;

  std::vector<Word> generators_;
  std::vector<GraphEdge> edges_;
  std::vector<Word> edge_witness_;
  std::vector<std::map<GeneratorIndex, std::size_t>> out_;
  std::vector<std::map<GeneratorIndex, std::size_t>> in_;
};

inline SubgroupGraph build_graph(std::span<Word const> generators) {
  return SubgroupGraph::build(generators);
}
inline bool contains(SubgroupGraph const& g, Word const& w) {
  return g.contains(w);
}
inline std::optional<Word> express(SubgroupGraph const& g, Word const& w) {
  return g.express(w);
}

// Replaces y_i by the i-th generating word and reduces.
Word expand(Word const& witness, std::span<Word const> generators);

}  // namespace hloc
