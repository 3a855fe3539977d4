#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cgt/word.hpp"

namespace cgt {

struct EnumerationCaps {
  unsigned max_rank = 4;
  unsigned max_index = 7;
};

/// Folded, based, edge-labeled graph representing a finitely generated
/// subgroup of a free group (a Stallings automaton).
///
/// Vertices are 0..V-1 with base vertex 0. For each vertex v and label
/// l in 1..n there is at most one outgoing and at most one incoming
/// l-edge. Instances produced by from_generators() are folded, core
/// (every non-base vertex has degree >= 2) and standardized: vertices
/// are renumbered in breadth-first order from the base, so two graphs
/// are based-isomorphic exactly when they compare equal.
class SubgroupGraph {
public:
  /// Folds the bouquet of the given words into the core subgroup graph.
  static SubgroupGraph from_generators(unsigned rank, const std::vector<Word>& generators);

  unsigned ambient_rank() const { return rank_; }
  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const;

  /// -1 when the transition is undefined; label is 1-based.
  int out(std::size_t vertex, unsigned label) const;
  int in(std::size_t vertex, unsigned label) const;

  /// All edges as (source, label, target), source/label ascending.
  std::vector<std::tuple<std::size_t, unsigned, std::size_t>> edges() const;

  /// [F_n : H] when the graph is a complete covering of the bouquet,
  /// nullopt (infinite) otherwise.
  std::optional<std::uint64_t> index() const;

  /// First Betti number E - V + 1; equals the free rank of the subgroup.
  std::size_t rank() const;

  /// Path membership: true iff the path spelled by the word from the base
  /// is fully defined and closes at the base.
  bool contains(const Word& word) const;

  /// One word per non-tree edge of a breadth-first spanning tree
  /// (tree path in, edge, tree path back). A free basis of the subgroup.
  std::vector<Word> cycle_basis_words() const;

  /// cycle_basis_words() restricted to the finite-index case: exactly
  /// (n-1)m + 1 words for index m. Throws UnsupportedError on infinite index.
  std::vector<Word> schreier_generators() const;

  std::string to_text() const;
  std::string to_dot() const;

  friend bool operator==(const SubgroupGraph&, const SubgroupGraph&) = default;

private:
  SubgroupGraph(unsigned rank, std::vector<std::vector<int>> out, std::vector<std::vector<int>> in);
  void standardize();
  friend std::vector<SubgroupGraph> enumerate_subgroups(unsigned, unsigned, const EnumerationCaps&);

  unsigned rank_ = 0;
  std::vector<std::vector<int>> out_; // out_[v][l-1]
  std::vector<std::vector<int>> in_;  // in_[v][l-1]
};

/// Every index-m subgroup of F_n exactly once, as standardized core graphs,
/// via n-tuples of permutations of m points with transitive joint action.
/// Throws ResourceError when n or m exceeds the caps.
std::vector<SubgroupGraph> enumerate_subgroups(unsigned rank, unsigned index,
                                               const EnumerationCaps& caps = {});

} // namespace cgt
