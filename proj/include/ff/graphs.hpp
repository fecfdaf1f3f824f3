#ifndef FF_GRAPHS_HPP
#define FF_GRAPHS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ff/words.hpp"

namespace ff {

struct Edge {
  int src = 0;
  int dst = 0;
  int label = 1;  // 1..rank

  auto operator<=>(const Edge&) const = default;
};

/// Directed graph with edges labeled by generators; the combinatorial model of
/// a graph immersed over the rose R_n. Vertex ids are dense 0..num_vertices-1.
struct LabeledGraph {
  int rank = 0;
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::optional<int> basepoint;

  int num_edges() const { return static_cast<int>(edges.size()); }
  // rank of pi_1 for a connected graph
  int cycle_rank() const { return num_edges() - num_vertices + 1; }
  int valence(int v) const;
  bool is_connected() const;
  bool is_folded() const;
  bool is_core() const;  // every vertex has valence >= 2
  void check_valid() const;

  // Letters at v: x_i for an outgoing i-edge, x_i^-1 for an incoming one.
  LetterSet letters_at(int v) const;

  auto operator<=>(const LabeledGraph&) const = default;
};

struct FoldStep {
  int vertex = 0;  // vertex where the two edges met, pre-fold ids
  int label = 1;
  bool outgoing = true;
  bool rank_preserving = true;
};

struct FoldTrace {
  std::vector<FoldStep> steps;
  std::vector<int> vertex_map;  // original vertex -> final vertex
};

struct SubgroupPresentation {
  int rank = 0;
  std::vector<Word> generators;

  void check_valid() const;  // nonempty, nontrivial reduced generators
};

// Bouquet of subdivided loops at a basepoint, reading the generators.
LabeledGraph graph_from_words(const SubgroupPresentation& gens);

// Deterministic maximal folding; trace records each identification.
std::pair<LabeledGraph, FoldTrace> fold(const LabeledGraph& g);

// Folding with a caller-chosen order among available fold sites (used to test
// confluence). chooser(k) must return a value in [0, k).
std::pair<LabeledGraph, FoldTrace> fold_with_chooser(
    const LabeledGraph& g, const std::function<std::size_t(std::size_t)>& chooser);

// Iteratively delete valence-1 vertices. Errors out on trees.
LabeledGraph core(const LabeledGraph& g);
// Same, but the basepoint is protected; result is core plus the basepoint arc.
LabeledGraph pointed_core(const LabeledGraph& g);

// pointed_core(fold(graph_from_words(gens))): the pointed core graph of <gens>.
LabeledGraph subgroup_core(const SubgroupPresentation& gens);
// Unpointed core of the same subgroup (conjugacy-class invariant).
LabeledGraph subgroup_core_unpointed(const SubgroupPresentation& gens);

// Fiber product over the rose; may be disconnected, isolated vertices trimmed.
LabeledGraph pullback(const LabeledGraph& g1, const LabeledGraph& g2);
// Some connected component carries a nontrivial cycle.
bool has_nontrivial_cycle(const LabeledGraph& g);

// All label/orientation-preserving graph maps small -> big, as vertex maps.
// Both inputs folded; maps are forced by the image of vertex 0.
std::vector<std::vector<int>> find_label_morphisms(const LabeledGraph& small,
                                                   const LabeledGraph& big);

// Label-preserving isomorphism of connected folded graphs.
bool graphs_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2);

// Canonical signature: equal iff graphs are label-isomorphic (connected,
// folded inputs). Also usable as a hash key for visited sets.
std::string canonical_signature(const LabeledGraph& g);
// The same graph renumbered into its canonical vertex order, basepoint dropped.
LabeledGraph canonicalize(const LabeledGraph& g);

// Free generators read off a spanning tree from the basepoint.
std::vector<Word> spanning_basis(const LabeledGraph& g);

// All connected subgraphs (as edge subsets) that are core with nontrivial
// pi_1. Graph must be small; guarded at 24 edges.
std::vector<LabeledGraph> core_subgraphs(const LabeledGraph& g);

std::string graph_to_dot(const LabeledGraph& g);

}  // namespace ff

#endif
