#ifndef FF_WHITEHEAD_GRAPH_HPP
#define FF_WHITEHEAD_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ff/graphs.hpp"
#include "ff/whitehead_aut.hpp"
#include "ff/words.hpp"

namespace ff {

/// Multigraph on the 2n letter-vertices recording the turns of a cyclic word
/// or of a core graph. Arcs are unordered, stored with multiplicity.
struct WhiteheadGraph {
  int rank = 0;
  std::map<std::pair<Letter, Letter>, int> arcs;  // key has first <= second

  void add_arc(Letter a, Letter b);
  int arc_count(Letter a, Letter b) const;
  int total_arcs() const;
  bool is_isolated(Letter v) const;
  // Connected component of v (vertices joined to it by arcs, including v).
  LetterSet component_of(Letter v) const;
  // Components of the component of v after deleting v itself.
  std::vector<LetterSet> components_without(Letter v) const;

  auto operator<=>(const WhiteheadGraph&) const = default;
};

enum class CutVertexKind { MissingInverseComponent, Articulation };

struct CutVertexWitness {
  Letter vertex;
  CutVertexKind kind = CutVertexKind::MissingInverseComponent;
  LetterSet component_a;  // the chosen set A
};

// One arc per cyclically-adjacent pair (first^-1, second), wrap-around included.
WhiteheadGraph whitehead_graph_of_word(const CyclicWord& w);

// Union over vertices of complete graphs on the letter sets L(v).
WhiteheadGraph whitehead_graph_of_graph(const LabeledGraph& g);

// Deterministic cut-vertex search. Scan order: letters by code; the
// missing-inverse kind wins over articulation; among articulation splits the
// smallest component avoiding the inverse is chosen, ties by least letter.
std::optional<CutVertexWitness> find_cut_vertex(const WhiteheadGraph& wg);

WhiteheadAutomorphism automorphism_from_witness(const CutVertexWitness& wit, int rank);

/// Outcome of subdivision: the rewritten graph plus which vertices are old.
struct SubdivisionResult {
  LabeledGraph graph;
  int num_old_vertices = 0;  // vertices [0, num_old_vertices) are the originals
};

// Per-edge rewrite realizing phi before refolding. An inverse acting letter
// inserts the mirrored edge (label of its generator, opposite orientation).
SubdivisionResult subdivide(const WhiteheadAutomorphism& phi, const LabeledGraph& g);

// core(fold(subdivide(phi, coreH))).
LabeledGraph apply_whitehead_to_subgroup(const WhiteheadAutomorphism& phi,
                                         const LabeledGraph& core_h);

// Pointed variant: pointed_core(fold(subdivide(phi, g))), basepoint tracked.
LabeledGraph apply_whitehead_to_pointed(const WhiteheadAutomorphism& phi,
                                        const LabeledGraph& g);

enum class VertexCase { I, II, III };

struct TrichotomyReport {
  std::vector<VertexCase> cases;  // per vertex of the input core graph
  int case_iii_count = 0;
};

// Classifies every vertex of core_h; absent when some vertex fits no case.
std::optional<TrichotomyReport> trichotomy(const WhiteheadAutomorphism& phi,
                                           const LabeledGraph& core_h);

// Contract the unique a-edge at every case-III vertex.
LabeledGraph collapse_quotient(const WhiteheadAutomorphism& phi, const LabeledGraph& core_h,
                               const TrichotomyReport& report);

std::string whitehead_graph_to_dot(const WhiteheadGraph& wg);

}  // namespace ff

#endif
