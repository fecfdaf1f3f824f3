#ifndef FF_FACTOR_COMPLEX_HPP
#define FF_FACTOR_COMPLEX_HPP

#include <optional>
#include <vector>

#include "ff/algorithms.hpp"
#include "ff/graphs.hpp"
#include "ff/whitehead_aut.hpp"

namespace ff {

/// A conjugacy class of free factors, represented by the canonical form of its
/// unpointed core graph. Equal classes have equal representations.
struct FactorClass {
  int rank = 0;
  LabeledGraph core_graph;  // canonical, connected, folded, core
  int factor_rank = 0;

  auto operator<=>(const FactorClass&) const = default;
};

// Builds the class of <gens>; throws when the subgroup is not a free factor.
FactorClass class_of(const SubgroupPresentation& gens);

// Same from an already-built connected core graph (basepoint ignored).
FactorClass class_of_graph(const LabeledGraph& g);

// Generator words of a representative subgroup (spanning-tree basis).
std::vector<Word> class_generators(const FactorClass& c);

// Visited-state budget for the pair searches; FREEFACTOR_STATE_CAP overrides.
std::size_t default_state_cap();

// Class equality.
bool distance_zero(const FactorClass& c1, const FactorClass& c2);

// A label-preserving graph map exists in one direction or the other.
bool distance_one(const FactorClass& c1, const FactorClass& c2);

struct DistanceTwoResult {
  bool within = false;
  bool via_intersection = false;  // decided by a pullback cycle
  std::vector<WhiteheadAutomorphism> reduction;  // shrink chain, shrink branch
  std::optional<FactorClass> middle;
};

// Common middle vertex: nontrivial intersection (pullback cycle) or a common
// proper free factor (greedy shrinking of the disjoint union of cores until a
// label is omitted). Requires rank >= 3; callers exclude distances 0 and 1.
DistanceTwoResult distance_two(const FactorClass& c1, const FactorClass& c2);

enum class SearchVerdict { Found, NotFound, ResourceLimited };

/// Outcome of the implicit pair-of-graphs search. On Found, path holds the
/// automorphisms in application order and terminal_a/terminal_b the final
/// label-omitting pair.
struct PairSearchResult {
  SearchVerdict verdict = SearchVerdict::NotFound;
  long states_explored = 0;
  std::vector<WhiteheadAutomorphism> path;
  LabeledGraph terminal_a;
  LabeledGraph terminal_b;
  bool roles_swapped = false;  // the search that succeeded started from
                               // (core c2, subgraph of core c1)
};

// Distance <= 3 given that 0-2 are excluded: search over pairs (A, B) where
// A follows the full image and B may drop to a core subgraph at each step,
// looking for a pair that omits some label. Both role assignments are tried.
PairSearchResult distance_three(const FactorClass& c1, const FactorClass& c2,
                                std::size_t state_cap = default_state_cap());

enum class FourVerdict { Yes, No, Inapplicable, ResourceLimited };

struct DistanceFourResult {
  FourVerdict verdict = FourVerdict::Inapplicable;
  long states_explored = 0;
  std::vector<WhiteheadAutomorphism> path;
  LabeledGraph terminal_a;
  LabeledGraph terminal_b;
};

// Distance <= 4 given that 0-3 are excluded. The first condition (a middle
// factor over two sub-factors) is decided by the search with subgraph drops on
// both coordinates. The second condition is decided only when some endpoint
// has rank n-1 (it then reduces to the already-excluded distance-3 pattern);
// otherwise the verdict is Inapplicable when condition one fails.
DistanceFourResult distance_four_partial(const FactorClass& c1, const FactorClass& c2,
                                         std::size_t state_cap = default_state_cap());

struct DistanceResult {
  std::optional<int> value;         // set when the distance was decided
  std::optional<int> greater_than;  // set when only a lower bound is known
  bool inapplicable = false;        // the undecidable distance-4 gap
  bool resource_limited = false;
  std::vector<FactorClass> witnesses;  // path of classes, endpoints included
  long states_explored = 0;
};

// The ladder 0,1,2,3,(4) with witness chains. Requires rank >= 3.
DistanceResult distance(const FactorClass& c1, const FactorClass& c2,
                        std::size_t state_cap = default_state_cap());

}  // namespace ff

#endif
