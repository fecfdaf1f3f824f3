#ifndef FF_ORACLE_HPP
#define FF_ORACLE_HPP

#include <optional>
#include <vector>

#include "ff/factor_complex.hpp"
#include "ff/graphs.hpp"
#include "ff/whitehead_aut.hpp"
#include "ff/words.hpp"

namespace ff {

/// Ball of automorphisms: all compositions of at most `radius` Whitehead
/// automorphisms, deduplicated by their reduced basis images.
struct AutomorphismBall {
  int rank = 0;
  int radius = 0;
  std::vector<Automorphism> elements;  // identity included
};

// Brute-force enumeration; guarded at rank <= 3, radius <= 6.
AutomorphismBall enumerate_automorphisms(int rank, int radius);

enum class OracleVerdict { True, UnknownAtRadius };

// Semi-decision of primitivity by breadth-first orbit search on words: apply
// Whitehead automorphisms up to `radius` times, never letting the length grow
// past |w|. True iff a single letter is reached.
OracleVerdict oracle_is_primitive(const Word& w, int radius);

// gcd of the exponent sums of w; a primitive word always has gcd 1.
long abelianization_gcd(const Word& w);

// All connected folded core graphs with at most max_edges edges, one per
// isomorphism class, in canonical form.
std::vector<LabeledGraph> enumerate_core_graphs(int rank, int max_edges);

// Brute-force free-factor test: orbit search on core graphs (via generator
// words, rebuilt from scratch each step) looking for a distinct-label rose.
bool oracle_is_free_factor(const LabeledGraph& core_g);

// Naive distance: enumerate every factor class with at most complexity_bound
// core edges, connect pairs admitting a label-preserving morphism, and take
// the shortest path. Absent when no path exists within the bounded class set.
std::optional<int> oracle_distance(const FactorClass& c1, const FactorClass& c2,
                                   int complexity_bound);

}  // namespace ff

#endif
