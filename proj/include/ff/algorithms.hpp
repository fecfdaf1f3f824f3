#ifndef FF_ALGORITHMS_HPP
#define FF_ALGORITHMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ff/graphs.hpp"
#include "ff/whitehead_aut.hpp"
#include "ff/whitehead_graph.hpp"
#include "ff/words.hpp"

namespace ff {

/// Replayable record of a greedy reduction: the automorphisms applied, in
/// order, and the object reached (a word for primitivity runs, a graph for
/// free-factor runs). Each step strictly decreases the relevant measure.
struct Certificate {
  std::vector<WhiteheadAutomorphism> steps;
  std::variant<CyclicWord, LabeledGraph> terminal;
};

std::string certificate_to_string(const Certificate& cert);

// Single reduction step on a cyclic word: cut vertex of the Whitehead graph
// -> automorphism -> cyclically reduced image. Absent iff no cut vertex.
// When present, the image is strictly shorter and the action is fine.
std::optional<std::pair<WhiteheadAutomorphism, CyclicWord>> whitehead_step(const CyclicWord& w);

struct PrimitivityResult {
  bool primitive = false;
  Certificate certificate;  // steps so far; terminal is the length-1 word on
                            // success, the stuck word on failure
};

// Greedy loop of whitehead_step on the cyclic reduction of w. Primitive iff
// a single letter is reached; not primitive iff some stage of length >= 2 has
// no cut vertex.
PrimitivityResult is_primitive(const Word& w);

struct FreeFactorResult {
  bool free_factor = false;
  Certificate certificate;  // terminal is the final core graph either way
};

// Greedy loop on the unpointed core graph: one-vertex graphs are roses on
// distinct letters (free factors); otherwise reduce via a cut vertex of the
// graph's Whitehead graph or report failure when none exists.
FreeFactorResult is_free_factor(const SubgroupPresentation& gens);

// Reduction step for H = <x_1,...,x_k> * <w>, k >= 1: the returned phi fixes
// x_1..x_k, strictly shortens w (free reduction), and acts finely on it.
// Throws std::runtime_error when no cut vertex exists (hypothesis violation).
WhiteheadAutomorphism relative_whitehead_step(const Word& w, int k);

// Same for H = <x_1,...,x_k> * <extra generators>: shrinks the pointed core
// of H while fixing x_1..x_k; the basepoint ends in case I.
WhiteheadAutomorphism relative_whitehead_step_subgroup(const SubgroupPresentation& extra,
                                                       int k);

// The test word z(k) = (x1x1)(x2x2)...(xk xk) prod_{i<j} x1 (xi xj)(xi Xj),
// factors in lexicographic order, freely reduced. Its Whitehead graph joins
// every pair of distinct vertices among x_1..x_k, X_1..X_k.
Word build_z_word(int k);

enum class WitnessOutcome { IsFreeFactor, WitnessFound, InconclusiveAtBound };

struct WitnessResult {
  WitnessOutcome outcome = WitnessOutcome::InconclusiveAtBound;
  std::optional<Word> witness;       // in the ambient basis
  std::optional<Word> witness_in_h;  // the same element over the basis of H
  int search_bound = 0;
};

// Searches H for an element primitive in H but not in the ambient group.
// Candidates are the orbit of the basis letters of H under Whitehead
// automorphisms of rank(H), breadth-first, capped at H-length max_len.
WitnessResult find_nonprimitive_witness(const SubgroupPresentation& gens, int max_len = 12);

}  // namespace ff

#endif
