#ifndef FF_WHITEHEAD_AUT_HPP
#define FF_WHITEHEAD_AUT_HPP

#include <string>
#include <utility>
#include <vector>

#include "ff/words.hpp"

namespace ff {

/// Whitehead automorphism (A, a): a is fixed, every other generator x_j is
/// multiplied by a on the left when x_j is in A and by a^-1 on the right when
/// x_j^-1 is in A. The acting letter is never a member of A.
struct WhiteheadAutomorphism {
  int rank = 0;
  Letter acting;
  LetterSet acted_on;

  WhiteheadAutomorphism() = default;
  WhiteheadAutomorphism(int rank_, Letter acting_, LetterSet acted_on_);

  bool is_identity() const { return acted_on.empty(); }
  // Image of a single letter, as a reduced word of length 1..3.
  std::vector<Letter> image(Letter l) const;

  auto operator<=>(const WhiteheadAutomorphism&) const = default;
};

/// Unreduced letter-by-letter image of a word; letters contributed by the
/// acting letter carry inserted = true.
struct MarkedString {
  int rank = 0;
  std::vector<std::pair<Letter, bool>> symbols;
};

// Blockwise substitution b_j -> phi(b_j), no reduction performed.
MarkedString apply_whitehead_to_word(const WhiteheadAutomorphism& phi, const CyclicWord& w);

// Linear variant of the above (no wrap-around block).
MarkedString apply_whitehead_to_linear_word(const WhiteheadAutomorphism& phi, const Word& w);

// Cyclic free reduction of a marked string. When a cancellation could consume
// either of two equal-valued adjacent occurrences, the inserted one goes.
// Returns the reduced cyclic word and the number of surviving inserted letters.
std::pair<CyclicWord, int> marked_cyclic_reduce(const MarkedString& s);

// Same tie-breaking, linear (non-cyclic) reduction.
std::pair<Word, int> marked_free_reduce(const MarkedString& s);

// True iff every inserted letter cancels in the cyclic reduction.
bool is_fine_on_word(const WhiteheadAutomorphism& phi, const CyclicWord& w);

// True iff every inserted letter cancels in the free (linear) reduction.
bool is_fine_on_linear_word(const WhiteheadAutomorphism& phi, const Word& w);

/// A general automorphism recorded by its images of the basis.
struct Automorphism {
  int rank = 0;
  std::vector<Word> images;  // images[i] = image of x_{i+1}

  static Automorphism identity(int rank);
  Word apply(const Word& w) const;
  Automorphism then(const WhiteheadAutomorphism& phi) const;  // phi after this
  Automorphism then(const Automorphism& phi) const;

  auto operator<=>(const Automorphism&) const = default;
};

Automorphism as_automorphism(const WhiteheadAutomorphism& phi);

// Composition phi_l o ... o phi_1 of the given sequence (applied left to right).
Automorphism compose(const std::vector<WhiteheadAutomorphism>& sequence, int rank);

// (A, a)^-1 = (A, a^-1).
WhiteheadAutomorphism invert_whitehead(const WhiteheadAutomorphism& phi);

// (A, a) = conjugation-by-a composed with (A^c \ {a, a^-1}, a^-1).
std::pair<Letter, WhiteheadAutomorphism> conjugation_identity(const WhiteheadAutomorphism& phi);

// All Whitehead automorphisms of the given rank with nonempty A, in a fixed
// canonical order (acting letter by code, then A by subset order).
std::vector<WhiteheadAutomorphism> all_whitehead_automorphisms(int rank);

// Text form `({y,Z,t,T},x)`: braces list A, final symbol is the acting letter.
std::string automorphism_to_string(const WhiteheadAutomorphism& phi);
WhiteheadAutomorphism parse_automorphism(const std::string& text, int rank);

}  // namespace ff

#endif
