#ifndef FF_WORDS_HPP
#define FF_WORDS_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ff/letters.hpp"

namespace ff {

/// A freely reduced word in F_rank. Construct through free_reduce or parse_word.
struct Word {
  int rank = 0;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool trivial() const { return letters.empty(); }
  Word inverse() const;

  auto operator<=>(const Word&) const = default;
};

/// A cyclically reduced word stored in its canonical (lexicographically least)
/// rotation. Equality is equality of conjugacy classes of cyclic words.
struct CyclicWord {
  int rank = 0;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  Word as_word() const { return Word{rank, letters}; }

  auto operator<=>(const CyclicWord&) const = default;
};

// Unique freely reduced form of a raw letter sequence. Idempotent.
Word free_reduce(const std::vector<Letter>& raw, int rank);

// w = conjugator * cyclic * conjugator^-1; cyclic is cyclically reduced.
std::pair<CyclicWord, Word> cyclic_reduce(const Word& w);

// Concatenate-and-reduce.
Word concat(const Word& a, const Word& b);

// Canonical least rotation of an already cyclically reduced letter sequence.
std::vector<Letter> canonical_rotation(const std::vector<Letter>& letters);

CyclicWord make_cyclic(const Word& already_cyclically_reduced);

// Text I/O. Compact `aBc` (uppercase = inverse) for rank <= 26; the verbose
// form `x1 x2^-1 x3` is accepted on input whenever a digit is present.
Word parse_word(const std::string& text, int rank);
std::string word_to_string(const Word& w);
std::string word_to_string(const CyclicWord& w);

}  // namespace ff

#endif
