#ifndef FF_LETTERS_HPP
#define FF_LETTERS_HPP

#include <compare>
#include <set>
#include <stdexcept>
#include <string>

namespace ff {

/// A signed generator symbol: x_gen or its inverse. Generators are 1-based.
struct Letter {
  int gen = 1;
  bool inv = false;

  Letter inverse() const { return Letter{gen, !inv}; }

  // Dense code in [0, 2*rank): x_1=0, X_1=1, x_2=2, ...
  int code() const { return 2 * (gen - 1) + (inv ? 1 : 0); }
  static Letter from_code(int c) { return Letter{c / 2 + 1, c % 2 == 1}; }

  auto operator<=>(const Letter&) const = default;
};

using LetterSet = std::set<Letter>;

inline bool valid_for_rank(Letter l, int rank) {
  return l.gen >= 1 && l.gen <= rank;
}

inline void check_letter(Letter l, int rank) {
  if (!valid_for_rank(l, rank))
    throw std::invalid_argument("letter index " + std::to_string(l.gen) +
                                " out of range for rank " + std::to_string(rank));
}

// Compact syntax: a..z are x_1..x_26, uppercase is the inverse. Printing and
// the rank-aware parse additionally use the conventional names x,y,z,t for the
// generators of groups of rank at most 4.
std::string letter_to_string(Letter l, int rank);
Letter letter_from_char(char c);
Letter letter_from_char(char c, int rank);

// All 2*rank letters in code order.
LetterSet all_letters(int rank);

}  // namespace ff

#endif
