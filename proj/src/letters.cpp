#include "ff/letters.hpp"

#include <cctype>

namespace ff {

namespace {
// Conventional names for the first four generators of small-rank groups.
constexpr const char* kSmallRankNames = "xyzt";
}  // namespace

std::string letter_to_string(Letter l, int rank) {
  if (rank <= 4 && l.gen <= 4) {
    char base = kSmallRankNames[l.gen - 1];
    if (l.inv) base = static_cast<char>(std::toupper(static_cast<unsigned char>(base)));
    return std::string(1, base);
  }
  if (rank <= 26 && l.gen <= 26) {
    char base = l.inv ? 'A' : 'a';
    return std::string(1, static_cast<char>(base + l.gen - 1));
  }
  std::string s = "x" + std::to_string(l.gen);
  if (l.inv) s += "^-1";
  return s;
}

Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return Letter{c - 'a' + 1, false};
  if (c >= 'A' && c <= 'Z') return Letter{c - 'A' + 1, true};
  throw std::invalid_argument(std::string("invalid letter character '") + c + "'");
}

Letter letter_from_char(char c, int rank) {
  Letter l = letter_from_char(c);
  if (!valid_for_rank(l, rank)) {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (int i = 0; i < 4; ++i) {
      if (kSmallRankNames[i] == lower) {
        Letter alias{i + 1, l.inv};
        if (valid_for_rank(alias, rank)) return alias;
        break;
      }
    }
  }
  check_letter(l, rank);
  return l;
}

LetterSet all_letters(int rank) {
  LetterSet out;
  for (int g = 1; g <= rank; ++g) {
    out.insert(Letter{g, false});
    out.insert(Letter{g, true});
  }
  return out;
}

}  // namespace ff
