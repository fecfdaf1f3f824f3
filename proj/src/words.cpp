#include "ff/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ff {

Word Word::inverse() const {
  Word out{rank, {}};
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return out;
}

Word free_reduce(const std::vector<Letter>& raw, int rank) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(l, rank);
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word{rank, std::move(stack)};
}

std::pair<CyclicWord, Word> cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word conj{w.rank, std::vector<Letter>(w.letters.begin(), w.letters.begin() + lo)};
  std::vector<Letter> core(w.letters.begin() + lo, w.letters.begin() + hi);
  CyclicWord cw{w.rank, canonical_rotation(core)};
  return {cw, conj};
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters;
  raw.insert(raw.end(), b.letters.begin(), b.letters.end());
  return free_reduce(raw, a.rank);
}

std::vector<Letter> canonical_rotation(const std::vector<Letter>& letters) {
  const std::size_t n = letters.size();
  if (n <= 1) return letters;
  std::vector<Letter> best = letters;
  std::vector<Letter> rot = letters;
  for (std::size_t i = 1; i < n; ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

CyclicWord make_cyclic(const Word& w) {
  if (w.letters.size() >= 2 && w.letters.front() == w.letters.back().inverse())
    throw std::invalid_argument("word is not cyclically reduced");
  return CyclicWord{w.rank, canonical_rotation(w.letters)};
}

static Word parse_verbose(const std::string& text, int rank) {
  std::vector<Letter> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 'x')
      throw std::invalid_argument("bad token '" + tok + "' in verbose word");
    std::size_t pos = 1;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == 1) throw std::invalid_argument("bad token '" + tok + "' in verbose word");
    int gen = std::stoi(tok.substr(1, pos - 1));
    bool inv = false;
    if (pos < tok.size()) {
      if (tok.substr(pos) != "^-1")
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
      inv = true;
    }
    raw.push_back(Letter{gen, inv});
  }
  return free_reduce(raw, rank);
}

Word parse_word(const std::string& text, int rank) {
  bool verbose = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (verbose) return parse_verbose(text, rank);
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    try {
      raw.push_back(letter_from_char(c, rank));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + " (at position " +
                                  std::to_string(i + 1) + ")");
    }
  }
  return free_reduce(raw, rank);
}

std::string word_to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  bool compact = w.rank <= 26;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += letter_to_string(w.letters[i], w.rank);
  }
  return out;
}

std::string word_to_string(const CyclicWord& w) { return word_to_string(w.as_word()); }

}  // namespace ff
