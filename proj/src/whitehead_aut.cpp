#include "ff/whitehead_aut.hpp"

#include <algorithm>
#include <cctype>

namespace ff {

WhiteheadAutomorphism::WhiteheadAutomorphism(int rank_, Letter acting_, LetterSet acted_on_)
    : rank(rank_), acting(acting_), acted_on(std::move(acted_on_)) {
  check_letter(acting, rank);
  for (Letter l : acted_on) check_letter(l, rank);
  if (acted_on.count(acting) || acted_on.count(acting.inverse()))
    throw std::invalid_argument("acting letter (or its inverse) must not lie in A");
}

std::vector<Letter> WhiteheadAutomorphism::image(Letter l) const {
  if (l == acting || l == acting.inverse()) return {l};
  std::vector<Letter> out;
  if (acted_on.count(l)) out.push_back(acting);
  out.push_back(l);
  if (acted_on.count(l.inverse())) out.push_back(acting.inverse());
  return out;
}

static void append_block(const WhiteheadAutomorphism& phi, Letter b,
                         std::vector<std::pair<Letter, bool>>& out) {
  if (b == phi.acting || b == phi.acting.inverse()) {
    out.emplace_back(b, false);
    return;
  }
  if (phi.acted_on.count(b)) out.emplace_back(phi.acting, true);
  out.emplace_back(b, false);
  if (phi.acted_on.count(b.inverse())) out.emplace_back(phi.acting.inverse(), true);
}

MarkedString apply_whitehead_to_word(const WhiteheadAutomorphism& phi, const CyclicWord& w) {
  if (phi.rank != w.rank) throw std::invalid_argument("rank mismatch");
  MarkedString s{w.rank, {}};
  for (Letter b : w.letters) append_block(phi, b, s.symbols);
  return s;
}

MarkedString apply_whitehead_to_linear_word(const WhiteheadAutomorphism& phi, const Word& w) {
  if (phi.rank != w.rank) throw std::invalid_argument("rank mismatch");
  MarkedString s{w.rank, {}};
  for (Letter b : w.letters) append_block(phi, b, s.symbols);
  return s;
}

namespace {

using Sym = std::pair<Letter, bool>;

// In the maximal constant-value run containing pos, pick an inserted
// occurrence if one exists (nearest to pos, left bias); otherwise pos itself.
std::size_t pick_victim(const std::vector<Sym>& s, std::size_t pos, bool cyclic) {
  const std::size_t n = s.size();
  const Letter v = s[pos].first;
  if (s[pos].second) return pos;
  bool left_alive = true, right_alive = true;
  for (std::size_t d = 1; d < n && (left_alive || right_alive); ++d) {
    if (left_alive) {
      if (!cyclic && pos < d) {
        left_alive = false;
      } else {
        std::size_t i = (pos + n * d - d) % n;
        if (i == pos || s[i].first != v)
          left_alive = false;
        else if (s[i].second)
          return i;
      }
    }
    if (right_alive) {
      if (!cyclic && pos + d >= n) {
        right_alive = false;
      } else {
        std::size_t i = (pos + d) % n;
        if (i == pos || s[i].first != v)
          right_alive = false;
        else if (s[i].second)
          return i;
      }
    }
  }
  return pos;
}

// One full reduction with the inserted-first tie-break; returns survivors.
std::pair<std::vector<Letter>, int> reduce_marked(std::vector<Sym> s, bool cyclic) {
  bool changed = true;
  while (changed && s.size() >= 2) {
    changed = false;
    const std::size_t n = s.size();
    const std::size_t pairs = cyclic ? n : n - 1;
    for (std::size_t i = 0; i < pairs; ++i) {
      std::size_t j = (i + 1) % n;
      if (s[i].first != s[j].first.inverse()) continue;
      std::size_t vi = pick_victim(s, i, cyclic);
      std::size_t vj = pick_victim(s, j, cyclic);
      if (vi == vj) vi = i;  // runs are disjoint in value; guard anyway
      if (vi > vj) std::swap(vi, vj);
      s.erase(s.begin() + vj);
      s.erase(s.begin() + vi);
      changed = true;
      break;
    }
  }
  // A cyclic pass can leave a single cancelling end pair of a length-2 string;
  // the loop above already covers it via the wrap-around pair.
  std::vector<Letter> letters;
  int survivors = 0;
  for (const Sym& sym : s) {
    letters.push_back(sym.first);
    if (sym.second) ++survivors;
  }
  return {letters, survivors};
}

}  // namespace

std::pair<CyclicWord, int> marked_cyclic_reduce(const MarkedString& s) {
  auto [letters, survivors] = reduce_marked(s.symbols, /*cyclic=*/true);
  return {CyclicWord{s.rank, canonical_rotation(letters)}, survivors};
}

std::pair<Word, int> marked_free_reduce(const MarkedString& s) {
  auto [letters, survivors] = reduce_marked(s.symbols, /*cyclic=*/false);
  return {Word{s.rank, std::move(letters)}, survivors};
}

bool is_fine_on_word(const WhiteheadAutomorphism& phi, const CyclicWord& w) {
  return marked_cyclic_reduce(apply_whitehead_to_word(phi, w)).second == 0;
}

bool is_fine_on_linear_word(const WhiteheadAutomorphism& phi, const Word& w) {
  return marked_free_reduce(apply_whitehead_to_linear_word(phi, w)).second == 0;
}

Automorphism Automorphism::identity(int rank) {
  Automorphism id{rank, {}};
  for (int g = 1; g <= rank; ++g) id.images.push_back(Word{rank, {Letter{g, false}}});
  return id;
}

Word Automorphism::apply(const Word& w) const {
  std::vector<Letter> raw;
  for (Letter l : w.letters) {
    const Word& img = images.at(static_cast<std::size_t>(l.gen - 1));
    if (!l.inv) {
      raw.insert(raw.end(), img.letters.begin(), img.letters.end());
    } else {
      Word inv = img.inverse();
      raw.insert(raw.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  return free_reduce(raw, rank);
}

Automorphism Automorphism::then(const WhiteheadAutomorphism& phi) const {
  Automorphism out{rank, {}};
  for (const Word& img : images) {
    std::vector<Letter> raw;
    for (Letter l : img.letters) {
      auto piece = phi.image(l);
      raw.insert(raw.end(), piece.begin(), piece.end());
    }
    out.images.push_back(free_reduce(raw, rank));
  }
  return out;
}

Automorphism Automorphism::then(const Automorphism& phi) const {
  Automorphism out{rank, {}};
  for (const Word& img : images) out.images.push_back(phi.apply(img));
  return out;
}

Automorphism as_automorphism(const WhiteheadAutomorphism& phi) {
  return Automorphism::identity(phi.rank).then(phi);
}

Automorphism compose(const std::vector<WhiteheadAutomorphism>& sequence, int rank) {
  Automorphism acc = Automorphism::identity(rank);
  for (const auto& phi : sequence) {
    if (phi.rank != rank) throw std::invalid_argument("rank mismatch in composition");
    acc = acc.then(phi);
  }
  return acc;
}

WhiteheadAutomorphism invert_whitehead(const WhiteheadAutomorphism& phi) {
  return WhiteheadAutomorphism(phi.rank, phi.acting.inverse(), phi.acted_on);
}

std::pair<Letter, WhiteheadAutomorphism> conjugation_identity(const WhiteheadAutomorphism& phi) {
  LetterSet comp;
  for (Letter l : all_letters(phi.rank)) {
    if (l == phi.acting || l == phi.acting.inverse()) continue;
    if (!phi.acted_on.count(l)) comp.insert(l);
  }
  return {phi.acting, WhiteheadAutomorphism(phi.rank, phi.acting.inverse(), comp)};
}

std::vector<WhiteheadAutomorphism> all_whitehead_automorphisms(int rank) {
  std::vector<WhiteheadAutomorphism> out;
  const int m = 2 * rank - 2;
  for (int code = 0; code < 2 * rank; ++code) {
    Letter a = Letter::from_code(code);
    std::vector<Letter> rest;
    for (Letter l : all_letters(rank))
      if (l != a && l != a.inverse()) rest.push_back(l);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      LetterSet A;
      for (int b = 0; b < m; ++b)
        if (mask & (1u << b)) A.insert(rest[static_cast<std::size_t>(b)]);
      out.emplace_back(rank, a, std::move(A));
    }
  }
  return out;
}

std::string automorphism_to_string(const WhiteheadAutomorphism& phi) {
  std::string out = "({";
  bool first = true;
  for (Letter l : phi.acted_on) {
    if (!first) out += ',';
    first = false;
    out += letter_to_string(l, phi.rank);
  }
  out += "},";
  out += letter_to_string(phi.acting, phi.rank);
  out += ')';
  return out;
}

WhiteheadAutomorphism parse_automorphism(const std::string& text, int rank) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 6 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("automorphism must look like ({y,Z},x)");
  std::size_t open = s.find('{'), close = s.find('}');
  if (open != 1 || close == std::string::npos || close + 2 >= s.size() ||
      s[close + 1] != ',')
    throw std::invalid_argument("automorphism must look like ({y,Z},x)");
  LetterSet A;
  for (std::size_t i = open + 1; i < close; ++i) {
    if (s[i] == ',') continue;
    A.insert(letter_from_char(s[i], rank));
  }
  std::string act = s.substr(close + 2, s.size() - close - 3);
  if (act.size() != 1) throw std::invalid_argument("acting letter must be a single symbol");
  Letter a = letter_from_char(act[0], rank);
  return WhiteheadAutomorphism(rank, a, std::move(A));
}

}  // namespace ff
