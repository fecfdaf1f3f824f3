#include "ff/algorithms.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ff {

std::string certificate_to_string(const Certificate& cert) {
  std::ostringstream out;
  for (const auto& phi : cert.steps) out << automorphism_to_string(phi) << '\n';
  if (std::holds_alternative<CyclicWord>(cert.terminal)) {
    out << "terminal " << word_to_string(std::get<CyclicWord>(cert.terminal)) << '\n';
  } else {
    const LabeledGraph& g = std::get<LabeledGraph>(cert.terminal);
    out << "terminal graph V=" << g.num_vertices << " E=" << g.num_edges();
    for (const Edge& e : g.edges)
      out << ' ' << e.src << '-' << e.label << '>' << e.dst;
    out << '\n';
  }
  return out.str();
}

std::optional<std::pair<WhiteheadAutomorphism, CyclicWord>> whitehead_step(const CyclicWord& w) {
  if (w.length() < 2) throw std::invalid_argument("whitehead_step needs cyclic length >= 2");
  auto wit = find_cut_vertex(whitehead_graph_of_word(w));
  if (!wit) return std::nullopt;
  WhiteheadAutomorphism phi = automorphism_from_witness(*wit, w.rank);
  CyclicWord image = marked_cyclic_reduce(apply_whitehead_to_word(phi, w)).first;
  if (image.length() >= w.length())
    throw std::logic_error("cut-vertex automorphism failed to shorten the word");
  return std::make_pair(std::move(phi), std::move(image));
}

PrimitivityResult is_primitive(const Word& w) {
  if (w.trivial()) throw std::invalid_argument("primitivity of the trivial word is undefined");
  PrimitivityResult res;
  CyclicWord cur = cyclic_reduce(w).first;
  if (cur.length() == 0)
    throw std::invalid_argument("primitivity of the trivial word is undefined");
  while (cur.length() >= 2) {
    auto step = whitehead_step(cur);
    if (!step) {
      res.primitive = false;
      res.certificate.terminal = cur;
      return res;
    }
    res.certificate.steps.push_back(step->first);
    cur = step->second;
  }
  res.primitive = true;
  res.certificate.terminal = cur;
  return res;
}

FreeFactorResult is_free_factor(const SubgroupPresentation& gens) {
  gens.check_valid();
  FreeFactorResult res;
  LabeledGraph g = subgroup_core_unpointed(gens);
  while (g.num_vertices > 1) {
    auto wit = find_cut_vertex(whitehead_graph_of_graph(g));
    if (!wit) {
      res.free_factor = false;
      res.certificate.terminal = g;
      return res;
    }
    WhiteheadAutomorphism phi = automorphism_from_witness(*wit, g.rank);
    if (!trichotomy(phi, g))
      throw std::logic_error("cut-vertex automorphism is not fine on the core graph");
    LabeledGraph next = apply_whitehead_to_subgroup(phi, g);
    if (next.num_edges() >= g.num_edges() || next.num_vertices >= g.num_vertices)
      throw std::logic_error("cut-vertex automorphism failed to shrink the core graph");
    res.certificate.steps.push_back(std::move(phi));
    g = std::move(next);
  }
  // A folded one-vertex graph is a rose on distinct letters.
  res.free_factor = true;
  res.certificate.terminal = g;
  return res;
}

namespace {

// Shared body of the relative steps: H = <x_1,...,x_k> joined with extra
// generators, reduced through the pointed core with the basepoint kept in
// case I via the conjugation identity.
WhiteheadAutomorphism relative_step_impl(const std::vector<Word>& extra, int k, int rank) {
  if (k < 1) throw std::invalid_argument("relative step needs k >= 1");
  if (k > rank) throw std::invalid_argument("k exceeds the ambient rank");
  SubgroupPresentation combined{rank, {}};
  for (int i = 1; i <= k; ++i)
    combined.generators.push_back(Word{rank, {Letter{i, false}}});
  for (const Word& w : extra) combined.generators.push_back(w);
  combined.check_valid();
  LabeledGraph g = subgroup_core(combined);
  if (g.num_vertices < 2)
    throw std::invalid_argument("relative step needs a core with at least two vertices");
  auto wit = find_cut_vertex(whitehead_graph_of_graph(g));
  if (!wit)
    throw std::runtime_error("no cut vertex: the subgroup does not satisfy the hypothesis");
  WhiteheadAutomorphism phi = automorphism_from_witness(*wit, rank);
  LetterSet base_link = g.letters_at(*g.basepoint);
  bool base_meets_a = std::any_of(base_link.begin(), base_link.end(),
                                  [&](Letter l) { return phi.acted_on.count(l) > 0; });
  if (base_meets_a) phi = conjugation_identity(phi).second;
  for (Letter l : base_link)
    if (phi.acted_on.count(l))
      throw std::logic_error("basepoint not in case I after conjugation swap");
  return phi;
}

}  // namespace

WhiteheadAutomorphism relative_whitehead_step(const Word& w, int k) {
  if (w.length() < 2)
    throw std::invalid_argument("relative step needs a word of length >= 2");
  return relative_step_impl({w}, k, w.rank);
}

WhiteheadAutomorphism relative_whitehead_step_subgroup(const SubgroupPresentation& extra,
                                                       int k) {
  extra.check_valid();
  return relative_step_impl(extra.generators, k, extra.rank);
}

Word build_z_word(int k) {
  if (k < 1) throw std::invalid_argument("build_z_word needs k >= 1");
  std::vector<Letter> raw;
  auto x = [](int i) { return Letter{i, false}; };
  for (int i = 1; i <= k; ++i) {
    raw.push_back(x(i));
    raw.push_back(x(i));
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      raw.push_back(x(1));
      raw.push_back(x(i));
      raw.push_back(x(j));
      raw.push_back(x(i));
      raw.push_back(x(j).inverse());
      // the turn x_i^-1 x_j supplies the arc between the two positive
      // letters, which the other blocks never produce
      raw.push_back(x(i).inverse());
      raw.push_back(x(j));
    }
  }
  return free_reduce(raw, k);
}

namespace {

// Orbit of the basis letters under Whitehead automorphisms, breadth-first,
// capped by word length. Contains every primitive word within the bound.
std::vector<Word> primitive_words_up_to(int rank, int max_len, std::size_t state_cap) {
  auto autos = all_whitehead_automorphisms(rank);
  std::set<Word> seen;
  std::queue<Word> frontier;
  for (Letter l : all_letters(rank)) {
    Word seed{rank, {l}};
    if (seen.insert(seed).second) frontier.push(seed);
  }
  while (!frontier.empty() && seen.size() < state_cap) {
    Word w = frontier.front();
    frontier.pop();
    for (const auto& phi : autos) {
      std::vector<Letter> raw;
      for (Letter l : w.letters) {
        auto piece = phi.image(l);
        raw.insert(raw.end(), piece.begin(), piece.end());
      }
      Word img = free_reduce(raw, rank);
      if (img.length() > static_cast<std::size_t>(max_len) || img.trivial()) continue;
      if (seen.insert(img).second) frontier.push(img);
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters < b.letters;
  });
  return out;
}

}  // namespace

WitnessResult find_nonprimitive_witness(const SubgroupPresentation& gens, int max_len) {
  gens.check_valid();
  WitnessResult res;
  res.search_bound = max_len;
  if (is_free_factor(gens).free_factor) {
    res.outcome = WitnessOutcome::IsFreeFactor;
    return res;
  }
  std::vector<Word> basis = spanning_basis(subgroup_core(gens));
  const int h_rank = static_cast<int>(basis.size());
  for (const Word& candidate : primitive_words_up_to(h_rank, max_len, 200000)) {
    std::vector<Letter> raw;
    for (Letter l : candidate.letters) {
      const Word& img = basis[static_cast<std::size_t>(l.gen - 1)];
      if (!l.inv) {
        raw.insert(raw.end(), img.letters.begin(), img.letters.end());
      } else {
        Word inv = img.inverse();
        raw.insert(raw.end(), inv.letters.begin(), inv.letters.end());
      }
    }
    Word ambient = free_reduce(raw, gens.rank);
    if (ambient.trivial()) continue;  // cannot happen for a genuine basis
    if (!is_primitive(ambient).primitive) {
      res.outcome = WitnessOutcome::WitnessFound;
      res.witness = std::move(ambient);
      res.witness_in_h = candidate;
      return res;
    }
  }
  res.outcome = WitnessOutcome::InconclusiveAtBound;
  return res;
}

}  // namespace ff
