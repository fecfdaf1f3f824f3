#include "ff/factor_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "ff/oracle.hpp"
#include "ff/whitehead_graph.hpp"

namespace ff {

namespace {

// Shared per-rank caches for the graph operations the searches repeat
// endlessly: canonical Whitehead images and canonical core subgraphs, both
// keyed by the canonical signature of the input graph.
struct GraphOpsCache {
  std::vector<WhiteheadAutomorphism> autos;
  std::map<std::string, LabeledGraph> images;              // sig '#' idx
  std::map<std::string, std::vector<LabeledGraph>> subs;   // sig
};

GraphOpsCache& graph_ops(int rank) {
  static std::map<int, GraphOpsCache> cache;
  auto it = cache.find(rank);
  if (it == cache.end()) {
    it = cache.emplace(rank, GraphOpsCache{}).first;
    it->second.autos = all_whitehead_automorphisms(rank);
  }
  return it->second;
}

// canonical image of a canonical graph under automorphism #i
const LabeledGraph& cached_image(int rank, const LabeledGraph& canon,
                                 const std::string& sig, std::size_t i) {
  GraphOpsCache& ops = graph_ops(rank);
  std::string key = sig + '#' + std::to_string(i);
  auto it = ops.images.find(key);
  if (it == ops.images.end())
    it = ops.images
             .emplace(key, canonicalize(apply_whitehead_to_subgroup(ops.autos[i], canon)))
             .first;
  return it->second;
}

// canonical connected core subgraphs (the graph itself included)
const std::vector<LabeledGraph>& cached_subgraphs(int rank, const LabeledGraph& canon,
                                                  const std::string& sig) {
  GraphOpsCache& ops = graph_ops(rank);
  auto it = ops.subs.find(sig);
  if (it == ops.subs.end()) {
    std::vector<LabeledGraph> subs;
    std::set<std::string> seen;
    for (const LabeledGraph& s : core_subgraphs(canon)) {
      LabeledGraph cs = canonicalize(s);
      if (seen.insert(canonical_signature(cs)).second) subs.push_back(std::move(cs));
    }
    it = ops.subs.emplace(sig, std::move(subs)).first;
  }
  return it->second;
}

std::set<int> labels_of(const LabeledGraph& g) {
  std::set<int> out;
  for (const Edge& e : g.edges) out.insert(e.label);
  return out;
}

std::vector<Word> pi1_words(const LabeledGraph& g) {
  LabeledGraph h = g;
  h.basepoint = 0;
  return spanning_basis(h);
}

// psi = phi_1^-1 o ... o phi_l^-1 for a path applied in order phi_1 ... phi_l.
Automorphism inverse_of_path(const std::vector<WhiteheadAutomorphism>& path, int rank) {
  std::vector<WhiteheadAutomorphism> seq;
  for (auto it = path.rbegin(); it != path.rend(); ++it) seq.push_back(invert_whitehead(*it));
  return compose(seq, rank);
}

FactorClass class_from_words(int rank, const std::vector<Word>& words) {
  return class_of(SubgroupPresentation{rank, words});
}

std::vector<LabeledGraph> connected_components(const LabeledGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices), -1);
  int num_comps = 0;
  for (int s = 0; s < g.num_vertices; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    int id = num_comps++;
    std::deque<int> q{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const Edge& e : g.edges) {
        int other = -1;
        if (e.src == v) other = e.dst;
        if (e.dst == v) other = e.src;
        if (other >= 0 && comp[static_cast<std::size_t>(other)] < 0) {
          comp[static_cast<std::size_t>(other)] = id;
          q.push_back(other);
        }
      }
    }
  }
  std::vector<LabeledGraph> out(static_cast<std::size_t>(num_comps));
  std::vector<std::map<int, int>> ids(static_cast<std::size_t>(num_comps));
  for (auto& part : out) {
    part.rank = g.rank;
    part.num_vertices = 0;
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    int c = comp[static_cast<std::size_t>(v)];
    ids[static_cast<std::size_t>(c)][v] = out[static_cast<std::size_t>(c)].num_vertices++;
  }
  for (const Edge& e : g.edges) {
    int c = comp[static_cast<std::size_t>(e.src)];
    auto& m = ids[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(c)].edges.push_back(Edge{m[e.src], m[e.dst], e.label});
  }
  return out;
}

}  // namespace

FactorClass class_of(const SubgroupPresentation& gens) {
  gens.check_valid();
  if (!is_free_factor(gens).free_factor)
    throw std::invalid_argument("subgroup is not a free factor");
  LabeledGraph g = canonicalize(subgroup_core_unpointed(gens));
  return FactorClass{gens.rank, g, g.cycle_rank()};
}

FactorClass class_of_graph(const LabeledGraph& g) {
  g.check_valid();
  if (!g.is_folded() || !g.is_core() || !g.is_connected())
    throw std::invalid_argument("class_of_graph needs a connected folded core graph");
  return class_of(SubgroupPresentation{g.rank, pi1_words(g)});
}

std::vector<Word> class_generators(const FactorClass& c) { return pi1_words(c.core_graph); }

std::size_t default_state_cap() {
  if (const char* env = std::getenv("FREEFACTOR_STATE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

bool distance_zero(const FactorClass& c1, const FactorClass& c2) {
  if (c1.rank != c2.rank) throw std::invalid_argument("rank mismatch");
  return c1.core_graph == c2.core_graph;
}

bool distance_one(const FactorClass& c1, const FactorClass& c2) {
  if (distance_zero(c1, c2)) return false;
  return !find_label_morphisms(c1.core_graph, c2.core_graph).empty() ||
         !find_label_morphisms(c2.core_graph, c1.core_graph).empty();
}

DistanceTwoResult distance_two(const FactorClass& c1, const FactorClass& c2) {
  if (c1.rank != c2.rank) throw std::invalid_argument("rank mismatch");
  const int rank = c1.rank;
  if (rank < 3) throw std::invalid_argument("distance queries need ambient rank >= 3");
  if (c1.factor_rank >= rank || c2.factor_rank >= rank)
    throw std::invalid_argument("distance is defined between proper free factors");
  DistanceTwoResult res;
  // (i) representatives with nontrivial intersection
  LabeledGraph pb = pullback(c1.core_graph, c2.core_graph);
  if (has_nontrivial_cycle(pb)) {
    res.within = true;
    res.via_intersection = true;
    for (const LabeledGraph& comp : connected_components(pb)) {
      if (comp.num_edges() >= comp.num_vertices) {
        res.middle = class_of_graph(core(comp));
        break;
      }
    }
    return res;
  }
  // (ii) a common proper free factor: shrink the disjoint union of the cores
  // until some label is omitted
  auto autos = all_whitehead_automorphisms(rank);
  LabeledGraph a = c1.core_graph, b = c2.core_graph;
  while (true) {
    std::set<int> used = labels_of(a);
    used.merge(labels_of(b));
    if (static_cast<int>(used.size()) < rank) {
      res.within = true;
      Automorphism psi = inverse_of_path(res.reduction, rank);
      std::vector<Word> gens;
      for (int l : used) gens.push_back(psi.apply(Word{rank, {Letter{l, false}}}));
      res.middle = class_from_words(rank, gens);
      return res;
    }
    bool progressed = false;
    for (const auto& phi : autos) {
      LabeledGraph a2 = apply_whitehead_to_subgroup(phi, a);
      LabeledGraph b2 = apply_whitehead_to_subgroup(phi, b);
      if (a2.num_vertices + b2.num_vertices < a.num_vertices + b.num_vertices &&
          a2.num_edges() + b2.num_edges() < a.num_edges() + b.num_edges()) {
        a = std::move(a2);
        b = std::move(b2);
        res.reduction.push_back(phi);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      res.within = false;
      res.reduction.clear();
      return res;
    }
  }
}

namespace {

// Precomputed reachability for the pair searches. The vertex set of the
// search graph depends only on (rank, edge bound), so backward BFS levels to
// the label-omitting goal pairs are computed once and shared by every query
// whose endpoint cores fit under the bound. Level = exact number of steps to
// the nearest goal pair; kUnreachable when no goal pair can be reached.
constexpr std::uint16_t kUnreachable = 0xFFFF;

struct PairCatalog {
  int rank = 0;
  int bound = 0;
  std::vector<LabeledGraph> graphs;      // canonical, sorted
  std::map<std::string, int> index;      // canonical signature -> id
  std::vector<int> img;                  // [g * num_autos + i] -> id, -1 over bound
  std::vector<std::vector<int>> subs;    // [g] -> subgraph ids, g included
  std::vector<std::uint16_t> theta;      // full image on A, subgraph drops on B
  std::vector<std::uint16_t> omega;      // subgraph drops on both coordinates
};

std::vector<std::uint16_t> solve_levels(const PairCatalog& cat, std::size_t num_autos,
                                        const std::vector<int>& label_mask, int full_mask,
                                        bool subgraphs_on_a) {
  const std::size_t n = cat.graphs.size();
  std::vector<std::uint16_t> lv(n * n, kUnreachable);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((label_mask[a] | label_mask[b]) != full_mask) lv[a * n + b] = 0;
  for (std::uint16_t sweep = 1;; ++sweep) {
    bool changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::uint16_t& cur = lv[a * n + b];
        if (cur != kUnreachable) continue;
        for (std::size_t i = 0; i < num_autos && cur == kUnreachable; ++i) {
          int a2 = cat.img[a * num_autos + i];
          int b2 = cat.img[b * num_autos + i];
          if (a2 < 0 || b2 < 0) continue;
          const std::vector<int>& cands_a =
              subgraphs_on_a ? cat.subs[static_cast<std::size_t>(a2)]
                             : std::vector<int>{};
          auto reaches = [&](int c) {
            for (int d : cat.subs[static_cast<std::size_t>(b2)]) {
              std::uint16_t s = lv[static_cast<std::size_t>(c) * n +
                                   static_cast<std::size_t>(d)];
              if (s < sweep) return true;
            }
            return false;
          };
          if (subgraphs_on_a) {
            for (int c : cands_a)
              if (reaches(c)) {
                cur = sweep;
                break;
              }
          } else if (reaches(a2)) {
            cur = sweep;
          }
        }
        if (cur == sweep) changed = true;
      }
    }
    if (!changed) break;
  }
  return lv;
}

const PairCatalog* pair_catalog(int rank) {
  if (rank > 3) return nullptr;  // catalog size explodes beyond rank 3
  static std::map<int, PairCatalog> cache;
  auto it = cache.find(rank);
  if (it != cache.end()) return &it->second;
  PairCatalog cat;
  cat.rank = rank;
  cat.bound = 4;
  cat.graphs = enumerate_core_graphs(rank, cat.bound);
  const std::size_t n = cat.graphs.size();
  for (std::size_t g = 0; g < n; ++g)
    cat.index[canonical_signature(cat.graphs[g])] = static_cast<int>(g);
  GraphOpsCache& ops = graph_ops(rank);
  const std::size_t m = ops.autos.size();
  cat.img.assign(n * m, -1);
  cat.subs.resize(n);
  std::vector<int> label_mask(n, 0);
  int full_mask = (1 << rank) - 1;
  for (std::size_t g = 0; g < n; ++g) {
    std::string sig = canonical_signature(cat.graphs[g]);
    for (std::size_t i = 0; i < m; ++i) {
      const LabeledGraph& image = cached_image(rank, cat.graphs[g], sig, i);
      if (image.num_edges() > cat.bound) continue;
      cat.img[g * m + i] = cat.index.at(canonical_signature(image));
    }
    for (const LabeledGraph& s : cached_subgraphs(rank, cat.graphs[g], sig))
      cat.subs[g].push_back(cat.index.at(canonical_signature(s)));
    for (const Edge& e : cat.graphs[g].edges) label_mask[g] |= 1 << (e.label - 1);
  }
  cat.theta = solve_levels(cat, m, label_mask, full_mask, false);
  cat.omega = solve_levels(cat, m, label_mask, full_mask, true);
  return &cache.emplace(rank, std::move(cat)).first->second;
}

// Lookup-based search when both endpoint cores fit under the catalog bound.
std::optional<PairSearchResult> catalog_search(const LabeledGraph& core_a,
                                               const LabeledGraph& core_b, int rank,
                                               bool subgraphs_on_a) {
  const PairCatalog* cat = pair_catalog(rank);
  if (!cat || core_a.num_edges() > cat->bound || core_b.num_edges() > cat->bound)
    return std::nullopt;
  const std::size_t n = cat->graphs.size();
  GraphOpsCache& ops = graph_ops(rank);
  const std::size_t m = ops.autos.size();
  const std::vector<std::uint16_t>& lv = subgraphs_on_a ? cat->omega : cat->theta;
  auto locate = [&](const LabeledGraph& g) {
    return cat->index.at(canonical_signature(canonicalize(g)));
  };
  int ia = locate(core_a), ib = locate(core_b);
  std::vector<int> a_starts =
      subgraphs_on_a ? cat->subs[static_cast<std::size_t>(ia)] : std::vector<int>{ia};
  PairSearchResult res;
  int best_a = -1, best_b = -1;
  std::uint16_t best = kUnreachable;
  for (int a0 : a_starts) {
    for (int b0 : cat->subs[static_cast<std::size_t>(ib)]) {
      std::uint16_t s = lv[static_cast<std::size_t>(a0) * n + static_cast<std::size_t>(b0)];
      if (s < best) {
        best = s;
        best_a = a0;
        best_b = b0;
      }
    }
  }
  res.states_explored = static_cast<long>(a_starts.size() * cat->subs[ib].size());
  if (best == kUnreachable) {
    res.verdict = SearchVerdict::NotFound;
    return res;
  }
  // walk down the levels to recover the automorphism path
  int a = best_a, b = best_b;
  for (std::uint16_t level = best; level > 0;) {
    bool stepped = false;
    for (std::size_t i = 0; i < m && !stepped; ++i) {
      int a2 = cat->img[static_cast<std::size_t>(a) * m + i];
      int b2 = cat->img[static_cast<std::size_t>(b) * m + i];
      if (a2 < 0 || b2 < 0) continue;
      std::vector<int> cands_a =
          subgraphs_on_a ? cat->subs[static_cast<std::size_t>(a2)] : std::vector<int>{a2};
      for (int c : cands_a) {
        for (int d : cat->subs[static_cast<std::size_t>(b2)]) {
          if (lv[static_cast<std::size_t>(c) * n + static_cast<std::size_t>(d)] ==
              level - 1) {
            res.path.push_back(ops.autos[i]);
            a = c;
            b = d;
            level = static_cast<std::uint16_t>(level - 1);
            stepped = true;
            break;
          }
        }
        if (stepped) break;
      }
    }
    if (!stepped) throw std::logic_error("catalog level descent stuck");
  }
  res.verdict = SearchVerdict::Found;
  res.terminal_a = cat->graphs[static_cast<std::size_t>(a)];
  res.terminal_b = cat->graphs[static_cast<std::size_t>(b)];
  return res;
}

// BFS over pairs of canonical core graphs. The A coordinate follows the full
// image of the applied automorphism (or any core subgraph of it when
// subgraphs_on_a is set); the B coordinate may always drop to a core
// subgraph. Goal: a pair whose combined label set is proper.
PairSearchResult run_pair_search(const LabeledGraph& core_a, const LabeledGraph& core_b,
                                 int rank, std::size_t state_cap, bool subgraphs_on_a) {
  if (auto fast = catalog_search(core_a, core_b, rank, subgraphs_on_a)) return *fast;
  PairSearchResult res;
  const int bound_a = core_a.num_edges();
  const int bound_b = core_b.num_edges();
  const auto& autos = graph_ops(rank).autos;

  struct Node {
    LabeledGraph a, b;
    std::string parent;  // empty for start nodes
    int phi_index = -1;
  };
  std::map<std::string, Node> nodes;
  std::deque<std::string> frontier;

  auto apply_memo = [&](const LabeledGraph& g, const std::string& sig,
                        std::size_t i) -> const LabeledGraph& {
    return cached_image(rank, g, sig, i);
  };
  auto subs_memo = [&](const LabeledGraph& g,
                       const std::string& sig) -> const std::vector<LabeledGraph>& {
    return cached_subgraphs(rank, g, sig);
  };

  std::string goal_key;
  auto offer = [&](LabeledGraph a, LabeledGraph b, const std::string& parent,
                   int phi_index) -> bool {
    std::string key = canonical_signature(a) + '|' + canonical_signature(b);
    if (nodes.count(key)) return false;
    std::set<int> used = labels_of(a);
    used.merge(labels_of(b));
    bool goal = static_cast<int>(used.size()) < rank;
    nodes.emplace(key, Node{std::move(a), std::move(b), parent, phi_index});
    if (goal) {
      goal_key = key;
      return true;
    }
    frontier.push_back(key);
    return false;
  };

  bool found = false;
  {
    std::vector<LabeledGraph> a_starts;
    if (subgraphs_on_a) {
      for (const LabeledGraph& s : core_subgraphs(core_a)) a_starts.push_back(s);
    } else {
      a_starts.push_back(core_a);
    }
    for (const LabeledGraph& a0 : a_starts) {
      for (const LabeledGraph& b0 : core_subgraphs(core_b)) {
        if (offer(canonicalize(a0), canonicalize(b0), "", -1)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }

  bool capped = false;
  while (!found && !frontier.empty()) {
    if (nodes.size() >= state_cap) {
      capped = true;
      break;
    }
    std::string key = frontier.front();
    frontier.pop_front();
    const Node& node = nodes.at(key);
    // copy: nodes may rehash on insertions below
    LabeledGraph a = node.a, b = node.b;
    std::string sig_a = canonical_signature(a), sig_b = canonical_signature(b);
    for (std::size_t i = 0; i < autos.size() && !found; ++i) {
      LabeledGraph img_a = apply_memo(a, sig_a, i);
      LabeledGraph img_b = apply_memo(b, sig_b, i);
      std::vector<LabeledGraph> a_next;
      if (subgraphs_on_a) {
        for (const LabeledGraph& s : subs_memo(img_a, canonical_signature(img_a)))
          if (s.num_edges() <= bound_a) a_next.push_back(s);
      } else if (img_a.num_edges() <= bound_a) {
        a_next.push_back(img_a);
      }
      for (const LabeledGraph& ca : a_next) {
        for (const LabeledGraph& d : subs_memo(img_b, canonical_signature(img_b))) {
          if (d.num_edges() > bound_b) continue;
          if (offer(ca, d, key, static_cast<int>(i))) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
  }

  res.states_explored = static_cast<long>(nodes.size());
  if (found) {
    res.verdict = SearchVerdict::Found;
    const Node& goal = nodes.at(goal_key);
    res.terminal_a = goal.a;
    res.terminal_b = goal.b;
    for (std::string k = goal_key; !k.empty();) {
      const Node& n = nodes.at(k);
      if (n.phi_index >= 0) res.path.push_back(autos[static_cast<std::size_t>(n.phi_index)]);
      k = n.parent;
    }
    std::reverse(res.path.begin(), res.path.end());
  } else {
    res.verdict = capped ? SearchVerdict::ResourceLimited : SearchVerdict::NotFound;
  }
  return res;
}

}  // namespace

PairSearchResult distance_three(const FactorClass& c1, const FactorClass& c2,
                                std::size_t state_cap) {
  if (c1.rank != c2.rank) throw std::invalid_argument("rank mismatch");
  const int rank = c1.rank;
  if (rank < 3) throw std::invalid_argument("distance queries need ambient rank >= 3");
  if (c1.factor_rank >= rank || c2.factor_rank >= rank)
    throw std::invalid_argument("distance is defined between proper free factors");
  PairSearchResult r1 = run_pair_search(c1.core_graph, c2.core_graph, rank, state_cap, false);
  if (r1.verdict == SearchVerdict::Found) return r1;
  PairSearchResult r2 = run_pair_search(c2.core_graph, c1.core_graph, rank, state_cap, false);
  r2.states_explored += r1.states_explored;
  if (r2.verdict == SearchVerdict::Found) {
    r2.roles_swapped = true;
    return r2;
  }
  if (r1.verdict == SearchVerdict::ResourceLimited) r2.verdict = SearchVerdict::ResourceLimited;
  return r2;
}

DistanceFourResult distance_four_partial(const FactorClass& c1, const FactorClass& c2,
                                         std::size_t state_cap) {
  if (c1.rank != c2.rank) throw std::invalid_argument("rank mismatch");
  const int rank = c1.rank;
  if (rank < 3) throw std::invalid_argument("distance queries need ambient rank >= 3");
  if (c1.factor_rank >= rank || c2.factor_rank >= rank)
    throw std::invalid_argument("distance is defined between proper free factors");
  DistanceFourResult res;
  PairSearchResult omega = run_pair_search(c1.core_graph, c2.core_graph, rank, state_cap, true);
  res.states_explored = omega.states_explored;
  if (omega.verdict == SearchVerdict::Found) {
    res.verdict = FourVerdict::Yes;
    res.path = std::move(omega.path);
    res.terminal_a = std::move(omega.terminal_a);
    res.terminal_b = std::move(omega.terminal_b);
    return res;
  }
  if (omega.verdict == SearchVerdict::ResourceLimited) {
    res.verdict = FourVerdict::ResourceLimited;
    return res;
  }
  // Condition one fails. Condition two is decidable only when some endpoint
  // has rank n-1: it then collapses to the distance-3 pattern, which callers
  // have already excluded.
  if (c1.factor_rank == rank - 1 || c2.factor_rank == rank - 1)
    res.verdict = FourVerdict::No;
  else
    res.verdict = FourVerdict::Inapplicable;
  return res;
}

DistanceResult distance(const FactorClass& c1, const FactorClass& c2, std::size_t state_cap) {
  if (c1.rank != c2.rank) throw std::invalid_argument("rank mismatch");
  const int rank = c1.rank;
  if (rank < 3) throw std::invalid_argument("distance queries need ambient rank >= 3");
  if (c1.factor_rank >= rank || c2.factor_rank >= rank)
    throw std::invalid_argument("distance is defined between proper free factors");
  DistanceResult res;
  if (distance_zero(c1, c2)) {
    res.value = 0;
    res.witnesses = {c1};
    return res;
  }
  if (distance_one(c1, c2)) {
    res.value = 1;
    res.witnesses = {c1, c2};
    return res;
  }
  DistanceTwoResult d2 = distance_two(c1, c2);
  if (d2.within) {
    res.value = 2;
    res.witnesses = {c1, *d2.middle, c2};
    return res;
  }
  PairSearchResult d3 = distance_three(c1, c2, state_cap);
  res.states_explored += d3.states_explored;
  if (d3.verdict == SearchVerdict::Found) {
    res.value = 3;
    Automorphism psi = inverse_of_path(d3.path, rank);
    std::set<int> used = labels_of(d3.terminal_a);
    used.merge(labels_of(d3.terminal_b));
    std::vector<Word> i_gens;
    for (int l : used) i_gens.push_back(psi.apply(Word{rank, {Letter{l, false}}}));
    std::vector<Word> j_gens;
    for (const Word& w : pi1_words(d3.terminal_b)) j_gens.push_back(psi.apply(w));
    FactorClass middle_i = class_from_words(rank, i_gens);
    FactorClass middle_j = class_from_words(rank, j_gens);
    if (!d3.roles_swapped)
      res.witnesses = {c1, middle_i, middle_j, c2};
    else
      res.witnesses = {c1, middle_j, middle_i, c2};
    return res;
  }
  if (d3.verdict == SearchVerdict::ResourceLimited) {
    res.greater_than = 2;
    res.resource_limited = true;
    return res;
  }
  DistanceFourResult d4 = distance_four_partial(c1, c2, state_cap);
  res.states_explored += d4.states_explored;
  switch (d4.verdict) {
    case FourVerdict::Yes: {
      res.value = 4;
      Automorphism psi = inverse_of_path(d4.path, rank);
      std::set<int> used = labels_of(d4.terminal_a);
      used.merge(labels_of(d4.terminal_b));
      std::vector<Word> j2_gens;
      for (int l : used) j2_gens.push_back(psi.apply(Word{rank, {Letter{l, false}}}));
      std::vector<Word> j1_gens, j3_gens;
      for (const Word& w : pi1_words(d4.terminal_a)) j1_gens.push_back(psi.apply(w));
      for (const Word& w : pi1_words(d4.terminal_b)) j3_gens.push_back(psi.apply(w));
      res.witnesses = {c1, class_from_words(rank, j1_gens), class_from_words(rank, j2_gens),
                       class_from_words(rank, j3_gens), c2};
      return res;
    }
    case FourVerdict::No:
      res.greater_than = 4;
      return res;
    case FourVerdict::Inapplicable:
      res.greater_than = 3;
      res.inapplicable = true;
      return res;
    case FourVerdict::ResourceLimited:
      res.greater_than = 3;
      res.resource_limited = true;
      return res;
  }
  return res;
}

}  // namespace ff
