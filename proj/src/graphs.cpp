#include "ff/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ff {

int LabeledGraph::valence(int v) const {
  int val = 0;
  for (const Edge& e : edges) {
    if (e.src == v) ++val;
    if (e.dst == v) ++val;
  }
  return val;
}

bool LabeledGraph::is_connected() const {
  if (num_vertices == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(num_vertices), 0);
  std::queue<int> q;
  q.push(basepoint.value_or(0));
  seen[static_cast<std::size_t>(q.front())] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Edge& e : edges) {
      for (int w : {e.src == v ? e.dst : -1, e.dst == v ? e.src : -1}) {
        if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++count;
          q.push(w);
        }
      }
    }
  }
  return count == num_vertices;
}

bool LabeledGraph::is_folded() const {
  std::map<std::pair<int, int>, int> out, in;
  for (const Edge& e : edges) {
    if (++out[{e.src, e.label}] > 1) return false;
    if (++in[{e.dst, e.label}] > 1) return false;
  }
  return true;
}

bool LabeledGraph::is_core() const {
  for (int v = 0; v < num_vertices; ++v)
    if (valence(v) < 2) return false;
  return true;
}

void LabeledGraph::check_valid() const {
  for (const Edge& e : edges) {
    if (e.label < 1 || e.label > rank) throw std::invalid_argument("edge label out of range");
    if (e.src < 0 || e.src >= num_vertices || e.dst < 0 || e.dst >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
  }
  if (basepoint && (*basepoint < 0 || *basepoint >= num_vertices))
    throw std::invalid_argument("basepoint out of range");
}

LetterSet LabeledGraph::letters_at(int v) const {
  LetterSet out;
  for (const Edge& e : edges) {
    if (e.src == v) out.insert(Letter{e.label, false});
    if (e.dst == v) out.insert(Letter{e.label, true});
  }
  return out;
}

void SubgroupPresentation::check_valid() const {
  if (generators.empty())
    throw std::invalid_argument("trivial subgroup: no generators");
  for (const Word& w : generators) {
    if (w.rank != rank) throw std::invalid_argument("generator rank mismatch");
    if (w.trivial()) throw std::invalid_argument("trivial generator word");
    if (free_reduce(w.letters, rank).letters != w.letters)
      throw std::invalid_argument("generator is not freely reduced");
  }
}

LabeledGraph graph_from_words(const SubgroupPresentation& gens) {
  gens.check_valid();
  LabeledGraph g;
  g.rank = gens.rank;
  g.num_vertices = 1;
  g.basepoint = 0;
  for (const Word& w : gens.generators) {
    int prev = 0;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      int next = (i + 1 == w.letters.size()) ? 0 : g.num_vertices++;
      Letter l = w.letters[i];
      if (!l.inv)
        g.edges.push_back(Edge{prev, next, l.gen});
      else
        g.edges.push_back(Edge{next, prev, l.gen});
      prev = next;
    }
  }
  return g;
}

namespace {

struct FoldSite {
  int vertex;
  int label;
  bool outgoing;
  std::size_t e1, e2;  // indices into edges, e1 < e2
};

std::vector<FoldSite> find_fold_sites(const LabeledGraph& g) {
  std::vector<FoldSite> sites;
  for (int v = 0; v < g.num_vertices; ++v) {
    for (int label = 1; label <= g.rank; ++label) {
      for (bool outgoing : {true, false}) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
          const Edge& e = g.edges[i];
          if (e.label != label) continue;
          if ((outgoing && e.src == v) || (!outgoing && e.dst == v)) hits.push_back(i);
        }
        if (hits.size() >= 2) sites.push_back(FoldSite{v, label, outgoing, hits[0], hits[1]});
      }
    }
  }
  return sites;
}

// Remove vertex `gone`, mapping it to `keep`; compresses ids.
void merge_vertex(LabeledGraph& g, std::vector<int>& vmap, int keep, int gone) {
  for (Edge& e : g.edges) {
    if (e.src == gone) e.src = keep;
    if (e.dst == gone) e.dst = keep;
    if (e.src > gone) --e.src;
    if (e.dst > gone) --e.dst;
  }
  for (int& m : vmap) {
    if (m == gone) m = keep;
    if (m > gone) --m;
  }
  if (g.basepoint) {
    if (*g.basepoint == gone) g.basepoint = keep;
    if (*g.basepoint > gone) --*g.basepoint;
  }
  --g.num_vertices;
}

}  // namespace

std::pair<LabeledGraph, FoldTrace> fold_with_chooser(
    const LabeledGraph& g, const std::function<std::size_t(std::size_t)>& chooser) {
  g.check_valid();
  LabeledGraph cur = g;
  FoldTrace trace;
  trace.vertex_map.resize(static_cast<std::size_t>(g.num_vertices));
  std::iota(trace.vertex_map.begin(), trace.vertex_map.end(), 0);
  while (true) {
    auto sites = find_fold_sites(cur);
    if (sites.empty()) break;
    const FoldSite site = sites[chooser(sites.size())];
    const Edge a = cur.edges[site.e1];
    const Edge b = cur.edges[site.e2];
    int far1 = site.outgoing ? a.dst : a.src;
    int far2 = site.outgoing ? b.dst : b.src;
    bool rank_preserving = far1 != far2;
    trace.steps.push_back(FoldStep{site.vertex, site.label, site.outgoing, rank_preserving});
    cur.edges.erase(cur.edges.begin() + static_cast<std::ptrdiff_t>(site.e2));
    if (rank_preserving) {
      int keep = std::min(far1, far2), gone = std::max(far1, far2);
      merge_vertex(cur, trace.vertex_map, keep, gone);
    }
  }
  return {cur, trace};
}

std::pair<LabeledGraph, FoldTrace> fold(const LabeledGraph& g) {
  return fold_with_chooser(g, [](std::size_t) { return std::size_t{0}; });
}

namespace {

LabeledGraph trim_valence_one(const LabeledGraph& g, std::optional<int> keep) {
  LabeledGraph cur = g;
  std::vector<int> dummy;
  while (true) {
    int victim = -1;
    for (int v = 0; v < cur.num_vertices; ++v) {
      if (keep && cur.basepoint && v == *cur.basepoint) continue;
      if (cur.valence(v) <= 1) {
        victim = v;
        break;
      }
    }
    if (victim < 0) break;
    std::erase_if(cur.edges, [&](const Edge& e) { return e.src == victim || e.dst == victim; });
    for (Edge& e : cur.edges) {
      if (e.src > victim) --e.src;
      if (e.dst > victim) --e.dst;
    }
    if (cur.basepoint && *cur.basepoint > victim) --*cur.basepoint;
    --cur.num_vertices;
    if (cur.num_vertices == 0)
      throw std::domain_error("graph is a tree: trivial subgroup has no core");
  }
  if (cur.edges.empty())
    throw std::domain_error("graph is a tree: trivial subgroup has no core");
  return cur;
}

}  // namespace

LabeledGraph core(const LabeledGraph& g) {
  LabeledGraph out = trim_valence_one(g, std::nullopt);
  out.basepoint.reset();
  return out;
}

LabeledGraph pointed_core(const LabeledGraph& g) {
  if (!g.basepoint) throw std::invalid_argument("pointed_core needs a basepoint");
  return trim_valence_one(g, g.basepoint);
}

LabeledGraph subgroup_core(const SubgroupPresentation& gens) {
  return pointed_core(fold(graph_from_words(gens)).first);
}

LabeledGraph subgroup_core_unpointed(const SubgroupPresentation& gens) {
  return core(fold(graph_from_words(gens)).first);
}

LabeledGraph pullback(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.rank != g2.rank) throw std::invalid_argument("rank mismatch in pullback");
  LabeledGraph out;
  out.rank = g1.rank;
  std::map<std::pair<int, int>, int> ids;
  auto vertex = [&](int a, int b) {
    auto [it, fresh] = ids.try_emplace({a, b}, out.num_vertices);
    if (fresh) ++out.num_vertices;
    return it->second;
  };
  for (const Edge& e1 : g1.edges)
    for (const Edge& e2 : g2.edges)
      if (e1.label == e2.label)
        out.edges.push_back(Edge{vertex(e1.src, e2.src), vertex(e1.dst, e2.dst), e1.label});
  if (g1.basepoint && g2.basepoint) {
    auto it = ids.find({*g1.basepoint, *g2.basepoint});
    if (it != ids.end()) out.basepoint = it->second;
  }
  return out;
}

bool has_nontrivial_cycle(const LabeledGraph& g) {
  // union-find per component; cycle iff edges >= vertices in some component
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Edge& e : g.edges) parent[static_cast<std::size_t>(find(e.src))] = find(e.dst);
  std::map<int, std::pair<int, int>> comp;  // root -> (V, E)
  for (int v = 0; v < g.num_vertices; ++v) ++comp[find(v)].first;
  for (const Edge& e : g.edges) ++comp[find(e.src)].second;
  for (const auto& [root, ve] : comp)
    if (ve.second >= ve.first) return true;
  return false;
}

namespace {

struct Adjacency {
  // (vertex, label) -> edge index, or -1
  std::vector<int> out, in;
  int rank;
  explicit Adjacency(const LabeledGraph& g) : rank(g.rank) {
    out.assign(static_cast<std::size_t>(g.num_vertices * g.rank), -1);
    in.assign(static_cast<std::size_t>(g.num_vertices * g.rank), -1);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const Edge& e = g.edges[i];
      out[static_cast<std::size_t>(e.src * g.rank + e.label - 1)] = static_cast<int>(i);
      in[static_cast<std::size_t>(e.dst * g.rank + e.label - 1)] = static_cast<int>(i);
    }
  }
  int out_edge(int v, int label) const {
    return out[static_cast<std::size_t>(v * rank + label - 1)];
  }
  int in_edge(int v, int label) const {
    return in[static_cast<std::size_t>(v * rank + label - 1)];
  }
};

}  // namespace

std::vector<std::vector<int>> find_label_morphisms(const LabeledGraph& small,
                                                   const LabeledGraph& big) {
  if (small.rank != big.rank) throw std::invalid_argument("rank mismatch");
  if (!small.is_folded() || !big.is_folded())
    throw std::invalid_argument("find_label_morphisms needs folded graphs");
  std::vector<std::vector<int>> result;
  if (small.num_vertices == 0) return result;
  Adjacency sa(small), ba(big);
  for (int seed = 0; seed < big.num_vertices; ++seed) {
    std::vector<int> map(static_cast<std::size_t>(small.num_vertices), -1);
    map[0] = seed;
    std::queue<int> q;
    q.push(0);
    bool ok = true;
    std::vector<char> queued(static_cast<std::size_t>(small.num_vertices), 0);
    queued[0] = 1;
    while (ok && !q.empty()) {
      int u = q.front();
      q.pop();
      int bu = map[static_cast<std::size_t>(u)];
      for (int label = 1; ok && label <= small.rank; ++label) {
        int se = sa.out_edge(u, label);
        if (se >= 0) {
          int be = ba.out_edge(bu, label);
          if (be < 0) {
            ok = false;
            break;
          }
          int w = small.edges[static_cast<std::size_t>(se)].dst;
          int bw = big.edges[static_cast<std::size_t>(be)].dst;
          int& slot = map[static_cast<std::size_t>(w)];
          if (slot < 0) {
            slot = bw;
            if (!queued[static_cast<std::size_t>(w)]) {
              queued[static_cast<std::size_t>(w)] = 1;
              q.push(w);
            }
          } else if (slot != bw) {
            ok = false;
          }
        }
        int se2 = sa.in_edge(u, label);
        if (ok && se2 >= 0) {
          int be = ba.in_edge(bu, label);
          if (be < 0) {
            ok = false;
            break;
          }
          int w = small.edges[static_cast<std::size_t>(se2)].src;
          int bw = big.edges[static_cast<std::size_t>(be)].src;
          int& slot = map[static_cast<std::size_t>(w)];
          if (slot < 0) {
            slot = bw;
            if (!queued[static_cast<std::size_t>(w)]) {
              queued[static_cast<std::size_t>(w)] = 1;
              q.push(w);
            }
          } else if (slot != bw) {
            ok = false;
          }
        }
      }
    }
    if (!ok) continue;
    if (std::any_of(map.begin(), map.end(), [](int m) { return m < 0; })) continue;
    result.push_back(std::move(map));
  }
  return result;
}

std::string canonical_signature(const LabeledGraph& g) {
  if (!g.is_folded()) throw std::invalid_argument("canonical_signature needs a folded graph");
  if (!g.is_connected()) throw std::invalid_argument("canonical_signature needs a connected graph");
  Adjacency adj(g);
  std::string best;
  for (int start = 0; start < g.num_vertices; ++start) {
    std::vector<int> ord(static_cast<std::size_t>(g.num_vertices), -1);
    int next = 0;
    std::queue<int> q;
    ord[static_cast<std::size_t>(start)] = next++;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int label = 1; label <= g.rank; ++label) {
        for (bool outgoing : {true, false}) {
          int ei = outgoing ? adj.out_edge(v, label) : adj.in_edge(v, label);
          if (ei < 0) continue;
          const Edge& e = g.edges[static_cast<std::size_t>(ei)];
          int w = outgoing ? e.dst : e.src;
          if (ord[static_cast<std::size_t>(w)] < 0) {
            ord[static_cast<std::size_t>(w)] = next++;
            q.push(w);
          }
        }
      }
    }
    std::vector<Edge> renum;
    renum.reserve(g.edges.size());
    for (const Edge& e : g.edges)
      renum.push_back(Edge{ord[static_cast<std::size_t>(e.src)],
                           ord[static_cast<std::size_t>(e.dst)], e.label});
    std::sort(renum.begin(), renum.end());
    std::ostringstream sig;
    sig << g.num_vertices << ';';
    for (const Edge& e : renum) sig << e.src << '>' << e.dst << ':' << e.label << ';';
    std::string s = sig.str();
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

LabeledGraph canonicalize(const LabeledGraph& g) {
  // re-derive the winning order of canonical_signature
  Adjacency adj(g);
  std::string best;
  std::vector<int> best_ord;
  for (int start = 0; start < g.num_vertices; ++start) {
    std::vector<int> ord(static_cast<std::size_t>(g.num_vertices), -1);
    int next = 0;
    std::queue<int> q;
    ord[static_cast<std::size_t>(start)] = next++;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int label = 1; label <= g.rank; ++label) {
        for (bool outgoing : {true, false}) {
          int ei = outgoing ? adj.out_edge(v, label) : adj.in_edge(v, label);
          if (ei < 0) continue;
          const Edge& e = g.edges[static_cast<std::size_t>(ei)];
          int w = outgoing ? e.dst : e.src;
          if (ord[static_cast<std::size_t>(w)] < 0) {
            ord[static_cast<std::size_t>(w)] = next++;
            q.push(w);
          }
        }
      }
    }
    std::vector<Edge> renum;
    for (const Edge& e : g.edges)
      renum.push_back(Edge{ord[static_cast<std::size_t>(e.src)],
                           ord[static_cast<std::size_t>(e.dst)], e.label});
    std::sort(renum.begin(), renum.end());
    std::ostringstream sig;
    sig << g.num_vertices << ';';
    for (const Edge& e : renum) sig << e.src << '>' << e.dst << ':' << e.label << ';';
    std::string s = sig.str();
    if (best.empty() || s < best) {
      best = std::move(s);
      best_ord = std::move(ord);
    }
  }
  LabeledGraph out;
  out.rank = g.rank;
  out.num_vertices = g.num_vertices;
  for (const Edge& e : g.edges)
    out.edges.push_back(Edge{best_ord[static_cast<std::size_t>(e.src)],
                             best_ord[static_cast<std::size_t>(e.dst)], e.label});
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool graphs_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.rank != g2.rank || g1.num_vertices != g2.num_vertices ||
      g1.edges.size() != g2.edges.size())
    return false;
  return canonical_signature(g1) == canonical_signature(g2);
}

std::vector<Word> spanning_basis(const LabeledGraph& g) {
  if (!g.basepoint) throw std::invalid_argument("spanning_basis needs a basepoint");
  g.check_valid();
  // BFS tree with path words from the basepoint
  std::vector<std::optional<Word>> path(static_cast<std::size_t>(g.num_vertices));
  std::vector<char> tree_edge(g.edges.size(), 0);
  path[static_cast<std::size_t>(*g.basepoint)] = Word{g.rank, {}};
  std::queue<int> q;
  q.push(*g.basepoint);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const Edge& e = g.edges[i];
      if (e.src == v && !path[static_cast<std::size_t>(e.dst)]) {
        path[static_cast<std::size_t>(e.dst)] =
            concat(*path[static_cast<std::size_t>(v)], Word{g.rank, {Letter{e.label, false}}});
        tree_edge[i] = 1;
        q.push(e.dst);
      } else if (e.dst == v && !path[static_cast<std::size_t>(e.src)]) {
        path[static_cast<std::size_t>(e.src)] =
            concat(*path[static_cast<std::size_t>(v)], Word{g.rank, {Letter{e.label, true}}});
        tree_edge[i] = 1;
        q.push(e.src);
      }
    }
  }
  std::vector<Word> basis;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (tree_edge[i]) continue;
    const Edge& e = g.edges[i];
    Word w = concat(*path[static_cast<std::size_t>(e.src)], Word{g.rank, {Letter{e.label, false}}});
    w = concat(w, path[static_cast<std::size_t>(e.dst)]->inverse());
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<LabeledGraph> core_subgraphs(const LabeledGraph& g) {
  const std::size_t m = g.edges.size();
  if (m > 24) throw std::invalid_argument("core_subgraphs: too many edges");
  std::vector<LabeledGraph> out;
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<Edge> sel;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ul << i)) sel.push_back(g.edges[i]);
    // renumber touched vertices
    std::map<int, int> ids;
    for (const Edge& e : sel) {
      ids.try_emplace(e.src, 0);
      ids.try_emplace(e.dst, 0);
    }
    int next = 0;
    for (auto& [v, id] : ids) id = next++;
    LabeledGraph sub;
    sub.rank = g.rank;
    sub.num_vertices = next;
    for (const Edge& e : sel) sub.edges.push_back(Edge{ids[e.src], ids[e.dst], e.label});
    if (!sub.is_core()) continue;
    if (!sub.is_connected()) continue;
    out.push_back(std::move(sub));
  }
  return out;
}

std::string graph_to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.num_vertices; ++v) {
    out << "  v" << v;
    if (g.basepoint && *g.basepoint == v) out << " [peripheries=2]";
    out << ";\n";
  }
  std::vector<Edge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& e : sorted)
    out << "  v" << e.src << " -> v" << e.dst << " [label=\"x" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ff
