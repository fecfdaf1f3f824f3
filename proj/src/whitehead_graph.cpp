#include "ff/whitehead_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ff {

void WhiteheadGraph::add_arc(Letter a, Letter b) {
  if (b < a) std::swap(a, b);
  ++arcs[{a, b}];
}

int WhiteheadGraph::arc_count(Letter a, Letter b) const {
  if (b < a) std::swap(a, b);
  auto it = arcs.find({a, b});
  return it == arcs.end() ? 0 : it->second;
}

int WhiteheadGraph::total_arcs() const {
  int n = 0;
  for (const auto& [arc, mult] : arcs) n += mult;
  return n;
}

bool WhiteheadGraph::is_isolated(Letter v) const {
  for (const auto& [arc, mult] : arcs)
    if (arc.first == v || arc.second == v) return false;
  return true;
}

LetterSet WhiteheadGraph::component_of(Letter v) const {
  LetterSet comp{v};
  std::queue<Letter> q;
  q.push(v);
  while (!q.empty()) {
    Letter u = q.front();
    q.pop();
    for (const auto& [arc, mult] : arcs) {
      Letter other;
      if (arc.first == u)
        other = arc.second;
      else if (arc.second == u)
        other = arc.first;
      else
        continue;
      if (comp.insert(other).second) q.push(other);
    }
  }
  return comp;
}

std::vector<LetterSet> WhiteheadGraph::components_without(Letter v) const {
  LetterSet comp = component_of(v);
  comp.erase(v);
  std::vector<LetterSet> out;
  LetterSet seen;
  for (Letter start : comp) {
    if (seen.count(start)) continue;
    LetterSet piece{start};
    std::queue<Letter> q;
    q.push(start);
    while (!q.empty()) {
      Letter u = q.front();
      q.pop();
      for (const auto& [arc, mult] : arcs) {
        Letter other;
        if (arc.first == u)
          other = arc.second;
        else if (arc.second == u)
          other = arc.first;
        else
          continue;
        if (other == v) continue;
        if (piece.insert(other).second) q.push(other);
      }
    }
    seen.insert(piece.begin(), piece.end());
    out.push_back(std::move(piece));
  }
  return out;
}

WhiteheadGraph whitehead_graph_of_word(const CyclicWord& w) {
  if (w.length() == 0) throw std::invalid_argument("empty cyclic word has no Whitehead graph");
  WhiteheadGraph wg;
  wg.rank = w.rank;
  const std::size_t n = w.length();
  for (std::size_t i = 0; i < n; ++i) {
    Letter first = w.letters[i];
    Letter second = w.letters[(i + 1) % n];
    wg.add_arc(first.inverse(), second);
  }
  return wg;
}

WhiteheadGraph whitehead_graph_of_graph(const LabeledGraph& g) {
  if (!g.is_folded() || !g.is_core())
    throw std::invalid_argument("whitehead_graph_of_graph needs a folded core graph");
  WhiteheadGraph wg;
  wg.rank = g.rank;
  for (int v = 0; v < g.num_vertices; ++v) {
    LetterSet letters = g.letters_at(v);
    for (auto it = letters.begin(); it != letters.end(); ++it) {
      auto jt = it;
      for (++jt; jt != letters.end(); ++jt) wg.add_arc(*it, *jt);
    }
  }
  return wg;
}

std::optional<CutVertexWitness> find_cut_vertex(const WhiteheadGraph& wg) {
  std::vector<Letter> scan;
  for (int c = 0; c < 2 * wg.rank; ++c) scan.push_back(Letter::from_code(c));
  // kind (i): the component of a misses the inverse of a
  for (Letter a : scan) {
    if (wg.is_isolated(a)) continue;
    LetterSet comp = wg.component_of(a);
    if (!comp.count(a.inverse())) {
      comp.erase(a);
      return CutVertexWitness{a, CutVertexKind::MissingInverseComponent, std::move(comp)};
    }
  }
  // kind (ii): removing a disconnects its component
  for (Letter a : scan) {
    if (wg.is_isolated(a)) continue;
    auto pieces = wg.components_without(a);
    if (pieces.size() < 2) continue;
    const LetterSet* best = nullptr;
    for (const LetterSet& piece : pieces) {
      if (piece.count(a.inverse())) continue;
      if (!best || piece.size() < best->size() ||
          (piece.size() == best->size() && *piece.begin() < *best->begin()))
        best = &piece;
    }
    if (best) return CutVertexWitness{a, CutVertexKind::Articulation, *best};
  }
  return std::nullopt;
}

WhiteheadAutomorphism automorphism_from_witness(const CutVertexWitness& wit, int rank) {
  return WhiteheadAutomorphism(rank, wit.vertex, wit.component_a);
}

namespace {

// Append an edge reading the letter l along from -> to.
void add_reading(LabeledGraph& g, int from, int to, Letter l) {
  if (!l.inv)
    g.edges.push_back(Edge{from, to, l.gen});
  else
    g.edges.push_back(Edge{to, from, l.gen});
}

}  // namespace

SubdivisionResult subdivide(const WhiteheadAutomorphism& phi, const LabeledGraph& g) {
  if (phi.rank != g.rank) throw std::invalid_argument("rank mismatch in subdivide");
  g.check_valid();
  SubdivisionResult res;
  res.graph.rank = g.rank;
  res.graph.num_vertices = g.num_vertices;
  res.graph.basepoint = g.basepoint;
  res.num_old_vertices = g.num_vertices;
  for (const Edge& e : g.edges) {
    Letter y{e.label, false};
    bool pos_in = phi.acted_on.count(y) > 0;
    bool inv_in = phi.acted_on.count(y.inverse()) > 0;
    if (!pos_in && !inv_in) {
      res.graph.edges.push_back(e);
    } else if (pos_in && !inv_in) {
      int m = res.graph.num_vertices++;
      add_reading(res.graph, e.src, m, phi.acting);
      res.graph.edges.push_back(Edge{m, e.dst, e.label});
    } else if (!pos_in && inv_in) {
      int m = res.graph.num_vertices++;
      res.graph.edges.push_back(Edge{e.src, m, e.label});
      add_reading(res.graph, m, e.dst, phi.acting.inverse());
    } else {
      int m1 = res.graph.num_vertices++;
      int m2 = res.graph.num_vertices++;
      add_reading(res.graph, e.src, m1, phi.acting);
      res.graph.edges.push_back(Edge{m1, m2, e.label});
      add_reading(res.graph, m2, e.dst, phi.acting.inverse());
    }
  }
  return res;
}

LabeledGraph apply_whitehead_to_subgroup(const WhiteheadAutomorphism& phi,
                                         const LabeledGraph& core_h) {
  if (!core_h.is_folded() || !core_h.is_core())
    throw std::invalid_argument("apply_whitehead_to_subgroup needs a folded core graph");
  return core(fold(subdivide(phi, core_h).graph).first);
}

LabeledGraph apply_whitehead_to_pointed(const WhiteheadAutomorphism& phi,
                                        const LabeledGraph& g) {
  if (!g.basepoint) throw std::invalid_argument("pointed variant needs a basepoint");
  return pointed_core(fold(subdivide(phi, g).graph).first);
}

std::optional<TrichotomyReport> trichotomy(const WhiteheadAutomorphism& phi,
                                           const LabeledGraph& core_h) {
  if (!core_h.is_folded() || !core_h.is_core())
    throw std::invalid_argument("trichotomy needs a folded core graph");
  TrichotomyReport report;
  for (int v = 0; v < core_h.num_vertices; ++v) {
    LetterSet letters = core_h.letters_at(v);
    bool meets_a = std::any_of(letters.begin(), letters.end(),
                               [&](Letter l) { return phi.acted_on.count(l) > 0; });
    bool inside_a = std::all_of(letters.begin(), letters.end(),
                                [&](Letter l) { return phi.acted_on.count(l) > 0; });
    bool inside_a_plus = std::all_of(letters.begin(), letters.end(), [&](Letter l) {
      return phi.acted_on.count(l) > 0 || l == phi.acting;
    });
    if (!meets_a)
      report.cases.push_back(VertexCase::I);
    else if (inside_a)
      report.cases.push_back(VertexCase::II);
    else if (letters.count(phi.acting) && inside_a_plus)
      report.cases.push_back(VertexCase::III);
    else
      return std::nullopt;
  }
  report.case_iii_count =
      static_cast<int>(std::count(report.cases.begin(), report.cases.end(), VertexCase::III));
  return report;
}

LabeledGraph collapse_quotient(const WhiteheadAutomorphism& phi, const LabeledGraph& core_h,
                               const TrichotomyReport& report) {
  if (static_cast<int>(report.cases.size()) != core_h.num_vertices)
    throw std::invalid_argument("trichotomy report does not match graph");
  // select the unique a-edge going out of each case-III vertex
  std::vector<char> collapse(core_h.edges.size(), 0);
  for (int v = 0; v < core_h.num_vertices; ++v) {
    if (report.cases[static_cast<std::size_t>(v)] != VertexCase::III) continue;
    int found = -1;
    for (std::size_t i = 0; i < core_h.edges.size(); ++i) {
      const Edge& e = core_h.edges[i];
      if (e.label != phi.acting.gen) continue;
      bool out_at_v = phi.acting.inv ? (e.dst == v) : (e.src == v);
      if (out_at_v) {
        if (found >= 0) throw std::logic_error("case-III vertex with two outgoing a-edges");
        found = static_cast<int>(i);
      }
    }
    if (found < 0) throw std::logic_error("case-III vertex with no outgoing a-edge");
    collapse[static_cast<std::size_t>(found)] = 1;
  }
  // contract the selected edges
  std::vector<int> parent(static_cast<std::size_t>(core_h.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t i = 0; i < core_h.edges.size(); ++i)
    if (collapse[i])
      parent[static_cast<std::size_t>(find(core_h.edges[i].src))] = find(core_h.edges[i].dst);
  std::map<int, int> ids;
  for (int v = 0; v < core_h.num_vertices; ++v) ids.try_emplace(find(v), 0);
  int next = 0;
  for (auto& [root, id] : ids) id = next++;
  LabeledGraph out;
  out.rank = core_h.rank;
  out.num_vertices = next;
  for (std::size_t i = 0; i < core_h.edges.size(); ++i) {
    if (collapse[i]) continue;
    const Edge& e = core_h.edges[i];
    out.edges.push_back(Edge{ids[find(e.src)], ids[find(e.dst)], e.label});
  }
  return out;
}

std::string whitehead_graph_to_dot(const WhiteheadGraph& wg) {
  std::ostringstream out;
  out << "graph W {\n";
  for (int c = 0; c < 2 * wg.rank; ++c) {
    Letter l = Letter::from_code(c);
    out << "  " << (l.inv ? "X" : "x") << l.gen << ";\n";
  }
  for (const auto& [arc, mult] : wg.arcs) {
    for (int i = 0; i < mult; ++i) {
      out << "  " << (arc.first.inv ? "X" : "x") << arc.first.gen << " -- "
          << (arc.second.inv ? "X" : "x") << arc.second.gen << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ff
