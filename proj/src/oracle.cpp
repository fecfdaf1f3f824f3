#include "ff/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace ff {

AutomorphismBall enumerate_automorphisms(int rank, int radius) {
  if (rank < 1 || rank > 3) throw std::invalid_argument("enumerate_automorphisms: rank <= 3");
  if (radius < 0 || radius > 6)
    throw std::invalid_argument("enumerate_automorphisms: radius <= 6");
  AutomorphismBall ball;
  ball.rank = rank;
  ball.radius = radius;
  auto autos = all_whitehead_automorphisms(rank);
  std::set<std::vector<Word>> seen;
  std::vector<Automorphism> frontier{Automorphism::identity(rank)};
  seen.insert(frontier.front().images);
  ball.elements = frontier;
  for (int r = 0; r < radius; ++r) {
    std::vector<Automorphism> next;
    for (const Automorphism& psi : frontier) {
      for (const auto& phi : autos) {
        Automorphism composed = psi.then(phi);
        if (seen.insert(composed.images).second) {
          ball.elements.push_back(composed);
          next.push_back(std::move(composed));
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return ball;
}

OracleVerdict oracle_is_primitive(const Word& w, int radius) {
  Word start = free_reduce(w.letters, w.rank);
  if (start.trivial()) return OracleVerdict::UnknownAtRadius;
  const std::size_t max_len = start.length();
  if (max_len == 1) return OracleVerdict::True;
  auto autos = all_whitehead_automorphisms(w.rank);
  std::set<Word> seen{start};
  std::vector<Word> frontier{start};
  for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
    std::vector<Word> next;
    for (const Word& cur : frontier) {
      for (const auto& phi : autos) {
        std::vector<Letter> raw;
        for (Letter l : cur.letters) {
          auto piece = phi.image(l);
          raw.insert(raw.end(), piece.begin(), piece.end());
        }
        Word img = free_reduce(raw, w.rank);
        if (img.length() > max_len || img.trivial()) continue;
        if (img.length() == 1) return OracleVerdict::True;
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return OracleVerdict::UnknownAtRadius;
}

long abelianization_gcd(const Word& w) {
  std::vector<long> sums(static_cast<std::size_t>(w.rank), 0);
  for (Letter l : w.letters) sums[static_cast<std::size_t>(l.gen - 1)] += l.inv ? -1 : 1;
  long g = 0;
  for (long s : sums) g = std::gcd(g, s);
  return g;
}

std::vector<LabeledGraph> enumerate_core_graphs(int rank, int max_edges) {
  if (max_edges < 1) return {};
  if (max_edges > 8)
    throw std::invalid_argument("enumerate_core_graphs: bound too large for brute force");
  std::set<std::string> seen;
  std::deque<LabeledGraph> frontier;
  std::vector<LabeledGraph> out;
  auto offer = [&](LabeledGraph g) {
    if (!g.is_folded()) return;
    LabeledGraph c = canonicalize(g);
    if (!seen.insert(canonical_signature(c)).second) return;
    if (c.is_core()) out.push_back(c);
    if (c.num_edges() < max_edges) frontier.push_back(std::move(c));
  };
  for (int l = 1; l <= rank; ++l) {
    LabeledGraph loop{rank, 1, {Edge{0, 0, l}}, std::nullopt};
    offer(loop);
    LabeledGraph seg{rank, 2, {Edge{0, 1, l}}, std::nullopt};
    offer(seg);
  }
  while (!frontier.empty()) {
    LabeledGraph g = std::move(frontier.front());
    frontier.pop_front();
    for (int l = 1; l <= rank; ++l) {
      for (int s = 0; s <= g.num_vertices; ++s) {
        for (int d = 0; d <= g.num_vertices; ++d) {
          if (s == g.num_vertices && d == g.num_vertices) continue;  // disconnects
          LabeledGraph h = g;
          if (s == g.num_vertices || d == g.num_vertices) ++h.num_vertices;
          h.edges.push_back(Edge{s, d, l});
          offer(std::move(h));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_is_free_factor(const LabeledGraph& core_g) {
  core_g.check_valid();
  if (!core_g.is_folded() || !core_g.is_core() || !core_g.is_connected())
    throw std::invalid_argument("oracle_is_free_factor needs a connected folded core graph");
  const int rank = core_g.rank;
  const int bound = core_g.num_edges();
  auto autos = all_whitehead_automorphisms(rank);
  LabeledGraph start = canonicalize(core_g);
  if (start.num_vertices == 1) return true;
  std::set<std::string> seen{canonical_signature(start)};
  std::deque<LabeledGraph> frontier{start};
  while (!frontier.empty()) {
    LabeledGraph g = std::move(frontier.front());
    frontier.pop_front();
    LabeledGraph pointed = g;
    pointed.basepoint = 0;
    std::vector<Word> basis = spanning_basis(pointed);
    for (const auto& phi : autos) {
      std::vector<Word> images;
      for (const Word& w : basis) {
        std::vector<Letter> raw;
        for (Letter l : w.letters) {
          auto piece = phi.image(l);
          raw.insert(raw.end(), piece.begin(), piece.end());
        }
        images.push_back(free_reduce(raw, rank));
      }
      LabeledGraph next =
          canonicalize(subgroup_core_unpointed(SubgroupPresentation{rank, images}));
      if (next.num_edges() > bound) continue;
      if (next.num_vertices == 1) return true;
      if (seen.insert(canonical_signature(next)).second) frontier.push_back(std::move(next));
    }
  }
  return false;
}

namespace {

struct ClassTable {
  std::vector<LabeledGraph> classes;  // canonical cores of free factors
  std::vector<std::vector<int>> dist;  // all-pairs shortest paths (-1 = none)
};

const ClassTable& class_table(int rank, int bound) {
  static std::map<std::pair<int, int>, ClassTable> cache;
  auto it = cache.find({rank, bound});
  if (it != cache.end()) return it->second;
  ClassTable table;
  // vertices of the complex are classes of PROPER free factors: the whole
  // group must not appear as a shortcut middle
  for (const LabeledGraph& g : enumerate_core_graphs(rank, bound))
    if (g.cycle_rank() < rank && oracle_is_free_factor(g)) table.classes.push_back(g);
  const int n = static_cast<int>(table.classes.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const LabeledGraph& a = table.classes[static_cast<std::size_t>(i)];
      const LabeledGraph& b = table.classes[static_cast<std::size_t>(j)];
      if (!find_label_morphisms(a, b).empty() || !find_label_morphisms(b, a).empty()) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  table.dist.assign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& d = table.dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : adj[static_cast<std::size_t>(v)]) {
        if (d[static_cast<std::size_t>(u)] < 0) {
          d[static_cast<std::size_t>(u)] = d[static_cast<std::size_t>(v)] + 1;
          q.push_back(u);
        }
      }
    }
  }
  return cache.emplace(std::make_pair(rank, bound), std::move(table)).first->second;
}

}  // namespace

std::optional<int> oracle_distance(const FactorClass& c1, const FactorClass& c2,
                                   int complexity_bound) {
  if (c1.rank != c2.rank) throw std::invalid_argument("rank mismatch");
  if (c1.core_graph.num_edges() > complexity_bound ||
      c2.core_graph.num_edges() > complexity_bound)
    return std::nullopt;
  const ClassTable& table = class_table(c1.rank, complexity_bound);
  auto locate = [&](const LabeledGraph& g) -> int {
    auto it = std::lower_bound(table.classes.begin(), table.classes.end(), g);
    if (it == table.classes.end() || !(*it == g)) return -1;
    return static_cast<int>(it - table.classes.begin());
  };
  int i = locate(c1.core_graph), j = locate(c2.core_graph);
  if (i < 0 || j < 0) return std::nullopt;
  int d = table.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (d < 0) return std::nullopt;
  return d;
}

}  // namespace ff
