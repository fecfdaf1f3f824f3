#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ff/graphs.hpp"

using namespace ff;

namespace {

SubgroupPresentation gens_of(std::initializer_list<const char*> words, int rank) {
  SubgroupPresentation g{rank, {}};
  for (const char* w : words) g.generators.push_back(parse_word(w, rank));
  return g;
}

LabeledGraph random_graph(std::mt19937& rng, int rank, int max_v, int max_e) {
  LabeledGraph g;
  g.rank = rank;
  g.num_vertices = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_v));
  int edges = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_e));
  for (int i = 0; i < edges; ++i) {
    g.edges.push_back(Edge{static_cast<int>(rng() % static_cast<unsigned>(g.num_vertices)),
                           static_cast<int>(rng() % static_cast<unsigned>(g.num_vertices)),
                           1 + static_cast<int>(rng() % static_cast<unsigned>(rank))});
  }
  g.basepoint = 0;
  return g;
}

std::map<int, int> label_histogram(const FoldTrace& t) {
  std::map<int, int> h;
  for (const FoldStep& s : t.steps) ++h[s.label];
  return h;
}

int rank_preserving_count(const FoldTrace& t) {
  int n = 0;
  for (const FoldStep& s : t.steps)
    if (s.rank_preserving) ++n;
  return n;
}

}  // namespace

TEST_CASE("graph_from_words builds subdivided loops at the basepoint") {
  LabeledGraph g = graph_from_words(gens_of({"xy", "z"}, 3));
  CHECK(g.basepoint == 0);
  CHECK(g.num_vertices == 2);  // basepoint + one mid vertex on the xy loop
  CHECK(g.num_edges() == 3);
  CHECK(g.is_connected());
  g.check_valid();
}

TEST_CASE("folding a bouquet of distinct letters is a no-op") {
  LabeledGraph g = graph_from_words(gens_of({"x", "y"}, 2));
  auto [folded, trace] = fold(g);
  CHECK(trace.steps.empty());
  CHECK(folded.num_vertices == 1);
  CHECK(folded.num_edges() == 2);
  CHECK(folded.is_folded());
}

TEST_CASE("folding merges equal-label edges and tracks rank preservation") {
  // <x, x> folds to a single loop; the fold merges two distinct far ends
  LabeledGraph g = graph_from_words(gens_of({"xy", "xz"}, 3));
  auto [folded, trace] = fold(g);
  CHECK(folded.is_folded());
  CHECK(folded.cycle_rank() == 2);
  for (const FoldStep& s : trace.steps) CHECK(s.rank_preserving);
}

TEST_CASE("fold confluence: any fold order gives the same graph and counts") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    LabeledGraph g = random_graph(rng, 2 + static_cast<int>(rng() % 2), 5, 8);
    auto [base, base_trace] = fold(g);
    for (int order = 0; order < 5; ++order) {
      std::mt19937 order_rng(order * 97 + trial);
      auto chooser = [&order_rng](std::size_t k) { return order_rng() % k; };
      auto [other, other_trace] = fold_with_chooser(g, chooser);
      CHECK(other == base);
      CHECK(label_histogram(other_trace) == label_histogram(base_trace));
      CHECK(rank_preserving_count(other_trace) == rank_preserving_count(base_trace));
    }
  }
}

TEST_CASE("fold preserves euler characteristic through rank-preserving steps") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    LabeledGraph g = random_graph(rng, 3, 4, 6);
    auto [folded, trace] = fold(g);
    int non_preserving = static_cast<int>(trace.steps.size()) - rank_preserving_count(trace);
    // every fold removes one edge and (if rank-preserving) one vertex
    CHECK(g.num_edges() - static_cast<int>(trace.steps.size()) == folded.num_edges());
    CHECK(g.num_vertices - rank_preserving_count(trace) == folded.num_vertices);
    CHECK(folded.cycle_rank() == g.cycle_rank() - non_preserving);
  }
}

TEST_CASE("core trims hanging trees and rejects trees") {
  LabeledGraph g = graph_from_words(gens_of({"xyX"}, 2));
  auto folded = fold(g).first;
  LabeledGraph c = core(folded);
  CHECK(c.is_core());
  CHECK(c.num_vertices == 1);
  CHECK(c.num_edges() == 1);  // the y loop survives, conjugator trimmed
  LabeledGraph tree{2, 2, {Edge{0, 1, 1}}, std::nullopt};
  CHECK_THROWS_AS((void)core(tree), std::domain_error);
}

TEST_CASE("pointed core keeps the basepoint arc") {
  LabeledGraph pc = subgroup_core(gens_of({"xyX"}, 2));
  CHECK(pc.basepoint == 0);
  CHECK(pc.num_vertices == 2);  // basepoint, then the y-loop vertex
  CHECK(pc.num_edges() == 2);
  LabeledGraph un = subgroup_core_unpointed(gens_of({"xyX"}, 2));
  CHECK(un.num_vertices == 1);
  CHECK(un.num_edges() == 1);
}

TEST_CASE("worked subgroup core: rank-4 pair of generators") {
  // core of <t y x^-2, x y^-1 x z t> has 7 vertices and 8 edges
  LabeledGraph c = subgroup_core_unpointed(gens_of({"tyXX", "xYxzt"}, 4));
  CHECK(c.num_vertices == 7);
  CHECK(c.num_edges() == 8);
  CHECK(c.is_folded());
  CHECK(c.is_core());
  CHECK(c.cycle_rank() == 2);
}

TEST_CASE("spanning basis regenerates the same subgroup") {
  auto gens = gens_of({"xy", "zzy"}, 3);
  LabeledGraph c = subgroup_core(gens);
  std::vector<Word> basis = spanning_basis(c);
  CHECK(basis.size() == static_cast<std::size_t>(c.cycle_rank()));
  SubgroupPresentation again{3, basis};
  CHECK(graphs_isomorphic(subgroup_core_unpointed(again), subgroup_core_unpointed(gens)));
}

TEST_CASE("pullback finds intersections") {
  LabeledGraph a = subgroup_core(gens_of({"x", "y"}, 3));
  LabeledGraph b = subgroup_core(gens_of({"y", "z"}, 3));
  CHECK(has_nontrivial_cycle(pullback(a, b)));
  LabeledGraph c = subgroup_core(gens_of({"x"}, 3));
  LabeledGraph d = subgroup_core(gens_of({"y"}, 3));
  CHECK_FALSE(has_nontrivial_cycle(pullback(c, d)));
}

TEST_CASE("label morphisms embed smaller cores into larger ones") {
  LabeledGraph small = subgroup_core_unpointed(gens_of({"xy"}, 3));
  LabeledGraph big = subgroup_core_unpointed(gens_of({"x", "y"}, 3));
  CHECK_FALSE(find_label_morphisms(small, big).empty());
  LabeledGraph other = subgroup_core_unpointed(gens_of({"z"}, 3));
  CHECK(find_label_morphisms(other, big).empty());
}

TEST_CASE("canonical signatures characterize isomorphism") {
  LabeledGraph a = subgroup_core_unpointed(gens_of({"xy"}, 2));
  LabeledGraph b = subgroup_core_unpointed(gens_of({"yx"}, 2));
  CHECK(graphs_isomorphic(a, b));
  CHECK(canonical_signature(a) == canonical_signature(b));
  CHECK(canonicalize(a) == canonicalize(b));
  LabeledGraph c = subgroup_core_unpointed(gens_of({"xY"}, 2));
  CHECK_FALSE(graphs_isomorphic(a, c));
}

TEST_CASE("canonicalize is idempotent and label-preserving") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    LabeledGraph g = random_graph(rng, 3, 4, 6);
    LabeledGraph folded = fold(g).first;
    folded.basepoint.reset();
    if (!folded.is_connected()) continue;
    LabeledGraph c = canonicalize(folded);
    CHECK(canonicalize(c) == c);
    CHECK(graphs_isomorphic(c, folded));
  }
}

TEST_CASE("core_subgraphs lists connected core pieces") {
  LabeledGraph rose = subgroup_core_unpointed(gens_of({"x", "y"}, 2));
  auto subs = core_subgraphs(rose);
  // x-loop, y-loop, both loops
  CHECK(subs.size() == 3);
  for (const LabeledGraph& s : subs) {
    CHECK(s.is_core());
    CHECK(s.is_connected());
  }
}

TEST_CASE("presentation validation") {
  SubgroupPresentation empty{2, {}};
  CHECK_THROWS_AS(empty.check_valid(), std::invalid_argument);
  SubgroupPresentation trivial{2, {Word{2, {}}}};
  CHECK_THROWS_AS(trivial.check_valid(), std::invalid_argument);
}
