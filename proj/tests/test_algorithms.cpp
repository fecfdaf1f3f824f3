#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ff/algorithms.hpp"

using namespace ff;

namespace {

SubgroupPresentation gens_of(std::initializer_list<const char*> words, int rank) {
  SubgroupPresentation g{rank, {}};
  for (const char* w : words) g.generators.push_back(parse_word(w, rank));
  return g;
}

CyclicWord cyc(const char* text, int rank) {
  return cyclic_reduce(parse_word(text, rank)).first;
}

}  // namespace

TEST_CASE("whitehead_step shortens a primitive word finely") {
  CyclicWord w = cyc("xy", 2);
  auto step = whitehead_step(w);
  REQUIRE(step.has_value());
  CHECK(step->second.length() < w.length());
  CHECK(is_fine_on_word(step->first, w));
}

TEST_CASE("whitehead_step is absent for the commutator") {
  CHECK_FALSE(whitehead_step(cyc("xyXY", 2)).has_value());
}

TEST_CASE("whitehead_step rejects short words") {
  CHECK_THROWS_AS((void)whitehead_step(cyc("x", 2)), std::invalid_argument);
}

TEST_CASE("is_primitive basic verdicts") {
  CHECK(is_primitive(parse_word("x", 2)).primitive);
  CHECK(is_primitive(parse_word("xy", 2)).primitive);
  CHECK(is_primitive(parse_word("xxy", 2)).primitive);
  CHECK_FALSE(is_primitive(parse_word("xx", 2)).primitive);
  CHECK_FALSE(is_primitive(parse_word("xyXY", 2)).primitive);
  CHECK_THROWS_AS((void)is_primitive(parse_word("xX", 2)), std::invalid_argument);
}

TEST_CASE("primitivity certificate replays to the terminal word") {
  Word w = parse_word("yxyxyXz", 3);
  PrimitivityResult r = is_primitive(w);
  Automorphism replay = compose(r.certificate.steps, 3);
  CyclicWord end = cyclic_reduce(replay.apply(w)).first;
  CHECK(end == std::get<CyclicWord>(r.certificate.terminal));
  if (r.primitive) CHECK(end.length() == 1);
  CHECK_FALSE(certificate_to_string(r.certificate).empty());
}

TEST_CASE("is_free_factor accepts standard and worked examples") {
  FreeFactorResult r = is_free_factor(gens_of({"x", "y"}, 3));
  CHECK(r.free_factor);
  CHECK(std::get<LabeledGraph>(r.certificate.terminal).num_vertices == 1);
  CHECK(is_free_factor(gens_of({"tyXX", "xYxzt"}, 4)).free_factor);
}

TEST_CASE("is_free_factor rejects non-factors") {
  CHECK_FALSE(is_free_factor(gens_of({"xx"}, 2)).free_factor);
  CHECK_FALSE(is_free_factor(gens_of({"y", "xyX"}, 2)).free_factor);
  CHECK_FALSE(is_free_factor(gens_of({"xyXY"}, 2)).free_factor);
}

TEST_CASE("free factor certificate replays step by step") {
  SubgroupPresentation gens = gens_of({"tyXX", "xYxzt"}, 4);
  FreeFactorResult r = is_free_factor(gens);
  REQUIRE(r.free_factor);
  LabeledGraph current = subgroup_core_unpointed(gens);
  for (const WhiteheadAutomorphism& phi : r.certificate.steps) {
    LabeledGraph next = apply_whitehead_to_subgroup(phi, current);
    CHECK(next.num_vertices < current.num_vertices);
    CHECK(next.num_edges() < current.num_edges());
    current = next;
  }
  CHECK(graphs_isomorphic(current, std::get<LabeledGraph>(r.certificate.terminal)));
}

TEST_CASE("relative step fixes the distinguished letters and shortens the word") {
  Word w = parse_word("zy", 3);
  WhiteheadAutomorphism phi = relative_whitehead_step(w, 1);
  CHECK(phi.image(Letter{1, false}) == std::vector<Letter>{Letter{1, false}});
  Word image = as_automorphism(phi).apply(w);
  CHECK(image.length() < w.length());
  CHECK(is_fine_on_linear_word(phi, w));
}

TEST_CASE("relative step on a longer word in rank 3") {
  Word w = parse_word("zyx", 3);
  WhiteheadAutomorphism phi = relative_whitehead_step(w, 1);
  CHECK(phi.image(Letter{1, false}) == std::vector<Letter>{Letter{1, false}});
  CHECK(as_automorphism(phi).apply(w).length() < w.length());
}

TEST_CASE("relative step validates k") {
  Word w = parse_word("yx", 2);
  CHECK_THROWS_AS((void)relative_whitehead_step(w, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)relative_whitehead_step(w, 3), std::invalid_argument);
}

TEST_CASE("relative subgroup step shrinks the pointed core while fixing x1..xk") {
  SubgroupPresentation extra = gens_of({"zy"}, 3);
  WhiteheadAutomorphism phi = relative_whitehead_step_subgroup(extra, 1);
  CHECK(phi.image(Letter{1, false}) == std::vector<Letter>{Letter{1, false}});
  SubgroupPresentation combined = gens_of({"x", "zy"}, 3);
  LabeledGraph before = subgroup_core(combined);
  LabeledGraph after = apply_whitehead_to_pointed(phi, before);
  CHECK(after.num_edges() < before.num_edges());
}

TEST_CASE("z word base cases") {
  Word z1 = build_z_word(1);
  CHECK(z1.rank == 1);
  CHECK(z1.letters == std::vector<Letter>{Letter{1, false}, Letter{1, false}});
  Word z2 = build_z_word(2);
  CHECK(z2.rank == 2);
  CHECK_FALSE(z2.trivial());
}

TEST_CASE("z word joins every pair of letter vertices") {
  for (int k = 1; k <= 3; ++k) {
    Word z = build_z_word(k);
    WhiteheadGraph wg = whitehead_graph_of_word(cyclic_reduce(z).first);
    LetterSet all = all_letters(k);
    for (Letter u : all)
      for (Letter v : all)
        if (u.code() < v.code()) CHECK(wg.arc_count(u, v) >= 1);
  }
}

TEST_CASE("witness search recognizes free factors") {
  WitnessResult r = find_nonprimitive_witness(gens_of({"x", "y"}, 3));
  CHECK(r.outcome == WitnessOutcome::IsFreeFactor);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("witness search finds a proper power witness") {
  WitnessResult r = find_nonprimitive_witness(gens_of({"xx"}, 2));
  REQUIRE(r.outcome == WitnessOutcome::WitnessFound);
  CHECK(*r.witness == parse_word("xx", 2));
  CHECK_FALSE(is_primitive(*r.witness).primitive);
  CHECK(is_primitive(*r.witness_in_h).primitive);
}

TEST_CASE("witness search on a rank-2 non-factor of the rank-2 group") {
  WitnessResult r = find_nonprimitive_witness(gens_of({"y", "xyX"}, 2));
  REQUIRE(r.outcome == WitnessOutcome::WitnessFound);
  CHECK_FALSE(is_primitive(*r.witness).primitive);
  CHECK(is_primitive(*r.witness_in_h).primitive);
}
