#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ff/whitehead_aut.hpp"

using namespace ff;

namespace {

WhiteheadAutomorphism aut(const std::string& text, int rank) {
  return parse_automorphism(text, rank);
}

}  // namespace

TEST_CASE("construction rejects the acting letter inside A") {
  CHECK_THROWS_AS(WhiteheadAutomorphism(2, Letter{1, false}, LetterSet{Letter{1, false}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WhiteheadAutomorphism(2, Letter{1, false}, LetterSet{Letter{1, true}}),
                  std::invalid_argument);
}

TEST_CASE("letter images follow the membership rule") {
  WhiteheadAutomorphism phi = aut("({y,Z},x)", 3);
  CHECK(phi.image(Letter{1, false}) == std::vector<Letter>{Letter{1, false}});
  // y in A: left-multiply by x
  CHECK(phi.image(Letter{2, false}) ==
        std::vector<Letter>{Letter{1, false}, Letter{2, false}});
  // z with z-bar in A: right-multiply by x-bar
  CHECK(phi.image(Letter{3, false}) ==
        std::vector<Letter>{Letter{3, false}, Letter{1, true}});
  // images of inverse letters invert the images
  for (int c = 0; c < 6; ++c) {
    Letter l = Letter::from_code(c);
    auto img = phi.image(l);
    auto inv_img = phi.image(l.inverse());
    std::vector<Letter> rev;
    for (auto it = img.rbegin(); it != img.rend(); ++it) rev.push_back(it->inverse());
    CHECK(inv_img == rev);
  }
}

TEST_CASE("worked example: one inserted letter survives") {
  // ({x-bar}, y) applied to xyxyxYz gives xxxYYz with a single survivor
  WhiteheadAutomorphism phi = aut("({X},y)", 3);
  CyclicWord w = cyclic_reduce(parse_word("xyxyxYz", 3)).first;
  auto [image, surviving] = marked_cyclic_reduce(apply_whitehead_to_word(phi, w));
  CHECK(image == cyclic_reduce(parse_word("xxxYYz", 3)).first);
  CHECK(surviving == 1);
  CHECK_FALSE(is_fine_on_word(phi, w));
}

TEST_CASE("a fine action cancels every inserted letter") {
  // ({Y}, x): y -> y x-bar, so the cyclic word xy becomes y
  WhiteheadAutomorphism phi = aut("({Y},x)", 2);
  CyclicWord w = cyclic_reduce(parse_word("xy", 2)).first;
  auto [image, surviving] = marked_cyclic_reduce(apply_whitehead_to_word(phi, w));
  CHECK(surviving == 0);
  CHECK(is_fine_on_word(phi, w));
  CHECK(image.length() < w.length());
}

TEST_CASE("whitehead automorphisms are automorphisms") {
  std::mt19937 rng(7);
  auto autos = all_whitehead_automorphisms(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& phi = autos[rng() % autos.size()];
    Automorphism fwd = as_automorphism(phi);
    Automorphism bwd = as_automorphism(invert_whitehead(phi));
    CHECK(fwd.then(bwd) == Automorphism::identity(3));
    CHECK(bwd.then(fwd) == Automorphism::identity(3));
  }
}

TEST_CASE("conjugation identity") {
  // (A,a) equals conjugation-by-a composed with the complementary automorphism
  auto autos = all_whitehead_automorphisms(3);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& phi = autos[rng() % autos.size()];
    auto [a, comp] = conjugation_identity(phi);
    CHECK(a == phi.acting);
    Automorphism lhs = as_automorphism(phi);
    Automorphism rhs = as_automorphism(comp);
    for (int g = 1; g <= 3; ++g) {
      Word x{3, {Letter{g, false}}};
      Word conj = concat(concat(Word{3, {a}}, rhs.apply(x)), Word{3, {a.inverse()}});
      CHECK(lhs.apply(x) == conj);
    }
  }
}

TEST_CASE("enumeration counts acting letters times nonempty subsets") {
  CHECK(all_whitehead_automorphisms(2).size() == 4 * 3);   // 2n * (2^(2n-2)-1)
  CHECK(all_whitehead_automorphisms(3).size() == 6 * 15);
}

TEST_CASE("text round trip") {
  for (const auto& phi : all_whitehead_automorphisms(2)) {
    WhiteheadAutomorphism back = parse_automorphism(automorphism_to_string(phi), 2);
    CHECK(back == phi);
  }
  CHECK_THROWS_AS((void)parse_automorphism("({x},x)", 2), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_automorphism("bogus", 2), std::invalid_argument);
}

TEST_CASE("marked linear reduction keeps endpoints") {
  // linear (free) reduction does not cancel across the word boundary
  WhiteheadAutomorphism phi = aut("({y},x)", 2);
  Word w = parse_word("yX", 2);
  auto [image, surviving] = marked_free_reduce(apply_whitehead_to_linear_word(phi, w));
  CHECK(image == parse_word("xyX", 2));
  CHECK(surviving == 1);
  CHECK_FALSE(is_fine_on_linear_word(phi, w));
}

TEST_CASE("composition applies factors left to right") {
  WhiteheadAutomorphism f = aut("({y},x)", 2);  // y -> xy
  WhiteheadAutomorphism g = aut("({x},y)", 2);  // x -> yx
  Automorphism both = compose({f, g}, 2);
  // x -> yx, y -> (yx)(y)... g(f(y)) = g(xy) = yx y
  CHECK(both.apply(parse_word("y", 2)) == parse_word("yxy", 2));
  CHECK(both.apply(parse_word("x", 2)) == parse_word("yx", 2));
}
