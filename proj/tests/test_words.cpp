#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ff/words.hpp"

using namespace ff;

TEST_CASE("letter codes are dense and invertible") {
  for (int c = 0; c < 8; ++c) {
    Letter l = Letter::from_code(c);
    CHECK(l.code() == c);
    CHECK(l.inverse().inverse() == l);
    CHECK(l.inverse().gen == l.gen);
    CHECK(l.inverse().inv != l.inv);
  }
  CHECK(Letter{1, false}.code() == 0);
  CHECK(Letter{1, true}.code() == 1);
  CHECK(Letter{2, false}.code() == 2);
}

TEST_CASE("letter text round trip") {
  CHECK(letter_to_string(Letter{1, false}, 3) == "x");
  CHECK(letter_to_string(Letter{1, true}, 3) == "X");
  CHECK(letter_to_string(Letter{3, false}, 3) == "z");
  CHECK(letter_from_char('a') == Letter{1, false});
  CHECK(letter_from_char('B') == Letter{2, true});
  CHECK(letter_from_char('x', 3) == Letter{1, false});
  CHECK(letter_from_char('Z', 3) == Letter{3, true});
  CHECK(letter_from_char('x', 26) == Letter{24, false});
}

TEST_CASE("all_letters enumerates 2n letters in code order") {
  LetterSet ls = all_letters(3);
  CHECK(ls.size() == 6);
  int expect = 0;
  for (Letter l : ls) CHECK(l.code() == expect++);
}

TEST_CASE("free reduction") {
  Word w = parse_word("xXyYz", 3);
  CHECK(word_to_string(w) == "z");
  CHECK(parse_word("xyYX", 3).trivial());
  CHECK(word_to_string(parse_word("xyYX", 3)) == "1");
  // idempotent
  Word r = free_reduce(w.letters, 3);
  CHECK(r == w);
}

TEST_CASE("parse accepts verbose syntax when digits appear") {
  Word w = parse_word("x1 x2^-1 x3", 3);
  CHECK(word_to_string(w) == "xYz");
  CHECK(parse_word("x2^-1", 2) == parse_word("Y", 2));
}

TEST_CASE("parse rejects out-of-range letters") {
  CHECK_THROWS_AS((void)parse_word("xyz", 2), std::invalid_argument);
}

TEST_CASE("inverse and concat") {
  Word w = parse_word("xYz", 3);
  CHECK(word_to_string(w.inverse()) == "ZyX");
  CHECK(concat(w, w.inverse()).trivial());
  CHECK(word_to_string(concat(parse_word("xy", 2), parse_word("Yx", 2))) == "xx");
}

TEST_CASE("cyclic reduction peels conjugating ends") {
  auto [cyc, conj] = cyclic_reduce(parse_word("zxyZ", 3));
  CHECK(word_to_string(conj) == "z");
  CHECK(cyc.length() == 2);
  // w == conj * cyc * conj^-1
  Word rebuilt = concat(concat(conj, cyc.as_word()), conj.inverse());
  CHECK(rebuilt == parse_word("zxyZ", 3));
}

TEST_CASE("cyclic words compare as conjugacy classes of rotations") {
  CyclicWord a = cyclic_reduce(parse_word("xy", 2)).first;
  CyclicWord b = cyclic_reduce(parse_word("yx", 2)).first;
  CHECK(a == b);
  CyclicWord c = cyclic_reduce(parse_word("xY", 2)).first;
  CHECK(a != c);
}

TEST_CASE("canonical rotation is the least rotation") {
  std::vector<Letter> rot = canonical_rotation(parse_word("yxz", 3).letters);
  CHECK(rot == parse_word("xzy", 3).letters);
}

TEST_CASE("make_cyclic guards against non-cyclically-reduced input") {
  CHECK_THROWS_AS((void)make_cyclic(parse_word("xyX", 3)), std::invalid_argument);
  CHECK(make_cyclic(parse_word("xy", 2)).length() == 2);
}
