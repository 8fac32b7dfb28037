#include <doctest.h>

#include "freehopf/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("alphabet declaration parses and sorts letters") {
  Alphabet a = alpha("g:G, b:L,a:L");
  CHECK(a.size() == 3);
  CHECK(a.declaration() == "a:L,b:L,g:G");
  CHECK(a.letter('g').group_like());
  CHECK(a.letter('a').primitive());
  CHECK(a.has_group_like());
  CHECK(a == alpha("a:L,b:L,g:G"));
  CHECK_FALSE(a == alpha("a:L,b:G,g:G"));
  CHECK(alpha("a:L,b:L").all_primitive());
}

TEST_CASE("malformed alphabet declarations are rejected") {
  CHECK_THROWS_AS(alpha(""), ParseError);
  CHECK_THROWS_AS(alpha("ab:L"), ParseError);
  CHECK_THROWS_AS(alpha("a:L,a:G"), ParseError);
  CHECK_THROWS_AS(alpha("a:X"), ParseError);
  CHECK_THROWS_AS(alpha("a"), ParseError);
  CHECK_THROWS_AS(alpha("1:L"), ParseError);
  CHECK_THROWS_AS(alpha("+:L"), ParseError);
  CHECK_THROWS_AS(alpha(".:L"), ParseError);
  CHECK_THROWS_AS(alpha("a:L,"), ParseError);

  try {
    alpha("a:L,bc:G");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("conc juxtaposes words") {
  Alphabet a = alpha("a:L,b:L");
  CHECK(conc(word(a, "ab"), word(a, "ba")).symbols() == "abba");
  CHECK(conc(Word(a), word(a, "ab")) == word(a, "ab"));
  CHECK(conc(word(a, "a"), Word(a)) == word(a, "a"));
  CHECK(conc(word(a, "ab"), word(a, "b")).length() == 3);
  CHECK_THROWS_AS(conc(word(a, "a"), word(alpha("a:G"), "a")), DomainError);
  CHECK_THROWS_AS(Word(a, "ac"), DomainError);
}

TEST_CASE("word enumeration is length-lex and complete") {
  Alphabet a = alpha("b:L,a:L,g:G");
  auto words = words_up_to(a, 5);
  CHECK(words.size() == 1 + 3 + 9 + 27 + 81 + 243);
  CHECK(words[0].empty());
  CHECK(words[1].symbols() == "a");
  CHECK(words[3].symbols() == "g");
  CHECK(words[4].symbols() == "aa");
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
}

TEST_CASE("subword and reverse") {
  Alphabet a = alpha("a:L,b:L,g:G");
  Word w = word(a, "agb");
  CHECK(w.subword({0, 2}).symbols() == "ab");
  CHECK(w.subword({}).empty());
  CHECK(w.reversed().symbols() == "bga");
  CHECK(Word(a).str() == "1");
}
