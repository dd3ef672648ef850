#include <random>

#include "altcox/words.hpp"
#include "doctest.h"

using namespace altcox;

namespace {

Presentation abc() { return Presentation({"a", "b", "c"}, {}); }

Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
  Word w;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(Letter({static_cast<std::uint32_t>(rng() % rank)}, rng() % 2 == 1));
  return w;
}

}  // namespace

TEST_CASE("letters encode generator and inverse") {
  const Letter l(GeneratorId{3}, true);
  CHECK(l.code() == 7);
  CHECK(l.gen().index == 3);
  CHECK(l.inverse());
  CHECK((~l).code() == 6);
  CHECK(~~l == l);
}

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  const Presentation p = abc();
  CHECK(free_reduce(parse_word("a b b^-1 a^-1 c", p)) == parse_word("c", p));
  CHECK(free_reduce(parse_word("a a^-1", p)).empty());
  CHECK(free_reduce(parse_word("a b a", p)) == parse_word("a b a", p));
}

TEST_CASE("parse and render") {
  const Presentation p = abc();
  CHECK(parse_word("a^3 b^-2 c", p).size() == 6);
  CHECK(render_word(parse_word("a a a b^-1 b^-1", p), p) == "a^3 b^-2");
  CHECK(render_word(Word{}, p) == "1");
  CHECK(parse_word("1", p).empty());
  CHECK(parse_word("a^+2", p) == parse_word("a a", p));
  CHECK_THROWS_AS(parse_word("d", p), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a^x", p), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a^", p), std::invalid_argument);
}

TEST_CASE("word properties on random words") {
  std::mt19937 rng(7);
  const Presentation p = abc();
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, 3, 12);
    const Word v = random_word(rng, 3, 12);
    CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
    CHECK(parse_word(render_word(w, p), p) == w);
    CHECK(word_invert(word_invert(w)) == w);
    CHECK(free_reduce(w * word_invert(w)).empty());
    CHECK(word_invert(w * v) == word_invert(v) * word_invert(w));
  }
}

TEST_CASE("powers and commutators") {
  const Presentation p = abc();
  const Word a = p.gen("a");
  const Word b = p.gen("b");
  CHECK(a.pow(0).empty());
  CHECK(a.pow(-2) == parse_word("a^-2", p));
  CHECK(commutator(a, b) == parse_word("a b a^-1 b^-1", p));
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Presentation({""}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Presentation({"a"}, {Word::of({1})}), std::invalid_argument);
}

TEST_CASE("central generators get their power and commutator relators") {
  const Presentation p({"x", "z"}, {Word::of({0}).pow(3)}, {{GeneratorId{1}, 2}});
  REQUIRE(p.relators().size() == 3);
  CHECK(render_word(p.relators()[1], p) == "z^2");
  CHECK(render_word(p.relators()[2], p) == "z x z^-1 x^-1");
  // Given relators are not duplicated.
  const Presentation q({"x", "z"}, {Word::of({1}).pow(2)}, {{GeneratorId{1}, 2}});
  CHECK(q.relators().size() == 2);
}

TEST_CASE("json round trip") {
  const Presentation p({"x", "z"}, {Word::of({0}).pow(3)}, {{GeneratorId{1}, 2}});
  const auto j = to_json(p);
  CHECK(presentation_from_json(j) == p);
  CHECK(j.dump() == to_json(presentation_from_json(j)).dump());
  CHECK_THROWS(presentation_from_json(nlohmann::json::object()));
}

TEST_CASE("involutions are detected from g^2 relators") {
  const Presentation p({"s", "t"}, {Word::of({0}).pow(2), Word::of({1}).pow(3)});
  CHECK(p.involutions() == std::vector<bool>{true, false});
}
