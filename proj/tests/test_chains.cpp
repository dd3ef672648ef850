#include <random>

#include "altcox/chains.hpp"
#include "doctest.h"

using namespace altcox;

namespace {

std::vector<std::string> rendered(const Chain& c, int level) {
  std::vector<std::string> out;
  for (const Word& w : c.rep_set(level).reps) out.push_back(render_word(w, c.presentation()));
  return out;
}

}  // namespace

TEST_CASE("type A lists") {
  const Chain car({Family::A, Variant::Carmichael, 4});
  CHECK(rendered(car, 4) == std::vector<std::string>{"1", "a3", "a3^2", "a2 a3^2", "a1 a3^2"});
  CHECK(rendered(car, 2) == std::vector<std::string>{"1", "a1", "a1^2"});

  const Chain bou({Family::A, Variant::Bourbaki, 4});
  CHECK(rendered(bou, 4) == std::vector<std::string>{"1", "R3", "R2 R3", "R1 R2 R3", "R1^2 R2 R3"});

  const Chain edge({Family::A, Variant::Edge, 5});
  CHECK(rendered(edge, 5) ==
        std::vector<std::string>{"1", "r4", "r2 r4", "r4^2", "r3 r4^2", "r1 r3 r4^2"});
}

TEST_CASE("type B base level is cyclic of order 4") {
  const Chain c({Family::B, Variant::Edge, 3});
  CHECK(c.rep_set(2).reps.size() == 4);
  CHECK(c.rep_set(3).reps.size() == 6);
  CHECK(c.regular().index == 24);
}

TEST_CASE("type D base level holds D3+") {
  const Chain c({Family::D, Variant::Edge, 4});
  CHECK(c.base_level() == 3);
  CHECK(c.rep_set(3).reps.size() == 12);
  CHECK(c.rep_set(4).reps.size() == 8);
  CHECK_THROWS_AS(c.rep_set(2), std::out_of_range);
  CHECK_THROWS_AS(Chain({Family::D, Variant::Edge, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Chain({Family::A, Variant::Coxeter, 3}), std::invalid_argument);
}

TEST_CASE("chains are sound") {
  for (Family f : {Family::A, Family::B, Family::D})
    for (Variant v : {Variant::Carmichael, Variant::Bourbaki, Variant::Edge})
      for (int n = chain_base(f); n <= 5; ++n) {
        const Chain c({f, v, n});
        CAPTURE(to_string(f));
        CAPTURE(to_string(v));
        CAPTURE(n);
        CHECK(c.validate().empty());
      }
}

TEST_CASE("normal forms cover each element once") {
  for (Family f : {Family::A, Family::B, Family::D}) {
    const Chain c({f, Variant::Edge, 4});
    const auto elems = c.enumerate_elements();
    CHECK(elems.size() == c.regular().index);
    CHECK(c.distinct_products(elems) == elems.size());
    // Decomposing a normal form returns the same factors.
    for (const auto& e : elems) CHECK(c.decompose(e.product()).factors == e.factors);
  }
}

TEST_CASE("decomposition of random words") {
  const Chain c({Family::A, Variant::Edge, 5});
  const auto& t = c.regular();
  const Word w = parse_word("r1 r2 r1", c.presentation());
  CHECK(coset_of(t, c.decompose(w).product()) == coset_of(t, w));
  std::mt19937 rng(2);
  for (int k = 0; k < 200; ++k) {
    Word u;
    for (int j = 0; j < 15; ++j) u.push_back(Letter({static_cast<std::uint32_t>(rng() % 4)}, rng() % 2 != 0));
    const ChainDecomposition d = c.decompose(u);
    CHECK(d.factors.size() == 4);
    CHECK(coset_of(t, d.product()) == coset_of(t, u));
  }
}

TEST_CASE("enumeration cap") {
  const Chain c({Family::A, Variant::Edge, 6});
  CHECK(c.enumerate_elements().size() == 2520);
  CHECK_THROWS_AS(c.enumerate_elements(100), std::length_error);
}

TEST_CASE("free-function wrappers") {
  const ChainSpec s{Family::B, Variant::Carmichael, 3};
  CHECK(rep_set(s, 3).reps.size() == 6);
  CHECK(enumerate_elements(s).size() == 24);
  CHECK(decompose(s, Word{}).product().empty());
}
