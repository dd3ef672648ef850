#include <random>

#include "altcox/kernels.hpp"
#include "altcox/presentations.hpp"
#include "altcox/tc.hpp"
#include "doctest.h"

using namespace altcox;

TEST_CASE("parallel kernels match the serial reference") {
  const Presentation p = chain_presentation(Family::A, Variant::Edge, 6);
  const EnumerationResult r = enumerate(p, {});
  REQUIRE(r.index == 2520);
  std::mt19937 rng(5);
  std::vector<Word> words(5000);
  for (Word& w : words) {
    const int len = static_cast<int>(rng() % 20);
    for (int k = 0; k < len; ++k)
      w.push_back(Letter({static_cast<std::uint32_t>(rng() % p.rank())}, rng() % 2 != 0));
  }
  for (CosetId start : {0, 17, 2519}) {
    const auto a = kernels::trace_words_serial(r.table, words, start);
    const auto b = kernels::trace_words_parallel(r.table, words, start);
    CHECK(a == b);
  }
  CHECK(kernels::relators_close_serial(r.table, p.relators()));
  CHECK(kernels::relators_close_parallel(r.table, p.relators()));
  CHECK(kernels::max_threads() >= 1);
}

TEST_CASE("relators that do not close are reported") {
  const Presentation p = chain_presentation(Family::A, Variant::Edge, 4);
  const EnumerationResult r = enumerate(p, {});
  const std::vector<Word> bad{Word{pos({0})}};
  CHECK_FALSE(kernels::relators_close_serial(r.table, bad));
  CHECK_FALSE(kernels::relators_close_parallel(r.table, bad));
}

TEST_CASE("count distinct") {
  CHECK(kernels::count_distinct({}) == 0);
  CHECK(kernels::count_distinct({3, 1, 3, 2, 1}) == 3);
}
