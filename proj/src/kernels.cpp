#include "altcox/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace altcox::kernels {

std::vector<CosetId> trace_words_serial(const CosetTable& t, const std::vector<Word>& words,
                                        CosetId start) {
  std::vector<CosetId> out(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) out[k] = t.apply(words[k], start);
  return out;
}

std::vector<CosetId> trace_words_parallel(const CosetTable& t, const std::vector<Word>& words,
                                          CosetId start) {
  std::vector<CosetId> out(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] = t.apply(words[static_cast<std::size_t>(k)], start);
  return out;
}

namespace {

bool closes_at(const CosetTable& t, const Word& r, CosetId c) { return t.apply(r, c) == c; }

}  // namespace

bool relators_close_serial(const CosetTable& t, const std::vector<Word>& relators) {
  const auto n = static_cast<CosetId>(t.num_cosets());
  for (CosetId c = 0; c < n; ++c)
    for (const Word& r : relators)
      if (!closes_at(t, r, c)) return false;
  return true;
}

bool relators_close_parallel(const CosetTable& t, const std::vector<Word>& relators) {
  const auto n = static_cast<CosetId>(t.num_cosets());
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (CosetId c = 0; c < n; ++c)
    for (const Word& r : relators)
      ok = ok && closes_at(t, r, c);
  return ok;
}

std::size_t count_distinct(std::vector<CosetId> ids) {
  ids.erase(std::remove(ids.begin(), ids.end(), kUndefined), ids.end());
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace altcox::kernels
