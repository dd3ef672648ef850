#include "altcox/chains.hpp"

#include <stdexcept>

#include "altcox/kernels.hpp"

namespace altcox {

int chain_base(Family family) { return family == Family::D ? 3 : 2; }

Word ChainDecomposition::product() const {
  Word out;
  for (const Word& u : factors) out *= u;
  return out;
}

namespace {

/// Chain generator x_k (1-based) is presentation generator k - 1.
Word x(int k) { return Word::of({static_cast<std::uint32_t>(k - 1)}); }

Word run(int from, int to, int step) {
  Word w;
  for (int k = from; k <= to; k += step) w *= x(k);
  return w;
}

/// Fixed type A representative lists.
std::vector<Word> fixed_type_a(Variant variant, int i) {
  std::vector<Word> e{Word{}};
  const Word top = x(i - 1);
  const Word top2 = top.pow(2);
  switch (variant) {
    case Variant::Carmichael:
      e.push_back(top);
      e.push_back(top2);
      for (int j = i - 2; j >= 1; --j) e.push_back(x(j) * top2);
      break;
    case Variant::Bourbaki:
      for (int j = i - 1; j >= 1; --j) e.push_back(run(j, i - 1, 1));
      e.push_back(x(1) * run(1, i - 1, 1));
      break;
    case Variant::Edge:
      for (int j = i - 1; j >= 1; j -= 2) e.push_back(run(j, i - 1, 2));
      e.push_back(top2);
      for (int j = i - 2; j >= 1; j -= 2) e.push_back(run(j, i - 2, 2) * top2);
      break;
    case Variant::Coxeter:
      throw std::invalid_argument("chains are defined for the alternating presentations");
  }
  return e;
}

std::vector<Word> prefix(int count) {
  std::vector<Word> out;
  for (int k = 1; k <= count; ++k) out.push_back(x(k));
  return out;
}

EnumerationResult must_complete(const Presentation& p, const std::vector<Word>& h,
                                const EnumerationOptions& options) {
  EnumerationResult r = enumerate(p, h, options);
  if (!r.completed()) throw CapExceededError("chain level enumeration exceeded the coset cap");
  return r;
}

}  // namespace

Chain::Chain(const ChainSpec& spec, const EnumerationOptions& options) : spec_(spec) {
  if (spec.variant == Variant::Coxeter)
    throw std::invalid_argument("chains are defined for the alternating presentations");
  const int base = base_level();
  if (spec.rank < base)
    throw std::invalid_argument("rank " + std::to_string(spec.rank) + " below the chain base " +
                                std::to_string(base) + " for type " + to_string(spec.family));
  presentation_ = chain_presentation(spec.family, spec.variant, spec.rank);

  for (int level = base; level <= spec.rank; ++level) {
    const std::vector<Word> h = level == base ? std::vector<Word>{} : prefix(level - 2);
    tables_.push_back(must_complete(presentation_, h, options));

    CosetRepSet set{level, {}};
    if (spec.family == Family::A) {
      set.reps = fixed_type_a(spec.variant, level);
    } else {
      const Presentation local = chain_presentation(spec.family, spec.variant, level);
      set.reps = schreier(must_complete(local, h, options)).representatives;
    }
    reps_.push_back(std::move(set));
  }
}

std::size_t Chain::slot(int level) const {
  if (level < base_level() || level > spec_.rank)
    throw std::out_of_range("chain level " + std::to_string(level) + " outside [" +
                            std::to_string(base_level()) + ", " + std::to_string(spec_.rank) + "]");
  return static_cast<std::size_t>(level - base_level());
}

const CosetRepSet& Chain::rep_set(int level) const { return reps_[slot(level)]; }

const EnumerationResult& Chain::level_table(int level) const { return tables_[slot(level)]; }

ChainDecomposition Chain::decompose(const Word& w) const {
  ChainDecomposition d;
  Word current = free_reduce(w);
  for (int level = spec_.rank; level >= base_level(); --level) {
    const EnumerationResult& t = level_table(level);
    const CosetId target = coset_of(t, current);
    const Word* hit = nullptr;
    for (const Word& u : rep_set(level).reps)
      if (coset_of(t, u) == target) {
        hit = &u;
        break;
      }
    if (!hit)
      throw std::logic_error("no representative at level " + std::to_string(level) +
                             " matches the word");
    d.factors.push_back(*hit);
    current = free_reduce(word_invert(*hit) * current);
  }
  return d;
}

std::vector<ChainDecomposition> Chain::enumerate_elements(std::size_t cap) const {
  std::size_t total = 1;
  for (const auto& set : reps_) {
    total *= set.reps.size();
    if (total > cap) throw std::length_error("normal-form enumeration exceeds the cap");
  }
  std::vector<ChainDecomposition> out;
  out.reserve(total);
  // Digits indexed from the top level down; the last digit varies fastest.
  std::vector<std::size_t> digit(reps_.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    ChainDecomposition d;
    for (std::size_t l = 0; l < reps_.size(); ++l) {
      const auto& set = reps_[reps_.size() - 1 - l];
      d.factors.push_back(set.reps[digit[l]]);
    }
    out.push_back(std::move(d));
    for (std::size_t l = reps_.size(); l-- > 0;) {
      if (++digit[l] < reps_[reps_.size() - 1 - l].reps.size()) break;
      digit[l] = 0;
    }
  }
  return out;
}

std::size_t Chain::distinct_products(const std::vector<ChainDecomposition>& elems) const {
  std::vector<Word> words;
  words.reserve(elems.size());
  for (const auto& e : elems) words.push_back(e.product());
  return kernels::count_distinct(kernels::trace_words_parallel(regular().table, words));
}

std::vector<std::string> Chain::validate() const {
  std::vector<std::string> problems;
  for (int level = base_level(); level <= spec_.rank; ++level) {
    const auto& reps = rep_set(level).reps;
    const EnumerationResult& t = level_table(level);
    std::vector<CosetId> ids = kernels::trace_words_serial(t.table, reps);
    const std::size_t distinct = kernels::count_distinct(ids);
    if (distinct != reps.size())
      problems.push_back("level " + std::to_string(level) + ": " + std::to_string(reps.size()) +
                         " representatives cover only " + std::to_string(distinct) + " cosets");
    // Index of level i-1 inside level i, from the level's own presentation.
    const Presentation local = chain_presentation(spec_.family, spec_.variant, level);
    const std::vector<Word> h = level == base_level() ? std::vector<Word>{} : prefix(level - 2);
    const std::size_t index = must_complete(local, h, {}).index;
    if (index != reps.size())
      problems.push_back("level " + std::to_string(level) + ": " + std::to_string(reps.size()) +
                         " representatives for index " + std::to_string(index));
  }
  return problems;
}

CosetRepSet rep_set(const ChainSpec& spec, int level) { return Chain(spec).rep_set(level); }

ChainDecomposition decompose(const ChainSpec& spec, const Word& w) {
  return Chain(spec).decompose(w);
}

std::vector<ChainDecomposition> enumerate_elements(const ChainSpec& spec) {
  return Chain(spec).enumerate_elements();
}

}  // namespace altcox
