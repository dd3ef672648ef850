#pragma once

// Chain normal forms x = u_n u_{n-1} ... u_base for the towers A_n+, B_n+,
// D_n+. Level i is the subgroup generated by the first i-1 chain generators;
// E_i holds one representative per left coset of level i-1 inside level i.
//
// Bases: A and B stop at level 2 (E_2 covers the cyclic level-2 group), D
// stops at level 3 where E_3 lists all 12 elements of D_3+.

#include <string>
#include <vector>

#include "altcox/coxeter.hpp"
#include "altcox/presentations.hpp"
#include "altcox/tc.hpp"

namespace altcox {

struct ChainSpec {
  Family family = Family::A;
  Variant variant = Variant::Edge;
  int rank = 2;
};

/// 2 for A and B, 3 for D.
int chain_base(Family family);

struct CosetRepSet {
  int level = 0;
  std::vector<Word> reps;
};

struct ChainDecomposition {
  /// u_n first, u_base last.
  std::vector<Word> factors;

  Word product() const;
};

class Chain {
 public:
  explicit Chain(const ChainSpec& spec, const EnumerationOptions& options = {});

  const ChainSpec& spec() const { return spec_; }
  const Presentation& presentation() const { return presentation_; }
  int base_level() const { return chain_base(spec_.family); }

  /// Throws std::out_of_range outside [base_level(), rank].
  const CosetRepSet& rep_set(int level) const;
  /// Left cosets of the level's subgroup in the top group (trivial subgroup
  /// at the base level, i.e. the regular table).
  const EnumerationResult& level_table(int level) const;
  const EnumerationResult& regular() const { return level_table(base_level()); }

  ChainDecomposition decompose(const Word& w) const;

  /// Every combination of representatives, u_n varying slowest. Throws
  /// std::length_error when the product of the |E_i| exceeds cap.
  std::vector<ChainDecomposition> enumerate_elements(std::size_t cap = 200'000) const;

  /// Distinct group elements among the products, via the regular table.
  std::size_t distinct_products(const std::vector<ChainDecomposition>& elems) const;

  /// Human-readable problems: sizes differing from the coset index, or two
  /// representatives in one coset. Empty when the chain is sound.
  std::vector<std::string> validate() const;

 private:
  std::size_t slot(int level) const;

  ChainSpec spec_;
  Presentation presentation_;
  std::vector<CosetRepSet> reps_;          // index 0 is the base level
  std::vector<EnumerationResult> tables_;  // same indexing
};

CosetRepSet rep_set(const ChainSpec& spec, int level);
ChainDecomposition decompose(const ChainSpec& spec, const Word& w);
std::vector<ChainDecomposition> enumerate_elements(const ChainSpec& spec);

}  // namespace altcox
