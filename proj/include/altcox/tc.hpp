#pragma once

// Todd-Coxeter coset enumeration (HLT strategy) for left cosets gH.
//
// Generators act on the left: table(c, x) is the coset x.c, and a word
// w = l1 l2 ... lk sends c to l1.(l2.( ... lk.c)). Internally the classic
// right-coset algorithm runs on reversed relators, which is equivalent.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "altcox/presentations.hpp"
#include "altcox/words.hpp"

namespace altcox {

using CosetId = std::int32_t;
inline constexpr CosetId kUndefined = -1;

class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t rank, std::size_t rows)
      : cols_(2 * rank), rows_(rows), data_(cols_ * rows, kUndefined) {}

  std::size_t num_cosets() const { return rows_; }
  std::size_t num_columns() const { return cols_; }

  CosetId operator()(CosetId c, Letter x) const { return at(c, x.code()); }
  CosetId at(CosetId c, std::uint32_t col) const {
    return data_[static_cast<std::size_t>(c) * cols_ + col];
  }
  void set(CosetId c, std::uint32_t col, CosetId d) {
    data_[static_cast<std::size_t>(c) * cols_ + col] = d;
  }
  CosetId add_row() {
    data_.resize(data_.size() + cols_, kUndefined);
    return static_cast<CosetId>(rows_++);
  }

  /// w.c, or kUndefined if the trace leaves the defined part of the table.
  CosetId apply(const Word& w, CosetId c) const;

  bool complete() const;
  /// table(c, x) = d  <=>  table(d, x^-1) = c for every defined entry.
  bool consistent() const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::vector<CosetId> data_;
};

enum class EnumerationStatus { Completed, CapExceeded };

struct EnumerationOptions {
  /// Upper bound on cosets ever defined, live or dead.
  std::size_t max_cosets = 2'000'000;
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
};

struct Definition {
  CosetId parent = kUndefined;
  Letter letter;
};

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::CapExceeded;
  Presentation presentation;
  std::vector<Word> subgroup;
  /// Standardized when completed: coset 0 is H and the others are numbered in
  /// BFS order over the positive generator columns.
  CosetTable table;
  /// BFS tree of the standardized table: coset c = letter.parent.
  std::vector<Definition> definitions;
  std::size_t index = 0;
  std::size_t total_defined = 0;
  std::size_t max_live = 0;

  bool completed() const { return status == EnumerationStatus::Completed; }
};

EnumerationResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            const EnumerationOptions& options = {});

/// Order of the group; throws CapExceededError when the enumeration is cut off.
std::size_t order(const Presentation& p, const EnumerationOptions& options = {});

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SchreierGraph {
  struct Edge {
    CosetId from;
    GeneratorId gen;
    CosetId to;
  };
  Presentation presentation;
  /// representatives[c] applied to coset 0 gives c.
  std::vector<Word> representatives;
  /// One entry per (coset, positive generator), in coset then generator order.
  std::vector<Edge> edges;
};

/// Throws std::logic_error for an incomplete enumeration.
SchreierGraph schreier(const EnumerationResult& r);

/// True iff w.H = H. With an empty subgroup this decides the word problem.
bool word_in_subgroup(const EnumerationResult& r, const Word& w);

/// Coset id reached from H by w (completed enumerations only).
CosetId coset_of(const EnumerationResult& r, const Word& w);

/// Digraph with one node per coset labelled "<rep> H". Loops are dropped and
/// generators with a g^2 relator are drawn once per pair without arrowheads.
std::string to_dot(const SchreierGraph& g);

/// Header "coset,<generators>", one row per coset, 1-based coset ids.
std::string to_csv(const EnumerationResult& r);

/// Enumerates the target over the trivial subgroup and checks that every
/// source relator maps to the identity; sets h.verified on success.
bool verify_hom(GroupHom& h, const EnumerationOptions& options = {});

/// g(f(x)) = x for every generator x of f.source, decided in f.source.
bool composite_is_identity(const GroupHom& f, const GroupHom& g,
                           const EnumerationOptions& options = {});

}  // namespace altcox
