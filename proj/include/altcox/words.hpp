#pragma once

// Free-group words over a named alphabet and the Presentation container.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace altcox {

/// Index of a generator inside its owning Presentation.
struct GeneratorId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(GeneratorId, GeneratorId) = default;
};

/// A generator or its formal inverse.
///
/// Encoded as `2 * generator + inverse`, which is also the column index of the
/// letter in a coset table.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(GeneratorId gen, bool inverse)
      : code_(2 * gen.index + (inverse ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr GeneratorId gen() const { return {code_ >> 1}; }
  constexpr bool inverse() const { return (code_ & 1u) != 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Letter operator~() const { return from_code(code_ ^ 1u); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

constexpr Letter pos(GeneratorId g) { return Letter(g, false); }
constexpr Letter neg(GeneratorId g) { return Letter(g, true); }

/// A finite sequence of letters; not necessarily freely reduced.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word of(GeneratorId g) { return Word{pos(g)}; }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Concatenated power; negative exponents use the inverse word.
  Word pow(int k) const;

  /// Reversed letter order without inverting letters.
  Word reversed() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);

/// Reversed word with every letter inverted.
Word word_invert(const Word& w);

/// Commutator g h g^-1 h^-1.
Word commutator(const Word& g, const Word& h);

struct CentralGenerator {
  GeneratorId gen;
  int order = 2;

  friend bool operator==(const CentralGenerator&, const CentralGenerator&) = default;
};

/// Generators, relators and the generators declared central.
///
/// Relators are stored with exponents expanded. Every central generator g of
/// order k carries the relators g^k and [g, h] for each other generator h;
/// the constructor appends whichever of those are missing, after the given
/// relators and in generator order.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               std::vector<CentralGenerator> central = {});

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<CentralGenerator>& central() const { return central_; }
  const std::string& name(GeneratorId g) const { return names_.at(g.index); }

  std::optional<GeneratorId> find(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names.
  GeneratorId id(std::string_view name) const;
  Word gen(std::string_view name) const { return Word::of(id(name)); }

  /// Same generators and central data with extra relators appended.
  Presentation with_relators(const std::vector<Word>& extra) const;

  /// Generators g with a relator equal to g^2 or g^-2.
  std::vector<bool> involutions() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<CentralGenerator> central_;
};

/// Parses whitespace-separated tokens `name`, `name^k` (k may be negative).
/// The token `1` denotes the identity unless a generator carries that name.
Word parse_word(std::string_view text, const Presentation& p);

/// Inverse of parse_word: runs of equal letters are compressed to `name^k`;
/// the empty word renders as `1`.
std::string render_word(const Word& w, const Presentation& p);

nlohmann::json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

}  // namespace altcox
