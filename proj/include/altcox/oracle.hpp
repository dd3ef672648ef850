#pragma once

// Permutation and wreath-product models used as ground truth for the
// presentations: S_N and C2 wr S_N with explicit multiplication.

#include <cstdint>
#include <string>
#include <vector>

#include "altcox/coxeter.hpp"
#include "altcox/presentations.hpp"
#include "altcox/words.hpp"

namespace altcox {

/// Bijection of {1..N}, stored 0-based. Products compose right to left:
/// (p * q)(i) = p(q(i)), so (1,2)(2,3) = (1,2,3).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based images, validated

  static Permutation identity(int degree);
  /// Product of 1-based cycles, e.g. cycles(4, {{1,2},{3,4}}).
  static Permutation cycles(int degree, const std::vector<std::vector<int>>& cs);

  int degree() const { return static_cast<int>(images_.size()); }
  /// 1-based image of a 1-based point.
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)] + 1; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  /// Cycle notation over 1-based points; "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (g, pi) in C2 wr S_N with (g, pi)(h, sigma) = (g + pi(h), pi sigma), where
/// pi(h) carries the flag at position i to position pi(i).
class WreathElement {
 public:
  WreathElement() = default;
  WreathElement(std::vector<std::uint8_t> flags, Permutation perm);
  explicit WreathElement(Permutation perm);

  static WreathElement identity(int degree);
  /// Flags set at the given 1-based positions.
  static WreathElement with_flags(const std::vector<int>& positions, Permutation perm);

  int degree() const { return perm_.degree(); }
  const std::vector<std::uint8_t>& flags() const { return flags_; }
  const Permutation& perm() const { return perm_; }

  WreathElement inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  friend WreathElement operator*(const WreathElement& a, const WreathElement& b);
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;

 private:
  std::vector<std::uint8_t> flags_;
  Permutation perm_;
};

/// Product of flags as +-1.
int epsilon_c2n(const WreathElement& e);
/// Sign of the permutation part.
int epsilon_0(const WreathElement& e);
/// Sign character of the Coxeter group: epsilon_c2n * epsilon_0.
int epsilon(const WreathElement& e);

enum class CharacterSubgroup {
  APlus,     // trivial flags, even permutation
  BPlus,     // epsilon_c2n * epsilon_0 = 1
  DAmbient,  // epsilon_c2n = 1
  DPlus,     // epsilon_c2n = 1 and epsilon_0 = 1
};

bool subgroup_membership_characters(const WreathElement& e, CharacterSubgroup which);

/// Left-to-right product of the images. Throws std::out_of_range when a
/// letter has no image.
WreathElement eval_word(const std::vector<WreathElement>& images, const Word& w);

/// Every relator of p evaluates to the identity.
bool verify_hom(const Presentation& p, const std::vector<WreathElement>& images);

/// Size of the subgroup generated by gens (identity of the given degree when
/// gens is empty). Throws std::runtime_error past cap elements.
std::size_t generated_order(const std::vector<WreathElement>& gens, int degree,
                            std::size_t cap = 5'000'000);

/// Number of points the realization acts on: n + 1 for A, n otherwise.
int oracle_degree(Family family, int rank);

/// The explicit images, in the generator order of chain_presentation
/// (coxeter_presentation for Variant::Coxeter). Type A uses trivial flags.
std::vector<WreathElement> realization_images(Family family, Variant variant, int rank);

/// |A_n+| = (n+1)!/2, |B_n+| = 2^(n-1) n!, |D_n+| = 2^(n-2) n!.
std::size_t closed_form_order(Family family, int rank);

CharacterSubgroup plus_subgroup(Family family);

}  // namespace altcox
