#include "altcox/oracle.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace altcox {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int i : images_) {
    if (i < 0 || static_cast<std::size_t>(i) >= images_.size() || seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(i)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::cycles(int degree, const std::vector<std::vector<int>>& cs) {
  Permutation out = identity(degree);
  for (const auto& c : cs) {
    std::vector<int> im = identity(degree).images_;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k];
      const int to = c[(k + 1) % c.size()];
      if (from < 1 || from > degree) throw std::invalid_argument("cycle point out of range");
      im[static_cast<std::size_t>(from - 1)] = to - 1;
    }
    out = out * Permutation(std::move(im));
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("permutation degrees differ");
  std::vector<int> im(q.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (j != i) os << ',';
      os << j + 1;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

WreathElement::WreathElement(std::vector<std::uint8_t> flags, Permutation perm)
    : flags_(std::move(flags)), perm_(std::move(perm)) {
  if (static_cast<int>(flags_.size()) != perm_.degree())
    throw std::invalid_argument("flag vector length must equal the permutation degree");
  for (auto& f : flags_) f &= 1u;
}

WreathElement::WreathElement(Permutation perm)
    : flags_(static_cast<std::size_t>(perm.degree()), 0), perm_(std::move(perm)) {}

WreathElement WreathElement::identity(int degree) {
  return WreathElement(Permutation::identity(degree));
}

WreathElement WreathElement::with_flags(const std::vector<int>& positions, Permutation perm) {
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(perm.degree()), 0);
  for (int p : positions) flags.at(static_cast<std::size_t>(p - 1)) ^= 1u;
  return WreathElement(std::move(flags), std::move(perm));
}

WreathElement operator*(const WreathElement& a, const WreathElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("wreath degrees differ");
  WreathElement out;
  out.flags_ = a.flags_;
  const auto& pi = a.perm_.images();
  for (std::size_t i = 0; i < b.flags_.size(); ++i)
    out.flags_[static_cast<std::size_t>(pi[i])] ^= b.flags_[i];
  out.perm_ = a.perm_ * b.perm_;
  return out;
}

WreathElement WreathElement::inverse() const {
  // (g, pi)^-1 = (pi^-1(g), pi^-1).
  const Permutation inv = perm_.inverse();
  std::vector<std::uint8_t> flags(flags_.size(), 0);
  for (std::size_t i = 0; i < flags_.size(); ++i)
    flags[static_cast<std::size_t>(inv.images()[i])] = flags_[i];
  return WreathElement(std::move(flags), inv);
}

bool WreathElement::is_identity() const {
  for (auto f : flags_)
    if (f) return false;
  return perm_.is_identity();
}

std::string WreathElement::to_string() const {
  std::ostringstream os;
  os << '(';
  bool any = false;
  for (std::size_t i = 0; i < flags_.size(); ++i)
    if (flags_[i]) {
      os << (any ? " " : "") << 'g' << i + 1;
      any = true;
    }
  if (!any) os << '1';
  os << ", " << perm_.to_string() << ')';
  return os.str();
}

int epsilon_c2n(const WreathElement& e) {
  int s = 1;
  for (auto f : e.flags())
    if (f) s = -s;
  return s;
}

int epsilon_0(const WreathElement& e) { return e.perm().sign(); }

int epsilon(const WreathElement& e) { return epsilon_c2n(e) * epsilon_0(e); }

bool subgroup_membership_characters(const WreathElement& e, CharacterSubgroup which) {
  switch (which) {
    case CharacterSubgroup::APlus: {
      for (auto f : e.flags())
        if (f) return false;
      return epsilon_0(e) == 1;
    }
    case CharacterSubgroup::BPlus: return epsilon(e) == 1;
    case CharacterSubgroup::DAmbient: return epsilon_c2n(e) == 1;
    case CharacterSubgroup::DPlus: return epsilon_c2n(e) == 1 && epsilon_0(e) == 1;
  }
  return false;
}

WreathElement eval_word(const std::vector<WreathElement>& images, const Word& w) {
  if (images.empty()) {
    if (!w.empty()) throw std::out_of_range("letter without an image");
    return {};
  }
  WreathElement out = WreathElement::identity(images.front().degree());
  for (Letter l : w) {
    const auto g = static_cast<std::size_t>(l.gen().index);
    if (g >= images.size()) throw std::out_of_range("letter without an image");
    out = out * (l.inverse() ? images[g].inverse() : images[g]);
  }
  return out;
}

bool verify_hom(const Presentation& p, const std::vector<WreathElement>& images) {
  if (images.size() < p.rank()) throw std::out_of_range("missing generator image");
  for (const Word& r : p.relators())
    if (!eval_word(images, r).is_identity()) return false;
  return true;
}

namespace {

struct ElementHash {
  std::size_t operator()(const WreathElement& e) const {
    std::size_t h = 1469598103934665603ull;
    for (int i : e.perm().images()) h = (h ^ static_cast<std::size_t>(i)) * 1099511628211ull;
    for (auto f : e.flags()) h = (h ^ f) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::size_t generated_order(const std::vector<WreathElement>& gens, int degree, std::size_t cap) {
  std::unordered_set<WreathElement, ElementHash> seen;
  std::deque<WreathElement> queue;
  const WreathElement one = WreathElement::identity(degree);
  seen.insert(one);
  queue.push_back(one);
  while (!queue.empty()) {
    const WreathElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      WreathElement y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw std::runtime_error("generated subgroup exceeds the cap");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

int oracle_degree(Family family, int rank) { return family == Family::A ? rank + 1 : rank; }

std::size_t closed_form_order(Family family, int n) {
  std::size_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
  switch (family) {
    case Family::A: return fact * static_cast<std::size_t>(n + 1) / 2;
    case Family::B: return fact << (n - 1);
    case Family::D: return fact << (n - 2);
  }
  return 0;
}

CharacterSubgroup plus_subgroup(Family family) {
  switch (family) {
    case Family::A: return CharacterSubgroup::APlus;
    case Family::B: return CharacterSubgroup::BPlus;
    case Family::D: return CharacterSubgroup::DPlus;
  }
  return CharacterSubgroup::APlus;
}

std::vector<WreathElement> realization_images(Family family, Variant variant, int n) {
  if (n < minimum_rank(family, variant))
    throw std::invalid_argument("rank below the minimum for this family and variant");
  const int deg = oracle_degree(family, n);
  auto P = [deg](std::vector<std::vector<int>> cs) { return Permutation::cycles(deg, cs); };
  auto W = [](std::vector<int> flags, Permutation p) {
    return WreathElement::with_flags(flags, std::move(p));
  };
  const Permutation id = Permutation::identity(deg);
  std::vector<WreathElement> out;

  switch (family) {
    case Family::A:
      switch (variant) {
        case Variant::Coxeter:
          for (int i = 0; i < n; ++i) out.emplace_back(P({{i + 1, i + 2}}));
          break;
        case Variant::Carmichael:
          for (int i = 1; i < n; ++i) out.emplace_back(P({{1, 2, i + 2}}));
          break;
        case Variant::Bourbaki:
          for (int i = 1; i < n; ++i) out.emplace_back(P({{1, 2}, {i + 1, i + 2}}));
          break;
        case Variant::Edge:
          for (int i = 1; i < n; ++i) out.emplace_back(P({{i, i + 1, i + 2}}));
          break;
      }
      break;

    case Family::B:
      switch (variant) {
        case Variant::Coxeter:
          out.push_back(W({1}, id));
          for (int i = 1; i < n; ++i) out.push_back(W({}, P({{i, i + 1}})));
          break;
        case Variant::Carmichael:
          for (int i = 1; i < n; ++i) out.push_back(W({1}, P({{1, i + 1}})));
          break;
        case Variant::Bourbaki:
          for (int i = 1; i < n; ++i) out.push_back(W({1}, P({{i, i + 1}})));
          break;
        case Variant::Edge:
          out.push_back(W({1}, P({{1, 2}})));
          for (int i = 2; i < n; ++i) out.push_back(W({}, P({{i - 1, i, i + 1}})));
          break;
      }
      break;

    case Family::D:
      switch (variant) {
        case Variant::Coxeter:
          out.push_back(W({1, 2}, P({{1, 2}})));
          for (int i = 1; i < n; ++i) out.push_back(W({}, P({{i, i + 1}})));
          break;
        case Variant::Carmichael:
          out.push_back(W({1, 2}, P({{1, 2, 3}})));
          out.push_back(W({1, 2}, P({{1, 3, 2}})));
          for (int i = 3; i < n; ++i) out.push_back(W({1, 2}, P({{1, 2, i + 1}})));
          break;
        case Variant::Bourbaki:
          out.push_back(W({1, 2}, id));
          for (int i = 2; i < n; ++i) out.push_back(W({1, 2}, P({{1, 2}, {i, i + 1}})));
          break;
        case Variant::Edge:
          out.push_back(W({}, P({{1, 2, 3}})));
          out.push_back(W({1, 2}, P({{1, 2, 3}})));
          for (int i = 3; i < n; ++i) out.push_back(W({}, P({{i - 1, i, i + 1}})));
          break;
      }
      break;
  }
  return out;
}

}  // namespace altcox
