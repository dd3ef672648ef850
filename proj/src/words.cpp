#include "altcox/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace altcox {

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::pow(int k) const {
  Word base = k < 0 ? word_invert(*this) : *this;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == ~l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word word_invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(~*it);
  return Word(std::move(out));
}

Word commutator(const Word& g, const Word& h) {
  return g * h * word_invert(g) * word_invert(h);
}

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<Word> relators,
                           std::vector<CentralGenerator> central)
    : names_(std::move(generators)),
      relators_(std::move(relators)),
      central_(std::move(central)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      throw std::invalid_argument("empty generator name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate generator name: " + names_[i]);
  }
  for (const Word& r : relators_)
    for (Letter l : r)
      if (l.gen().index >= names_.size())
        throw std::invalid_argument("relator references generator " +
                                    std::to_string(l.gen().index) +
                                    " out of range");

  auto has = [this](const Word& w) {
    return std::find(relators_.begin(), relators_.end(), w) != relators_.end();
  };
  for (std::size_t ci = 0; ci < central_.size(); ++ci) {
    const auto& c = central_[ci];
    if (c.gen.index >= names_.size())
      throw std::invalid_argument("central generator out of range");
    if (c.order < 1)
      throw std::invalid_argument("central generator order must be positive");
    for (std::size_t cj = 0; cj < ci; ++cj)
      if (central_[cj].gen == c.gen)
        throw std::invalid_argument("generator declared central twice");

    Word power = Word::of(c.gen).pow(c.order);
    if (!has(power)) relators_.push_back(power);
    for (std::uint32_t h = 0; h < names_.size(); ++h) {
      if (h == c.gen.index) continue;
      Word comm = commutator(Word::of(c.gen), Word::of({h}));
      // [h, g] already covers [g, h] when h is itself central.
      Word flipped = commutator(Word::of({h}), Word::of(c.gen));
      if (!has(comm) && !has(flipped)) relators_.push_back(comm);
    }
  }
}

std::optional<GeneratorId> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return GeneratorId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

GeneratorId Presentation::id(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

Presentation Presentation::with_relators(const std::vector<Word>& extra) const {
  std::vector<Word> rels = relators_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(names_, std::move(rels), central_);
}

std::vector<bool> Presentation::involutions() const {
  std::vector<bool> out(rank(), false);
  for (const Word& r : relators_) {
    if (r.size() == 2 && r[0] == r[1]) out[r[0].gen().index] = true;
  }
  return out;
}

Word parse_word(std::string_view text, const Presentation& p) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;

    std::string_view name = token;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view exp = token.substr(caret + 1);
      if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (exp.empty() || ec != std::errc() || ptr != exp.data() + exp.size())
        throw std::invalid_argument("malformed exponent in token: " + std::string(token));
    }
    if (name == "1" && !p.find(name)) continue;
    out *= Word::of(p.id(name)).pow(exponent);
  }
  return out;
}

std::string render_word(const Word& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!first) os << ' ';
    first = false;
    os << p.name(w[i].gen());
    const long e = w[i].inverse() ? -run : run;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const Word& r : p.relators()) rels.push_back(render_word(r, p));
  nlohmann::json central = nlohmann::json::array();
  for (const auto& c : p.central())
    central.push_back({{"name", p.name(c.gen)}, {"order", c.order}});
  return {{"generators", p.generators()}, {"relators", rels}, {"central", central}};
}

Presentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    throw std::invalid_argument("presentation JSON needs 'generators' and 'relators'");
  auto names = j.at("generators").get<std::vector<std::string>>();
  Presentation bare(names, {});
  std::vector<Word> rels;
  for (const auto& r : j.at("relators")) rels.push_back(parse_word(r.get<std::string>(), bare));
  std::vector<CentralGenerator> central;
  if (j.contains("central")) {
    for (const auto& c : j.at("central"))
      central.push_back({bare.id(c.at("name").get<std::string>()), c.at("order").get<int>()});
  }
  return Presentation(std::move(names), std::move(rels), std::move(central));
}

}  // namespace altcox
