#include "altcox/tc.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace altcox {

CosetId CosetTable::apply(const Word& w, CosetId c) const {
  for (auto it = w.letters().rbegin(); it != w.letters().rend() && c != kUndefined; ++it)
    c = at(c, it->code());
  return c;
}

bool CosetTable::complete() const {
  return std::find(data_.begin(), data_.end(), kUndefined) == data_.end();
}

bool CosetTable::consistent() const {
  for (std::size_t c = 0; c < rows_; ++c)
    for (std::uint32_t x = 0; x < cols_; ++x) {
      const CosetId d = at(static_cast<CosetId>(c), x);
      if (d == kUndefined) continue;
      if (d < 0 || static_cast<std::size_t>(d) >= rows_) return false;
      if (at(d, x ^ 1u) != static_cast<CosetId>(c)) return false;
    }
  return true;
}

namespace {

struct CapHit {};

/// Right-coset HLT over reversed words; see the header for the translation.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup,
             const EnumerationOptions& opt)
      : cols_(2 * static_cast<std::uint32_t>(p.rank())), opt_(opt) {
    for (const Word& r : p.relators())
      if (!r.empty()) relators_.push_back(codes(r.reversed()));
    for (const Word& h : subgroup)
      if (!h.empty()) subgroup_.push_back(codes(h.reversed()));
  }

  bool run() {
    try {
      new_coset();
      for (const auto& h : subgroup_) scan_and_fill(0, h);
      for (;;) {
        for (std::size_t k = 0; k < parent_.size(); ++k) {
          const auto c = static_cast<CosetId>(k);
          for (const auto& r : relators_) {
            if (!live(c)) break;
            scan_and_fill(c, r);
          }
          for (std::uint32_t x = 0; x < cols_ && live(c); ++x)
            if (entry(c, x) == kUndefined) define(c, x);
        }
        if (closed()) return true;
      }
    } catch (const CapHit&) {
      return false;
    }
  }

  /// Renumbers live cosets in BFS order from coset 0 over positive columns.
  void standardize(EnumerationResult& out) const {
    const std::size_t n = live_;
    std::vector<CosetId> rename(parent_.size(), kUndefined);
    std::vector<CosetId> order{0};
    std::vector<Definition> defs{{kUndefined, Letter{}}};
    rename[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const CosetId c = order[i];
      for (std::uint32_t x = 0; x < cols_; x += 2) {
        const CosetId d = entry(c, x);
        if (rename[static_cast<std::size_t>(d)] != kUndefined) continue;
        rename[static_cast<std::size_t>(d)] = static_cast<CosetId>(order.size());
        order.push_back(d);
        defs.push_back({rename[static_cast<std::size_t>(c)], Letter::from_code(x)});
      }
    }
    CosetTable t(cols_ / 2, n);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::uint32_t x = 0; x < cols_; ++x)
        t.set(static_cast<CosetId>(i), x, rename[static_cast<std::size_t>(entry(order[i], x))]);
    out.table = std::move(t);
    out.definitions = std::move(defs);
    out.index = order.size();
  }

  std::size_t total() const { return parent_.size(); }
  std::size_t live_count() const { return live_; }
  std::size_t max_live() const { return max_live_; }

 private:
  static std::vector<std::uint32_t> codes(const Word& w) {
    std::vector<std::uint32_t> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(l.code());
    return out;
  }

  CosetId& entry(CosetId c, std::uint32_t x) {
    return table_[static_cast<std::size_t>(c) * cols_ + x];
  }
  CosetId entry(CosetId c, std::uint32_t x) const {
    return table_[static_cast<std::size_t>(c) * cols_ + x];
  }
  bool live(CosetId c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  CosetId new_coset() {
    if (parent_.size() >= opt_.max_cosets) throw CapHit{};
    const auto c = static_cast<CosetId>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndefined);
    max_live_ = std::max(max_live_, ++live_);
    return c;
  }

  void define(CosetId c, std::uint32_t x) {
    const CosetId d = new_coset();
    entry(c, x) = d;
    entry(d, x ^ 1u) = c;
  }

  CosetId rep(CosetId c) {
    CosetId r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (c != r) {
      const CosetId next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(CosetId a, CosetId b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const CosetId lo = std::min(a, b);
    const CosetId hi = std::max(a, b);
    parent_[static_cast<std::size_t>(hi)] = lo;
    --live_;
    queue_.push_back(hi);
  }

  void coincidence(CosetId a, CosetId b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const CosetId g = queue_[i];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const CosetId d = entry(g, x);
        if (d == kUndefined) continue;
        entry(d, x ^ 1u) = kUndefined;
        const CosetId mu = rep(g);
        const CosetId nu = rep(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, x ^ 1u) != kUndefined) {
          merge(mu, entry(nu, x ^ 1u));
        } else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1u) = mu;
        }
      }
    }
    if (opt_.check_invariants) check_live_consistency();
  }

  void scan_and_fill(CosetId c, const std::vector<std::uint32_t>& w) {
    CosetId f = c;
    CosetId b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kUndefined)
        f = entry(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)] ^ 1u) != kUndefined)
        b = entry(b, w[static_cast<std::size_t>(j--)] ^ 1u);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, w[static_cast<std::size_t>(i)]) = b;
        entry(b, w[static_cast<std::size_t>(i)] ^ 1u) = f;
        if (opt_.check_invariants) check_live_consistency();
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  /// Every live coset is complete and every relator and subgroup word closes.
  bool closed() const {
    for (std::size_t k = 0; k < parent_.size(); ++k) {
      const auto c = static_cast<CosetId>(k);
      if (!live(c)) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const CosetId d = entry(c, x);
        if (d == kUndefined || !live(d)) return false;
      }
      for (const auto& r : relators_) {
        CosetId e = c;
        for (std::uint32_t x : r) e = entry(e, x);
        if (e != c) return false;
      }
    }
    for (const auto& h : subgroup_) {
      CosetId e = 0;
      for (std::uint32_t x : h) e = entry(e, x);
      if (e != 0) return false;
    }
    return true;
  }

  void check_live_consistency() const {
    for (std::size_t k = 0; k < parent_.size(); ++k) {
      const auto c = static_cast<CosetId>(k);
      if (!live(c)) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const CosetId d = entry(c, x);
        if (d == kUndefined || !live(d)) continue;
        if (entry(d, x ^ 1u) != c)
          throw std::logic_error("coset table lost symmetry at coset " + std::to_string(c));
      }
    }
  }

  std::uint32_t cols_;
  EnumerationOptions opt_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgroup_;
  std::vector<CosetId> table_;
  std::vector<CosetId> parent_;
  std::vector<CosetId> queue_;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
};

void require_completed(const EnumerationResult& r) {
  if (!r.completed()) throw std::logic_error("coset enumeration did not complete");
}

}  // namespace

EnumerationResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            const EnumerationOptions& options) {
  if (options.max_cosets < 1) throw std::invalid_argument("coset cap must be positive");
  for (const Word& h : subgroup)
    for (Letter l : h)
      if (l.gen().index >= p.rank())
        throw std::invalid_argument("subgroup word uses a generator outside the presentation");

  EnumerationResult out;
  out.presentation = p;
  out.subgroup = subgroup;
  Enumerator e(p, subgroup, options);
  const bool done = e.run();
  out.total_defined = e.total();
  out.max_live = e.max_live();
  if (!done) {
    out.status = EnumerationStatus::CapExceeded;
    out.index = e.live_count();
    return out;
  }
  out.status = EnumerationStatus::Completed;
  e.standardize(out);
  if (options.check_invariants && !out.table.consistent())
    throw std::logic_error("standardized coset table is inconsistent");
  return out;
}

std::size_t order(const Presentation& p, const EnumerationOptions& options) {
  EnumerationResult r = enumerate(p, {}, options);
  if (!r.completed())
    throw CapExceededError("coset enumeration exceeded " + std::to_string(options.max_cosets) +
                           " cosets");
  return r.index;
}

SchreierGraph schreier(const EnumerationResult& r) {
  require_completed(r);
  SchreierGraph g;
  g.presentation = r.presentation;
  g.representatives.resize(r.index);
  for (std::size_t c = 1; c < r.index; ++c) {
    const Definition& d = r.definitions[c];
    g.representatives[c] = Word{d.letter} * g.representatives[static_cast<std::size_t>(d.parent)];
  }
  const auto rank = static_cast<std::uint32_t>(r.presentation.rank());
  for (std::size_t c = 0; c < r.index; ++c)
    for (std::uint32_t gen = 0; gen < rank; ++gen)
      g.edges.push_back({static_cast<CosetId>(c), {gen}, r.table.at(static_cast<CosetId>(c), 2 * gen)});
  return g;
}

CosetId coset_of(const EnumerationResult& r, const Word& w) {
  require_completed(r);
  return r.table.apply(w, 0);
}

bool word_in_subgroup(const EnumerationResult& r, const Word& w) { return coset_of(r, w) == 0; }

std::string to_dot(const SchreierGraph& g) {
  const Presentation& p = g.presentation;
  const std::vector<bool> invol = p.involutions();
  std::ostringstream os;
  os << "digraph schreier {\n";
  for (std::size_t c = 0; c < g.representatives.size(); ++c) {
    const Word& rep = g.representatives[c];
    os << "  " << c << " [label=\"" << (rep.empty() ? "" : render_word(rep, p) + " ") << "H\"];\n";
  }
  for (const auto& e : g.edges) {
    if (e.from == e.to) continue;
    const bool undirected = invol[e.gen.index];
    if (undirected && e.to < e.from) continue;
    os << "  " << e.from << " -> " << e.to << " [label=\"" << p.name(e.gen) << "\"";
    if (undirected) os << ",dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_csv(const EnumerationResult& r) {
  require_completed(r);
  std::ostringstream os;
  os << "coset";
  for (const auto& name : r.presentation.generators()) os << ',' << name;
  os << '\n';
  const auto rank = static_cast<std::uint32_t>(r.presentation.rank());
  for (std::size_t c = 0; c < r.index; ++c) {
    os << c + 1;
    for (std::uint32_t gen = 0; gen < rank; ++gen)
      os << ',' << r.table.at(static_cast<CosetId>(c), 2 * gen) + 1;
    os << '\n';
  }
  return os.str();
}

bool verify_hom(GroupHom& h, const EnumerationOptions& options) {
  h.verified = false;
  if (h.images.size() != h.source.rank())
    throw std::invalid_argument("homomorphism needs one image per source generator");
  EnumerationResult target = enumerate(h.target, {}, options);
  if (!target.completed())
    throw CapExceededError("target enumeration exceeded the coset cap");
  for (const Word& r : h.source.relators())
    if (!word_in_subgroup(target, h.apply(r))) return false;
  h.verified = true;
  return true;
}

bool composite_is_identity(const GroupHom& f, const GroupHom& g,
                           const EnumerationOptions& options) {
  if (f.target.generators() != g.source.generators())
    throw std::invalid_argument("homomorphisms are not composable");
  EnumerationResult source = enumerate(f.source, {}, options);
  if (!source.completed())
    throw CapExceededError("source enumeration exceeded the coset cap");
  for (std::uint32_t i = 0; i < f.source.rank(); ++i) {
    const Word x = Word::of({i});
    if (!word_in_subgroup(source, word_invert(x) * g.apply(f.apply(x)))) return false;
  }
  return true;
}

}  // namespace altcox
