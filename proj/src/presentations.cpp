#include "altcox/presentations.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace altcox {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Coxeter: return "coxeter";
    case Variant::Carmichael: return "carmichael";
    case Variant::Bourbaki: return "bourbaki";
    case Variant::Edge: return "edge";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "coxeter") return Variant::Coxeter;
  if (s == "carmichael") return Variant::Carmichael;
  if (s == "bourbaki" || s == "moore") return Variant::Bourbaki;
  if (s == "edge") return Variant::Edge;
  throw std::invalid_argument("unknown variant: " + s);
}

int minimum_rank(Family family, Variant) {
  switch (family) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::D: return 3;
  }
  return 1;
}

namespace {

class Builder {
 public:
  GeneratorId add(std::string name) {
    names_.push_back(std::move(name));
    return {static_cast<std::uint32_t>(names_.size() - 1)};
  }
  void rel(Word w) { relators_.push_back(std::move(w)); }
  void central(GeneratorId g, int order) { central_.push_back({g, order}); }

  /// Relator for `w = c_1^{e_1} c_2^{e_2} ...` with each c central.
  void rel_equals(Word w, const std::vector<std::pair<GeneratorId, int>>& rhs) {
    for (auto [c, e] : rhs) {
      const int order = order_of(c);
      const int k = ((order - e) % order + order) % order;
      w *= Word::of(c).pow(k);
    }
    rel(std::move(w));
  }

  Presentation build() { return Presentation(names_, relators_, central_); }

 private:
  int order_of(GeneratorId g) const {
    for (const auto& c : central_)
      if (c.gen == g) return c.order;
    throw std::logic_error("rel_equals with a non-central right-hand side");
  }

  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<CentralGenerator> central_;
};

Word g(GeneratorId id) { return Word::of(id); }
Word inv(GeneratorId id) { return Word{neg(id)}; }

std::string edge_name(const EdgeNaming& naming, int i, int j) {
  return naming.prefix + std::to_string(i + naming.vertex_base) + "_" +
         std::to_string(j + naming.vertex_base);
}

/// The relator families of the edge presentation, before the right-hand
/// sides of the spinor variants are attached.
struct EdgeFamilies {
  struct Power {
    Word base;
    int exponent;
    bool is_virtual;
  };
  std::vector<Power> powers;
  std::vector<std::pair<Word, int>> cycles;  // word, number of edges
  std::vector<Word> paths2;                  // squared in the relator
  std::vector<Word> paths3;
  std::vector<Word> commutators;
};

bool not_connected(const ConnectedExtension& e, const OrientedEdge& x, const OrientedEdge& y) {
  const int a[2] = {x.tail, x.head};
  const int b[2] = {y.tail, y.head};
  for (int p : a)
    for (int q : b)
      if (p == q || e.adjacent(p, q)) return false;
  return true;
}

EdgeFamilies edge_families(const ConnectedExtension& e, const EdgeGeneratorMap& map) {
  EdgeFamilies f;
  const CoxeterMatrix& m = e.matrix();
  const int n = e.num_vertices();

  for (bool virt : {false, true})
    for (std::size_t k = 0; k < map.edges.size(); ++k) {
      const auto& edge = map.edges[k];
      if (edge.is_virtual != virt || edge.label == kInfinity) continue;
      f.powers.push_back({g({static_cast<std::uint32_t>(k)}), edge.label, virt});
    }

  for (const Cycle& c : cycle_basis(e))
    f.cycles.emplace_back(map.path_word(c), static_cast<int>(c.size()) - 1);

  for (int i = 0; i < n; ++i)
    for (int j : e.neighbours(i))
      for (int k : e.neighbours(j)) {
        if (k == i || i >= k || m(i, k) != 2) continue;
        f.paths2.push_back(map.path_word({i, j, k}));
      }

  for (int i = 0; i < n; ++i)
    for (int j : e.neighbours(i))
      for (int k : e.neighbours(j)) {
        if (k == i) continue;
        for (int l : e.neighbours(k)) {
          if (l == i || l == j || i >= l || m(i, l) != 2) continue;
          f.paths3.push_back(map.path_word({i, j, k, l}));
        }
      }

  for (std::size_t x = 0; x < map.edges.size(); ++x)
    for (std::size_t y = x + 1; y < map.edges.size(); ++y)
      if (not_connected(e, map.edges[x], map.edges[y]))
        f.commutators.push_back(commutator(g({static_cast<std::uint32_t>(x)}),
                                           g({static_cast<std::uint32_t>(y)})));
  return f;
}

EdgeGeneratorMap add_edge_generators(Builder& b, const ConnectedExtension& e,
                                     const EdgeNaming& naming) {
  EdgeGeneratorMap map;
  map.edges = e.edges();
  for (const auto& edge : map.edges) b.add(edge_name(naming, edge.tail, edge.head));
  return map;
}

}  // namespace

GeneratorId EdgeGeneratorMap::generator(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (edges[k].tail == i && edges[k].head == j) return {static_cast<std::uint32_t>(k)};
  throw std::invalid_argument("no edge between " + std::to_string(i) + " and " +
                              std::to_string(j));
}

Letter EdgeGeneratorMap::letter(int p, int q) const {
  return Letter(generator(p, q), p > q);
}

Word EdgeGeneratorMap::path_word(const std::vector<int>& path) const {
  Word w;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) w.push_back(letter(path[k], path[k + 1]));
  return w;
}

Word GroupHom::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    const Word& img = images.at(l.gen().index);
    out *= l.inverse() ? word_invert(img) : img;
  }
  return out;
}

GroupHom identity_hom(const Presentation& source, const Presentation& target) {
  if (source.rank() != target.rank())
    throw std::invalid_argument("identity_hom needs presentations of equal rank");
  GroupHom h{source, target, {}, false};
  for (std::uint32_t i = 0; i < source.rank(); ++i) h.images.push_back(Word::of({i}));
  return h;
}

Presentation coxeter_presentation(const CoxeterMatrix& m) {
  Builder b;
  const int n = m.rank();
  std::vector<GeneratorId> s;
  for (int i = 0; i < n; ++i) s.push_back(b.add("s" + std::to_string(i)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (m.infinite(i, j)) continue;
      b.rel((g(s[static_cast<std::size_t>(i)]) * g(s[static_cast<std::size_t>(j)])).pow(m(i, j)));
    }
  return b.build();
}

Presentation bourbaki_presentation(const CoxeterMatrix& m, int base) {
  const int n = m.rank();
  if (base < 0 || base >= n) throw std::invalid_argument("Bourbaki base vertex out of range");
  Builder b;
  std::vector<GeneratorId> R(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    if (i != base) R[static_cast<std::size_t>(i)] = b.add("R" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    if (i != base && !m.infinite(base, i)) b.rel(g(R[static_cast<std::size_t>(i)]).pow(m(base, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i == base || j == base || m.infinite(i, j)) continue;
      b.rel((inv(R[static_cast<std::size_t>(i)]) * g(R[static_cast<std::size_t>(j)])).pow(m(i, j)));
    }
  return b.build();
}

std::pair<Presentation, EdgeGeneratorMap> edge_presentation(const ConnectedExtension& e,
                                                            const EdgeNaming& naming) {
  Builder b;
  EdgeGeneratorMap map = add_edge_generators(b, e, naming);
  EdgeFamilies f = edge_families(e, map);
  for (const auto& p : f.powers) b.rel(p.base.pow(p.exponent));
  for (const auto& [w, len] : f.cycles) b.rel(w);
  for (const Word& w : f.paths2) b.rel(w.pow(2));
  for (const Word& w : f.paths3) b.rel(w.pow(2));
  for (const Word& w : f.commutators) b.rel(w);
  return {b.build(), std::move(map)};
}

Presentation chain_presentation(Family family, Variant variant, int n) {
  if (variant == Variant::Coxeter) return coxeter_presentation(standard_matrix(family, n));
  if (n < minimum_rank(family, variant))
    throw std::invalid_argument("rank " + std::to_string(n) + " below minimum " +
                                std::to_string(minimum_rank(family, variant)) + " for type " +
                                to_string(family) + " " + to_string(variant));

  Builder b;
  const std::string prefix = variant == Variant::Carmichael ? "a"
                             : variant == Variant::Bourbaki ? "R"
                                                            : "r";
  // x[i] is generator number i (1-based), x[0] unused.
  std::vector<GeneratorId> x(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) x[static_cast<std::size_t>(i)] = b.add(prefix + std::to_string(i));
  auto X = [&](int i) { return g(x[static_cast<std::size_t>(i)]); };
  auto Xi = [&](int i) { return inv(x[static_cast<std::size_t>(i)]); };
  const int last = n - 1;

  if (variant == Variant::Carmichael) {
    switch (family) {
      case Family::A:
        for (int i = 1; i <= last; ++i) b.rel(X(i).pow(3));
        for (int i = 1; i <= last; ++i)
          for (int j = i + 1; j <= last; ++j) b.rel((X(i) * X(j)).pow(2));
        break;
      case Family::B:
        for (int i = 1; i <= last; ++i) b.rel(X(i).pow(4));
        for (int i = 2; i <= last; ++i) b.rel((X(1) * X(i)).pow(3));
        for (int i = 2; i <= last; ++i) b.rel((X(1).pow(2) * X(i)).pow(2));
        for (int i = 2; i <= last; ++i)
          for (int j = i + 1; j <= last; ++j) b.rel((X(1) * X(i) * X(1) * X(j)).pow(2));
        break;
      case Family::D:
        for (int i = 1; i <= last; ++i) b.rel(X(i).pow(3));
        for (int i = 2; i <= last; ++i) b.rel((X(1) * X(i)).pow(2));
        for (int i = 3; i <= last; ++i) b.rel((X(2).pow(2) * X(i)).pow(2));
        for (int i = 3; i <= last; ++i)
          for (int j = i + 1; j <= last; ++j) b.rel((X(i) * X(j)).pow(2));
        break;
    }
    return b.build();
  }

  if (variant == Variant::Bourbaki) {
    const int special = family == Family::D ? 2 : 1;
    const int special_order = family == Family::A ? 3 : family == Family::B ? 4 : 3;
    if (family == Family::D) {
      b.rel(X(2).pow(3));
      for (int i = 1; i <= last; ++i)
        if (i != special) b.rel(X(i).pow(2));
    } else {
      b.rel(X(1).pow(special_order));
      for (int i = 2; i <= last; ++i) b.rel(X(i).pow(2));
    }
    for (int i = 1; i + 1 <= last; ++i) b.rel((Xi(i) * X(i + 1)).pow(3));
    for (int i = 1; i <= last; ++i)
      for (int j = i + 2; j <= last; ++j) b.rel((Xi(i) * X(j)).pow(2));
    return b.build();
  }

  // Edge variant.
  if (family == Family::D) {
    for (int i = 1; i <= last; ++i) b.rel(X(i).pow(3));
    b.rel((X(1) * X(2).pow(2)).pow(2));
    if (last >= 3) b.rel((X(1) * X(3)).pow(2));
    for (int i = 2; i + 1 <= last; ++i) b.rel((X(i) * X(i + 1)).pow(2));
    if (last >= 4) b.rel((X(1) * X(3) * X(4)).pow(2));
    for (int i = 2; i + 2 <= last; ++i) b.rel((X(i) * X(i + 1) * X(i + 2)).pow(2));
    for (int i = 5; i <= last; ++i) b.rel(commutator(X(1), X(i)));
    for (int i = 2; i <= last; ++i)
      for (int j = i + 3; j <= last; ++j) b.rel(commutator(X(i), X(j)));
    return b.build();
  }
  for (int i = 1; i <= last; ++i) b.rel(X(i).pow(family == Family::B && i == 1 ? 4 : 3));
  for (int i = 1; i + 1 <= last; ++i) b.rel((X(i) * X(i + 1)).pow(2));
  for (int i = 1; i + 2 <= last; ++i) b.rel((X(i) * X(i + 1) * X(i + 2)).pow(2));
  for (int i = 1; i <= last; ++i)
    for (int j = i + 3; j <= last; ++j) b.rel(commutator(X(i), X(j)));
  return b.build();
}

std::vector<Word> carmichael_generators(Family family, int rank, const OrientedEdge& edge) {
  const CoxeterMatrix m = standard_matrix(family, rank);
  const bool ok = family == Family::D ? (edge.tail == 0 && edge.head == 2)
                                      : (edge.tail == 0 && edge.head == 1);
  if (!ok)
    throw std::invalid_argument("unsupported distinguished edge for type " + to_string(family));
  auto s = [](int i) { return Word::of({static_cast<std::uint32_t>(i)}); };

  std::vector<Word> a;
  if (rank < 2) return a;
  if (family == Family::D) {
    a.push_back(s(0) * s(2));
    a.push_back(s(1) * a[0] * s(1));
    // a_3 conjugates a_1, not a_2; the chain continues from there.
    for (int i = 3; i < rank; ++i) a.push_back(s(i) * (i == 3 ? a[0] : a.back()) * s(i));
  } else {
    a.push_back(s(0) * s(1));
    for (int i = 2; i < rank; ++i) a.push_back(s(i) * a.back() * s(i));
  }
  return a;
}

Presentation vv_presentation(int n) {
  if (n < 2) throw std::invalid_argument("vv presentation needs n >= 2");
  Builder b;
  std::vector<GeneratorId> rho(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) rho[static_cast<std::size_t>(i)] = b.add("rho" + std::to_string(i));
  auto X = [&](int i) { return g(rho[static_cast<std::size_t>(i)]); };
  const int last = n - 1;
  for (int i = 1; i <= last; ++i) b.rel(X(i).pow(3));
  for (int i = 1; i + 1 <= last; ++i) b.rel((X(i) * X(i + 1)).pow(2));
  for (int i = 1; i + 2 <= last; ++i)
    b.rel(X(i) * X(i + 1).pow(2) * X(i + 2) * word_invert(X(i + 2) * X(i)));
  for (int i = 1; i <= last; ++i)
    for (int j = i + 3; j <= last; ++j) b.rel(commutator(X(i), X(j)));
  return b.build();
}

Presentation spinor_presentation(const CoxeterMatrix& m, SpinorVariant variant) {
  Builder b;
  const int n = m.rank();
  const bool prime = variant == SpinorVariant::TildePrime;
  std::vector<GeneratorId> s;
  for (int i = 0; i < n; ++i) s.push_back(b.add((prime ? "tsp" : "ts") + std::to_string(i)));
  const GeneratorId alpha = b.add(prime ? "alphap" : "alpha");
  b.central(alpha, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (m.infinite(i, j)) continue;
      const int mij = m(i, j);
      Word w = (g(s[static_cast<std::size_t>(i)]) * g(s[static_cast<std::size_t>(j)])).pow(mij);
      const bool twisted = prime || mij % 2 == 0;
      b.rel_equals(std::move(w), twisted ? std::vector{std::pair{alpha, 1}}
                                         : std::vector<std::pair<GeneratorId, int>>{});
    }
  return b.build();
}

Presentation spinor_plus_presentation(const CoxeterMatrix& m, SpinorStyle style,
                                      SpinorVariant variant) {
  const bool prime = variant == SpinorVariant::TildePrime;
  Builder b;
  if (style == SpinorStyle::Bourbaki) {
    const int n = m.rank();
    std::vector<GeneratorId> R(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i)
      R[static_cast<std::size_t>(i)] = b.add((prime ? "tRp" : "tR") + std::to_string(i));
    const GeneratorId z = b.add(prime ? "zp" : "z");
    b.central(z, 2);
    auto rhs = [&](int mij) { return std::vector{std::pair{z, prime ? 1 : mij - 1}}; };
    for (int i = 1; i < n; ++i)
      if (!m.infinite(0, i)) b.rel_equals(g(R[static_cast<std::size_t>(i)]).pow(m(0, i)), rhs(m(0, i)));
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (m.infinite(i, j)) continue;
        b.rel_equals((inv(R[static_cast<std::size_t>(i)]) * g(R[static_cast<std::size_t>(j)])).pow(m(i, j)),
                     rhs(m(i, j)));
      }
    return b.build();
  }

  const ConnectedExtension e = connected_extension(graph_from_matrix(m));
  EdgeGeneratorMap map = add_edge_generators(b, e, {prime ? "trp" : "tr", 0});
  const GeneratorId z = b.add(prime ? "zp" : "z");
  b.central(z, 2);
  EdgeFamilies f = edge_families(e, map);
  for (const auto& p : f.powers)
    b.rel_equals(p.base.pow(p.exponent), {{z, prime ? 1 : p.exponent - 1}});
  for (const auto& [w, len] : f.cycles)
    b.rel_equals(w, {{z, prime ? len : 0}});
  for (const Word& w : f.paths2) b.rel_equals(w.pow(2), {{z, 1}});
  for (const Word& w : f.paths3) b.rel_equals(w.pow(2), {{z, 1}});
  for (const Word& w : f.commutators) b.rel(w);
  return b.build();
}

namespace {

GroupHom spinor_twist(const CoxeterMatrix& m, SpinorVariant from) {
  const SpinorVariant to =
      from == SpinorVariant::Tilde ? SpinorVariant::TildePrime : SpinorVariant::Tilde;
  Presentation src = spinor_plus_presentation(m, SpinorStyle::Edge, from);
  Presentation dst = spinor_plus_presentation(m, SpinorStyle::Edge, to);
  // Edge generators come first in both, the central generator last.
  const GeneratorId zt{static_cast<std::uint32_t>(dst.rank() - 1)};
  GroupHom h{src, dst, {}, false};
  for (std::uint32_t i = 0; i + 1 < src.rank(); ++i) h.images.push_back(Word::of(zt) * Word::of({i}));
  h.images.push_back(Word::of(zt));
  return h;
}

}  // namespace

GroupHom spinor_iso(const CoxeterMatrix& m) { return spinor_twist(m, SpinorVariant::Tilde); }

GroupHom spinor_iso_inverse(const CoxeterMatrix& m) {
  return spinor_twist(m, SpinorVariant::TildePrime);
}

Presentation universal_extension(UniversalCover which) {
  Builder b;
  const int gens = which == UniversalCover::A5 ? 4 : 5;
  std::vector<GeneratorId> r(static_cast<std::size_t>(gens + 1));
  for (int i = 1; i <= gens; ++i) r[static_cast<std::size_t>(i)] = b.add("tr" + std::to_string(i));
  const GeneratorId z = b.add("z");
  const GeneratorId zeta = b.add("zeta");
  b.central(z, 2);
  b.central(zeta, 3);
  auto X = [&](int i) { return g(r[static_cast<std::size_t>(i)]); };
  // x y = zeta^k y x, i.e. [x, y] = zeta^k.
  auto twisted_commute = [&](int i, int j, int k) {
    b.rel_equals(commutator(X(i), X(j)), {{zeta, k}});
  };

  for (int i = 1; i <= gens; ++i) b.rel(X(i).pow(3));
  if (which == UniversalCover::A5) {
    b.rel_equals((X(1) * X(2)).pow(2), {{z, 1}});
    b.rel_equals((X(2) * X(3)).pow(2), {{z, 1}, {zeta, 1}});
    b.rel_equals((X(3) * X(4)).pow(2), {{z, 1}});
    b.rel_equals((X(1) * X(2) * X(3)).pow(2), {{z, 1}});
    b.rel_equals((X(2) * X(3) * X(4)).pow(2), {{z, 1}});
    twisted_commute(1, 4, 2);
  } else {
    for (int i = 1; i <= 4; ++i) b.rel_equals((X(i) * X(i + 1)).pow(2), {{z, 1}});
    b.rel_equals((X(1) * X(2) * X(3)).pow(2), {{z, 1}});
    b.rel_equals((X(2) * X(3) * X(4)).pow(2), {{z, 1}, {zeta, 1}});
    b.rel_equals((X(3) * X(4) * X(5)).pow(2), {{z, 1}});
    twisted_commute(1, 4, 1);
    twisted_commute(2, 5, 1);
    twisted_commute(1, 5, 2);
  }
  return b.build();
}

std::vector<int> shortest_path(const ConnectedExtension& e, int from, int to) {
  const int n = e.num_vertices();
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::deque<int> queue{from};
  parent[static_cast<std::size_t>(from)] = -1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : e.neighbours(v))
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  if (parent[static_cast<std::size_t>(to)] == -2)
    throw std::invalid_argument("no path between vertices");
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::pair<GroupHom, GroupHom> bourbaki_edge_homs(const CoxeterMatrix& m) {
  const ConnectedExtension e = connected_extension(graph_from_matrix(m));
  auto [edge, map] = edge_presentation(e);
  Presentation bour = bourbaki_presentation(m, 0);
  // Bourbaki generator R_i has index i - 1.
  auto R = [](int i) { return Word::of({static_cast<std::uint32_t>(i - 1)}); };

  GroupHom phi{edge, bour, {}, false};
  for (const auto& ed : map.edges)
    phi.images.push_back(ed.tail == 0 ? R(ed.head) : word_invert(R(ed.tail)) * R(ed.head));

  GroupHom psi{bour, edge, {}, false};
  for (int i = 1; i < m.rank(); ++i) psi.images.push_back(map.path_word(shortest_path(e, 0, i)));
  return {std::move(phi), std::move(psi)};
}

}  // namespace altcox
