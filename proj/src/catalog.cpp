#include "altcox/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "altcox/oracle.hpp"

namespace altcox {

const std::vector<std::string>& catalog_groups() {
  static const std::vector<std::string> groups{
      "images", "carmichael", "orders", "spinor",        "vv",        "artin",
      "paths",  "prop33",     "bourbaki-edge", "universal", "example"};
  return groups;
}

CoxeterMatrix example_matrix() {
  return CoxeterMatrix({{1, 4, 2, 2, 2},
                        {4, 1, 2, 2, 2},
                        {2, 2, 1, 3, 3},
                        {2, 2, 3, 1, 3},
                        {2, 2, 3, 3, 1}});
}

ConnectedExtension example_extension() {
  return connected_extension(graph_from_matrix(example_matrix()), std::vector<int>{1, 2});
}

const std::vector<std::string>& example_expected_relators() {
  static const std::vector<std::string> rels{
      "r1_2^4",
      "r3_4^3",
      "r3_5^3",
      "r4_5^3",
      "r2_3^2",
      "r3_4 r4_5 r3_5^-1",
      "r1_2 r2_3 r1_2 r2_3",
      "r2_3 r3_4 r2_3 r3_4",
      "r2_3 r3_5 r2_3 r3_5",
      "r1_2 r2_3 r3_4 r1_2 r2_3 r3_4",
      "r1_2 r2_3 r3_5 r1_2 r2_3 r3_5",
      "r2_3 r3_4 r4_5 r2_3 r3_4 r4_5",
      "r2_3 r3_5 r4_5^-1 r2_3 r3_5 r4_5^-1",
      "r1_2 r4_5 r1_2^-1 r4_5^-1",
  };
  return rels;
}

bool artin_relations_hold(int n) {
  const std::vector<WreathElement> r = realization_images(Family::A, Variant::Edge, n);
  std::vector<WreathElement> rp;
  for (std::size_t k = 0; k < r.size(); ++k)
    rp.push_back((k + 1) % 2 == 1 ? r[k].inverse() : r[k]);
  for (std::size_t i = 0; i + 1 < rp.size(); ++i) {
    const WreathElement lhs = rp[i] * rp[i + 1] * rp[i];
    const WreathElement rhs = rp[i + 1] * rp[i] * rp[i + 1];
    if (!(lhs * rhs.inverse()).is_identity()) return false;
  }
  return true;
}

// Example realization --------------------------------------------------------

struct ExampleRealization::Impl {
  using Mat = std::array<long long, 9>;
  struct Element {
    WreathElement b2;
    Mat m;
  };

  static Mat mul(const Mat& a, const Mat& b) {
    Mat c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) c[3 * i + j] += a[3 * i + k] * b[3 * k + j];
    return c;
  }
  static Mat unit() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }
  static Element times(const Element& x, const Element& y) { return {x.b2 * y.b2, mul(x.m, y.m)}; }
  static bool is_one(const Element& x) { return x.b2.is_identity() && x.m == unit(); }

  Impl() {
    const WreathElement one2 = WreathElement::identity(2);
    s.push_back({WreathElement::with_flags({1}, Permutation::identity(2)), unit()});
    s.push_back({WreathElement(Permutation::cycles(2, {{1, 2}})), unit()});
    // Triangle vertices 2, 3, 4: s_i(v) = v - (A v)_i e_i with A_ii = 2, A_ij = -1.
    for (int i = 0; i < 3; ++i) {
      Mat m = unit();
      for (int j = 0; j < 3; ++j) m[3 * i + j] -= (i == j ? 2 : -1);
      s.push_back({one2, m});
    }
    const ConnectedExtension e = example_extension();
    for (const auto& edge : e.edges())
      edges.push_back(times(s[static_cast<std::size_t>(edge.tail)],
                            s[static_cast<std::size_t>(edge.head)]));
  }

  Element eval(const Word& w) const {
    Element x{WreathElement::identity(2), unit()};
    for (Letter l : w) {
      // Every s_i is an involution, so (s_i s_j)^-1 = s_j s_i.
      const Element& g = edges.at(l.gen().index);
      if (!l.inverse()) {
        x = times(x, g);
      } else {
        const Element inv{g.b2.inverse(), inverse_of(g.m)};
        x = times(x, inv);
      }
    }
    return x;
  }

  /// Inverse of a product of two reflections: the reversed product.
  Mat inverse_of(const Mat& m) const {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        if (mul(s[a].m, s[b].m) == m) return mul(s[b].m, s[a].m);
    throw std::logic_error("matrix is not a product of two reflections");
  }

  std::vector<Element> s;
  std::vector<Element> edges;
};

ExampleRealization::ExampleRealization() : impl_(std::make_shared<const Impl>()) {}

bool ExampleRealization::trivial(const Word& w) const { return Impl::is_one(impl_->eval(w)); }

bool ExampleRealization::infinite_order_witness(int steps) const {
  const auto& s = impl_->s;
  const Impl::Mat c = Impl::mul(Impl::mul(s[2].m, s[3].m), s[4].m);
  const Impl::Mat x = Impl::mul(c, c);
  Impl::Mat p = Impl::unit();
  long long prev = 1;
  for (int k = 1; k <= steps; ++k) {
    p = Impl::mul(p, x);
    if (p == Impl::unit()) return false;
    long long big = 0;
    for (long long v : p) big = std::max(big, std::llabs(v));
    if (k > 1 && big < prev) return false;
    prev = big;
  }
  return prev > 1;
}

// Path relators ---------------------------------------------------------------

std::size_t path_relator_failures(const ConnectedExtension& e, std::size_t walks, unsigned seed,
                                  const std::function<bool(const Word&)>& trivial) {
  const EdgeGeneratorMap map = edge_presentation(e).second;
  const CoxeterMatrix& m = e.matrix();
  std::mt19937 rng(seed);
  const int n = e.num_vertices();
  std::size_t failures = 0;
  std::size_t done = 0;
  while (done < walks) {
    std::vector<int> path{static_cast<int>(rng() % static_cast<unsigned>(n))};
    const int length = 1 + static_cast<int>(rng() % 8u);
    for (int k = 0; k < length; ++k) {
      const auto& nb = e.neighbours(path.back());
      path.push_back(nb[rng() % nb.size()]);
    }
    const int i = path.front();
    const int j = path.back();
    if (m.infinite(i, j)) continue;
    ++done;
    if (!trivial(map.path_word(path).pow(m(i, j)))) ++failures;
  }
  return failures;
}

// Catalog ---------------------------------------------------------------------

namespace {

struct Task {
  std::string group;
  std::string name;
  std::function<CheckResult()> run;
};

std::string triple(Family f, Variant v, int n) {
  return to_string(f) + "/" + to_string(v) + "/" + std::to_string(n);
}

std::vector<int> ranks(Family f, int a_hi, int b_hi, int d_hi) {
  std::vector<int> out;
  const int lo = f == Family::D ? 3 : 2;
  const int hi = f == Family::A ? a_hi : f == Family::B ? b_hi : d_hi;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

constexpr Family kFamilies[] = {Family::A, Family::B, Family::D};
constexpr Variant kVariants[] = {Variant::Coxeter, Variant::Carmichael, Variant::Bourbaki,
                                 Variant::Edge};

Presentation catalog_presentation(Family f, Variant v, int n) {
  return chain_presentation(f, v, n);
}

CheckResult ok(bool passed, std::string detail = {}) {
  return {"", "", passed, std::move(detail)};
}

std::vector<Task> build_tasks(const EnumerationOptions& eo) {
  std::vector<Task> tasks;
  auto add = [&](std::string g, std::string name, std::function<CheckResult()> fn) {
    tasks.push_back({std::move(g), std::move(name), std::move(fn)});
  };

  for (Family f : kFamilies)
    for (Variant v : kVariants)
      for (int n : ranks(f, 7, 5, 5))
        add("images", triple(f, v, n), [f, v, n] {
          const Presentation p = catalog_presentation(f, v, n);
          const auto images = realization_images(f, v, n);
          if (!verify_hom(p, images)) return ok(false, "a relator is not sent to the identity");
          for (const auto& x : images) {
            const bool in = v == Variant::Coxeter ? epsilon(x) == -1
                                                  : subgroup_membership_characters(x, plus_subgroup(f));
            if (!in) return ok(false, "image " + x.to_string() + " violates the character condition");
          }
          return ok(true);
        });

  for (Family f : kFamilies)
    for (int n : ranks(f, 7, 5, 5))
      add("carmichael", to_string(f) + "/" + std::to_string(n), [f, n] {
        const OrientedEdge edge = f == Family::D ? OrientedEdge{0, 2, 3, false}
                                                 : OrientedEdge{0, 1, f == Family::B ? 4 : 3, false};
        const auto words = carmichael_generators(f, n, edge);
        const auto s = realization_images(f, Variant::Coxeter, n);
        const auto a = realization_images(f, Variant::Carmichael, n);
        for (std::size_t k = 0; k < words.size(); ++k)
          if (!(eval_word(s, words[k]) == a[k]))
            return ok(false, "a" + std::to_string(k + 1) + " evaluates to " +
                                 eval_word(s, words[k]).to_string());
        return ok(true);
      });

  for (Family f : kFamilies)
    for (Variant v : kVariants)
      for (int n : ranks(f, 6, 4, 5))
        add("orders", triple(f, v, n), [f, v, n, eo] {
          const std::size_t engine = order(catalog_presentation(f, v, n), eo);
          const std::size_t oracle = generated_order(realization_images(f, v, n), oracle_degree(f, n));
          const std::size_t closed = closed_form_order(f, n) * (v == Variant::Coxeter ? 2 : 1);
          std::ostringstream os;
          os << "engine " << engine << ", oracle " << oracle << ", closed form " << closed;
          return ok(engine == oracle && oracle == closed, os.str());
        });

  for (Family f : kFamilies)
    for (int n : ranks(f, 5, 4, 4))
      for (SpinorStyle style : {SpinorStyle::Edge, SpinorStyle::Bourbaki})
        for (SpinorVariant sv : {SpinorVariant::Tilde, SpinorVariant::TildePrime}) {
          const std::string name = to_string(f) + "/" + std::to_string(n) +
                                   (style == SpinorStyle::Edge ? "/edge" : "/bourbaki") +
                                   (sv == SpinorVariant::Tilde ? "/tilde" : "/prime");
          add("spinor", name, [f, n, style, sv, eo] {
            const CoxeterMatrix m = standard_matrix(f, n);
            const std::size_t plain = order(
                style == SpinorStyle::Edge ? edge_presentation(connected_extension(graph_from_matrix(m))).first
                                           : bourbaki_presentation(m, 0),
                eo);
            const std::size_t cover = order(spinor_plus_presentation(m, style, sv), eo);
            return ok(cover == 2 * plain,
                      "cover " + std::to_string(cover) + ", plain " + std::to_string(plain));
          });
        }

  for (int n = 2; n <= 5; ++n)
    add("vv", "A/" + std::to_string(n), [n, eo] {
      const Presentation vv = vv_presentation(n);
      const Presentation edge = chain_presentation(Family::A, Variant::Edge, n);
      const std::size_t o = order(vv, eo);
      GroupHom to_edge = identity_hom(vv, edge);
      GroupHom to_vv = identity_hom(edge, vv);
      const bool homs = verify_hom(to_edge, eo) && verify_hom(to_vv, eo);
      return ok(o == closed_form_order(Family::A, n) && homs,
                "order " + std::to_string(o) + (homs ? ", homs verified" : ", hom failed"));
    });

  for (int n = 2; n <= 7; ++n)
    add("artin", "A/" + std::to_string(n), [n] { return ok(artin_relations_hold(n)); });

  add("paths", "A/6", [eo] {
    const ConnectedExtension e =
        connected_extension(graph_from_matrix(standard_matrix(Family::A, 6)));
    const EnumerationResult reg = enumerate(edge_presentation(e).first, {}, eo);
    if (!reg.completed()) return ok(false, "enumeration exceeded the cap");
    const std::size_t bad =
        path_relator_failures(e, 50, 20240601u, [&](const Word& w) { return word_in_subgroup(reg, w); });
    return ok(bad == 0, std::to_string(bad) + " of 50 walks failed");
  });
  add("paths", "example", [] {
    const ExampleRealization real;
    const std::size_t bad = path_relator_failures(example_extension(), 50, 20240602u,
                                                  [&](const Word& w) { return real.trivial(w); });
    return ok(bad == 0, std::to_string(bad) + " of 50 walks failed");
  });

  for (Family f : {Family::A, Family::B})
    add("prop33", to_string(f) + "/3", [f, eo] {
      const CoxeterMatrix m = standard_matrix(f, 3);
      GroupHom there = spinor_iso(m);
      GroupHom back = spinor_iso_inverse(m);
      const bool homs = verify_hom(there, eo) && verify_hom(back, eo);
      const bool inverse =
          composite_is_identity(there, back, eo) && composite_is_identity(back, there, eo);
      return ok(homs && inverse, std::string(homs ? "homs verified" : "hom failed") +
                                     (inverse ? ", mutually inverse" : ", composite not identity"));
    });

  for (Family f : kFamilies)
    for (int n : ranks(f, 5, 4, 4))
      add("bourbaki-edge", to_string(f) + "/" + std::to_string(n), [f, n, eo] {
        auto [phi, psi] = bourbaki_edge_homs(standard_matrix(f, n));
        const bool homs = verify_hom(phi, eo) && verify_hom(psi, eo);
        const bool inverse = composite_is_identity(phi, psi, eo) && composite_is_identity(psi, phi, eo);
        return ok(homs && inverse);
      });

  for (UniversalCover u : {UniversalCover::A5, UniversalCover::A6}) {
    const int n = u == UniversalCover::A5 ? 5 : 6;
    add("universal", "A" + std::to_string(n) + "/extension", [u, n, eo] {
      const std::size_t o = order(universal_extension(u), eo);
      const std::size_t want = 6 * closed_form_order(Family::A, n);
      return ok(o == want, "order " + std::to_string(o) + ", expected " + std::to_string(want));
    });
    add("universal", "A" + std::to_string(n) + "/quotient", [u, n, eo] {
      const Presentation p = universal_extension(u);
      const std::size_t o = order(p.with_relators({p.gen("z"), p.gen("zeta")}), eo);
      const std::size_t want = closed_form_order(Family::A, n);
      return ok(o == want, "order " + std::to_string(o) + ", expected " + std::to_string(want));
    });
  }

  add("example", "relators", [] {
    const Presentation p = edge_presentation(example_extension(), {"r", 1}).first;
    const auto& want = example_expected_relators();
    if (p.relators().size() != want.size())
      return ok(false, std::to_string(p.relators().size()) + " relators");
    for (std::size_t k = 0; k < want.size(); ++k)
      if (render_word(p.relators()[k], p) != want[k])
        return ok(false, "relator " + std::to_string(k + 1) + " is " + render_word(p.relators()[k], p));
    return ok(true);
  });
  add("example", "realization", [] {
    const Presentation p = edge_presentation(example_extension()).first;
    const ExampleRealization real;
    for (const Word& r : p.relators())
      if (!real.trivial(r)) return ok(false, "relator " + render_word(r, p) + " is not trivial");
    return ok(true);
  });
  add("example", "order", [] {
    EnumerationOptions capped;
    capped.max_cosets = 100'000;
    const bool capped_out = !enumerate(edge_presentation(example_extension()).first, {}, capped).completed();
    const bool infinite = ExampleRealization().infinite_order_witness(200);
    return ok(capped_out && infinite,
              std::string("engine ") + (capped_out ? "exceeds 100000 cosets" : "completed") +
                  ", realization " + (infinite ? "has an element of infinite order" : "looks finite"));
  });

  return tasks;
}

}  // namespace

std::vector<CheckResult> run_catalog(const CatalogOptions& options) {
  if (!options.only.empty()) {
    const auto& g = catalog_groups();
    if (std::find(g.begin(), g.end(), options.only) == g.end())
      throw std::invalid_argument("unknown check group: " + options.only);
  }
  std::vector<Task> tasks;
  for (auto& t : build_tasks(options.enumeration))
    if (options.only.empty() || t.group == options.only) tasks.push_back(std::move(t));

  std::vector<CheckResult> results(tasks.size());
  auto run_one = [&](std::size_t k) {
    CheckResult r;
    try {
      r = tasks[k].run();
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("error: ") + ex.what();
    }
    r.group = tasks[k].group;
    r.name = tasks[k].name;
    results[k] = std::move(r);
  };
  const auto n = static_cast<std::ptrdiff_t>(tasks.size());
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < n; ++k) run_one(static_cast<std::size_t>(k));
  } else {
    for (std::ptrdiff_t k = 0; k < n; ++k) run_one(static_cast<std::size_t>(k));
  }
  return results;
}

CheckResult check_presentation_images(const Presentation& p, Family family, Variant variant,
                                      int rank) {
  CheckResult r{"file", triple(family, variant, rank), false, {}};
  const auto images = realization_images(family, variant, rank);
  if (images.size() != p.rank()) {
    r.detail = "presentation has " + std::to_string(p.rank()) + " generators, realization has " +
               std::to_string(images.size());
    return r;
  }
  for (const Word& w : p.relators())
    if (!eval_word(images, w).is_identity()) {
      r.detail = "relator " + render_word(w, p) + " is not sent to the identity";
      return r;
    }
  r.passed = true;
  return r;
}

std::string render_results(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.group << "  " << r.name;
    if (!r.detail.empty()) os << "  " << r.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace altcox
