#include <algorithm>

#include "altcox/catalog.hpp"
#include "altcox/oracle.hpp"
#include "altcox/presentations.hpp"
#include "altcox/tc.hpp"
#include "doctest.h"

using namespace altcox;

namespace {

std::vector<std::string> rendered(const Presentation& p) {
  std::vector<std::string> out;
  for (const Word& r : p.relators()) out.push_back(render_word(r, p));
  return out;
}

std::vector<Word> sorted_relators(const Presentation& p) {
  std::vector<Word> r = p.relators();
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

TEST_CASE("coxeter presentation") {
  const Presentation p1 = coxeter_presentation(standard_matrix(Family::A, 1));
  CHECK(p1.generators() == std::vector<std::string>{"s0"});
  CHECK(rendered(p1) == std::vector<std::string>{"s0^2"});

  const Presentation a3 = coxeter_presentation(standard_matrix(Family::A, 3));
  CHECK(a3.relators().size() == 6);
  CHECK(rendered(a3)[1] == "s0 s1 s0 s1 s0 s1");

  const Presentation inf = coxeter_presentation(CoxeterMatrix({{1, kInfinity}, {kInfinity, 1}}));
  CHECK(rendered(inf) == std::vector<std::string>{"s0^2", "s1^2"});
}

TEST_CASE("bourbaki presentation") {
  const Presentation b = bourbaki_presentation(standard_matrix(Family::B, 3), 0);
  CHECK(rendered(b) ==
        std::vector<std::string>{"R1^4", "R2^2", "R1^-1 R2 R1^-1 R2 R1^-1 R2"});
  CHECK_THROWS_AS(bourbaki_presentation(standard_matrix(Family::B, 3), 3), std::invalid_argument);
  const Presentation shifted = bourbaki_presentation(standard_matrix(Family::A, 3), 1);
  CHECK(shifted.generators() == std::vector<std::string>{"R0", "R2"});
}

TEST_CASE("the example's edge relators") {
  const auto [p, map] = edge_presentation(example_extension(), {"r", 1});
  CHECK(p.generators() == std::vector<std::string>{"r1_2", "r2_3", "r3_4", "r3_5", "r4_5"});
  CHECK(rendered(p) == example_expected_relators());
  CHECK(map.generator(4, 3).index == 4);
  CHECK(map.letter(4, 2) == neg(GeneratorId{3}));
  CHECK_THROWS_AS(map.generator(0, 4), std::invalid_argument);
}

TEST_CASE("single edge gives a cyclic group of order 3") {
  const auto [p, map] = edge_presentation(
      connected_extension(graph_from_matrix(standard_matrix(Family::A, 2))));
  CHECK(p.rank() == 1);
  CHECK(rendered(p) == std::vector<std::string>{"r0_1^3"});
  CHECK(order(p) == 3);
}

TEST_CASE("chain presentations: relator sets") {
  const Presentation car = chain_presentation(Family::A, Variant::Carmichael, 4);
  CHECK(rendered(car) == std::vector<std::string>{"a1^3", "a2^3", "a3^3", "a1 a2 a1 a2",
                                                   "a1 a3 a1 a3", "a2 a3 a2 a3"});
  const Presentation be = chain_presentation(Family::B, Variant::Edge, 3);
  CHECK(rendered(be) == std::vector<std::string>{"r1^4", "r2^3", "r1 r2 r1 r2"});
  const Presentation de = chain_presentation(Family::D, Variant::Edge, 4);
  CHECK(rendered(de) == std::vector<std::string>{"r1^3", "r2^3", "r3^3", "r1 r2^2 r1 r2^2",
                                                  "r1 r3 r1 r3", "r2 r3 r2 r3"});
  CHECK(order(de) == 96);
  const Presentation ae = chain_presentation(Family::A, Variant::Edge, 4);
  CHECK(ae.relators().size() == 6);
  CHECK_THROWS_AS(chain_presentation(Family::D, Variant::Carmichael, 2), std::invalid_argument);
  CHECK_THROWS_AS(chain_presentation(Family::B, Variant::Edge, 1), std::invalid_argument);
}

TEST_CASE("chain bourbaki agrees with the generic builder") {
  for (Family f : {Family::A, Family::B, Family::D})
    for (int n = f == Family::D ? 3 : 2; n <= 6; ++n) {
      const Presentation chain = chain_presentation(f, Variant::Bourbaki, n);
      const Presentation generic = bourbaki_presentation(standard_matrix(f, n), 0);
      CHECK(chain.generators() == generic.generators());
      CHECK(sorted_relators(chain) == sorted_relators(generic));
    }
}

TEST_CASE("chain edge agrees with the generic builder") {
  for (Family f : {Family::A, Family::B})
    for (int n = 2; n <= 7; ++n) {
      const Presentation chain = chain_presentation(f, Variant::Edge, n);
      const Presentation generic =
          edge_presentation(connected_extension(graph_from_matrix(standard_matrix(f, n)))).first;
      CHECK(chain.relators() == generic.relators());
    }
  // Type D is equivalent under r1 = r1_2, r2 = r0_2, r_i = r_{i-1,i}.
  for (int n = 3; n <= 5; ++n) {
    const Presentation chain = chain_presentation(Family::D, Variant::Edge, n);
    const auto [generic, map] =
        edge_presentation(connected_extension(graph_from_matrix(standard_matrix(Family::D, n))));
    GroupHom to{chain, generic, {}, false};
    to.images.push_back(Word::of(map.generator(1, 2)));
    to.images.push_back(Word::of(map.generator(0, 2)));
    for (int i = 3; i < n; ++i) to.images.push_back(Word::of(map.generator(i - 1, i)));
    GroupHom from{generic, chain, std::vector<Word>(generic.rank()), false};
    for (std::uint32_t k = 0; k < to.images.size(); ++k)
      from.images[to.images[k][0].gen().index] = Word::of({k});
    CHECK(verify_hom(to));
    CHECK(verify_hom(from));
    CHECK(composite_is_identity(to, from));
  }
}

TEST_CASE("carmichael generators") {
  const auto a = carmichael_generators(Family::A, 3, {0, 1, 3, false});
  const Presentation s = coxeter_presentation(standard_matrix(Family::A, 3));
  REQUIRE(a.size() == 2);
  CHECK(render_word(a[0], s) == "s0 s1");
  CHECK(render_word(a[1], s) == "s2 s0 s1 s2");
  CHECK_THROWS_AS(carmichael_generators(Family::D, 4, {0, 1, 2, false}), std::invalid_argument);

  const auto d = carmichael_generators(Family::D, 3, {0, 2, 3, false});
  std::vector<WreathElement> images;
  for (const Word& w : d) images.push_back(eval_word(realization_images(Family::D, Variant::Coxeter, 3), w));
  CHECK(generated_order(images, 3) == 12);
}

TEST_CASE("vv presentation") {
  const Presentation v3 = vv_presentation(3);
  CHECK(rendered(v3) == std::vector<std::string>{"rho1^3", "rho2^3", "rho1 rho2 rho1 rho2"});
  CHECK(order(vv_presentation(4)) == 60);
  const Presentation v5 = vv_presentation(5);
  const Presentation e5 = chain_presentation(Family::A, Variant::Edge, 5);
  GroupHom a = identity_hom(v5, e5);
  GroupHom b = identity_hom(e5, v5);
  CHECK(verify_hom(a));
  CHECK(verify_hom(b));
  CHECK(rendered(v5)[5] == "rho2 rho3 rho2 rho3");
}

TEST_CASE("spinor presentations") {
  const Presentation r1 = spinor_presentation(standard_matrix(Family::A, 1), SpinorVariant::Tilde);
  CHECK(rendered(r1) == std::vector<std::string>{"ts0^2", "alpha^2", "alpha ts0 alpha^-1 ts0^-1"});

  const Presentation t = spinor_presentation(standard_matrix(Family::A, 3), SpinorVariant::Tilde);
  const auto rt = rendered(t);
  CHECK(std::find(rt.begin(), rt.end(), "ts0 ts2 ts0 ts2 alpha") != rt.end());
  CHECK(std::find(rt.begin(), rt.end(), "ts0 ts1 ts0 ts1 ts0 ts1") != rt.end());

  const Presentation tp =
      spinor_presentation(standard_matrix(Family::A, 3), SpinorVariant::TildePrime);
  for (std::size_t k = 0; k < 6; ++k) CHECK(rendered(tp)[k].ends_with("alphap"));
  CHECK(order(tp) == 48);
  CHECK(order(t) == 48);
}

TEST_CASE("spinor plus presentations") {
  const CoxeterMatrix a3 = standard_matrix(Family::A, 3);
  const Presentation be = spinor_plus_presentation(a3, SpinorStyle::Bourbaki, SpinorVariant::Tilde);
  CHECK(rendered(be)[0] == "tR1^3");
  const Presentation ee = spinor_plus_presentation(a3, SpinorStyle::Edge, SpinorVariant::Tilde);
  CHECK(rendered(ee)[2] == "tr0_1 tr1_2 tr0_1 tr1_2 z");
  CHECK(order(ee) == 24);
  const Presentation ep = spinor_plus_presentation(a3, SpinorStyle::Edge, SpinorVariant::TildePrime);
  CHECK(rendered(ep)[0] == "trp0_1^3 zp");
  CHECK(order(ep) == 24);
}

TEST_CASE("spinor isomorphism") {
  for (Family f : {Family::A, Family::B}) {
    const CoxeterMatrix m = standard_matrix(f, 3);
    GroupHom h = spinor_iso(m);
    GroupHom g = spinor_iso_inverse(m);
    CHECK(verify_hom(h));
    CHECK(h.verified);
    CHECK(verify_hom(g));
    CHECK(composite_is_identity(h, g));
    CHECK(composite_is_identity(g, h));
    CHECK(order(h.source) == order(h.target));
  }
  CHECK(order(spinor_iso(standard_matrix(Family::B, 3)).source) == 48);
}

TEST_CASE("a broken hom is rejected") {
  const Presentation e = chain_presentation(Family::A, Variant::Edge, 3);
  GroupHom h = identity_hom(e, e);
  h.images[0] = Word::of({1});
  h.images[1] = Word::of({0}).pow(2);
  CHECK_FALSE(verify_hom(h));
  CHECK_FALSE(h.verified);
}

TEST_CASE("universal central extensions") {
  const Presentation a5 = universal_extension(UniversalCover::A5);
  CHECK(a5.generators() == std::vector<std::string>{"tr1", "tr2", "tr3", "tr4", "z", "zeta"});
  const auto r = rendered(a5);
  CHECK(r[5] == "tr2 tr3 tr2 tr3 z zeta^2");
  CHECK(r[9] == "tr1 tr4 tr1^-1 tr4^-1 zeta");
  const Presentation a6 = universal_extension(UniversalCover::A6);
  CHECK(a6.rank() == 7);
}

TEST_CASE("bourbaki and edge homomorphisms") {
  auto [phi, psi] = bourbaki_edge_homs(standard_matrix(Family::A, 3));
  CHECK(render_word(phi.images[0], phi.target) == "R1");
  CHECK(render_word(phi.images[1], phi.target) == "R1^-1 R2");
  CHECK(render_word(psi.images[1], psi.target) == "r0_1 r1_2");
  CHECK(verify_hom(phi));
  CHECK(verify_hom(psi));
  CHECK(composite_is_identity(phi, psi));
  CHECK(composite_is_identity(psi, phi));
}

TEST_CASE("shortest paths prefer smaller vertices") {
  // Square 0-1-3, 0-2-3: both paths have length 2.
  const CoxeterMatrix m({{1, 3, 3, 2}, {3, 1, 2, 3}, {3, 2, 1, 3}, {2, 3, 3, 1}});
  const ConnectedExtension e = connected_extension(graph_from_matrix(m));
  CHECK(shortest_path(e, 0, 3) == std::vector<int>{0, 1, 3});
  CHECK(shortest_path(e, 0, 0) == std::vector<int>{0});
}
