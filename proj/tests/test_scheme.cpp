#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "f1cong/corpus.hpp"
#include "f1cong/scheme.hpp"

using namespace f1cong;

TEST_CASE("affine scheme points coincide with mspec") {
  MonoidScheme X = MonoidScheme::affine(monoid_idempotent(), "U");
  SchemePoints P = scheme_points(X);
  CHECK(P.space.size() == 2);
  SchemeCongPoints C = scheme_cong_points(X);
  CHECK(C.space.size() == 2);
}

TEST_CASE("P1 over F1 has three points, two closed") {
  MonoidScheme P1 = p1_scheme();
  SchemePoints P = scheme_points(P1);
  CHECK(P.space.size() == 3);
  CHECK(P.space.closed_points().size() == 2);
  std::size_t generic = 3;
  for (std::size_t x = 0; x < 3; ++x)
    if (P.global_to_local[x][0] >= 0 && P.global_to_local[x][1] >= 0) generic = x;
  REQUIRE(generic < 3);
  for (std::size_t x = 0; x < 3; ++x)
    CHECK(P.space.spec[generic][x]);
}

TEST_CASE("P2 glues with a valid cocycle and has 7 points") {
  MonoidScheme P2 = pn_scheme(2);
  SchemePoints P = scheme_points(P2);
  CHECK(P.space.size() == 7);
  CHECK(P.space.closed_points().size() == 3);
}

TEST_CASE("disjoint unions") {
  MonoidScheme X = MonoidScheme::disjoint_union({monoid_f1(), monoid_f1()}, {"P", "Q"});
  SchemePoints P = scheme_points(X);
  CHECK(P.space.size() == 2);
  CHECK(P.space.closed_points().size() == 2);
  SchemeCongPoints C = scheme_cong_points(X);
  CHECK(C.space.size() == 2);
}

TEST_CASE("finite glued scheme: two truncated lines along their Gm model") {
  for (const auto& ns : scheme_corpus()) {
    if (ns.name != "p1-model") continue;
    SchemePoints P = scheme_points(ns.X);
    CHECK(P.space.size() == 3);
    CHECK(P.space.closed_points().size() == 2);
    SchemeCongPoints C = scheme_cong_points(ns.X);
    CHECK(C.space.size() >= 3);
    SpaceMap pi = scheme_projection_pi(ns.X, C, P);
    CHECK(pi.is_continuous(C.space, P.space));
    CHECK(pi.is_surjective(P.space));
  }
}

TEST_CASE("glue validation rejects bad data") {
  // mu2 localized at its unit stays mu2; collapsing u to 1 is a hom but not
  // an isomorphism, so the gluing must be rejected.
  FiniteMonoid U = monoid_mu2();
  ChartLocalization loc = chart_localize(ChartMonoid{U}, ChartElem{2});
  const FiniteMonoid& LM = std::get<FiniteMonoid>(loc.monoid);
  REQUIRE(LM.size == 3);
  std::vector<ChartElem> collapse;
  for (int i = 0; i < LM.size; ++i) collapse.emplace_back(i == LM.zero ? LM.zero : LM.one);
  std::map<std::pair<int, int>, Overlap> bad;
  bad[{0, 1}] = Overlap{ChartElem{2}, ChartElem{2}, ChartHom{loc.monoid, loc.monoid, collapse}};
  CHECK_THROWS_AS(
      MonoidScheme::glue({ChartMonoid{U}, ChartMonoid{U}}, {"C0", "C1"}, std::move(bad)), error);
}

TEST_CASE("identity and composition of scheme morphisms") {
  MonoidScheme P1 = p1_scheme();
  SchemeMorphism id = identity_morphism(P1);
  SchemePoints P = scheme_points(P1);
  SpaceMap pm = morphism_point_map(id, P, P);
  for (std::size_t i = 0; i < P.space.size(); ++i) CHECK(pm.image[i] == (int)i);
  SchemeMorphism f = p1_to_point();
  SchemeMorphism c = compose(f, id);
  CHECK(c.assign == f.assign);
}

TEST_CASE("morphism point maps: quotient morphisms hit the vanishing locus") {
  FiniteMonoid E = monoid_idempotent();
  QuotientResult q = quotient(E, generate(E, {{2, 0}}));
  SchemeMorphism phi = mspec_morphism(ChartHom::from_finite(q.projection));
  SchemePoints srcP = scheme_points(phi.source);
  SchemePoints tgtP = scheme_points(phi.target);
  SpaceMap pm = morphism_point_map(phi, srcP, tgtP);
  CHECK(srcP.space.size() == 1);
  CHECK(tgtP.space.names[pm.image[0]].find("<e>") != std::string::npos);
}

TEST_CASE("fiber products of affines") {
  FiniteMonoid E = monoid_idempotent();
  SchemeMorphism idE = identity_morphism(MonoidScheme::affine(E, "E"));
  FiberProductResult YY = fiber_product(idE, idE);
  CHECK(YY.product.num_charts() == 1);
  CHECK(find_isomorphism(std::get<FiniteMonoid>(YY.product.charts[0]), E).has_value());
  SchemeMorphism a1 = a1_to_point();
  FiberProductResult AA = fiber_product(a1, a1);
  CHECK(AA.product.num_charts() == 1);
  const auto& T = std::get<FreeMonomialMonoid>(AA.product.charts[0]);
  CHECK(T.num_vars == 2);
  SchemePoints P = scheme_points(AA.product);
  CHECK(P.space.size() == 4);
}

TEST_CASE("P1 x P1 glues into the four-chart toric surface") {
  SchemeMorphism p1 = p1_to_point();
  FiberProductResult S = fiber_product(p1, p1);
  CHECK(S.product.num_charts() == 4);
  SchemePoints P = scheme_points(S.product);
  CHECK(P.space.size() == 9);
  CHECK(P.space.closed_points().size() == 4);
}

TEST_CASE("diagonals") {
  SchemeMorphism a1 = a1_to_point();
  DiagonalResult D = diagonal(a1);
  CHECK(D.square.product.num_charts() == 1);
  const ChartHom& fold = D.delta.homs[0];
  CHECK(std::get<Monomial>(fold.map[0]) == Monomial::var(1, 0));
  CHECK(std::get<Monomial>(fold.map[1]) == Monomial::var(1, 0));
  FiniteMonoid E = monoid_idempotent();
  SchemeMorphism idE = identity_morphism(MonoidScheme::affine(E, "E"));
  DiagonalResult DE = diagonal(idE);
  CHECK(chart_hom_surjective(DE.delta.homs[0]));
  CHECK(chart_hom_injective(DE.delta.homs[0]));
  DiagonalResult DP = diagonal(p1_to_point());
  CHECK(DP.square.product.num_charts() == 4);
}

TEST_CASE("affine, quasi-compact, quasi-separated, finite type") {
  SchemeMorphism a1 = a1_to_point();
  CHECK(is_affine_morphism(a1));
  CHECK(is_quasi_compact(a1));
  CHECK(is_quasi_separated(a1));
  CHECK(is_finite_type_morphism(a1));
  SchemeMorphism p1 = p1_to_point();
  CHECK(!is_affine_morphism(p1));
  CHECK(is_quasi_compact(p1));
  SchemeMorphism gm = gm_into_a1();
  CHECK(is_affine_morphism(gm));
  SchemeMorphism axes = locally_closed_axes_example();
  CHECK(!is_affine_morphism(axes));
}

TEST_CASE("sections over opens of finite schemes") {
  MonoidScheme X = MonoidScheme::disjoint_union({monoid_f1(), monoid_f1()}, {"P", "Q"});
  SchemePoints P = scheme_points(X);
  std::vector<char> all(P.space.size(), 1);
  SectionsResult G = sections_over(X, P, all);
  CHECK(G.monoid.size == 4);
  MonoidScheme Y = MonoidScheme::affine(monoid_idempotent(), "E");
  SchemePoints PY = scheme_points(Y);
  std::vector<char> ally(PY.space.size(), 1);
  SectionsResult GY = sections_over(Y, PY, ally);
  CHECK(find_isomorphism(GY.monoid, monoid_idempotent()).has_value());
  std::vector<char> U0(PY.space.size(), 0);
  U0[PY.local_to_global[0][(int)mspec(monoid_idempotent()).index_of(Ideal{{0}})]] = 1;
  SectionsResult G0 = sections_over(Y, PY, U0);
  CHECK(find_isomorphism(G0.monoid, FiniteMonoid::f1()).has_value());
  // The glued p1-model has Gamma = L x_{F1} L: pairs agreeing on the
  // collapsed overlap, i.e. zero on both sides or on neither: 1 + 3*3.
  for (const auto& ns : scheme_corpus()) {
    if (ns.name != "p1-model") continue;
    SchemePoints PP = scheme_points(ns.X);
    std::vector<char> w(PP.space.size(), 1);
    SectionsResult GP = sections_over(ns.X, PP, w);
    CHECK(GP.monoid.size == 10);
  }
}

TEST_CASE("stalks of glued schemes") {
  for (const auto& ns : scheme_corpus()) {
    if (ns.name != "p1-model") continue;
    SchemePoints P = scheme_points(ns.X);
    for (std::size_t x = 0; x < P.space.size(); ++x) {
      StalkModel st = scheme_stalk(ns.X, P, x);
      CHECK(st.monoid.size >= 2);
    }
    std::size_t generic = P.space.size();
    for (std::size_t x = 0; x < P.space.size(); ++x)
      if (P.global_to_local[x][0] >= 0 && P.global_to_local[x][1] >= 0) generic = x;
    REQUIRE(generic < P.space.size());
    for (std::size_t x = 0; x < P.space.size(); ++x) {
      if (x == generic) continue;
      if (!P.space.spec[generic][x]) continue;
      StalkModel sx = scheme_stalk(ns.X, P, x);
      StalkModel sg = scheme_stalk(ns.X, P, generic);
      MonoidHom res = stalk_restriction(ns.X, P, sx, x, sg, generic);
      res.validate();
    }
  }
}

TEST_CASE("unsupported fiber product combinations raise") {
  SchemeMorphism a1 = a1_to_point();
  FiniteMonoid E = monoid_idempotent();
  MonoidScheme XE = MonoidScheme::affine(E, "E");
  MonoidScheme pt = MonoidScheme::affine(FiniteMonoid::f1(), "pt");
  std::vector<ChartElem> m{ChartElem{E.zero}, ChartElem{E.one}};
  SchemeMorphism e_to_pt =
      SchemeMorphism::make(XE, pt, {0}, {ChartHom{pt.charts[0], XE.charts[0], m}});
  CHECK_THROWS_AS(fiber_product(a1, e_to_pt), error);
}

TEST_CASE("symbolic P1 congruence space: three closed points via the charts") {
  // Chart-wise: each Cong(F1[t]) contributes the closed points p_{{t},0} and
  // p_{0,Z}; the overlap identifies the two generic-fibre points (the pullback
  // of p_{0,Z} along t -> u^-1 is p_{0,Z}). Total: 3, matching the three
  // F1-points of P1.
  MonoidScheme P1 = p1_scheme();
  const auto& C0 = std::get<FreeMonomialMonoid>(P1.charts[0]);
  const auto& C1 = std::get<FreeMonomialMonoid>(P1.charts[1]);
  auto closed0a = symbolic_point_of_hom_to_F1(C0, {0});  // t ~ 0
  auto closed0b = symbolic_point_of_hom_to_F1(C0, {});   // t ~ 1
  auto closed1a = symbolic_point_of_hom_to_F1(C1, {0});
  auto closed1b = symbolic_point_of_hom_to_F1(C1, {});
  CHECK(symbolic_is_closed_point(closed0a));
  CHECK(symbolic_is_closed_point(closed0b));
  // closed0a has t in its nullideal: it does not lie in the overlap (t
  // inverted there), so it is not identified with anything in chart 1.
  const Overlap* o = P1.overlap(0, 1);
  REQUIRE(o != nullptr);
  // Transport of closed0b through the overlap: pullback of p_{0,Z} along
  // u -> t^-1 is p_{0,Z} on chart 1.
  Lattice pre = lattice_preimage({{-1}}, 1, closed0b.lat);
  CHECK(lattice_equal(pre, full_lattice(1)));
  auto transported = SymbolicPrimeCongruence::make(C1, {}, pre);
  CHECK(transported == closed1b);
  // So the distinct closed points are closed0a, closed1a, and the shared
  // generic-fibre point: three in total, matching |P1(F1)| = 3 scheme points'
  // closed-point count... the scheme-level point count is also 3.
  CHECK(scheme_points(P1).space.size() == 3);
  (void)closed1a;
}

TEST_CASE("finite space sanity: U_h form a basis of MSpec; minimal opens") {
  for (const auto& A : {monoid_idempotent(), truncated_line(2)}) {
    MSpecResult X = mspec(A);
    // U_h n U_g = U_{hg}.
    for (int h = 0; h < A.size; ++h)
      for (int g = 0; g < A.size; ++g)
        for (std::size_t i = 0; i < X.primes.size(); ++i) {
          bool inter = X.space.subbasis[h].second[i] && X.space.subbasis[g].second[i];
          bool uhg = X.space.subbasis[A.mul(h, g)].second[i];
          CHECK(inter == uhg);
        }
    // Minimal open of each point = intersection of the subbasic opens
    // containing it.
    for (std::size_t i = 0; i < X.primes.size(); ++i) {
      std::vector<char> inter(X.space.size(), 1);
      for (const auto& [nm, U] : X.space.subbasis) {
        if (!U[i]) continue;
        for (std::size_t k = 0; k < X.space.size(); ++k) inter[k] = inter[k] && U[k];
      }
      CHECK(inter == X.space.minimal_open_of(i));
    }
  }
  // On Cong the subbasis need not be a basis; minimal opens still agree.
  CongSpaceResult C = cong_space(truncated_line(2));
  for (std::size_t i = 0; i < C.primes.size(); ++i) {
    std::vector<char> inter(C.space.size(), 1);
    for (const auto& [nm, U] : C.space.subbasis) {
      if (!U[i]) continue;
      for (std::size_t k = 0; k < C.space.size(); ++k) inter[k] = inter[k] && U[k];
    }
    CHECK(inter == C.space.minimal_open_of(i));
  }
}
