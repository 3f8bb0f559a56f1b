#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f1cong/corpus.hpp"
#include "f1cong/valuation.hpp"

using namespace f1cong;

TEST_CASE("valuation data membership and units") {
  ValuationData v1 = ValuationData::make(1, 1, {{1}});
  CHECK(v1.in_Av(Monomial::make_zero()));
  CHECK(v1.in_Av(Monomial{false, {3}}));
  CHECK(!v1.in_Av(Monomial{false, {-1}}));
  CHECK(v1.unit_in_Av(Monomial{false, {0}}));
  CHECK(!v1.unit_in_Av(Monomial{false, {2}}));
  // Rank-2 lex: (0,-5) has value (0,-5) <lex 0 under the identity matrix.
  ValuationData v2 = ValuationData::make(2, 2, {{1, 0}, {0, 1}});
  CHECK(v2.in_Av(Monomial{false, {1, -7}}));
  CHECK(!v2.in_Av(Monomial{false, {0, -5}}));
  CHECK(valuation_data_spot_check(v1));
  CHECK(valuation_data_spot_check(v2));
  CHECK(valuation_data_spot_check(ValuationData::make(2, 1, {{1, -1}})));
}

TEST_CASE("finite valuation monoids") {
  CHECK(is_valuation_monoid(FiniteMonoid::f1()));
  CHECK(is_valuation_monoid(monoid_mu2()));  // Frac = itself, u or u^-1 = u
  CHECK_THROWS_AS(is_valuation_monoid(monoid_idempotent()), error);  // not integral
}

TEST_CASE("domination") {
  // Identity dominates.
  FiniteMonoid U = monoid_mu2();
  CHECK(dominates(MonoidHom::identity(U)));
  // Quotient {0,e,1} -> F1 with e -> 1 sends a nonunit to a unit.
  FiniteMonoid E = monoid_idempotent();
  for (const auto& f : enumerate_homs_to_F1(E))
    CHECK(dominates(f) == (f.map[2] == 0));
  // A_v -> G dominant only for the trivial valuation.
  CHECK(!valuation_inclusion_dominates(ValuationData::make(1, 1, {{1}})));
  CHECK(valuation_inclusion_dominates(ValuationData::make(1, 1, {{0}})));
  // Value doubling {0} u {t^2n} -> {0} u {t^n} is an integral extension and
  // dominant.
  CHECK(valuation_hom_dominates(ValuationData::make(1, 1, {{2}}),
                                ValuationData::make(1, 1, {{1}}), {{1}}));
}

TEST_CASE("test diagrams: forced nu") {
  SchemeMorphism a1 = a1_to_point();
  ValuationData val = ValuationData::make(1, 1, {{1}});
  FreeMonomialMonoid G = val.group();
  // eta: t -> g^-1.
  ChartHom eta{a1.source.charts[0], G, {Monomial{false, {-1}}}};
  auto d = make_test_diagram(val, a1, 0, eta);
  REQUIRE(d.has_value());
  CHECK(d->nu_chart == 0);
  // nu is the trivial map F1 -> A_v.
  CHECK(std::get<Monomial>(d->nu.map[0]).zero);
  CHECK(std::get<Monomial>(d->nu.map[1]).is_one());
}

TEST_CASE("solve_lifts: identity on MSpec(A_v)-like chart") {
  // Y = X = A1 (A_v for v = [1]); eta: t -> g; the only lift is nu itself.
  MonoidScheme A1 = affine_space(1);
  SchemeMorphism id = identity_morphism(A1);
  ValuationData val = ValuationData::make(1, 1, {{1}});
  ChartHom eta{A1.charts[0], val.group(), {Monomial{false, {1}}}};
  auto d = make_test_diagram(val, id, 0, eta);
  REQUIRE(d.has_value());
  auto lifts = solve_lifts(*d);
  CHECK(lifts.size() == 1);
  CHECK(std::get<Monomial>(lifts[0].hom.map[0]) == Monomial{false, {1}});
}

TEST_CASE("solve_lifts: A1 has no lift for the negative direction") {
  SchemeMorphism a1 = a1_to_point();
  ValuationData val = ValuationData::make(1, 1, {{1}});
  ChartHom eta{a1.source.charts[0], val.group(), {Monomial{false, {-1}}}};
  auto d = make_test_diagram(val, a1, 0, eta);
  REQUIRE(d.has_value());
  CHECK(solve_lifts(*d).empty());
}

TEST_CASE("solve_lifts: P1 always has exactly one lift") {
  SchemeMorphism p1 = p1_to_point();
  ValuationData val = ValuationData::make(1, 1, {{1}});
  // t -> g^-1 lifts through the second chart.
  ChartHom eta{p1.source.charts[0], val.group(), {Monomial{false, {-1}}}};
  auto d = make_test_diagram(val, p1, 0, eta);
  REQUIRE(d.has_value());
  auto lifts = solve_lifts(*d);
  REQUIRE(lifts.size() == 1);
  CHECK(lifts[0].chart == 1);
  // t -> 1 gives candidates through both charts that agree as morphisms.
  ChartHom eta1{p1.source.charts[0], val.group(), {Monomial{false, {0}}}};
  auto d1 = make_test_diagram(val, p1, 0, eta1);
  REQUIRE(d1.has_value());
  CHECK(solve_lifts(*d1).size() == 1);
  // t -> 0 stays in the first chart only.
  ChartHom eta0{p1.source.charts[0], val.group(), {Monomial::make_zero()}};
  auto d0 = make_test_diagram(val, p1, 0, eta0);
  REQUIRE(d0.has_value());
  auto l0 = solve_lifts(*d0);
  REQUIRE(l0.size() == 1);
  CHECK(l0[0].chart == 0);
}

TEST_CASE("lifts commute with the diagram") {
  SchemeMorphism p1 = p1_to_point();
  for (auto& d : generate_test_diagrams(p1, FamilyOptions{1, 1, 2, 1, 1000})) {
    for (const auto& l : solve_lifts(d)) {
      // phi . lift = nu on the nose (single-chart target).
      ChartHom comp = chart_compose(l.hom, d.phi.homs[l.chart]);
      CHECK(chart_hom_equal(comp, d.nu));
    }
  }
}

TEST_CASE("check_universally_closed: A1 refuted, P1 passes") {
  FamilyOptions opts{2, 2, 3, 1, 50000};
  ValuativeReport ra = check_universally_closed(a1_to_point(), {}, opts);
  CHECK(ra.prerequisites_ok);
  CHECK(ra.counterexample_found);
  CHECK(ra.witness_lift_count == 0);
  ValuativeReport rp = check_universally_closed(p1_to_point(), {}, opts);
  CHECK(!rp.counterexample_found);
  CHECK(rp.diagrams_checked > 0);
}

TEST_CASE("check_separated_valuative: A1 and P1 never have two lifts") {
  FamilyOptions opts{2, 2, 3, 1, 50000};
  CHECK(!check_separated_valuative(a1_to_point(), {}, opts).counterexample_found);
  CHECK(!check_separated_valuative(p1_to_point(), {}, opts).counterexample_found);
}

TEST_CASE("check_proper: P1 proper, A1 not; closed immersions proper") {
  FamilyOptions opts{2, 2, 3, 1, 50000};
  CHECK(!check_proper(p1_to_point(), {}, opts).counterexample_found);
  CHECK(check_proper(a1_to_point(), {}, opts).counterexample_found);
  // Closed immersion MSpec(F1) -> MSpec({0,e,1}) via e -> 0.
  FiniteMonoid E = monoid_idempotent();
  QuotientResult q = quotient(E, generate(E, {{2, 0}}));
  SchemeMorphism ci = mspec_morphism(ChartHom::from_finite(q.projection));
  ValuativeReport r = check_proper(ci, {}, opts);
  CHECK(!r.counterexample_found);
  CHECK(r.diagrams_checked > 0);
}

TEST_CASE("valuation monoid iff maximal for domination (finite tier)") {
  for (const auto& A : corpus_monoids(5)) {
    if (!A.is_integral()) continue;
    CHECK(is_valuation_monoid(A) == is_maximal_for_domination(A));
  }
}

TEST_CASE("integral extensions in the corpus are dominant") {
  // Search injective power-surjective homs among small corpus pairs.
  int found = 0;
  for (const auto& A : corpus_monoids(4))
    for (const auto& B : corpus_monoids(4)) {
      if (A.size > B.size) continue;
      for (const auto& f : enumerate_homs(A, B)) {
        if (!is_integral_extension(f)) continue;
        ++found;
        CHECK(dominates(f));
      }
    }
  CHECK(found > 0);
}

TEST_CASE("P2 -> pt: unique lifts over a small generated family") {
  MonoidScheme P2 = pn_scheme(2);
  MonoidScheme pt = MonoidScheme::affine(FiniteMonoid::f1(), "pt");
  std::vector<ChartHom> homs;
  for (int i = 0; i < 3; ++i) {
    std::vector<ChartElem> m;
    m.emplace_back(Monomial::make_zero());
    m.emplace_back(Monomial::one(2));
    homs.push_back(ChartHom{pt.charts[0], P2.charts[i], m});
  }
  SchemeMorphism f = SchemeMorphism::make(P2, pt, {0, 0, 0}, std::move(homs));
  FamilyOptions opts{2, 2, 1, 1, 100000};
  ValuativeReport r = check_proper(f, {}, opts);
  CHECK(!r.counterexample_found);
  CHECK(r.diagrams_checked > 1000);
  // A concrete rank-2 diagram with a lex-infinitesimal direction.
  ValuationData val = ValuationData::make(2, 2, {{1, 0}, {0, 1}});
  ChartHom eta{P2.charts[0], val.group(),
               {Monomial{false, {-1, 0}}, Monomial{false, {0, -3}}}};
  auto d = make_test_diagram(val, f, 0, eta);
  REQUIRE(d.has_value());
  CHECK(solve_lifts(*d).size() == 1);
}
