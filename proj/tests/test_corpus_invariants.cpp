#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "f1cong/corpus.hpp"
#include "f1cong/dsl.hpp"
#include "f1cong/properties.hpp"

using namespace f1cong;

TEST_CASE("localizations are exact: congker(f_S) = S^{-1} congker(f)") {
  // For surjective homs (quotient maps) and every multiplicative S.
  for (const auto& A : corpus_monoids(4)) {
    for (const auto& c : enumerate_congruences(A)) {
      QuotientResult q = quotient(A, c);
      if (q.monoid.degenerate()) continue;
      for (const auto& S : multiplicative_subsets(A)) {
        LocalizationResult locA = localize(A, S);
        if (locA.monoid.degenerate()) continue;
        std::vector<int> fS;
        for (int s : S) fS.push_back(q.projection.map[s]);
        LocalizationResult locB = localize(q.monoid, fS);
        if (locB.monoid.degenerate()) continue;
        // Induced hom on localizations via fraction search.
        MonoidHom u = compose(locB.map, q.projection);
        MonoidHom f_S = localize_hom_through(A, locA.map, locA.monoid, u);
        FiniteCongruence lhs = congker(f_S);
        FiniteCongruence rhs = localize_congruence(A, c, locA, S);
        CHECK(lhs == rhs);
        // ker(f_S) = S^{-1} ker(f) at the nullideal level.
        CHECK(nullideal(locA.monoid, lhs).elems == nullideal(locA.monoid, rhs).elems);
      }
    }
  }
}

TEST_CASE("red-comm: (S^{-1}A)^sred isomorphic to pi(S)^{-1}(A^sred)") {
  for (const auto& A : corpus_monoids(4)) {
    QuotientResult sr = sred(A);
    for (const auto& S : multiplicative_subsets(A)) {
      LocalizationResult locA = localize(A, S);
      QuotientResult lhs = sred(locA.monoid);
      std::vector<int> piS;
      for (int s : S) piS.push_back(sr.projection.map[s]);
      LocalizationResult rhs = localize(sr.monoid, piS);
      CHECK(find_isomorphism(lhs.monoid, rhs.monoid).has_value());
    }
  }
}

TEST_CASE("every prime is weak prime; the converse fails on {0,e,1}") {
  for (const auto& A : corpus_monoids(4))
    for (const auto& c : enumerate_congruences(A))
      if (is_prime(A, c)) CHECK(is_weak_prime(A, c));
  FiniteMonoid E = monoid_idempotent();
  CHECK(is_weak_prime(E, trivial_congruence(E)));
  CHECK(!is_prime(E, trivial_congruence(E)));
}

TEST_CASE("Theorem A: pi is functorial on the finite-tier suite") {
  for (const auto& nm : morphism_suite()) {
    if (!nm.phi.source.all_finite() || !nm.phi.target.all_finite()) continue;
    CAPTURE(nm.name);
    SchemePoints srcP = scheme_points(nm.phi.source);
    SchemePoints tgtP = scheme_points(nm.phi.target);
    SchemeCongPoints srcC = scheme_cong_points(nm.phi.source);
    SchemeCongPoints tgtC = scheme_cong_points(nm.phi.target);
    SpaceMap pm = morphism_point_map(nm.phi, srcP, tgtP);
    SpaceMap cm = morphism_cong_map(nm.phi, srcC, tgtC);
    SpaceMap piY = scheme_projection_pi(nm.phi.source, srcC, srcP);
    SpaceMap piX = scheme_projection_pi(nm.phi.target, tgtC, tgtP);
    for (std::size_t i = 0; i < srcC.space.size(); ++i)
      CHECK(piX.image[cm.image[i]] == pm.image[piY.image[i]]);
    CHECK(cm.is_continuous(srcC.space, tgtC.space));
  }
}

TEST_CASE("open immersions induce open embeddings of congruence spaces") {
  // Principal localizations over the corpus.
  for (const auto& A : corpus_monoids(4)) {
    for (int h = 0; h < A.size; ++h) {
      if (h == A.zero) continue;
      LocalizationResult loc = localize_at_element(A, h);
      if (loc.monoid.degenerate()) continue;
      SchemeMorphism phi = mspec_morphism(ChartHom::from_finite(loc.map));
      SchemeCongPoints srcC = scheme_cong_points(phi.source);
      SchemeCongPoints tgtC = scheme_cong_points(phi.target);
      SpaceMap cm = morphism_cong_map(phi, srcC, tgtC);
      CHECK(cm.is_embedding(srcC.space, tgtC.space));
      std::vector<char> img(tgtC.space.size(), 0);
      for (int v : cm.image) img[v] = 1;
      CHECK(tgtC.space.is_open(img));
    }
  }
}

TEST_CASE("V_{Congker(phi)} = vcl(image) for quasi-compact finite morphisms") {
  for (const auto& nm : morphism_suite()) {
    if (!nm.phi.source.all_finite() || !nm.phi.target.all_finite()) continue;
    if (nm.phi.target.num_charts() != 1) continue;
    CAPTURE(nm.name);
    CongruenceSheaf sheaf = congruence_sheaf_of(nm.phi);
    CHECK(sheaf.quasi_coherent);
    SchemeCongPoints srcC = scheme_cong_points(nm.phi.source);
    SchemeCongPoints tgtC = scheme_cong_points(nm.phi.target);
    SpaceMap cm = morphism_cong_map(nm.phi, srcC, tgtC);
    std::vector<char> img(tgtC.space.size(), 0);
    for (int v : cm.image) img[v] = 1;
    VanishingSet V{sheaf.chart_congs};
    CHECK(vanishing_points(tgtC, V) == vanishing_closure_points(nm.phi.target, tgtC, img));
  }
}

TEST_CASE("closed subschemes <-> congruence sheaves round trips") {
  // Phi(Psi(C)) = C and Psi(Phi([phi])) = [phi] at the level of chart data.
  for (const auto& A : {monoid_idempotent(), monoid_nilpotent(), truncated_line(2)}) {
    for (const auto& c : enumerate_congruences(A)) {
      QuotientResult q = quotient(A, c);
      if (q.monoid.degenerate()) continue;
      SchemeMorphism phi = mspec_morphism(ChartHom::from_finite(q.projection));
      // Phi: closed subscheme -> congruence sheaf (the congker).
      CongruenceSheaf sheaf = congruence_sheaf_of(phi);
      CHECK(sheaf.chart_congs[0] == c);
      // Psi: sheaf -> closed subscheme: quotient by the sheaf congruence,
      // whose congker recovers the sheaf.
      QuotientResult q2 = quotient(A, sheaf.chart_congs[0]);
      CHECK(congker(q2.projection) == sheaf.chart_congs[0]);
      CHECK(find_isomorphism(q2.monoid, q.monoid).has_value());
    }
  }
}

TEST_CASE("tau is functorial under quotient homs") {
  for (const auto& A : corpus_monoids(4)) {
    for (const auto& c : enumerate_prime_congruences(A)) {
      QuotientResult q = quotient(A, c);
      MSpecResult XA = mspec(A), XQ = mspec(q.monoid);
      CongSpaceResult CA = cong_space(A), CQ = cong_space(q.monoid);
      SpaceMap sm = induced_on_mspec(q.projection, XQ, XA);
      SpaceMap cm = induced_on_cong(q.projection, CQ, CA);
      SpaceMap tauA = section_tau(XA, CA);
      SpaceMap tauQ = section_tau(XQ, CQ);
      for (std::size_t p = 0; p < XQ.primes.size(); ++p)
        CHECK(cm.image[tauQ.image[p]] == tauA.image[sm.image[p]]);
    }
  }
}

TEST_CASE("solve_lifts outputs always commute and agree with separatedness") {
  FamilyOptions opts{2, 1, 2, 1, 2000};
  for (const auto& phi : {a1_to_point(), p1_to_point(), gm_into_a1()}) {
    bool sep = is_separated(phi);
    for (const auto& d : generate_test_diagrams(phi, opts)) {
      auto lifts = solve_lifts(d);
      if (sep) CHECK(lifts.size() <= 1);
      for (const auto& l : lifts) {
        ChartHom comp = chart_compose(l.hom, d.phi.homs[l.chart]);
        // phi . lift = nu, on the nose or through the target overlap.
        if (d.phi.assign[l.chart] == d.nu_chart) CHECK(chart_hom_equal(comp, d.nu));
      }
    }
  }
}

TEST_CASE("notbasis invariant at configurable degree") {
  // The intersection U_{t,0} n U_{t,1} in Cong(F1[t]) admits no basic open
  // around the witness congruence; checked for degrees <= 6 in the acceptance
  // suite and degrees <= 4 here via the same decision procedures.
  FreeMonomialMonoid A1 = FreeMonomialMonoid::make(1);
  SymbolicCongSpace S{A1};
  auto mono = [](long long e) {
    return e < 0 ? Monomial::make_zero() : Monomial{false, {e}};
  };
  for (int a = -1; a <= 4; ++a)
    for (int b = -1; b <= 4; ++b) {
      Monomial ma = mono(a), mb = mono(b);
      if (!S.U_nonempty(ma, mb)) continue;
      bool contains_witness = !(a >= 1 && b >= 1) && a != b;
      if (!contains_witness) continue;
      CHECK(!(S.U_subset(ma, mb, mono(1), mono(-1)) && S.U_subset(ma, mb, mono(1), mono(0))));
    }
}

TEST_CASE("dual characterization agrees on every hom between small monoids") {
  // Exhaustive over all homs between corpus monoids of size <= 4 wrapped
  // through MSpec, far beyond the curated suite.
  auto small = corpus_monoids(4);
  int checked = 0;
  for (const auto& A : small)
    for (const auto& B : small) {
      for (const auto& f : enumerate_homs(B, A)) {
        SchemeMorphism phi = mspec_morphism(ChartHom::from_finite(f));
        ClosedImmersionReport r = closed_immersion_report(phi);
        CAPTURE(checked);
        CHECK(r.verdict_def == r.verdict_topological);
        // Surjective homs give closed immersions of affines.
        if (f.is_surjective()) CHECK(r.verdict_def);
        ++checked;
      }
    }
  CHECK(checked > 500);
}
