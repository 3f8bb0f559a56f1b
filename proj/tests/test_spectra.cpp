#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "f1cong/corpus.hpp"
#include "f1cong/spectra.hpp"

using namespace f1cong;

TEST_CASE("mspec: F1 and the idempotent monoid") {
  MSpecResult F = mspec(FiniteMonoid::f1());
  CHECK(F.space.size() == 1);
  MSpecResult E = mspec(monoid_idempotent());
  CHECK(E.space.size() == 2);
  // <e> = {0,e} is the closed point: <0> specializes to it.
  std::size_t p0 = E.index_of(Ideal{{0}});
  std::size_t pe = E.index_of(Ideal{{0, 2}});
  CHECK(E.space.spec[p0][pe]);
  CHECK(!E.space.spec[pe][p0]);
  CHECK(E.space.closed_points() == std::vector<std::size_t>{pe});
}

TEST_CASE("mspec of the idempotent-truncated plane model shows the P_I pattern") {
  // F1[t1,t2]/(t_i^2 = t_i): elements 0,1,a,b,ab with a,b idempotent.
  FiniteMonoid M = FiniteMonoid::make(
      5, 0, 1,
      {0, 0, 0, 0, 0,
       0, 1, 2, 3, 4,
       0, 2, 2, 4, 4,
       0, 3, 4, 3, 4,
       0, 4, 4, 4, 4},
      {"0", "1", "a", "b", "ab"});
  MSpecResult X = mspec(M);
  CHECK(X.space.size() == 4);  // P_{}, P_a, P_b, P_ab
  std::size_t bottom = X.index_of(Ideal{{0}});
  std::size_t top = X.index_of(Ideal{{0, 2, 3, 4}});
  CHECK(X.space.spec[bottom][top]);
  CHECK(X.space.closed_points().size() == 1);
}

TEST_CASE("cong_space: Figure 3") {
  CongSpaceResult C = cong_space(monoid_idempotent());
  CHECK(C.space.size() == 2);
  CHECK(C.space.closed_points().size() == 2);
  CHECK(!C.space.spec[0][1]);
  CHECK(!C.space.spec[1][0]);
  CongSpaceResult CF = cong_space(FiniteMonoid::f1());
  CHECK(CF.space.size() == 1);
  CongSpaceResult CN = cong_space(monoid_nilpotent());
  CHECK(CN.space.size() == 1);
}

TEST_CASE("projection pi: Figure 3 bijective but not open") {
  FiniteMonoid E = monoid_idempotent();
  MSpecResult X = mspec(E);
  CongSpaceResult C = cong_space(E);
  SpaceMap pi = projection_pi(X, C);
  CHECK(pi.is_continuous(C.space, X.space));
  CHECK(pi.is_injective());
  CHECK(pi.is_surjective(X.space));
  CHECK(!pi.is_open_map(C.space, X.space));
  std::size_t ce0 = C.index_of(generate(E, {{2, 0}}));
  CHECK((std::size_t)pi.image[ce0] == X.index_of(Ideal{{0, 2}}));
}

TEST_CASE("pi surjective and continuous over the corpus") {
  for (const auto& A : corpus_monoids(4)) {
    MSpecResult X = mspec(A);
    CongSpaceResult C = cong_space(A);
    SpaceMap pi = projection_pi(X, C);
    CHECK(pi.is_continuous(C.space, X.space));
    CHECK(pi.is_surjective(X.space));
    // Preimage of every subbasic U_h is the subbasic U_{h,0}.
    for (int h = 0; h < A.size; ++h)
      for (std::size_t i = 0; i < C.primes.size(); ++i) {
        bool in_pre = X.space.subbasis[h].second[pi.image[i]];
        bool in_uh0 = !C.primes[i].related(h, A.zero);
        CHECK(in_pre == in_uh0);
      }
  }
}

TEST_CASE("sections sigma and tau") {
  FiniteMonoid E = monoid_idempotent();
  MSpecResult X = mspec(E);
  CongSpaceResult C = cong_space(E);
  SpaceMap pi = projection_pi(X, C);
  SpaceMap sg = section_sigma(X, C);
  SpaceMap tu = section_tau(X, C);
  for (std::size_t p = 0; p < X.primes.size(); ++p) {
    CHECK(pi.image[sg.image[p]] == (int)p);
    CHECK(pi.image[tu.image[p]] == (int)p);
  }
  std::size_t p0 = X.index_of(Ideal{{0}});
  std::size_t pe = X.index_of(Ideal{{0, 2}});
  CHECK(sg.image[p0] == (int)C.index_of(generate(E, {{2, 1}})));
  CHECK(tu.image[p0] == (int)C.index_of(generate(E, {{2, 1}})));
  CHECK(tu.image[pe] == (int)C.index_of(generate(E, {{2, 0}})));
  MSpecResult XF = mspec(FiniteMonoid::f1());
  CongSpaceResult CF = cong_space(FiniteMonoid::f1());
  CHECK(section_sigma(XF, CF).image == section_tau(XF, CF).image);
}

TEST_CASE("sections are sections of pi over the corpus") {
  for (const auto& A : corpus_monoids(4)) {
    MSpecResult X = mspec(A);
    CongSpaceResult C = cong_space(A);
    SpaceMap pi = projection_pi(X, C);
    SpaceMap sg = section_sigma(X, C);
    SpaceMap tu = section_tau(X, C);
    for (std::size_t p = 0; p < X.primes.size(); ++p) {
      CHECK(pi.image[sg.image[p]] == (int)p);
      CHECK(pi.image[tu.image[p]] == (int)p);
    }
  }
}

TEST_CASE("closed points and chi") {
  for (const auto& A : corpus_monoids(4)) {
    MSpecResult X = mspec(A);
    CongSpaceResult C = cong_space(A);
    auto homs = enumerate_homs_to_F1(A);
    auto im = chi(C, homs);
    std::sort(im.begin(), im.end());
    auto closed = C.space.closed_points();
    CHECK(im == closed);
    SpaceMap pi = projection_pi(X, C);
    std::vector<std::size_t> hit;
    for (auto i : chi(C, homs)) hit.push_back(pi.image[i]);
    std::sort(hit.begin(), hit.end());
    std::vector<std::size_t> all(X.primes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    CHECK(hit == all);
  }
}

TEST_CASE("stalks and residue fields") {
  FiniteMonoid E = monoid_idempotent();
  FiniteCongruence e0 = generate(E, {{2, 0}});
  FiniteCongruence e1 = generate(E, {{2, 1}});
  CHECK(find_isomorphism(stalk(E, e0), E).has_value());
  CHECK(find_isomorphism(residue_field(E, e0), FiniteMonoid::f1()).has_value());
  CHECK(find_isomorphism(residue_field(E, e1), FiniteMonoid::f1()).has_value());
  for (const auto& A : corpus_monoids(4))
    for (const auto& P : enumerate_prime_ideals(A))
      CHECK(find_isomorphism(residue_field(A, tau_point(A, P)), FiniteMonoid::f1())
                .has_value());
  for (const auto& A : corpus_monoids(4))
    for (const auto& p : enumerate_prime_congruences(A))
      CHECK(residue_field(A, p).is_pointed_group());
}

TEST_CASE("residue field agrees with the localized stalk chain") {
  // k(p) = Frac(A/p) must match Frac((A_P)/(P A_P) localized), the chain used
  // for sigma.
  for (const auto& A : corpus_monoids(4))
    for (const auto& p : enumerate_prime_congruences(A)) {
      FiniteMonoid k1 = residue_field(A, p);
      Ideal P = nullideal(A, p);
      LocalizationResult loc = localize_at_prime(A, P);
      FiniteCongruence ploc = pushforward(loc.map, p);
      FiniteMonoid k2 = frac(quotient(loc.monoid, ploc).monoid).monoid;
      CHECK(find_isomorphism(k1, k2).has_value());
    }
}

TEST_CASE("fibre of pi is Cong of the residue field") {
  FiniteMonoid E = monoid_idempotent();
  MSpecResult X = mspec(E);
  CongSpaceResult C = cong_space(E);
  FibreResult f0 = fibre(E, Ideal{{0}}, X, C);
  CHECK(f0.fibre.size() == 1);
  CHECK(f0.homeomorphic);
  FibreResult fe = fibre(E, Ideal{{0, 2}}, X, C);
  CHECK(fe.fibre.size() == 1);
  CHECK(fe.homeomorphic);
  MSpecResult XF = mspec(FiniteMonoid::f1());
  CongSpaceResult CF = cong_space(FiniteMonoid::f1());
  FibreResult ff = fibre(FiniteMonoid::f1(), Ideal{{0}}, XF, CF);
  CHECK(ff.fibre.size() == CF.space.size());
  CHECK(ff.homeomorphic);
  for (const auto& A : corpus_monoids(4)) {
    MSpecResult XA = mspec(A);
    CongSpaceResult CA = cong_space(A);
    for (const auto& P : XA.primes) CHECK(fibre(A, P, XA, CA).homeomorphic);
  }
}

TEST_CASE("induced maps: continuity, subbasis formula, functoriality") {
  FiniteMonoid E = monoid_idempotent();
  FiniteMonoid F1 = FiniteMonoid::f1();
  MSpecResult XE = mspec(E), XF = mspec(F1);
  CongSpaceResult CE = cong_space(E), CF = cong_space(F1);
  for (const auto& f : enumerate_homs_to_F1(E)) {
    SpaceMap sm = induced_on_mspec(f, XF, XE);
    SpaceMap cm = induced_on_cong(f, CF, CE);
    CHECK(sm.is_continuous(XF.space, XE.space));
    CHECK(cm.is_continuous(CF.space, CE.space));
    for (int a = 0; a < E.size; ++a)
      for (int b = 0; b < E.size; ++b)
        for (std::size_t i = 0; i < CF.primes.size(); ++i) {
          bool lhs = !CE.primes[cm.image[i]].related(a, b);
          bool rhs = !CF.primes[i].related(f.map[a], f.map[b]);
          CHECK(lhs == rhs);
        }
  }
  QuotientResult q = quotient(E, generate(E, {{2, 1}}));
  MonoidHom f = q.projection;
  MonoidHom g = enumerate_homs_to_F1(q.monoid).front();
  CongSpaceResult Cq = cong_space(q.monoid);
  SpaceMap c_f = induced_on_cong(f, Cq, CE);
  SpaceMap c_g = induced_on_cong(g, CF, Cq);
  SpaceMap c_gf = induced_on_cong(compose(g, f), CF, CE);
  for (std::size_t i = 0; i < CF.primes.size(); ++i)
    CHECK(c_gf.image[i] == c_f.image[c_g.image[i]]);
}

TEST_CASE("quotient hom image point: e -> 0 lands on <(e,0)>") {
  FiniteMonoid E = monoid_idempotent();
  CongSpaceResult CE = cong_space(E);
  CongSpaceResult CF = cong_space(FiniteMonoid::f1());
  for (const auto& f : enumerate_homs_to_F1(E)) {
    if (f.map[2] != 0) continue;
    SpaceMap cm = induced_on_cong(f, CF, CE);
    CHECK((std::size_t)cm.image[0] == CE.index_of(generate(E, {{2, 0}})));
  }
}

TEST_CASE("symbolic mspec of the plane and of Gm") {
  SymbolicMSpecResult X = symbolic_mspec(FreeMonomialMonoid::make(2));
  CHECK(X.space.size() == 4);
  CHECK(X.space.closed_points().size() == 1);
  SymbolicMSpecResult G = symbolic_mspec(FreeMonomialMonoid::make(1, {0}));
  CHECK(G.space.size() == 1);
}

TEST_CASE("symbolic sigma and tau; sigma fails functoriality on the diagonal") {
  FreeMonomialMonoid A2 = FreeMonomialMonoid::make(2);
  auto sg = symbolic_sigma(A2, {});
  CHECK(sg == symbolic_trivial(A2));
  auto tu = symbolic_tau(A2, {});
  CHECK(symbolic_is_closed_point(tu));
  // Delta~(sigma_{A1}(<0>)) = pullback of the trivial congruence along the
  // fold = p_{0,<(1,-1)>}, but sigma_{A2}(Delta(<0>)) = trivial.
  Lattice pre = lattice_preimage({{1, 1}}, 2, zero_lattice(1));
  SymbolicPrimeCongruence delta_sigma = SymbolicPrimeCongruence::make(A2, {}, pre);
  CHECK(lattice_equal(delta_sigma.lat, hnf(2, {{1, -1}})));
  CHECK(!(delta_sigma == symbolic_sigma(A2, {})));
  // tau is functorial here: tau of the image prime ideal pulls back to the
  // pullback of tau.
  auto tau_a1 = symbolic_tau(FreeMonomialMonoid::make(1), {});
  Lattice pre_tau = lattice_preimage({{1, 1}}, 2, tau_a1.lat);
  CHECK(lattice_equal(pre_tau, full_lattice(2)));
}

TEST_CASE("symbolic congruence space queries") {
  SymbolicCongSpace S{FreeMonomialMonoid::make(1)};
  Monomial t = Monomial::var(1, 0), one = Monomial::one(1), zero = Monomial::make_zero();
  CHECK(S.U_nonempty(t, zero));
  CHECK(!S.U_nonempty(t, t));
  Monomial t2 = S.ambient.mul(t, t);
  CHECK(S.U_subset(t2, t, t, zero));   // U_{t2,t} subset U_{t,0}
  CHECK(S.U_subset(t2, t, t, one));    // U_{t2,t} subset U_{t,1}
  CHECK(!S.U_subset(t, zero, t2, t));  // U_{t,0} not inside U_{t2,t}
}

TEST_CASE("bounded symbolic sample of Cong(A2) reproduces the labelled fragment") {
  FreeMonomialMonoid A2 = FreeMonomialMonoid::make(2);
  SymbolicCongSample S = symbolic_cong_sample(A2, 1);
  CHECK(S.points.size() == 12);
  CHECK(S.space.closed_points().size() == 4);
  auto find_point = [&](const std::vector<std::size_t>& I, const Lattice& H) {
    SymbolicPrimeCongruence p = SymbolicPrimeCongruence::make(A2, I, H);
    for (std::size_t i = 0; i < S.points.size(); ++i)
      if (S.points[i] == p) return i;
    return S.points.size();
  };
  std::size_t triv = find_point({}, zero_lattice(2));
  std::size_t diag = find_point({}, hnf(2, {{1, -1}}));
  std::size_t p12 = find_point({0, 1}, zero_lattice(0));
  std::size_t p1z = find_point({0}, full_lattice(1));
  std::size_t z_plus = find_point({}, hnf(2, {{1, 0}}));
  REQUIRE(triv < S.points.size());
  REQUIRE(diag < S.points.size());
  REQUIRE(p12 < S.points.size());
  REQUIRE(p1z < S.points.size());
  REQUIRE(z_plus < S.points.size());
  // The generic point sits under everything.
  for (std::size_t k = 0; k < S.points.size(); ++k) CHECK(S.space.spec[triv][k]);
  // The closed diagonal image: p_{0,<(1,-1)>} specializes to p_{12,0}.
  CHECK(S.space.spec[diag][p12]);
  // ... but p_{0,Z+0} does not specialize to p_{1,Z}.
  CHECK(!S.space.spec[z_plus][p1z]);
}

TEST_CASE("symbolic specialization cross-validated by membership witnesses") {
  // For every ordered pair of sample points: if p specializes to q, sampled
  // members of p lie in q; otherwise a concrete witness pair of p outside q
  // exists (constructed from the failing condition).
  for (std::size_t nvars : {2, 3}) {
    FreeMonomialMonoid A = FreeMonomialMonoid::make(nvars);
    SymbolicCongSample S = symbolic_cong_sample(A, 1, 8192);
    for (std::size_t i = 0; i < S.points.size(); ++i)
      for (std::size_t k = 0; k < S.points.size(); ++k) {
        const auto& p = S.points[i];
        const auto& q = S.points[k];
        bool spec = symbolic_specializes(p, q);
        // Sampled members of p: vanishing-pair generators and lattice pairs.
        std::vector<std::pair<Monomial, Monomial>> members;
        for (auto v : p.vanishing)
          members.push_back({Monomial::var(nvars, v), Monomial::make_zero()});
        auto J = p.cofree_vars();
        for (const auto& h : p.lat.basis) {
          Monomial pos = Monomial::one(nvars), neg = Monomial::one(nvars);
          for (std::size_t c = 0; c < J.size(); ++c) {
            if (h[c] > 0) pos.exps[J[c]] = h[c];
            if (h[c] < 0) neg.exps[J[c]] = -h[c];
          }
          members.push_back({pos, neg});
          // Shifted realizations of the same lattice vector.
          Monomial shift = Monomial::one(nvars);
          for (auto j : J) shift.exps[j] = 1;
          members.push_back({A.mul(pos, shift), A.mul(neg, shift)});
        }
        for (const auto& m : members) CHECK(symbolic_member(m, p));
        if (spec) {
          for (const auto& m : members) CHECK(symbolic_member(m, q));
        } else {
          // Find a witness among sampled pairs of p, including one-sided
          // realizations of lattice vectors against the larger I of q.
          bool witness = false;
          for (const auto& m : members)
            if (!symbolic_member(m, q)) witness = true;
          if (!witness) {
            // Small combinations of basis vectors, realized as pairs.
            const auto& B = p.lat.basis;
            std::vector<ivec> combos;
            for (std::size_t a = 0; a < B.size(); ++a)
              for (std::size_t b = 0; b < B.size(); ++b)
                for (long long ca : {-2, -1, 1, 2})
                  for (long long cb : {-2, -1, 0, 1, 2}) {
                    ivec h(J.size(), 0);
                    for (std::size_t c = 0; c < J.size(); ++c)
                      h[c] = ca * B[a][c] + cb * B[b][c];
                    combos.push_back(h);
                  }
            for (const auto& h : combos) {
              Monomial pos = Monomial::one(nvars), neg = Monomial::one(nvars);
              for (std::size_t c = 0; c < J.size(); ++c) {
                if (h[c] > 0) pos.exps[J[c]] = h[c];
                if (h[c] < 0) neg.exps[J[c]] = -h[c];
              }
              if (symbolic_member({pos, neg}, p) && !symbolic_member({pos, neg}, q))
                witness = true;
            }
          }
          CHECK(witness);
        }
      }
  }
}

TEST_CASE("sigma and tau are not continuous on the idempotent monoid") {
  FiniteMonoid E = monoid_idempotent();
  MSpecResult X = mspec(E);
  CongSpaceResult C = cong_space(E);
  SpaceMap sg = section_sigma(X, C);
  SpaceMap tu = section_tau(X, C);
  CHECK(!sg.is_continuous(X.space, C.space));
  CHECK(!tu.is_continuous(X.space, C.space));
}
