#include "f1cong/properties.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace f1cong {

namespace {

const FiniteMonoid& fin(const ChartMonoid& M) { return std::get<FiniteMonoid>(M); }
const FreeMonomialMonoid& sym(const ChartMonoid& M) { return std::get<FreeMonomialMonoid>(M); }

MonoidHom chart_to_finite_hom(const ChartHom& h) {
  std::vector<int> m;
  for (const auto& x : h.map) m.push_back(std::get<int>(x));
  return MonoidHom{fin(h.source), fin(h.target), std::move(m)};
}

bool chart_is_f1(const ChartMonoid& M) {
  if (chart_is_finite(M)) return fin(M).size == 2;
  return sym(M).num_vars == 0;
}

std::vector<int> s_powers(const FiniteMonoid& A, int s) {
  std::vector<int> S{A.one};
  int p = s;
  for (int k = 0; k <= A.size; ++k) {
    S.push_back(p);
    p = A.mul(p, s);
  }
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

}  // namespace

std::vector<char> vanishing_points(const SchemeCongPoints& C, const VanishingSet& V) {
  std::vector<char> out(C.space.size(), 0);
  for (std::size_t c = 0; c < C.chart_spaces.size(); ++c)
    for (std::size_t l = 0; l < C.chart_spaces[c].primes.size(); ++l)
      if (contains(C.chart_spaces[c].primes[l], V.chart_congs[c]))
        out[C.local_to_global[c][l]] = 1;
  return out;
}

bool vanishing_set_compatible(const MonoidScheme& X, const VanishingSet& V) {
  for (const auto& [key, o] : X.overlaps) {
    auto [i, j] = key;
    const FiniteMonoid& A = fin(X.charts[i]);
    const FiniteMonoid& B = fin(X.charts[j]);
    int si = std::get<int>(o.s_src), sj = std::get<int>(o.s_tgt);
    LocalizationResult loc_i = localize_at_element(A, si);
    LocalizationResult loc_j = localize_at_element(B, sj);
    FiniteCongruence li = localize_congruence(A, V.chart_congs[i], loc_i, s_powers(A, si));
    auto ginv = chart_hom_inverse(o.iso);
    if (!ginv) return false;
    MonoidHom g = chart_to_finite_hom(*ginv);  // loc_j -> loc_i
    FiniteCongruence lj = pushforward(g, pushforward(loc_j.map, V.chart_congs[j]));
    if (!(radical(loc_i.monoid, li) == radical(loc_i.monoid, lj))) return false;
  }
  return true;
}

std::vector<char> vanishing_closure_points(const MonoidScheme& X, const SchemeCongPoints& C,
                                           const std::vector<char>& Z) {
  std::vector<char> cur = Z;
  while (true) {
    std::vector<char> next(C.space.size(), 0);
    for (std::size_t c = 0; c < C.chart_spaces.size(); ++c) {
      const FiniteMonoid& A = fin(X.charts[c]);
      bool any = false;
      FiniteCongruence m = full_congruence(A);
      for (std::size_t l = 0; l < C.chart_spaces[c].primes.size(); ++l) {
        if (!cur[C.local_to_global[c][l]]) continue;
        m = any ? meet(m, C.chart_spaces[c].primes[l]) : C.chart_spaces[c].primes[l];
        any = true;
      }
      for (std::size_t l = 0; l < C.chart_spaces[c].primes.size(); ++l)
        if (contains(C.chart_spaces[c].primes[l], m)) next[C.local_to_global[c][l]] = 1;
    }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

VanishingSet vanishing_closure(const MonoidScheme& X, const SchemeCongPoints& C,
                               const std::vector<char>& Z) {
  std::vector<char> pts = vanishing_closure_points(X, C, Z);
  VanishingSet V;
  for (std::size_t c = 0; c < C.chart_spaces.size(); ++c) {
    const FiniteMonoid& A = fin(X.charts[c]);
    bool any = false;
    FiniteCongruence m = full_congruence(A);
    for (std::size_t l = 0; l < C.chart_spaces[c].primes.size(); ++l) {
      if (!pts[C.local_to_global[c][l]]) continue;
      m = any ? meet(m, C.chart_spaces[c].primes[l]) : C.chart_spaces[c].primes[l];
      any = true;
    }
    V.chart_congs.push_back(any ? radical(A, m) : m);
  }
  return V;
}

bool is_vanishing_set(const MonoidScheme& X, const SchemeCongPoints& C,
                      const std::vector<char>& Z) {
  return vanishing_closure_points(X, C, Z) == Z;
}

bool is_strictly_dense(const MonoidScheme& X, const SchemeCongPoints& C,
                       const std::vector<char>& Z) {
  std::vector<char> vcl = vanishing_closure_points(X, C, Z);
  return std::all_of(vcl.begin(), vcl.end(), [](char c) { return c != 0; });
}

CongruenceSheaf congruence_sheaf_of(const SchemeMorphism& phi) {
  if (!phi.source.all_finite() || !phi.target.all_finite())
    throw error("congruence_sheaf_of: finite tier only");
  SchemePoints srcP = scheme_points(phi.source);
  SchemePoints tgtP = scheme_points(phi.target);
  SpaceMap pm = morphism_point_map(phi, srcP, tgtP);
  CongruenceSheaf sheaf;
  for (std::size_t c = 0; c < phi.target.num_charts(); ++c) {
    const FiniteMonoid& A = fin(phi.target.charts[c]);
    std::vector<char> chartset(tgtP.space.size(), 0);
    for (int g : tgtP.local_to_global[c])
      if (g >= 0) chartset[g] = 1;
    std::vector<std::size_t> pts;
    for (std::size_t y = 0; y < srcP.space.size(); ++y)
      if (chartset[pm.image[y]]) pts.push_back(y);
    // Evaluate each section of the chart at the stalk of every preimage point.
    std::vector<std::vector<int>> vals(A.size, std::vector<int>(pts.size()));
    for (std::size_t k = 0; k < pts.size(); ++k) {
      std::size_t y = pts[k];
      int i = -1;
      for (std::size_t ch = 0; ch < phi.source.num_charts(); ++ch)
        if (srcP.global_to_local[y][ch] >= 0 && phi.assign[ch] == (int)c) {
          i = (int)ch;
          break;
        }
      if (i < 0)
        throw error("congruence_sheaf_of: preimage point not reachable from chart " +
                    phi.target.chart_names[c]);
      StalkModel sy = scheme_stalk(phi.source, srcP, y);
      MonoidHom to_stalk = compose(stalk_map_from_chart(phi.source, srcP, sy, y, i),
                                   chart_to_finite_hom(phi.homs[i]));
      for (int a = 0; a < A.size; ++a) vals[a][k] = to_stalk.map[a];
    }
    FiniteCongruence ck{A.size, std::vector<int>(A.size)};
    for (int a = 0; a < A.size; ++a) {
      ck.cls[a] = a;
      for (int b = 0; b < a; ++b)
        if (vals[b] == vals[a]) {
          ck.cls[a] = ck.cls[b];
          break;
        }
    }
    sheaf.chart_congs.push_back(ck);
  }
  VanishingSet V{sheaf.chart_congs};
  sheaf.quasi_coherent =
      phi.target.num_charts() == 1 || vanishing_set_compatible(phi.target, V);
  return sheaf;
}

SymbolicHomKernel symbolic_congker(const ChartHom& h) {
  if (chart_is_finite(h.source) || chart_is_finite(h.target))
    throw error("symbolic_congker: monomial homs only");
  const FreeMonomialMonoid& A = sym(h.source);
  const FreeMonomialMonoid& B = sym(h.target);
  SymbolicHomKernel k;
  k.ambient = A;
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < A.num_vars; ++i) {
    if (std::get<Monomial>(h.map[i]).zero)
      k.zero_vars.push_back(i);
    else
      nonzero.push_back(i);
  }
  imat E(B.num_vars, ivec(nonzero.size(), 0));
  for (std::size_t c = 0; c < nonzero.size(); ++c) {
    const Monomial& m = std::get<Monomial>(h.map[nonzero[c]]);
    for (std::size_t j = 0; j < B.num_vars; ++j) E[j][c] = m.exps[j];
  }
  k.ker = hnf(nonzero.size(), integer_kernel(E, nonzero.size()));
  return k;
}

namespace {

bool sections_surjective_finite(const SchemeMorphism& phi, const SchemePoints& srcP,
                                const SchemePoints& tgtP, const SpaceMap& pm) {
  for (std::size_t x = 0; x < tgtP.space.size(); ++x) {
    std::vector<char> W = tgtP.space.minimal_open_of(x);
    std::vector<char> pre(srcP.space.size(), 0);
    for (std::size_t y = 0; y < srcP.space.size(); ++y)
      if (W[pm.image[y]]) pre[y] = 1;
    SectionsResult G = sections_over(phi.source, srcP, pre);
    if (G.points.empty()) continue;
    StalkModel sx = scheme_stalk(phi.target, tgtP, x);
    std::vector<std::vector<int>> image_tuples;
    for (int u = 0; u < sx.monoid.size; ++u) {
      std::vector<int> tup(G.points.size());
      for (std::size_t k = 0; k < G.points.size(); ++k) {
        std::size_t y = G.points[k];
        std::size_t fx = pm.image[y];
        StalkModel sfx = scheme_stalk(phi.target, tgtP, fx);
        MonoidHom res = stalk_restriction(phi.target, tgtP, sx, x, sfx, fx);
        StalkModel sy = scheme_stalk(phi.source, srcP, y);
        MonoidHom st = morphism_stalk_map(phi, srcP, tgtP, y, sfx, sy);
        tup[k] = st.map[res.map[u]];
      }
      image_tuples.push_back(std::move(tup));
    }
    for (const auto& sec : G.eval)
      if (std::find(image_tuples.begin(), image_tuples.end(), sec) == image_tuples.end())
        return false;
  }
  return true;
}

// Is the symbolic prime p_{I,H} in the image of the pullback map of h?
bool symbolic_prime_in_image(const ChartHom& h, const SymbolicPrimeCongruence& p) {
  const FreeMonomialMonoid& A = sym(h.source);
  const FreeMonomialMonoid& B = sym(h.target);
  for (const auto& Iq : enumerate_homs_to_F1_symbolic(B)) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < A.num_vars; ++i) {
      const Monomial& m = std::get<Monomial>(h.map[i]);
      bool vanishes = m.zero;
      for (auto z : Iq)
        if (!m.zero && m.exps[z] != 0) vanishes = true;
      if (vanishes) I.push_back(i);
    }
    if (I != p.vanishing) continue;
    std::vector<std::size_t> J, Jq;
    for (std::size_t i = 0; i < A.num_vars; ++i)
      if (!std::binary_search(I.begin(), I.end(), i)) J.push_back(i);
    for (std::size_t j = 0; j < B.num_vars; ++j)
      if (!std::binary_search(Iq.begin(), Iq.end(), j)) Jq.push_back(j);
    imat E(Jq.size(), ivec(J.size(), 0));
    for (std::size_t ci = 0; ci < J.size(); ++ci) {
      const Monomial& m = std::get<Monomial>(h.map[J[ci]]);
      for (std::size_t rj = 0; rj < Jq.size(); ++rj) E[rj][ci] = m.exps[Jq[rj]];
    }
    // p = h^*(q) for some H' iff pre(img(H_p)) = H_p, and then H' = img works.
    Lattice img = lattice_image(E, p.lat);
    Lattice pre = lattice_preimage(E, J.size(), img);
    if (lattice_equal(pre, p.lat)) return true;
  }
  return false;
}

struct SymbolicChartReport {
  bool surjective = false;
  bool image_vanishing = false;
};

SymbolicChartReport symbolic_chart_conditions(const ChartHom& h, int witness_radius) {
  SymbolicChartReport R;
  R.surjective = chart_hom_surjective(h);
  if (R.surjective) {
    // Surjections identify primes over the kernel with primes of the image.
    R.image_vanishing = true;
    return R;
  }
  if (chart_is_finite(h.source)) {
    // The target-chart congruence space is finite. A one-point chart (F1) is
    // hit entirely by a nonempty preimage.
    if (chart_is_f1(h.source)) {
      R.image_vanishing = true;
      return R;
    }
    throw error("is_closed_immersion_topological: finite chart over symbolic source undecided");
  }
  SymbolicHomKernel k = symbolic_congker(h);
  const FreeMonomialMonoid& A = sym(h.source);
  std::vector<std::size_t> freevars = A.non_inverted_vars();
  for (std::size_t mask = 0; mask < (std::size_t(1) << freevars.size()); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < freevars.size(); ++i)
      if (mask >> i & 1) I.push_back(freevars[i]);
    auto L = symbolic_kernel_minimal_lattice_over(k, I);
    if (!L) continue;
    std::size_t J = A.num_vars - I.size();
    std::vector<Lattice> candidates{*L, full_lattice(J)};
    for (std::size_t v = 0; v < J && (int)v <= witness_radius; ++v) {
      ivec e(J, 0);
      e[v] = 1;
      candidates.push_back(lattice_sum(*L, hnf(J, {e})));
    }
    for (const auto& H : candidates) {
      if (!lattice_subset(*L, H)) continue;
      SymbolicPrimeCongruence p = SymbolicPrimeCongruence::make(A, I, H);
      if (!symbolic_prime_in_image(h, p)) return R;  // witness found: not vanishing
    }
  }
  throw error("is_closed_immersion_topological: symbolic image undecided");
}

// Direction matrices of overlap isos, for global-section constraints.
bool symbolic_sections_trivial(const MonoidScheme& X) {
  std::size_t n = X.num_charts();
  for (const auto& M : X.charts)
    if (chart_is_finite(M)) throw error("symbolic_sections_trivial: symbolic charts only");
  // Connectivity via overlaps; transports from chart 0.
  std::vector<std::optional<imat>> E(n);  // chart0 vars -> chart j vars
  std::size_t n0 = sym(X.charts[0]).num_vars;
  imat id(n0, ivec(n0, 0));
  for (std::size_t v = 0; v < n0; ++v) id[v][v] = 1;
  E[0] = id;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [key, o] : X.overlaps) {
      auto [i, j] = key;
      if (!E[i] || E[j]) continue;
      std::size_t nj = sym(X.charts[j]).num_vars;
      imat Eij(nj, ivec(sym(X.charts[i]).num_vars, 0));
      for (std::size_t v = 0; v < sym(X.charts[i]).num_vars; ++v) {
        const Monomial& m = std::get<Monomial>(o.iso.map[v]);
        for (std::size_t w = 0; w < nj; ++w) Eij[w][v] = m.exps[w];
      }
      imat comp(nj, ivec(n0, 0));
      for (std::size_t w = 0; w < nj; ++w)
        for (std::size_t v = 0; v < n0; ++v)
          for (std::size_t u = 0; u < sym(X.charts[i]).num_vars; ++u)
            comp[w][v] += Eij[w][u] * (*E[i])[u][v];
      E[j] = comp;
      grew = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!E[j]) return false;  // disconnected: sections contain a product
  // Constraints: transported exponents of non-inverted variables are >= 0.
  std::vector<std::pair<ivec, long long>> base;
  for (std::size_t j = 0; j < n; ++j) {
    const FreeMonomialMonoid& C = sym(X.charts[j]);
    for (std::size_t w = 0; w < C.num_vars; ++w) {
      if (C.inverted[w]) continue;
      base.emplace_back((*E[j])[w], 0);
    }
  }
  for (std::size_t v = 0; v < n0; ++v)
    for (int sgn : {1, -1}) {
      auto cs = base;
      ivec row(n0, 0);
      row[v] = sgn;
      cs.emplace_back(row, -1);  // sgn * x_v >= 1
      if (rational_feasible(cs, n0)) return false;
    }
  return true;
}

// Gamma hom of phi against target chart c, restricted to the affine preimage
// piece U_i[s^-1]: Gamma(W_c) -> Gamma(U_i[s^-1]).
std::optional<ChartHom> restricted_chart_hom(const SchemeMorphism& phi, int i, int c,
                                             const ChartElem& s) {
  ChartLocalization loc = chart_localize(phi.source.charts[i], s);
  ChartHom base = chart_compose(loc.map, phi.homs[i]);  // Gamma(W_a) -> Gamma(U_i[s^-1])
  int a = phi.assign[i];
  if (a == c) return base;
  const Overlap* o = phi.target.overlap(c, a);
  if (!o) return std::nullopt;
  ChartLocalization la = chart_localize(phi.target.charts[a], o->s_tgt);
  auto ext = chart_extend_to_localization(base, la, o->s_tgt);
  if (!ext) return std::nullopt;
  ChartLocalization lc = chart_localize(phi.target.charts[c], o->s_src);
  return chart_compose(chart_compose(*ext, o->iso), lc.map);
}

// The affine preimage of a target chart: unique closed point + its minimal
// open; returns the derived Gamma hom or nullopt when not affine/derivable.
struct AffinePreimage {
  bool empty = false;
  ChartHom hom;  // Gamma(W_c) -> Gamma(preimage)
};

std::optional<AffinePreimage> affine_preimage_hom(const SchemeMorphism& phi,
                                                  const SchemePoints& srcP,
                                                  const SchemePoints& tgtP, const SpaceMap& pm,
                                                  std::size_t c) {
  std::vector<char> chartset(tgtP.space.size(), 0);
  for (int g : tgtP.local_to_global[c])
    if (g >= 0) chartset[g] = 1;
  std::vector<char> pre(srcP.space.size(), 0);
  bool empty = true;
  for (std::size_t y = 0; y < srcP.space.size(); ++y)
    if (chartset[pm.image[y]]) {
      pre[y] = 1;
      empty = false;
    }
  if (empty) return AffinePreimage{true, ChartHom{}};
  std::vector<std::size_t> maxpts;
  for (std::size_t y = 0; y < srcP.space.size(); ++y) {
    if (!pre[y]) continue;
    bool maximal = true;
    for (std::size_t z = 0; z < srcP.space.size(); ++z)
      if (z != y && pre[z] && srcP.space.spec[y][z]) maximal = false;
    if (maximal) maxpts.push_back(y);
  }
  if (maxpts.size() != 1) return std::nullopt;
  std::size_t y0 = maxpts[0];
  if (srcP.space.minimal_open_of(y0) != pre) return std::nullopt;
  for (std::size_t i = 0; i < phi.source.num_charts(); ++i) {
    if (srcP.global_to_local[y0][i] < 0) continue;
    if (!srcP.chart_specs[i].symbolic) continue;  // symbolic path only
    const FreeMonomialMonoid& U = sym(phi.source.charts[i]);
    const auto& Iy = srcP.chart_specs[i].sym_primes[srcP.global_to_local[y0][i]];
    Monomial s = Monomial::one(U.num_vars);
    for (std::size_t v = 0; v < U.num_vars; ++v)
      if (!std::binary_search(Iy.begin(), Iy.end(), v) && !U.inverted[v]) s.exps[v] = 1;
    auto h = restricted_chart_hom(phi, (int)i, (int)c, s);
    if (h) return AffinePreimage{false, *h};
  }
  return std::nullopt;
}

}  // namespace

MonoidHom morphism_stalk_map(const SchemeMorphism& phi, const SchemePoints& srcP,
                             const SchemePoints& tgtP, std::size_t y,
                             const StalkModel& target_stalk, const StalkModel& source_stalk) {
  (void)tgtP;
  int i = -1;
  for (std::size_t ch = 0; ch < phi.source.num_charts(); ++ch)
    if (srcP.global_to_local[y][ch] >= 0) {
      i = (int)ch;
      break;
    }
  if (i < 0) throw error("morphism_stalk_map: point in no chart");
  int a = phi.assign[i];
  MonoidHom w2 = compose(stalk_map_from_chart(phi.source, srcP, source_stalk, y, i),
                         chart_to_finite_hom(phi.homs[i]));
  const FiniteMonoid& Astar = fin(phi.target.charts[target_stalk.chart]);
  if (target_stalk.chart == a)
    return localize_hom_through(Astar, target_stalk.from_chart, target_stalk.monoid, w2);
  const Overlap* o = phi.target.overlap(target_stalk.chart, a);
  if (!o) throw error("morphism_stalk_map: no target overlap for transport");
  ChartLocalization lc = chart_localize(phi.target.charts[target_stalk.chart], o->s_src);
  MonoidHom iota_c = chart_to_finite_hom(lc.map);
  MonoidHom g = chart_to_finite_hom(o->iso);
  ChartLocalization la = chart_localize(phi.target.charts[a], o->s_tgt);
  MonoidHom iota_a = chart_to_finite_hom(la.map);
  MonoidHom m2 = localize_hom_through(fin(phi.target.charts[a]), iota_a, fin(la.monoid), w2);
  MonoidHom w2p = compose(m2, compose(g, iota_c));
  return localize_hom_through(Astar, target_stalk.from_chart, target_stalk.monoid, w2p);
}

ClosedImmersionReport closed_immersion_report(const SchemeMorphism& phi) {
  ClosedImmersionReport R;
  SchemePoints srcP = scheme_points(phi.source);
  SchemePoints tgtP = scheme_points(phi.target);
  SpaceMap pm = morphism_point_map(phi, srcP, tgtP);
  R.quasi_compact = is_quasi_compact(phi);
  R.affine = is_affine_morphism(phi);
  R.embedding = pm.is_embedding(srcP.space, tgtP.space);
  bool all_fin = phi.source.all_finite() && phi.target.all_finite();
  if (all_fin) {
    R.sections_surjective = sections_surjective_finite(phi, srcP, tgtP, pm);
    SchemeCongPoints srcC = scheme_cong_points(phi.source);
    SchemeCongPoints tgtC = scheme_cong_points(phi.target);
    SpaceMap cm = morphism_cong_map(phi, srcC, tgtC);
    std::vector<char> img(tgtC.space.size(), 0);
    for (int v : cm.image) img[v] = 1;
    R.image_vanishing = is_vanishing_set(phi.target, tgtC, img);
  } else {
    // Evaluate the symbolic conditions only when a verdict still needs them;
    // failed affineness or embedding already settles both characterizations.
    if (R.affine || (R.quasi_compact && R.embedding)) {
      bool surj = true, vanish = true;
      for (std::size_t c = 0; c < phi.target.num_charts(); ++c) {
        auto ap = affine_preimage_hom(phi, srcP, tgtP, pm, c);
        if (ap && ap->empty) continue;
        if (!ap) {
          if (chart_is_f1(phi.target.charts[c])) {
            // The target chart is one point with one prime congruence; the
            // image of a nonempty preimage is that whole chart space.
            surj = surj && symbolic_sections_trivial(phi.source);
            continue;
          }
          throw error("is_closed_immersion: symbolic preimage is not affine; undecided");
        }
        SymbolicChartReport res = symbolic_chart_conditions(ap->hom, 4);
        surj = surj && res.surjective;
        vanish = vanish && res.image_vanishing;
      }
      R.sections_surjective = surj;
      R.image_vanishing = vanish;
    } else {
      R.note = "section and vanishing conditions not evaluated (settled earlier)";
    }
  }
  R.verdict_def = R.affine && R.sections_surjective;
  R.verdict_topological =
      R.quasi_compact && R.embedding && R.sections_surjective && R.image_vanishing;
  return R;
}

bool is_closed_immersion_def(const SchemeMorphism& phi) {
  return closed_immersion_report(phi).verdict_def;
}

bool is_closed_immersion_topological(const SchemeMorphism& phi) {
  return closed_immersion_report(phi).verdict_topological;
}

bool is_dominant(const SchemeMorphism& phi) {
  if (phi.source.all_finite() && phi.target.all_finite()) {
    SchemeCongPoints srcC = scheme_cong_points(phi.source);
    SchemeCongPoints tgtC = scheme_cong_points(phi.target);
    SpaceMap cm = morphism_cong_map(phi, srcC, tgtC);
    std::vector<char> img(tgtC.space.size(), 0);
    for (int v : cm.image) img[v] = 1;
    return is_strictly_dense(phi.target, tgtC, img);
  }
  // Symbolic target charts are strongly reduced, so strict density of the
  // image is triviality of the chartwise congruence kernel. Composites into
  // finite monoids never separate high monomials (eventual periodicity), and
  // neither do monomial composites with a zero image; what decides is the
  // intersection of the exponent kernels of the clean symbolic composites.
  for (std::size_t c = 0; c < phi.target.num_charts(); ++c) {
    if (chart_is_finite(phi.target.charts[c]))
      throw error("is_dominant: finite target charts mixed with a symbolic source unsupported");
    const FreeMonomialMonoid& W = sym(phi.target.charts[c]);
    if (W.num_vars == 0) continue;
    bool have_clean = false;
    Lattice common = full_lattice(W.num_vars);
    for (std::size_t i = 0; i < phi.source.num_charts(); ++i) {
      if (phi.assign[i] != (int)c) continue;
      const ChartHom& h = phi.homs[i];
      if (chart_is_finite(h.target)) continue;
      bool zero_image = false;
      for (const auto& m : h.map)
        if (std::get<Monomial>(m).zero) zero_image = true;
      if (zero_image) continue;
      SymbolicHomKernel k = symbolic_congker(h);
      common = have_clean ? lattice_intersection(common, k.ker) : k.ker;
      have_clean = true;
    }
    if (!have_clean || !common.basis.empty()) return false;
  }
  return true;
}

bool is_closed_map(const SchemeMorphism& phi) {
  if (!phi.source.all_finite() || !phi.target.all_finite())
    throw error("is_closed_map: finite tier only");
  if (!is_quasi_compact(phi)) throw error("is_closed_map: morphism must be quasi-compact");
  SchemeCongPoints srcC = scheme_cong_points(phi.source);
  SchemeCongPoints tgtC = scheme_cong_points(phi.target);
  SpaceMap cm = morphism_cong_map(phi, srcC, tgtC);
  return cm.is_closed_map(srcC.space, tgtC.space);
}

SeparatedReport separated_report(const SchemeMorphism& phi) {
  SeparatedReport R;
  R.quasi_separated = is_quasi_separated(phi);
  DiagonalResult D = diagonal(phi);
  ClosedImmersionReport ci = closed_immersion_report(D.delta);
  R.diagonal_closed_immersion = ci.verdict_def;
  if (D.square.product.all_finite()) {
    SchemeCongPoints srcC = scheme_cong_points(D.delta.source);
    SchemeCongPoints tgtC = scheme_cong_points(D.square.product);
    SpaceMap cm = morphism_cong_map(D.delta, srcC, tgtC);
    std::vector<char> img(tgtC.space.size(), 0);
    for (int v : cm.image) img[v] = 1;
    R.diagonal_image_closed = tgtC.space.is_closed(img);
  } else {
    // Chartwise over the product cover: the image piece is V_{congker} of the
    // restricted surjection, hence closed; non-surjective pieces are undecided.
    SchemePoints prodP = scheme_points(D.square.product);
    SchemePoints srcP = scheme_points(D.delta.source);
    SpaceMap pm = morphism_point_map(D.delta, srcP, prodP);
    bool closed = true;
    for (std::size_t k = 0; k < D.square.chart_pairs.size(); ++k) {
      auto ap = affine_preimage_hom(D.delta, srcP, prodP, pm, k);
      if (ap && ap->empty) continue;
      if (!ap) throw error("is_separated: symbolic diagonal piece is not affine; undecided");
      if (!chart_hom_surjective(ap->hom))
        throw error("is_separated: symbolic diagonal restriction not surjective; undecided");
    }
    R.diagonal_image_closed = closed;
  }
  R.verdict = R.quasi_separated && R.diagonal_image_closed;
  if (R.verdict != R.diagonal_closed_immersion)
    throw error("is_separated: the two characterizations disagree (internal inconsistency)");
  return R;
}

bool is_separated(const SchemeMorphism& phi) { return separated_report(phi).verdict; }

SredSchemeResult sred_scheme(const MonoidScheme& X) {
  if (!X.all_finite()) throw error("sred_scheme: finite tier only");
  std::vector<ChartMonoid> charts;
  std::vector<QuotientResult> projs;
  for (const auto& M : X.charts) {
    QuotientResult q = sred(fin(M));
    charts.emplace_back(q.monoid);
    projs.push_back(q);
  }
  std::map<std::pair<int, int>, Overlap> overlaps;
  for (const auto& [key, o] : X.overlaps) {
    auto [i, j] = key;
    const FiniteMonoid& A = fin(X.charts[i]);
    const FiniteMonoid& B = fin(X.charts[j]);
    int si = std::get<int>(o.s_src), sj = std::get<int>(o.s_tgt);
    int psi = projs[i].projection.map[si];
    int psj = projs[j].projection.map[sj];
    LocalizationResult nli = localize_at_element(projs[i].monoid, psi);
    LocalizationResult nlj = localize_at_element(projs[j].monoid, psj);
    LocalizationResult li = localize_at_element(A, si);
    LocalizationResult lj = localize_at_element(B, sj);
    MonoidHom g = chart_to_finite_hom(o.iso);  // loc_i -> loc_j
    QuotientResult slj = sred(lj.monoid);
    MonoidHom w = compose(slj.projection, compose(g, li.map));  // A -> sred(loc_j)
    std::vector<int> wbar(projs[i].monoid.size, -1);
    for (int a = 0; a < A.size; ++a) {
      int cls = projs[i].projection.map[a];
      if (wbar[cls] >= 0 && wbar[cls] != w.map[a])
        throw error("sred_scheme: sred factorization failed");
      wbar[cls] = w.map[a];
    }
    MonoidHom wb{projs[i].monoid, slj.monoid, std::move(wbar)};
    wb.validate();
    MonoidHom ext = localize_hom_through(projs[i].monoid, nli.map, nli.monoid, wb);
    MonoidHom q = compose(nlj.map, projs[j].projection);  // B -> nlj
    MonoidHom Q = localize_hom_through(B, lj.map, lj.monoid, q);
    std::vector<int> qbar(slj.monoid.size, -1);
    for (int a = 0; a < lj.monoid.size; ++a) {
      int cls = slj.projection.map[a];
      if (qbar[cls] >= 0 && qbar[cls] != Q.map[a])
        throw error("sred_scheme: sred factorization failed (localized)");
      qbar[cls] = Q.map[a];
    }
    MonoidHom qb{slj.monoid, nlj.monoid, std::move(qbar)};
    qb.validate();
    MonoidHom iso = compose(qb, ext);
    overlaps[{i, j}] = Overlap{psi, psj, ChartHom::from_finite(iso)};
  }
  SredSchemeResult R{MonoidScheme::glue(charts, X.chart_names, std::move(overlaps)),
                     SchemeMorphism{}};
  std::vector<int> assign(X.num_charts());
  std::iota(assign.begin(), assign.end(), 0);
  std::vector<ChartHom> homs;
  for (std::size_t i = 0; i < X.num_charts(); ++i)
    homs.push_back(ChartHom::from_finite(projs[i].projection));
  R.into = SchemeMorphism::make(R.scheme, X, std::move(assign), std::move(homs));
  return R;
}

bool scheme_is_strongly_reduced(const MonoidScheme& X) {
  for (const auto& M : X.charts)
    if (!is_strongly_reduced(fin(M))) return false;
  return true;
}

}  // namespace f1cong
