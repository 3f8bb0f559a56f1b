#include "f1cong/scheme.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace f1cong {

namespace {

const FiniteMonoid& fin(const ChartMonoid& M) { return std::get<FiniteMonoid>(M); }
const FreeMonomialMonoid& sym(const ChartMonoid& M) { return std::get<FreeMonomialMonoid>(M); }

MonoidHom chart_to_finite_hom(const ChartHom& h) {
  if (!chart_is_finite(h.source) || !chart_is_finite(h.target))
    throw error("expected a finite-tier hom");
  std::vector<int> m;
  for (const auto& x : h.map) m.push_back(std::get<int>(x));
  return MonoidHom{fin(h.source), fin(h.target), std::move(m)};
}

// Formal composition of symbolic variable maps (exponent arithmetic only).
Monomial formal_apply(const std::vector<ChartElem>& varmap, std::size_t out_vars,
                      const Monomial& m) {
  if (m.zero) return Monomial::make_zero();
  Monomial out = Monomial::one(out_vars);
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    const Monomial& img = std::get<Monomial>(varmap[i]);
    if (img.zero) return Monomial::make_zero();
    for (std::size_t j = 0; j < out_vars; ++j) out.exps[j] += m.exps[i] * img.exps[j];
  }
  return out;
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) p[std::max(x, y)] = std::min(x, y);
  }
};

// Index of the localized prime S^{-1}p inside the spectrum of M[s^-1].
std::size_t localized_prime_index(const ChartMSpec& spec, std::size_t p,
                                  const ChartLocalization& loc, const ChartMSpec& loc_spec) {
  if (spec.symbolic) {
    for (std::size_t i = 0; i < loc_spec.sym_primes.size(); ++i)
      if (loc_spec.sym_primes[i] == spec.sym_primes[p]) return i;
    throw error("localized prime not found (symbolic)");
  }
  const FiniteMonoid& L = fin(loc.monoid);
  std::vector<int> gens;
  for (int a : spec.fin_primes[p].elems) gens.push_back(std::get<int>(loc.map.map[a]));
  Ideal I = make_ideal(L, gens);
  for (std::size_t i = 0; i < loc_spec.fin_primes.size(); ++i)
    if (loc_spec.fin_primes[i].elems == I.elems) return i;
  throw error("localized prime not found (finite)");
}

}  // namespace

MonoidScheme MonoidScheme::affine(ChartMonoid M, std::string name) {
  MonoidScheme X;
  X.charts.push_back(std::move(M));
  X.chart_names.push_back(std::move(name));
  return X;
}

MonoidScheme MonoidScheme::disjoint_union(std::vector<ChartMonoid> charts,
                                          std::vector<std::string> names) {
  MonoidScheme X;
  X.charts = std::move(charts);
  if (names.empty())
    for (std::size_t i = 0; i < X.charts.size(); ++i) names.push_back("U" + std::to_string(i));
  X.chart_names = std::move(names);
  return X;
}

bool MonoidScheme::all_finite() const {
  return std::all_of(charts.begin(), charts.end(),
                     [](const ChartMonoid& M) { return chart_is_finite(M); });
}

const Overlap* MonoidScheme::overlap(int i, int j) const {
  auto it = overlaps.find({i, j});
  return it == overlaps.end() ? nullptr : &it->second;
}

MonoidScheme MonoidScheme::glue(std::vector<ChartMonoid> charts, std::vector<std::string> names,
                                std::map<std::pair<int, int>, Overlap> overlaps) {
  MonoidScheme X;
  X.charts = std::move(charts);
  X.chart_names = std::move(names);
  if (X.chart_names.empty())
    for (std::size_t i = 0; i < X.charts.size(); ++i)
      X.chart_names.push_back("U" + std::to_string(i));
  for (auto& [key, o] : overlaps) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= (int)X.charts.size() || j >= (int)X.charts.size() || i == j)
      throw error("glue: bad overlap indices");
    ChartLocalization li = chart_localize(X.charts[i], o.s_src);
    ChartLocalization lj = chart_localize(X.charts[j], o.s_tgt);
    if (!chart_monoid_equal(o.iso.source, li.monoid) || !chart_monoid_equal(o.iso.target, lj.monoid))
      throw error("glue: overlap iso endpoints do not match the localized charts");
    o.iso.validate();
    if (!chart_hom_inverse(o.iso)) throw error("glue: overlap map is not an isomorphism");
  }
  X.overlaps = std::move(overlaps);
  // Synthesize missing inverse directions, check consistency of given ones.
  std::vector<std::pair<std::pair<int, int>, Overlap>> add;
  for (const auto& [key, o] : X.overlaps) {
    auto [i, j] = key;
    auto inv = chart_hom_inverse(o.iso);
    auto rev = X.overlaps.find({j, i});
    if (rev == X.overlaps.end()) {
      add.push_back({{j, i}, Overlap{o.s_tgt, o.s_src, *inv}});
    } else {
      if (!chart_hom_equal(rev->second.iso, *inv))
        throw error("glue: the two directions of an overlap are not mutually inverse");
    }
  }
  for (auto& [k, o] : add) X.overlaps.emplace(k, std::move(o));
  // Cocycle condition on triples.
  std::size_t n = X.charts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const Overlap* oij = X.overlap(i, j);
        const Overlap* ojk = X.overlap(j, k);
        const Overlap* oik = X.overlap(i, k);
        if (!oij || !ojk || !oik) continue;
        bool symbolic = !chart_is_finite(X.charts[i]) && !chart_is_finite(X.charts[j]) &&
                        !chart_is_finite(X.charts[k]);
        if (!symbolic)
          throw error("glue: finite-tier triple overlaps are not supported");
        std::size_t nk = sym(X.charts[k]).num_vars;
        for (std::size_t v = 0; v < sym(X.charts[i]).num_vars; ++v) {
          Monomial via_j = formal_apply(ojk->iso.map, nk,
                                        std::get<Monomial>(oij->iso.map[v]));
          Monomial direct = std::get<Monomial>(oik->iso.map[v]);
          if (!(via_j == direct)) throw error("glue: cocycle condition fails");
        }
      }
  return X;
}

MonoidScheme affine_space(std::size_t n) {
  return MonoidScheme::affine(FreeMonomialMonoid::make(n), "A" + std::to_string(n));
}

MonoidScheme gm_scheme() {
  return MonoidScheme::affine(FreeMonomialMonoid::make(1, {0}), "Gm");
}

MonoidScheme pn_scheme(std::size_t n) {
  // Chart i has variables v_k = x_k/x_i for k != i.
  std::vector<ChartMonoid> charts;
  std::vector<std::string> names;
  auto varname = [&](std::size_t i, std::size_t k) {
    return "x" + std::to_string(k) + "/x" + std::to_string(i);
  };
  auto varpos = [&](std::size_t i, std::size_t k) {
    // Position of v_k among the variables of chart i.
    return k < i ? k : k - 1;
  };
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::string> vn;
    for (std::size_t k = 0; k <= n; ++k)
      if (k != i) vn.push_back(varname(i, k));
    charts.emplace_back(FreeMonomialMonoid::make(n, {}, vn));
    names.push_back("C" + std::to_string(i));
  }
  std::map<std::pair<int, int>, Overlap> overlaps;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      FreeMonomialMonoid loc_i = sym(charts[i]).localize_at(Monomial::var(n, varpos(i, j)));
      FreeMonomialMonoid loc_j = sym(charts[j]).localize_at(Monomial::var(n, varpos(j, i)));
      // v^i_k = x_k/x_i maps to (x_k/x_j) * (x_i/x_j)^{-1}.
      std::vector<ChartElem> map;
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == i) continue;
        Monomial m = Monomial::one(n);
        m.exps[varpos(j, i)] -= 1;
        if (k != j) m.exps[varpos(j, k)] += 1;
        map.emplace_back(std::move(m));
      }
      overlaps[{(int)i, (int)j}] =
          Overlap{Monomial::var(n, varpos(i, j)), Monomial::var(n, varpos(j, i)),
                  ChartHom{loc_i, loc_j, std::move(map)}};
    }
  return MonoidScheme::glue(std::move(charts), std::move(names), std::move(overlaps));
}

MonoidScheme p1_scheme() { return pn_scheme(1); }

SchemePoints scheme_points(const MonoidScheme& X) {
  SchemePoints R;
  std::size_t n = X.num_charts();
  R.chart_specs.reserve(n);
  std::vector<int> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    R.chart_specs.push_back(chart_mspec(X.charts[i]));
    offset[i + 1] = offset[i] + (int)R.chart_specs[i].count();
  }
  UF uf(offset[n]);
  for (const auto& [key, o] : X.overlaps) {
    auto [i, j] = key;
    ChartLocalization li = chart_localize(X.charts[i], o.s_src);
    ChartLocalization lj = chart_localize(X.charts[j], o.s_tgt);
    ChartMSpec si = chart_mspec(li.monoid), sj = chart_mspec(lj.monoid);
    auto ginv = chart_hom_inverse(o.iso);
    for (std::size_t p = 0; p < R.chart_specs[i].count(); ++p) {
      if (chart_prime_contains(X.charts[i], R.chart_specs[i], p, o.s_src)) continue;
      std::size_t qi = localized_prime_index(R.chart_specs[i], p, li, si);
      std::size_t qj = chart_prime_pullback(*ginv, sj, si, qi);
      std::size_t pj = chart_prime_pullback(lj.map, R.chart_specs[j], sj, qj);
      uf.unite(offset[i] + (int)p, offset[j] + (int)pj);
    }
  }
  std::vector<int> global_of(offset[n], -1);
  std::vector<std::pair<int, int>> canonical;  // (chart, local) per global
  for (int x = 0; x < offset[n]; ++x) {
    int r = uf.find(x);
    if (global_of[r] < 0) {
      global_of[r] = (int)canonical.size();
      int chart = (int)(std::upper_bound(offset.begin(), offset.end(), r) - offset.begin()) - 1;
      canonical.emplace_back(chart, r - offset[chart]);
    }
    global_of[x] = global_of[r];
  }
  std::size_t ng = canonical.size();
  R.local_to_global.resize(n);
  R.global_to_local.assign(ng, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    R.local_to_global[i].resize(R.chart_specs[i].count());
    for (std::size_t p = 0; p < R.chart_specs[i].count(); ++p) {
      int g = global_of[offset[i] + (int)p];
      R.local_to_global[i][p] = g;
      if (R.global_to_local[g][i] >= 0 && R.global_to_local[g][i] != (int)p)
        throw error("scheme_points: two points of one chart were glued together");
      R.global_to_local[g][i] = (int)p;
    }
  }
  R.space.names.resize(ng);
  for (std::size_t g = 0; g < ng; ++g) {
    auto [c, l] = canonical[g];
    R.space.names[g] = X.chart_names[c] + ":" + R.chart_specs[c].space.names[l];
  }
  R.space.spec.assign(ng, std::vector<char>(ng, 0));
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < ng; ++y)
      for (std::size_t c = 0; c < n && !R.space.spec[x][y]; ++c) {
        int lx = R.global_to_local[x][c], ly = R.global_to_local[y][c];
        if (lx >= 0 && ly >= 0 && R.chart_specs[c].space.spec[lx][ly]) R.space.spec[x][y] = 1;
      }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<char> U(ng, 0);
    for (int g : R.local_to_global[c])
      if (g >= 0) U[g] = 1;
    R.space.subbasis.emplace_back(X.chart_names[c], std::move(U));
  }
  return R;
}

SchemeCongPoints scheme_cong_points(const MonoidScheme& X, int cap) {
  if (!X.all_finite())
    throw error("scheme_cong_points: only finite-tier schemes have enumerable congruence spaces");
  SchemeCongPoints R;
  std::size_t n = X.num_charts();
  std::vector<int> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    R.chart_spaces.push_back(cong_space(fin(X.charts[i]), cap));
    offset[i + 1] = offset[i] + (int)R.chart_spaces[i].primes.size();
  }
  UF uf(offset[n]);
  for (const auto& [key, o] : X.overlaps) {
    auto [i, j] = key;
    MonoidHom iota_i = chart_to_finite_hom(chart_localize(X.charts[i], o.s_src).map);
    MonoidHom iota_j = chart_to_finite_hom(chart_localize(X.charts[j], o.s_tgt).map);
    MonoidHom g = chart_to_finite_hom(o.iso);
    int s = std::get<int>(o.s_src);
    for (std::size_t p = 0; p < R.chart_spaces[i].primes.size(); ++p) {
      const FiniteCongruence& c = R.chart_spaces[i].primes[p];
      if (nullideal(fin(X.charts[i]), c).contains(s)) continue;
      FiniteCongruence cj = pullback(iota_j, pushforward(g, pushforward(iota_i, c)));
      std::size_t pj = R.chart_spaces[j].index_of(cj);
      uf.unite(offset[i] + (int)p, offset[j] + (int)pj);
    }
  }
  std::vector<int> global_of(offset[n], -1);
  std::vector<std::pair<int, int>> canonical;
  for (int x = 0; x < offset[n]; ++x) {
    int r = uf.find(x);
    if (global_of[r] < 0) {
      global_of[r] = (int)canonical.size();
      int chart = (int)(std::upper_bound(offset.begin(), offset.end(), r) - offset.begin()) - 1;
      canonical.emplace_back(chart, r - offset[chart]);
    }
    global_of[x] = global_of[r];
  }
  std::size_t ng = canonical.size();
  R.local_to_global.resize(n);
  R.global_to_local.assign(ng, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    R.local_to_global[i].resize(R.chart_spaces[i].primes.size());
    for (std::size_t p = 0; p < R.chart_spaces[i].primes.size(); ++p) {
      int g = global_of[offset[i] + (int)p];
      R.local_to_global[i][p] = g;
      if (R.global_to_local[g][i] >= 0 && R.global_to_local[g][i] != (int)p)
        throw error("scheme_cong_points: two points of one chart were glued together");
      R.global_to_local[g][i] = (int)p;
    }
  }
  R.space.names.resize(ng);
  for (std::size_t g = 0; g < ng; ++g) {
    auto [c, l] = canonical[g];
    R.space.names[g] = X.chart_names[c] + ":" + R.chart_spaces[c].space.names[l];
  }
  R.space.spec.assign(ng, std::vector<char>(ng, 0));
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < ng; ++y)
      for (std::size_t c = 0; c < n && !R.space.spec[x][y]; ++c) {
        int lx = R.global_to_local[x][c], ly = R.global_to_local[y][c];
        if (lx >= 0 && ly >= 0 && R.chart_spaces[c].space.spec[lx][ly]) R.space.spec[x][y] = 1;
      }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<char> U(ng, 0);
    for (int g : R.local_to_global[c])
      if (g >= 0) U[g] = 1;
    R.space.subbasis.emplace_back(X.chart_names[c], std::move(U));
  }
  return R;
}

SpaceMap scheme_projection_pi(const MonoidScheme& X, const SchemeCongPoints& C,
                              const SchemePoints& P) {
  SpaceMap m;
  m.image.resize(C.space.size(), -1);
  for (std::size_t c = 0; c < X.num_charts(); ++c) {
    const FiniteMonoid& A = fin(X.charts[c]);
    for (std::size_t l = 0; l < C.chart_spaces[c].primes.size(); ++l) {
      Ideal I = nullideal(A, C.chart_spaces[c].primes[l]);
      std::size_t li = 0;
      bool found = false;
      for (std::size_t k = 0; k < P.chart_specs[c].fin_primes.size(); ++k)
        if (P.chart_specs[c].fin_primes[k].elems == I.elems) {
          li = k;
          found = true;
        }
      if (!found) throw error("scheme_projection_pi: nullideal is not prime");
      int g = C.local_to_global[c][l];
      int tg = P.local_to_global[c][li];
      if (m.image[g] >= 0 && m.image[g] != tg)
        throw error("scheme_projection_pi: chartwise projections disagree");
      m.image[g] = tg;
    }
  }
  return m;
}

SchemeMorphism SchemeMorphism::make(MonoidScheme source, MonoidScheme target,
                                    std::vector<int> assign, std::vector<ChartHom> homs) {
  SchemeMorphism phi{std::move(source), std::move(target), std::move(assign), std::move(homs)};
  if (phi.assign.size() != phi.source.num_charts() || phi.homs.size() != phi.assign.size())
    throw error("scheme morphism: chart assignment size mismatch");
  for (std::size_t i = 0; i < phi.assign.size(); ++i) {
    int c = phi.assign[i];
    if (c < 0 || c >= (int)phi.target.num_charts()) throw error("scheme morphism: bad chart");
    if (!chart_monoid_equal(phi.homs[i].source, phi.target.charts[c]) ||
        !chart_monoid_equal(phi.homs[i].target, phi.source.charts[i]))
      throw error("scheme morphism: hom endpoints do not match the charts");
    phi.homs[i].validate();
  }
  // Overlap compatibility.
  for (const auto& [key, o] : phi.source.overlaps) {
    auto [i1, i2] = key;
    int c1 = phi.assign[i1], c2 = phi.assign[i2];
    ChartLocalization l1 = chart_localize(phi.source.charts[i1], o.s_src);
    ChartHom comp1 = chart_compose(l1.map, phi.homs[i1]);  // Gamma(W_c1) -> Gamma(U_i1[s^-1])
    ChartLocalization l2 = chart_localize(phi.source.charts[i2], o.s_tgt);
    auto iso21 = chart_hom_inverse(o.iso);
    if (!iso21) throw error("scheme morphism: source overlap is not an iso");
    ChartHom comp2 = chart_compose(*iso21, chart_compose(l2.map, phi.homs[i2]));
    if (c1 == c2) {
      if (!chart_hom_equal(comp1, comp2))
        throw error("scheme morphism: chart homs disagree on an overlap");
      continue;
    }
    const Overlap* t = phi.target.overlap(c1, c2);
    if (!t) throw error("scheme morphism: overlap image crosses charts without a target overlap");
    ChartLocalization tl1 = chart_localize(phi.target.charts[c1], t->s_src);
    ChartLocalization tl2 = chart_localize(phi.target.charts[c2], t->s_tgt);
    auto ext1 = chart_extend_to_localization(comp1, tl1, t->s_src);
    auto ext2 = chart_extend_to_localization(comp2, tl2, t->s_tgt);
    if (!ext1 || !ext2)
      throw error("scheme morphism: overlap does not land in the target overlap");
    if (!chart_hom_equal(chart_compose(*ext2, t->iso), *ext1))
      throw error("scheme morphism: chart homs disagree on an overlap (across target charts)");
  }
  return phi;
}

SchemeMorphism identity_morphism(const MonoidScheme& X) {
  std::vector<int> assign(X.num_charts());
  std::iota(assign.begin(), assign.end(), 0);
  std::vector<ChartHom> homs;
  for (const auto& M : X.charts) homs.push_back(ChartHom::identity(M));
  return SchemeMorphism::make(X, X, std::move(assign), std::move(homs));
}

SchemeMorphism compose(const SchemeMorphism& g, const SchemeMorphism& f) {
  // g after f : f.source -> g.target.
  std::vector<int> assign;
  std::vector<ChartHom> homs;
  for (std::size_t i = 0; i < f.source.num_charts(); ++i) {
    int mid = f.assign[i];
    assign.push_back(g.assign[mid]);
    homs.push_back(chart_compose(f.homs[i], g.homs[mid]));
  }
  return SchemeMorphism::make(f.source, g.target, std::move(assign), std::move(homs));
}

SchemeMorphism mspec_morphism(const ChartHom& f) {
  MonoidScheme Y = MonoidScheme::affine(f.target, "Y0");
  MonoidScheme X = MonoidScheme::affine(f.source, "X0");
  return SchemeMorphism::make(Y, X, {0}, {f});
}

SpaceMap morphism_point_map(const SchemeMorphism& phi, const SchemePoints& srcP,
                            const SchemePoints& tgtP) {
  SpaceMap m;
  m.image.resize(srcP.space.size(), -1);
  for (std::size_t i = 0; i < phi.source.num_charts(); ++i) {
    int c = phi.assign[i];
    for (std::size_t l = 0; l < srcP.chart_specs[i].count(); ++l) {
      std::size_t q = chart_prime_pullback(phi.homs[i], tgtP.chart_specs[c],
                                           srcP.chart_specs[i], l);
      int g = srcP.local_to_global[i][l];
      int tg = tgtP.local_to_global[c][q];
      if (m.image[g] >= 0 && m.image[g] != tg)
        throw error("morphism_point_map: chartwise images disagree");
      m.image[g] = tg;
    }
  }
  return m;
}

SpaceMap morphism_cong_map(const SchemeMorphism& phi, const SchemeCongPoints& srcC,
                           const SchemeCongPoints& tgtC) {
  SpaceMap m;
  m.image.resize(srcC.space.size(), -1);
  for (std::size_t i = 0; i < phi.source.num_charts(); ++i) {
    int c = phi.assign[i];
    MonoidHom h = chart_to_finite_hom(phi.homs[i]);
    for (std::size_t l = 0; l < srcC.chart_spaces[i].primes.size(); ++l) {
      FiniteCongruence q = pullback(h, srcC.chart_spaces[i].primes[l]);
      std::size_t qi = tgtC.chart_spaces[c].index_of(q);
      int g = srcC.local_to_global[i][l];
      int tg = tgtC.local_to_global[c][qi];
      if (m.image[g] >= 0 && m.image[g] != tg)
        throw error("morphism_cong_map: chartwise images disagree");
      m.image[g] = tg;
    }
  }
  return m;
}

namespace {

bool chart_is_f1(const ChartMonoid& M) {
  if (chart_is_finite(M)) return fin(M).size == 2;
  return sym(M).num_vars == 0;
}

// Tensor of two free monomial monoids over F1: variables side by side.
FreeMonomialMonoid symbolic_pair_monoid(const FreeMonomialMonoid& A, const FreeMonomialMonoid& B) {
  std::vector<std::string> names;
  std::vector<std::size_t> inv;
  for (std::size_t i = 0; i < A.num_vars; ++i) {
    names.push_back(A.var_names[i] + "'");
    if (A.inverted[i]) inv.push_back(i);
  }
  for (std::size_t j = 0; j < B.num_vars; ++j) {
    names.push_back(B.var_names[j] + "''");
    if (B.inverted[j]) inv.push_back(A.num_vars + j);
  }
  return FreeMonomialMonoid::make(A.num_vars + B.num_vars, inv, names);
}

Monomial embed_monomial(const Monomial& m, std::size_t total, std::size_t offset) {
  if (m.zero) return Monomial::make_zero();
  Monomial out = Monomial::one(total);
  for (std::size_t i = 0; i < m.exps.size(); ++i) out.exps[offset + i] = m.exps[i];
  return out;
}

}  // namespace

FiberProductResult fiber_product(const SchemeMorphism& phi, const SchemeMorphism& psi,
                                 std::size_t pair_cap) {
  if (!chart_monoid_equal(phi.target.charts[0], psi.target.charts[0]) ||
      phi.target.num_charts() != 1 || psi.target.num_charts() != 1)
    throw error("fiber_product: only affine bases are supported");
  const MonoidScheme& Y = phi.source;
  const MonoidScheme& Z = psi.source;
  bool all_fin = Y.all_finite() && Z.all_finite() && chart_is_finite(phi.target.charts[0]);
  bool all_sym = !Y.all_finite() || !Z.all_finite();
  FiberProductResult R;
  std::vector<ChartMonoid> charts;
  std::vector<std::string> names;
  std::map<std::pair<int, int>, Overlap> overlaps;
  std::vector<int> a1, a2;
  std::vector<ChartHom> h1, h2;
  auto pair_index = [&](int i, int j) { return i * (int)Z.num_charts() + j; };
  if (all_fin) {
    if (!Y.overlaps.empty() || !Z.overlaps.empty())
      throw error("fiber_product: finite glued sources must have empty overlaps");
    for (std::size_t i = 0; i < Y.num_charts(); ++i)
      for (std::size_t j = 0; j < Z.num_charts(); ++j) {
        TensorResult T = tensor(chart_to_finite_hom(phi.homs[i]),
                                chart_to_finite_hom(psi.homs[j]), pair_cap);
        R.chart_pairs.emplace_back((int)i, (int)j);
        R.tensors.push_back(T);
        R.var_origins.emplace_back();
        charts.emplace_back(T.monoid);
        names.push_back(Y.chart_names[i] + "x" + Z.chart_names[j]);
        a1.push_back((int)i);
        a2.push_back((int)j);
        h1.push_back(ChartHom::from_finite(T.from_left));
        h2.push_back(ChartHom::from_finite(T.from_right));
      }
  } else if (all_sym && !chart_is_f1(phi.target.charts[0]) &&
             !chart_is_finite(phi.target.charts[0]) && Y.num_charts() == 1 &&
             Z.num_charts() == 1) {
    // Symbolic base: eliminate the base variables when each maps to a single
    // inverted variable on one side (the pushout then stays free monomial).
    const FreeMonomialMonoid& A = sym(Y.charts[0]);
    const FreeMonomialMonoid& B = sym(Z.charts[0]);
    const FreeMonomialMonoid& C = sym(phi.target.charts[0]);
    // Each base variable must map on the A side to a single variable x^{+-1};
    // the relation x^e = g(t_c) then eliminates x (substitution), and repeated
    // relations on an eliminated variable must be identities in B.
    std::vector<int> elimA(A.num_vars, -1);     // A-var -> base var eliminating it
    std::vector<long long> elimE(A.num_vars, 0);
    bool ok = true;
    for (std::size_t c = 0; c < C.num_vars && ok; ++c) {
      const Monomial& fa = std::get<Monomial>(phi.homs[0].map[c]);
      const Monomial& gb = std::get<Monomial>(psi.homs[0].map[c]);
      if (fa.zero || gb.zero) {
        ok = false;
        break;
      }
      int var = -1;
      long long e = 0;
      for (std::size_t v = 0; v < A.num_vars; ++v)
        if (fa.exps[v] != 0) {
          if (var >= 0) var = -2;
          else {
            var = (int)v;
            e = fa.exps[v];
          }
        }
      if (var < 0 || (e != 1 && e != -1)) {
        ok = false;
        break;
      }
      if (e == -1 && !A.inverted[var]) {
        ok = false;
        break;
      }
      if (A.inverted[var] && !B.is_unit(gb)) {
        ok = false;
        break;
      }
      if (elimA[var] >= 0) {
        // Residual relation: g(t_{c0})^{e/e0} must equal g(t_c).
        const Monomial& g0 = std::get<Monomial>(psi.homs[0].map[elimA[var]]);
        Monomial lhs = B.pow(g0, e * elimE[var]);  // e0 in {1,-1}: 1/e0 = e0
        if (!(lhs == gb)) ok = false;
        continue;
      }
      elimA[var] = (int)c;
      elimE[var] = e;
    }
    if (!ok) throw error("fiber_product: symbolic base does not eliminate");
    std::vector<std::string> names_t;
    std::vector<std::size_t> inv_t;
    std::vector<std::pair<int, std::size_t>> origin;
    std::vector<int> a_pos(A.num_vars, -1);
    for (std::size_t v = 0; v < A.num_vars; ++v) {
      if (elimA[v] >= 0) continue;
      a_pos[v] = (int)origin.size();
      if (A.inverted[v]) inv_t.push_back(origin.size());
      names_t.push_back(A.var_names[v] + "'");
      origin.emplace_back(0, v);
    }
    std::size_t b_off = origin.size();
    for (std::size_t v = 0; v < B.num_vars; ++v) {
      if (B.inverted[v]) inv_t.push_back(origin.size());
      names_t.push_back(B.var_names[v] + "''");
      origin.emplace_back(1, v);
    }
    FreeMonomialMonoid T = FreeMonomialMonoid::make(origin.size(), inv_t, names_t);
    std::vector<ChartElem> m1, m2;
    for (std::size_t v = 0; v < A.num_vars; ++v) {
      if (elimA[v] < 0) {
        m1.emplace_back(Monomial::var(T.num_vars, a_pos[v]));
        continue;
      }
      // x = g(t_c)^{1/e} in the pushout; e in {1,-1} so 1/e = e.
      const Monomial& gb = std::get<Monomial>(psi.homs[0].map[elimA[v]]);
      Monomial img = Monomial::one(T.num_vars);
      for (std::size_t w = 0; w < B.num_vars; ++w) img.exps[b_off + w] = elimE[v] * gb.exps[w];
      m1.emplace_back(std::move(img));
    }
    for (std::size_t v = 0; v < B.num_vars; ++v)
      m2.emplace_back(Monomial::var(T.num_vars, b_off + v));
    R.chart_pairs.emplace_back(0, 0);
    R.tensors.emplace_back();
    R.var_origins.push_back(origin);
    charts.emplace_back(T);
    names.push_back(Y.chart_names[0] + "x" + Z.chart_names[0]);
    a1.push_back(0);
    a2.push_back(0);
    h1.push_back(ChartHom{Y.charts[0], T, std::move(m1)});
    h2.push_back(ChartHom{Z.charts[0], T, std::move(m2)});
  } else if (all_sym) {
    if (!chart_is_f1(phi.target.charts[0]))
      throw error("fiber_product: symbolic sources are supported over F1 only");
    for (std::size_t i = 0; i < Y.num_charts(); ++i)
      for (std::size_t j = 0; j < Z.num_charts(); ++j) {
        if (chart_is_finite(Y.charts[i]) || chart_is_finite(Z.charts[j]))
          throw error("fiber_product: mixed finite/symbolic chart pair");
        const FreeMonomialMonoid& A = sym(Y.charts[i]);
        const FreeMonomialMonoid& B = sym(Z.charts[j]);
        FreeMonomialMonoid T = symbolic_pair_monoid(A, B);
        R.chart_pairs.emplace_back((int)i, (int)j);
        R.tensors.emplace_back();
        std::vector<std::pair<int, std::size_t>> origin;
        for (std::size_t v = 0; v < A.num_vars; ++v) origin.emplace_back(0, v);
        for (std::size_t v = 0; v < B.num_vars; ++v) origin.emplace_back(1, v);
        R.var_origins.push_back(std::move(origin));
        charts.emplace_back(T);
        names.push_back(Y.chart_names[i] + "x" + Z.chart_names[j]);
        a1.push_back((int)i);
        a2.push_back((int)j);
        std::vector<ChartElem> m1, m2;
        for (std::size_t v = 0; v < A.num_vars; ++v)
          m1.emplace_back(Monomial::var(T.num_vars, v));
        for (std::size_t v = 0; v < B.num_vars; ++v)
          m2.emplace_back(Monomial::var(T.num_vars, A.num_vars + v));
        h1.push_back(ChartHom{Y.charts[i], T, std::move(m1)});
        h2.push_back(ChartHom{Z.charts[j], T, std::move(m2)});
      }
    // Overlaps between chart pairs, built from the source overlaps.
    for (std::size_t i = 0; i < Y.num_charts(); ++i)
      for (std::size_t j = 0; j < Z.num_charts(); ++j)
        for (std::size_t i2 = 0; i2 < Y.num_charts(); ++i2)
          for (std::size_t j2 = 0; j2 < Z.num_charts(); ++j2) {
            if (i == i2 && j == j2) continue;
            const Overlap* oy = i == i2 ? nullptr : Y.overlap((int)i, (int)i2);
            const Overlap* oz = j == j2 ? nullptr : Z.overlap((int)j, (int)j2);
            if ((i != i2 && !oy) || (j != j2 && !oz)) continue;
            const FreeMonomialMonoid& A = sym(Y.charts[i]);
            const FreeMonomialMonoid& B = sym(Z.charts[j]);
            const FreeMonomialMonoid& A2 = sym(Y.charts[i2]);
            const FreeMonomialMonoid& B2 = sym(Z.charts[j2]);
            const FreeMonomialMonoid& T = sym(charts[pair_index((int)i, (int)j)]);
            const FreeMonomialMonoid& T2 = sym(charts[pair_index((int)i2, (int)j2)]);
            Monomial sA = oy ? std::get<Monomial>(oy->s_src) : Monomial::one(A.num_vars);
            Monomial sB = oz ? std::get<Monomial>(oz->s_src) : Monomial::one(B.num_vars);
            Monomial s = sym(charts[pair_index((int)i, (int)j)])
                             .mul(embed_monomial(sA, T.num_vars, 0),
                                  embed_monomial(sB, T.num_vars, A.num_vars));
            Monomial sA2 = oy ? std::get<Monomial>(oy->s_tgt) : Monomial::one(A2.num_vars);
            Monomial sB2 = oz ? std::get<Monomial>(oz->s_tgt) : Monomial::one(B2.num_vars);
            Monomial s2 = T2.mul(embed_monomial(sA2, T2.num_vars, 0),
                                 embed_monomial(sB2, T2.num_vars, A2.num_vars));
            FreeMonomialMonoid locT = T.localize_at(s);
            FreeMonomialMonoid locT2 = T2.localize_at(s2);
            std::vector<ChartElem> map;
            for (std::size_t v = 0; v < A.num_vars; ++v) {
              Monomial img = oy ? std::get<Monomial>(oy->iso.map[v]) : Monomial::var(A.num_vars, v);
              map.emplace_back(embed_monomial(img, T2.num_vars, 0));
            }
            for (std::size_t v = 0; v < B.num_vars; ++v) {
              Monomial img = oz ? std::get<Monomial>(oz->iso.map[v]) : Monomial::var(B.num_vars, v);
              map.emplace_back(embed_monomial(img, T2.num_vars, A2.num_vars));
            }
            overlaps[{pair_index((int)i, (int)j), pair_index((int)i2, (int)j2)}] =
                Overlap{s, s2, ChartHom{locT, locT2, std::move(map)}};
          }
  } else {
    throw error("fiber_product: unsupported chart tier combination");
  }
  R.product = MonoidScheme::glue(std::move(charts), std::move(names), std::move(overlaps));
  R.proj1 = SchemeMorphism::make(R.product, Y, std::move(a1), std::move(h1));
  R.proj2 = SchemeMorphism::make(R.product, Z, std::move(a2), std::move(h2));
  return R;
}

DiagonalResult diagonal(const SchemeMorphism& phi) {
  DiagonalResult D{fiber_product(phi, phi), SchemeMorphism{}};
  const MonoidScheme& Y = phi.source;
  std::vector<int> assign;
  std::vector<ChartHom> homs;
  for (std::size_t i = 0; i < Y.num_charts(); ++i) {
    int pi = -1;
    for (std::size_t k = 0; k < D.square.chart_pairs.size(); ++k)
      if (D.square.chart_pairs[k] == std::make_pair((int)i, (int)i)) pi = (int)k;
    assign.push_back(pi);
    const ChartMonoid& T = D.square.product.charts[pi];
    if (chart_is_finite(T)) {
      const TensorResult& tr = D.square.tensors[pi];
      const FiniteMonoid& U = fin(Y.charts[i]);
      std::vector<int> fold;
      for (auto [a, b] : tr.reps) fold.push_back(U.mul(a, b));
      homs.push_back(ChartHom::from_finite(MonoidHom{tr.monoid, U, std::move(fold)}));
    } else {
      const FreeMonomialMonoid& U = sym(Y.charts[i]);
      const auto& origin = D.square.var_origins[pi];
      std::vector<ChartElem> fold;
      for (const auto& [side, v] : origin) {
        (void)side;  // both sides are U here
        fold.emplace_back(Monomial::var(U.num_vars, v));
      }
      homs.push_back(ChartHom{T, Y.charts[i], std::move(fold)});
    }
  }
  D.delta = SchemeMorphism::make(Y, D.square.product, std::move(assign), std::move(homs));
  return D;
}

bool is_affine_morphism(const SchemeMorphism& phi) {
  SchemePoints srcP = scheme_points(phi.source);
  SchemePoints tgtP = scheme_points(phi.target);
  SpaceMap pm = morphism_point_map(phi, srcP, tgtP);
  for (std::size_t x = 0; x < tgtP.space.size(); ++x) {
    std::vector<char> W = tgtP.space.minimal_open_of(x);
    std::vector<char> pre(srcP.space.size(), 0);
    for (std::size_t y = 0; y < srcP.space.size(); ++y)
      if (W[pm.image[y]]) pre[y] = 1;
    // Affine iff empty, or a unique closed point whose minimal open is the set.
    std::vector<std::size_t> maxpts;
    for (std::size_t y = 0; y < srcP.space.size(); ++y) {
      if (!pre[y]) continue;
      bool maximal = true;
      for (std::size_t z = 0; z < srcP.space.size(); ++z)
        if (z != y && pre[z] && srcP.space.spec[y][z]) maximal = false;
      if (maximal) maxpts.push_back(y);
    }
    if (maxpts.empty()) continue;
    if (maxpts.size() > 1) return false;
    if (srcP.space.minimal_open_of(maxpts[0]) != pre) return false;
  }
  return true;
}

bool is_quasi_compact(const SchemeMorphism& phi) {
  // Finitely many charts, each affine: preimages of affine opens are finite
  // unions of affine opens.
  (void)phi;
  return true;
}

bool is_quasi_separated(const SchemeMorphism& phi) {
  // The diagonal of a finitely-charted morphism is again finitely charted.
  (void)phi;
  return true;
}

bool is_finite_type_morphism(const SchemeMorphism& phi) {
  // Finite monoids are generated by all their elements; free monomial monoids
  // by their finitely many variables. Both tiers are of finite type.
  (void)phi;
  return true;
}

MonoidHom localize_hom_through(const FiniteMonoid& A, const MonoidHom& iota,
                               const FiniteMonoid& L, const MonoidHom& u) {
  const FiniteMonoid& D = u.target;
  std::vector<int> map(L.size, -1);
  for (int x = 0; x < L.size; ++x) {
    for (int s = 0; s < A.size && map[x] < 0; ++s) {
      if (!D.is_unit(u.map[s])) continue;
      for (int a = 0; a < A.size && map[x] < 0; ++a)
        if (L.mul(iota.map[s], x) == iota.map[a]) {
          int inv = -1;
          for (int b = 0; b < D.size; ++b)
            if (D.mul(u.map[s], b) == D.one) inv = b;
          map[x] = D.mul(u.map[a], inv);
        }
    }
    if (map[x] < 0) throw error("localize_hom_through: element has no usable fraction");
  }
  MonoidHom h{L, D, std::move(map)};
  h.validate();
  return h;
}

StalkModel scheme_stalk(const MonoidScheme& X, const SchemePoints& P, std::size_t x) {
  if (!X.all_finite()) throw error("scheme_stalk: finite tier only");
  int chart = -1;
  for (std::size_t c = 0; c < X.num_charts(); ++c)
    if (P.global_to_local[x][c] >= 0) {
      chart = (int)c;
      break;
    }
  if (chart < 0) throw error("scheme_stalk: point in no chart");
  const FiniteMonoid& A = fin(X.charts[chart]);
  const Ideal& prime = P.chart_specs[chart].fin_primes[P.global_to_local[x][chart]];
  LocalizationResult loc = localize_at_prime(A, prime);
  return StalkModel{loc.monoid, chart, loc.map};
}

MonoidHom stalk_map_from_chart(const MonoidScheme& X, const SchemePoints& P,
                               const StalkModel& st, std::size_t x, int chart) {
  if (P.global_to_local[x][chart] < 0) throw error("stalk_map_from_chart: point not in chart");
  if (st.chart == chart) return st.from_chart;
  const Overlap* o = X.overlap(chart, st.chart);
  if (!o) throw error("stalk_map_from_chart: no overlap for stalk transport");
  ChartLocalization lc = chart_localize(X.charts[chart], o->s_src);
  MonoidHom iota_c = chart_to_finite_hom(lc.map);
  MonoidHom g = chart_to_finite_hom(o->iso);
  ChartLocalization lt = chart_localize(X.charts[st.chart], o->s_tgt);
  MonoidHom iota_t = chart_to_finite_hom(lt.map);
  // loc_t -> stalk: s_tgt is invertible in the stalk since x lies in the overlap.
  MonoidHom m2 = localize_hom_through(std::get<FiniteMonoid>(X.charts[st.chart]), iota_t,
                                      std::get<FiniteMonoid>(lt.monoid), st.from_chart);
  return compose(m2, compose(g, iota_c));
}

MonoidHom stalk_restriction(const MonoidScheme& X, const SchemePoints& P, const StalkModel& sx,
                            std::size_t x, const StalkModel& sy, std::size_t y) {
  (void)x;
  MonoidHom to_y = stalk_map_from_chart(X, P, sy, y, sx.chart);
  return localize_hom_through(std::get<FiniteMonoid>(X.charts[sx.chart]), sx.from_chart,
                              sx.monoid, to_y);
}

SectionsResult sections_over(const MonoidScheme& X, const SchemePoints& P,
                             const std::vector<char>& W) {
  if (!X.all_finite()) throw error("sections_over: finite tier only");
  SectionsResult R;
  for (std::size_t i = 0; i < W.size(); ++i)
    if (W[i]) R.points.push_back(i);
  std::vector<StalkModel> stalks;
  for (auto x : R.points) stalks.push_back(scheme_stalk(X, P, x));
  for (const auto& s : stalks) R.stalks.push_back(s.monoid);
  // Restriction maps stalk_x -> stalk_y for y in minopen(x), within W.
  std::map<std::pair<std::size_t, std::size_t>, MonoidHom> res;
  for (std::size_t xi = 0; xi < R.points.size(); ++xi)
    for (std::size_t yi = 0; yi < R.points.size(); ++yi) {
      std::size_t x = R.points[xi], y = R.points[yi];
      if (x == y || !P.space.spec[y][x]) continue;  // need y in minopen(x)
      res.emplace(std::make_pair(xi, yi), stalk_restriction(X, P, stalks[xi], x, stalks[yi], y));
    }
  // Maximal points of W.
  std::vector<std::size_t> maxpos;
  for (std::size_t xi = 0; xi < R.points.size(); ++xi) {
    bool maximal = true;
    for (std::size_t yi = 0; yi < R.points.size(); ++yi)
      if (yi != xi && P.space.spec[R.points[xi]][R.points[yi]]) maximal = false;
    if (maximal) maxpos.push_back(xi);
  }
  // Enumerate compatible tuples over the maximal points; derive the rest.
  std::vector<std::vector<int>> tuples;  // full evaluation vectors
  std::vector<int> choice(maxpos.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == maxpos.size()) {
      std::vector<int> eval(R.points.size(), -1);
      for (std::size_t t = 0; t < maxpos.size(); ++t) eval[maxpos[t]] = choice[t];
      for (std::size_t yi = 0; yi < R.points.size(); ++yi) {
        if (eval[yi] >= 0) continue;
        int val = -1;
        for (std::size_t t = 0; t < maxpos.size(); ++t) {
          auto it = res.find({maxpos[t], yi});
          if (it == res.end()) continue;
          int v = it->second.map[choice[t]];
          if (val < 0) val = v;
          else if (val != v) return;  // incompatible
        }
        if (val < 0) throw error("sections_over: point below no maximal point");
        eval[yi] = val;
      }
      // Also check compatibility between maximal points sharing generizations.
      for (std::size_t t = 0; t < maxpos.size(); ++t)
        for (std::size_t yi = 0; yi < R.points.size(); ++yi) {
          auto it = res.find({maxpos[t], yi});
          if (it != res.end() && it->second.map[choice[t]] != eval[yi]) return;
        }
      tuples.push_back(std::move(eval));
      return;
    }
    for (int v = 0; v < R.stalks[maxpos[k]].size; ++v) {
      choice[k] = v;
      rec(k + 1);
    }
  };
  if (R.points.empty()) {
    // Gamma(empty) = the degenerate monoid.
    R.monoid = FiniteMonoid::degenerate_point();
    return R;
  }
  rec(0);
  // Build the section monoid: componentwise product of stalk values.
  int n = (int)tuples.size();
  FiniteMonoid G;
  G.size = n;
  G.table.resize(n * n);
  G.labels.resize(n);
  auto find_tuple = [&](const std::vector<int>& t) {
    for (int k = 0; k < n; ++k)
      if (tuples[k] == t) return k;
    throw error("sections_over: product of sections escaped");
  };
  std::vector<int> zero_t, one_t;
  for (std::size_t p = 0; p < R.points.size(); ++p) {
    zero_t.push_back(R.stalks[p].zero);
    one_t.push_back(R.stalks[p].one);
  }
  G.zero = find_tuple(zero_t);
  G.one = find_tuple(one_t);
  for (int a = 0; a < n; ++a) {
    std::string lab = "(";
    for (std::size_t p = 0; p < R.points.size(); ++p)
      lab += (p ? "," : "") + R.stalks[p].labels[tuples[a][p]];
    G.labels[a] = lab + ")";
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(R.points.size());
      for (std::size_t p = 0; p < R.points.size(); ++p)
        prod[p] = R.stalks[p].mul(tuples[a][p], tuples[b][p]);
      G.table[a * n + b] = find_tuple(prod);
    }
  }
  G.validate(n == 1);
  R.monoid = std::move(G);
  R.eval = std::move(tuples);
  return R;
}

}  // namespace f1cong
