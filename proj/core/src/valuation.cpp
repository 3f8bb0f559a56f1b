#include "f1cong/valuation.hpp"

#include <algorithm>
#include <functional>

namespace f1cong {

namespace {
const FiniteMonoid& fin(const ChartMonoid& M) { return std::get<FiniteMonoid>(M); }
const FreeMonomialMonoid& sym(const ChartMonoid& M) { return std::get<FreeMonomialMonoid>(M); }
}  // namespace

bool lex_geq_zero(const ivec& w) {
  for (long long x : w) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return true;
}

ValuationData ValuationData::make(std::size_t group_rank, std::size_t value_rank, imat v) {
  if (v.size() != value_rank) throw error("valuation data: wrong number of matrix rows");
  for (const auto& row : v)
    if (row.size() != group_rank) throw error("valuation data: wrong matrix row length");
  return ValuationData{group_rank, value_rank, std::move(v)};
}

FreeMonomialMonoid ValuationData::group() const { return FreeMonomialMonoid::group(group_rank); }

bool ValuationData::in_Av(const Monomial& m) const {
  if (m.zero) return true;
  ivec w(value_rank, 0);
  for (std::size_t i = 0; i < value_rank; ++i)
    for (std::size_t j = 0; j < group_rank; ++j) w[i] += v[i][j] * m.exps[j];
  return lex_geq_zero(w);
}

bool ValuationData::unit_in_Av(const Monomial& m) const {
  if (m.zero) return false;
  for (std::size_t i = 0; i < value_rank; ++i) {
    long long w = 0;
    for (std::size_t j = 0; j < group_rank; ++j) w += v[i][j] * m.exps[j];
    if (w != 0) return false;
  }
  return true;
}

bool is_valuation_monoid(const FiniteMonoid& A) {
  if (!A.is_integral()) throw error("is_valuation_monoid: monoid is not integral");
  LocalizationResult F = frac(A);
  for (int x = 0; x < F.monoid.size; ++x) {
    if (x == F.monoid.zero) continue;
    bool in_img = false, inv_in_img = false;
    for (int a = 0; a < A.size; ++a) {
      if (F.map.map[a] == x) in_img = true;
      if (F.monoid.mul(F.map.map[a], x) == F.monoid.one) inv_in_img = true;
    }
    if (!in_img && !inv_in_img) return false;
  }
  return true;
}

bool valuation_data_spot_check(const ValuationData& val, int radius) {
  std::size_t r = val.group_rank;
  ivec e(r, -radius);
  while (true) {
    Monomial m{false, e};
    Monomial minv{false, e};
    for (auto& x : minv.exps) x = -x;
    bool nonzero = std::any_of(e.begin(), e.end(), [](long long x) { return x != 0; });
    if (nonzero) {
      // alpha or alpha^{-1} lies in A_v; both exactly when alpha is a unit.
      if (!val.in_Av(m) && !val.in_Av(minv)) return false;
      bool both = val.in_Av(m) && val.in_Av(minv);
      if (both != val.unit_in_Av(m)) return false;
    }
    std::size_t i = 0;
    while (i < r && e[i] == radius) e[i++] = -radius;
    if (i == r) break;
    ++e[i];
  }
  return true;
}

bool is_integral_extension(const MonoidHom& f) {
  if (!f.is_injective()) return false;
  for (int b = 0; b < f.target.size; ++b) {
    bool has_power = false;
    for (int n = 1; n <= f.target.size + 1 && !has_power; ++n) {
      int p = f.target.power(b, n);
      for (int a = 0; a < f.source.size; ++a)
        if (f.map[a] == p) has_power = true;
    }
    if (!has_power) return false;
  }
  return true;
}

bool is_maximal_for_domination(const FiniteMonoid& A) {
  if (!A.is_integral()) throw error("is_maximal_for_domination: monoid is not integral");
  LocalizationResult F = frac(A);
  const FiniteMonoid& K = F.monoid;
  std::vector<int> img;
  for (int a = 0; a < A.size; ++a) img.push_back(F.map.map[a]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  // Submonoids of Frac(A) containing the image, as subsets closed under
  // multiplication; A is maximal iff none of them except the image itself is
  // dominated by it.
  std::vector<int> rest;
  for (int x = 0; x < K.size; ++x)
    if (!std::binary_search(img.begin(), img.end(), x)) rest.push_back(x);
  auto units_of = [&](const std::vector<int>& B) {
    std::vector<char> in(K.size, 0), unit(K.size, 0);
    for (int x : B) in[x] = 1;
    for (int x : B)
      for (int y : B)
        if (K.mul(x, y) == K.one) unit[x] = 1;
    return unit;
  };
  std::vector<char> unitA = units_of(img);
  for (std::size_t mask = 1; mask < (std::size_t(1) << rest.size()); ++mask) {
    std::vector<int> B = img;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1) B.push_back(rest[i]);
    std::sort(B.begin(), B.end());
    bool closed = true;
    for (int x : B)
      for (int y : B)
        if (!std::binary_search(B.begin(), B.end(), K.mul(x, y))) closed = false;
    if (!closed) continue;
    // Domination of the inclusion image(A) -> B: units of B inside image(A)
    // are units of image(A).
    std::vector<char> unitB = units_of(B);
    bool dominated = true;
    for (int x : img)
      if (unitB[x] && !unitA[x]) dominated = false;
    if (dominated) return false;  // a proper dominating extension exists
  }
  return true;
}

bool dominates(const MonoidHom& f) {
  for (int a = 0; a < f.source.size; ++a)
    if (f.target.is_unit(f.map[a]) != f.source.is_unit(a)) {
      // f(A^x) subset B^x always holds; the failure direction is a nonunit
      // with a unit image.
      if (!f.source.is_unit(a) && f.target.is_unit(f.map[a])) return false;
    }
  return true;
}

bool valuation_inclusion_dominates(const ValuationData& val) {
  for (const auto& row : val.v)
    for (long long x : row)
      if (x != 0) return false;
  return true;
}

bool valuation_hom_dominates(const ValuationData& src, const ValuationData& tgt, const imat& M,
                             int radius) {
  // M : exponent map Z^{src rank} -> Z^{tgt rank}.
  if (M.size() != tgt.group_rank) throw error("valuation_hom_dominates: bad matrix shape");
  ivec e(src.group_rank, -radius);
  while (true) {
    bool nonzero = std::any_of(e.begin(), e.end(), [](long long x) { return x != 0; });
    if (nonzero) {
      Monomial m{false, e};
      if (src.in_Av(m) && !src.unit_in_Av(m)) {
        ivec img(tgt.group_rank, 0);
        for (std::size_t i = 0; i < tgt.group_rank; ++i)
          for (std::size_t j = 0; j < src.group_rank; ++j) img[i] += M[i][j] * e[j];
        Monomial mi{false, img};
        if (!tgt.in_Av(mi)) throw error("valuation_hom_dominates: map does not land in A_v");
        if (tgt.unit_in_Av(mi)) return false;
      }
    }
    std::size_t i = 0;
    while (i < src.group_rank && e[i] == radius) e[i++] = -radius;
    if (i == src.group_rank) break;
    ++e[i];
  }
  return true;
}

namespace {

// Whether the image of every generator under h (a hom into G) lies in A_v,
// with units of A_v for the inverted/unit generators.
bool hom_lands_in_Av(const ValuationData& val, const ChartHom& h) {
  if (chart_is_finite(h.source)) {
    for (const auto& x : h.map)
      if (!val.in_Av(std::get<Monomial>(x))) return false;
    return true;
  }
  const FreeMonomialMonoid& A = sym(h.source);
  for (std::size_t i = 0; i < A.num_vars; ++i) {
    const Monomial& m = std::get<Monomial>(h.map[i]);
    if (A.inverted[i]) {
      if (!val.unit_in_Av(m)) return false;
    } else if (!val.in_Av(m)) {
      return false;
    }
  }
  return true;
}

// Equality of the morphisms MSpec(T) -> X described by homs into G on charts
// c1 and c2; is_unit decides invertibility in Gamma(T).
bool morphisms_into_scheme_equal(const MonoidScheme& X, int c1, const ChartHom& h1, int c2,
                                 const ChartHom& h2,
                                 const std::function<bool(const Monomial&)>& is_unit) {
  if (c1 == c2) return h1.map == h2.map;
  const Overlap* o = X.overlap(c1, c2);
  if (!o) return false;
  ChartElem hs1 = h1(o->s_src);
  ChartElem hs2 = h2(o->s_tgt);
  bool in1 = !std::get<Monomial>(hs1).zero && is_unit(std::get<Monomial>(hs1));
  bool in2 = !std::get<Monomial>(hs2).zero && is_unit(std::get<Monomial>(hs2));
  if (in1 != in2) return false;
  if (!in1) return false;  // closed points land outside the overlap, in different charts
  ChartLocalization l1 = chart_localize(X.charts[c1], o->s_src);
  ChartLocalization l2 = chart_localize(X.charts[c2], o->s_tgt);
  auto e1 = chart_extend_to_localization(h1, l1, o->s_src);
  auto e2 = chart_extend_to_localization(h2, l2, o->s_tgt);
  if (!e1 || !e2) return false;
  return chart_hom_equal(chart_compose(*e2, o->iso), *e1);
}

// Transport eta from its chart to chart V of Y; nullopt when the eta point
// does not lie in V.
std::optional<ChartHom> transport_eta(const MonoidScheme& Y, int eta_chart, const ChartHom& eta,
                                      int V) {
  if (V == eta_chart) return eta;
  const Overlap* o = Y.overlap(V, eta_chart);
  if (!o) return std::nullopt;
  ChartElem img = eta(o->s_tgt);
  if (std::get<Monomial>(img).zero) return std::nullopt;  // eta point outside the overlap
  ChartLocalization le = chart_localize(Y.charts[eta_chart], o->s_tgt);
  auto ext = chart_extend_to_localization(eta, le, o->s_tgt);
  if (!ext) return std::nullopt;
  ChartLocalization lv = chart_localize(Y.charts[V], o->s_src);
  return chart_compose(chart_compose(*ext, o->iso), lv.map);
}

}  // namespace

std::optional<TestDiagram> make_test_diagram(const ValuationData& val, const SchemeMorphism& phi,
                                             int eta_chart, ChartHom eta) {
  TestDiagram d{val, phi, eta_chart, std::move(eta), 0, ChartHom{}};
  if (!chart_monoid_equal(d.eta.source, phi.source.charts[eta_chart]))
    throw error("make_test_diagram: eta source mismatch");
  d.eta.validate();
  int c = phi.assign[eta_chart];
  d.nu_chart = c;
  d.nu = chart_compose(d.eta, phi.homs[eta_chart]);
  if (!hom_lands_in_Av(val, d.nu)) return std::nullopt;
  return d;
}

std::vector<Lift> solve_lifts(const TestDiagram& d) {
  const MonoidScheme& Y = d.phi.source;
  const MonoidScheme& X = d.phi.target;
  auto av_unit = [&](const Monomial& m) { return d.val.unit_in_Av(m); };
  std::vector<Lift> lifts;
  for (std::size_t V = 0; V < Y.num_charts(); ++V) {
    auto cand = transport_eta(Y, d.eta_chart, d.eta, (int)V);
    if (!cand) continue;
    if (!hom_lands_in_Av(d.val, *cand)) continue;
    // Lower triangle: phi . lift = nu as morphisms MSpec(A_v) -> X.
    ChartHom comp = chart_compose(*cand, d.phi.homs[V]);
    if (!morphisms_into_scheme_equal(X, d.phi.assign[V], comp, d.nu_chart, d.nu, av_unit))
      continue;
    bool dup = false;
    for (const auto& l : lifts)
      if (morphisms_into_scheme_equal(Y, l.chart, l.hom, (int)V, *cand, av_unit)) dup = true;
    if (!dup) lifts.push_back(Lift{(int)V, *cand});
  }
  return lifts;
}

namespace {

void emit_eta_candidates(const MonoidScheme& Y, std::size_t chart, const ValuationData& val,
                         const FamilyOptions& opts,
                         const std::function<void(ChartHom)>& sink) {
  FreeMonomialMonoid G = val.group();
  if (chart_is_finite(Y.charts[chart])) {
    const FiniteMonoid& A = fin(Y.charts[chart]);
    for (const MonoidHom& f : enumerate_homs_to_F1(A)) {
      std::vector<ChartElem> map;
      for (int a = 0; a < A.size; ++a)
        map.emplace_back(f.map[a] == f.target.zero ? Monomial::make_zero()
                                                   : Monomial::one(G.num_vars));
      sink(ChartHom{Y.charts[chart], G, std::move(map)});
    }
    return;
  }
  const FreeMonomialMonoid& A = sym(Y.charts[chart]);
  long long R = opts.exponent_radius;
  // Each variable: 0 or a monomial with exponents in [-R, R]^r.
  std::size_t r = val.group_rank;
  std::vector<Monomial> images;
  {
    images.push_back(Monomial::make_zero());
    ivec e(r, -R);
    while (true) {
      images.push_back(Monomial{false, e});
      std::size_t i = 0;
      while (i < r && e[i] == R) e[i++] = -R;
      if (i == r) break;
      ++e[i];
    }
  }
  std::vector<std::size_t> pick(A.num_vars, 0);
  while (true) {
    std::vector<ChartElem> map;
    bool ok = true;
    for (std::size_t v = 0; v < A.num_vars; ++v) {
      const Monomial& m = images[pick[v]];
      if (A.inverted[v] && m.zero) ok = false;
      map.emplace_back(m);
    }
    if (ok) sink(ChartHom{Y.charts[chart], G, std::move(map)});
    std::size_t i = 0;
    while (i < A.num_vars && pick[i] == images.size() - 1) pick[i++] = 0;
    if (i == A.num_vars) break;
    ++pick[i];
  }
}

}  // namespace

std::vector<TestDiagram> generate_test_diagrams(const SchemeMorphism& phi,
                                                const FamilyOptions& opts) {
  std::vector<TestDiagram> out;
  for (std::size_t r = 1; r <= opts.max_group_rank; ++r) {
    for (std::size_t k = 1; k <= opts.max_value_rank; ++k) {
      // All k x r matrices with entries in [-b, b] and no zero row.
      std::size_t cells = k * r;
      long long b = opts.matrix_entry_bound;
      long long base = 2 * b + 1;
      std::size_t total = 1;
      for (std::size_t i = 0; i < cells; ++i) total *= (std::size_t)base;
      for (std::size_t code = 0; code < total; ++code) {
        imat v(k, ivec(r, 0));
        std::size_t c = code;
        bool zero_row = false;
        for (std::size_t i = 0; i < k; ++i) {
          bool all0 = true;
          for (std::size_t j = 0; j < r; ++j) {
            v[i][j] = (long long)(c % base) - b;
            c /= base;
            if (v[i][j] != 0) all0 = false;
          }
          if (all0) zero_row = true;
        }
        if (zero_row) continue;
        ValuationData val = ValuationData::make(r, k, v);
        for (std::size_t chart = 0; chart < phi.source.num_charts(); ++chart) {
          emit_eta_candidates(phi.source, chart, val, opts, [&](ChartHom eta) {
            if (out.size() >= opts.max_diagrams) return;
            auto d = make_test_diagram(val, phi, (int)chart, std::move(eta));
            if (d) out.push_back(std::move(*d));
          });
          if (out.size() >= opts.max_diagrams) return out;
        }
      }
    }
  }
  return out;
}

namespace {

ValuativeReport run_family(const SchemeMorphism& phi, const std::vector<TestDiagram>& extra,
                           const FamilyOptions& opts,
                           const std::function<bool(std::size_t)>& bad_count) {
  ValuativeReport R;
  std::vector<TestDiagram> family = extra;
  for (auto& d : generate_test_diagrams(phi, opts)) family.push_back(std::move(d));
  for (const auto& d : family) {
    ++R.diagrams_checked;
    std::vector<Lift> lifts = solve_lifts(d);
    if (bad_count(lifts.size())) {
      R.counterexample_found = true;
      R.witness = d;
      R.witness_lift_count = lifts.size();
      return R;
    }
  }
  return R;
}

}  // namespace

ValuativeReport check_universally_closed(const SchemeMorphism& phi,
                                         const std::vector<TestDiagram>& extra,
                                         const FamilyOptions& opts) {
  ValuativeReport R;
  if (!is_quasi_compact(phi)) {
    R.prerequisites_ok = false;
    R.prerequisite_note = "morphism is not quasi-compact";
    return R;
  }
  return run_family(phi, extra, opts, [](std::size_t n) { return n == 0; });
}

ValuativeReport check_separated_valuative(const SchemeMorphism& phi,
                                          const std::vector<TestDiagram>& extra,
                                          const FamilyOptions& opts) {
  ValuativeReport R;
  if (!is_quasi_separated(phi)) {
    R.prerequisites_ok = false;
    R.prerequisite_note = "morphism is not quasi-separated";
    return R;
  }
  return run_family(phi, extra, opts, [](std::size_t n) { return n >= 2; });
}

ValuativeReport check_proper(const SchemeMorphism& phi, const std::vector<TestDiagram>& extra,
                             const FamilyOptions& opts) {
  ValuativeReport R;
  if (!is_finite_type_morphism(phi)) {
    R.prerequisites_ok = false;
    R.prerequisite_note = "morphism is not of finite type";
    return R;
  }
  return run_family(phi, extra, opts, [](std::size_t n) { return n != 1; });
}

}  // namespace f1cong
