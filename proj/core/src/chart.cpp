#include "f1cong/chart.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace f1cong {

namespace {
const FiniteMonoid& fin(const ChartMonoid& M) { return std::get<FiniteMonoid>(M); }
const FreeMonomialMonoid& sym(const ChartMonoid& M) { return std::get<FreeMonomialMonoid>(M); }
}  // namespace

bool chart_is_finite(const ChartMonoid& M) { return std::holds_alternative<FiniteMonoid>(M); }

bool chart_is_degenerate(const ChartMonoid& M) {
  return chart_is_finite(M) && fin(M).degenerate();
}

ChartElem chart_zero(const ChartMonoid& M) {
  if (chart_is_finite(M)) return fin(M).zero;
  return Monomial::make_zero();
}

ChartElem chart_one(const ChartMonoid& M) {
  if (chart_is_finite(M)) return fin(M).one;
  return Monomial::one(sym(M).num_vars);
}

ChartElem chart_mul(const ChartMonoid& M, const ChartElem& a, const ChartElem& b) {
  if (chart_is_finite(M)) return fin(M).mul(std::get<int>(a), std::get<int>(b));
  return sym(M).mul(std::get<Monomial>(a), std::get<Monomial>(b));
}

bool chart_elem_is_zero(const ChartMonoid& M, const ChartElem& a) {
  if (chart_is_finite(M)) return std::get<int>(a) == fin(M).zero;
  return std::get<Monomial>(a).zero;
}

bool chart_is_unit(const ChartMonoid& M, const ChartElem& a) {
  if (chart_is_finite(M)) return fin(M).is_unit(std::get<int>(a));
  return sym(M).is_unit(std::get<Monomial>(a));
}

ChartElem chart_unit_inverse(const ChartMonoid& M, const ChartElem& a) {
  if (chart_is_finite(M)) {
    const FiniteMonoid& A = fin(M);
    int x = std::get<int>(a);
    for (int b = 0; b < A.size; ++b)
      if (A.mul(x, b) == A.one) return b;
    throw error("chart_unit_inverse: not a unit");
  }
  const Monomial& m = std::get<Monomial>(a);
  if (!sym(M).is_unit(m)) throw error("chart_unit_inverse: not a unit");
  return sym(M).pow(m, -1);
}

std::string chart_show(const ChartMonoid& M, const ChartElem& a) {
  if (chart_is_finite(M)) return fin(M).labels[std::get<int>(a)];
  return sym(M).show(std::get<Monomial>(a));
}

bool chart_monoid_equal(const ChartMonoid& A, const ChartMonoid& B) {
  if (chart_is_finite(A) != chart_is_finite(B)) return false;
  if (chart_is_finite(A)) return fin(A) == fin(B);
  return sym(A) == sym(B);
}

std::vector<ChartElem> chart_generators(const ChartMonoid& M) {
  std::vector<ChartElem> out;
  if (chart_is_finite(M)) {
    for (int a = 0; a < fin(M).size; ++a) out.emplace_back(a);
    return out;
  }
  const FreeMonomialMonoid& A = sym(M);
  for (std::size_t i = 0; i < A.num_vars; ++i) {
    out.emplace_back(Monomial::var(A.num_vars, i));
    if (A.inverted[i]) out.emplace_back(Monomial::var(A.num_vars, i, -1));
  }
  return out;
}

ChartHom ChartHom::make(ChartMonoid source, ChartMonoid target, std::vector<ChartElem> map) {
  ChartHom h{std::move(source), std::move(target), std::move(map)};
  h.validate();
  return h;
}

ChartHom ChartHom::identity(const ChartMonoid& M) {
  std::vector<ChartElem> map;
  if (chart_is_finite(M)) {
    for (int a = 0; a < fin(M).size; ++a) map.emplace_back(a);
  } else {
    for (std::size_t i = 0; i < sym(M).num_vars; ++i)
      map.emplace_back(Monomial::var(sym(M).num_vars, i));
  }
  return ChartHom{M, M, std::move(map)};
}

ChartHom ChartHom::from_finite(const MonoidHom& f) {
  std::vector<ChartElem> map;
  for (int x : f.map) map.emplace_back(x);
  return ChartHom{f.source, f.target, std::move(map)};
}

ChartElem ChartHom::operator()(const ChartElem& a) const {
  if (chart_is_finite(source)) return map[std::get<int>(a)];
  const Monomial& m = std::get<Monomial>(a);
  if (m.zero) return chart_zero(target);
  ChartElem out = chart_one(target);
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    long long e = m.exps[i];
    if (e == 0) continue;
    ChartElem base = map[i];
    if (e < 0) {
      base = chart_unit_inverse(target, base);
      e = -e;
    }
    for (long long k = 0; k < e; ++k) out = chart_mul(target, out, base);
  }
  return out;
}

void ChartHom::validate() const {
  if (chart_is_finite(source)) {
    const FiniteMonoid& A = fin(source);
    if ((int)map.size() != A.size) throw error("chart hom: wrong map size");
    auto eq = [&](const ChartElem& a, const ChartElem& b) {
      if (chart_is_finite(target)) return std::get<int>(a) == std::get<int>(b);
      return std::get<Monomial>(a) == std::get<Monomial>(b);
    };
    if (!eq(map[A.zero], chart_zero(target))) throw error("chart hom: 0 not preserved");
    if (!eq(map[A.one], chart_one(target))) throw error("chart hom: 1 not preserved");
    for (int a = 0; a < A.size; ++a)
      for (int b = 0; b < A.size; ++b)
        if (!eq(map[A.mul(a, b)], chart_mul(target, map[a], map[b])))
          throw error("chart hom: not multiplicative");
  } else {
    const FreeMonomialMonoid& A = sym(source);
    if (map.size() != A.num_vars) throw error("chart hom: wrong variable count");
    for (std::size_t i = 0; i < A.num_vars; ++i) {
      if (chart_is_finite(target)) {
        int x = std::get<int>(map[i]);
        if (A.inverted[i] && !fin(target).is_unit(x))
          throw error("chart hom: inverted variable must map to a unit");
      } else {
        const Monomial& m = std::get<Monomial>(map[i]);
        if (!sym(target).valid_element(m)) throw error("chart hom: image not in target");
        if (A.inverted[i] && !m.zero && !sym(target).is_unit(m))
          throw error("chart hom: inverted variable must map to a unit");
        if (A.inverted[i] && m.zero)
          throw error("chart hom: inverted variable cannot map to 0");
      }
    }
  }
}

ChartHom chart_compose(const ChartHom& g, const ChartHom& f) {
  if (!chart_monoid_equal(f.target, g.source)) throw error("chart_compose: mismatch");
  std::vector<ChartElem> map;
  for (const auto& x : f.map) map.push_back(g(x));
  return ChartHom{f.source, g.target, std::move(map)};
}

bool chart_hom_equal(const ChartHom& f, const ChartHom& g) {
  if (!chart_monoid_equal(f.source, g.source) || !chart_monoid_equal(f.target, g.target))
    return false;
  return f.map == g.map;
}

namespace {

// Inverse of an integer matrix with det +-1, via adjugate; nullopt otherwise.
std::optional<imat> unimodular_inverse(const imat& E, std::size_t n) {
  std::function<long long(const imat&, std::vector<std::size_t>, std::vector<std::size_t>)> det =
      [&](const imat& M, std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> long long {
    if (rows.empty()) return 1;
    long long out = 0, sign = 1;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::vector<std::size_t> r2(rows.begin() + 1, rows.end());
      std::vector<std::size_t> c2 = cols;
      c2.erase(c2.begin() + k);
      out += sign * M[rows[0]][cols[k]] * det(M, r2, c2);
      sign = -sign;
    }
    return out;
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  long long d = det(E, all, all);
  if (d != 1 && d != -1) return std::nullopt;
  imat inv(n, ivec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> r2, c2;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) r2.push_back(k);
        if (k != i) c2.push_back(k);
      }
      long long sign = ((i + j) % 2 == 0) ? 1 : -1;
      inv[i][j] = sign * det(E, r2, c2) / d;
    }
  return inv;
}

}  // namespace

std::optional<ChartHom> chart_hom_inverse(const ChartHom& f) {
  if (chart_is_finite(f.source) && chart_is_finite(f.target)) {
    const FiniteMonoid& A = fin(f.source);
    const FiniteMonoid& B = fin(f.target);
    if (A.size != B.size) return std::nullopt;
    std::vector<ChartElem> inv(B.size, ChartElem{0});
    std::vector<char> hit(B.size, 0);
    for (int a = 0; a < A.size; ++a) {
      int b = std::get<int>(f.map[a]);
      if (hit[b]) return std::nullopt;
      hit[b] = 1;
      inv[b] = a;
    }
    ChartHom g{f.target, f.source, std::move(inv)};
    try {
      g.validate();
    } catch (const error&) {
      return std::nullopt;
    }
    return g;
  }
  if (!chart_is_finite(f.source) && !chart_is_finite(f.target)) {
    const FreeMonomialMonoid& A = sym(f.source);
    const FreeMonomialMonoid& B = sym(f.target);
    if (A.num_vars != B.num_vars) return std::nullopt;
    std::size_t n = A.num_vars;
    imat E(n, ivec(n, 0));  // E[j][i] = exponent of target var j in image of source var i
    for (std::size_t i = 0; i < n; ++i) {
      const Monomial& m = std::get<Monomial>(f.map[i]);
      if (m.zero) return std::nullopt;
      for (std::size_t j = 0; j < n; ++j) E[j][i] = m.exps[j];
    }
    auto inv = unimodular_inverse(E, n);
    if (!inv) return std::nullopt;
    std::vector<ChartElem> map;
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m = Monomial::one(n);
      for (std::size_t i = 0; i < n; ++i) m.exps[i] = (*inv)[i][j];
      map.emplace_back(std::move(m));
    }
    ChartHom g{f.target, f.source, std::move(map)};
    try {
      g.validate();
    } catch (const error&) {
      return std::nullopt;
    }
    // Sanity: two-sided inverse on generators.
    if (!chart_hom_equal(chart_compose(g, f), ChartHom::identity(f.source))) return std::nullopt;
    return g;
  }
  return std::nullopt;  // mixed-tier isomorphisms do not arise
}

bool chart_hom_injective(const ChartHom& f) {
  if (chart_is_finite(f.source)) {
    for (std::size_t a = 0; a < f.map.size(); ++a)
      for (std::size_t b = a + 1; b < f.map.size(); ++b)
        if (f.map[a] == f.map[b]) return false;
    return true;
  }
  const FreeMonomialMonoid& A = sym(f.source);
  if (A.num_vars == 0) return true;
  if (chart_is_finite(f.target)) return false;  // infinite source, finite target
  const FreeMonomialMonoid& B = sym(f.target);
  imat E(B.num_vars, ivec(A.num_vars, 0));
  for (std::size_t i = 0; i < A.num_vars; ++i) {
    const Monomial& m = std::get<Monomial>(f.map[i]);
    if (m.zero) return false;  // t_i and t_i^2 collide
    for (std::size_t j = 0; j < B.num_vars; ++j) E[j][i] = m.exps[j];
  }
  return integer_kernel(E, A.num_vars).empty();
}

ChartLocalization chart_localize(const ChartMonoid& M, const ChartElem& s) {
  if (chart_elem_is_zero(M, s)) throw error("chart_localize: cannot invert 0");
  if (chart_is_finite(M)) {
    LocalizationResult loc = localize_at_element(fin(M), std::get<int>(s));
    return {loc.monoid, ChartHom::from_finite(loc.map)};
  }
  const FreeMonomialMonoid& A = sym(M);
  FreeMonomialMonoid L = A.localize_at(std::get<Monomial>(s));
  std::vector<ChartElem> map;
  for (std::size_t i = 0; i < A.num_vars; ++i) map.emplace_back(Monomial::var(A.num_vars, i));
  return {L, ChartHom{M, L, std::move(map)}};
}

std::optional<ChartHom> chart_extend_to_localization(const ChartHom& h,
                                                     const ChartLocalization& loc,
                                                     const ChartElem& s) {
  ChartElem hs = h(s);
  if (chart_elem_is_zero(h.target, hs) || !chart_is_unit(h.target, hs)) return std::nullopt;
  if (chart_is_finite(h.source)) {
    // M[s^-1] elements are classes a/s^k; map via h(a) h(s)^{-k}.
    const FiniteMonoid& L = fin(loc.monoid);
    const FiniteMonoid& A = fin(h.source);
    ChartElem hsinv = chart_unit_inverse(h.target, hs);
    std::vector<ChartElem> map(L.size, chart_zero(h.target));
    std::vector<char> done(L.size, 0);
    for (int x = 0; x < L.size; ++x) {
      // Find (k, a) with iota(s)^k * x = iota(a).
      int sk = L.one;
      for (int k = 0; k <= L.size && !done[x]; ++k) {
        for (int a = 0; a < A.size && !done[x]; ++a) {
          if (L.mul(sk, x) == std::get<int>(loc.map.map[a])) {
            ChartElem img = h(ChartElem{a});
            for (int t = 0; t < k; ++t) img = chart_mul(h.target, img, hsinv);
            map[x] = img;
            done[x] = 1;
          }
        }
        sk = L.mul(sk, std::get<int>(loc.map.map[std::get<int>(s)]));
      }
      if (!done[x]) return std::nullopt;
    }
    ChartHom out{loc.monoid, h.target, std::move(map)};
    try {
      out.validate();
    } catch (const error&) {
      return std::nullopt;
    }
    return out;
  }
  // Symbolic source: same variables, so the same images work. The newly
  // inverted variables have unit images because h(s) is a unit.
  ChartHom out{loc.monoid, h.target, h.map};
  try {
    out.validate();
  } catch (const error&) {
    return std::nullopt;
  }
  return out;
}

namespace {

// Does target = sum_i e_i * cols[i] admit a solution with e_i >= 0 for
// non-inverted i? Search within radius; refute by rational infeasibility.
bool monomial_solvable(const imat& cols, const std::vector<bool>& inverted, const ivec& target,
                       int radius) {
  std::size_t k = cols.size();
  std::size_t dim = target.size();
  ivec acc(dim, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) return acc == target;
    long long lo = inverted[i] ? -radius : 0;
    for (long long e = lo; e <= radius; ++e) {
      for (std::size_t d = 0; d < dim; ++d) acc[d] += e * cols[i][d];
      if (rec(i + 1)) return true;
      for (std::size_t d = 0; d < dim; ++d) acc[d] -= e * cols[i][d];
    }
    return false;
  };
  if (rec(0)) return true;
  // Exact in the group case: integer solvability is lattice membership.
  bool all_inv = std::all_of(inverted.begin(), inverted.end(), [](bool b) { return b; });
  if (all_inv) {
    Lattice L = hnf(dim, cols);
    return lattice_member(target, L);
  }
  // Rational infeasibility certificate: sum e_i c_i = v (two inequalities per
  // coordinate) with e_i >= 0 for the non-inverted generators.
  std::vector<std::pair<ivec, long long>> cs;
  for (std::size_t d = 0; d < dim; ++d) {
    ivec row(k, 0);
    for (std::size_t i = 0; i < k; ++i) row[i] = cols[i][d];
    cs.emplace_back(row, -target[d]);
    for (auto& x : row) x = -x;
    cs.emplace_back(row, target[d]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (inverted[i]) continue;
    ivec row(k, 0);
    row[i] = 1;
    cs.emplace_back(row, 0);
  }
  if (!rational_feasible(cs, k)) return false;
  throw error("chart_hom_surjective: undecided at search radius " + std::to_string(radius));
}

}  // namespace

bool chart_hom_surjective(const ChartHom& h, int radius) {
  if (chart_is_finite(h.target)) {
    const FiniteMonoid& B = fin(h.target);
    // Image submonoid generated by the generator images.
    std::set<int> img{B.zero, B.one};
    std::vector<int> gens;
    for (const auto& g : chart_generators(h.source)) gens.push_back(std::get<int>(h(g)));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(img.begin(), img.end());
      for (int x : cur)
        for (int g : gens)
          if (img.insert(B.mul(x, g)).second) grew = true;
    }
    return (int)img.size() == B.size;
  }
  if (chart_is_finite(h.source)) {
    // Finite image set; surjective iff B's generators are all hit (so B finite-ish).
    for (const auto& g : chart_generators(h.target)) {
      bool hit = false;
      for (int a = 0; a < fin(h.source).size; ++a)
        if (std::get<Monomial>(h(ChartElem{a})) == std::get<Monomial>(g)) hit = true;
      if (!hit) return false;
    }
    return true;
  }
  const FreeMonomialMonoid& A = sym(h.source);
  imat cols;
  std::vector<bool> inv;
  for (std::size_t i = 0; i < A.num_vars; ++i) {
    const Monomial& m = std::get<Monomial>(h.map[i]);
    if (m.zero) continue;  // contributes only 0
    cols.push_back(m.exps);
    inv.push_back(A.inverted[i]);
  }
  for (const auto& g : chart_generators(h.target)) {
    const Monomial& t = std::get<Monomial>(g);
    if (!monomial_solvable(cols, inv, t.exps, radius)) return false;
  }
  return true;
}

ChartMSpec chart_mspec(const ChartMonoid& M) {
  ChartMSpec R;
  if (chart_is_finite(M)) {
    MSpecResult X = mspec(fin(M));
    R.space = X.space;
    R.fin_primes = X.primes;
    R.symbolic = false;
  } else {
    SymbolicMSpecResult X = symbolic_mspec(sym(M));
    R.space = X.space;
    R.sym_primes = X.primes;
    R.symbolic = true;
  }
  return R;
}

bool chart_prime_contains(const ChartMonoid& M, const ChartMSpec& spec, std::size_t p,
                          const ChartElem& a) {
  if (!spec.symbolic) return spec.fin_primes[p].contains(std::get<int>(a));
  const Monomial& m = std::get<Monomial>(a);
  if (m.zero) return true;
  for (auto i : spec.sym_primes[p])
    if (m.exps[i] != 0) return true;
  (void)M;
  return false;
}

std::size_t chart_prime_pullback(const ChartHom& h, const ChartMSpec& src_spec,
                                 const ChartMSpec& tgt_spec, std::size_t q) {
  if (!src_spec.symbolic) {
    std::vector<int> pre;
    for (int a = 0; a < fin(h.source).size; ++a)
      if (chart_prime_contains(h.target, tgt_spec, q, h(ChartElem{a}))) pre.push_back(a);
    Ideal P{pre};
    for (std::size_t i = 0; i < src_spec.fin_primes.size(); ++i)
      if (src_spec.fin_primes[i].elems == P.elems) return i;
    throw error("chart_prime_pullback: preimage is not prime");
  }
  const FreeMonomialMonoid& A = sym(h.source);
  std::vector<std::size_t> I;
  for (std::size_t i = 0; i < A.num_vars; ++i)
    if (chart_prime_contains(h.target, tgt_spec, q, h.map[i])) I.push_back(i);
  for (std::size_t i = 0; i < src_spec.sym_primes.size(); ++i)
    if (src_spec.sym_primes[i] == I) return i;
  throw error("chart_prime_pullback: preimage is not prime");
}

}  // namespace f1cong
