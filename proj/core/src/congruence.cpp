#include "f1cong/congruence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace f1cong {

namespace {

void canonicalize(FiniteCongruence& c) {
  // cls[a] = min element of the class of a.
  std::vector<int> minrep(c.n, -1);
  for (int a = 0; a < c.n; ++a) {
    int r = c.cls[a];
    if (minrep[r] < 0 || a < minrep[r]) minrep[r] = a;
  }
  for (int a = 0; a < c.n; ++a) c.cls[a] = minrep[c.cls[a]];
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    p[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

}  // namespace

FiniteCongruence trivial_congruence(const FiniteMonoid& A) {
  FiniteCongruence c{A.size, std::vector<int>(A.size)};
  std::iota(c.cls.begin(), c.cls.end(), 0);
  return c;
}

FiniteCongruence full_congruence(const FiniteMonoid& A) {
  return FiniteCongruence{A.size, std::vector<int>(A.size, 0)};
}

bool is_multiplicative(const FiniteMonoid& A, const FiniteCongruence& c) {
  for (int a = 0; a < A.size; ++a)
    for (int b = a + 1; b < A.size; ++b) {
      if (!c.related(a, b)) continue;
      for (int x = 0; x < A.size; ++x)
        if (!c.related(A.mul(a, x), A.mul(b, x))) return false;
    }
  return true;
}

FiniteCongruence generate(const FiniteMonoid& A, const std::vector<std::pair<int, int>>& pairs) {
  UF uf(A.size);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= A.size || b < 0 || b >= A.size) throw error("generate: pair out of range");
    uf.unite(a, b);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < A.size; ++a)
      for (int b = a + 1; b < A.size; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (int x = 0; x < A.size; ++x)
          if (uf.unite(A.mul(a, x), A.mul(b, x))) changed = true;
      }
  }
  FiniteCongruence c{A.size, std::vector<int>(A.size)};
  for (int a = 0; a < A.size; ++a) c.cls[a] = uf.find(a);
  canonicalize(c);
  return c;
}

QuotientResult quotient(const FiniteMonoid& A, const FiniteCongruence& c) {
  std::vector<int> reps;
  std::vector<int> idx(A.size, -1);
  for (int a = 0; a < A.size; ++a)
    if (c.cls[a] == a) {
      idx[a] = (int)reps.size();
      reps.push_back(a);
    }
  int n = (int)reps.size();
  if (n == 1) {
    FiniteMonoid Q = FiniteMonoid::degenerate_point();
    return {Q, MonoidHom{A, Q, std::vector<int>(A.size, 0)}};
  }
  FiniteMonoid Q;
  Q.size = n;
  Q.zero = idx[c.cls[A.zero]];
  Q.one = idx[c.cls[A.one]];
  Q.table.resize(n * n);
  Q.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    Q.labels[i] = A.labels[reps[i]];
    for (int j = 0; j < n; ++j) Q.table[i * n + j] = idx[c.cls[A.mul(reps[i], reps[j])]];
  }
  Q.validate(true);
  std::vector<int> proj(A.size);
  for (int a = 0; a < A.size; ++a) proj[a] = idx[c.cls[a]];
  return {Q, MonoidHom{A, Q, std::move(proj)}};
}

FiniteCongruence congker(const MonoidHom& f) {
  FiniteCongruence c{f.source.size, std::vector<int>(f.source.size)};
  for (int a = 0; a < f.source.size; ++a) {
    int rep = a;
    for (int b = 0; b < a; ++b)
      if (f.map[b] == f.map[a]) {
        rep = c.cls[b];
        break;
      }
    c.cls[a] = rep;
  }
  canonicalize(c);
  return c;
}

bool is_prime(const FiniteMonoid& A, const FiniteCongruence& c) {
  if (c.related(A.zero, A.one)) return false;  // degenerate quotient is not integral
  for (int a = 0; a < A.size; ++a)
    for (int b = 0; b < A.size; ++b)
      for (int d = 0; d < A.size; ++d)
        if (c.related(A.mul(a, b), A.mul(a, d)) && !c.related(a, A.zero) && !c.related(b, d))
          return false;
  return true;
}

bool is_weak_prime(const FiniteMonoid& A, const FiniteCongruence& c) {
  if (c.related(A.zero, A.one)) return false;
  for (int a = 0; a < A.size; ++a)
    for (int b = 0; b < A.size; ++b)
      if (c.related(A.mul(a, b), A.zero) && !c.related(a, A.zero) && !c.related(b, A.zero))
        return false;
  return true;
}

bool is_triv_prime(const FiniteMonoid& A) { return is_prime(A, trivial_congruence(A)); }

Ideal nullideal(const FiniteMonoid& A, const FiniteCongruence& c) {
  std::vector<int> elems;
  for (int a = 0; a < A.size; ++a)
    if (c.related(a, A.zero)) elems.push_back(a);
  return Ideal{elems};
}

FiniteCongruence pushforward(const MonoidHom& f, const FiniteCongruence& c) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < f.source.size; ++a)
    for (int b = a + 1; b < f.source.size; ++b)
      if (c.related(a, b)) pairs.emplace_back(f.map[a], f.map[b]);
  return generate(f.target, pairs);
}

FiniteCongruence pullback(const MonoidHom& f, const FiniteCongruence& d) {
  FiniteCongruence c{f.source.size, std::vector<int>(f.source.size)};
  for (int a = 0; a < f.source.size; ++a) {
    c.cls[a] = a;
    for (int b = 0; b < a; ++b)
      if (d.related(f.map[b], f.map[a])) {
        c.cls[a] = c.cls[b];
        break;
      }
  }
  canonicalize(c);
  return c;
}

FiniteCongruence join(const FiniteMonoid& A, const FiniteCongruence& c,
                      const FiniteCongruence& d) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < A.size; ++a) {
    pairs.emplace_back(a, c.cls[a]);
    pairs.emplace_back(a, d.cls[a]);
  }
  return generate(A, pairs);
}

FiniteCongruence meet(const FiniteCongruence& c, const FiniteCongruence& d) {
  FiniteCongruence m{c.n, std::vector<int>(c.n)};
  std::map<std::pair<int, int>, int> idx;
  for (int a = 0; a < c.n; ++a) {
    auto key = std::make_pair(c.cls[a], d.cls[a]);
    auto it = idx.find(key);
    if (it == idx.end()) {
      idx[key] = a;
      m.cls[a] = a;
    } else {
      m.cls[a] = it->second;
    }
  }
  canonicalize(m);
  return m;
}

bool contains(const FiniteCongruence& c, const FiniteCongruence& d) {
  for (int a = 0; a < d.n; ++a)
    for (int b = a + 1; b < d.n; ++b)
      if (d.related(a, b) && !c.related(a, b)) return false;
  return true;
}

FiniteCongruence localize_congruence(const FiniteMonoid& A, const FiniteCongruence& c,
                                     const LocalizationResult& loc, const std::vector<int>& S) {
  // Representatives (s, a) of the localized monoid are not stored; recover the
  // relation through the localization map: x = a/s means s' x = iota(a) ... we
  // instead scan pairs of elements of S^{-1}A, writing each as iota(a)/iota(s).
  const FiniteMonoid& L = loc.monoid;
  if (L.degenerate()) return full_congruence(L);
  // For every element x of L pick (s, a) with x = iota(a) * iota(s)^{-1}... not
  // all localizations invert s; use the definition via searching pairs (s, a)
  // with iota(s) * x == iota(a).
  std::vector<std::vector<std::pair<int, int>>> fractions(L.size);
  for (int x = 0; x < L.size; ++x)
    for (int s : S)
      for (int a = 0; a < A.size; ++a)
        if (L.mul(loc.map.map[s], x) == loc.map.map[a]) fractions[x].emplace_back(s, a);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < L.size; ++x)
    for (int y = 0; y <= x; ++y) {
      bool rel = false;
      for (auto [s, a] : fractions[x]) {
        for (auto [t, b] : fractions[y]) {
          // (a/s, b/t) in S^{-1}c iff (u t a, u s b) in c for some u in S.
          for (int u : S)
            if (c.related(A.mul(A.mul(u, t), a), A.mul(A.mul(u, s), b))) {
              rel = true;
              break;
            }
          if (rel) break;
        }
        if (rel) break;
      }
      if (rel) pairs.emplace_back(x, y);
    }
  // The defining relation is already a congruence; the generated closure of
  // its full pair list equals it.
  return generate(L, pairs);
}

FiniteCongruence radical(const FiniteMonoid& A, const FiniteCongruence& c) {
  // Powers in a finite monoid of size m cycle within m steps, so n <= m suffices.
  FiniteCongruence r{A.size, std::vector<int>(A.size)};
  UF uf(A.size);
  for (int a = 0; a < A.size; ++a)
    for (int b = a + 1; b < A.size; ++b) {
      bool in = false;
      for (int n = 0; n <= A.size && !in; ++n) {
        int an = A.power(a, n), bn = A.power(b, n);
        if (c.related(A.mul(a, an), A.mul(b, an)) && c.related(A.mul(a, bn), A.mul(b, bn)))
          in = true;
      }
      if (in) uf.unite(a, b);
    }
  for (int a = 0; a < A.size; ++a) r.cls[a] = uf.find(a);
  canonicalize(r);
  return r;
}

Ideal radical_ideal(const FiniteMonoid& A, const Ideal& I) {
  std::vector<int> elems;
  for (int a = 0; a < A.size; ++a)
    for (int n = 0; n <= A.size; ++n)
      if (I.contains(A.power(a, n))) {
        elems.push_back(a);
        break;
      }
  return Ideal{elems};
}

Ideal nil_ideal(const FiniteMonoid& A) { return radical_ideal(A, Ideal{{A.zero}}); }

FiniteCongruence strong_nilradical(const FiniteMonoid& A) {
  return radical(A, trivial_congruence(A));
}

QuotientResult red(const FiniteMonoid& A) { return quotient_by_ideal(A, nil_ideal(A)); }

QuotientResult sred(const FiniteMonoid& A) { return quotient(A, strong_nilradical(A)); }

bool is_strongly_reduced(const FiniteMonoid& A) {
  return strong_nilradical(A) == trivial_congruence(A);
}

std::vector<FiniteCongruence> enumerate_congruences(const FiniteMonoid& A, int cap) {
  if (A.size > cap) throw error("enumerate_congruences: cap exceeded");
  // Restricted-growth strings enumerate all set partitions.
  std::vector<FiniteCongruence> out;
  std::vector<int> rgs(A.size, 0);
  std::function<void(int, int)> rec = [&](int i, int maxc) {
    if (i == A.size) {
      FiniteCongruence c{A.size, std::vector<int>(A.size)};
      std::vector<int> first(A.size, -1);
      for (int a = 0; a < A.size; ++a) {
        if (first[rgs[a]] < 0) first[rgs[a]] = a;
        c.cls[a] = first[rgs[a]];
      }
      if (is_multiplicative(A, c)) out.push_back(std::move(c));
      return;
    }
    for (int v = 0; v <= maxc + 1; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(maxc, v));
    }
  };
  rec(0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteCongruence> enumerate_prime_congruences(const FiniteMonoid& A, int cap) {
  std::vector<FiniteCongruence> out;
  for (auto& c : enumerate_congruences(A, cap))
    if (is_prime(A, c)) out.push_back(std::move(c));
  return out;
}

std::vector<FiniteCongruence> enumerate_weak_prime_congruences(const FiniteMonoid& A, int cap) {
  std::vector<FiniteCongruence> out;
  for (auto& c : enumerate_congruences(A, cap))
    if (is_weak_prime(A, c)) out.push_back(std::move(c));
  return out;
}

std::string congruence_name(const FiniteMonoid& A, const FiniteCongruence& c) {
  std::string out = "<";
  bool any = false;
  for (int a = 0; a < A.size; ++a) {
    if (c.cls[a] == a) continue;
    if (any) out += ",";
    out += "(" + A.labels[a] + "," + A.labels[c.cls[a]] + ")";
    any = true;
  }
  if (!any) return "<triv>";
  return out + ">";
}

// --- Symbolic tier -----------------------------------------------------------

SymbolicPrimeCongruence SymbolicPrimeCongruence::make(FreeMonomialMonoid ambient,
                                                      std::vector<std::size_t> vanishing,
                                                      Lattice lat) {
  std::sort(vanishing.begin(), vanishing.end());
  vanishing.erase(std::unique(vanishing.begin(), vanishing.end()), vanishing.end());
  for (auto i : vanishing) {
    if (i >= ambient.num_vars) throw error("symbolic prime: variable out of range");
    if (ambient.inverted[i]) throw error("symbolic prime: inverted variable cannot vanish");
  }
  SymbolicPrimeCongruence p{std::move(ambient), std::move(vanishing), Lattice{}};
  std::size_t j = p.ambient.num_vars - p.vanishing.size();
  if (lat.ambient_rank != j) throw error("symbolic prime: lattice rank must match J");
  p.lat = hnf(j, std::move(lat.basis));
  return p;
}

std::vector<std::size_t> SymbolicPrimeCongruence::cofree_vars() const {
  std::vector<std::size_t> J;
  for (std::size_t i = 0; i < ambient.num_vars; ++i)
    if (!std::binary_search(vanishing.begin(), vanishing.end(), i)) J.push_back(i);
  return J;
}

SymbolicPrimeCongruence symbolic_point_of_hom_to_F1(const FreeMonomialMonoid& A,
                                                    const std::vector<std::size_t>& I) {
  std::size_t j = A.num_vars - I.size();
  return SymbolicPrimeCongruence::make(A, I, full_lattice(j));
}

SymbolicPrimeCongruence symbolic_trivial(const FreeMonomialMonoid& A) {
  return SymbolicPrimeCongruence::make(A, {}, zero_lattice(A.num_vars));
}

namespace {

// m is identified with 0 by p_{I,.}: zero, or support meets I.
bool vanishes(const Monomial& m, const std::vector<std::size_t>& I) {
  if (m.zero) return true;
  for (auto i : I)
    if (m.exps[i] != 0) return true;
  return false;
}

ivec restrict_diff(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& J) {
  ivec d(J.size());
  for (std::size_t k = 0; k < J.size(); ++k) d[k] = a.exps[J[k]] - b.exps[J[k]];
  return d;
}

}  // namespace

bool symbolic_member(const std::pair<Monomial, Monomial>& pair,
                     const SymbolicPrimeCongruence& p) {
  const auto& [a, b] = pair;
  if (!p.ambient.valid_element(a) || !p.ambient.valid_element(b))
    throw error("symbolic_member: element not in the ambient monoid");
  bool za = vanishes(a, p.vanishing), zb = vanishes(b, p.vanishing);
  if (za || zb) return za && zb;
  return lattice_member(restrict_diff(a, b, p.cofree_vars()), p.lat);
}

bool symbolic_specializes(const SymbolicPrimeCongruence& p, const SymbolicPrimeCongruence& q) {
  if (!(p.ambient == q.ambient)) throw error("symbolic_specializes: ambient mismatch");
  // I_p subset I_q.
  if (!std::includes(q.vanishing.begin(), q.vanishing.end(), p.vanishing.begin(),
                     p.vanishing.end()))
    return false;
  std::vector<std::size_t> Jp = p.cofree_vars(), Jq = q.cofree_vars();
  // K = I_q \ I_p, as positions inside Jp.
  std::vector<std::size_t> Kpos, Jq_pos;
  for (std::size_t k = 0; k < Jp.size(); ++k) {
    if (std::binary_search(q.vanishing.begin(), q.vanishing.end(), Jp[k]))
      Kpos.push_back(k);
    else
      Jq_pos.push_back(k);
  }
  // Vectors of H_p vanishing on K must restrict into H_q.
  Lattice sect = lattice_coordinate_section(p.lat, Kpos);
  Lattice restr = lattice_project(sect, Jq_pos);
  if (!lattice_subset(restr, q.lat)) return false;
  // No h in H_p may have a nonzero one-sided restriction to K: such an h gives
  // a pair of p with exactly one side vanishing mod I_q.
  if (!Kpos.empty()) {
    Lattice projK = lattice_project(p.lat, Kpos);
    if (lattice_has_nonneg_nonzero(projK)) return false;
  }
  return true;
}

bool symbolic_is_closed_point(const SymbolicPrimeCongruence& p) {
  // Closed iff the quotient is F1, i.e. H = Z^J.
  return p.lat == full_lattice(p.lat.ambient_rank);
}

std::optional<Lattice> symbolic_minimal_lattice_over(const SymbolicCongruence& c,
                                                     const std::vector<std::size_t>& I) {
  std::vector<std::size_t> J;
  for (std::size_t i = 0; i < c.ambient.num_vars; ++i)
    if (!std::binary_search(I.begin(), I.end(), i)) J.push_back(i);
  imat rows;
  for (const auto& [a, b] : c.gens) {
    bool za = vanishes(a, I), zb = vanishes(b, I);
    if (za != zb) return std::nullopt;
    if (!za) rows.push_back(restrict_diff(a, b, J));
  }
  return hnf(J.size(), std::move(rows));
}

bool symbolic_radical_member(const SymbolicCongruence& c,
                             const std::pair<Monomial, Monomial>& pair) {
  // (a,b) lies in every prime over <gens> iff for every admissible vanishing
  // set I it lies in p_{I, L_I} with L_I the minimal admissible lattice.
  std::vector<std::size_t> freevars = c.ambient.non_inverted_vars();
  for (std::size_t mask = 0; mask < (std::size_t(1) << freevars.size()); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < freevars.size(); ++i)
      if (mask >> i & 1) I.push_back(freevars[i]);
    auto L = symbolic_minimal_lattice_over(c, I);
    if (!L) continue;
    auto p = SymbolicPrimeCongruence::make(c.ambient, I, *L);
    if (!symbolic_member(pair, p)) return false;
  }
  return true;
}

bool symbolic_vanishing_subset(const SymbolicCongruence& c, const SymbolicCongruence& d) {
  // V_c subset V_d iff every generator of d lies in sqrt(<c>).
  for (const auto& g : d.gens)
    if (!symbolic_radical_member(c, g)) return false;
  return true;
}

bool symbolic_vanishing_equal(const SymbolicCongruence& c, const SymbolicCongruence& d) {
  return symbolic_vanishing_subset(c, d) && symbolic_vanishing_subset(d, c);
}

bool symbolic_vanishing_is_whole(const SymbolicCongruence& c) {
  SymbolicCongruence empty{c.ambient, {}};
  return symbolic_vanishing_subset(empty, c);
}

bool symbolic_prime_contains(const SymbolicPrimeCongruence& p, const SymbolicCongruence& c) {
  for (const auto& g : c.gens)
    if (!symbolic_member(g, p)) return false;
  return true;
}

std::optional<Lattice> symbolic_kernel_minimal_lattice_over(const SymbolicHomKernel& k,
                                                            const std::vector<std::size_t>& I) {
  // (t_z, 0) lies in the kernel for z in Z, so I must contain Z.
  if (!std::includes(I.begin(), I.end(), k.zero_vars.begin(), k.zero_vars.end()))
    return std::nullopt;
  std::vector<std::size_t> nonZ;  // coordinates of k.ker, in var order
  for (std::size_t v = 0; v < k.ambient.num_vars; ++v)
    if (!std::binary_search(k.zero_vars.begin(), k.zero_vars.end(), v)) nonZ.push_back(v);
  std::vector<std::size_t> Kpos, Jpos;
  for (std::size_t i = 0; i < nonZ.size(); ++i) {
    if (std::binary_search(I.begin(), I.end(), nonZ[i]))
      Kpos.push_back(i);
    else
      Jpos.push_back(i);
  }
  // A kernel vector nonnegative on K = I \ Z gives a pair with exactly one
  // side vanishing mod I; no prime over I contains the kernel then.
  if (!Kpos.empty() && lattice_has_nonneg_nonzero(lattice_project(k.ker, Kpos)))
    return std::nullopt;
  return lattice_project(lattice_coordinate_section(k.ker, Kpos), Jpos);
}

bool symbolic_prime_contains_kernel(const SymbolicPrimeCongruence& p, const SymbolicHomKernel& k) {
  auto L = symbolic_kernel_minimal_lattice_over(k, p.vanishing);
  return L && lattice_subset(*L, p.lat);
}

bool symbolic_kernel_radical_member(const SymbolicHomKernel& k,
                                    const std::pair<Monomial, Monomial>& pair) {
  std::vector<std::size_t> freevars = k.ambient.non_inverted_vars();
  for (std::size_t mask = 0; mask < (std::size_t(1) << freevars.size()); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < freevars.size(); ++i)
      if (mask >> i & 1) I.push_back(freevars[i]);
    auto L = symbolic_kernel_minimal_lattice_over(k, I);
    if (!L) continue;
    auto p = SymbolicPrimeCongruence::make(k.ambient, I, *L);
    if (!symbolic_member(pair, p)) return false;
  }
  return true;
}

bool symbolic_kernel_vanishing_subset_of(const SymbolicHomKernel& k, const SymbolicCongruence& d) {
  for (const auto& g : d.gens)
    if (!symbolic_kernel_radical_member(k, g)) return false;
  return true;
}

bool symbolic_vanishing_subset_of_kernel(const SymbolicCongruence& c, const SymbolicHomKernel& k) {
  // Every prime over c must contain the kernel.
  std::vector<std::size_t> freevars = c.ambient.non_inverted_vars();
  for (std::size_t mask = 0; mask < (std::size_t(1) << freevars.size()); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < freevars.size(); ++i)
      if (mask >> i & 1) I.push_back(freevars[i]);
    auto L = symbolic_minimal_lattice_over(c, I);
    if (!L) continue;
    auto p = SymbolicPrimeCongruence::make(c.ambient, I, *L);
    if (!symbolic_prime_contains_kernel(p, k)) return false;
  }
  return true;
}

bool symbolic_kernel_vanishing_is_whole(const SymbolicHomKernel& k) {
  SymbolicCongruence empty{k.ambient, {}};
  return symbolic_vanishing_subset_of_kernel(empty, k);
}

}  // namespace f1cong
