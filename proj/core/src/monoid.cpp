#include "f1cong/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace f1cong {

FiniteMonoid FiniteMonoid::make(int size, int zero, int one, std::vector<int> table,
                                std::vector<std::string> labels) {
  FiniteMonoid A;
  A.size = size;
  A.zero = zero;
  A.one = one;
  A.table = std::move(table);
  if (labels.empty()) {
    labels.resize(size);
    for (int i = 0; i < size; ++i)
      labels[i] = i == zero ? "0" : i == one ? "1" : "a" + std::to_string(i);
  }
  A.labels = std::move(labels);
  A.validate(false);
  return A;
}

FiniteMonoid FiniteMonoid::degenerate_point() {
  FiniteMonoid A;
  A.size = 1;
  A.zero = A.one = 0;
  A.table = {0};
  A.labels = {"0"};
  return A;
}

FiniteMonoid FiniteMonoid::f1() { return make(2, 0, 1, {0, 0, 0, 1}, {"0", "1"}); }

void FiniteMonoid::validate(bool allow_degenerate) const {
  if (size <= 0 || (int)table.size() != size * size || (int)labels.size() != size)
    throw error("finite monoid: malformed table");
  if (zero == one) {
    if (allow_degenerate && size == 1) return;
    throw error("finite monoid: 0 = 1 is rejected at construction (degenerate monoid)");
  }
  if (size < 2) throw error("finite monoid: need at least 0 and 1");
  for (int a = 0; a < size; ++a) {
    if (mul(a, zero) != zero || mul(zero, a) != zero)
      throw error("finite monoid: " + labels[a] + "*0 != 0");
    if (mul(a, one) != a || mul(one, a) != a)
      throw error("finite monoid: " + labels[a] + "*1 != " + labels[a]);
    for (int b = 0; b < size; ++b) {
      if (mul(a, b) < 0 || mul(a, b) >= size) throw error("finite monoid: entry out of range");
      if (mul(a, b) != mul(b, a))
        throw error("finite monoid: not commutative at (" + labels[a] + "," + labels[b] + ")");
      for (int c = 0; c < size; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw error("finite monoid: not associative at (" + labels[a] + "," + labels[b] + "," +
                      labels[c] + ")");
    }
  }
}

int FiniteMonoid::power(int a, long long n) const {
  int r = one;
  for (long long i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

bool FiniteMonoid::is_unit(int a) const {
  for (int b = 0; b < size; ++b)
    if (mul(a, b) == one) return true;
  return false;
}

std::vector<int> FiniteMonoid::units() const {
  std::vector<int> u;
  for (int a = 0; a < size; ++a)
    if (is_unit(a)) u.push_back(a);
  return u;
}

std::vector<int> FiniteMonoid::maximal_ideal() const {
  std::vector<int> m;
  for (int a = 0; a < size; ++a)
    if (!is_unit(a)) m.push_back(a);
  return m;
}

bool FiniteMonoid::is_integral() const {
  if (degenerate()) return false;
  for (int a = 0; a < size; ++a) {
    if (a == zero) continue;
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (mul(a, b) == mul(a, c) && b != c) return false;
  }
  return true;
}

bool FiniteMonoid::is_zero_divisor_free() const {
  if (degenerate()) return false;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != zero && b != zero && mul(a, b) == zero) return false;
  return true;
}

bool FiniteMonoid::is_pointed_group() const {
  if (degenerate()) return false;
  for (int a = 0; a < size; ++a)
    if (a != zero && !is_unit(a)) return false;
  return true;
}

MonoidHom MonoidHom::make(FiniteMonoid source, FiniteMonoid target, std::vector<int> map) {
  MonoidHom f{std::move(source), std::move(target), std::move(map)};
  f.validate();
  return f;
}

MonoidHom MonoidHom::identity(const FiniteMonoid& A) {
  std::vector<int> id(A.size);
  std::iota(id.begin(), id.end(), 0);
  return MonoidHom{A, A, std::move(id)};
}

void MonoidHom::validate() const {
  if ((int)map.size() != source.size) throw error("hom: wrong map size");
  for (int x : map)
    if (x < 0 || x >= target.size) throw error("hom: image out of range");
  if (map[source.zero] != target.zero) throw error("hom: does not preserve 0");
  if (map[source.one] != target.one) throw error("hom: does not preserve 1");
  for (int a = 0; a < source.size; ++a)
    for (int b = 0; b < source.size; ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw error("hom: not multiplicative at (" + source.labels[a] + "," + source.labels[b] +
                    ")");
}

bool MonoidHom::is_injective() const {
  std::set<int> seen(map.begin(), map.end());
  return (int)seen.size() == source.size;
}

bool MonoidHom::is_surjective() const {
  std::set<int> seen(map.begin(), map.end());
  return (int)seen.size() == target.size;
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  if (!(f.target == g.source)) throw error("compose: source/target mismatch");
  std::vector<int> m(f.source.size);
  for (int a = 0; a < f.source.size; ++a) m[a] = g.map[f.map[a]];
  return MonoidHom{f.source, g.target, std::move(m)};
}

bool Ideal::contains(int a) const { return std::binary_search(elems.begin(), elems.end(), a); }

Ideal make_ideal(const FiniteMonoid& A, std::vector<int> gens) {
  std::set<int> I{A.zero};
  for (int g : gens)
    for (int a = 0; a < A.size; ++a) I.insert(A.mul(g, a));
  return Ideal{std::vector<int>(I.begin(), I.end())};
}

bool is_ideal(const FiniteMonoid& A, const std::vector<int>& elems) {
  std::set<int> I(elems.begin(), elems.end());
  if (!I.count(A.zero)) return false;
  for (int x : I)
    for (int a = 0; a < A.size; ++a)
      if (!I.count(A.mul(x, a))) return false;
  return true;
}

bool is_prime_ideal(const FiniteMonoid& A, const std::vector<int>& elems) {
  if (!is_ideal(A, elems)) return false;
  std::set<int> I(elems.begin(), elems.end());
  if (I.count(A.one)) return false;
  for (int a = 0; a < A.size; ++a)
    for (int b = 0; b < A.size; ++b)
      if (I.count(A.mul(a, b)) && !I.count(a) && !I.count(b)) return false;
  return true;
}

std::vector<Ideal> enumerate_prime_ideals(const FiniteMonoid& A) {
  if (A.degenerate()) return {};
  std::vector<int> rest;
  for (int a = 0; a < A.size; ++a)
    if (a != A.zero && a != A.one) rest.push_back(a);
  if (rest.size() > 24) throw error("enumerate_prime_ideals: monoid too large");
  std::vector<Ideal> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << rest.size()); ++mask) {
    std::vector<int> P{A.zero};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1) P.push_back(rest[i]);
    std::sort(P.begin(), P.end());
    if (is_prime_ideal(A, P)) out.push_back(Ideal{P});
  }
  std::sort(out.begin(), out.end(),
            [](const Ideal& a, const Ideal& b) { return a.elems < b.elems; });
  return out;
}

QuotientResult quotient_by_ideal(const FiniteMonoid& A, const Ideal& I) {
  if (!is_ideal(A, I.elems)) throw error("quotient_by_ideal: not an ideal");
  std::vector<int> newindex(A.size, -1);
  std::vector<int> keep;
  for (int a = 0; a < A.size; ++a)
    if (!I.contains(a) || a == A.zero) keep.push_back(a);
  // I always contains 0, so the class of 0 survives as the new zero.
  if ((int)keep.size() == 1) {
    FiniteMonoid Q = FiniteMonoid::degenerate_point();
    return {Q, MonoidHom{A, Q, std::vector<int>(A.size, 0)}};
  }
  for (std::size_t i = 0; i < keep.size(); ++i) newindex[keep[i]] = (int)i;
  int n = (int)keep.size();
  std::vector<int> table(n * n);
  std::vector<std::string> labels(n);
  int z = newindex[A.zero];
  for (int i = 0; i < n; ++i) labels[i] = A.labels[keep[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = A.mul(keep[i], keep[j]);
      table[i * n + j] = I.contains(p) ? z : newindex[p];
    }
  FiniteMonoid Q;
  Q.size = n;
  Q.zero = z;
  Q.one = newindex[A.one];
  Q.table = std::move(table);
  Q.labels = std::move(labels);
  Q.validate(true);
  std::vector<int> proj(A.size);
  for (int a = 0; a < A.size; ++a) proj[a] = I.contains(a) ? z : newindex[a];
  return {Q, MonoidHom{A, Q, std::move(proj)}};
}

LocalizationResult localize(const FiniteMonoid& A, std::vector<int> S) {
  std::set<int> Sc(S.begin(), S.end());
  if (!Sc.count(A.one)) throw error("localize: 1 must lie in S");
  // Close S under products.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(Sc.begin(), Sc.end());
    for (int s : cur)
      for (int t : cur)
        if (Sc.insert(A.mul(s, t)).second) grew = true;
  }
  if (Sc.count(A.zero)) {
    FiniteMonoid Q = FiniteMonoid::degenerate_point();
    return {Q, MonoidHom{A, Q, std::vector<int>(A.size, 0)}};
  }
  std::vector<int> Sv(Sc.begin(), Sc.end());
  // Pairs (s, a) modulo (s,a) ~ (s',a') iff t*s*a' = t*s'*a for some t in S.
  int n = A.size, m = (int)Sv.size();
  auto pid = [&](int si, int a) { return si * n + a; };
  std::vector<int> uf(m * n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  auto unite = [&](int x, int y) { uf[find(x)] = find(y); };
  for (int si = 0; si < m; ++si)
    for (int a = 0; a < n; ++a)
      for (int sj = 0; sj < m; ++sj)
        for (int b = 0; b < n; ++b) {
          if (pid(si, a) >= pid(sj, b)) continue;
          for (int t : Sv)
            if (A.mul(A.mul(t, Sv[si]), b) == A.mul(A.mul(t, Sv[sj]), a)) {
              unite(pid(si, a), pid(sj, b));
              break;
            }
        }
  std::map<int, int> index;
  std::vector<std::pair<int, int>> reps;
  for (int si = 0; si < m; ++si)
    for (int a = 0; a < n; ++a) {
      int r = find(pid(si, a));
      if (!index.count(r)) {
        index[r] = (int)reps.size();
        reps.emplace_back(si, a);
      }
    }
  int q = (int)reps.size();
  std::vector<int> table(q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int s = A.mul(Sv[reps[i].first], Sv[reps[j].first]);
      int si = (int)(std::find(Sv.begin(), Sv.end(), s) - Sv.begin());
      table[i * q + j] = index[find(pid(si, A.mul(reps[i].second, reps[j].second)))];
    }
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    int s = Sv[reps[i].first], a = reps[i].second;
    labels[i] = s == A.one ? A.labels[a] : A.labels[a] + "/" + A.labels[s];
  }
  int oneidx = (int)(std::find(Sv.begin(), Sv.end(), A.one) - Sv.begin());
  FiniteMonoid Q;
  Q.size = q;
  Q.zero = index[find(pid(oneidx, A.zero))];
  Q.one = index[find(pid(oneidx, A.one))];
  Q.table = std::move(table);
  Q.labels = std::move(labels);
  Q.validate(true);
  std::vector<int> mp(n);
  for (int a = 0; a < n; ++a) mp[a] = index[find(pid(oneidx, a))];
  return {Q, MonoidHom{A, Q, std::move(mp)}};
}

LocalizationResult localize_at_element(const FiniteMonoid& A, int h) {
  std::vector<int> S{A.one};
  int p = h;
  for (int i = 0; i < A.size + 1; ++i) {
    S.push_back(p);
    p = A.mul(p, h);
  }
  return localize(A, S);
}

LocalizationResult localize_at_prime(const FiniteMonoid& A, const Ideal& P) {
  std::vector<int> S;
  for (int a = 0; a < A.size; ++a)
    if (!P.contains(a)) S.push_back(a);
  return localize(A, S);
}

LocalizationResult frac(const FiniteMonoid& A) {
  if (!A.is_zero_divisor_free()) throw error("frac: monoid has zero divisors");
  std::vector<int> S;
  for (int a = 0; a < A.size; ++a)
    if (a != A.zero) S.push_back(a);
  return localize(A, S);
}

QuotientResult integral_quotient(const FiniteMonoid& A) {
  LocalizationResult F = frac(A);
  // Image of A in Frac A, i.e. A modulo the congruence kernel of iota.
  std::vector<int> newindex(A.size, -1);
  std::vector<int> keep;
  for (int a = 0; a < A.size; ++a) {
    bool dup = false;
    for (int b : keep)
      if (F.map.map[b] == F.map.map[a]) dup = true;
    if (!dup) keep.push_back(a);
  }
  for (std::size_t i = 0; i < keep.size(); ++i) newindex[keep[i]] = (int)i;
  auto cls = [&](int a) {
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (F.map.map[keep[i]] == F.map.map[a]) return (int)i;
    return -1;
  };
  int n = (int)keep.size();
  if (n == 1) {
    FiniteMonoid Q = FiniteMonoid::degenerate_point();
    return {Q, MonoidHom{A, Q, std::vector<int>(A.size, 0)}};
  }
  std::vector<int> table(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = A.labels[keep[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = cls(A.mul(keep[i], keep[j]));
  FiniteMonoid Q;
  Q.size = n;
  Q.zero = cls(A.zero);
  Q.one = cls(A.one);
  Q.table = std::move(table);
  Q.labels = std::move(labels);
  Q.validate(true);
  std::vector<int> proj(A.size);
  for (int a = 0; a < A.size; ++a) proj[a] = cls(a);
  return {Q, MonoidHom{A, Q, std::move(proj)}};
}

TensorResult tensor(const MonoidHom& f, const MonoidHom& g, std::size_t pair_cap) {
  const FiniteMonoid& C = f.source;
  if (!(g.source == C)) throw error("tensor: the two homs must share their source");
  const FiniteMonoid& A = f.target;
  const FiniteMonoid& B = g.target;
  if ((std::size_t)A.size * B.size > pair_cap) throw error("tensor: raw pair count exceeds cap");
  // Smash product: (a,0) ~ (0,b) ~ (0,0); elements are (a,b) with a,b nonzero, plus 0.
  int n = A.size, m = B.size;
  auto pid = [&](int a, int b) { return a * m + b; };
  std::vector<int> uf(n * m);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  auto unite = [&](int x, int y) { uf[find(x)] = find(y); };
  for (int a = 0; a < n; ++a) unite(pid(a, B.zero), pid(A.zero, B.zero));
  for (int b = 0; b < m; ++b) unite(pid(A.zero, b), pid(A.zero, B.zero));
  // Congruence generated by (f(c)a (x) b, a (x) g(c)b), closed multiplicatively.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < C.size; ++c) {
          int x = find(pid(A.mul(f.map[c], a), b));
          int y = find(pid(a, B.mul(g.map[c], b)));
          if (x != y) {
            unite(x, y);
            changed = true;
          }
        }
    // Multiplicative closure: if (p ~ q) then (p*r ~ q*r).
    for (int a1 = 0; a1 < n; ++a1)
      for (int b1 = 0; b1 < m; ++b1)
        for (int a2 = 0; a2 < n; ++a2)
          for (int b2 = 0; b2 < m; ++b2) {
            if (find(pid(a1, b1)) != find(pid(a2, b2))) continue;
            for (int ar = 0; ar < n; ++ar)
              for (int br = 0; br < m; ++br) {
                int x = find(pid(A.mul(a1, ar), B.mul(b1, br)));
                int y = find(pid(A.mul(a2, ar), B.mul(b2, br)));
                if (x != y) {
                  unite(x, y);
                  changed = true;
                }
              }
          }
  }
  std::map<int, int> index;
  std::vector<std::pair<int, int>> reps;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) {
      int r = find(pid(a, b));
      if (!index.count(r)) {
        index[r] = (int)reps.size();
        reps.emplace_back(a, b);
      }
    }
  int q = (int)reps.size();
  FiniteMonoid T;
  T.size = q;
  T.zero = index[find(pid(A.zero, B.zero))];
  T.one = index[find(pid(A.one, B.one))];
  T.table.resize(q * q);
  T.labels.resize(q);
  for (int i = 0; i < q; ++i) {
    auto [a, b] = reps[i];
    T.labels[i] = i == T.zero ? "0" : A.labels[a] + "(x)" + B.labels[b];
    for (int j = 0; j < q; ++j) {
      auto [a2, b2] = reps[j];
      T.table[i * q + j] = index[find(pid(A.mul(a, a2), B.mul(b, b2)))];
    }
  }
  T.validate(q == 1);
  std::vector<int> la(n), rb(m);
  for (int a = 0; a < n; ++a) la[a] = index[find(pid(a, B.one))];
  for (int b = 0; b < m; ++b) rb[b] = index[find(pid(A.one, b))];
  return {T, MonoidHom{A, T, std::move(la)}, MonoidHom{B, T, std::move(rb)},
          std::move(reps)};
}

std::optional<MonoidHom> mediating_hom(const TensorResult& T, const MonoidHom& hA,
                                       const MonoidHom& hB) {
  const FiniteMonoid& D = hA.target;
  std::vector<int> m(T.monoid.size);
  for (int i = 0; i < T.monoid.size; ++i) {
    auto [a, b] = T.reps[i];
    m[i] = D.mul(hA.map[a], hB.map[b]);
  }
  // Well-definedness and hom axioms may fail if the cocone does not commute.
  try {
    MonoidHom med{T.monoid, D, std::move(m)};
    med.validate();
    if (!(compose(med, T.from_left).map == hA.map)) return std::nullopt;
    if (!(compose(med, T.from_right).map == hB.map)) return std::nullopt;
    return med;
  } catch (const error&) {
    return std::nullopt;
  }
}

std::vector<MonoidHom> enumerate_homs_to_F1(const FiniteMonoid& A) {
  FiniteMonoid F1 = FiniteMonoid::f1();
  std::vector<MonoidHom> out;
  for (const Ideal& P : enumerate_prime_ideals(A)) {
    std::vector<int> m(A.size);
    for (int a = 0; a < A.size; ++a) m[a] = P.contains(a) ? F1.zero : F1.one;
    out.push_back(MonoidHom::make(A, F1, std::move(m)));
  }
  return out;
}

std::vector<MonoidHom> enumerate_homs(const FiniteMonoid& A, const FiniteMonoid& B) {
  std::vector<int> free;
  for (int a = 0; a < A.size; ++a)
    if (a != A.zero && a != A.one) free.push_back(a);
  std::vector<MonoidHom> out;
  std::vector<int> m(A.size, -1);
  m[A.zero] = B.zero;
  m[A.one] = B.one;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      try {
        MonoidHom h{A, B, m};
        h.validate();
        out.push_back(std::move(h));
      } catch (const error&) {
      }
      return;
    }
    for (int b = 0; b < B.size; ++b) {
      m[free[i]] = b;
      rec(i + 1);
    }
    m[free[i]] = -1;
  };
  rec(0);
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_homs_to_F1_symbolic(const FreeMonomialMonoid& A) {
  // A variable maps to 0 or 1; inverted variables must map to the unit 1.
  std::vector<std::size_t> freevars = A.non_inverted_vars();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << freevars.size()); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < freevars.size(); ++i)
      if (mask >> i & 1) I.push_back(freevars[i]);
    out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_finite_type(const MonoidHom& f) {
  (void)f;  // finite targets are generated by all of their elements
  return true;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteMonoid& A, const FiniteMonoid& B) {
  if (A.size != B.size) return std::nullopt;
  std::vector<int> m(A.size, -1);
  std::vector<char> used(B.size, 0);
  m[A.zero] = B.zero;
  m[A.one] = B.one;
  used[B.zero] = used[B.one] = 1;
  std::vector<int> free;
  for (int a = 0; a < A.size; ++a)
    if (a != A.zero && a != A.one) free.push_back(a);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == free.size()) {
      for (int a = 0; a < A.size; ++a)
        for (int b = 0; b < A.size; ++b)
          if (m[A.mul(a, b)] != B.mul(m[a], m[b])) return false;
      return true;
    }
    for (int b = 0; b < B.size; ++b) {
      if (used[b]) continue;
      m[free[i]] = b;
      used[b] = 1;
      if (rec(i + 1)) return true;
      used[b] = 0;
      m[free[i]] = -1;
    }
    return false;
  };
  if (A.size == 1) return std::vector<int>{0};
  if (rec(0)) return m;
  return std::nullopt;
}

}  // namespace f1cong
