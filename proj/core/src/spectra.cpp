#include "f1cong/spectra.hpp"

#include <algorithm>

namespace f1cong {

std::vector<char> FiniteSpace::closure_of(std::size_t i) const {
  std::vector<char> out(size(), 0);
  for (std::size_t j = 0; j < size(); ++j) out[j] = spec[i][j];
  return out;
}

std::vector<char> FiniteSpace::minimal_open_of(std::size_t i) const {
  std::vector<char> out(size(), 0);
  for (std::size_t j = 0; j < size(); ++j) out[j] = spec[j][i];
  return out;
}

bool FiniteSpace::is_open(const std::vector<char>& set) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!set[i]) continue;
    for (std::size_t j = 0; j < size(); ++j)
      if (spec[j][i] && !set[j]) return false;  // a generization is missing
  }
  return true;
}

bool FiniteSpace::is_closed(const std::vector<char>& set) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!set[i]) continue;
    for (std::size_t j = 0; j < size(); ++j)
      if (spec[i][j] && !set[j]) return false;  // a specialization is missing
  }
  return true;
}

std::vector<char> FiniteSpace::closure(const std::vector<char>& set) const {
  std::vector<char> out(size(), 0);
  for (std::size_t i = 0; i < size(); ++i)
    if (set[i])
      for (std::size_t j = 0; j < size(); ++j)
        if (spec[i][j]) out[j] = 1;
  return out;
}

std::vector<std::size_t> FiniteSpace::closed_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool closed = true;
    for (std::size_t j = 0; j < size(); ++j)
      if (j != i && spec[i][j]) closed = false;
    if (closed) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteSpace::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j || !spec[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < size(); ++k)
        if (k != i && k != j && spec[i][k] && spec[k][j]) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

bool SpaceMap::is_continuous(const FiniteSpace& src, const FiniteSpace& tgt) const {
  // On finite spaces: continuous iff specialization-preserving.
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      if (src.spec[i][j] && !tgt.spec[image[i]][image[j]]) return false;
  return true;
}

bool SpaceMap::is_open_map(const FiniteSpace& src, const FiniteSpace& tgt) const {
  // Open iff the image of every minimal open is open.
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::vector<char> img(tgt.size(), 0);
    auto mo = src.minimal_open_of(i);
    for (std::size_t j = 0; j < src.size(); ++j)
      if (mo[j]) img[image[j]] = 1;
    if (!tgt.is_open(img)) return false;
  }
  return true;
}

bool SpaceMap::is_closed_map(const FiniteSpace& src, const FiniteSpace& tgt) const {
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::vector<char> img(tgt.size(), 0);
    auto cl = src.closure_of(i);
    for (std::size_t j = 0; j < src.size(); ++j)
      if (cl[j]) img[image[j]] = 1;
    if (!tgt.is_closed(img)) return false;
  }
  return true;
}

bool SpaceMap::is_injective() const {
  std::vector<int> seen;
  for (int x : image) {
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) return false;
    seen.push_back(x);
  }
  return true;
}

bool SpaceMap::is_surjective(const FiniteSpace& tgt) const {
  std::vector<char> hit(tgt.size(), 0);
  for (int x : image) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool SpaceMap::is_embedding(const FiniteSpace& src, const FiniteSpace& tgt) const {
  // Injective order-embedding; subspaces of finite T0 spaces carry the induced order.
  if (!is_injective()) return false;
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      if ((bool)src.spec[i][j] != (bool)tgt.spec[image[i]][image[j]]) return false;
  return true;
}

namespace {

std::string ideal_name(const FiniteMonoid& A, const Ideal& P) {
  // Name by a minimal generating set.
  std::vector<int> gens;
  for (int a : P.elems) {
    if (a == A.zero) continue;
    bool generated = false;
    for (int g : P.elems) {
      if (g == A.zero || g == a) continue;
      for (int m = 0; m < A.size; ++m)
        if (A.mul(g, m) == a) generated = true;
    }
    if (!generated) gens.push_back(a);
  }
  if (gens.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += A.labels[gens[i]];
  }
  return out + ">";
}

}  // namespace

std::size_t MSpecResult::index_of(const Ideal& P) const {
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i].elems == P.elems) return i;
  throw error("mspec: prime ideal not found");
}

std::size_t CongSpaceResult::index_of(const FiniteCongruence& p) const {
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i] == p) return i;
  throw error("cong_space: prime congruence not found");
}

MSpecResult mspec(const FiniteMonoid& A) {
  MSpecResult R;
  R.A = A;
  R.primes = enumerate_prime_ideals(A);
  std::size_t n = R.primes.size();
  R.space.names.resize(n);
  R.space.spec.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    R.space.names[i] = ideal_name(A, R.primes[i]);
    for (std::size_t j = 0; j < n; ++j)
      R.space.spec[i][j] = std::includes(R.primes[j].elems.begin(), R.primes[j].elems.end(),
                                         R.primes[i].elems.begin(), R.primes[i].elems.end());
  }
  for (int h = 0; h < A.size; ++h) {
    std::vector<char> U(n, 0);
    for (std::size_t i = 0; i < n; ++i) U[i] = !R.primes[i].contains(h);
    R.space.subbasis.emplace_back("U_" + A.labels[h], std::move(U));
  }
  return R;
}

CongSpaceResult cong_space(const FiniteMonoid& A, int cap) {
  CongSpaceResult R;
  R.A = A;
  R.primes = enumerate_prime_congruences(A, cap);
  std::size_t n = R.primes.size();
  R.space.names.resize(n);
  R.space.spec.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    R.space.names[i] = congruence_name(A, R.primes[i]);
    for (std::size_t j = 0; j < n; ++j)
      R.space.spec[i][j] = contains(R.primes[j], R.primes[i]);
  }
  for (int a = 0; a < A.size; ++a)
    for (int b = 0; b < a; ++b) {
      std::vector<char> U(n, 0);
      for (std::size_t i = 0; i < n; ++i) U[i] = !R.primes[i].related(a, b);
      R.space.subbasis.emplace_back("U_{" + A.labels[a] + "," + A.labels[b] + "}", std::move(U));
    }
  return R;
}

SpaceMap projection_pi(const MSpecResult& X, const CongSpaceResult& C) {
  SpaceMap m;
  for (const auto& p : C.primes) m.image.push_back((int)X.index_of(nullideal(C.A, p)));
  return m;
}

FiniteCongruence sigma_point(const FiniteMonoid& A, const Ideal& P) {
  // congker of A -> A_P -> A_P/PA_P -> Frac(...), the residue-field chain.
  LocalizationResult loc = localize_at_prime(A, P);
  std::vector<int> Pimg;
  for (int a : P.elems) Pimg.push_back(loc.map.map[a]);
  Ideal PP = make_ideal(loc.monoid, Pimg);
  QuotientResult q = quotient_by_ideal(loc.monoid, PP);
  LocalizationResult fr = frac(q.monoid);
  MonoidHom chain = compose(fr.map, compose(q.projection, loc.map));
  return congker(chain);
}

FiniteCongruence tau_point(const FiniteMonoid& A, const Ideal& P) {
  // {(a,a') : both in P or both outside}.
  int in_rep = -1, out_rep = -1;
  FiniteCongruence c{A.size, std::vector<int>(A.size)};
  for (int a = 0; a < A.size; ++a) {
    if (P.contains(a)) {
      if (in_rep < 0) in_rep = a;
      c.cls[a] = in_rep;
    } else {
      if (out_rep < 0) out_rep = a;
      c.cls[a] = out_rep;
    }
  }
  return c;
}

SpaceMap section_sigma(const MSpecResult& X, const CongSpaceResult& C) {
  SpaceMap m;
  for (const auto& P : X.primes) m.image.push_back((int)C.index_of(sigma_point(X.A, P)));
  return m;
}

SpaceMap section_tau(const MSpecResult& X, const CongSpaceResult& C) {
  SpaceMap m;
  for (const auto& P : X.primes) m.image.push_back((int)C.index_of(tau_point(X.A, P)));
  return m;
}

std::vector<std::size_t> chi(const CongSpaceResult& C, const std::vector<MonoidHom>& homs) {
  std::vector<std::size_t> out;
  for (const auto& f : homs) out.push_back(C.index_of(congker(f)));
  return out;
}

FiniteMonoid stalk(const FiniteMonoid& A, const FiniteCongruence& p) {
  return localize_at_prime(A, nullideal(A, p)).monoid;
}

FiniteMonoid residue_field(const FiniteMonoid& A, const FiniteCongruence& p) {
  // k(p) = Frac(A/p); A/p is integral since p is prime.
  QuotientResult q = quotient(A, p);
  return frac(q.monoid).monoid;
}

FibreResult fibre(const FiniteMonoid& A, const Ideal& P, const MSpecResult& X,
                  const CongSpaceResult& C) {
  FibreResult R;
  std::size_t pi = X.index_of(P);
  SpaceMap proj = projection_pi(X, C);
  for (std::size_t i = 0; i < C.primes.size(); ++i)
    if (proj.image[i] == (int)pi) R.fibre.push_back(i);
  // k(P) and the hom A -> k(P).
  LocalizationResult loc = localize_at_prime(A, P);
  std::vector<int> Pimg;
  for (int a : P.elems) Pimg.push_back(loc.map.map[a]);
  QuotientResult q = quotient_by_ideal(loc.monoid, make_ideal(loc.monoid, Pimg));
  LocalizationResult fr = frac(q.monoid);
  MonoidHom chain = compose(fr.map, compose(q.projection, loc.map));
  R.residue_space = cong_space(fr.monoid, std::max(8, fr.monoid.size));
  for (const auto& d : R.residue_space.primes) {
    FiniteCongruence pb = pullback(chain, d);
    std::size_t idx = C.index_of(pb);
    R.matching.push_back(idx);
  }
  // Homeomorphism check: bijective onto the fibre and order-preserving both ways.
  std::vector<std::size_t> sorted = R.matching;
  std::sort(sorted.begin(), sorted.end());
  R.homeomorphic = sorted == R.fibre;
  if (R.homeomorphic) {
    for (std::size_t i = 0; i < R.matching.size() && R.homeomorphic; ++i)
      for (std::size_t j = 0; j < R.matching.size(); ++j)
        if ((bool)R.residue_space.space.spec[i][j] !=
            (bool)C.space.spec[R.matching[i]][R.matching[j]]) {
          R.homeomorphic = false;
          break;
        }
  }
  return R;
}

SpaceMap induced_on_mspec(const MonoidHom& f, const MSpecResult& XB, const MSpecResult& XA) {
  SpaceMap m;
  for (const auto& Q : XB.primes) {
    std::vector<int> pre;
    for (int a = 0; a < f.source.size; ++a)
      if (Q.contains(f.map[a])) pre.push_back(a);
    m.image.push_back((int)XA.index_of(Ideal{pre}));
  }
  return m;
}

SpaceMap induced_on_cong(const MonoidHom& f, const CongSpaceResult& CB, const CongSpaceResult& CA) {
  SpaceMap m;
  for (const auto& q : CB.primes) m.image.push_back((int)CA.index_of(pullback(f, q)));
  return m;
}

// --- Symbolic tier -----------------------------------------------------------

std::size_t SymbolicMSpecResult::index_of(const std::vector<std::size_t>& I) const {
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i] == I) return i;
  throw error("symbolic_mspec: prime not found");
}

SymbolicMSpecResult symbolic_mspec(const FreeMonomialMonoid& A) {
  SymbolicMSpecResult R;
  R.A = A;
  R.primes = enumerate_homs_to_F1_symbolic(A);  // subsets I of non-inverted vars
  std::size_t n = R.primes.size();
  R.space.names.resize(n);
  R.space.spec.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::string nm = "P_{";
    for (std::size_t k = 0; k < R.primes[i].size(); ++k)
      nm += (k ? "," : "") + A.var_names[R.primes[i][k]];
    R.space.names[i] = nm + "}";
    for (std::size_t j = 0; j < n; ++j)
      R.space.spec[i][j] = std::includes(R.primes[j].begin(), R.primes[j].end(),
                                         R.primes[i].begin(), R.primes[i].end());
  }
  for (std::size_t v = 0; v < A.num_vars; ++v) {
    std::vector<char> U(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      U[i] = !std::binary_search(R.primes[i].begin(), R.primes[i].end(), v);
    R.space.subbasis.emplace_back("U_" + A.var_names[v], std::move(U));
  }
  return R;
}

bool SymbolicCongSpace::member(const SymbolicPrimeCongruence& p,
                               const std::pair<Monomial, Monomial>& ab) const {
  return symbolic_member(ab, p);
}

bool SymbolicCongSpace::in_U(const SymbolicPrimeCongruence& p, const Monomial& a,
                             const Monomial& b) const {
  return !symbolic_member({a, b}, p);
}

bool SymbolicCongSpace::specializes(const SymbolicPrimeCongruence& p,
                                    const SymbolicPrimeCongruence& q) const {
  return symbolic_specializes(p, q);
}

bool SymbolicCongSpace::is_closed_point(const SymbolicPrimeCongruence& p) const {
  return symbolic_is_closed_point(p);
}

bool SymbolicCongSpace::U_nonempty(const Monomial& a, const Monomial& b) const {
  return !(a == b);
}

bool SymbolicCongSpace::U_subset(const Monomial& a, const Monomial& b, const Monomial& c,
                                 const Monomial& d) const {
  // U_{a,b} subset U_{c,d} iff V_{c,d} subset V_{a,b} iff (a,b) in sqrt<(c,d)>.
  SymbolicCongruence gen{ambient, {{c, d}}};
  return symbolic_radical_member(gen, {a, b});
}

SymbolicPrimeCongruence symbolic_sigma(const FreeMonomialMonoid& A,
                                       const std::vector<std::size_t>& I) {
  return SymbolicPrimeCongruence::make(A, I, zero_lattice(A.num_vars - I.size()));
}

SymbolicPrimeCongruence symbolic_tau(const FreeMonomialMonoid& A,
                                     const std::vector<std::size_t>& I) {
  return symbolic_point_of_hom_to_F1(A, I);
}

namespace {

std::string sample_point_name(const SymbolicPrimeCongruence& p) {
  std::string name = "p_{";
  if (p.vanishing.empty()) name += "0";
  for (std::size_t k = 0; k < p.vanishing.size(); ++k)
    name += (k ? "," : "") + p.ambient.var_names[p.vanishing[k]];
  name += ";";
  if (p.lat.basis.empty()) {
    name += "0";
  } else {
    for (std::size_t k = 0; k < p.lat.basis.size(); ++k) {
      name += k ? "," : "";
      name += "(";
      for (std::size_t i = 0; i < p.lat.basis[k].size(); ++i)
        name += (i ? "," : "") + std::to_string(p.lat.basis[k][i]);
      name += ")";
    }
  }
  return name + "}";
}

}  // namespace

SymbolicCongSample symbolic_cong_sample(const FreeMonomialMonoid& A, long long radius,
                                        std::size_t max_points) {
  SymbolicCongSample R;
  R.ambient = A;
  for (const auto& I : enumerate_homs_to_F1_symbolic(A)) {
    std::size_t j = A.num_vars - I.size();
    // All lattices generated by ball vectors, by saturation under sums.
    imat ball;
    ivec v(j, -radius);
    if (j > 0)
      while (true) {
        if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; }))
          ball.push_back(v);
        std::size_t i = 0;
        while (i < j && v[i] == radius) v[i++] = -radius;
        if (i == j) break;
        ++v[i];
      }
    std::vector<Lattice> lats{zero_lattice(j)};
    std::size_t head = 0;
    while (head < lats.size()) {
      Lattice cur = lats[head++];
      for (const auto& b : ball) {
        Lattice next = lattice_sum(cur, hnf(j, {b}));
        if (std::find(lats.begin(), lats.end(), next) == lats.end()) lats.push_back(next);
      }
      if (lats.size() > max_points) throw error("symbolic_cong_sample: point cap exceeded");
    }
    for (auto& L : lats)
      R.points.push_back(SymbolicPrimeCongruence::make(A, I, std::move(L)));
    if (R.points.size() > max_points) throw error("symbolic_cong_sample: point cap exceeded");
  }
  std::size_t n = R.points.size();
  R.space.names.resize(n);
  R.space.spec.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    R.space.names[i] = sample_point_name(R.points[i]);
    for (std::size_t k = 0; k < n; ++k)
      R.space.spec[i][k] = symbolic_specializes(R.points[i], R.points[k]);
  }
  return R;
}

}  // namespace f1cong
