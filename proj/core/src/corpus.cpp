#include "f1cong/corpus.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace f1cong {

std::vector<FiniteMonoid> enumerate_monoids(int size) {
  if (size < 2) return {};
  if (size == 2) return {FiniteMonoid::f1()};
  // Elements: 0, 1, a2..a_{size-1}; free products are those among the a_i.
  int n = size;
  std::vector<std::pair<int, int>> free_pairs;
  for (int a = 2; a < n; ++a)
    for (int b = a; b < n; ++b) free_pairs.emplace_back(a, b);
  std::vector<FiniteMonoid> out;
  std::set<std::vector<int>> seen;  // canonical forms
  std::vector<int> table(n * n, -1);
  auto set_products = [&](const std::vector<int>& choice) {
    for (int x = 0; x < n; ++x) {
      table[0 * n + x] = table[x * n + 0] = 0;
      table[1 * n + x] = table[x * n + 1] = x;
    }
    for (std::size_t k = 0; k < free_pairs.size(); ++k) {
      auto [a, b] = free_pairs[k];
      table[a * n + b] = table[b * n + a] = choice[k];
    }
  };
  auto associative = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) return false;
    return true;
  };
  auto canonical_form = [&]() {
    // Minimum over relabelings of the non-0/1 elements.
    std::vector<int> perm(n);
    std::vector<int> rest;
    for (int i = 2; i < n; ++i) rest.push_back(i);
    std::vector<int> best;
    std::sort(rest.begin(), rest.end());
    do {
      perm[0] = 0;
      perm[1] = 1;
      for (std::size_t i = 0; i < rest.size(); ++i) perm[2 + i] = rest[i];
      // perm maps new index -> old index; build the relabeled table.
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[perm[i]] = i;
      std::vector<int> t2(n * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t2[a * n + b] = inv[table[perm[a] * n + perm[b]]];
      if (best.empty() || t2 < best) best = t2;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
  };
  std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t k,
                                                                std::vector<int>& choice) {
    if (k == free_pairs.size()) {
      set_products(choice);
      if (!associative()) return;
      std::vector<int> canon = canonical_form();
      if (!seen.insert(canon).second) return;
      std::vector<std::string> labels(n);
      labels[0] = "0";
      labels[1] = "1";
      for (int i = 2; i < n; ++i) labels[i] = std::string(1, (char)('a' + i - 2));
      out.push_back(FiniteMonoid::make(n, 0, 1, canon, labels));
      return;
    }
    for (int v = 0; v < n; ++v) {
      choice[k] = v;
      rec(k + 1, choice);
    }
  };
  std::vector<int> choice(free_pairs.size(), 0);
  rec(0, choice);
  return out;
}

std::vector<FiniteMonoid> corpus_monoids(int max_size) {
  std::vector<FiniteMonoid> out;
  out.push_back(FiniteMonoid::f1());
  for (int s = 3; s <= max_size; ++s)
    for (auto& A : enumerate_monoids(s)) out.push_back(std::move(A));
  return out;
}

std::vector<std::vector<int>> multiplicative_subsets(const FiniteMonoid& A) {
  std::vector<int> rest;
  for (int a = 0; a < A.size; ++a)
    if (a != A.one) rest.push_back(a);
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << rest.size()); ++mask) {
    std::vector<int> S{A.one};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1) S.push_back(rest[i]);
    std::sort(S.begin(), S.end());
    bool closed = true;
    for (int s : S)
      for (int t : S)
        if (!std::binary_search(S.begin(), S.end(), A.mul(s, t))) closed = false;
    if (closed) out.push_back(std::move(S));
  }
  return out;
}

FiniteMonoid monoid_f1() { return FiniteMonoid::f1(); }

FiniteMonoid monoid_idempotent() {
  // 0, 1, e with e*e = e.
  return FiniteMonoid::make(3, 0, 1, {0, 0, 0, 0, 1, 2, 0, 2, 2}, {"0", "1", "e"});
}

FiniteMonoid monoid_nilpotent() {
  // 0, 1, t with t*t = 0.
  return FiniteMonoid::make(3, 0, 1, {0, 0, 0, 0, 1, 2, 0, 2, 0}, {"0", "1", "t"});
}

FiniteMonoid monoid_mu2() {
  // 0, 1, u with u*u = 1.
  return FiniteMonoid::make(3, 0, 1, {0, 0, 0, 0, 1, 2, 0, 2, 1}, {"0", "1", "u"});
}

FiniteMonoid truncated_line(int k) {
  // 0, 1, t, .., t^k with t^{k+1} = t^k.
  int n = k + 2;
  std::vector<int> table(n * n);
  std::vector<std::string> labels(n);
  labels[0] = "0";
  labels[1] = "1";
  for (int i = 2; i < n; ++i) labels[i] = i == 2 ? "t" : "t^" + std::to_string(i - 1);
  auto idx = [&](int deg) { return deg == 0 ? 1 : 1 + std::min(deg, k); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == 0 || b == 0) {
        table[a * n + b] = 0;
        continue;
      }
      int da = a - 1, db = b - 1;
      table[a * n + b] = idx(da + db);
    }
  return FiniteMonoid::make(n, 0, 1, table, labels);
}

FiniteMonoid truncated_line_nil(int k) {
  // 0, 1, t, .., t^{k-1} with t^k = 0.
  int n = k + 1;
  std::vector<int> table(n * n);
  std::vector<std::string> labels(n);
  labels[0] = "0";
  labels[1] = "1";
  for (int i = 2; i < n; ++i) labels[i] = i == 2 ? "t" : "t^" + std::to_string(i - 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == 0 || b == 0) {
        table[a * n + b] = 0;
        continue;
      }
      int d = (a - 1) + (b - 1);
      table[a * n + b] = d >= k ? 0 : d + 1;
    }
  return FiniteMonoid::make(n, 0, 1, table, labels);
}

FiniteMonoid crossed_axes_model() {
  // 0, 1, x, x2, y, y2 with xy = 0 and x^3 = x^2, y^3 = y^2.
  int n = 6;
  std::vector<std::string> labels{"0", "1", "x", "x2", "y", "y2"};
  auto mul = [&](int a, int b) -> int {
    if (a == 0 || b == 0) return 0;
    if (a == 1) return b;
    if (b == 1) return a;
    bool ax = a <= 3, bx = b <= 3;
    if (ax != bx) return 0;  // xy = 0
    int da = a - 1, db = b - 1;  // degree 1 or 2
    if (ax) return 1 + std::min(da + db, 2);
    da = a - 3;
    db = b - 3;
    return 3 + std::min(da + db, 2);
  };
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = mul(a, b);
  return FiniteMonoid::make(n, 0, 1, table, labels);
}

SchemeMorphism a1_to_point() {
  MonoidScheme Y = affine_space(1);
  MonoidScheme X = MonoidScheme::affine(FiniteMonoid::f1(), "pt");
  // F1 -> F1[t]: 0 -> 0, 1 -> 1.
  std::vector<ChartElem> m;
  m.emplace_back(Monomial::make_zero());
  m.emplace_back(Monomial::one(1));
  return SchemeMorphism::make(Y, X, {0}, {ChartHom{X.charts[0], Y.charts[0], m}});
}

SchemeMorphism p1_to_point() {
  MonoidScheme Y = p1_scheme();
  MonoidScheme X = MonoidScheme::affine(FiniteMonoid::f1(), "pt");
  std::vector<ChartHom> homs;
  for (int i = 0; i < 2; ++i) {
    std::vector<ChartElem> m;
    m.emplace_back(Monomial::make_zero());
    m.emplace_back(Monomial::one(1));
    homs.push_back(ChartHom{X.charts[0], Y.charts[i], m});
  }
  return SchemeMorphism::make(Y, X, {0, 0}, std::move(homs));
}

SchemeMorphism gm_into_a1() {
  MonoidScheme Y = gm_scheme();
  MonoidScheme X = affine_space(1);
  std::vector<ChartElem> m;
  m.emplace_back(Monomial::var(1, 0));
  return SchemeMorphism::make(Y, X, {0}, {ChartHom{X.charts[0], Y.charts[0], m}});
}

SchemeMorphism diagonal_a1_into_a2() {
  MonoidScheme Y = affine_space(1);
  MonoidScheme X = affine_space(2);
  std::vector<ChartElem> m;
  m.emplace_back(Monomial::var(1, 0));
  m.emplace_back(Monomial::var(1, 0));
  return SchemeMorphism::make(Y, X, {0}, {ChartHom{X.charts[0], Y.charts[0], m}});
}

SchemeMorphism locally_closed_axes_example() {
  FiniteMonoid M = crossed_axes_model();
  MonoidScheme X = MonoidScheme::affine(M, "XY");
  MonoidScheme Y = MonoidScheme::disjoint_union(
      {FiniteMonoid::f1(), FiniteMonoid::f1()}, {"Px", "Py"});
  // x -> 1, y -> 0 on the first point; x -> 0, y -> 1 on the second.
  std::vector<int> m1{0, 1, 1, 1, 0, 0};
  std::vector<int> m2{0, 1, 0, 0, 1, 1};
  std::vector<ChartHom> homs;
  homs.push_back(ChartHom::from_finite(MonoidHom::make(M, FiniteMonoid::f1(), m1)));
  homs.push_back(ChartHom::from_finite(MonoidHom::make(M, FiniteMonoid::f1(), m2)));
  return SchemeMorphism::make(Y, X, {0, 0}, std::move(homs));
}

namespace {

SchemeMorphism quotient_morphism(const FiniteMonoid& A, const FiniteCongruence& c,
                                 const std::string& name) {
  QuotientResult q = quotient(A, c);
  MonoidScheme X = MonoidScheme::affine(A, name);
  MonoidScheme Y = MonoidScheme::affine(q.monoid, name + "/c");
  return SchemeMorphism::make(Y, X, {0}, {ChartHom::from_finite(q.projection)});
}

SchemeMorphism localization_morphism(const FiniteMonoid& A, int h, const std::string& name) {
  LocalizationResult loc = localize_at_element(A, h);
  MonoidScheme X = MonoidScheme::affine(A, name);
  MonoidScheme Y = MonoidScheme::affine(loc.monoid, name + "_h");
  return SchemeMorphism::make(Y, X, {0}, {ChartHom::from_finite(loc.map)});
}

SchemeMorphism fold_morphism(const FiniteMonoid& A, const std::string& name) {
  MonoidHom to_f1 = enumerate_homs_to_F1(A).front();
  MonoidHom from_f1{FiniteMonoid::f1(), A, {A.zero, A.one}};
  TensorResult T = tensor(from_f1, from_f1);
  std::vector<int> fold;
  for (auto [a, b] : T.reps) fold.push_back(A.mul(a, b));
  (void)to_f1;
  MonoidScheme X = MonoidScheme::affine(T.monoid, name + "(x)" + name);
  MonoidScheme Y = MonoidScheme::affine(A, name);
  return SchemeMorphism::make(Y, X, {0},
                              {ChartHom::from_finite(MonoidHom{T.monoid, A, fold})});
}

}  // namespace

std::vector<NamedMorphism> morphism_suite() {
  std::vector<NamedMorphism> out;
  auto add = [&](std::string name, SchemeMorphism phi, bool ci) {
    out.push_back(NamedMorphism{std::move(name), std::move(phi), ci});
  };
  // Closed immersions: quotient maps.
  for (const FiniteMonoid& A :
       {monoid_idempotent(), monoid_nilpotent(), monoid_mu2(), truncated_line(2)}) {
    auto primes = enumerate_prime_congruences(A);
    int k = 0;
    for (const auto& p : primes) {
      add("quot:" + congruence_name(A, p), quotient_morphism(A, p, "A"), true);
      if (++k == 2) break;
    }
    add("quot:nil", quotient_morphism(A, strong_nilradical(A), "A"), true);
  }
  add("identity:idem",
      identity_morphism(MonoidScheme::affine(monoid_idempotent(), "A")), true);
  add("f1-into-idem(e->0)",
      quotient_morphism(monoid_idempotent(),
                        generate(monoid_idempotent(), {{2, 0}}), "E"),
      true);
  // Principal localizations. Finite monoid localizations invert h via a power
  // of h, so the section maps are surjective and these are closed immersions
  // as well (the congruence space sees the collapsed locus as closed).
  add("loc:idem-at-e", localization_morphism(monoid_idempotent(), 2, "E"), true);
  add("loc:trunc2-at-t", localization_morphism(truncated_line(2), 2, "L2"), true);
  add("loc:mu2-at-u", localization_morphism(monoid_mu2(), 2, "U"), true);  // u is a unit: iso
  // Folds (diagonals of affines over F1): closed immersions.
  add("fold:f1", fold_morphism(monoid_f1(), "F1"), true);
  add("fold:idem", fold_morphism(monoid_idempotent(), "E"), true);
  add("fold:nilp", fold_morphism(monoid_nilpotent(), "N"), true);
  // Structure maps and open immersions on the symbolic tier.
  add("gm-into-a1", gm_into_a1(), false);
  add("delta:a1-into-a2", diagonal_a1_into_a2(), true);
  add("a1-to-point", a1_to_point(), false);
  add("p1-to-point", p1_to_point(), false);
  // The locally closed example: image closed, not a vanishing set, not affine.
  add("axes:two-points", locally_closed_axes_example(), false);
  // A disjoint union mapping isomorphically chart-by-chart is not affine
  // over a point unless trivial.
  {
    MonoidScheme Y = MonoidScheme::disjoint_union(
        {FiniteMonoid::f1(), FiniteMonoid::f1()}, {"P", "Q"});
    MonoidScheme X = MonoidScheme::affine(FiniteMonoid::f1(), "pt");
    std::vector<ChartHom> homs{ChartHom::identity(ChartMonoid{FiniteMonoid::f1()}),
                               ChartHom::identity(ChartMonoid{FiniteMonoid::f1()})};
    add("two-points-to-point", SchemeMorphism::make(Y, X, {0, 0}, std::move(homs)), false);
  }
  // Two points into the affine line (t -> 0 and t -> 1).
  {
    MonoidScheme Y = MonoidScheme::disjoint_union(
        {FiniteMonoid::f1(), FiniteMonoid::f1()}, {"P0", "P1"});
    MonoidScheme X = affine_space(1);
    // F1[t] -> F1 on each point.
    std::vector<ChartElem> h0, h1;
    h0.emplace_back(ChartElem{0});  // t -> 0
    h1.emplace_back(ChartElem{1});  // t -> 1
    std::vector<ChartHom> homs{ChartHom{X.charts[0], Y.charts[0], h0},
                               ChartHom{X.charts[0], Y.charts[1], h1}};
    add("two-points-into-a1", SchemeMorphism::make(Y, X, {0, 0}, std::move(homs)), false);
  }
  return out;
}

std::vector<NamedScheme> scheme_corpus() {
  std::vector<NamedScheme> out;
  for (const FiniteMonoid& A :
       {monoid_f1(), monoid_idempotent(), monoid_nilpotent(), monoid_mu2(), truncated_line(2),
        truncated_line_nil(2), truncated_line_nil(3), crossed_axes_model()})
    out.push_back(NamedScheme{"affine:" + std::to_string(A.size), MonoidScheme::affine(A, "U")});
  out.push_back(NamedScheme{
      "disjoint", MonoidScheme::disjoint_union({monoid_nilpotent(), monoid_idempotent()},
                                               {"U", "V"})});
  // A finite projective-line model: two truncated lines glued along Gm-models.
  {
    FiniteMonoid L = truncated_line(2);
    LocalizationResult loc = localize_at_element(L, 2);
    // L[t^-1] is F1 x mu-ish; glue two copies via the identity.
    std::map<std::pair<int, int>, Overlap> overlaps;
    ChartLocalization l0 = chart_localize(ChartMonoid{L}, ChartElem{2});
    overlaps[{0, 1}] =
        Overlap{ChartElem{2}, ChartElem{2}, ChartHom::identity(l0.monoid)};
    out.push_back(NamedScheme{
        "p1-model", MonoidScheme::glue({ChartMonoid{L}, ChartMonoid{L}}, {"C0", "C1"},
                                       std::move(overlaps))});
    (void)loc;
  }
  // A nilpotent chart glued to nothing plus a nilpotent disjoint union.
  out.push_back(NamedScheme{
      "nil-pair", MonoidScheme::disjoint_union({truncated_line_nil(2), monoid_f1()},
                                               {"N", "pt"})});
  return out;
}

}  // namespace f1cong
