#pragma once

#include "f1cong/valuation.hpp"

namespace f1cong {

/// All commutative pointed monoids of the given size, up to isomorphism,
/// in a deterministic order.
std::vector<FiniteMonoid> enumerate_monoids(int size);

/// Monoids of size 2..max_size (the generated corpus).
std::vector<FiniteMonoid> corpus_monoids(int max_size = 5);

/// All multiplicative subsets containing 1.
std::vector<std::vector<int>> multiplicative_subsets(const FiniteMonoid& A);

/// Named small monoids used throughout the tests.
FiniteMonoid monoid_f1();
FiniteMonoid monoid_idempotent();       // {0, e, 1}, e^2 = e
FiniteMonoid monoid_nilpotent();        // {0, t, 1}, t^2 = 0
FiniteMonoid monoid_mu2();              // {0, u, 1}, u^2 = 1
FiniteMonoid truncated_line(int k);     // F1[t] / (t^{k+1} = t^k), idempotent truncation
FiniteMonoid truncated_line_nil(int k); // F1[t] / (t^k = 0)
FiniteMonoid crossed_axes_model();      // F1[x,y]/(xy), idempotent-truncated at 2

/// Morphism suite for the dual-characterization criteria (>= 20 entries).
struct NamedMorphism {
  std::string name;
  SchemeMorphism phi;
  bool expect_closed_immersion;
};
std::vector<NamedMorphism> morphism_suite();

/// Finite-tier scheme corpus for strong-reduction checks.
struct NamedScheme {
  std::string name;
  MonoidScheme X;
};
std::vector<NamedScheme> scheme_corpus();

/// The paragraph-7 locally closed example: two F1 points through the
/// punctured axes into the crossed-axes model.
SchemeMorphism locally_closed_axes_example();

/// A1 -> MSpec(F1) and P1 -> MSpec(F1).
SchemeMorphism a1_to_point();
SchemeMorphism p1_to_point();
SchemeMorphism gm_into_a1();
SchemeMorphism diagonal_a1_into_a2();  // the fold-induced immersion A1 -> A2

}  // namespace f1cong
