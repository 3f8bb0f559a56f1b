#pragma once

#include "f1cong/properties.hpp"

namespace f1cong {

/// Valuation monoid given intensionally: the pointed group G = Z^r u {0}
/// (written multiplicatively on generators g1..gr) and a k x r integer matrix
/// v; A_v = {0} u { g^e : v.e >=_lex 0 }. Totality of the lex order makes A_v
/// a valuation monoid with Frac(A_v) = G.
struct ValuationData {
  std::size_t group_rank = 1;
  std::size_t value_rank = 1;
  imat v;  // value_rank x group_rank

  static ValuationData make(std::size_t group_rank, std::size_t value_rank, imat v);
  FreeMonomialMonoid group() const;          // G
  bool in_Av(const Monomial& m) const;       // m = 0 or v.exps >=_lex 0
  bool unit_in_Av(const Monomial& m) const;  // v.exps = 0
};

bool lex_geq_zero(const ivec& w);

/// Finite tier: exhaustive alpha-or-alpha^{-1} test inside Frac(A).
bool is_valuation_monoid(const FiniteMonoid& A);

/// Finite tier: the image of A is maximal among the submonoids of Frac(A)
/// that it maps into dominantly (the characterization of valuation monoids
/// by domination), checked by enumerating the submonoids of Frac(A).
bool is_maximal_for_domination(const FiniteMonoid& A);

/// f : A -> B is an integral extension: injective, and every b has a power
/// in the image.
bool is_integral_extension(const MonoidHom& f);

/// Spot check of the valuation-monoid property of A_v on a ball of exponents.
bool valuation_data_spot_check(const ValuationData& val, int radius = 5);

/// f^{-1}(M_B) = M_A for a finite hom.
bool dominates(const MonoidHom& f);

/// The inclusion A_v -> G is dominant iff A_v is a group (v = 0).
bool valuation_inclusion_dominates(const ValuationData& val);

/// Monomial hom between two valuation-data monoids, given on the group
/// generators; bounded-exponent check that preimages of units are units.
bool valuation_hom_dominates(const ValuationData& src, const ValuationData& tgt, const imat& M,
                             int radius = 5);

/// Test diagram: eta : MSpec(G) -> Y through one chart; nu : MSpec(A_v) -> X
/// through one chart (a hom into G with image inside A_v); outer square
/// commutes.
struct TestDiagram {
  ValuationData val;
  SchemeMorphism phi;
  int eta_chart = 0;
  ChartHom eta;  // Gamma(Y chart) -> G
  int nu_chart = 0;
  ChartHom nu;  // Gamma(X chart) -> G, image in A_v
};

/// Builds the diagram with nu forced by commutativity (A_v -> G is injective);
/// nullopt when the forced nu does not land in A_v.
std::optional<TestDiagram> make_test_diagram(const ValuationData& val, const SchemeMorphism& phi,
                                             int eta_chart, ChartHom eta);

struct Lift {
  int chart = 0;
  ChartHom hom;  // Gamma(Y chart) -> G, image in A_v
};

/// All lifts of a test diagram. The candidate through a chart V is forced:
/// A_v -> G is injective, so lift . iota = eta pins the hom; it is accepted
/// iff its image lies in A_v and the lower triangle commutes. Duplicates
/// across charts are identified.
std::vector<Lift> solve_lifts(const TestDiagram& d);

struct FamilyOptions {
  std::size_t max_group_rank = 2;
  std::size_t max_value_rank = 2;
  long long exponent_radius = 5;
  long long matrix_entry_bound = 1;
  std::size_t max_diagrams = 200000;
};

std::vector<TestDiagram> generate_test_diagrams(const SchemeMorphism& phi,
                                                const FamilyOptions& opts);

struct ValuativeReport {
  bool prerequisites_ok = true;
  std::string prerequisite_note;
  std::size_t diagrams_checked = 0;
  bool counterexample_found = false;
  std::optional<TestDiagram> witness;
  std::size_t witness_lift_count = 0;
};

/// Runs the supplied diagrams plus an auto-generated family. The reports
/// claim refutation (a concrete diagram) or bounded evidence; never a proof
/// of the universally quantified direction.
ValuativeReport check_universally_closed(const SchemeMorphism& phi,
                                         const std::vector<TestDiagram>& extra,
                                         const FamilyOptions& opts);
ValuativeReport check_separated_valuative(const SchemeMorphism& phi,
                                          const std::vector<TestDiagram>& extra,
                                          const FamilyOptions& opts);
ValuativeReport check_proper(const SchemeMorphism& phi, const std::vector<TestDiagram>& extra,
                             const FamilyOptions& opts);

}  // namespace f1cong
