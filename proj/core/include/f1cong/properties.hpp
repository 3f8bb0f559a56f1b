#pragma once

#include "f1cong/scheme.hpp"

namespace f1cong {

/// Vanishing set of a finite-tier scheme: one radical congruence per chart.
struct VanishingSet {
  std::vector<FiniteCongruence> chart_congs;
};

/// Points of V (per-chart primes containing the chart congruence), as a
/// subset of the glued congruence space.
std::vector<char> vanishing_points(const SchemeCongPoints& C, const VanishingSet& V);
/// Per-chart compatibility of the stored congruences under overlap
/// localization (the quasi-coherence certificate for vanishing data).
bool vanishing_set_compatible(const MonoidScheme& X, const VanishingSet& V);

/// Least vanishing superset of Z, by chartwise intersection to a fixpoint.
VanishingSet vanishing_closure(const MonoidScheme& X, const SchemeCongPoints& C,
                               const std::vector<char>& Z);
std::vector<char> vanishing_closure_points(const MonoidScheme& X, const SchemeCongPoints& C,
                                           const std::vector<char>& Z);
bool is_vanishing_set(const MonoidScheme& X, const SchemeCongPoints& C,
                      const std::vector<char>& Z);
bool is_strictly_dense(const MonoidScheme& X, const SchemeCongPoints& C,
                       const std::vector<char>& Z);

/// Congruence kernel sheaf of a quasi-compact finite-tier morphism, as its
/// chartwise data, with the quasi-coherence certificate verified.
struct CongruenceSheaf {
  std::vector<FiniteCongruence> chart_congs;  // one per target chart
  bool quasi_coherent = false;
};
CongruenceSheaf congruence_sheaf_of(const SchemeMorphism& phi);

/// Congker of an affine symbolic morphism in closed form.
SymbolicHomKernel symbolic_congker(const ChartHom& h);

struct ClosedImmersionReport {
  bool affine = false;
  bool sections_surjective = false;
  bool quasi_compact = true;
  bool embedding = false;
  bool image_vanishing = false;
  bool verdict_def = false;
  bool verdict_topological = false;
  std::string note;
};
ClosedImmersionReport closed_immersion_report(const SchemeMorphism& phi);
bool is_closed_immersion_def(const SchemeMorphism& phi);
bool is_closed_immersion_topological(const SchemeMorphism& phi);

bool is_dominant(const SchemeMorphism& phi);

/// Finite tier: image of every point closure is specialization-closed.
bool is_closed_map(const SchemeMorphism& phi);

struct SeparatedReport {
  bool quasi_separated = true;
  bool diagonal_closed_immersion = false;  // definitional
  bool diagonal_image_closed = false;      // topological
  bool verdict = false;
};
/// Evaluates both characterizations; throws on disagreement (it would
/// indicate an implementation bug, not a property of the input).
SeparatedReport separated_report(const SchemeMorphism& phi);
bool is_separated(const SchemeMorphism& phi);

struct SredSchemeResult {
  MonoidScheme scheme;    // X^sred
  SchemeMorphism into;    // X^sred -> X
};
SredSchemeResult sred_scheme(const MonoidScheme& X);
bool scheme_is_strongly_reduced(const MonoidScheme& X);

/// Stalkwise map of a finite-tier morphism: stalk at phi(y) -> stalk at y.
MonoidHom morphism_stalk_map(const SchemeMorphism& phi, const SchemePoints& srcP,
                             const SchemePoints& tgtP, std::size_t y,
                             const StalkModel& target_stalk, const StalkModel& source_stalk);

}  // namespace f1cong
