#pragma once

#include <map>
#include <optional>

#include "f1cong/chart.hpp"

namespace f1cong {

/// Gluing datum between two charts: localize the source chart at s_src, the
/// target chart at s_tgt, and identify through the monoid iso.
struct Overlap {
  ChartElem s_src;
  ChartElem s_tgt;
  ChartHom iso;  // chart_src[s_src^-1] -> chart_tgt[s_tgt^-1]
};

/// Monoid scheme as gluing data of affine charts along principal opens.
struct MonoidScheme {
  std::vector<ChartMonoid> charts;
  std::vector<std::string> chart_names;
  std::map<std::pair<int, int>, Overlap> overlaps;

  static MonoidScheme affine(ChartMonoid M, std::string name = "U0");
  static MonoidScheme disjoint_union(std::vector<ChartMonoid> charts,
                                     std::vector<std::string> names = {});
  /// Validates localizations, iso invertibility and the cocycle condition;
  /// missing inverse directions are synthesized.
  static MonoidScheme glue(std::vector<ChartMonoid> charts, std::vector<std::string> names,
                           std::map<std::pair<int, int>, Overlap> overlaps);

  bool all_finite() const;
  const Overlap* overlap(int i, int j) const;
  std::size_t num_charts() const { return charts.size(); }
};

/// The affine line, plane, multiplicative group and projective line over F1.
MonoidScheme affine_space(std::size_t n);
MonoidScheme gm_scheme();
MonoidScheme p1_scheme();
MonoidScheme pn_scheme(std::size_t n);  // P^n via the standard toric gluing

/// Point set of a monoid scheme (always finite: chart spectra are finite).
struct SchemePoints {
  FiniteSpace space;
  std::vector<ChartMSpec> chart_specs;
  std::vector<std::vector<int>> local_to_global;  // [chart][local] -> global
  std::vector<std::vector<int>> global_to_local;  // [global][chart] -> local or -1
};
SchemePoints scheme_points(const MonoidScheme& X);

/// Glued congruence space (finite tier only).
struct SchemeCongPoints {
  FiniteSpace space;
  std::vector<CongSpaceResult> chart_spaces;
  std::vector<std::vector<int>> local_to_global;
  std::vector<std::vector<int>> global_to_local;
};
SchemeCongPoints scheme_cong_points(const MonoidScheme& X, int cap = 8);

/// pi_X for a finite-tier scheme, chartwise p -> nullideal(p).
SpaceMap scheme_projection_pi(const MonoidScheme& X, const SchemeCongPoints& C,
                              const SchemePoints& P);

struct SchemeMorphism {
  MonoidScheme source;
  MonoidScheme target;
  std::vector<int> assign;     // source chart i maps into target chart assign[i]
  std::vector<ChartHom> homs;  // homs[i] : Gamma(target chart) -> Gamma(source chart)

  static SchemeMorphism make(MonoidScheme source, MonoidScheme target, std::vector<int> assign,
                             std::vector<ChartHom> homs);
};

SchemeMorphism identity_morphism(const MonoidScheme& X);
SchemeMorphism compose(const SchemeMorphism& g, const SchemeMorphism& f);
/// MSpec applied to a hom: the induced morphism MSpec(B) -> MSpec(A).
SchemeMorphism mspec_morphism(const ChartHom& f);

SpaceMap morphism_point_map(const SchemeMorphism& phi, const SchemePoints& srcP,
                            const SchemePoints& tgtP);
/// Map on glued congruence spaces (finite tier).
SpaceMap morphism_cong_map(const SchemeMorphism& phi, const SchemeCongPoints& srcC,
                           const SchemeCongPoints& tgtC);

struct FiberProductResult {
  MonoidScheme product;
  SchemeMorphism proj1;
  SchemeMorphism proj2;
  std::vector<std::pair<int, int>> chart_pairs;
  std::vector<TensorResult> tensors;  // per finite chart pair (empty slots otherwise)
  // For symbolic chart pairs: provenance of each product variable as
  // (side, original variable index).
  std::vector<std::vector<std::pair<int, std::size_t>>> var_origins;
};
/// Fiber product over an affine base. Symbolic charts are supported over F1
/// and, in the single-chart case, over a symbolic base whose variable images
/// eliminate (an inverted-variable substitution); finite glued sources must
/// have empty overlaps (disjoint unions).
FiberProductResult fiber_product(const SchemeMorphism& phi, const SchemeMorphism& psi,
                                 std::size_t pair_cap = 10000);

struct DiagonalResult {
  FiberProductResult square;  // Y x_X Y
  SchemeMorphism delta;       // Y -> Y x_X Y
};
DiagonalResult diagonal(const SchemeMorphism& phi);

bool is_affine_morphism(const SchemeMorphism& phi);
bool is_quasi_compact(const SchemeMorphism& phi);
bool is_quasi_separated(const SchemeMorphism& phi);
bool is_finite_type_morphism(const SchemeMorphism& phi);

/// Global sections of an open subset W (finite tier), with evaluation data.
struct SectionsResult {
  FiniteMonoid monoid;                  // Gamma(W)
  std::vector<std::size_t> points;      // W as sorted global point ids
  std::vector<FiniteMonoid> stalks;     // stalk model per point of W
  std::vector<std::vector<int>> eval;   // eval[section][pos] = stalk element
};
SectionsResult sections_over(const MonoidScheme& X, const SchemePoints& P,
                             const std::vector<char>& W);

/// Stalk of a finite-tier scheme at a global point, modelled in a fixed chart.
struct StalkModel {
  FiniteMonoid monoid;
  int chart;       // chart the model is computed in
  MonoidHom from_chart;  // localization map Gamma(chart) -> stalk
};
StalkModel scheme_stalk(const MonoidScheme& X, const SchemePoints& P, std::size_t x);

/// Induced hom L -> D for a localization iota : A -> L, from u : A -> D that
/// inverts enough of A (fraction search; throws if some element has none).
MonoidHom localize_hom_through(const FiniteMonoid& A, const MonoidHom& iota,
                               const FiniteMonoid& L, const MonoidHom& u);

/// Gamma(chart) -> stalk model of x, for any chart containing x.
MonoidHom stalk_map_from_chart(const MonoidScheme& X, const SchemePoints& P,
                               const StalkModel& st, std::size_t x, int chart);

/// Restriction stalk_x -> stalk_y for y in minopen(x).
MonoidHom stalk_restriction(const MonoidScheme& X, const SchemePoints& P, const StalkModel& sx,
                            std::size_t x, const StalkModel& sy, std::size_t y);

}  // namespace f1cong
