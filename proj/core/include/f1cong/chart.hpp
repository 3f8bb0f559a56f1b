#pragma once

#include <optional>
#include <variant>

#include "f1cong/congruence.hpp"
#include "f1cong/spectra.hpp"

namespace f1cong {

/// Chart coordinate monoids come in two tiers.
using ChartMonoid = std::variant<FiniteMonoid, FreeMonomialMonoid>;
/// Element of a chart monoid: an index (finite tier) or a monomial.
using ChartElem = std::variant<int, Monomial>;

bool chart_is_finite(const ChartMonoid& M);
bool chart_is_degenerate(const ChartMonoid& M);
ChartElem chart_zero(const ChartMonoid& M);
ChartElem chart_one(const ChartMonoid& M);
ChartElem chart_mul(const ChartMonoid& M, const ChartElem& a, const ChartElem& b);
bool chart_elem_is_zero(const ChartMonoid& M, const ChartElem& a);
bool chart_is_unit(const ChartMonoid& M, const ChartElem& a);
ChartElem chart_unit_inverse(const ChartMonoid& M, const ChartElem& a);
std::string chart_show(const ChartMonoid& M, const ChartElem& a);
bool chart_monoid_equal(const ChartMonoid& A, const ChartMonoid& B);
/// Monoid generators: every element (finite) or the variables and the
/// inverses of the inverted variables (symbolic).
std::vector<ChartElem> chart_generators(const ChartMonoid& M);

/// Hom between chart monoids. For a finite source, map[a] is the image of
/// element a; for a symbolic source, map[i] is the image of variable i and
/// elements map multiplicatively (inverted variables need unit images).
struct ChartHom {
  ChartMonoid source;
  ChartMonoid target;
  std::vector<ChartElem> map;

  static ChartHom make(ChartMonoid source, ChartMonoid target, std::vector<ChartElem> map);
  static ChartHom identity(const ChartMonoid& M);
  static ChartHom from_finite(const MonoidHom& f);
  ChartElem operator()(const ChartElem& a) const;
  void validate() const;
};

ChartHom chart_compose(const ChartHom& g, const ChartHom& f);
bool chart_hom_equal(const ChartHom& f, const ChartHom& g);
std::optional<ChartHom> chart_hom_inverse(const ChartHom& f);
bool chart_hom_injective(const ChartHom& f);

struct ChartLocalization {
  ChartMonoid monoid;
  ChartHom map;  // iota : M -> M[s^-1]
};
ChartLocalization chart_localize(const ChartMonoid& M, const ChartElem& s);

/// Extension of h : M -> N to M[s^-1] -> N; exists iff h(s) is a unit.
std::optional<ChartHom> chart_extend_to_localization(const ChartHom& h,
                                                     const ChartLocalization& loc,
                                                     const ChartElem& s);

/// Surjectivity of a chart hom. Symbolic-to-symbolic targets reduce to
/// nonnegative integer feasibility; search up to `radius`, refute by rational
/// infeasibility, and throw if genuinely undecided at the radius.
bool chart_hom_surjective(const ChartHom& h, int radius = 12);

/// Prime spectrum of a chart monoid (always finite).
struct ChartMSpec {
  FiniteSpace space;
  bool symbolic = false;
  std::vector<Ideal> fin_primes;
  std::vector<std::vector<std::size_t>> sym_primes;  // vanishing-variable sets

  std::size_t count() const { return space.size(); }
};
ChartMSpec chart_mspec(const ChartMonoid& M);

/// Index of the preimage prime under h of the target prime q.
std::size_t chart_prime_pullback(const ChartHom& h, const ChartMSpec& src_spec,
                                 const ChartMSpec& tgt_spec, std::size_t q);
bool chart_prime_contains(const ChartMonoid& M, const ChartMSpec& spec, std::size_t p,
                          const ChartElem& a);

}  // namespace f1cong
