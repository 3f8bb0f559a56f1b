#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f1cong/monomial.hpp"
#include "f1cong/zlinalg.hpp"

namespace f1cong {

/// Commutative pointed monoid given by a full multiplication table.
///
/// Elements are indices 0..size-1 with a fixed total order; all canonical
/// forms downstream (partitions, ideals) use min-index representatives.
/// The degenerate monoid {0} (where 0 = 1) can arise from quotients and
/// localizations; it is representable and flagged by degenerate(), but
/// make() rejects it as construction input.
struct FiniteMonoid {
  int size = 0;
  int zero = 0;
  int one = 0;
  std::vector<int> table;  // size*size, row-major
  std::vector<std::string> labels;

  static FiniteMonoid make(int size, int zero, int one, std::vector<int> table,
                           std::vector<std::string> labels = {});
  static FiniteMonoid degenerate_point();
  static FiniteMonoid f1();  // {0, 1}

  int mul(int a, int b) const { return table[a * size + b]; }
  int power(int a, long long n) const;
  bool degenerate() const { return size == 1; }
  bool is_unit(int a) const;
  std::vector<int> units() const;
  std::vector<int> maximal_ideal() const;  // complement of the units, plus 0
  bool is_integral() const;
  bool is_zero_divisor_free() const;
  bool is_pointed_group() const;
  const std::string& label(int a) const { return labels[a]; }
  void validate(bool allow_degenerate) const;
  bool operator==(const FiniteMonoid&) const = default;
};

/// Morphism between finite pointed monoids; map[a] is the image of a.
struct MonoidHom {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<int> map;

  static MonoidHom make(FiniteMonoid source, FiniteMonoid target, std::vector<int> map);
  static MonoidHom identity(const FiniteMonoid& A);
  int operator()(int a) const { return map[a]; }
  bool is_injective() const;
  bool is_surjective() const;
  void validate() const;
};

MonoidHom compose(const MonoidHom& g, const MonoidHom& f);  // g after f

/// Ideal of a finite monoid, as a sorted element list containing 0.
struct Ideal {
  std::vector<int> elems;
  bool contains(int a) const;
};

Ideal make_ideal(const FiniteMonoid& A, std::vector<int> gens);
bool is_ideal(const FiniteMonoid& A, const std::vector<int>& elems);
bool is_prime_ideal(const FiniteMonoid& A, const std::vector<int>& elems);
std::vector<Ideal> enumerate_prime_ideals(const FiniteMonoid& A);

struct QuotientResult {
  FiniteMonoid monoid;
  MonoidHom projection;
};

/// Rees quotient A/I: I collapses to 0, everything else keeps its identity.
QuotientResult quotient_by_ideal(const FiniteMonoid& A, const Ideal& I);

struct LocalizationResult {
  FiniteMonoid monoid;
  MonoidHom map;  // iota_S : A -> S^{-1}A
};

/// S^{-1}A for a subset S containing 1. S is closed under products first;
/// if the closure contains 0 the result is the degenerate monoid {0}.
LocalizationResult localize(const FiniteMonoid& A, std::vector<int> S);
LocalizationResult localize_at_element(const FiniteMonoid& A, int h);
LocalizationResult localize_at_prime(const FiniteMonoid& A, const Ideal& P);

/// Frac A = (A\{0})^{-1} A, for A without zero divisors.
LocalizationResult frac(const FiniteMonoid& A);
/// Image of A in Frac A.
QuotientResult integral_quotient(const FiniteMonoid& A);

struct TensorResult {
  FiniteMonoid monoid;                   // A (x)_C B
  MonoidHom from_left;                   // A -> A (x) B
  MonoidHom from_right;                  // B -> A (x) B
  std::vector<std::pair<int, int>> reps; // representative (a, b) per element
};

/// Pushout A (x)_C B of f : C -> A and g : C -> B.
TensorResult tensor(const MonoidHom& f, const MonoidHom& g, std::size_t pair_cap = 10000);

/// The mediating hom T -> D for a cocone (hA, hB) agreeing on C, if it exists.
std::optional<MonoidHom> mediating_hom(const TensorResult& T, const MonoidHom& hA,
                                       const MonoidHom& hB);

std::vector<MonoidHom> enumerate_homs_to_F1(const FiniteMonoid& A);
std::vector<MonoidHom> enumerate_homs(const FiniteMonoid& A, const FiniteMonoid& B);

/// Homs A -> F1 for a free monomial monoid: each is "send the variables in I
/// to 0, the rest to 1" for a subset I of the non-inverted variables.
std::vector<std::vector<std::size_t>> enumerate_homs_to_F1_symbolic(const FreeMonomialMonoid& A);

bool is_finite_type(const MonoidHom& f);

/// An isomorphism A -> B respecting 0 and 1, if one exists (backtracking).
std::optional<std::vector<int>> find_isomorphism(const FiniteMonoid& A, const FiniteMonoid& B);

}  // namespace f1cong
