#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "f1cong/monoid.hpp"

namespace f1cong {

/// Multiplicative equivalence relation on a finite monoid, stored as the
/// canonical class assignment cls[a] = min element of the class of a.
struct FiniteCongruence {
  int n = 0;
  std::vector<int> cls;

  bool related(int a, int b) const { return cls[a] == cls[b]; }
  bool operator==(const FiniteCongruence&) const = default;
  bool operator<(const FiniteCongruence& o) const { return cls < o.cls; }
};

FiniteCongruence trivial_congruence(const FiniteMonoid& A);
FiniteCongruence full_congruence(const FiniteMonoid& A);
bool is_multiplicative(const FiniteMonoid& A, const FiniteCongruence& c);

/// Least congruence containing the given pairs (union-find + fixpoint).
FiniteCongruence generate(const FiniteMonoid& A, const std::vector<std::pair<int, int>>& pairs);

QuotientResult quotient(const FiniteMonoid& A, const FiniteCongruence& c);
FiniteCongruence congker(const MonoidHom& f);

bool is_prime(const FiniteMonoid& A, const FiniteCongruence& c);
bool is_weak_prime(const FiniteMonoid& A, const FiniteCongruence& c);
/// Whether the trivial congruence is prime (the introduction's notion of
/// "strongly reduced"; differs from nil(A) = triv on {0,e,1}).
bool is_triv_prime(const FiniteMonoid& A);

Ideal nullideal(const FiniteMonoid& A, const FiniteCongruence& c);

FiniteCongruence pushforward(const MonoidHom& f, const FiniteCongruence& c);
FiniteCongruence pullback(const MonoidHom& f, const FiniteCongruence& d);

/// Congruence union (join) and intersection (meet) in the congruence lattice.
FiniteCongruence join(const FiniteMonoid& A, const FiniteCongruence& c, const FiniteCongruence& d);
FiniteCongruence meet(const FiniteCongruence& c, const FiniteCongruence& d);
bool contains(const FiniteCongruence& c, const FiniteCongruence& d);  // d subset of c

/// S^{-1}c on S^{-1}A, by the defining formula (ts'a, tsa') in c.
FiniteCongruence localize_congruence(const FiniteMonoid& A, const FiniteCongruence& c,
                                     const LocalizationResult& loc, const std::vector<int>& S);

FiniteCongruence radical(const FiniteMonoid& A, const FiniteCongruence& c);
Ideal radical_ideal(const FiniteMonoid& A, const Ideal& I);
Ideal nil_ideal(const FiniteMonoid& A);              // Nil(A)
FiniteCongruence strong_nilradical(const FiniteMonoid& A);  // nil(A)
QuotientResult red(const FiniteMonoid& A);
QuotientResult sred(const FiniteMonoid& A);
bool is_strongly_reduced(const FiniteMonoid& A);

std::vector<FiniteCongruence> enumerate_congruences(const FiniteMonoid& A, int cap = 8);
std::vector<FiniteCongruence> enumerate_prime_congruences(const FiniteMonoid& A, int cap = 8);
std::vector<FiniteCongruence> enumerate_weak_prime_congruences(const FiniteMonoid& A, int cap = 8);

std::string congruence_name(const FiniteMonoid& A, const FiniteCongruence& c);

// --- Symbolic tier -----------------------------------------------------------

/// Prime congruence p_{I,H} on a free monomial monoid: the variables in I are
/// identified with 0, and two monomials supported away from I are identified
/// iff their exponent difference restricted to J = complement(I) lies in H.
struct SymbolicPrimeCongruence {
  FreeMonomialMonoid ambient;
  std::vector<std::size_t> vanishing;  // sorted I, subset of the non-inverted variables
  Lattice lat;                         // subgroup of Z^J, coordinates in increasing var order

  static SymbolicPrimeCongruence make(FreeMonomialMonoid ambient,
                                      std::vector<std::size_t> vanishing, Lattice lat);
  std::vector<std::size_t> cofree_vars() const;  // J, sorted
  bool operator==(const SymbolicPrimeCongruence&) const = default;
};

/// Congruence kernel of the hom "variables in I to 0, rest to 1".
SymbolicPrimeCongruence symbolic_point_of_hom_to_F1(const FreeMonomialMonoid& A,
                                                    const std::vector<std::size_t>& I);
SymbolicPrimeCongruence symbolic_trivial(const FreeMonomialMonoid& A);

bool symbolic_member(const std::pair<Monomial, Monomial>& pair,
                     const SymbolicPrimeCongruence& p);
/// p subset of q, i.e. q is a specialization of p.
bool symbolic_specializes(const SymbolicPrimeCongruence& p, const SymbolicPrimeCongruence& q);
bool symbolic_is_closed_point(const SymbolicPrimeCongruence& p);

/// Finitely generated congruence on a free monomial monoid, kept as its
/// generating pair list. Membership in the generated congruence itself is not
/// provided; membership in its radical (= intersection of the primes above
/// it) is decidable and is what vanishing-set comparisons need.
struct SymbolicCongruence {
  FreeMonomialMonoid ambient;
  std::vector<std::pair<Monomial, Monomial>> gens;
};

/// Minimal lattice H with p_{I,H} containing all generators, or nullopt when
/// no prime with vanishing set I contains them.
std::optional<Lattice> symbolic_minimal_lattice_over(const SymbolicCongruence& c,
                                                     const std::vector<std::size_t>& I);
/// (a,b) in sqrt(<gens>), i.e. in every prime containing the generators.
bool symbolic_radical_member(const SymbolicCongruence& c,
                             const std::pair<Monomial, Monomial>& pair);
/// V_c subset of V_d (as subsets of the congruence space).
bool symbolic_vanishing_subset(const SymbolicCongruence& c, const SymbolicCongruence& d);
bool symbolic_vanishing_equal(const SymbolicCongruence& c, const SymbolicCongruence& d);
/// V_c = whole space, i.e. the generators lie in every prime congruence.
bool symbolic_vanishing_is_whole(const SymbolicCongruence& c);
bool symbolic_prime_contains(const SymbolicPrimeCongruence& p, const SymbolicCongruence& c);

/// Congruence kernel of a monomial hom out of a free monomial monoid, in
/// closed form: Z is the set of variables mapped to 0 and ker the exponent
/// kernel of the remaining variables (coordinates in increasing var order
/// over the complement of Z).
struct SymbolicHomKernel {
  FreeMonomialMonoid ambient;
  std::vector<std::size_t> zero_vars;  // sorted Z
  Lattice ker;
};

/// Minimal lattice H with p_{I,H} containing the hom kernel, or nullopt.
/// Requires Z subset of I; the extra condition is that no kernel vector has a
/// one-sided restriction to I \ Z.
std::optional<Lattice> symbolic_kernel_minimal_lattice_over(const SymbolicHomKernel& k,
                                                            const std::vector<std::size_t>& I);
bool symbolic_kernel_radical_member(const SymbolicHomKernel& k,
                                    const std::pair<Monomial, Monomial>& pair);
bool symbolic_prime_contains_kernel(const SymbolicPrimeCongruence& p, const SymbolicHomKernel& k);
/// V_{congker} subset of V_{<gens>} and conversely.
bool symbolic_kernel_vanishing_subset_of(const SymbolicHomKernel& k, const SymbolicCongruence& d);
bool symbolic_vanishing_subset_of_kernel(const SymbolicCongruence& c, const SymbolicHomKernel& k);
bool symbolic_kernel_vanishing_is_whole(const SymbolicHomKernel& k);

}  // namespace f1cong
