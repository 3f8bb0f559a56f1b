#pragma once

#include <string>
#include <vector>

#include "f1cong/congruence.hpp"

namespace f1cong {

/// Finite T0 space given by its specialization order: spec[i][j] = 1 means
/// point j lies in the closure of point i. Opens are the generization-closed
/// subsets; the named subbasis generates the same topology.
struct FiniteSpace {
  std::vector<std::string> names;
  std::vector<std::vector<char>> spec;
  std::vector<std::pair<std::string, std::vector<char>>> subbasis;

  std::size_t size() const { return names.size(); }
  std::vector<char> closure_of(std::size_t i) const;
  std::vector<char> minimal_open_of(std::size_t i) const;
  bool is_open(const std::vector<char>& set) const;
  bool is_closed(const std::vector<char>& set) const;
  std::vector<char> closure(const std::vector<char>& set) const;
  std::vector<std::size_t> closed_points() const;
  /// Covering relations of the specialization order (Hasse diagram edges).
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
};

/// Map of finite spaces, as an image table on point indices.
struct SpaceMap {
  std::vector<int> image;
  bool is_continuous(const FiniteSpace& src, const FiniteSpace& tgt) const;
  bool is_open_map(const FiniteSpace& src, const FiniteSpace& tgt) const;
  bool is_closed_map(const FiniteSpace& src, const FiniteSpace& tgt) const;
  bool is_injective() const;
  bool is_surjective(const FiniteSpace& tgt) const;
  bool is_embedding(const FiniteSpace& src, const FiniteSpace& tgt) const;
};

struct MSpecResult {
  FiniteMonoid A;
  FiniteSpace space;
  std::vector<Ideal> primes;
  std::size_t index_of(const Ideal& P) const;
};

struct CongSpaceResult {
  FiniteMonoid A;
  FiniteSpace space;
  std::vector<FiniteCongruence> primes;
  std::size_t index_of(const FiniteCongruence& p) const;
};

MSpecResult mspec(const FiniteMonoid& A);
CongSpaceResult cong_space(const FiniteMonoid& A, int cap = 8);

/// pi_A : Cong(A) -> MSpec(A), p |-> nullideal(p).
SpaceMap projection_pi(const MSpecResult& X, const CongSpaceResult& C);
/// sigma(P) = congker(A -> Frac(A_P / P A_P)) and tau(P) = congker(f_P).
SpaceMap section_sigma(const MSpecResult& X, const CongSpaceResult& C);
SpaceMap section_tau(const MSpecResult& X, const CongSpaceResult& C);
FiniteCongruence sigma_point(const FiniteMonoid& A, const Ideal& P);
FiniteCongruence tau_point(const FiniteMonoid& A, const Ideal& P);

/// chi : Hom(A, F1) -> Cong(A) by congruence kernels.
std::vector<std::size_t> chi(const CongSpaceResult& C, const std::vector<MonoidHom>& homs);

FiniteMonoid stalk(const FiniteMonoid& A, const FiniteCongruence& p);
FiniteMonoid residue_field(const FiniteMonoid& A, const FiniteCongruence& p);

struct FibreResult {
  std::vector<std::size_t> fibre;        // indices into the congruence space
  CongSpaceResult residue_space;         // Cong(k(P))
  std::vector<std::size_t> matching;     // residue point -> fibre point index
  bool homeomorphic = false;
};
FibreResult fibre(const FiniteMonoid& A, const Ideal& P, const MSpecResult& X,
                  const CongSpaceResult& C);

/// Pullback maps on spectra and congruence spaces of a finite hom f : A -> B.
SpaceMap induced_on_mspec(const MonoidHom& f, const MSpecResult& XB, const MSpecResult& XA);
SpaceMap induced_on_cong(const MonoidHom& f, const CongSpaceResult& CB, const CongSpaceResult& CA);

// --- Symbolic tier -----------------------------------------------------------

/// MSpec of a free monomial monoid is finite: points P_I for subsets I of the
/// non-inverted variables.
struct SymbolicMSpecResult {
  FreeMonomialMonoid A;
  FiniteSpace space;
  std::vector<std::vector<std::size_t>> primes;  // the subsets I
  std::size_t index_of(const std::vector<std::size_t>& I) const;
};
SymbolicMSpecResult symbolic_mspec(const FreeMonomialMonoid& A);

/// Queries on the (infinite) congruence space of a free monomial monoid.
/// Points are never enumerated; everything is a decision procedure.
struct SymbolicCongSpace {
  FreeMonomialMonoid ambient;

  bool member(const SymbolicPrimeCongruence& p, const std::pair<Monomial, Monomial>& ab) const;
  bool in_U(const SymbolicPrimeCongruence& p, const Monomial& a, const Monomial& b) const;
  bool specializes(const SymbolicPrimeCongruence& p, const SymbolicPrimeCongruence& q) const;
  bool is_closed_point(const SymbolicPrimeCongruence& p) const;
  /// U_{a,b} nonempty iff a != b as elements (the trivial congruence misses (a,b)).
  bool U_nonempty(const Monomial& a, const Monomial& b) const;
  /// U_{a,b} subset of U_{c,d}, i.e. every prime containing (c,d) contains (a,b).
  bool U_subset(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& d) const;
};

SymbolicPrimeCongruence symbolic_sigma(const FreeMonomialMonoid& A,
                                       const std::vector<std::size_t>& I);
SymbolicPrimeCongruence symbolic_tau(const FreeMonomialMonoid& A,
                                     const std::vector<std::size_t>& I);

/// Bounded sample of the (infinite) symbolic congruence space: all points
/// p_{I,H} whose lattice is generated by vectors with entries in
/// [-radius, radius], with the specialization order. Renders the labelled
/// fragment of the space (the whole space for radius large enough only when
/// the space is finite).
struct SymbolicCongSample {
  FreeMonomialMonoid ambient;
  std::vector<SymbolicPrimeCongruence> points;
  FiniteSpace space;
};
SymbolicCongSample symbolic_cong_sample(const FreeMonomialMonoid& A, long long radius = 1,
                                        std::size_t max_points = 4096);

}  // namespace f1cong
