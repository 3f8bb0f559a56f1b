#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace f1cong {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

using ivec = std::vector<long long>;
using imat = std::vector<ivec>;

/// Subgroup of Z^ambient_rank, stored as a row Hermite normal form basis:
/// pivots positive, rows in pivot-column order, entries above each pivot
/// reduced into [0, pivot). Two Lattice values describe the same subgroup
/// iff their fields are identical.
struct Lattice {
  std::size_t ambient_rank = 0;
  imat basis;  // HNF rows; empty for the zero lattice

  std::size_t rank() const { return basis.size(); }
  bool operator==(const Lattice&) const = default;
};

Lattice hnf(std::size_t ambient_rank, imat rows);
Lattice zero_lattice(std::size_t ambient_rank);
Lattice full_lattice(std::size_t ambient_rank);

bool lattice_member(const ivec& v, const Lattice& L);
Lattice lattice_sum(const Lattice& L1, const Lattice& L2);
bool lattice_equal(const Lattice& L1, const Lattice& L2);
bool lattice_subset(const Lattice& L1, const Lattice& L2);

/// Basis of {x in Z^cols(A) : A x = 0}.
imat integer_kernel(const imat& A, std::size_t cols);

/// {M h : h in L} where M has rows() output coordinates and L.ambient_rank columns.
Lattice lattice_image(const imat& M, const Lattice& L);

/// {d in Z^src_rank : M d in L} for an integer matrix M (rows = L.ambient_rank).
Lattice lattice_preimage(const imat& M, std::size_t src_rank, const Lattice& L);

/// {h in L : h[k] = 0 for all k in kill}, as a lattice in the same ambient.
Lattice lattice_coordinate_section(const Lattice& L, const std::vector<std::size_t>& kill);

/// Restriction of L to the listed coordinates (projection onto them).
Lattice lattice_project(const Lattice& L, const std::vector<std::size_t>& coords);

Lattice lattice_intersection(const Lattice& L1, const Lattice& L2);

/// Whether L contains a nonzero vector with all coordinates >= 0.
/// Exact: a lattice meets the nonnegative orthant nontrivially iff its real
/// span does, and the span is a rational subspace; decided by Fourier-Motzkin
/// elimination over Q.
bool lattice_has_nonneg_nonzero(const Lattice& L);

/// Feasibility over Q of the system { a.x + b >= 0 } (one row per constraint),
/// by Fourier-Motzkin elimination.
bool rational_feasible(const std::vector<std::pair<ivec, long long>>& constraints,
                       std::size_t nvars);

}  // namespace f1cong
