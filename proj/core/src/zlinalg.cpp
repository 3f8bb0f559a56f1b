#include "f1cong/zlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace f1cong {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

void check_rows(std::size_t ambient_rank, const imat& rows) {
  for (const auto& r : rows)
    if (r.size() != ambient_rank) throw error("hnf: row length does not match ambient rank");
}

}  // namespace

Lattice hnf(std::size_t ambient_rank, imat rows) {
  check_rows(ambient_rank, rows);
  std::size_t r = 0;
  for (std::size_t col = 0; col < ambient_rank && r < rows.size(); ++col) {
    // Euclid on the rows until at most one has a nonzero entry in this column.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() ||
                                  std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[r][col];
        for (std::size_t k = col; k < ambient_rank; ++k) rows[i][k] -= q * rows[r][k];
        if (rows[i][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      long long q = floor_div(rows[i][col], rows[r][col]);
      if (q != 0)
        for (std::size_t k = 0; k < ambient_rank; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return Lattice{ambient_rank, std::move(rows)};
}

Lattice zero_lattice(std::size_t ambient_rank) { return Lattice{ambient_rank, {}}; }

Lattice full_lattice(std::size_t ambient_rank) {
  imat rows(ambient_rank, ivec(ambient_rank, 0));
  for (std::size_t i = 0; i < ambient_rank; ++i) rows[i][i] = 1;
  return Lattice{ambient_rank, std::move(rows)};
}

bool lattice_member(const ivec& v, const Lattice& L) {
  if (v.size() != L.ambient_rank) throw error("lattice_member: dimension mismatch");
  ivec w = v;
  for (const auto& row : L.basis) {
    std::size_t p = 0;
    while (p < L.ambient_rank && row[p] == 0) ++p;
    // Rows below have zero entries at column p, so the coefficient is forced.
    if (w[p] % row[p] != 0) return false;
    long long c = w[p] / row[p];
    for (std::size_t k = 0; k < L.ambient_rank; ++k) w[k] -= c * row[k];
  }
  return std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
}

Lattice lattice_sum(const Lattice& L1, const Lattice& L2) {
  if (L1.ambient_rank != L2.ambient_rank) throw error("lattice_sum: dimension mismatch");
  imat rows = L1.basis;
  rows.insert(rows.end(), L2.basis.begin(), L2.basis.end());
  return hnf(L1.ambient_rank, std::move(rows));
}

bool lattice_equal(const Lattice& L1, const Lattice& L2) { return L1 == L2; }

bool lattice_subset(const Lattice& L1, const Lattice& L2) {
  if (L1.ambient_rank != L2.ambient_rank) throw error("lattice_subset: dimension mismatch");
  for (const auto& row : L1.basis)
    if (!lattice_member(row, L2)) return false;
  return true;
}

imat integer_kernel(const imat& A, std::size_t cols) {
  // Row-reduce [A^T | I]; rows whose A^T part is zero give the kernel.
  std::size_t nrows = A.size();
  imat aug(cols, ivec(nrows + cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < nrows; ++j) aug[i][j] = A[j].at(i);
    aug[i][nrows + i] = 1;
  }
  Lattice h = hnf(nrows + cols, std::move(aug));
  imat ker;
  for (const auto& row : h.basis) {
    bool zero_head = std::all_of(row.begin(), row.begin() + nrows, [](long long x) { return x == 0; });
    if (zero_head) ker.emplace_back(row.begin() + nrows, row.end());
  }
  return ker;
}

Lattice lattice_image(const imat& M, const Lattice& L) {
  std::size_t out = M.size();
  imat rows;
  for (const auto& b : L.basis) {
    ivec img(out, 0);
    for (std::size_t i = 0; i < out; ++i) {
      if (M[i].size() != L.ambient_rank) throw error("lattice_image: matrix shape mismatch");
      for (std::size_t j = 0; j < L.ambient_rank; ++j) img[i] += M[i][j] * b[j];
    }
    rows.push_back(std::move(img));
  }
  return hnf(out, std::move(rows));
}

Lattice lattice_preimage(const imat& M, std::size_t src_rank, const Lattice& L) {
  if (M.size() != L.ambient_rank) throw error("lattice_preimage: matrix shape mismatch");
  // Solve M d = B^T c, i.e. [M | -B^T] (d;c) = 0; keep the d part.
  std::size_t k = L.basis.size();
  imat sys(L.ambient_rank, ivec(src_rank + k, 0));
  for (std::size_t i = 0; i < L.ambient_rank; ++i) {
    for (std::size_t j = 0; j < src_rank; ++j) sys[i][j] = M[i].at(j);
    for (std::size_t j = 0; j < k; ++j) sys[i][src_rank + j] = -L.basis[j][i];
  }
  imat ker = integer_kernel(sys, src_rank + k);
  imat rows;
  for (const auto& x : ker) rows.emplace_back(x.begin(), x.begin() + src_rank);
  return hnf(src_rank, std::move(rows));
}

Lattice lattice_coordinate_section(const Lattice& L, const std::vector<std::size_t>& kill) {
  if (kill.empty()) return L;
  std::vector<char> iskill(L.ambient_rank, 0);
  for (auto k : kill) iskill.at(k) = 1;
  // HNF with the killed columns ordered first; rows with pivot outside the
  // killed block are exactly the vectors vanishing there.
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < L.ambient_rank; ++k)
    if (iskill[k]) order.push_back(k);
  std::size_t nkill = order.size();
  for (std::size_t k = 0; k < L.ambient_rank; ++k)
    if (!iskill[k]) order.push_back(k);
  imat perm;
  for (const auto& b : L.basis) {
    ivec row(L.ambient_rank);
    for (std::size_t k = 0; k < L.ambient_rank; ++k) row[k] = b[order[k]];
    perm.push_back(std::move(row));
  }
  Lattice h = hnf(L.ambient_rank, std::move(perm));
  imat rows;
  for (const auto& b : h.basis) {
    bool zero_head = std::all_of(b.begin(), b.begin() + nkill, [](long long x) { return x == 0; });
    if (!zero_head) continue;
    ivec row(L.ambient_rank, 0);
    for (std::size_t k = 0; k < L.ambient_rank; ++k) row[order[k]] = b[k];
    rows.push_back(std::move(row));
  }
  return hnf(L.ambient_rank, std::move(rows));
}

Lattice lattice_project(const Lattice& L, const std::vector<std::size_t>& coords) {
  imat rows;
  for (const auto& b : L.basis) {
    ivec row(coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k) row[k] = b.at(coords[k]);
    rows.push_back(std::move(row));
  }
  return hnf(coords.size(), std::move(rows));
}

Lattice lattice_intersection(const Lattice& L1, const Lattice& L2) {
  if (L1.ambient_rank != L2.ambient_rank) throw error("lattice_intersection: dimension mismatch");
  // x = B1^T c1 = B2^T c2: kernel of [B1^T | -B2^T], mapped through B1^T.
  std::size_t k1 = L1.basis.size(), k2 = L2.basis.size(), m = L1.ambient_rank;
  imat sys(m, ivec(k1 + k2, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k1; ++j) sys[i][j] = L1.basis[j][i];
    for (std::size_t j = 0; j < k2; ++j) sys[i][k1 + j] = -L2.basis[j][i];
  }
  imat ker = integer_kernel(sys, k1 + k2);
  imat rows;
  for (const auto& c : ker) {
    ivec x(m, 0);
    for (std::size_t j = 0; j < k1; ++j)
      for (std::size_t i = 0; i < m; ++i) x[i] += c[j] * L1.basis[j][i];
    rows.push_back(std::move(x));
  }
  return hnf(m, std::move(rows));
}

namespace {

struct Rat {
  long long n = 0, d = 1;
  void norm() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(std::llabs(n), d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
};

Rat rat(long long n, long long d = 1) {
  Rat r{n, d};
  r.norm();
  return r;
}

Rat add(Rat a, Rat b) { return rat(a.n * b.d + b.n * a.d, a.d * b.d); }
Rat mul(Rat a, Rat b) { return rat(a.n * b.n, a.d * b.d); }
bool is_zero(Rat a) { return a.n == 0; }
bool is_neg(Rat a) { return a.n < 0; }

// One linear constraint sum_i coeff[i]*x_i + cst >= 0.
struct Constraint {
  std::vector<Rat> coeff;
  Rat cst;
};

// Fourier-Motzkin feasibility over Q.
bool fm_feasible(std::vector<Constraint> cs, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<Constraint> pos, neg, rest;
    for (auto& c : cs) {
      if (is_zero(c.coeff[v])) rest.push_back(std::move(c));
      else if (is_neg(c.coeff[v])) neg.push_back(std::move(c));
      else pos.push_back(std::move(c));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // Scale so the v-coefficients cancel: |n_v| * p + p_v * n.
        Rat a = rat(-n.coeff[v].n, n.coeff[v].d);  // positive
        Rat b = p.coeff[v];                        // positive
        Constraint c;
        c.coeff.resize(nvars);
        for (std::size_t k = 0; k < nvars; ++k)
          c.coeff[k] = add(mul(a, p.coeff[k]), mul(b, n.coeff[k]));
        c.cst = add(mul(a, p.cst), mul(b, n.cst));
        rest.push_back(std::move(c));
      }
    cs = std::move(rest);
    // Drop tautologies and duplicates, fail fast on constant contradictions.
    std::vector<Constraint> kept;
    std::vector<std::vector<long long>> seen;
    for (auto& c : cs) {
      bool allzero = true;
      for (std::size_t k = 0; k < nvars; ++k)
        if (!is_zero(c.coeff[k])) { allzero = false; break; }
      if (allzero) {
        if (is_neg(c.cst)) return false;
        continue;
      }
      long long lcm = c.cst.d;
      for (std::size_t k = 0; k < nvars; ++k) lcm = lcm / std::gcd(lcm, c.coeff[k].d) * c.coeff[k].d;
      std::vector<long long> key(nvars + 1);
      for (std::size_t k = 0; k < nvars; ++k) key[k] = c.coeff[k].n * (lcm / c.coeff[k].d);
      key[nvars] = c.cst.n * (lcm / c.cst.d);
      long long g = 0;
      for (auto x : key) g = std::gcd(g, std::llabs(x));
      if (g > 1)
        for (auto& x : key) x /= g;
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      kept.push_back(std::move(c));
    }
    cs = std::move(kept);
  }
  for (const auto& c : cs)
    if (is_neg(c.cst)) return false;
  return true;
}

}  // namespace

bool rational_feasible(const std::vector<std::pair<ivec, long long>>& constraints,
                       std::size_t nvars) {
  std::vector<Constraint> cs;
  for (const auto& [a, b] : constraints) {
    Constraint c;
    c.coeff.resize(nvars);
    for (std::size_t i = 0; i < nvars; ++i) c.coeff[i] = rat(a.at(i));
    c.cst = rat(b);
    cs.push_back(std::move(c));
  }
  return fm_feasible(std::move(cs), nvars);
}

bool lattice_has_nonneg_nonzero(const Lattice& L) {
  if (L.basis.empty()) return false;
  std::size_t r = L.basis.size(), m = L.ambient_rank;
  for (std::size_t j = 0; j < m; ++j) {
    // Feasibility of: (c.B)_k >= 0 for all k, and (c.B)_j >= 1.
    std::vector<Constraint> cs;
    for (std::size_t k = 0; k < m; ++k) {
      Constraint c;
      c.coeff.resize(r);
      for (std::size_t i = 0; i < r; ++i) c.coeff[i] = rat(L.basis[i][k]);
      c.cst = rat(0);
      cs.push_back(std::move(c));
      if (k == j) {
        Constraint d = cs.back();
        d.cst = rat(-1);
        cs.push_back(std::move(d));
      }
    }
    if (fm_feasible(std::move(cs), r)) return true;
  }
  return false;
}

}  // namespace f1cong
