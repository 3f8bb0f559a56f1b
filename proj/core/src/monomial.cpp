#include "f1cong/monomial.hpp"

#include <algorithm>

namespace f1cong {

bool Monomial::is_one() const {
  return !zero && std::all_of(exps.begin(), exps.end(), [](long long e) { return e == 0; });
}

FreeMonomialMonoid FreeMonomialMonoid::make(std::size_t n, std::vector<std::size_t> inv,
                                            std::vector<std::string> names) {
  FreeMonomialMonoid M;
  M.num_vars = n;
  M.inverted.assign(n, false);
  for (auto i : inv) {
    if (i >= n) throw error("free monomial monoid: inverted variable out of range");
    M.inverted[i] = true;
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i + 1));
  } else if (names.size() != n) {
    throw error("free monomial monoid: wrong number of variable names");
  }
  M.var_names = std::move(names);
  return M;
}

FreeMonomialMonoid FreeMonomialMonoid::group(std::size_t n, std::vector<std::string> names) {
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = i;
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i + 1));
  return make(n, std::move(inv), std::move(names));
}

bool FreeMonomialMonoid::valid_element(const Monomial& m) const {
  if (m.zero) return m.exps.empty();
  if (m.exps.size() != num_vars) return false;
  for (std::size_t i = 0; i < num_vars; ++i)
    if (!inverted[i] && m.exps[i] < 0) return false;
  return true;
}

Monomial FreeMonomialMonoid::mul(const Monomial& a, const Monomial& b) const {
  if (a.zero || b.zero) return Monomial::make_zero();
  Monomial c = a;
  for (std::size_t i = 0; i < num_vars; ++i) c.exps[i] += b.exps[i];
  return c;
}

Monomial FreeMonomialMonoid::pow(const Monomial& a, long long k) const {
  if (a.zero) return k == 0 ? Monomial::one(num_vars) : Monomial::make_zero();
  Monomial c = Monomial::one(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) c.exps[i] = a.exps[i] * k;
  return c;
}

bool FreeMonomialMonoid::is_unit(const Monomial& m) const {
  if (m.zero) return false;
  for (std::size_t i = 0; i < num_vars; ++i)
    if (m.exps[i] != 0 && !inverted[i]) return false;
  return true;
}

bool FreeMonomialMonoid::is_group() const {
  return std::all_of(inverted.begin(), inverted.end(), [](bool b) { return b; });
}

std::vector<std::size_t> FreeMonomialMonoid::non_inverted_vars() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_vars; ++i)
    if (!inverted[i]) out.push_back(i);
  return out;
}

FreeMonomialMonoid FreeMonomialMonoid::localize_at(const Monomial& s) const {
  if (s.zero) throw error("localize_at: cannot invert zero in a free monomial monoid");
  FreeMonomialMonoid M = *this;
  for (std::size_t i = 0; i < num_vars; ++i)
    if (s.exps[i] != 0) M.inverted[i] = true;
  return M;
}

std::string FreeMonomialMonoid::show(const Monomial& m) const {
  if (m.zero) return "0";
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_names[i];
    if (m.exps[i] != 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out;
}

}  // namespace f1cong
