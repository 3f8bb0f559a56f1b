#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f1cong/zlinalg.hpp"

namespace f1cong {

/// Element of a free monomial monoid: the absorbing zero, or an exponent vector.
struct Monomial {
  bool zero = true;
  ivec exps;  // empty when zero

  static Monomial make_zero() { return Monomial{}; }
  static Monomial one(std::size_t n) { return Monomial{false, ivec(n, 0)}; }
  static Monomial var(std::size_t n, std::size_t i, long long e = 1) {
    Monomial m = one(n);
    m.exps[i] = e;
    return m;
  }
  bool is_one() const;
  bool operator==(const Monomial&) const = default;
};

/// F1[t_1..t_n], optionally with a subset of the variables inverted.
struct FreeMonomialMonoid {
  std::size_t num_vars = 0;
  std::vector<bool> inverted;
  std::vector<std::string> var_names;

  static FreeMonomialMonoid make(std::size_t n, std::vector<std::size_t> inv = {},
                                 std::vector<std::string> names = {});
  /// Pointed group Z^n u {0}: all variables inverted.
  static FreeMonomialMonoid group(std::size_t n, std::vector<std::string> names = {});

  bool valid_element(const Monomial& m) const;
  Monomial mul(const Monomial& a, const Monomial& b) const;
  Monomial pow(const Monomial& a, long long k) const;
  bool is_unit(const Monomial& m) const;
  bool is_group() const;
  std::vector<std::size_t> non_inverted_vars() const;

  /// Localization at a nonzero monomial: inverts the variables in its support.
  FreeMonomialMonoid localize_at(const Monomial& s) const;

  std::string show(const Monomial& m) const;
  bool operator==(const FreeMonomialMonoid&) const = default;
};

}  // namespace f1cong
