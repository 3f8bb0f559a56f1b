#pragma once

#include <map>
#include <string>

#include "f1cong/corpus.hpp"

namespace f1cong {

struct parse_error : error {
  int line;
  int col;
  parse_error(int line_, int col_, const std::string& what)
      : error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " +
              what),
        line(line_),
        col(col_) {}
};

/// Parsed declarations of a .f1 document. Names are unique across kinds;
/// references resolve at parse time.
struct Document {
  std::vector<std::string> order;  // declaration names in source order
  std::map<std::string, ChartMonoid> monoids;
  std::map<std::string, ChartHom> homs;
  std::map<std::string, std::pair<std::string, std::string>> hom_endpoints;
  std::map<std::string, MonoidScheme> schemes;
  std::map<std::string, SchemeMorphism> morphisms;
  std::map<std::string, ValuationData> valuations;
  std::map<std::string, TestDiagram> diagrams;
  std::vector<std::pair<std::string, std::string>> checks;  // (property, morphism-or-hom)
  std::vector<std::string> lift_requests;

  bool has(const std::string& name) const;
  /// Morphism by name; homs are wrapped through MSpec.
  SchemeMorphism morphism_or_wrapped_hom(const std::string& name) const;
};

Document parse_document(const std::string& text);

// Deterministic serializers (sorted keys / canonical element order).
std::string emit_dot(const FiniteSpace& space, const std::string& name);
std::string monoid_to_json(const ChartMonoid& M);
std::string space_to_json(const FiniteSpace& space);
std::string scheme_to_json(const MonoidScheme& X);
/// Sorted list of class lists.
std::string congruence_to_json(const FiniteMonoid& A, const FiniteCongruence& c);
/// {I, hnf_basis}.
std::string symbolic_prime_to_json(const SymbolicPrimeCongruence& p);

/// Monoid declaration as DSL text; parse(monoid_to_dsl(n, M)) recovers M.
/// Requires lexable element labels (throws otherwise).
std::string monoid_to_dsl(const std::string& name, const ChartMonoid& M);

}  // namespace f1cong
