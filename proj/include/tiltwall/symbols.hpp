#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltwall/plane.hpp"

namespace tiltwall {

enum class SymbolKind { J_at, J_gieseker, PT, const_tors, placeholder_C };
const char* name_of(SymbolKind k);

enum class ChamberKind { large_volume, below, above };
const char* name_of(ChamberKind k);

struct Chamber {
  ChamberKind kind = ChamberKind::large_volume;
  std::optional<PlaneLine> line;

  static Chamber large_volume() { return {}; }
  static Chamber below(const PlaneLine& l) { return {ChamberKind::below, l}; }
  static Chamber above(const PlaneLine& l) { return {ChamberKind::above, l}; }
  std::string str() const;
  bool operator==(const Chamber& o) const { return kind == o.kind && line == o.line; }
};

// A formal counting invariant. Identity is the canonical key.
struct InvariantSymbol {
  SymbolKind kind = SymbolKind::J_at;
  std::vector<KClass> classes;  // J_at / J_gieseker: one class; placeholder_C: the argument classes
  Chamber chamber;              // J_at only
  std::optional<Rational> witness_b;  // J_at: a b with ch1^b != 0, so the slope is finite
  Rational beta_h = 0, chi = 0;       // PT only
  std::vector<std::vector<Rational>> pairing;  // placeholder_C: Euler pairing matrix of the arguments

  static InvariantSymbol J_at(const KClass& v, const Chamber& ch, std::optional<Rational> witness_b = std::nullopt);
  static InvariantSymbol J_gieseker(const KClass& v);
  static InvariantSymbol PT(const Rational& beta_h, const Rational& chi);
  static InvariantSymbol const_tors();
  static InvariantSymbol placeholder_C(const std::vector<KClass>& args, const ThreefoldModel& X);

  std::string key() const;
  bool operator==(const InvariantSymbol& o) const { return key() == o.key(); }
  bool operator<(const InvariantSymbol& o) const { return key() < o.key(); }
};

// coef * product of factors (factors kept sorted by key).
struct Term {
  Rational coef = 1;
  std::vector<InvariantSymbol> factors;
  std::string monomial_key() const;
};

struct Relation {
  InvariantSymbol left;
  std::vector<Term> right;
  std::vector<std::string> provenance;

  // Merge equal monomials, drop zero coefficients, sort monomials.
  void normalize();
  std::string str() const;
};

Term make_term(const Rational& coef, std::vector<InvariantSymbol> factors);
// Replace every occurrence of sym in rel.right by the polynomial `by`.
Relation substitute(const Relation& rel, const InvariantSymbol& sym, const std::vector<Term>& by, std::size_t max_terms);

}  // namespace tiltwall
