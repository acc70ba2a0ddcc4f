#include "tiltwall/symbols.hpp"

#include <algorithm>
#include <map>

#include "tiltwall/errors.hpp"

namespace tiltwall {

const char* name_of(SymbolKind k) {
  switch (k) {
    case SymbolKind::J_at: return "J_at";
    case SymbolKind::J_gieseker: return "J_gieseker";
    case SymbolKind::PT: return "PT";
    case SymbolKind::const_tors: return "const_tors";
    case SymbolKind::placeholder_C: return "placeholder_C";
  }
  return "?";
}

const char* name_of(ChamberKind k) {
  switch (k) {
    case ChamberKind::large_volume: return "large_volume";
    case ChamberKind::below: return "below";
    case ChamberKind::above: return "above";
  }
  return "?";
}

std::string Chamber::str() const {
  std::string s = name_of(kind);
  if (line) s += line->str();
  return s;
}

InvariantSymbol InvariantSymbol::J_at(const KClass& v, const Chamber& ch, std::optional<Rational> witness_b) {
  InvariantSymbol s;
  s.kind = SymbolKind::J_at;
  s.classes = {v};
  s.chamber = ch;
  if (witness_b && v.c - *witness_b * Rational(v.r) == 0)
    throw Error(ErrorKind::InvalidArgument, "J_at witness has infinite slope for " + v.str());
  s.witness_b = witness_b;
  return s;
}

InvariantSymbol InvariantSymbol::J_gieseker(const KClass& v) {
  InvariantSymbol s;
  s.kind = SymbolKind::J_gieseker;
  s.classes = {v};
  return s;
}

InvariantSymbol InvariantSymbol::PT(const Rational& beta_h, const Rational& chi) {
  InvariantSymbol s;
  s.kind = SymbolKind::PT;
  s.beta_h = beta_h;
  s.chi = chi;
  return s;
}

InvariantSymbol InvariantSymbol::const_tors() {
  InvariantSymbol s;
  s.kind = SymbolKind::const_tors;
  return s;
}

InvariantSymbol InvariantSymbol::placeholder_C(const std::vector<KClass>& args, const ThreefoldModel& X) {
  InvariantSymbol s;
  s.kind = SymbolKind::placeholder_C;
  s.classes = args;
  for (const auto& a : args) {
    std::vector<Rational> row;
    for (const auto& b : args) row.push_back(euler_pair(a, b, X));
    s.pairing.push_back(row);
  }
  return s;
}

std::string InvariantSymbol::key() const {
  switch (kind) {
    case SymbolKind::J_at: return "J[" + chamber.str() + "]" + classes.at(0).str();
    case SymbolKind::J_gieseker: return "J_G" + classes.at(0).str();
    case SymbolKind::PT: return "PT(" + to_string(beta_h) + ", " + to_string(chi) + ")";
    case SymbolKind::const_tors: return "T";
    case SymbolKind::placeholder_C: {
      std::string s = "C(";
      for (size_t i = 0; i < classes.size(); ++i) s += (i ? ", " : "") + classes[i].str();
      return s + ")";
    }
  }
  return "?";
}

std::string Term::monomial_key() const {
  std::string s;
  for (const auto& f : factors) s += f.key() + "*";
  return s;
}

Term make_term(const Rational& coef, std::vector<InvariantSymbol> factors) {
  std::sort(factors.begin(), factors.end());
  return {coef, std::move(factors)};
}

void Relation::normalize() {
  std::map<std::string, Term> merged;
  for (auto& t : right) {
    Term tt = make_term(t.coef, t.factors);
    auto key = tt.monomial_key();
    auto it = merged.find(key);
    if (it == merged.end()) merged.emplace(key, std::move(tt));
    else it->second.coef += tt.coef;
  }
  right.clear();
  for (auto& [k, t] : merged)
    if (t.coef != 0) right.push_back(std::move(t));
}

std::string Relation::str() const {
  std::string s = left.key() + " =";
  if (right.empty()) return s + " 0";
  for (size_t i = 0; i < right.size(); ++i) {
    const Term& t = right[i];
    s += i == 0 ? (t.coef < 0 ? " -" : " ") : (t.coef < 0 ? " - " : " + ");
    s += to_string(abs(t.coef));
    for (const auto& f : t.factors) s += "*" + f.key();
  }
  return s;
}

Relation substitute(const Relation& rel, const InvariantSymbol& sym, const std::vector<Term>& by, std::size_t max_terms) {
  Relation out = rel;
  out.right.clear();
  for (const auto& t : rel.right) {
    std::vector<Term> acc{make_term(t.coef, {})};
    for (const auto& f : t.factors) {
      std::vector<Term> next;
      if (f == sym) {
        for (const auto& a : acc)
          for (const auto& b : by) {
            auto fs = a.factors;
            fs.insert(fs.end(), b.factors.begin(), b.factors.end());
            next.push_back(make_term(a.coef * b.coef, fs));
          }
      } else {
        for (auto a : acc) {
          a.factors.push_back(f);
          next.push_back(std::move(a));
        }
      }
      acc = std::move(next);
      if (acc.size() > max_terms) throw Error(ErrorKind::UnboundedSearch, "substitution exceeds max_terms");
    }
    for (auto& a : acc) out.right.push_back(make_term(a.coef, a.factors));
    if (out.right.size() > max_terms) throw Error(ErrorKind::UnboundedSearch, "substitution exceeds max_terms");
  }
  out.normalize();
  return out;
}

}  // namespace tiltwall
