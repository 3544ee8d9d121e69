#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corank/rational.hpp"

namespace corank {

// Variable families: per-element x_e / y_e (index >= 0), their unindexed
// bivariate counterparts x / y (index -1), the corank variables l (lambda)
// and xi, and the series variable z.
enum class VarFamily : std::uint8_t { X = 0, Y = 1, Lambda = 2, Xi = 3, Z = 4 };

struct Variable {
  VarFamily family = VarFamily::X;
  std::int32_t index = -1;

  static Variable x() { return {VarFamily::X, -1}; }
  static Variable x(int e) { return {VarFamily::X, e}; }
  static Variable y() { return {VarFamily::Y, -1}; }
  static Variable y(int e) { return {VarFamily::Y, e}; }
  static Variable lambda() { return {VarFamily::Lambda, -1}; }
  static Variable xi() { return {VarFamily::Xi, -1}; }
  static Variable z() { return {VarFamily::Z, -1}; }

  auto operator<=>(const Variable&) const = default;

  std::string name() const;                          // "x", "x3", "l", "xi", "z"
  static Variable from_name(const std::string& id);  // inverse of name()
};

// Product of variables with positive integer exponents, kept sorted by
// variable. The empty monomial is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<Variable, int>> factors);

  static Monomial unit() { return Monomial(); }
  static Monomial var(Variable v, int exp = 1);

  Monomial times(const Monomial& o) const;
  int degree() const;
  int exponent(Variable v) const;
  const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<Variable, int>> factors_;
};

// Canonical term order: total degree descending, then lexicographic with the
// smaller variable first and, on the same variable, the larger exponent first.
// This is also the printing order, so rendered output is deterministic.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients are stored, so structural equality of the
// term maps coincides with mathematical equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return constant(1); }
  static MultiPoly constant(const Rational& c);
  static MultiPoly var(Variable v);
  static MultiPoly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The coefficient of the unit monomial (0 for the zero polynomial).
  Rational constant_value() const;

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned long exp) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Simultaneous substitution; unbound variables pass through unchanged.
  MultiPoly substitute(const std::map<Variable, MultiPoly>& bindings) const;
  // Full evaluation; throws if any variable is left unbound.
  Rational evaluate(const std::map<Variable, Rational>& point) const;

  // Drops every monomial whose exponent of `v` exceeds max_deg.
  MultiPoly truncate(Variable v, int max_deg) const;
  // The polynomial q (in the other variables) with p = sum_k q_k v^k.
  MultiPoly coefficient_of(Variable v, int exp) const;

  int degree(Variable v) const;
  int total_degree() const;
  std::vector<Variable> variables() const;

 private:
  TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p.scaled(c); }

}  // namespace corank
