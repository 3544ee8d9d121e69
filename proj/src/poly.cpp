#include "corank/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace corank {

std::string Variable::name() const {
  switch (family) {
    case VarFamily::X:
      return index < 0 ? "x" : "x" + std::to_string(index);
    case VarFamily::Y:
      return index < 0 ? "y" : "y" + std::to_string(index);
    case VarFamily::Lambda:
      return "l";
    case VarFamily::Xi:
      return "xi";
    case VarFamily::Z:
      return "z";
  }
  return "?";
}

Variable Variable::from_name(const std::string& id) {
  if (id == "l") return lambda();
  if (id == "xi") return xi();
  if (id == "z") return z();
  if (id.empty()) throw std::invalid_argument("empty variable name");
  const char head = id[0];
  if (head != 'x' && head != 'y') throw std::invalid_argument("unknown variable '" + id + "'");
  if (id.size() == 1) return head == 'x' ? x() : y();
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i])))
      throw std::invalid_argument("unknown variable '" + id + "'");
  const int e = std::stoi(id.substr(1));
  return head == 'x' ? x(e) : y(e);
}

Monomial::Monomial(std::vector<std::pair<Variable, int>> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].second <= 0) throw std::invalid_argument("monomial exponent must be positive");
    if (i > 0 && factors_[i - 1].first == factors_[i].first)
      throw std::invalid_argument("duplicate variable in monomial");
  }
}

Monomial Monomial::var(Variable v, int exp) {
  if (exp == 0) return unit();
  return Monomial({{v, exp}});
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<std::pair<Variable, int>> merged;
  merged.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first)
      merged.push_back(*a++);
    else if (b->first < a->first)
      merged.push_back(*b++);
    else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, factors_.end());
  merged.insert(merged.end(), b, o.factors_.end());
  Monomial m;
  m.factors_ = std::move(merged);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(Variable v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return false;  // equal degree with a common prefix implies equal monomials
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Monomial::unit(), c);
  return p;
}

MultiPoly MultiPoly::var(Variable v) { return term(Monomial::var(v), 1); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational MultiPoly::constant_value() const {
  auto it = terms_.find(Monomial::unit());
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly p = *this;
  p += o;
  return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly p = *this;
  p -= o;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly p;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) p.add_term(ma.times(mb), ca * cb);
  return p;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly p;
  if (c == 0) return p;
  for (const auto& [m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
  return p;
}

MultiPoly MultiPoly::pow(unsigned long exp) const {
  MultiPoly result = one();
  MultiPoly base = *this;
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<Variable, MultiPoly>& bindings) const {
  std::map<std::pair<Variable, int>, MultiPoly> power_cache;
  MultiPoly result;
  for (const auto& [mono, coeff] : terms_) {
    MultiPoly term_val = constant(coeff);
    Monomial passthrough;
    for (const auto& [v, e] : mono.factors()) {
      auto bound = bindings.find(v);
      if (bound == bindings.end()) {
        passthrough = passthrough.times(Monomial::var(v, e));
        continue;
      }
      auto key = std::make_pair(v, e);
      auto cached = power_cache.find(key);
      if (cached == power_cache.end())
        cached = power_cache.emplace(key, bound->second.pow(e)).first;
      term_val *= cached->second;
    }
    if (!passthrough.is_unit()) term_val *= term(passthrough, 1);
    result += term_val;
  }
  return result;
}

Rational MultiPoly::evaluate(const std::map<Variable, Rational>& point) const {
  Rational total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Rational v = coeff;
    for (const auto& [var, e] : mono.factors()) {
      auto it = point.find(var);
      if (it == point.end())
        throw std::invalid_argument("evaluate: unbound variable " + var.name());
      v *= rational_pow(it->second, e);
    }
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::truncate(Variable v, int max_deg) const {
  if (max_deg < 0) throw std::invalid_argument("truncate: negative degree");
  MultiPoly p;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) <= max_deg) p.terms_.emplace(m, c);
  return p;
}

MultiPoly MultiPoly::coefficient_of(Variable v, int exp) const {
  MultiPoly p;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != exp) continue;
    std::vector<std::pair<Variable, int>> rest;
    for (const auto& f : m.factors())
      if (f.first != v) rest.push_back(f);
    p.add_term(Monomial(std::move(rest)), c);
  }
  return p;
}

int MultiPoly::degree(Variable v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::vector<Variable> MultiPoly::variables() const {
  std::vector<Variable> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return vars;
}

}  // namespace corank
