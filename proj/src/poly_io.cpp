#include "corank/poly_io.hpp"

#include <cctype>
#include <stdexcept>

namespace corank {

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) out += "*";
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
    first = false;
  }
  return out;
}

// Recursive-descent parser over the canonical grammar:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ['*' monom] | monom
//   monom  := varpow ('*' varpow)*
//   varpow := name ['^' int]
//   coeff  := int ['/' int]
class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  MultiPoly run() {
    MultiPoly p;
    skip_ws();
    bool negative = consume('-');
    for (;;) {
      auto [m, c] = term();
      p.add_term(m, negative ? -c : c);
      skip_ws();
      if (pos_ >= s_.size()) break;
      if (consume('+'))
        negative = false;
      else if (consume('-'))
        negative = true;
      else
        fail("expected '+' or '-'");
    }
    return p;
  }

 private:
  std::pair<Monomial, Rational> term() {
    skip_ws();
    Rational coeff = 1;
    bool saw_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = number();
      saw_coeff = true;
    }
    Monomial m;
    bool expect_var = !saw_coeff;
    if (saw_coeff) {
      skip_ws();
      if (consume('*')) expect_var = true;
    }
    if (expect_var) {
      m = m.times(varpow());
      skip_ws();
      while (consume('*')) {
        m = m.times(varpow());
        skip_ws();
      }
    }
    return {m, coeff};
  }

  Monomial varpow() {
    skip_ws();
    std::string id;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) id += s_[pos_++];
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) id += s_[pos_++];
    if (id.empty()) fail("expected a variable");
    Variable v = Variable::from_name(id);
    int exp = 1;
    if (consume('^')) {
      Rational e = number();
      if (denominator(e) != 1 || e <= 0) fail("bad exponent");
      exp = static_cast<int>(numerator(e));
    }
    return Monomial::var(v, exp);
  }

  Rational number() {
    skip_ws();
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    if (digits.empty()) fail("expected a number");
    BigInt num(digits);
    if (consume('/')) {
      std::string den_digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) den_digits += s_[pos_++];
      if (den_digits.empty()) fail("expected a denominator");
      return Rational(num, BigInt(den_digits));
    }
    return Rational(num);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) +
                                ": " + why);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mono = monomial_text(m);
    if (mono.empty())
      out += rational_to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += rational_to_string(mag) + "*" + mono;
    first = false;
  }
  return out;
}

MultiPoly parse_poly(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw std::invalid_argument("empty polynomial text");
  if (text[i] == '0') {
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == text.size()) return MultiPoly::zero();
  }
  return Parser(text).run();
}

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
    terms.push_back({{"coeff", rational_to_string(c)}, {"exponents", exps}});
  }
  return terms;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  MultiPoly p;
  for (const auto& t : j) {
    Rational c = parse_rational(t.at("coeff").get<std::string>());
    std::vector<std::pair<Variable, int>> factors;
    for (const auto& [name, exp] : t.at("exponents").items())
      factors.emplace_back(Variable::from_name(name), exp.get<int>());
    p.add_term(Monomial(std::move(factors)), c);
  }
  return p;
}

}  // namespace corank
