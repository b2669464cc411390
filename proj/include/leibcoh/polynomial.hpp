#ifndef LEIBCOH_POLYNOMIAL_HPP
#define LEIBCOH_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "leibcoh/error.hpp"
#include "leibcoh/scalar.hpp"

namespace leibcoh {

/// Monomial in named parameters. Variables compare alphabetically; zero
/// exponents are never stored.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(const std::string& var, unsigned exp = 1) {
    if (exp > 0) exps_[var] = exp;
  }
  explicit Monomial(std::map<std::string, unsigned> exps) {
    for (auto& [v, e] : exps)
      if (e > 0) exps_[v] = e;
  }

  [[nodiscard]] const std::map<std::string, unsigned>& exponents() const { return exps_; }
  [[nodiscard]] unsigned exponent(const std::string& v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
  }
  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }
  [[nodiscard]] bool is_one() const { return exps_.empty(); }

  [[nodiscard]] bool divides(const Monomial& other) const {
    for (const auto& [v, e] : exps_)
      if (other.exponent(v) < e) return false;
    return true;
  }

  /// other / *this, assuming divisibility.
  [[nodiscard]] Monomial cofactor(const Monomial& other) const {
    std::map<std::string, unsigned> out = other.exps_;
    for (const auto& [v, e] : exps_) out[v] -= e;
    return Monomial(std::move(out));
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b.exps_) out.exps_[v] += e;
    return out;
  }

  /// Total degree first, then lexicographic with alphabetically earlier
  /// variables dominant: s^2 < s*t < t^2.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree();
    unsigned db = b.degree();
    if (da != db) return da < db;
    std::set<std::string> vars;
    for (const auto& [v, e] : a.exps_) vars.insert(v);
    for (const auto& [v, e] : b.exps_) vars.insert(v);
    for (const auto& v : vars) {
      unsigned ea = a.exponent(v);
      unsigned eb = b.exponent(v);
      if (ea != eb) return ea > eb;
    }
    return false;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  [[nodiscard]] std::string to_string() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
      if (!out.empty()) out += "*";
      out += v;
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  /// All monomials of total degree `deg` in `vars`.
  static std::vector<Monomial> of_degree(const std::vector<std::string>& vars, unsigned deg) {
    std::vector<Monomial> out;
    std::map<std::string, unsigned> cur;
    auto rec = [&](auto&& self, std::size_t idx, unsigned left) -> void {
      if (idx + 1 == vars.size()) {
        cur[vars[idx]] = left;
        out.emplace_back(cur);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        cur[vars[idx]] = e;
        self(self, idx + 1, left - e);
      }
    };
    if (vars.empty()) {
      if (deg == 0) out.emplace_back();
      return out;
    }
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end());
    return out;
  }

  static Monomial parse(std::string_view text);

private:
  std::map<std::string, unsigned> exps_;
};

/// Sparse multivariate polynomial over Scalar; zero coefficients are never stored.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(Scalar c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[Monomial()] = std::move(c);
  }
  Polynomial(long c) : Polynomial(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, Scalar c = Scalar(1)) {
    if (!c.is_zero()) terms_[m] = std::move(c);
  }
  static Polynomial variable(const std::string& name) { return Polynomial(Monomial(name)); }

  [[nodiscard]] const std::map<Monomial, Scalar>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  [[nodiscard]] Scalar constant_term() const { return coefficient(Monomial()); }
  [[nodiscard]] Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
  }
  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  [[nodiscard]] std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.exponents()) out.insert(v);
    return out;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] Polynomial pow(unsigned e) const {
    Polynomial out(1);
    for (unsigned k = 0; k < e; ++k) out *= *this;
    return out;
  }

  /// Exact evaluation; every variable must be assigned.
  [[nodiscard]] Scalar evaluate(const std::map<std::string, Scalar>& values) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (const auto& [v, e] : m.exponents()) {
        auto it = values.find(v);
        if (it == values.end()) throw MissingParameter("no value assigned to parameter '" + v + "'");
        for (unsigned k = 0; k < e; ++k) t *= it->second;
      }
      out += t;
    }
    return out;
  }

  /// Human-readable form, terms in monomial order: "-1 + 1/2*t + u".
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.to_string();
      const bool compound = !c.is_real() && sgn(c.re()) != 0;
      std::string term;
      if (m.is_one()) {
        term = compound ? "(" + cs + ")" : cs;
      } else if (c.is_one()) {
        term = m.to_string();
      } else if (c == Scalar(-1)) {
        term = "-" + m.to_string();
      } else {
        term = (compound ? "(" + cs + ")" : cs) + "*" + m.to_string();
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  /// Parses + - * / ^ ( ) over integers, rationals, `i`, and identifiers.
  /// Division is allowed only by nonzero constants. When `params` is given,
  /// identifiers outside it are rejected.
  static Polynomial parse(std::string_view text, const std::vector<std::string>* params = nullptr);

private:
  std::map<Monomial, Scalar> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace detail {

class PolyParser {
public:
  PolyParser(std::string_view t, const std::vector<std::string>* params) : text_(t), params_(params) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial p;
    if (accept('-')) {
      p = -term();
    } else {
      accept('+');
      p = term();
    }
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = power();
    for (;;) {
      if (accept('*')) {
        p *= power();
      } else if (accept('/')) {
        Polynomial d = power();
        if (!d.is_constant()) fail("division by a non-constant");
        if (d.is_zero()) throw DivisionByZero("polynomial '" + std::string(text_) + "': division by zero");
        p *= Polynomial(d.constant_term().inv());
      } else {
        return p;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      return Polynomial(Scalar(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)), 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return Polynomial(Scalar::imaginary_unit());
      if (params_ != nullptr && std::find(params_->begin(), params_->end(), name) == params_->end()) {
        pos_ = start;
        fail("undeclared parameter '" + name + "'");
      }
      return Polynomial::variable(name);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>* params_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view text, const std::vector<std::string>* params) {
  return detail::PolyParser(text, params).run();
}

/// Accepts "1", "t", "t*u", "s^2*u".
inline Monomial Monomial::parse(std::string_view text) {
  Polynomial p = Polynomial::parse(text);
  if (p.terms().size() != 1 || !p.terms().begin()->second.is_one())
    throw ParseError("'" + std::string(text) + "' is not a monomial");
  return p.terms().begin()->first;
}

}  // namespace leibcoh

#endif
