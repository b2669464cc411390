#ifndef LEIBCOH_SCALAR_HPP
#define LEIBCOH_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "leibcoh/error.hpp"

namespace leibcoh {

/// Exact Gaussian rational re + im*i.
///
/// Both parts are GMP rationals kept in lowest terms with positive
/// denominators, so equality is plain structural equality.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    return Scalar(mpq_class(num, den));
  }
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  [[nodiscard]] const mpq_class& re() const { return re_; }
  [[nodiscard]] const mpq_class& im() const { return im_; }

  [[nodiscard]] bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  [[nodiscard]] bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  [[nodiscard]] bool is_real() const { return sgn(im_) == 0; }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-re_), mpq_class(-im_)); }

  /// Multiplicative inverse; conjugate over the norm.
  [[nodiscard]] Scalar inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    if (sgn(im_) == 0) return Scalar(mpq_class(1 / re_));
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
  }

  [[nodiscard]] Scalar conj() const { return Scalar(re_, mpq_class(-im_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: "a/b", "c/d*i", "a/b+c/d*i", "0". Round-trips through parse().
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = abs(im_) == 1 ? std::string("i") : mpq_class(abs(im_)).get_str() + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
  }

  /// Parses the textual scalar syntax: an optional real rational part and an
  /// optional imaginary part written `c/d*i`, e.g. "3", "-1/2", "1/2+3/4*i",
  /// "-2*i", "i". Locale-independent.
  static Scalar parse(std::string_view text);

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace detail {

class ScalarLexer {
public:
  explicit ScalarLexer(std::string_view t) : text_(t) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  [[nodiscard]] bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  [[nodiscard]] char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[nodiscard]] bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  // digits ( '/' digits )?
  mpq_class unsigned_rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (accept('/')) {
      den = integer();
      if (den == 0) throw DivisionByZero("zero denominator in scalar '" + std::string(text_) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("invalid scalar '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  detail::ScalarLexer lx(text);
  if (lx.done()) lx.fail("empty");
  mpq_class re = 0;
  mpq_class im = 0;
  bool have_re = false;
  bool have_im = false;
  while (!lx.done()) {
    int sign = 1;
    bool had_sign = false;
    if (lx.accept('+')) {
      had_sign = true;
    } else if (lx.accept('-')) {
      sign = -1;
      had_sign = true;
    } else if (have_re || have_im) {
      lx.fail("expected '+' or '-'");
    }
    (void)had_sign;
    mpq_class mag = 1;
    bool imaginary = false;
    if (lx.accept('i')) {
      imaginary = true;
    } else {
      if (!lx.at_digit()) lx.fail("expected a number");
      mag = lx.unsigned_rational();
      if (lx.accept('*')) {
        if (!lx.accept('i')) lx.fail("expected 'i' after '*'");
        imaginary = true;
      }
    }
    if (imaginary) {
      if (have_im) lx.fail("duplicate imaginary part");
      im = sign * mag;
      have_im = true;
    } else {
      if (have_re || have_im) lx.fail("real part must come first");
      re = sign * mag;
      have_re = true;
    }
  }
  return Scalar(re, im);
}

}  // namespace leibcoh

#endif
