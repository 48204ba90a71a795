#pragma once

// Text forms of DiskPolynomial.
//
//  * Tuple rows "(m, n, re, im)", one per term. re and im are exact rationals
//    written as integers, p/q or decimals.
//  * Expressions such as "3*w^2*conj(w) - (1/2 + i)*w". Variables are w or z,
//    conj(...) conjugates any subexpression, i is the imaginary unit, and
//    division is allowed by nonzero constants only. Whitespace is ignored.
//  * A human-readable form in z and z̄ for display ("2 z z̄ − 1").

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "diskalg.hpp"
#include "errors.hpp"
#include "scalar.hpp"

namespace diskt {

namespace detail {

inline std::string shortest(double x) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

inline std::string real_text(const Rational& x) { return x.get_str(); }
inline std::string real_text(double x) { return shortest(x); }

// Cursor over the input that tracks 1-based line and column.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Next raw character without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() {
    skip_space();
    char c = text_[pos_];
    advance();
    return c;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      return false;
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  // Unsigned decimal literal (digits, optional fraction, optional exponent) as an exact rational.
  Rational number() {
    skip_space();
    std::size_t start_line = line_, start_col = col_;
    std::string digits;
    long exp10 = 0;
    bool any = false;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
      digits += peek_raw();
      advance();
      any = true;
    }
    if (peek_raw() == '.') {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
        digits += peek_raw();
        --exp10;
        advance();
        any = true;
      }
    }
    if (!any) throw ParseError("expected a number", start_line, start_col);
    if (peek_raw() == 'e' || peek_raw() == 'E') {
      advance();
      bool neg = false;
      if (peek_raw() == '+' || peek_raw() == '-') {
        neg = peek_raw() == '-';
        advance();
      }
      if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("malformed exponent");
      long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
        e = e * 10 + (peek_raw() - '0');
        if (e > 10000) fail("exponent too large");
        advance();
      }
      exp10 += neg ? -e : e;
    }
    Rational q(mpz_class(digits.empty() ? "0" : digits, 10));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0)
      q /= scale;
    else
      q *= scale;
    q.canonicalize();
    return q;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : cur_(text) {}

  ExactPolynomial parse() {
    if (cur_.done()) cur_.fail("empty polynomial");
    ExactPolynomial p = expr();
    if (!cur_.done()) cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
    return p;
  }

 private:
  ExactPolynomial expr() {
    ExactPolynomial acc;
    bool first = true;
    while (true) {
      bool negate = false;
      if (cur_.accept('+')) {
      } else if (cur_.accept('-')) {
        negate = true;
      } else if (!first) {
        return acc;
      }
      ExactPolynomial t = term();
      if (negate)
        acc -= t;
      else
        acc += t;
      first = false;
    }
  }

  ExactPolynomial term() {
    ExactPolynomial acc = power();
    while (true) {
      if (cur_.accept('*')) {
        acc = acc * power();
      } else if (cur_.peek() == '/') {
        std::size_t line = cur_.line(), col = cur_.column();
        cur_.get();
        ExactPolynomial den = power();
        if (den.size() != 1 || !den.terms().count({0, 0}))
          throw ParseError("division is only defined by a nonzero constant", line, col);
        const ExactComplex c = den.coeff({0, 0});
        const Rational n2 = norm(c);
        acc = acc * ExactComplex(Rational(c.re / n2), Rational(-c.im / n2));
      } else {
        return acc;
      }
    }
  }

  ExactPolynomial power() {
    ExactPolynomial base = primary();
    if (cur_.accept('^')) {
      cur_.skip_space();
      if (!std::isdigit(static_cast<unsigned char>(cur_.peek_raw()))) cur_.fail("expected an exponent");
      Rational e = cur_.number();
      if (e.get_den() != 1 || e > 1000) cur_.fail("exponent must be a small non-negative integer");
      ExactPolynomial out(ExactComplex(1));
      for (long k = 0; k < e.get_num().get_si(); ++k) out = out * base;
      return out;
    }
    return base;
  }

  ExactPolynomial primary() {
    char c = cur_.peek();
    if (c == '(') {
      cur_.get();
      ExactPolynomial p = expr();
      cur_.expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      Rational v = cur_.number();
      // "2i" is an imaginary literal.
      if (cur_.peek_raw() == 'i') {
        cur_.get();
        if (std::isalnum(static_cast<unsigned char>(cur_.peek_raw()))) cur_.fail("unexpected identifier");
        return ExactPolynomial(ExactComplex(Rational(0), v));
      }
      return ExactPolynomial(ExactComplex(v));
    }
    if (cur_.accept_word("conj")) {
      cur_.expect('(');
      ExactPolynomial p = expr();
      cur_.expect(')');
      return conj(p);
    }
    if (cur_.accept_word("w") || cur_.accept_word("z")) return ExactPolynomial::monomial(1, 0);
    if (cur_.accept_word("i")) return ExactPolynomial(ExactComplex(Rational(0), Rational(1)));
    if (c == '\0') cur_.fail("unexpected end of input");
    cur_.fail(std::string("unexpected '") + c + "'");
  }

  Cursor cur_;
};

}  // namespace detail

/// Parses "(m, n, re, im)" rows separated by whitespace, commas or semicolons.
inline ExactPolynomial parse_tuples(std::string_view text) {
  detail::Cursor cur(text);
  ExactPolynomial p;
  auto signed_number = [&cur] {
    bool neg = false;
    if (cur.accept('-'))
      neg = true;
    else
      cur.accept('+');
    Rational v = cur.number();
    if (cur.accept('/')) {
      std::size_t line = cur.line(), col = cur.column();
      Rational den = cur.number();
      if (sgn(den) == 0) throw ParseError("zero denominator", line, col);
      v /= den;
    }
    return neg ? Rational(-v) : v;
  };
  auto index = [&] {
    std::size_t line = cur.line(), col = cur.column();
    Rational v = cur.number();
    if (v.get_den() != 1 || !v.get_num().fits_sint_p()) throw ParseError("exponent must be an integer", line, col);
    return static_cast<int>(v.get_num().get_si());
  };
  while (!cur.done()) {
    if (cur.accept(',') || cur.accept(';')) continue;
    cur.expect('(');
    int m = index();
    cur.expect(',');
    int n = index();
    cur.expect(',');
    Rational re = signed_number();
    cur.expect(',');
    Rational im = signed_number();
    cur.expect(')');
    p.add({m, n}, ExactComplex(re, im));
  }
  return p;
}

/// Parses an expression polynomial, or tuple rows when the text starts with "(m, n,".
inline ExactPolynomial parse_polynomial(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '(') {
    // Tuple rows look like "(digits," at the start.
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::size_t k = j;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k > j && k < text.size() && text[k] == ',') return parse_tuples(text);
  }
  return detail::ExpressionParser(text).parse();
}

/// One "(m, n, re, im)" row per term, in (m, n) order.
template <RealField R>
std::string format_tuples(const DiskPolynomial<R>& p) {
  std::ostringstream os;
  for (const auto& [k, a] : p.terms())
    os << '(' << k.m << ", " << k.n << ", " << detail::real_text(a.re) << ", " << detail::real_text(a.im) << ")\n";
  return os.str();
}

namespace detail {

inline std::string superscript(int e) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(e)) s += digits[c - '0'];
  return s;
}

inline std::string power_text(const char* var, int e) {
  if (e == 0) return {};
  return e == 1 ? std::string(var) : std::string(var) + superscript(e);
}

template <RealField R>
bool is_negative(const R& x) {
  if constexpr (std::same_as<R, double>)
    return x < 0.0;
  else
    return sgn(x) < 0;
}

template <RealField R>
bool is_one(const R& x) {
  return x == R(1);
}

}  // namespace detail

/// Human-readable form, highest total degree first: "z̄ − z", "2 z z̄ − 1", "0".
template <RealField R>
std::string to_pretty(const DiskPolynomial<R>& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Complex<R>>> rows(p.terms().begin(), p.terms().end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
    return x.first.n > y.first.n;
  });
  const std::string minus = "−";
  std::string out;
  bool first = true;
  for (const auto& [k, a] : rows) {
    std::string mono = detail::power_text("z", k.m);
    std::string zb = detail::power_text("z̄", k.n);
    if (!zb.empty()) mono += (mono.empty() ? "" : " ") + zb;

    bool negative;
    std::string coef;
    if (is_zero(a.im)) {
      negative = detail::is_negative(a.re);
      R mag = negative ? R(-a.re) : a.re;
      coef = (detail::is_one(mag) && !mono.empty()) ? "" : detail::real_text(mag);
    } else if (is_zero(a.re)) {
      negative = detail::is_negative(a.im);
      R mag = negative ? R(-a.im) : a.im;
      coef = detail::is_one(mag) ? "i" : detail::real_text(mag) + "i";
    } else {
      negative = false;
      bool im_neg = detail::is_negative(a.im);
      R im_mag = im_neg ? R(-a.im) : a.im;
      std::string re_txt = detail::is_negative(a.re) ? minus + detail::real_text(R(-a.re)) : detail::real_text(a.re);
      coef = "(" + re_txt + (im_neg ? " " + minus + " " : " + ") +
             (detail::is_one(im_mag) ? "" : detail::real_text(im_mag)) + "i)";
    }
    std::string body = coef.empty() ? mono : (mono.empty() ? coef : coef + " " + mono);
    if (first)
      out += negative ? minus + body : body;
    else
      out += (negative ? " " + minus + " " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace diskt
