#include "subhardy/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace subhardy {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  AnalyticSymbol parse() {
    AnalyticSymbol e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

 private:
  AnalyticSymbol expr() {
    AnalyticSymbol acc = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '*') {
        ++pos_;
        acc = acc * term();
      } else {
        return acc;
      }
    }
  }

  AnalyticSymbol term() {
    skip_ws();
    if (consume_keyword("poly:")) {
      std::vector<cx> coeffs;
      coeffs.push_back(complex_literal());
      while (true) {
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
        coeffs.push_back(complex_literal());
      }
      return AnalyticSymbol::polynomial(std::move(coeffs));
    }
    if (consume_keyword("const:")) {
      return AnalyticSymbol::constant(complex_literal());
    }
    if (consume_keyword("blaschke:")) {
      return AnalyticSymbol::blaschke(complex_literal());
    }
    if (consume_keyword("recip(")) {
      AnalyticSymbol inner = expr();
      expect(')');
      return inner.reciprocal();
    }
    if (consume_keyword("scale:")) {
      const cx s = complex_literal();
      expect('(');
      AnalyticSymbol inner = expr();
      expect(')');
      return AnalyticSymbol::scale(s, inner);
    }
    throw ParseError("expected poly:, const:, blaschke:, recip( or scale:", pos_);
  }

  cx complex_literal() {
    skip_ws();
    const double re = number();
    const std::size_t mark = pos_;
    if (peek() == '+' || peek() == '-') {
      const char sign = s_[pos_];
      ++pos_;
      // Only an imaginary part here; a '+' starting a new term must back off.
      if (looks_like_imaginary()) {
        double im = number();
        if (peek() != 'i') throw ParseError("expected 'i' after imaginary part", pos_);
        ++pos_;
        if (sign == '-') im = -im;
        return cx(re, im);
      }
      pos_ = mark;
    }
    return cx(re, 0.0);
  }

  bool looks_like_imaginary() const {
    std::size_t p = pos_;
    if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
    bool digits = false;
    while (p < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p])) || s_[p] == '.' ||
                             s_[p] == 'e' || s_[p] == 'E' ||
                             ((s_[p] == '+' || s_[p] == '-') && (s_[p - 1] == 'e' || s_[p - 1] == 'E')))) {
      if (std::isdigit(static_cast<unsigned char>(s_[p]))) digits = true;
      ++p;
    }
    return digits && p < s_.size() && s_[p] == 'i';
  }

  double number() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("expected a number", pos_);
    if (!std::isfinite(v)) throw ParseError("number is not finite", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool consume_keyword(const std::string& kw) {
    skip_ws();
    if (s_.compare(pos_, kw.size(), kw) == 0) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string print_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string coeff_list(const std::vector<cx>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += print_complex(c[i]);
  }
  return out;
}

// Composite children right of a '+' or '*' need grouping; scale:1(...) is the
// grammar's only grouping construct and multiplies coefficients by exactly 1.
std::string print_grouped(const AnalyticSymbol& f) {
  using Kind = AnalyticSymbol::Kind;
  const Kind k = f.kind();
  if (k == Kind::sum || k == Kind::product || k == Kind::rational) {
    return "scale:1(" + print_symbol(f) + ")";
  }
  return print_symbol(f);
}

}  // namespace

std::string print_complex(cx v) {
  if (v.imag() == 0.0) return print_double(v.real());
  const std::string re = print_double(v.real());
  const double im = v.imag();
  if (im < 0.0 || (im == 0.0 && std::signbit(im))) {
    return re + "-" + print_double(-im) + "i";
  }
  return re + "+" + print_double(im) + "i";
}

AnalyticSymbol parse_symbol(const std::string& text) { return Parser(text).parse(); }

std::string print_symbol(const AnalyticSymbol& f) {
  using Kind = AnalyticSymbol::Kind;
  switch (f.kind()) {
    case Kind::polynomial:
      return "poly:" + coeff_list(f.poly_coeffs());
    case Kind::constant:
      return "const:" + print_complex(f.scalar());
    case Kind::blaschke_factor:
      return "blaschke:" + print_complex(f.scalar());
    case Kind::rational: {
      const std::string recip = "recip(poly:" + coeff_list(f.rational_den()) + ")";
      const std::vector<cx>& num = f.rational_num();
      if (num.size() == 1 && num[0] == cx(1.0, 0.0)) return recip;
      return "poly:" + coeff_list(num) + "*" + recip;
    }
    case Kind::sum:
      return print_symbol(f.left()) + "+" + print_grouped(f.right());
    case Kind::product:
      return print_symbol(f.left()) + "*" + print_grouped(f.right());
    case Kind::scale:
      return "scale:" + print_complex(f.scalar()) + "(" + print_symbol(f.left()) + ")";
  }
  throw std::logic_error("unreachable symbol kind");
}

}  // namespace subhardy
