#ifndef SL2DIST_TOOLS_EXPRPARSE_HPP
#define SL2DIST_TOOLS_EXPRPARSE_HPP

// Recursive-descent parser for element expressions:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*          (juxtaposition multiplies)
//   factor := INT | GEN | '(' expr ')'
//   GEN    := ('e'|'f'|'h') '(' INT ')'      (h(n) means binom(h, n))
// Whitespace is ignored everywhere.

#include <sl2dist/product.hpp>

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

namespace sl2dist {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
class ExprParser {
public:
  ExprParser(const R& ring, const std::string& text) : ring_(ring), text_(text) {}

  Element<R> parse() {
    Element<R> x = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return x;
  }

private:
  const R& ring_;
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ExprError(what + " at position " + std::to_string(pos_) + " in '" +
                    text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  unsigned long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    try {
      return std::stoul(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  Element<R> expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Element<R> acc = term();
    if (neg) acc = negate(acc);
    while (true) {
      if (eat('+'))
        acc = add(acc, term());
      else if (eat('-'))
        acc = sub(acc, term());
      else
        return acc;
    }
  }

  Element<R> term() {
    Element<R> acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = mul(acc, factor());
      } else if (c == '(' || c == 'e' || c == 'f' || c == 'h' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Element<R> factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Element<R> x = expr();
      expect(')');
      return x;
    }
    if (c == 'e' || c == 'f' || c == 'h') {
      ++pos_;
      expect('(');
      unsigned long n = integer();
      expect(')');
      if (n >= kMonomialIndexLimit) fail("index out of range");
      auto idx = static_cast<std::uint32_t>(n);
      Monomial m = c == 'e' ? Monomial{0, 0, idx}
                 : c == 'f' ? Monomial{idx, 0, 0}
                            : Monomial{0, idx, 0};
      return Element<R>::monomial(ring_, m);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long n = integer();
      if (n > static_cast<unsigned long>(std::numeric_limits<long>::max()))
        fail("integer out of range");
      return Element<R>::scalar(ring_, ring_.from_long(static_cast<long>(n)));
    }
    fail("expected a factor");
  }
};

template <class R>
Element<R> parse_element(const R& ring, const std::string& text) {
  return ExprParser<R>(ring, text).parse();
}

}  // namespace sl2dist

#endif
