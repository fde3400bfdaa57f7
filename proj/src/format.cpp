#include "gaql/format.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "gaql/error.hpp"

namespace gaql {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    if (std::isdigit(u)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isalpha(u) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(ErrorCode::Syntax, std::string("unexpected character '") + c + "'",
                         l, cl);
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  Parser(std::string_view src, const RingPtr& ring, const PolyTable* named)
      : tokens_(tokenize(src)), ring_(ring), named_(named) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::End) fail("expected an operator or end of input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError(ErrorCode::Syntax, what + ", found " + describe(t.kind), t.line, t.column);
  }

  Polynomial expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = take().kind == Tok::Minus;
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      Polynomial rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek().kind == Tok::Star) {
      take();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek().kind != Tok::Caret) return b;
    take();
    if (peek().kind != Tok::Number) fail("expected a natural-number exponent");
    const Token& t = take();
    if (t.text.size() > 9 ||
        std::stoull(t.text) > std::numeric_limits<Exponent>::max())
      throw ParseError(ErrorCode::ExponentOverflow, "exponent " + t.text + " is too large",
                       t.line, t.column);
    return b.pow(static_cast<unsigned>(std::stoul(t.text)));
  }

  Polynomial base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        std::string text = t.text;
        if (peek().kind == Tok::Slash) {
          take();
          if (peek().kind != Tok::Number) fail("expected a denominator");
          const Token& den = take();
          if (std::all_of(den.text.begin(), den.text.end(), [](char c) { return c == '0'; }))
            throw ParseError(ErrorCode::MalformedRational, "zero denominator", den.line,
                             den.column);
          text += "/" + den.text;
        }
        return Polynomial::constant(ring_, parse_rational(text));
      }
      case Tok::Ident: {
        take();
        if (auto idx = ring_->index_of(t.text)) return Polynomial::variable(ring_, *idx);
        if (named_ != nullptr) {
          auto it = named_->find(t.text);
          if (it != named_->end()) {
            require_same_ring(ring_, it->second.ring(), "parse_polynomial");
            return it->second;
          }
        }
        throw ParseError(ErrorCode::UnknownVariable, "unknown variable '" + t.text + "'",
                         t.line, t.column);
      }
      case Tok::LParen: {
        take();
        Polynomial inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return inner;
      }
      default:
        fail("expected a number, variable or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
  const PolyTable* named_;
};

// Appends one term; `var_first` (if < arity) is printed before the others.
void append_term(std::ostringstream& os, const Term& t, const Ring& ring, bool first,
                 std::size_t var_first) {
  const bool negative = t.coeff < 0;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  Rational mag = abs(t.coeff);
  std::vector<std::string> factors;
  auto push_var = [&](std::size_t i) {
    Exponent e = t.monomial[i];
    if (e == 0) return;
    factors.push_back(e == 1 ? ring.name(i) : ring.name(i) + "^" + std::to_string(e));
  };
  if (var_first < ring.arity()) push_var(var_first);
  for (std::size_t i = 0; i < ring.arity(); ++i)
    if (i != var_first) push_var(i);

  if (factors.empty()) {
    os << to_string(mag);
    return;
  }
  if (mag != 1) os << to_string(mag) << "*";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k > 0) os << "*";
    os << factors[k];
  }
}

std::string format_terms(const std::vector<Term>& terms, const Ring& ring,
                         std::size_t var_first) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k)
    append_term(os, terms[k], ring, k == 0, var_first);
  return os.str();
}

}  // namespace

Polynomial parse_polynomial(std::string_view src, const RingPtr& ring, const PolyTable* named) {
  return Parser(src, ring, named).parse();
}

std::string format_polynomial(const Polynomial& p) {
  return format_terms(p.terms(), *p.ring(), p.arity());
}

std::string format_in_powers_of(const Polynomial& p, std::size_t var) {
  if (var >= p.arity()) throw Error(ErrorCode::IndexOutOfRange, "format: variable out of range");
  std::vector<Term> terms = p.terms();
  std::stable_sort(terms.begin(), terms.end(), [var](const Term& a, const Term& b) {
    return a.monomial[var] < b.monomial[var];
  });
  return format_terms(terms, *p.ring(), var);
}

std::vector<std::string> format_action(const GaAction& a) {
  std::vector<std::string> out;
  for (const auto& c : a.components()) out.push_back(format_in_powers_of(c, 0));
  return out;
}

std::string format_tuple(const std::vector<std::string>& items) {
  std::string s = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) s += ", ";
    s += items[i];
  }
  return s + ")";
}

std::string format_derivation(const Derivation& d) {
  std::vector<std::string> items;
  for (const auto& img : d.images()) items.push_back(format_polynomial(img));
  return format_tuple(items);
}

}  // namespace gaql
