#include "greenring/expr.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "greenring/dickson.hpp"

namespace greenring {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Int, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum class Kind { Number, Var, Add, Sub, Mul, Neg, Pow } kind;
  std::size_t offset = 0;
  Rational number;
  std::string name;
  std::uint64_t exponent = 0;
  NodePtr lhs, rhs;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().offset, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b, std::size_t offset) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->offset = offset;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr expr() {
    NodePtr left = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      left = binary(op.kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub, std::move(left), term(), op.offset);
    }
    return left;
  }

  NodePtr term() {
    NodePtr left = unary();
    while (peek().kind == Tok::Star) {
      const Token& op = take();
      left = binary(Node::Kind::Mul, std::move(left), unary(), op.offset);
    }
    return left;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = take();
      return binary(Node::Kind::Neg, unary(), nullptr, op.offset);
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (peek().kind != Tok::Caret) return base;
    const Token& op = take();
    const Token& e = take();
    if (e.kind != Tok::Int) throw ParseError(e.offset, "exponent must be a nonnegative integer literal");
    if (e.text.size() > 7 || std::stoull(e.text) > kMaxExponent) {
      throw ParseError(e.offset, "exponent " + e.text + " exceeds " + std::to_string(kMaxExponent));
    }
    auto n = binary(Node::Kind::Pow, std::move(base), nullptr, op.offset);
    n->exponent = std::stoull(e.text);
    return n;
  }

  NodePtr primary() {
    const Token& t = take();
    auto n = std::make_unique<Node>();
    n->offset = t.offset;
    switch (t.kind) {
      case Tok::Int: {
        n->kind = Node::Kind::Number;
        Integer num(t.text);
        if (peek().kind == Tok::Slash) {
          take();
          const Token& d = take();
          if (d.kind != Tok::Int) throw ParseError(d.offset, "expected integer denominator");
          Integer den(d.text);
          if (den == 0) throw ParseError(d.offset, "zero denominator");
          n->number = Rational(num, den);
          n->number.canonicalize();
        } else {
          n->number = Rational(num);
        }
        return n;
      }
      case Tok::Ident:
        n->kind = Node::Kind::Var;
        n->name = t.text;
        return n;
      case Tok::LParen: {
        NodePtr inner = expr();
        if (peek().kind != Tok::RParen) throw ParseError(peek().offset, "expected ')'");
        take();
        return inner;
      }
      case Tok::End: throw ParseError(t.offset, "unexpected end of input");
      default: throw ParseError(t.offset, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Parses "X12" -> 12 and "F_3" -> 3; 0 when the name has another shape.
std::size_t suffix_index(const std::string& name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return 0;
  const std::string digits = name.substr(prefix.size());
  if (digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos) return 0;
  return std::stoul(digits);
}

template <class Backend>
typename Backend::Value eval(const Node& n, const Backend& b) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::Number: return b.number(n.number);
    case K::Var: return b.variable(n.name, n.offset);
    case K::Add: return b.add(eval(*n.lhs, b), eval(*n.rhs, b));
    case K::Sub: return b.sub(eval(*n.lhs, b), eval(*n.rhs, b));
    case K::Mul: return b.mul(eval(*n.lhs, b), eval(*n.rhs, b));
    case K::Neg: return b.neg(eval(*n.lhs, b));
    case K::Pow: return b.pow(eval(*n.lhs, b), n.exponent);
  }
  throw ParseError(n.offset, "bad expression node");
}

// Dickson atoms expand into explicit polynomials here, so their index is capped.
constexpr std::size_t kMaxPolyDickson = 4096;

struct PolyBackend {
  using Value = Poly;
  std::size_t arity;

  Value number(const Rational& q) const { return Poly::constant(q, arity); }
  Value variable(const std::string& name, std::size_t offset) const {
    if (name == "Y" || name == "y") return Poly::y(arity);
    if (name == "Z" || name == "z") return Poly::z(arity);
    if (auto j = suffix_index(name, "X"); j >= 1 && j <= arity) return Poly::x(j, arity);
    if (auto k = suffix_index(name, "F_"); k >= 1 && k <= kMaxPolyDickson)
      return dickson_f(static_cast<int>(k)).with_arity(arity);
    throw ParseError(offset, "unknown variable '" + name + "'");
  }
  Value add(Value a, const Value& c) const { return a + c; }
  Value sub(Value a, const Value& c) const { return a - c; }
  Value mul(const Value& a, const Value& c) const { return a * c; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, std::uint64_t e) const { return a.pow(e); }
};

struct RingBackend {
  using Value = RingElement;
  RingSpecPtr spec;

  Value number(const Rational& q) const { return RingElement::constant(spec, q); }
  Value generator(const Poly& p) const { return reduce(spec, p); }

  Value variable(const std::string& name, std::size_t offset) const {
    const std::size_t a = spec->x_arity();
    const bool has_z = spec->kind() != RingKind::Grothendieck;
    if (name == "Y" || name == "y") return generator(Poly::y(a));
    if (has_z && (name == "Z" || name == "z")) return generator(Poly::z(a));
    if (auto j = suffix_index(name, "X"); j >= 1 && j <= a) return generator(Poly::x(j, a));
    if (auto k = suffix_index(name, "F_"); has_z && k >= 1 && k <= kMaxExponent) return dickson(k);
    throw ParseError(offset, "unknown variable '" + name + "' for " + spec->describe());
  }

  // F_k evaluated in the ring by the recursion, so large k stays cheap.
  Value dickson(std::size_t k) const {
    const std::size_t a = spec->x_arity();
    const RingElement y = generator(Poly::y(a)), z = generator(Poly::z(a));
    RingElement prev = RingElement::constant(spec, 1);
    if (k == 1) return prev;
    RingElement cur = z;
    for (std::size_t i = 3; i <= k; ++i) {
      RingElement next = ring_mul(z, cur) - ring_mul(y, prev);
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  Value add(Value a, const Value& c) const { return a + c; }
  Value sub(Value a, const Value& c) const { return a - c; }
  // Scalars multiply coefficientwise so rational literals survive until the
  // final integrality check.
  static bool is_scalar(const Value& v) {
    for (std::size_t i = 1; i < v.coeffs().size(); ++i)
      if (v[i] != 0) return false;
    return true;
  }
  Value mul(const Value& a, const Value& c) const {
    if (is_scalar(a)) return c * a[0];
    if (is_scalar(c)) return a * c[0];
    return ring_mul(a, c);
  }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, std::uint64_t e) const { return a.pow(e); }
};

}  // namespace

Poly parse_poly(std::string_view src, std::size_t x_arity) {
  const NodePtr ast = Parser(src).parse();
  return eval(*ast, PolyBackend{x_arity});
}

RingElement parse_element(std::string_view src, const RingSpecPtr& spec) {
  const NodePtr ast = Parser(src).parse();
  RingElement e = eval(*ast, RingBackend{spec});
  e.assert_integral("parse_element");
  return e;
}

}  // namespace greenring
