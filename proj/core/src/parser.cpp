#include "voalab/parser.hpp"

#include <cctype>
#include <functional>

#include "voalab/named.hpp"
#include "voalab/vertex.hpp"

namespace voalab {

namespace {

using Op = std::function<State(const State&)>;

struct Value {
  enum Kind { kScalar, kState, kOp } kind = kScalar;
  Scalar s;
  State v;
  Op op;

  static Value scalar(Scalar x) {
    Value r;
    r.s = std::move(x);
    return r;
  }
  static Value state(State x) {
    Value r;
    r.kind = kState;
    r.v = std::move(x);
    return r;
  }
  static Value oper(Op f) {
    Value r;
    r.kind = kOp;
    r.op = std::move(f);
    return r;
  }
};

class Parser {
 public:
  explicit Parser(const std::string& text) : t_(text) {}

  Value parse_all() {
    Value v = expr();
    skip_ws();
    if (pos_ != t_.size()) fail("unexpected input '" + t_.substr(pos_, 8) + "'");
    return v;
  }

 private:
  const std::string& t_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool at(const char* s) {
    skip_ws();
    return t_.compare(pos_, std::char_traits<char>::length(s), s) == 0;
  }
  bool eat(const char* s) {
    if (!at(s)) return false;
    pos_ += std::char_traits<char>::length(s);
    return true;
  }
  void expect(const char* s) {
    if (!eat(s)) fail(std::string("expected '") + s + "'");
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= t_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(t_[pos_]);
    return std::isalnum(c) || c == '(' || c == '|' || c == '_' || at("√");
  }

  Value expr() {
    Value acc = term();
    for (;;) {
      if (eat("+"))
        acc = add(acc, term(), 1);
      else if (eat("-"))
        acc = add(acc, term(), -1);
      else
        return acc;
    }
  }

  Value term() {
    Value acc = unary();
    for (;;) {
      if (eat("*") || eat("·")) {
        acc = mul(acc, unary());
      } else if (eat("/")) {
        const std::size_t where = pos_;
        Value d = unary();
        if (d.kind != Value::kScalar) throw ParseError("division by a non-scalar", where);
        if (d.s.is_zero()) throw ParseError("division by zero", where);
        acc = mul(acc, Value::scalar(d.s.inverse()));
      } else if (starts_factor()) {
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (eat("-")) return mul(Value::scalar(Scalar(-1)), unary());
    if (eat("+")) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!eat("^")) return base;
    skip_ws();
    const std::size_t where = pos_;
    bool neg = eat("-");
    const long n = integer();
    const long e = neg ? -n : n;
    if (base.kind == Value::kScalar) {
      Scalar r(1);
      for (long k = 0; k < std::labs(e); ++k) r *= base.s;
      if (e < 0) {
        if (r.is_zero()) throw ParseError("zero to a negative power", where);
        r = r.inverse();
      }
      return Value::scalar(r);
    }
    if (base.kind == Value::kOp) {
      if (e < 0) throw ParseError("negative power of an operator", where);
      Op f = base.op;
      return Value::oper([f, e](const State& v) {
        State r = v;
        for (long k = 0; k < e; ++k) r = f(r);
        return r;
      });
    }
    throw ParseError("power of a state", where);
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(t_.substr(start, pos_ - start));
  }

  long signed_integer() {
    const bool neg = eat("-");
    if (!neg) eat("+");
    const long n = integer();
    return neg ? -n : n;
  }

  Value primary() {
    skip_ws();
    if (pos_ >= t_.size()) fail("unexpected end of input");
    if (eat("(")) {
      Value v = expr();
      expect(")");
      return v;
    }
    if (eat("√")) {
      const long n = integer();
      if (n == 2) return Value::scalar(Scalar::sqrt2());
      if (n == 3) return Value::scalar(Scalar::sqrt3());
      if (n == 6) return Value::scalar(Scalar::sqrt6());
      fail("only square roots of 2, 3 and 6 are supported");
    }
    if (eat("|")) return Value::state(lattice_literal());
    const unsigned char c = static_cast<unsigned char>(t_[pos_]);
    if (std::isdigit(c)) return Value::scalar(Scalar(Rational(integer())));
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '_')) ++pos_;
      const std::string id = t_.substr(start, pos_ - start);
      if ((id == "h" || id == "L") && at("(")) {
        expect("(");
        const long n = signed_integer();
        expect(")");
        if (id == "h") return Value::oper([n](const State& v) { return heisenberg(static_cast<int>(n), v); });
        return Value::oper([n](const State& v) { return virasoro(static_cast<int>(n), v); });
      }
      if (id == "i") return Value::scalar(Scalar::i());
      if (id == "r2") return Value::scalar(Scalar::sqrt2());
      if (id == "r3") return Value::scalar(Scalar::sqrt3());
      if (id == "r6") return Value::scalar(Scalar::sqrt6());
      if (!is_named_vector(id)) throw ParseError("unknown identifier '" + id + "'", start);
      return Value::state(named_vector(id));
    }
    fail("unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }

  State lattice_literal() {
    // after '|': 0>  or  [-]p[/q]b>
    skip_ws();
    if (eat("0>")) return State::vacuum();
    const long num = signed_integer();
    long den = 1;
    if (eat("/")) den = integer();
    if (den == 0) fail("zero denominator");
    expect("b");
    expect(">");
    const Rational q8 = frac(8 * num, den);
    if (q8.get_den() != 1) fail("lattice point must lie in (1/8) Z b");
    return State::lattice(static_cast<int>(q8.get_num().get_si()));
  }

  Value add(const Value& a, const Value& b, int sign) {
    if (a.kind != b.kind) fail("cannot add a scalar, a state and an operator to each other");
    switch (a.kind) {
      case Value::kScalar: return Value::scalar(sign > 0 ? a.s + b.s : a.s - b.s);
      case Value::kState: return Value::state(sign > 0 ? a.v + b.v : a.v - b.v);
      case Value::kOp: {
        Op f = a.op, g = b.op;
        return Value::oper([f, g, sign](const State& v) {
          State r = f(v);
          r.axpy(Scalar(sign), g(v));
          return r;
        });
      }
    }
    fail("bad operand");
  }

  Value mul(const Value& a, const Value& b) {
    using K = Value::Kind;
    if (a.kind == K::kScalar && b.kind == K::kScalar) return Value::scalar(a.s * b.s);
    if (a.kind == K::kScalar && b.kind == K::kState) return Value::state(b.v * a.s);
    if (a.kind == K::kState && b.kind == K::kScalar) return Value::state(a.v * b.s);
    if (a.kind == K::kOp && b.kind == K::kState) return Value::state(a.op(b.v));
    if (a.kind == K::kOp && b.kind == K::kOp) {
      Op f = a.op, g = b.op;
      return Value::oper([f, g](const State& v) { return f(g(v)); });
    }
    if (a.kind == K::kScalar && b.kind == K::kOp) {
      Scalar c = a.s;
      Op g = b.op;
      return Value::oper([c, g](const State& v) { return g(v) * c; });
    }
    if (a.kind == K::kOp && b.kind == K::kScalar) {
      Scalar c = b.s;
      Op f = a.op;
      return Value::oper([c, f](const State& v) { return f(v) * c; });
    }
    fail("cannot multiply these operands (state times state or state times operator)");
  }
};

}  // namespace

State parse_state_expr(const std::string& text) {
  Value v = Parser(text).parse_all();
  if (v.kind == Value::kState) return v.v;
  if (v.kind == Value::kScalar) {
    if (v.s.is_zero()) return State();
    return State::vacuum() * v.s;
  }
  throw ParseError("expression denotes an operator, not a state", 0);
}

Scalar parse_scalar_expr(const std::string& text) {
  Value v = Parser(text).parse_all();
  if (v.kind != Value::kScalar) throw ParseError("expression is not a scalar", 0);
  return v.s;
}

Rational parse_rational(const std::string& text) {
  const Scalar s = parse_scalar_expr(text);
  if (!s.is_rational()) throw ParseError("expression is not rational", 0);
  return s.as_rational();
}

}  // namespace voalab
