#include "ordinal/expr.hpp"

#include <cctype>
#include <charconv>

#include "ordinal/arith.hpp"

namespace ordinal {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr expr() { return sum(); }

  std::vector<ExprAtom> atoms() {
    std::vector<ExprAtom> out;
    do {
      ExprAtom a;
      a.lhs = expr();
      skip();
      if (eat("<=")) {
        a.rel = Rel::Le;
      } else if (eat("<")) {
        a.rel = Rel::Lt;
      } else {
        fail("expected '<' or '<='");
      }
      a.rhs = expr();
      out.push_back(std::move(a));
    } while (eat(","));
    return out;
  }

  void finish() {
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(i_, tok.size()) != tok) return false;
    i_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static Expr binary(Expr::Kind k, Expr l, Expr r) {
    Expr e{k, 0, {}};
    e.args.push_back(std::move(l));
    e.args.push_back(std::move(r));
    return e;
  }

  Expr sum() {
    Expr e = prod();
    while (eat("+")) e = binary(Expr::Kind::Add, std::move(e), prod());
    return e;
  }

  Expr prod() {
    Expr e = power();
    while (eat("*")) e = binary(Expr::Kind::Mul, std::move(e), power());
    return e;
  }

  Expr power() {
    Expr e = atom();
    if (eat("^")) e = binary(Expr::Kind::Pow, std::move(e), power());
    return e;
  }

  std::vector<Expr> arglist() {
    expect("(");
    std::vector<Expr> args;
    args.push_back(expr());
    while (eat(",")) args.push_back(expr());
    expect(")");
    return args;
  }

  Expr atom() {
    skip();
    if (i_ == s_.size()) fail("unexpected end of input");
    const std::size_t start = i_;
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
      if (ec != std::errc{}) fail("numeral out of range");
      i_ = static_cast<std::size_t>(p - s_.data());
      return Expr{Expr::Kind::Nat, v, {}};
    }
    if (c == '(') {
      ++i_;
      Expr e = expr();
      expect(")");
      return e;
    }
    std::size_t j = i_;
    while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
    std::string_view word = s_.substr(i_, j - i_);
    if (word.empty()) fail("unexpected '" + std::string(1, c) + "'");
    i_ = j;
    if (word == "w") return Expr{Expr::Kind::Omega, 0, {}};
    if (word == "eps0") return Expr{Expr::Kind::Eps0, 0, {}};
    if (word == "suc") return Expr{Expr::Kind::Suc, 0, arglist()};
    if (word == "sup") return Expr{Expr::Kind::Sup, 0, arglist()};
    if (word == "ack") {
      Expr e{Expr::Kind::Ack, 0, arglist()};
      if (e.args.size() != 3) {
        throw ParseError(start, "ack takes 3 arguments, got " + std::to_string(e.args.size()));
      }
      return e;
    }
    i_ = start;
    fail("unknown identifier '" + std::string(word) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

// 0 sum, 1 product, 2 power, 3 atom.
int level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
      return 0;
    case Expr::Kind::Mul:
      return 1;
    case Expr::Kind::Pow:
      return 2;
    default:
      return 3;
  }
}

void emit(const Expr& e, std::string& out);

void emit_at(const Expr& e, int min_level, std::string& out) {
  if (level(e) < min_level) {
    out += '(';
    emit(e, out);
    out += ')';
  } else {
    emit(e, out);
  }
}

void emit_list(const std::vector<Expr>& args, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    emit(args[i], out);
  }
  out += ')';
}

void emit(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Nat:
      out += std::to_string(e.value);
      return;
    case Expr::Kind::Omega:
      out += 'w';
      return;
    case Expr::Kind::Eps0:
      out += "eps0";
      return;
    case Expr::Kind::Suc:
      out += "suc";
      emit_list(e.args, out);
      return;
    case Expr::Kind::Sup:
      out += "sup";
      emit_list(e.args, out);
      return;
    case Expr::Kind::Ack:
      out += "ack";
      emit_list(e.args, out);
      return;
    case Expr::Kind::Add:
      emit_at(e.args[0], 0, out);
      out += " + ";
      emit_at(e.args[1], 1, out);
      return;
    case Expr::Kind::Mul:
      emit_at(e.args[0], 1, out);
      out += '*';
      emit_at(e.args[1], 2, out);
      return;
    case Expr::Kind::Pow:
      emit_at(e.args[0], 3, out);
      out += '^';
      emit_at(e.args[1], 2, out);
      return;
  }
}

std::vector<Name> lower_all(const std::vector<Expr>& args) {
  std::vector<Name> out;
  out.reserve(args.size());
  for (const Expr& a : args) out.push_back(lower(a));
  return out;
}

}  // namespace

Expr parse(std::string_view text) {
  Parser p(text);
  Expr e = p.expr();
  p.finish();
  return e;
}

std::string print(const Expr& e) {
  std::string out;
  emit(e, out);
  return out;
}

Name lower(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Nat:
      return und(e.value);
    case Expr::Kind::Omega:
      return omega();
    case Expr::Kind::Eps0:
      return eps0();
    case Expr::Kind::Suc:
      return suc_list(lower_all(e.args));
    case Expr::Kind::Sup:
      return sup_finite(lower_all(e.args));
    case Expr::Kind::Ack:
      return acko(lower(e.args[0]), lower(e.args[1]), lower(e.args[2]));
    case Expr::Kind::Add:
      return add(lower(e.args[0]), lower(e.args[1]));
    case Expr::Kind::Mul:
      return mul(lower(e.args[0]), lower(e.args[1]));
    case Expr::Kind::Pow:
      return pow(lower(e.args[0]), lower(e.args[1]));
  }
  throw InvalidArgument("lower: bad expression");
}

Name parse_name(std::string_view text) { return lower(parse(text)); }

std::vector<ExprAtom> parse_atoms(std::string_view text) {
  Parser p(text);
  auto atoms = p.atoms();
  p.finish();
  return atoms;
}

Sequent lower(const std::vector<ExprAtom>& atoms) {
  std::vector<Atom> out;
  for (const ExprAtom& a : atoms) out.push_back(Atom{lower(a.lhs), a.rel, lower(a.rhs)});
  return Sequent(std::move(out));
}

}  // namespace ordinal
