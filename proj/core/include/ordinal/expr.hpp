#pragma once

// Text syntax for ordinal expressions:
//
//   expr := sum
//   sum  := prod { "+" prod }          left associative
//   prod := pow { "*" pow }            left associative
//   pow  := atom [ "^" pow ]           right associative
//   atom := NAT | "w" | "eps0" | "(" expr ")"
//         | "suc" "(" expr { "," expr } ")"
//         | "sup" "(" expr { "," expr } ")"
//         | "ack" "(" expr "," expr "," expr ")"
//
// Printing uses " + " and bare "*", "^", ", " and the fewest parentheses
// that parse back to the same tree.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordinal/compare.hpp"
#include "ordinal/error.hpp"
#include "ordinal/mlseq.hpp"
#include "ordinal/names.hpp"

namespace ordinal {

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : InvalidArgument("at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  /// Byte offset into the input.
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct Expr {
  enum class Kind { Nat, Omega, Eps0, Suc, Sup, Ack, Add, Mul, Pow };

  Kind kind = Kind::Nat;
  std::uint64_t value = 0;
  std::vector<Expr> args;

  friend bool operator==(const Expr&, const Expr&) = default;
};

Expr parse(std::string_view text);
std::string print(const Expr& e);
Name lower(const Expr& e);

/// parse then lower.
Name parse_name(std::string_view text);

struct ExprAtom {
  Expr lhs;
  Rel rel = Rel::Le;
  Expr rhs;
};

/// `ATOM { "," ATOM }` with ATOM := expr ("<" | "<=") expr.
std::vector<ExprAtom> parse_atoms(std::string_view text);
Sequent lower(const std::vector<ExprAtom>& atoms);

}  // namespace ordinal
