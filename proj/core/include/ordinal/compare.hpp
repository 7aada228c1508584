#pragma once

// Fuel-bounded evaluation of the simultaneous inductive definitions
//
//   a <= b1..bm   iff  a_i < b1..bm for every i in In(a)
//   a <  b1..bm   iff  a <= (b1)_F1, ..., (bm)_Fm for some finite F1..Fm,
//                      not all empty
//
// with Zero treated as a node over Fin(0). Verdicts are three-valued: True
// only from exhausted universals and explicit witnesses, False only from
// counterexamples and exhausted existentials. On hereditarily finitary names
// with enough width the answer is always definite.

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ordinal/names.hpp"

namespace ordinal {

class TriBool {
 public:
  enum class Value : std::uint8_t { True, False, Unknown };
  enum Reason : std::uint8_t {
    kNoReason = 0,
    kWidthTruncated = 1,
    kDepthExhausted = 2,
  };

  constexpr TriBool() = default;
  static constexpr TriBool yes() { return TriBool(Value::True, kNoReason); }
  static constexpr TriBool no() { return TriBool(Value::False, kNoReason); }
  static constexpr TriBool unknown(std::uint8_t reasons = kNoReason) {
    return TriBool(Value::Unknown, reasons);
  }
  static constexpr TriBool from(bool b) { return b ? yes() : no(); }

  constexpr Value value() const { return value_; }
  constexpr bool is_true() const { return value_ == Value::True; }
  constexpr bool is_false() const { return value_ == Value::False; }
  constexpr bool is_unknown() const { return value_ == Value::Unknown; }
  constexpr bool is_definite() const { return value_ != Value::Unknown; }
  /// Diagnostic tags, only set on Unknown.
  constexpr std::uint8_t reasons() const { return reasons_; }

  /// Reason tags take no part in equality.
  friend constexpr bool operator==(TriBool a, TriBool b) { return a.value_ == b.value_; }

  // Strong Kleene connectives.
  friend constexpr TriBool operator&&(TriBool a, TriBool b) {
    if (a.is_false() || b.is_false()) return no();
    if (a.is_true() && b.is_true()) return yes();
    return unknown(a.reasons_ | b.reasons_);
  }
  friend constexpr TriBool operator||(TriBool a, TriBool b) {
    if (a.is_true() || b.is_true()) return yes();
    if (a.is_false() && b.is_false()) return no();
    return unknown(a.reasons_ | b.reasons_);
  }
  friend constexpr TriBool operator!(TriBool a) {
    if (a.is_true()) return no();
    if (a.is_false()) return yes();
    return a;
  }

  /// "true", "false" or "unknown".
  std::string to_string() const;

 private:
  constexpr TriBool(Value v, std::uint8_t r) : value_(v), reasons_(r) {}

  Value value_ = Value::Unknown;
  std::uint8_t reasons_ = kNoReason;
};

struct Fuel {
  /// Indices enumerated per Nat-indexed (or oversized) family.
  std::uint64_t width = 64;
  /// Recursion-depth guard.
  std::uint64_t depth = 512;

  /// Enough fuel to decide every finitary query.
  static constexpr Fuel unbounded() {
    return Fuel{std::numeric_limits<std::uint64_t>::max(), std::uint64_t{1} << 20};
  }
};

enum class Rel { Le, Lt };

/// A comparison claim `lhs <= rhs...` or `lhs < rhs...` against a nonempty
/// list.
struct Judgment {
  Rel kind = Rel::Le;
  Name lhs;
  std::vector<Name> rhs;

  Judgment() = default;
  /// Throws InvalidArgument on an empty right-hand side.
  Judgment(Rel kind, Name lhs, std::vector<Name> rhs);

  std::string to_string() const;
};

/// A run of related queries at one fuel setting. Unknown sub-verdicts found
/// by earlier queries are reused by later ones; definite verdicts go through
/// the global memo as usual. Not thread-safe; use one per thread.
class Evaluator {
 public:
  explicit Evaluator(Fuel fuel = {});
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  TriBool le(const Name& a, std::span<const Name> bs);
  TriBool lt(const Name& a, std::span<const Name> bs);
  TriBool decide(const Judgment& j);
  Fuel fuel() const { return fuel_; }

 private:
  struct Impl;
  Fuel fuel_;
  std::unique_ptr<Impl> impl_;
};

TriBool le(const Name& a, std::span<const Name> bs, Fuel fuel = {});
TriBool le(const Name& a, std::initializer_list<Name> bs, Fuel fuel = {});
TriBool lt(const Name& a, std::span<const Name> bs, Fuel fuel = {});
TriBool lt(const Name& a, std::initializer_list<Name> bs, Fuel fuel = {});
TriBool decide(const Judgment& j, Fuel fuel = {});

/// a =_Ord b: Kleene conjunction of a <= b and b <= a.
TriBool eq(const Name& a, const Name& b, Fuel fuel = {});

enum class Order { Lt, Eq, Gt };

/// Total comparison on hereditarily finitary names; throws InvalidArgument
/// on anything else.
Order cmp_finitary(const Name& a, const Name& b);

std::string to_string(Order o);

/// The first `m` subordinals of each member of `bs`, concatenated. This is
/// the witness selection tried by `lt` at prefix width m.
std::vector<Name> prefix_selection(std::span<const Name> bs, std::uint64_t m);

/// Prefix width used by `lt`. When every member is effectively finite with
/// at most `width` subordinals, the width that takes all of them; otherwise
/// the largest m >= 1 whose selection has at most `width` members (counted
/// before dropping repeats).
std::uint64_t selection_limit(std::span<const Name> bs, std::uint64_t width);

/// Whether the selection at `m` already takes every subordinal of every
/// member.
bool selection_covers(std::span<const Name> bs, std::uint64_t m);

/// Prefix widths tried by `lt` up to `limit`: 1, then limit. Since <= is
/// monotone in its right-hand side, the widest selection decides.
std::vector<std::uint64_t> witness_widths(std::uint64_t limit);

/// Drops repeated members (by identity), keeping first occurrences.
std::vector<Name> distinct(std::vector<Name> bs);

struct MemoStats {
  /// Recursive evaluations not answered from the memo table.
  std::uint64_t evaluations = 0;
  std::uint64_t hits = 0;
  std::uint64_t entries = 0;
};

/// Only definite verdicts are cached, keyed by identity tuples, so caching
/// never changes a verdict.
void clear_memo();
MemoStats memo_stats();

}  // namespace ordinal
