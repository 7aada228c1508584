#pragma once

// Ordinal names: Zero, or the suc of a family indexed by Fin(k) or by the
// naturals. Finite nodes are hash-consed so that structurally equal names
// share one identity token; nodes over the naturals carry a fresh token per
// construction unless they are library constants.

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordinal/error.hpp"

namespace ordinal {

using Ident = std::uint64_t;

/// Identity token of Zero. Node tokens are allocated from 1 upwards.
inline constexpr Ident kZeroIdent = 0;

/// An index set: Fin(k) = {0, ..., k-1} or the naturals.
class Index {
 public:
  enum class Kind { Fin, Nat };

  static constexpr Index fin(std::uint64_t k) { return Index(Kind::Fin, k); }
  static constexpr Index nat() { return Index(Kind::Nat, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Fin; }
  /// Number of elements; only meaningful for Fin.
  constexpr std::uint64_t count() const { return count_; }
  constexpr bool contains(std::uint64_t i) const {
    return kind_ == Kind::Nat || i < count_;
  }

  friend constexpr bool operator==(Index a, Index b) {
    return a.kind_ == b.kind_ && a.count_ == b.count_;
  }

  std::string to_string() const;

 private:
  constexpr Index(Kind kind, std::uint64_t count) : kind_(kind), count_(count) {}

  Kind kind_;
  std::uint64_t count_;
};

class Name;
struct NodeData;

using Generator = std::function<Name(std::uint64_t)>;

/// Immutable handle on an ordinal name. Default-constructed handles are Zero.
/// Copies share the underlying node; names are safe to share across threads.
class Name {
 public:
  Name() = default;

  bool is_zero() const { return node_ == nullptr; }
  bool is_node() const { return node_ != nullptr; }

  /// Index of the definitional subordinals; Fin(0) for Zero.
  Index index() const;

  /// The i-th definitional subordinal. Throws InvalidArgument when i is not
  /// in index(); wraps generator failures in EngineError.
  Name at(std::uint64_t i) const;

  Ident ident() const;

  /// Hereditarily finitary: every index set reachable from here is Fin.
  bool is_finitary() const;

  /// Height of a finitary name (0 for Zero). Only defined when is_finitary().
  std::uint32_t height() const;

  /// For a Nat-indexed node, an s such that at(n) has the same identity as
  /// at(s) for every n >= s. Lets the engine treat the index as finite.
  std::optional<std::uint64_t> stable_from() const;

  /// Indices that must be inspected to see every distinct subordinal:
  /// count() for Fin, s + 1 for eventually constant Nat families, nullopt
  /// otherwise.
  std::optional<std::uint64_t> effective_size() const;

  /// Library constants (w, eps0, ...) carry a short label for printing.
  const std::string* label() const;

  friend bool same(const Name& a, const Name& b) { return a.ident() == b.ident(); }

 private:
  friend struct NameAccess;
  explicit Name(std::shared_ptr<const NodeData> node) : node_(std::move(node)) {}

  std::shared_ptr<const NodeData> node_;
};

/// An indexed family of names. `ident` identifies the family itself (two
/// families with equal idents are observationally equal).
struct Family {
  Index index = Index::fin(0);
  Generator at;
  Ident ident = 0;
  std::optional<std::uint64_t> stable_from;

  /// A finite family backed by a materialized vector.
  static Family of(std::vector<Name> members);
  /// A family over the naturals with a fresh identity.
  static Family over_nat(Generator gen,
                         std::optional<std::uint64_t> stable_from = std::nullopt);
};

// -- Constructors -------------------------------------------------------------

Name zero();

/// suc of a family. Fin(0) families are rejected; Zero is built by zero().
Name mk_node(const Family& f);

/// Finite node over the given subordinals, hash-consed.
Name node_of(std::span<const Name> subordinals);
Name node_of(std::initializer_list<Name> subordinals);

Name suc(const Name& a);
Name suc_list(std::span<const Name> as);
Name suc_list(std::initializer_list<Name> as);

/// n-fold suc of Zero.
Name und(std::uint64_t n);

/// w = suc-family of und(n) over the naturals; a process-wide constant.
Name omega();

/// Returns the constant registered under `key`, building it on first use.
/// The node gets `key` as its print label.
Name canonical_constant(const std::string& key, const std::function<Name()>& build);

/// Family sup over names that are all Nodes. The result's subordinals are the
/// members' subordinals: block concatenation for finite families of finite
/// members, round-robin interleaving for finite families with an infinite
/// member, Cantor diagonal order for families over the naturals.
Name sup_family(const Family& fs);

/// Zero when every member is Zero, otherwise the sup of the non-Zero members.
Name sup_finite(std::span<const Name> as);
Name sup_finite(std::initializer_list<Name> as);

/// Definitional subordinals; the empty Fin(0) view for Zero.
Family subordinals(const Name& a);

/// Equivalent filtering name: subordinal F is sup_finite over the subset of
/// indices whose bits are set in F (finite subsets enumerated by bitmask).
Name filtering(const Name& a);

// -- Structural recursion -----------------------------------------------------

template <class R>
struct FoldResults {
  Index index = Index::fin(0);
  std::function<R(std::uint64_t)> at;
};

template <class R>
using FoldStep = std::function<R(const Name&, const FoldResults<R>&)>;

namespace detail {
template <class R>
R fold_impl(const Name& a, const FoldStep<R>& step, std::size_t remaining) {
  if (remaining == 0) {
    throw DepthExhausted("fold: depth guard exhausted (ill-founded generator?)");
  }
  FoldResults<R> results;
  results.index = a.index();
  if (results.index.is_finite()) {
    auto values = std::make_shared<std::vector<R>>();
    values->reserve(results.index.count());
    for (std::uint64_t i = 0; i < results.index.count(); ++i) {
      values->push_back(fold_impl<R>(a.at(i), step, remaining - 1));
    }
    results.at = [values](std::uint64_t i) { return values->at(i); };
  } else {
    results.at = [a, &step, remaining](std::uint64_t i) {
      return fold_impl<R>(a.at(i), step, remaining - 1);
    };
  }
  return step(a, results);
}
}  // namespace detail

/// Structural recursion on a name. Finite branchings are evaluated eagerly;
/// results for Nat-indexed nodes are produced on demand. The lazy results
/// reference `step`, so they must not outlive the call.
template <class R>
R fold(const Name& a, const FoldStep<R>& step, std::size_t depth_guard = 1 << 16) {
  return detail::fold_impl<R>(a, step, depth_guard);
}

// -- Bit sequences and the omniscience examples ------------------------------

/// A {0,1}-sequence given by a finite prefix and a tail policy. ConstLast
/// repeats the last prefix bit (0 for an empty prefix) and is decidable;
/// Opaque answers from `tail` and can only be queried pointwise.
struct BitSeq {
  enum class Tail { ConstLast, Opaque };

  std::vector<std::uint8_t> prefix;
  Tail tail = Tail::ConstLast;
  std::function<bool(std::uint64_t)> opaque;

  bool at(std::uint64_t n) const;
  /// For ConstLast: first index from which the sequence is constant.
  std::optional<std::uint64_t> constant_from() const;

  static BitSeq const_last(std::vector<std::uint8_t> prefix);
  /// Opaque sequence that agrees with const_last(prefix) pointwise but hides
  /// the fact that it is eventually constant.
  static BitSeq opaque_last(std::vector<std::uint8_t> prefix);
  static BitSeq parse(const std::string& bits, Tail tail);
};

struct LlpoNames {
  Name eps;       // suc-family of und(v_n)
  Name eps_even;  // suc-family of und(v_{2m})
  Name eps_odd;   // suc-family of und(v_{2m+1})
};

struct LpoNames {
  Name eps;        // suc-family of und(u_n)
  Name eps_prime;  // suc-family of und(u_n + 1)
};

/// Caller contract: v takes the value 1 at most once.
LlpoNames eps_llpo(const BitSeq& v);
/// Caller contract: u is nondecreasing.
LpoNames eps_lpo(const BitSeq& u);

/// Canonical expression text of a name: numerals for und(n), labels for
/// constants, suc(...) for other finite nodes, `<nat#ident>` otherwise.
std::string to_string(const Name& a);

}  // namespace ordinal
