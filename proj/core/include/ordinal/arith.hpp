#pragma once

// Ordinal arithmetic by recursion on the right operand. Results are names,
// not normal forms: equal values may have different shapes, and comparisons
// go through the engine or the kernel.

#include <cstdint>
#include <variant>

#include "ordinal/names.hpp"

namespace ordinal {

/// a + 0 = a (the same node); a + <b_j> = <a + b_j>.
Name add(const Name& a, const Name& b);

/// a * 0 = 0; a * <b_j> = sup_j (a * b_j + a).
Name mul(const Name& a, const Name& b);

/// a ^ 0 = 1; a ^ <b_j> = sup_j (a ^ b_j * a).
Name pow(const Name& a, const Name& b);

/// acko(a, b, 0) = a + b
/// acko(a, 0, c) = a                                    for c a node
/// acko(a, b, c) = sup_k sup_j acko(a, acko(a, b_j, c), c_k)
Name acko(const Name& a, const Name& b, const Name& c);

/// acko(w, w, 1), a process-wide constant labelled "eps0".
Name eps0();

/// The standard order on a Fin or Nat carrier, least element 0.
struct LinearIndexOrder {
  Index carrier = Index::fin(0);

  bool precedes(std::uint64_t i, std::uint64_t j) const { return i < j; }
  static constexpr std::uint64_t least() { return 0; }
};

/// Marks the sum over a whole (finite) carrier.
struct Top {};

/// Partial sums: seq_sum(ord, bs, l) = sup over k < l of
/// (seq_sum(ord, bs, k) + b_k), and Zero for l = 0. `Top` on Fin(k) means
/// l = k; on Nat it is rejected.
Name seq_sum(const LinearIndexOrder& ord, const Family& bs,
             std::variant<std::uint64_t, Top> upto);

}  // namespace ordinal
