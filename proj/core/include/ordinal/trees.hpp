#pragma once

// Tree(a): the prefix-closed set of finite lists of naturals naming the
// nodes of a as a well-founded tree. n :: s is a node of <a_i> iff n is an
// index and s is a node of a_n.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordinal/names.hpp"

namespace ordinal {

using NodePath = std::vector<std::uint64_t>;

bool member(const NodePath& path, const Name& a);

/// mu([l1..lk]) = sum of (li + 1).
std::uint64_t mu(const NodePath& path);

/// All nodes with mu <= bound, ordered by (mu, length, lexicographic).
std::vector<NodePath> enumerate(const Name& a, std::uint64_t mu_bound);

/// Number of nodes of a finitary name. Throws InvalidArgument otherwise.
std::uint64_t node_count(const Name& a);

struct BarProbe {
  bool guard_exhausted = false;
  /// Least n with [f(0), ..., f(n-1)] outside the tree, when found.
  std::uint64_t length = 0;
};

/// Walks the branch chosen by f and reports where it leaves the tree.
BarProbe bar_probe(const Name& a, const std::function<std::uint64_t(std::uint64_t)>& f,
                   std::uint64_t guard);

/// "[a,b,c]", "[]" for the root.
std::string to_string(const NodePath& path);

}  // namespace ordinal
