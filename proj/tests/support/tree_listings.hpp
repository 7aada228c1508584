#pragma once
// Independent references for tree tests: the list universe by mu bound and
// the printed node listings of the first transfinite trees.
#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "ordinal/arith.hpp"
#include "ordinal/trees.hpp"

namespace treeref {

using ordinal::Name;
using ordinal::NodePath;

// All lists of naturals with mu <= bound, built without the library.
inline std::set<NodePath> universe(std::uint64_t bound) {
  std::set<NodePath> out;
  std::function<void(NodePath&, std::uint64_t)> go = [&](NodePath& p, std::uint64_t left) {
    out.insert(p);
    for (std::uint64_t x = 0; x + 1 <= left; ++x) {
      p.push_back(x);
      go(p, left - x - 1);
      p.pop_back();
    }
  };
  NodePath p;
  go(p, bound);
  return out;
}

inline std::set<NodePath> filtered(const Name& a, std::uint64_t bound) {
  std::set<NodePath> out;
  for (const auto& p : universe(bound)) {
    if (ordinal::member(p, a)) out.insert(p);
  }
  return out;
}

// The node lists printed for the first transfinite trees.
inline const std::vector<NodePath> kOmegaListed = {
    {}, {0}, {1}, {1, 0}, {2}, {2, 0}, {2, 0, 0}, {3}, {3, 0}, {3, 0, 0}, {3, 0, 0, 0}};
inline const std::vector<NodePath> kOmegaPlusOneListed = {
    {}, {0}, {0, 0}, {0, 1}, {0, 1, 0}, {0, 2}, {0, 2, 0}, {0, 2, 0, 0},
    {0, 3}, {0, 3, 0}, {0, 3, 0, 0}, {0, 3, 0, 0, 0}};
inline const std::vector<NodePath> kOmegaPlusTwoListed = {
    {}, {0}, {0, 0}, {0, 0, 0}, {0, 0, 1}, {0, 0, 1, 0}, {0, 0, 2}, {0, 0, 2, 0},
    {0, 0, 2, 0, 0}, {0, 0, 3}, {0, 0, 3, 0}, {0, 0, 3, 0, 0}, {0, 0, 3, 0, 0, 0}};
inline const std::vector<NodePath> kOmegaPlusOmegaListed = {
    {}, {0}, {0, 0}, {0, 1}, {0, 1, 0}, {0, 2}, {0, 2, 0}, {0, 2, 0, 0},
    {0, 3}, {0, 3, 0}, {0, 3, 0, 0}, {0, 3, 0, 0, 0},
    {1}, {1, 0}, {1, 0, 0}, {1, 0, 1}, {1, 0, 1, 0}, {1, 0, 2}, {1, 0, 2, 0},
    {1, 0, 2, 0, 0}, {1, 0, 3}, {1, 0, 3, 0}, {1, 0, 3, 0, 0}, {1, 0, 3, 0, 0, 0},
    {2}, {2, 0}, {2, 0, 0}, {2, 0, 0, 0}, {2, 0, 0, 1}, {2, 0, 0, 1, 0}, {2, 0, 0, 2},
    {2, 0, 0, 2, 0}, {2, 0, 0, 2, 0, 0}, {2, 0, 0, 3}, {2, 0, 0, 3, 0}, {2, 0, 0, 3, 0, 0},
    {2, 0, 0, 3, 0, 0, 0}};

// Pattern behind the listings: prefix p followed by [n, 0, ..., 0] with
// at most n zeros. For omega + omega the prefix is [k, 0^k].
inline bool omega_pattern(const NodePath& s) {
  if (s.empty()) return true;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != 0) return false;
  }
  return s.size() - 1 <= s[0];
}
inline bool omega_plus_k_pattern(const NodePath& s, std::size_t k) {
  std::size_t lead = std::min(s.size(), k);
  for (std::size_t i = 0; i < lead; ++i) {
    if (s[i] != 0) return false;
  }
  return omega_pattern(NodePath(s.begin() + static_cast<std::ptrdiff_t>(lead), s.end()));
}
inline bool omega_plus_omega_pattern(const NodePath& s) {
  if (s.empty()) return true;
  return omega_plus_k_pattern(NodePath(s.begin() + 1, s.end()), s[0]);
}

struct Listing {
  const char* label;
  Name name;
  const std::vector<NodePath>* listed;
  std::function<bool(const NodePath&)> pattern;
};

inline std::vector<Listing> listings() {
  Name w = ordinal::omega();
  return {
      {"omega", w, &kOmegaListed, omega_pattern},
      {"omega+1", ordinal::add(w, ordinal::und(1)), &kOmegaPlusOneListed,
       [](const NodePath& s) { return omega_plus_k_pattern(s, 1); }},
      {"omega+2", ordinal::add(w, ordinal::und(2)), &kOmegaPlusTwoListed,
       [](const NodePath& s) { return omega_plus_k_pattern(s, 2); }},
      {"omega+omega", ordinal::add(w, w), &kOmegaPlusOmegaListed, omega_plus_omega_pattern},
  };
}

}  // namespace treeref
