#pragma once

// Library-internal helpers shared by the name constructors and arithmetic.

#include <functional>
#include <string_view>
#include <vector>

#include "ordinal/names.hpp"

namespace ordinal {

struct NodeData {
  Index index = Index::fin(0);
  std::vector<Name> children;  // Fin nodes
  Generator gen;               // Nat nodes
  Ident ident = 0;
  bool finitary = false;
  std::uint32_t height = 0;
  std::optional<std::uint64_t> stable_from;
};

struct NameAccess {
  static Name wrap(std::shared_ptr<const NodeData> node) { return Name(std::move(node)); }
  static const NodeData* node(const Name& a) { return a.node_.get(); }
};

}  // namespace ordinal

namespace ordinal::detail {

Ident fresh_ident();

/// Nat-indexed node with the given identity (fresh when ident == 0).
Name make_nat_node(Generator gen, Ident ident = 0,
                   std::optional<std::uint64_t> stable_from = std::nullopt);

/// Memoizes a construction by (operation, argument identities). Sound
/// because equal identities denote observationally equal names; it keeps
/// repeated constructions of infinitary names identity-stable.
Name memo_construct(std::string_view op, const std::vector<Ident>& args,
                    const std::function<Name()>& build);

/// Family sup that treats Zero members as contributing no subordinals
/// instead of rejecting them. Used by arithmetic, where Zero members arise
/// from a Zero left operand.
Name sup_family_lenient(const Family& fs);

}  // namespace ordinal::detail
