#include "ordinal/arith.hpp"

#include <string>

#include "intern.hpp"

namespace ordinal {

namespace {

// Node over b's index with children f(b_j), keeping b's stabilization point.
Name map_node(const char* op, const Name& a, const Name& b, Name (*f)(const Name&, const Name&)) {
  if (b.index().is_finite()) {
    std::vector<Name> children;
    children.reserve(b.index().count());
    for (std::uint64_t j = 0; j < b.index().count(); ++j) children.push_back(f(a, b.at(j)));
    return node_of(children);
  }
  return detail::memo_construct(op, {a.ident(), b.ident()}, [&] {
    return detail::make_nat_node([a, b, f](std::uint64_t j) { return f(a, b.at(j)); }, 0,
                                 b.stable_from());
  });
}

// sup_j g(a, b_j) over b's index.
Name sup_over(const char* op, const Name& a, const Name& b, Name (*g)(const Name&, const Name&)) {
  return detail::memo_construct(op, {a.ident(), b.ident()}, [&] {
    if (b.index().is_finite()) {
      std::vector<Name> members;
      members.reserve(b.index().count());
      for (std::uint64_t j = 0; j < b.index().count(); ++j) members.push_back(g(a, b.at(j)));
      return detail::sup_family_lenient(Family::of(std::move(members)));
    }
    return detail::sup_family_lenient(
        Family::over_nat([a, b, g](std::uint64_t j) { return g(a, b.at(j)); }, b.stable_from()));
  });
}

Name mul_step(const Name& a, const Name& bj) { return add(mul(a, bj), a); }

Name pow_step(const Name& a, const Name& bj) { return mul(pow(a, bj), a); }

}  // namespace

Name add(const Name& a, const Name& b) {
  if (b.is_zero()) return a;
  if (b.index().is_finite()) {
    return detail::memo_construct("add", {a.ident(), b.ident()},
                                  [&] { return map_node("add", a, b, add); });
  }
  return map_node("add", a, b, add);
}

Name mul(const Name& a, const Name& b) {
  if (b.is_zero() || a.is_zero()) return zero();
  return sup_over("mul", a, b, mul_step);
}

Name pow(const Name& a, const Name& b) {
  if (b.is_zero()) return und(1);
  if (a.is_zero()) return zero();
  return sup_over("pow", a, b, pow_step);
}

Name acko(const Name& a, const Name& b, const Name& c) {
  if (c.is_zero()) return add(a, b);
  if (b.is_zero()) return a;
  return detail::memo_construct("acko", {a.ident(), b.ident(), c.ident()}, [&] {
    auto inner = [a, b, c](std::uint64_t k) {
      Name ck = c.at(k);
      auto member = [a, b, c, ck](std::uint64_t j) { return acko(a, acko(a, b.at(j), c), ck); };
      if (b.index().is_finite()) {
        std::vector<Name> members;
        for (std::uint64_t j = 0; j < b.index().count(); ++j) members.push_back(member(j));
        return detail::sup_family_lenient(Family::of(std::move(members)));
      }
      return detail::sup_family_lenient(Family::over_nat(member));
    };
    if (c.index().is_finite()) {
      std::vector<Name> members;
      for (std::uint64_t k = 0; k < c.index().count(); ++k) members.push_back(inner(k));
      return detail::sup_family_lenient(Family::of(std::move(members)));
    }
    return detail::sup_family_lenient(Family::over_nat(inner));
  });
}

Name eps0() {
  return canonical_constant("eps0", [] { return acko(omega(), omega(), und(1)); });
}

Name seq_sum(const LinearIndexOrder& ord, const Family& bs,
             std::variant<std::uint64_t, Top> upto) {
  if (!(bs.index == ord.carrier)) {
    throw InvalidArgument("seq_sum: family index " + bs.index.to_string() +
                          " differs from carrier " + ord.carrier.to_string());
  }
  std::uint64_t l = 0;
  if (std::holds_alternative<Top>(upto)) {
    if (!ord.carrier.is_finite()) {
      throw InvalidArgument("seq_sum: the sum over a whole Nat carrier is not a name");
    }
    l = ord.carrier.count();
  } else {
    l = std::get<std::uint64_t>(upto);
    if (!ord.carrier.contains(l)) {
      throw InvalidArgument("seq_sum: bound " + std::to_string(l) + " outside " +
                            ord.carrier.to_string());
    }
  }
  // The partial sums form a chain over a finite range, built bottom-up.
  std::vector<Name> partial{zero()};
  partial.reserve(l + 1);
  for (std::uint64_t k = 0; k < l; ++k) {
    std::vector<Name> members;
    members.reserve(k + 1);
    for (std::uint64_t i = 0; i <= k; ++i) members.push_back(add(partial[i], bs.at(i)));
    partial.push_back(sup_finite(members));
  }
  return partial[l];
}

}  // namespace ordinal
