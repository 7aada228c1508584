#include "ordinal/kernel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ordinal {

namespace {

std::vector<Name> concat(std::span<const Name> a, std::span<const Name> b) {
  std::vector<Name> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Name> single(const Name& a) { return {a}; }

bool is_unary(const Name& a) { return a.is_node() && a.index() == Index::fin(1); }

std::string show(const Judgment& j) { return "(" + j.to_string() + ")"; }

// Local check of one node against the given premises. Returns an empty
// string on success. `premises` holds (index, certificate) pairs; for
// infinitary nodes only sampled indices are present.
std::string check_local(const Certificate& c,
                        const std::vector<std::pair<std::uint64_t, Cert>>& premises) {
  const Judgment& j = c.conclusion;
  if (j.rhs.empty()) return "empty right-hand side";
  auto want = [&](std::size_t n) -> std::string {
    if (c.infinitary() || premises.size() != n) {
      return to_string(c.rule) + " expects " + std::to_string(n) + " premises";
    }
    return {};
  };
  auto kind_is = [](const Judgment& x, Rel k) { return x.kind == k; };
  auto prem = [&](std::size_t i) -> const Judgment& { return premises[i].second->conclusion; };

  switch (c.rule) {
    case Rule::ZeroLe:
      if (auto e = want(0); !e.empty()) return e;
      if (!kind_is(j, Rel::Le) || !j.lhs.is_zero()) return "zero_le concludes 0 <= ...";
      return {};

    case Rule::ZeroLt:
      if (auto e = want(0); !e.empty()) return e;
      if (!kind_is(j, Rel::Lt) || !j.lhs.is_zero()) return "zero_lt concludes 0 < ...";
      if (std::none_of(j.rhs.begin(), j.rhs.end(), [](const Name& b) { return b.is_node(); })) {
        return "zero_lt needs a Node on the right";
      }
      return {};

    case Rule::LeIntro: {
      if (!kind_is(j, Rel::Le) || !j.lhs.is_node()) return "le_intro concludes a <= ... for a Node a";
      Index idx = j.lhs.index();
      if (!(c.premise_count() == idx)) {
        return "le_intro premises indexed by " + c.premise_count().to_string() + ", lhs by " +
               idx.to_string();
      }
      for (const auto& [i, p] : premises) {
        const Judgment& pj = p->conclusion;
        if (!kind_is(pj, Rel::Lt) || !same(pj.lhs, j.lhs.at(i)) || !rhs_equiv(pj.rhs, j.rhs)) {
          return "le_intro premise " + std::to_string(i) + " is " + show(pj) + ", want a_" +
                 std::to_string(i) + " < rhs";
        }
      }
      return {};
    }

    case Rule::LtIntro: {
      if (auto e = want(1); !e.empty()) return e;
      if (!kind_is(j, Rel::Lt)) return "lt_intro concludes a < ...";
      if (c.width == 0) return "lt_intro width must be positive";
      std::vector<Name> sel = prefix_selection(j.rhs, c.width);
      if (sel.empty()) return "lt_intro selection is empty";
      const Judgment& pj = prem(0);
      if (!kind_is(pj, Rel::Le) || !same(pj.lhs, j.lhs) || !rhs_equiv(pj.rhs, sel)) {
        return "lt_intro premise " + show(pj) + " does not match the width-" +
               std::to_string(c.width) + " selection";
      }
      return {};
    }

    case Rule::Weaken: {
      if (auto e = want(1); !e.empty()) return e;
      const Judgment& pj = prem(0);
      if (pj.kind != j.kind || !same(pj.lhs, j.lhs) || !rhs_equiv(j.rhs, concat(pj.rhs, c.names))) {
        return "weaken conclusion is not the premise with the extra members";
      }
      return {};
    }

    case Rule::Contract: {
      if (auto e = want(1); !e.empty()) return e;
      const Judgment& pj = prem(0);
      std::vector<Ident> ids;
      for (const Name& b : j.rhs) ids.push_back(b.ident());
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        return "contract conclusion still has duplicates";
      }
      if (pj.kind != j.kind || !same(pj.lhs, j.lhs) || !rhs_equiv(pj.rhs, j.rhs)) {
        return "contract changes the judgment";
      }
      return {};
    }

    case Rule::LtToLe: {
      if (auto e = want(1); !e.empty()) return e;
      const Judgment& pj = prem(0);
      if (!kind_is(pj, Rel::Lt) || !kind_is(j, Rel::Le) || !same(pj.lhs, j.lhs) ||
          !rhs_equiv(pj.rhs, j.rhs)) {
        return "lt_to_le relaxes a < rhs to a <= rhs";
      }
      return {};
    }

    case Rule::TransLeLe:
    case Rule::TransLtLe:
    case Rule::TransLeLt: {
      if (auto e = want(2); !e.empty()) return e;
      const Judgment& p = prem(0);
      const Judgment& q = prem(1);
      Rel pk = c.rule == Rule::TransLtLe ? Rel::Lt : Rel::Le;
      Rel qk = c.rule == Rule::TransLeLt ? Rel::Lt : Rel::Le;
      Rel jk = c.rule == Rule::TransLeLe ? Rel::Le : Rel::Lt;
      if (p.kind != pk || q.kind != qk || j.kind != jk) return to_string(c.rule) + " kind mismatch";
      if (!rhs_equiv(p.rhs, single(q.lhs))) {
        return to_string(c.rule) + " middle mismatch: " + show(p) + " then " + show(q);
      }
      if (!same(j.lhs, p.lhs) || !rhs_equiv(j.rhs, q.rhs)) {
        return to_string(c.rule) + " conclusion is not the composite";
      }
      return {};
    }

    case Rule::LtSucOfLe: {
      if (auto e = want(1); !e.empty()) return e;
      const Judgment& p = prem(0);
      if (!kind_is(p, Rel::Le) || !kind_is(j, Rel::Lt) || !same(p.lhs, j.lhs) ||
          j.rhs.size() != 1 || !is_unary(j.rhs[0]) || !rhs_equiv(p.rhs, single(j.rhs[0].at(0)))) {
        return "lt_suc_of_le turns a <= [b] into a < [suc b]";
      }
      return {};
    }

    case Rule::LeOfLtSuc: {
      if (auto e = want(1); !e.empty()) return e;
      const Judgment& p = prem(0);
      if (!kind_is(p, Rel::Lt) || !kind_is(j, Rel::Le) || !same(p.lhs, j.lhs) ||
          p.rhs.size() != 1 || !is_unary(p.rhs[0]) || !rhs_equiv(j.rhs, single(p.rhs[0].at(0)))) {
        return "le_of_lt_suc turns a < [suc b] into a <= [b]";
      }
      return {};
    }

    case Rule::SucLeOfLt: {
      if (auto e = want(1); !e.empty()) return e;
      const Judgment& p = prem(0);
      if (!kind_is(p, Rel::Lt) || !kind_is(j, Rel::Le) || !is_unary(j.lhs) ||
          !same(j.lhs.at(0), p.lhs) || !rhs_equiv(p.rhs, j.rhs)) {
        return "suc_le_of_lt turns b < rhs into suc b <= rhs";
      }
      return {};
    }

    case Rule::LtOfSucLe: {
      if (auto e = want(1); !e.empty()) return e;
      const Judgment& p = prem(0);
      if (!kind_is(p, Rel::Le) || !kind_is(j, Rel::Lt) || !is_unary(p.lhs) ||
          !same(p.lhs.at(0), j.lhs) || !rhs_equiv(p.rhs, j.rhs)) {
        return "lt_of_suc_le turns suc b <= rhs into b < rhs";
      }
      return {};
    }

    case Rule::SupLeIntro: {
      if (!kind_is(j, Rel::Le)) return "sup_le_intro concludes sup <= ...";
      auto member = [&](std::uint64_t k) {
        return c.members ? c.members->at(k) : c.names.at(k);
      };
      if (c.members) {
        if (!c.infinitary() || !(c.premise_index == c.members->index)) {
          return "sup_le_intro premises must range over the member family";
        }
        if (!same(j.lhs, sup_family(*c.members))) return "sup_le_intro lhs is not the family sup";
      } else {
        if (c.names.empty() || c.infinitary() || premises.size() != c.names.size()) {
          return "sup_le_intro needs one premise per member";
        }
        if (!same(j.lhs, sup_finite(c.names))) return "sup_le_intro lhs is not the member sup";
      }
      for (const auto& [k, p] : premises) {
        const Judgment& pj = p->conclusion;
        if (!kind_is(pj, Rel::Le) || !same(pj.lhs, member(k)) || !rhs_equiv(pj.rhs, j.rhs)) {
          return "sup_le_intro premise " + std::to_string(k) + " is " + show(pj);
        }
      }
      return {};
    }

    case Rule::SupLt: {
      if (auto e = want(2); !e.empty()) return e;
      const Judgment& p = prem(0);
      const Judgment& q = prem(1);
      if (!kind_is(p, Rel::Lt) || !kind_is(q, Rel::Lt) || !kind_is(j, Rel::Lt) ||
          !rhs_equiv(p.rhs, q.rhs) || !rhs_equiv(j.rhs, p.rhs) ||
          !same(j.lhs, sup_finite({p.lhs, q.lhs}))) {
        return "sup_lt combines a < [c] and b < [c] into sup(a, b) < [c]";
      }
      return {};
    }

    case Rule::CutLeft: {
      if (auto e = want(2); !e.empty()) return e;
      const Judgment& p = prem(0);
      const Judgment& q = prem(1);
      if (!kind_is(p, Rel::Lt) || !kind_is(q, Rel::Le) || !kind_is(j, Rel::Le) ||
          !rhs_equiv(p.rhs, single(q.lhs)) || !same(j.lhs, q.lhs) ||
          !rhs_equiv(q.rhs, concat(j.rhs, single(p.lhs)))) {
        return "cut_left turns c < [a], a <= [sup(b, c)] into a <= [b]";
      }
      return {};
    }

    case Rule::DropLeft: {
      if (auto e = want(1); !e.empty()) return e;
      const Judgment& p = prem(0);
      if (!kind_is(p, Rel::Lt) || !kind_is(j, Rel::Lt) || !same(p.lhs, j.lhs) ||
          !rhs_equiv(p.rhs, concat(single(j.lhs), j.rhs))) {
        return "drop_left turns a < [sup(a, b)] into a < [b]";
      }
      return {};
    }
  }
  return "unknown rule";
}

Cert finish(Certificate c) {
  std::vector<std::pair<std::uint64_t, Cert>> premises;
  for (std::size_t i = 0; i < c.premises.size(); ++i) premises.emplace_back(i, c.premises[i]);
  if (auto err = check_local(c, premises); !err.empty()) {
    throw KernelError(to_string(c.rule) + ": " + err);
  }
  return std::make_shared<const Certificate>(std::move(c));
}

Certificate node(Rule rule, Rel kind, Name lhs, std::vector<Name> rhs, std::vector<Cert> premises) {
  Certificate c;
  c.rule = rule;
  c.conclusion = Judgment(kind, std::move(lhs), std::move(rhs));
  c.premises = std::move(premises);
  return c;
}

void require(const Cert& p, const char* what) {
  if (!p) throw KernelError(std::string(what) + ": missing premise");
}

}  // namespace

std::string to_string(Rule r) {
  switch (r) {
    case Rule::ZeroLe: return "zero_le";
    case Rule::ZeroLt: return "zero_lt";
    case Rule::LeIntro: return "le_intro";
    case Rule::LtIntro: return "lt_intro";
    case Rule::Weaken: return "weaken";
    case Rule::Contract: return "contract";
    case Rule::LtToLe: return "lt_to_le";
    case Rule::TransLeLe: return "trans_le_le";
    case Rule::TransLtLe: return "trans_lt_le";
    case Rule::TransLeLt: return "trans_le_lt";
    case Rule::LtSucOfLe: return "lt_suc_of_le";
    case Rule::LeOfLtSuc: return "le_of_lt_suc";
    case Rule::SucLeOfLt: return "suc_le_of_lt";
    case Rule::LtOfSucLe: return "lt_of_suc_le";
    case Rule::SupLeIntro: return "sup_le_intro";
    case Rule::SupLt: return "sup_lt";
    case Rule::CutLeft: return "cut_left";
    case Rule::DropLeft: return "drop_left";
  }
  return "?";
}

Index Certificate::premise_count() const {
  return infinitary() ? premise_index : Index::fin(premises.size());
}

Cert Certificate::premise(std::uint64_t i) const {
  if (!premise_count().contains(i)) {
    throw InvalidArgument("premise " + std::to_string(i) + " outside " +
                          premise_count().to_string());
  }
  if (!infinitary()) return premises[i];
  Cert p = premise_gen(i);
  if (!p) throw KernelError("premise generator returned nothing at " + std::to_string(i));
  return p;
}

std::vector<Ident> rhs_key(std::span<const Name> rhs) {
  std::vector<Ident> key;
  for (const Name& b : rhs) {
    if (b.is_node()) key.push_back(b.ident());
  }
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  if (key.empty() && !rhs.empty()) key.push_back(kZeroIdent);
  return key;
}

bool rhs_equiv(std::span<const Name> a, std::span<const Name> b) {
  if (rhs_key(a) == rhs_key(b)) return true;
  return same(sup_finite(a), sup_finite(b));
}

// -- Primitive rules ----------------------------------------------------------

Cert zero_le(std::vector<Name> rhs) {
  return finish(node(Rule::ZeroLe, Rel::Le, zero(), std::move(rhs), {}));
}

Cert zero_lt(std::vector<Name> rhs) {
  return finish(node(Rule::ZeroLt, Rel::Lt, zero(), std::move(rhs), {}));
}

Cert le_intro(const Name& a, std::vector<Name> rhs, const CertGenerator& gen) {
  if (a.is_zero()) throw KernelError("le_intro: lhs is Zero; use zero_le");
  Certificate c = node(Rule::LeIntro, Rel::Le, a, std::move(rhs), {});
  if (a.index().is_finite()) {
    for (std::uint64_t i = 0; i < a.index().count(); ++i) c.premises.push_back(gen(i));
    for (const Cert& p : c.premises) require(p, "le_intro");
    return finish(std::move(c));
  }
  c.premise_gen = gen;
  c.premise_index = a.index();
  return finish(std::move(c));
}

Cert lt_intro(const Name& a, std::vector<Name> rhs, std::uint64_t m, Cert inner) {
  require(inner, "lt_intro");
  Certificate c = node(Rule::LtIntro, Rel::Lt, a, std::move(rhs), {std::move(inner)});
  c.width = m;
  return finish(std::move(c));
}

Cert weaken(Cert p, std::vector<Name> extra) {
  require(p, "weaken");
  const Judgment& pj = p->conclusion;
  Certificate c = node(Rule::Weaken, pj.kind, pj.lhs, concat(pj.rhs, extra), {p});
  c.names = std::move(extra);
  return finish(std::move(c));
}

Cert contract(Cert p) {
  require(p, "contract");
  const Judgment& pj = p->conclusion;
  std::vector<Name> rhs;
  std::unordered_set<Ident> seen;
  for (const Name& b : pj.rhs) {
    if (seen.insert(b.ident()).second) rhs.push_back(b);
  }
  return finish(node(Rule::Contract, pj.kind, pj.lhs, std::move(rhs), {p}));
}

Cert lt_to_le(Cert p) {
  require(p, "lt_to_le");
  const Judgment& pj = p->conclusion;
  return finish(node(Rule::LtToLe, Rel::Le, pj.lhs, pj.rhs, {p}));
}

namespace {
Cert trans(Rule rule, Rel kind, Cert p, Cert q) {
  require(p, "trans");
  require(q, "trans");
  Name lhs = p->conclusion.lhs;
  std::vector<Name> rhs = q->conclusion.rhs;
  return finish(node(rule, kind, std::move(lhs), std::move(rhs), {std::move(p), std::move(q)}));
}
}  // namespace

Cert trans_le_le(Cert p, Cert q) { return trans(Rule::TransLeLe, Rel::Le, std::move(p), std::move(q)); }
Cert trans_lt_le(Cert p, Cert q) { return trans(Rule::TransLtLe, Rel::Lt, std::move(p), std::move(q)); }
Cert trans_le_lt(Cert p, Cert q) { return trans(Rule::TransLeLt, Rel::Lt, std::move(p), std::move(q)); }

Cert lt_suc_of_le(Cert p) {
  require(p, "lt_suc_of_le");
  const Judgment& pj = p->conclusion;
  Name target = pj.rhs.size() == 1 ? pj.rhs[0] : sup_finite(pj.rhs);
  return finish(node(Rule::LtSucOfLe, Rel::Lt, pj.lhs, {suc(target)}, {p}));
}

Cert le_of_lt_suc(Cert p) {
  require(p, "le_of_lt_suc");
  const Judgment& pj = p->conclusion;
  if (pj.rhs.size() != 1 || !is_unary(pj.rhs[0])) {
    throw KernelError("le_of_lt_suc: premise rhs is not a single successor");
  }
  return finish(node(Rule::LeOfLtSuc, Rel::Le, pj.lhs, {pj.rhs[0].at(0)}, {p}));
}

Cert suc_le_of_lt(Cert p) {
  require(p, "suc_le_of_lt");
  const Judgment& pj = p->conclusion;
  return finish(node(Rule::SucLeOfLt, Rel::Le, suc(pj.lhs), pj.rhs, {p}));
}

Cert lt_of_suc_le(Cert p) {
  require(p, "lt_of_suc_le");
  const Judgment& pj = p->conclusion;
  if (!is_unary(pj.lhs)) throw KernelError("lt_of_suc_le: premise lhs is not a successor");
  return finish(node(Rule::LtOfSucLe, Rel::Lt, pj.lhs.at(0), pj.rhs, {p}));
}

Cert sup_le_intro(std::vector<Name> bs, std::vector<Cert> members) {
  if (bs.empty() || members.empty()) throw KernelError("sup_le_intro: no members");
  for (const Cert& p : members) require(p, "sup_le_intro");
  std::vector<Name> rhs = members.front()->conclusion.rhs;
  Certificate c = node(Rule::SupLeIntro, Rel::Le, sup_finite(bs), std::move(rhs), std::move(members));
  c.names = std::move(bs);
  return finish(std::move(c));
}

Cert sup_le_intro(const Family& bs, const Name& target, const CertGenerator& gen) {
  if (bs.index.is_finite()) throw KernelError("sup_le_intro: use the list form for finite families");
  Certificate c = node(Rule::SupLeIntro, Rel::Le, sup_family(bs), {target}, {});
  c.members = bs;
  c.premise_gen = gen;
  c.premise_index = bs.index;
  return finish(std::move(c));
}

Cert sup_lt(Cert p, Cert q) {
  require(p, "sup_lt");
  require(q, "sup_lt");
  Name lhs = sup_finite({p->conclusion.lhs, q->conclusion.lhs});
  std::vector<Name> rhs = p->conclusion.rhs;
  return finish(node(Rule::SupLt, Rel::Lt, std::move(lhs), std::move(rhs), {std::move(p), std::move(q)}));
}

Cert cut_left(Cert p, Cert q, const Name& b) {
  require(p, "cut_left");
  require(q, "cut_left");
  Name lhs = q->conclusion.lhs;
  return finish(node(Rule::CutLeft, Rel::Le, std::move(lhs), {b}, {std::move(p), std::move(q)}));
}

Cert drop_left(Cert p, const Name& b) {
  require(p, "drop_left");
  Name lhs = p->conclusion.lhs;
  return finish(node(Rule::DropLeft, Rel::Lt, std::move(lhs), {b}, {std::move(p)}));
}

// -- Derived constructors -----------------------------------------------------

namespace {
struct ReflCache {
  std::mutex mu;
  std::unordered_map<Ident, Cert> table;
};

ReflCache& refl_cache() {
  static ReflCache c;
  return c;
}
}  // namespace

Cert refl(const Name& a) {
  if (a.is_zero()) return zero_le({a});
  auto& cache = refl_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.table.find(a.ident()); it != cache.table.end()) return it->second;
  }
  Cert c = le_intro(a, {a}, [a](std::uint64_t i) { return subordinal_lt(a, i); });
  std::lock_guard lock(cache.mu);
  return cache.table.emplace(a.ident(), c).first->second;
}

Cert subordinal_lt(const Name& b, std::uint64_t j) {
  Name bj = b.at(j);
  std::vector<Name> before;
  for (std::uint64_t i = 0; i < j; ++i) before.push_back(b.at(i));
  Cert inner = before.empty() ? refl(bj) : weaken(refl(bj), std::move(before));
  return lt_intro(bj, {b}, j + 1, std::move(inner));
}

Cert pointwise(const Name& a, const Name& b, const CertGenerator& gen) {
  if (a.is_zero() || b.is_zero() || !(a.index() == b.index())) {
    throw KernelError("pointwise: both sides must be Nodes over the same index");
  }
  return le_intro(a, {b},
                  [b, gen](std::uint64_t i) { return trans_le_lt(gen(i), subordinal_lt(b, i)); });
}

// -- Verification -------------------------------------------------------------

namespace {

class Verifier {
 public:
  explicit Verifier(const VerifyPolicy& policy) : policy_(policy) {}

  void run(const Cert& c) { visit(c, "root", 0); }

  VerifyReport report;

 private:
  void fail(const std::string& path, const std::string& msg) {
    if (!report.ok) return;
    report.ok = false;
    report.error = msg;
    report.error_path = path;
  }

  void visit(const Cert& c, const std::string& path, std::uint64_t depth) {
    if (!report.ok) return;
    const bool exhaustive = policy_.mode == VerifyPolicy::Mode::Exhaustive;
    if (!exhaustive && depth > policy_.depth_bound) return;
    if (exhaustive && !seen_.insert(c.get()).second) return;
    ++report.visited;

    std::vector<std::pair<std::uint64_t, Cert>> premises;
    if (c->infinitary()) {
      if (exhaustive) {
        fail(path, "exhaustive verification of an infinitary " + to_string(c->rule) + " node");
        return;
      }
      VerifyReport::Sampled record{path, {}};
      for (std::uint64_t i : policy_.samples) {
        if (!c->premise_index.contains(i)) continue;
        record.indices.push_back(i);
        try {
          premises.emplace_back(i, c->premise(i));
        } catch (const std::exception& e) {
          fail(path + "/" + std::to_string(i), std::string("premise generator: ") + e.what());
          return;
        }
      }
      report.sampled.push_back(std::move(record));
    } else {
      for (std::size_t i = 0; i < c->premises.size(); ++i) {
        if (!c->premises[i]) {
          fail(path + "/" + std::to_string(i), "missing premise");
          return;
        }
        premises.emplace_back(i, c->premises[i]);
      }
    }

    std::string err;
    try {
      err = check_local(*c, premises);
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
      fail(path, to_string(c->rule) + " " + show(c->conclusion) + ": " + err);
      return;
    }
    for (const auto& [i, p] : premises) visit(p, path + "/" + std::to_string(i), depth + 1);
  }

  const VerifyPolicy& policy_;
  std::unordered_set<const Certificate*> seen_;
};

}  // namespace

VerifyReport verify(const Cert& c, const VerifyPolicy& policy) {
  Verifier v(policy);
  if (!c) {
    v.report.ok = false;
    v.report.error = "null certificate";
    v.report.error_path = "root";
    return v.report;
  }
  v.run(c);
  return v.report;
}

Inconsistency incompatible(const Cert& p, const Cert& q) {
  if (!p || !q) return {};
  const Judgment& pj = p->conclusion;
  const Judgment& qj = q->conclusion;
  if (pj.kind != Rel::Le || qj.kind != Rel::Lt) return {};
  if (!rhs_equiv(pj.rhs, single(qj.lhs)) || !rhs_equiv(qj.rhs, single(pj.lhs))) return {};
  return {true, "both " + pj.to_string() + " and " + qj.to_string() + " are certified"};
}

std::string serialize(const Cert& c) {
  std::unordered_map<const Certificate*, std::size_t> ids;
  std::ostringstream out;
  std::function<std::size_t(const Cert&)> emit = [&](const Cert& n) -> std::size_t {
    if (auto it = ids.find(n.get()); it != ids.end()) return it->second;
    if (n->infinitary()) {
      throw KernelError("serialize: " + to_string(n->rule) + " " + show(n->conclusion) +
                        " has generated premises");
    }
    std::vector<std::size_t> refs;
    for (const Cert& p : n->premises) refs.push_back(emit(p));
    std::size_t id = ids.size();
    ids.emplace(n.get(), id);
    out << '#' << id << ' ' << to_string(n->rule);
    if (n->rule == Rule::LtIntro) out << '[' << n->width << ']';
    out << show(n->conclusion) << '{';
    for (std::size_t i = 0; i < refs.size(); ++i) {
      if (i) out << ',';
      out << '#' << refs[i];
    }
    out << "}\n";
    return id;
  };
  emit(c);
  return out.str();
}

// -- Proof search -------------------------------------------------------------

namespace {

std::vector<Ident> judgment_key(Rel kind, const Name& a, std::span<const Name> bs) {
  std::vector<Ident> key = rhs_key(bs);
  key.insert(key.begin(), a.ident());
  key.insert(key.begin(), kind == Rel::Le ? 0 : 1);
  return key;
}

struct KeyLess {
  bool operator()(const std::vector<Ident>& a, const std::vector<Ident>& b) const { return a < b; }
};

// Replays the engine's evaluation of a judgment it has answered True.
class Certifier {
 public:
  explicit Certifier(Fuel fuel) : fuel_(fuel) {}

  Cert le_cert(const Name& a, const std::vector<Name>& bs) {
    auto key = judgment_key(Rel::Le, a, bs);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Cert c = build_le(a, bs);
    memo_.emplace(key, c);
    return c;
  }

  Cert lt_cert(const Name& a, const std::vector<Name>& bs) {
    auto key = judgment_key(Rel::Lt, a, bs);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Cert c = build_lt(a, bs);
    memo_.emplace(key, c);
    return c;
  }

 private:
  Cert build_le(const Name& a, const std::vector<Name>& bs) {
    if (a.is_zero()) return zero_le(bs);
    for (std::size_t k = 0; k < bs.size(); ++k) {
      if (!same(a, bs[k])) continue;
      std::vector<Name> others;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        if (i != k) others.push_back(bs[i]);
      }
      return others.empty() ? refl(a) : weaken(refl(a), std::move(others));
    }
    auto size = a.effective_size();
    if (!size) throw KernelError("certify: engine verdict without a finite unfolding");
    if (a.index().is_finite()) {
      return le_intro(a, bs, [&](std::uint64_t i) { return lt_cert(a.at(i), bs); });
    }
    auto certs = std::make_shared<std::vector<Cert>>();
    for (std::uint64_t i = 0; i < *size; ++i) certs->push_back(lt_cert(a.at(i), bs));
    return le_intro(a, bs, [certs](std::uint64_t i) {
      return (*certs)[std::min<std::uint64_t>(i, certs->size() - 1)];
    });
  }

  Cert build_lt(const Name& a, const std::vector<Name>& bs) {
    const std::uint64_t limit = selection_limit(bs, fuel_.width);
    for (std::uint64_t m : witness_widths(limit)) {
      std::vector<Name> sel = distinct(prefix_selection(bs, m));
      if (sel.empty()) continue;
      if (le(a, sel, fuel_).is_true()) return lt_intro(a, bs, m, le_cert(a, sel));
    }
    throw KernelError("certify: no witness selection within fuel");
  }

  Fuel fuel_;
  std::map<std::vector<Ident>, Cert, KeyLess> memo_;
};

// Caches generator results so that acceptance sampling and later
// verification share the work.
CertGenerator memo_gen(CertGenerator gen) {
  struct State {
    std::mutex mu;
    std::map<std::uint64_t, Cert> done;
    CertGenerator gen;
  };
  auto st = std::make_shared<State>();
  st->gen = std::move(gen);
  return [st](std::uint64_t i) {
    {
      std::lock_guard lock(st->mu);
      if (auto it = st->done.find(i); it != st->done.end()) return it->second;
    }
    Cert c = st->gen(i);
    std::lock_guard lock(st->mu);
    return st->done.emplace(i, c).first->second;
  };
}

class Prover : public std::enable_shared_from_this<Prover> {
 public:
  explicit Prover(ProverOptions opts) : opts_(std::move(opts)), eval_(opts_.fuel) {}

  std::optional<Cert> prove_le(const Name& a, const std::vector<Name>& bs, std::uint64_t d) {
    TriBool v = engine(Rel::Le, a, bs);
    if (v.is_false()) return std::nullopt;
    if (v.is_true()) return engine_cert(Rel::Le, a, bs);
    if (d == 0 || failed(Rel::Le, a, bs, d)) return std::nullopt;

    std::vector<Ident> key = rhs_key(bs);
    if (key.size() == 1 && a.is_node()) {
      Name b;
      for (const Name& x : bs) {
        if (x.is_node()) b = x;
      }
      if (a.index() == b.index()) {
        auto self = shared_from_this();
        auto gen = [self, a, b, d](std::uint64_t i) {
          auto r = self->prove_le(a.at(i), {b.at(i)}, d - 1);
          if (!r) throw KernelError("pointwise premise " + std::to_string(i) + " not found");
          return *r;
        };
        if (auto c = attempt([&] { return pointwise(a, b, memo_gen(gen)); })) {
          if (bs.size() == 1) return c;
          return weaken_to(*c, bs);
        }
      }
    }

    if (a.is_node()) {
      auto self = shared_from_this();
      auto gen = [self, a, bs, d](std::uint64_t i) {
        auto r = self->prove_lt(a.at(i), bs, d - 1);
        if (!r) throw KernelError("premise " + std::to_string(i) + " not found");
        return *r;
      };
      if (auto c = attempt([&] { return le_intro(a, bs, memo_gen(gen)); })) return c;
    }
    mark_failed(Rel::Le, a, bs, d);
    return std::nullopt;
  }

  std::optional<Cert> prove_lt(const Name& a, const std::vector<Name>& bs, std::uint64_t d) {
    TriBool v = engine(Rel::Lt, a, bs);
    if (v.is_false()) return std::nullopt;
    if (v.is_true()) return engine_cert(Rel::Lt, a, bs);
    if (d == 0 || failed(Rel::Lt, a, bs, d)) return std::nullopt;

    for (std::size_t k = 0; k < bs.size(); ++k) {
      const Name& b = bs[k];
      if (b.is_zero()) continue;
      auto size = b.effective_size();
      std::uint64_t limit = size ? std::min(*size, opts_.witness_width) : opts_.witness_width;
      for (std::uint64_t j = 0; j < limit; ++j) {
        Name bj = b.at(j);
        if (eval_.le(a, std::span<const Name>(&bj, 1)).is_false()) continue;
        auto p = prove_le(a, {bj}, d - 1);
        if (!p) continue;
        Cert c = trans_le_lt(*p, subordinal_lt(b, j));
        if (bs.size() == 1) return c;
        return weaken_to(c, bs);
      }
    }
    mark_failed(Rel::Lt, a, bs, d);
    return std::nullopt;
  }

 private:
  // A finitary lhs gets enough width to unfold every rhs member past its
  // height, so per-index leaves stay decidable at any index.
  Fuel leaf_fuel(const Name& a) const {
    Fuel f = opts_.fuel;
    if (a.is_finitary()) f.width = std::max<std::uint64_t>(f.width, a.height() + 2);
    return f;
  }

  TriBool engine(Rel kind, const Name& a, std::span<const Name> bs) {
    Fuel f = leaf_fuel(a);
    if (f.width == opts_.fuel.width) return kind == Rel::Le ? eval_.le(a, bs) : eval_.lt(a, bs);
    return kind == Rel::Le ? le(a, bs, f) : lt(a, bs, f);
  }

  std::optional<Cert> engine_cert(Rel kind, const Name& a, const std::vector<Name>& bs) {
    try {
      Certifier cf(leaf_fuel(a));
      return kind == Rel::Le ? cf.le_cert(a, bs) : cf.lt_cert(a, bs);
    } catch (const OrdinalError&) {
      return std::nullopt;
    }
  }

  // Builds a candidate and accepts it when every sampled generated premise
  // materializes.
  template <class F>
  std::optional<Cert> attempt(F build) {
    try {
      Cert c = build();
      if (c->infinitary()) {
        for (std::uint64_t i : opts_.samples) c->premise(i);
        c->premise(opts_.witness_width + 1);
      }
      return c;
    } catch (const OrdinalError&) {
      return std::nullopt;
    }
  }

  static Cert weaken_to(const Cert& c, const std::vector<Name>& bs) {
    std::vector<Name> extra;
    for (const Name& b : bs) {
      if (std::none_of(c->conclusion.rhs.begin(), c->conclusion.rhs.end(),
                       [&](const Name& x) { return same(x, b); })) {
        extra.push_back(b);
      }
    }
    return extra.empty() ? c : weaken(c, std::move(extra));
  }

  bool failed(Rel kind, const Name& a, std::span<const Name> bs, std::uint64_t d) {
    std::lock_guard lock(mu_);
    auto it = failures_.find(judgment_key(kind, a, bs));
    return it != failures_.end() && it->second >= d;
  }

  void mark_failed(Rel kind, const Name& a, std::span<const Name> bs, std::uint64_t d) {
    std::lock_guard lock(mu_);
    auto& slot = failures_[judgment_key(kind, a, bs)];
    slot = std::max(slot, d);
  }

  ProverOptions opts_;
  Evaluator eval_;
  std::mutex mu_;
  std::map<std::vector<Ident>, std::uint64_t, KeyLess> failures_;
};

}  // namespace

std::optional<Cert> certify(const Judgment& j, Fuel fuel) {
  if (!decide(j, fuel).is_true()) return std::nullopt;
  try {
    Certifier cf(fuel);
    return j.kind == Rel::Le ? cf.le_cert(j.lhs, j.rhs) : cf.lt_cert(j.lhs, j.rhs);
  } catch (const OrdinalError&) {
    return std::nullopt;
  }
}

std::optional<Cert> prove(const Judgment& j, const ProverOptions& opts) {
  auto prover = std::make_shared<Prover>(opts);
  std::optional<Cert> c = j.kind == Rel::Le ? prover->prove_le(j.lhs, j.rhs, opts.depth)
                                            : prover->prove_lt(j.lhs, j.rhs, opts.depth);
  if (!c) return std::nullopt;
  auto policy = VerifyPolicy::spot_check(opts.samples);
  if (!verify(*c, policy).ok) return std::nullopt;
  return c;
}

}  // namespace ordinal
