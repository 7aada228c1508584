#include "ordinal/mlseq.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "ordinal/error.hpp"

namespace ordinal {

namespace {

auto atom_key(const Atom& a) {
  return std::make_tuple(a.lhs.ident(), a.rel == Rel::Le ? 0 : 1, a.rhs.ident());
}

std::string show(const Sequent& s) { return "{" + s.to_string() + "}"; }

// Empty when the node is a correct instance given these premises.
std::string check_local(const MlCertificate& c,
                        const std::vector<std::pair<std::uint64_t, MlCert>>& premises) {
  const Atom& p = c.principal;
  if (!c.conclusion.contains(p)) return "principal atom not in conclusion";
  if (c.rule == MlRule::R1) {
    if (p.rel != Rel::Lt) return "R1 needs a < atom";
    if (!p.rhs.index().contains(c.n)) return "R1 index out of range";
    if (c.infinitary() || c.premises.size() != 1) return "R1 takes one premise";
    Sequent expect = c.conclusion.with(Atom{p.lhs, Rel::Le, p.rhs.at(c.n)});
    if (!premises.front().second->conclusion.subset_of(expect)) {
      return "premise " + show(premises.front().second->conclusion) + " not within " +
             show(expect);
    }
    return {};
  }
  if (p.rel != Rel::Le) return "R2 needs a <= atom";
  Index idx = p.lhs.index();
  if (idx.is_finite()) {
    if (c.infinitary()) return "R2 over a finite index with a generator";
    if (c.premises.size() != idx.count()) return "R2 premise count differs from the index";
  } else if (!c.infinitary()) {
    return "R2 over Nat needs a generator";
  }
  for (const auto& [i, q] : premises) {
    Sequent expect = c.conclusion.with(Atom{p.lhs.at(i), Rel::Lt, p.rhs});
    if (!q->conclusion.subset_of(expect)) {
      return "premise " + std::to_string(i) + " " + show(q->conclusion) + " not within " +
             show(expect);
    }
  }
  return {};
}

void check_or_throw(const MlCertificate& c) {
  std::vector<std::pair<std::uint64_t, MlCert>> premises;
  for (std::size_t i = 0; i < c.premises.size(); ++i) {
    if (!c.premises[i]) throw KernelError("missing premise");
    premises.emplace_back(i, c.premises[i]);
  }
  if (auto err = check_local(c, premises); !err.empty()) throw KernelError(err);
}

// Single-atom derivations over finitary names, memoized by atom.
class Search {
 public:
  std::optional<MlCert> derive(const Atom& a) {
    auto key = atom_key(a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<MlCert> out;
    Sequent goal{a};
    if (a.rel == Rel::Lt) {
      auto n = a.rhs.effective_size().value_or(0);
      for (std::uint64_t i = 0; i < n && !out; ++i) {
        if (auto sub = derive(Atom{a.lhs, Rel::Le, a.rhs.at(i)})) {
          out = ml_r1(goal, a, i, *sub);
        }
      }
    } else {
      std::vector<MlCert> subs;
      auto n = a.lhs.effective_size().value_or(0);
      bool all = true;
      for (std::uint64_t i = 0; i < n && all; ++i) {
        auto sub = derive(Atom{a.lhs.at(i), Rel::Lt, a.rhs});
        if (sub) subs.push_back(*sub);
        all = sub.has_value();
      }
      if (all) out = ml_r2(goal, a, std::move(subs));
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  std::map<std::tuple<Ident, int, Ident>, std::optional<MlCert>> memo_;
};

MlCert finitary_atom(const Atom& a) {
  auto c = Search().derive(a);
  if (!c) throw KernelError("underivable finitary atom " + a.to_string());
  return *c;
}

class Verifier {
 public:
  explicit Verifier(const VerifyPolicy& policy) : policy_(policy) {}

  void visit(const MlCert& c, const std::string& path, std::uint64_t depth) {
    if (!report.ok) return;
    const bool exhaustive = policy_.mode == VerifyPolicy::Mode::Exhaustive;
    if (!exhaustive && depth > policy_.depth_bound) return;
    if (exhaustive && !seen_.insert(c.get()).second) return;
    ++report.visited;

    std::vector<std::pair<std::uint64_t, MlCert>> premises;
    if (c->infinitary()) {
      if (exhaustive) {
        fail(path, "exhaustive verification of an infinitary node");
        return;
      }
      VerifyReport::Sampled record{path, {}};
      for (std::uint64_t i : policy_.samples) {
        record.indices.push_back(i);
        try {
          MlCert q = c->premise_gen(i);
          if (!q) throw KernelError("generator returned null");
          premises.emplace_back(i, std::move(q));
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
      fail(path, std::string(c->rule == MlRule::R1 ? "R1 " : "R2 ") + show(c->conclusion) +
                     ": " + err);
      return;
    }
    for (const auto& [i, q] : premises) visit(q, path + "/" + std::to_string(i), depth + 1);
  }

  VerifyReport report;

 private:
  void fail(const std::string& path, const std::string& msg) {
    if (!report.ok) return;
    report.ok = false;
    report.error = msg;
    report.error_path = path;
  }

  const VerifyPolicy& policy_;
  std::unordered_set<const MlCertificate*> seen_;
};

}  // namespace

bool operator<(const Atom& a, const Atom& b) { return atom_key(a) < atom_key(b); }

std::string Atom::to_string() const {
  return ordinal::to_string(lhs) + (rel == Rel::Le ? " <= " : " < ") + ordinal::to_string(rhs);
}

Sequent::Sequent(std::initializer_list<Atom> atoms) : Sequent(std::vector<Atom>(atoms)) {}

Sequent::Sequent(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool Sequent::insert(const Atom& a) {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it != atoms_.end() && *it == a) return false;
  atoms_.insert(it, a);
  return true;
}

bool Sequent::contains(const Atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool Sequent::subset_of(const Sequent& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

Sequent Sequent::with(const Atom& a) const {
  Sequent s = *this;
  s.insert(a);
  return s;
}

std::string Sequent::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out << ", ";
    out << atoms_[i].to_string();
  }
  return out.str();
}

MlCert ml_r1(Sequent conclusion, Atom principal, std::uint64_t n, MlCert premise) {
  auto c = std::make_shared<MlCertificate>();
  c->rule = MlRule::R1;
  c->conclusion = std::move(conclusion);
  c->principal = std::move(principal);
  c->n = n;
  c->premises.push_back(std::move(premise));
  check_or_throw(*c);
  return c;
}

MlCert ml_r2(Sequent conclusion, Atom principal, std::vector<MlCert> premises) {
  auto c = std::make_shared<MlCertificate>();
  c->rule = MlRule::R2;
  c->conclusion = std::move(conclusion);
  c->principal = std::move(principal);
  c->premises = std::move(premises);
  check_or_throw(*c);
  return c;
}

MlCert ml_r2(Sequent conclusion, Atom principal, MlCertGenerator gen) {
  auto c = std::make_shared<MlCertificate>();
  c->rule = MlRule::R2;
  c->conclusion = std::move(conclusion);
  c->principal = std::move(principal);
  c->premise_gen = std::move(gen);
  check_or_throw(*c);
  return c;
}

std::optional<MlCert> ml_prove(const Sequent& s) {
  for (const Atom& a : s.atoms()) {
    if (!a.lhs.is_finitary() || !a.rhs.is_finitary()) {
      throw InvalidArgument("ml_prove: names must be hereditarily finitary: " + a.to_string());
    }
  }
  Search search;
  for (const Atom& a : s.atoms()) {
    auto sub = search.derive(a);
    if (!sub) continue;
    if (s.size() == 1) return sub;
    // Re-root the single-atom derivation under the full sequent.
    const MlCertificate& top = **sub;
    if (top.rule == MlRule::R1) return ml_r1(s, a, top.n, top.premises.front());
    return ml_r2(s, a, top.premises);
  }
  return std::nullopt;
}

bool ml_derivable(const Sequent& s) { return ml_prove(s).has_value(); }

VerifyReport ml_verify(const MlCert& c, const VerifyPolicy& policy) {
  Verifier v(policy);
  if (!c) {
    v.report.ok = false;
    v.report.error = "null certificate";
    v.report.error_path = "root";
    return v.report;
  }
  v.visit(c, "root", 0);
  return v.report;
}

MlCert ml_lpo_cert(const BitSeq& u) {
  LpoNames names = eps_lpo(u);
  const Name a = names.eps;
  const Name b = names.eps_prime;
  const Atom goal{a, Rel::Lt, b};
  const Name v0 = b.at(0);
  const Atom a_le_v0{a, Rel::Le, v0};
  const Sequent s1{goal, a_le_v0};
  const std::uint64_t u0 = u.at(0) ? 1 : 0;

  auto premise = [a, b, goal, v0, u0, u](std::uint64_t n) -> MlCert {
    const std::uint64_t un = u.at(n) ? 1 : 0;
    const Atom un_lt_v0{und(un), Rel::Lt, v0};
    if (un <= u0) return finitary_atom(un_lt_v0);
    // u_n > u_0: go through a <= v_n instead.
    const Name vn = b.at(n);
    const Atom a_le_vn{a, Rel::Le, vn};
    const Sequent ctx{un_lt_v0, goal};
    MlCert inner = ml_r2(ctx.with(a_le_vn), a_le_vn, [u, vn](std::uint64_t m) -> MlCert {
      return finitary_atom(Atom{und(u.at(m) ? 1 : 0), Rel::Lt, vn});
    });
    return ml_r1(ctx, goal, n, inner);
  };
  MlCert second = ml_r2(s1, a_le_v0, premise);
  return ml_r1(Sequent{goal}, goal, 0, second);
}

}  // namespace ordinal
