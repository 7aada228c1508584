#include <array>
#include <functional>
#include <stdexcept>

#include "ordinal/arith.hpp"
#include "ordinal/compare.hpp"
#include "ordinal/oracle.hpp"

namespace ordinal::oracle {

namespace {

using Quad = std::array<Name, 4>;

struct Law {
  const char* name;
  int arity;
  std::function<bool(const Quad&)> holds;
};

bool definite(TriBool v) {
  if (!v.is_definite()) throw std::logic_error("engine answered unknown on finitary names");
  return v.is_true();
}

bool LE(const Name& a, const Name& b) { return definite(le(a, {b}, Fuel::unbounded())); }
bool LT(const Name& a, const Name& b) { return definite(lt(a, {b}, Fuel::unbounded())); }
bool LE(const Name& a, std::initializer_list<Name> bs) {
  return definite(le(a, bs, Fuel::unbounded()));
}
bool LT(const Name& a, std::initializer_list<Name> bs) {
  return definite(lt(a, bs, Fuel::unbounded()));
}
bool EQ(const Name& a, const Name& b) { return LE(a, b) && LE(b, a); }
bool implies(bool p, bool q) { return !p || q; }

Name sup2(const Name& a, const Name& b) { return sup_finite({a, b}); }

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Every gamma < a is checked against b over a sample that contains a
// witness whenever a <= b fails (namely b itself).
bool bounded_induction(const Quad& q) {
  const auto& [a, b, c, d] = q;
  std::vector<Name> sample = {b, c, d};
  for (std::uint64_t k = 0; k <= val(a); ++k) sample.push_back(und(k));
  for (std::uint64_t i = 0; i < a.index().count(); ++i) sample.push_back(a.at(i));
  bool all = true;
  for (const Name& g : sample) all = all && implies(LT(g, a), LT(g, b));
  return LE(a, b) == all;
}

std::vector<Law> order_laws() {
  return {
      {"le reflexive", 1, [](const Quad& q) { return LE(q[0], q[0]); }},
      {"antisymmetry matches value equality", 2,
       [](const Quad& q) { return (LE(q[0], q[1]) && LE(q[1], q[0])) == (val(q[0]) == val(q[1])); }},
      {"zero least", 1, [](const Quad& q) { return LE(zero(), q[0]); }},
      {"lt irreflexive", 1, [](const Quad& q) { return !LT(q[0], q[0]); }},
      {"lt implies le", 2, [](const Quad& q) { return implies(LT(q[0], q[1]), LE(q[0], q[1])); }},
      {"transitivity le le", 3,
       [](const Quad& q) { return implies(LE(q[0], q[1]) && LE(q[1], q[2]), LE(q[0], q[2])); }},
      {"transitivity lt le", 3,
       [](const Quad& q) { return implies(LT(q[0], q[1]) && LE(q[1], q[2]), LT(q[0], q[2])); }},
      {"transitivity le lt", 3,
       [](const Quad& q) { return implies(LE(q[0], q[1]) && LT(q[1], q[2]), LT(q[0], q[2])); }},
      {"lt suc iff le", 2, [](const Quad& q) { return LT(q[0], suc(q[1])) == LE(q[0], q[1]); }},
      {"suc le iff lt", 2, [](const Quad& q) { return LE(suc(q[1]), q[0]) == LT(q[1], q[0]); }},
      {"sup below iff both below", 3,
       [](const Quad& q) {
         return (LT(q[0], q[2]) && LT(q[1], q[2])) == LT(sup2(q[0], q[1]), q[2]);
       }},
      {"lt own sup iff lt other", 2,
       [](const Quad& q) { return LT(q[0], sup2(q[0], q[1])) == LT(q[0], q[1]); }},
      {"sup cut", 3,
       [](const Quad& q) {
         return implies(LT(q[2], q[0]), LE(q[0], sup2(q[1], q[2])) == LE(q[0], q[1]));
       }},
      {"sup characteristic property", 3,
       [](const Quad& q) {
         return (LE(q[0], q[2]) && LE(q[1], q[2])) == LE(sup2(q[0], q[1]), q[2]) &&
                (LE(q[0], q[3]) && LE(q[1], q[3]) && LE(q[2], q[3])) ==
                    LE(sup_finite({q[0], q[1], q[2]}), q[3]);
       }},
      {"le iff every smaller is smaller", 4, bounded_induction},
      {"zero dichotomy", 1, [](const Quad& q) { return LE(q[0], zero()) || LT(zero(), q[0]); }},
      {"suc reflects lt", 2, [](const Quad& q) { return LT(suc(q[0]), suc(q[1])) == LT(q[0], q[1]); }},
      {"suc reflects le", 2, [](const Quad& q) { return LE(suc(q[0]), suc(q[1])) == LE(q[0], q[1]); }},
      {"suc commutes with sup", 3,
       [](const Quad& q) {
         return EQ(sup2(suc(q[0]), suc(q[1])), suc(sup2(q[0], q[1]))) &&
                EQ(sup_finite({suc(q[0]), suc(q[1]), suc(q[2])}),
                   suc(sup_finite({q[0], q[1], q[2]})));
       }},
      {"sup below suc list", 2,
       [](const Quad& q) { return LT(sup_finite({q[0], q[1]}), suc_list({q[0], q[1]})); }},
      {"list lt iff sup lt", 3,
       [](const Quad& q) { return LT(q[0], {q[1], q[2]}) == LT(q[0], sup2(q[1], q[2])); }},
      {"list le iff sup le", 3,
       [](const Quad& q) { return LE(q[0], {q[1], q[2]}) == LE(q[0], sup2(q[1], q[2])); }},
      {"weak cut lt", 4,
       [](const Quad& q) {
         const auto& [a, b, c, d] = q;
         return implies(LE(a, b) && LT(b, {a, c, d}), LT(b, {c, d}));
       }},
      {"weak cut le", 4,
       [](const Quad& q) {
         const auto& [a, b, c, d] = q;
         return implies(LT(b, a) && LE(a, {b, c, d}), LE(a, {c, d}));
       }},
  };
}

std::vector<Law> arith_laws() {
  return {
      {"add associative", 3,
       [](const Quad& q) { return EQ(add(add(q[0], q[1]), q[2]), add(q[0], add(q[1], q[2]))); }},
      {"add monotone", 4,
       [](const Quad& q) {
         return implies(LE(q[0], q[2]) && LE(q[1], q[3]), LE(add(q[0], q[1]), add(q[2], q[3])));
       }},
      {"add zero", 1,
       [](const Quad& q) { return EQ(add(q[0], zero()), q[0]) && EQ(add(zero(), q[0]), q[0]); }},
      {"add left cancel le", 3,
       [](const Quad& q) { return LE(add(q[0], q[1]), add(q[0], q[2])) == LE(q[1], q[2]); }},
      {"add left cancel lt", 3,
       [](const Quad& q) { return LT(add(q[0], q[1]), add(q[0], q[2])) == LT(q[1], q[2]); }},
      {"one plus fixes exactly the infinite", 1,
       [](const Quad& q) {
         return EQ(q[0], add(und(1), q[0])) == definite(le(omega(), {q[0]}));
       }},
      {"le has a difference", 2,
       [](const Quad& q) {
         const auto& [a, c, b, d] = q;
         if (!LE(a, c)) return true;
         return EQ(c, add(a, und(val(c) - val(a))));
       }},
      {"lt has a nonzero difference", 2,
       [](const Quad& q) {
         const auto& [a, c, b, d] = q;
         if (!LT(a, c)) return true;
         return val(c) > val(a) && EQ(c, add(a, und(val(c) - val(a))));
       }},
      {"mul monotone", 4,
       [](const Quad& q) {
         return implies(LE(q[0], q[2]) && LE(q[1], q[3]), LE(mul(q[0], q[1]), mul(q[2], q[3])));
       }},
      {"mul associative", 3,
       [](const Quad& q) { return EQ(mul(mul(q[0], q[1]), q[2]), mul(q[0], mul(q[1], q[2]))); }},
      {"mul one", 1,
       [](const Quad& q) { return EQ(mul(q[0], und(1)), q[0]) && EQ(mul(und(1), q[0]), q[0]); }},
      {"mul left distributive", 3,
       [](const Quad& q) {
         return EQ(mul(q[0], add(q[1], q[2])), add(mul(q[0], q[1]), mul(q[0], q[2])));
       }},
      {"mul left cancel le", 3,
       [](const Quad& q) {
         return implies(LE(und(1), q[0]),
                        LE(mul(q[0], q[1]), mul(q[0], q[2])) == LE(q[1], q[2]));
       }},
      {"mul left cancel lt", 3,
       [](const Quad& q) {
         return implies(LE(und(1), q[0]),
                        LT(mul(q[0], q[1]), mul(q[0], q[2])) == LT(q[1], q[2]));
       }},
      {"seq sum monotone", 4,
       [](const Quad& q) {
         const auto& [a, b, c, d] = q;
         LinearIndexOrder ord{Index::fin(3)};
         Family lo = Family::of({a, b, c});
         Family hi = Family::of({add(a, d), b, add(c, a)});
         for (std::uint64_t l = 0; l < 3; ++l) {
           if (!LE(seq_sum(ord, lo, l), seq_sum(ord, hi, l))) return false;
         }
         return LE(seq_sum(ord, lo, Top{}), seq_sum(ord, hi, Top{}));
       }},
      {"value of sum", 2,
       [](const Quad& q) { return val(add(q[0], q[1])) == val(q[0]) + val(q[1]); }},
      {"value of product", 2,
       [](const Quad& q) { return val(mul(q[0], q[1])) == val(q[0]) * val(q[1]); }},
      {"value of power", 2,
       [](const Quad& q) { return val(pow(q[0], q[1])) == ipow(val(q[0]), val(q[1])); }},
  };
}

std::string show_instance(const Quad& q, int arity) {
  static const char* vars[] = {"a", "b", "c", "d"};
  std::string out;
  for (int i = 0; i < arity; ++i) {
    if (i) out += ", ";
    out += std::string(vars[i]) + " = " + to_string(q[i]);
  }
  return out;
}

BatteryReport run(const std::vector<Law>& laws, std::uint64_t salt, const BatteryOptions& opts) {
  BatteryReport report;
  GenParams p{opts.max_depth, opts.max_width, 0.0, 0};
  for (std::size_t k = 0; k < laws.size(); ++k) {
    const Law& law = laws[k];
    std::seed_seq seq{opts.seed, salt, static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    LawResult r{law.name, 0, 0, {}};
    for (std::uint64_t i = 0; i < opts.cases; ++i) {
      Quad q;
      for (Name& n : q) n = gen_name(p, rng);
      ++r.cases;
      bool ok = false;
      std::string note;
      try {
        ok = law.holds(q);
      } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
      }
      if (!ok) {
        if (r.failures++ == 0) r.counterexample = show_instance(q, law.arity) + note;
      }
    }
    report.laws.push_back(std::move(r));
  }
  return report;
}

}  // namespace

bool BatteryReport::ok() const { return first_failure() == nullptr; }

std::uint64_t BatteryReport::checks() const {
  std::uint64_t n = 0;
  for (const auto& l : laws) n += l.cases;
  return n;
}

std::uint64_t BatteryReport::passed() const {
  std::uint64_t n = 0;
  for (const auto& l : laws) n += l.cases - l.failures;
  return n;
}

const LawResult* BatteryReport::first_failure() const {
  for (const auto& l : laws) {
    if (l.failures) return &l;
  }
  return nullptr;
}

BatteryReport order_battery(const BatteryOptions& opts) { return run(order_laws(), 1, opts); }

BatteryReport arith_battery(const BatteryOptions& opts) { return run(arith_laws(), 2, opts); }

BatteryReport full_battery(const BatteryOptions& opts) {
  BatteryReport r = order_battery(opts);
  BatteryReport s = arith_battery(opts);
  r.laws.insert(r.laws.end(), s.laws.begin(), s.laws.end());
  return r;
}

}  // namespace ordinal::oracle
