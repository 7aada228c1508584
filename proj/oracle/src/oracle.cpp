#include "ordinal/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "ordinal/arith.hpp"
#include "ordinal/error.hpp"

namespace ordinal::oracle {

namespace {

void require_finitary(const Name& a, const char* op) {
  if (!a.is_finitary()) throw InvalidArgument(std::string(op) + ": finitary names only");
}

std::vector<Ident> key_of(int kind, const Name& a, std::span<const Name> bs) {
  std::vector<Ident> k;
  for (const Name& b : bs) k.push_back(b.ident());
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  k.insert(k.begin(), {static_cast<Ident>(kind), a.ident()});
  return k;
}

std::map<std::vector<Ident>, bool>& naive_memo() {
  static std::map<std::vector<Ident>, bool> m;
  return m;
}

}  // namespace

std::uint64_t val(const Name& a) {
  require_finitary(a, "val");
  std::unordered_map<Ident, std::uint64_t> seen;
  std::function<std::uint64_t(const Name&)> go = [&](const Name& x) -> std::uint64_t {
    if (x.is_zero()) return 0;
    if (auto it = seen.find(x.ident()); it != seen.end()) return it->second;
    std::uint64_t best = 0;
    for (std::uint64_t i = 0; i < x.index().count(); ++i) best = std::max(best, go(x.at(i)) + 1);
    seen.emplace(x.ident(), best);
    return best;
  };
  return go(a);
}

bool naive_le(const Name& a, std::span<const Name> bs) {
  require_finitary(a, "naive_le");
  auto key = key_of(0, a, bs);
  if (auto it = naive_memo().find(key); it != naive_memo().end()) return it->second;
  bool out = true;
  for (std::uint64_t i = 0; out && i < a.index().count(); ++i) out = naive_lt(a.at(i), bs);
  naive_memo().emplace(std::move(key), out);
  return out;
}

bool naive_lt(const Name& a, std::span<const Name> bs) {
  require_finitary(a, "naive_lt");
  auto key = key_of(1, a, bs);
  if (auto it = naive_memo().find(key); it != naive_memo().end()) return it->second;
  // A selection F1..Fm only matters through the set of names it picks.
  std::vector<Name> pool;
  for (const Name& b : bs) {
    require_finitary(b, "naive_lt");
    for (std::uint64_t i = 0; i < b.index().count(); ++i) {
      Name c = b.at(i);
      if (std::none_of(pool.begin(), pool.end(), [&](const Name& p) { return same(p, c); })) {
        pool.push_back(c);
      }
    }
  }
  if (pool.size() > 30) throw InvalidArgument("naive_lt: selection space too large");
  bool out = false;
  const std::uint64_t subsets = std::uint64_t{1} << pool.size();
  std::vector<Name> sel;
  for (std::uint64_t mask = 1; !out && mask < subsets; ++mask) {
    sel.clear();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (mask >> j & 1) sel.push_back(pool[j]);
    }
    out = naive_le(a, sel);
  }
  naive_memo().emplace(std::move(key), out);
  return out;
}

void clear_naive_memo() { naive_memo().clear(); }

Name gen_name(const GenParams& p) {
  std::mt19937_64 rng(p.seed);
  return gen_name(p, rng);
}

Name gen_name(const GenParams& p, std::mt19937_64& rng) {
  if (p.max_depth == 0) return zero();
  if (p.omega_probability > 0 &&
      std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p.omega_probability) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        return omega();
      case 1:
        return add(und(1), omega());
      default:
        return add(omega(), omega());
    }
  }
  auto width = std::uniform_int_distribution<std::uint32_t>(0, p.max_width)(rng);
  if (width == 0) return zero();
  GenParams child = p;
  child.max_depth = p.max_depth - 1;
  std::vector<Name> kids;
  for (std::uint32_t i = 0; i < width; ++i) kids.push_back(gen_name(child, rng));
  return node_of(kids);
}

}  // namespace ordinal::oracle
