#include "ordinal/compare.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ordinal {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<Ident>& v) const noexcept {
    std::size_t h = v.size();
    for (Ident x : v) h ^= std::hash<Ident>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Global memo table. Linearizable through one mutex; entries are definite
// verdicts, which do not depend on fuel.
struct Memo {
  std::mutex mu;
  std::unordered_map<std::vector<Ident>, bool, KeyHash> table;
  std::atomic<std::uint64_t> evaluations{0};
  std::atomic<std::uint64_t> hits{0};
};

Memo& memo() {
  static Memo m;
  return m;
}

std::vector<Ident> memo_key(Rel kind, const Name& a, std::span<const Name> bs) {
  std::vector<Ident> key;
  key.reserve(bs.size() + 2);
  for (const Name& b : bs) key.push_back(b.ident());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  key.insert(key.begin(), a.ident());
  key.insert(key.begin(), kind == Rel::Le ? 0 : 1);
  return key;
}

class Engine {
 public:
  explicit Engine(Fuel fuel) : fuel_(fuel) {}

  TriBool le(const Name& a, std::span<const Name> bs, std::uint64_t depth) {
    if (a.is_zero()) return TriBool::yes();
    for (const Name& b : bs) {
      if (same(a, b)) return TriBool::yes();
    }
    auto key = memo_key(Rel::Le, a, bs);
    if (auto hit = lookup(key)) return TriBool::from(*hit);
    if (auto open = open_at(key, depth)) return *open;
    if (depth == 0) return TriBool::unknown(TriBool::kDepthExhausted);
    memo().evaluations.fetch_add(1, std::memory_order_relaxed);

    auto size = a.effective_size();
    std::uint64_t n = size ? std::min(*size, fuel_.width) : fuel_.width;
    const bool truncated = !size || *size > n;
    // lt against bs can only be False when its selection covers bs, so
    // otherwise the first Unknown settles the verdict.
    const bool refutable = selection_covers(bs, selection_limit(bs, fuel_.width));
    if (truncated && !refutable) {
      open_[key] = {depth, TriBool::kWidthTruncated};
      return TriBool::unknown(TriBool::kWidthTruncated);
    }
    TriBool acc = TriBool::yes();
    for (std::uint64_t i = 0; i < n; ++i) {
      TriBool v = lt(a.at(i), bs, depth - 1);
      if (v.is_false()) {
        store(key, false);
        return v;
      }
      acc = acc && v;
      if (acc.is_unknown() && !refutable) break;
    }
    if (truncated) acc = acc && TriBool::unknown(TriBool::kWidthTruncated);
    if (acc.is_true()) store(key, true);
    if (acc.is_unknown()) open_[key] = {depth, acc.reasons()};
    return acc;
  }

  TriBool lt(const Name& a, std::span<const Name> bs, std::uint64_t depth) {
    auto key = memo_key(Rel::Lt, a, bs);
    if (auto hit = lookup(key)) return TriBool::from(*hit);
    if (auto open = open_at(key, depth)) return *open;
    if (depth == 0) return TriBool::unknown(TriBool::kDepthExhausted);
    memo().evaluations.fetch_add(1, std::memory_order_relaxed);

    bool any = std::any_of(bs.begin(), bs.end(), [](const Name& b) { return !b.is_zero(); });
    if (!any) {
      store(key, false);
      return TriBool::no();
    }
    const std::uint64_t limit = selection_limit(bs, fuel_.width);
    const bool covers = selection_covers(bs, limit);
    TriBool last = TriBool::unknown();
    std::uint8_t reasons = TriBool::kNoReason;
    for (std::uint64_t m : witness_widths(limit)) {
      last = le(a, distinct(prefix_selection(bs, m)), depth - 1);
      if (last.is_true()) {
        store(key, true);
        return last;
      }
      reasons |= last.reasons();
    }
    // Weakening makes the full selection the strongest witness candidate, so
    // its refutation refutes every selection.
    if (covers && last.is_false()) {
      store(key, false);
      return TriBool::no();
    }
    if (!covers) reasons |= TriBool::kWidthTruncated;
    open_[key] = {depth, reasons};
    return TriBool::unknown(reasons);
  }

 private:
  // Unknown verdicts of this query. Less depth never decides more, so an
  // entry answers any later visit with at most the recorded depth.
  std::optional<TriBool> open_at(const std::vector<Ident>& key, std::uint64_t depth) const {
    auto it = open_.find(key);
    if (it == open_.end() || it->second.first < depth) return std::nullopt;
    return TriBool::unknown(it->second.second);
  }

  static std::optional<bool> lookup(const std::vector<Ident>& key) {
    auto& m = memo();
    std::lock_guard lock(m.mu);
    auto it = m.table.find(key);
    if (it == m.table.end()) return std::nullopt;
    m.hits.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }

  static void store(const std::vector<Ident>& key, bool verdict) {
    auto& m = memo();
    std::lock_guard lock(m.mu);
    m.table.emplace(key, verdict);
  }

  Fuel fuel_;
  std::unordered_map<std::vector<Ident>, std::pair<std::uint64_t, std::uint8_t>, KeyHash> open_;
};

void require_nonempty(std::span<const Name> bs) {
  if (bs.empty()) throw InvalidArgument("comparison against an empty list");
}

}  // namespace

std::string TriBool::to_string() const {
  switch (value_) {
    case Value::True:
      return "true";
    case Value::False:
      return "false";
    case Value::Unknown:
      break;
  }
  return "unknown";
}

Judgment::Judgment(Rel kind_, Name lhs_, std::vector<Name> rhs_)
    : kind(kind_), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
  require_nonempty(rhs);
}

std::string Judgment::to_string() const {
  std::ostringstream out;
  out << ordinal::to_string(lhs) << (kind == Rel::Le ? " <= " : " < ");
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i) out << ", ";
    out << ordinal::to_string(rhs[i]);
  }
  return out.str();
}

std::vector<Name> prefix_selection(std::span<const Name> bs, std::uint64_t m) {
  std::vector<Name> sel;
  for (const Name& b : bs) {
    std::uint64_t n = m;
    if (auto s = b.effective_size()) n = std::min(n, *s);
    for (std::uint64_t i = 0; i < n; ++i) sel.push_back(b.at(i));
  }
  return sel;
}

namespace {

std::uint64_t selection_size(std::span<const Name> bs, std::uint64_t m) {
  std::uint64_t total = 0;
  for (const Name& b : bs) {
    auto s = b.effective_size();
    total += s ? std::min(*s, m) : m;
  }
  return total;
}

}  // namespace

std::uint64_t selection_limit(std::span<const Name> bs, std::uint64_t width) {
  std::uint64_t hi = std::max<std::uint64_t>(width, 1);
  bool all_finite = true;
  std::uint64_t cover = 0;
  for (const Name& b : bs) {
    auto s = b.effective_size();
    if (!s) {
      all_finite = false;
      break;
    }
    cover = std::max(cover, *s);
  }
  if (all_finite && cover <= width) return std::max<std::uint64_t>(cover, 1);
  std::uint64_t lo = 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (selection_size(bs, mid) <= width) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool selection_covers(std::span<const Name> bs, std::uint64_t m) {
  for (const Name& b : bs) {
    auto s = b.effective_size();
    if (!s || *s > m) return false;
  }
  return true;
}

std::vector<std::uint64_t> witness_widths(std::uint64_t limit) {
  if (limit == 0) return {};
  if (limit == 1) return {1};
  return {1, limit};
}

std::vector<Name> distinct(std::vector<Name> bs) {
  std::unordered_set<Ident> seen;
  std::erase_if(bs, [&](const Name& b) { return !seen.insert(b.ident()).second; });
  return bs;
}

struct Evaluator::Impl {
  explicit Impl(Fuel fuel) : engine(fuel) {}
  Engine engine;
};

Evaluator::Evaluator(Fuel fuel) : fuel_(fuel), impl_(std::make_unique<Impl>(fuel)) {}

Evaluator::~Evaluator() = default;

TriBool Evaluator::le(const Name& a, std::span<const Name> bs) {
  require_nonempty(bs);
  return impl_->engine.le(a, bs, fuel_.depth);
}

TriBool Evaluator::lt(const Name& a, std::span<const Name> bs) {
  require_nonempty(bs);
  return impl_->engine.lt(a, bs, fuel_.depth);
}

TriBool Evaluator::decide(const Judgment& j) {
  return j.kind == Rel::Le ? le(j.lhs, j.rhs) : lt(j.lhs, j.rhs);
}

TriBool le(const Name& a, std::span<const Name> bs, Fuel fuel) {
  require_nonempty(bs);
  return Engine(fuel).le(a, bs, fuel.depth);
}

TriBool le(const Name& a, std::initializer_list<Name> bs, Fuel fuel) {
  return le(a, std::span<const Name>(bs.begin(), bs.size()), fuel);
}

TriBool lt(const Name& a, std::span<const Name> bs, Fuel fuel) {
  require_nonempty(bs);
  return Engine(fuel).lt(a, bs, fuel.depth);
}

TriBool lt(const Name& a, std::initializer_list<Name> bs, Fuel fuel) {
  return lt(a, std::span<const Name>(bs.begin(), bs.size()), fuel);
}

TriBool decide(const Judgment& j, Fuel fuel) {
  return j.kind == Rel::Le ? le(j.lhs, j.rhs, fuel) : lt(j.lhs, j.rhs, fuel);
}

TriBool eq(const Name& a, const Name& b, Fuel fuel) {
  TriBool ab = le(a, {b}, fuel);
  if (ab.is_false()) return ab;
  return ab && le(b, {a}, fuel);
}

Order cmp_finitary(const Name& a, const Name& b) {
  if (!a.is_finitary() || !b.is_finitary()) {
    throw InvalidArgument("cmp_finitary: both names must be hereditarily finitary");
  }
  const Fuel fuel = Fuel::unbounded();
  bool ab = le(a, {b}, fuel).is_true();
  bool ba = le(b, {a}, fuel).is_true();
  if (ab && ba) return Order::Eq;
  if (ab) return Order::Lt;
  if (ba) return Order::Gt;
  throw std::logic_error("cmp_finitary: finitary names found incomparable");
}

std::string to_string(Order o) {
  switch (o) {
    case Order::Lt:
      return "lt";
    case Order::Eq:
      return "eq";
    case Order::Gt:
      break;
  }
  return "gt";
}

void clear_memo() {
  auto& m = memo();
  std::lock_guard lock(m.mu);
  m.table.clear();
  m.evaluations = 0;
  m.hits = 0;
}

MemoStats memo_stats() {
  auto& m = memo();
  std::lock_guard lock(m.mu);
  return MemoStats{m.evaluations.load(), m.hits.load(), m.table.size()};
}

}  // namespace ordinal
