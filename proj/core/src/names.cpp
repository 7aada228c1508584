#include "ordinal/names.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "intern.hpp"

namespace ordinal {

namespace {

struct IdentsHash {
  std::size_t operator()(const std::vector<Ident>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (Ident x : v) {
      h ^= std::hash<Ident>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::atomic<Ident> g_next_ident{1};

// Hash-consing table for finite nodes, keyed by the children's identities.
struct ConsTable {
  std::mutex mu;
  std::unordered_map<std::vector<Ident>, std::weak_ptr<const NodeData>, IdentsHash> table;
  std::size_t sweep_at = 1 << 12;
};

ConsTable& cons_table() {
  static ConsTable t;
  return t;
}

struct ConstructMemo {
  std::mutex mu;
  std::map<std::pair<std::string, std::vector<Ident>>, Name> table;
};

ConstructMemo& construct_memo() {
  static ConstructMemo m;
  return m;
}

struct Labels {
  std::mutex mu;
  std::unordered_map<Ident, std::string> by_ident;
  std::map<std::string, Name> by_key;
};

Labels& labels() {
  static Labels l;
  return l;
}

Name finite_node(std::vector<Name> children) {
  std::vector<Ident> key;
  key.reserve(children.size());
  bool finitary = true;
  std::uint32_t height = 0;
  for (const Name& c : children) {
    key.push_back(c.ident());
    finitary = finitary && c.is_finitary();
    if (finitary) height = std::max(height, c.height() + 1);
  }
  auto& t = cons_table();
  std::lock_guard lock(t.mu);
  auto it = t.table.find(key);
  if (it != t.table.end()) {
    if (auto alive = it->second.lock()) return NameAccess::wrap(std::move(alive));
  }
  auto data = std::make_shared<NodeData>();
  data->index = Index::fin(children.size());
  data->children = std::move(children);
  data->ident = detail::fresh_ident();
  data->finitary = finitary;
  data->height = finitary ? height : 0;
  std::shared_ptr<const NodeData> node = data;
  t.table[std::move(key)] = node;
  if (t.table.size() >= t.sweep_at) {
    std::erase_if(t.table, [](const auto& kv) { return kv.second.expired(); });
    t.sweep_at = std::max<std::size_t>(1 << 12, t.table.size() * 2);
  }
  return NameAccess::wrap(std::move(node));
}

// Lazily materialized enumeration of the disjoint union of a family's
// members' index sets.
class UnionEnumeration {
 public:
  UnionEnumeration(Family fs, bool lenient) : fs_(std::move(fs)), lenient_(lenient) {}

  Name at(std::uint64_t n) {
    std::lock_guard lock(mu_);
    while (positions_.size() <= n) advance();
    auto [j, i] = positions_[n];
    return members_[j].at(i);
  }

 private:
  const Name& member(std::uint64_t j) {
    while (members_.size() <= j) {
      Name m = fs_.at(members_.size());
      if (m.is_zero() && !lenient_) {
        throw InvalidArgument("sup_family: member " + std::to_string(members_.size()) +
                              " is Zero; family sup is defined on nodes only");
      }
      members_.push_back(std::move(m));
    }
    return members_[j];
  }

  // Appends the next valid (member, index) pair in the fair order: round
  // robin over a finite family (which has an infinite member, otherwise the
  // union is finite and materialized directly), Cantor diagonals over a
  // family indexed by the naturals.
  void advance() {
    constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 24;
    for (std::uint64_t scanned = 0; scanned < kScanLimit; ++scanned) {
      std::uint64_t j, i;
      if (fs_.index.is_finite()) {
        j = round_j_;
        i = round_i_;
        if (++round_j_ == fs_.index.count()) {
          round_j_ = 0;
          ++round_i_;
        }
      } else {
        j = diag_j_;
        i = diag_d_ - diag_j_;
        if (diag_j_ == diag_d_) {
          ++diag_d_;
          diag_j_ = 0;
        } else {
          ++diag_j_;
        }
      }
      if (member(j).index().contains(i)) {
        positions_.emplace_back(j, i);
        return;
      }
    }
    throw EngineError("sup_family: no further subordinal found within the scan limit");
  }

  Family fs_;
  bool lenient_;
  std::mutex mu_;
  std::vector<Name> members_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> positions_;
  std::uint64_t diag_d_ = 0, diag_j_ = 0;
  std::uint64_t round_i_ = 0, round_j_ = 0;
};

Name sup_family_impl(const Family& fs, bool lenient) {
  if (fs.index.is_finite()) {
    std::vector<Name> members;
    members.reserve(fs.index.count());
    for (std::uint64_t j = 0; j < fs.index.count(); ++j) {
      Name m = fs.at(j);
      if (m.is_zero()) {
        if (lenient) continue;
        throw InvalidArgument("sup_family: member " + std::to_string(j) +
                              " is Zero; family sup is defined on nodes only");
      }
      members.push_back(std::move(m));
    }
    if (members.empty()) return zero();
    if (members.size() == 1) return members.front();
    bool all_finite = std::all_of(members.begin(), members.end(),
                                  [](const Name& m) { return m.index().is_finite(); });
    if (all_finite) {
      std::vector<Name> flat;
      for (const Name& m : members) {
        for (std::uint64_t i = 0; i < m.index().count(); ++i) flat.push_back(m.at(i));
      }
      return finite_node(std::move(flat));
    }
    std::vector<Ident> key;
    for (const Name& m : members) key.push_back(m.ident());
    return detail::memo_construct("sup.fin", key, [&] {
      auto e = std::make_shared<UnionEnumeration>(Family::of(members), false);
      return detail::make_nat_node([e](std::uint64_t n) { return e->at(n); });
    });
  }
  auto build = [&] {
    auto e = std::make_shared<UnionEnumeration>(fs, lenient);
    return detail::make_nat_node([e](std::uint64_t n) { return e->at(n); });
  };
  if (fs.ident == 0) return build();
  return detail::memo_construct(lenient ? "sup.nat.lenient" : "sup.nat", {fs.ident}, build);
}

}  // namespace

// -- Index --------------------------------------------------------------------

std::string Index::to_string() const {
  return is_finite() ? "fin " + std::to_string(count_) : std::string("nat");
}

// -- Name ---------------------------------------------------------------------

Index Name::index() const { return node_ ? node_->index : Index::fin(0); }

Name Name::at(std::uint64_t i) const {
  if (!node_ || !node_->index.contains(i)) {
    throw InvalidArgument("subordinal index " + std::to_string(i) + " outside " +
                          index().to_string());
  }
  if (node_->index.is_finite()) return node_->children[i];
  try {
    return node_->gen(i);
  } catch (const OrdinalError&) {
    throw;
  } catch (const std::exception& e) {
    throw EngineError(std::string("family generator failed: ") + e.what());
  }
}

Ident Name::ident() const { return node_ ? node_->ident : kZeroIdent; }

bool Name::is_finitary() const { return !node_ || node_->finitary; }

std::uint32_t Name::height() const { return node_ ? node_->height : 0; }

std::optional<std::uint64_t> Name::stable_from() const {
  return node_ ? node_->stable_from : std::nullopt;
}

std::optional<std::uint64_t> Name::effective_size() const {
  Index idx = index();
  if (idx.is_finite()) return idx.count();
  if (auto s = stable_from()) return *s + 1;
  return std::nullopt;
}

const std::string* Name::label() const {
  if (!node_) return nullptr;
  auto& l = labels();
  std::lock_guard lock(l.mu);
  auto it = l.by_ident.find(node_->ident);
  return it == l.by_ident.end() ? nullptr : &it->second;
}

// -- Family -------------------------------------------------------------------

Family Family::of(std::vector<Name> members) {
  Family f;
  f.index = Index::fin(members.size());
  auto shared = std::make_shared<const std::vector<Name>>(std::move(members));
  f.at = [shared](std::uint64_t i) { return shared->at(i); };
  f.ident = detail::fresh_ident();
  return f;
}

Family Family::over_nat(Generator gen, std::optional<std::uint64_t> stable_from) {
  Family f;
  f.index = Index::nat();
  f.at = std::move(gen);
  f.ident = detail::fresh_ident();
  f.stable_from = stable_from;
  return f;
}

// -- detail -------------------------------------------------------------------

namespace detail {

Ident fresh_ident() { return g_next_ident.fetch_add(1, std::memory_order_relaxed); }

Name make_nat_node(Generator gen, Ident ident, std::optional<std::uint64_t> stable_from) {
  auto data = std::make_shared<NodeData>();
  data->index = Index::nat();
  data->gen = std::move(gen);
  data->ident = ident != 0 ? ident : fresh_ident();
  data->stable_from = stable_from;
  return NameAccess::wrap(std::move(data));
}

Name memo_construct(std::string_view op, const std::vector<Ident>& args,
                    const std::function<Name()>& build) {
  auto& m = construct_memo();
  std::pair<std::string, std::vector<Ident>> key{std::string(op), args};
  {
    std::lock_guard lock(m.mu);
    auto it = m.table.find(key);
    if (it != m.table.end()) return it->second;
  }
  Name built = build();
  std::lock_guard lock(m.mu);
  return m.table.emplace(std::move(key), std::move(built)).first->second;
}

Name sup_family_lenient(const Family& fs) { return sup_family_impl(fs, true); }

}  // namespace detail

// -- Constructors -------------------------------------------------------------

Name zero() { return Name(); }

Name mk_node(const Family& f) {
  if (f.index.is_finite()) {
    if (f.index.count() == 0) {
      throw InvalidArgument("mk_node: empty family; Zero is built with zero()");
    }
    std::vector<Name> children;
    children.reserve(f.index.count());
    for (std::uint64_t i = 0; i < f.index.count(); ++i) children.push_back(f.at(i));
    return finite_node(std::move(children));
  }
  return detail::make_nat_node(f.at, f.ident, f.stable_from);
}

Name node_of(std::span<const Name> subordinals) {
  if (subordinals.empty()) {
    throw InvalidArgument("node_of: empty family; Zero is built with zero()");
  }
  return finite_node(std::vector<Name>(subordinals.begin(), subordinals.end()));
}

Name node_of(std::initializer_list<Name> subordinals) {
  return node_of(std::span<const Name>(subordinals.begin(), subordinals.size()));
}

Name suc(const Name& a) { return finite_node({a}); }

Name suc_list(std::span<const Name> as) {
  if (as.empty()) throw InvalidArgument("suc_list: empty list");
  return node_of(as);
}

Name suc_list(std::initializer_list<Name> as) {
  return suc_list(std::span<const Name>(as.begin(), as.size()));
}

Name und(std::uint64_t n) {
  static std::mutex mu;
  static std::vector<Name> cache{Name()};
  std::lock_guard lock(mu);
  while (cache.size() <= n) cache.push_back(suc(cache.back()));
  return cache[n];
}

Name canonical_constant(const std::string& key, const std::function<Name()>& build) {
  auto& l = labels();
  {
    std::lock_guard lock(l.mu);
    auto it = l.by_key.find(key);
    if (it != l.by_key.end()) return it->second;
  }
  Name built = build();
  std::lock_guard lock(l.mu);
  auto [it, inserted] = l.by_key.emplace(key, built);
  if (inserted && built.is_node()) l.by_ident.emplace(built.ident(), key);
  return it->second;
}

Name omega() {
  return canonical_constant("w", [] {
    return detail::make_nat_node([](std::uint64_t n) { return und(n); });
  });
}

Name sup_family(const Family& fs) { return sup_family_impl(fs, false); }

Name sup_finite(std::span<const Name> as) {
  std::vector<Name> nodes;
  for (const Name& a : as) {
    if (a.is_node()) nodes.push_back(a);
  }
  if (nodes.empty()) return zero();
  if (nodes.size() == 1) return nodes.front();
  return sup_family(Family::of(std::move(nodes)));
}

Name sup_finite(std::initializer_list<Name> as) {
  return sup_finite(std::span<const Name>(as.begin(), as.size()));
}

Family subordinals(const Name& a) {
  Family f;
  f.index = a.index();
  f.at = [a](std::uint64_t i) { return a.at(i); };
  f.ident = a.ident();
  f.stable_from = a.stable_from();
  return f;
}

Name filtering(const Name& a) {
  if (a.is_zero()) throw InvalidArgument("filtering: Zero has no filtering form");
  auto subset_sup = [a](std::uint64_t mask) {
    std::vector<Name> members;
    for (std::uint64_t j = 0; mask != 0; ++j, mask >>= 1) {
      if (mask & 1) members.push_back(a.at(j));
    }
    return sup_finite(members);
  };
  Index idx = a.index();
  if (idx.is_finite()) {
    if (idx.count() > 20) {
      throw InvalidArgument("filtering: finite index too large to enumerate subsets");
    }
    std::vector<Name> children;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idx.count()); ++mask) {
      children.push_back(subset_sup(mask));
    }
    return finite_node(std::move(children));
  }
  return detail::memo_construct("filtering", {a.ident()}, [&] {
    return detail::make_nat_node(subset_sup);
  });
}

// -- BitSeq -------------------------------------------------------------------

bool BitSeq::at(std::uint64_t n) const {
  if (n < prefix.size()) return prefix[n] != 0;
  if (tail == Tail::Opaque) return opaque(n);
  return !prefix.empty() && prefix.back() != 0;
}

std::optional<std::uint64_t> BitSeq::constant_from() const {
  if (tail != Tail::ConstLast) return std::nullopt;
  std::uint64_t from = prefix.size();
  std::uint8_t last = prefix.empty() ? 0 : prefix.back();
  while (from > 0 && prefix[from - 1] == last) --from;
  return from;
}

BitSeq BitSeq::const_last(std::vector<std::uint8_t> prefix) {
  BitSeq s;
  s.prefix = std::move(prefix);
  return s;
}

BitSeq BitSeq::opaque_last(std::vector<std::uint8_t> prefix) {
  BitSeq s;
  bool last = !prefix.empty() && prefix.back() != 0;
  s.prefix = std::move(prefix);
  s.tail = Tail::Opaque;
  s.opaque = [last](std::uint64_t) { return last; };
  return s;
}

BitSeq BitSeq::parse(const std::string& bits, Tail tail) {
  std::vector<std::uint8_t> prefix;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("bit sequence prefix must contain only 0 and 1: " + bits);
    }
    prefix.push_back(c == '1' ? 1 : 0);
  }
  return tail == Tail::ConstLast ? const_last(std::move(prefix))
                                 : opaque_last(std::move(prefix));
}

LlpoNames eps_llpo(const BitSeq& v) {
  auto from = v.constant_from();
  std::optional<std::uint64_t> even_from, odd_from;
  if (from) {
    even_from = (*from + 1) / 2;
    odd_from = *from / 2;
  }
  LlpoNames out;
  out.eps = detail::make_nat_node([v](std::uint64_t n) { return und(v.at(n)); }, 0, from);
  out.eps_even =
      detail::make_nat_node([v](std::uint64_t m) { return und(v.at(2 * m)); }, 0, even_from);
  out.eps_odd = detail::make_nat_node(
      [v](std::uint64_t m) { return und(v.at(2 * m + 1)); }, 0, odd_from);
  return out;
}

LpoNames eps_lpo(const BitSeq& u) {
  auto from = u.constant_from();
  LpoNames out;
  out.eps = detail::make_nat_node([u](std::uint64_t n) { return und(u.at(n)); }, 0, from);
  out.eps_prime =
      detail::make_nat_node([u](std::uint64_t n) { return und(u.at(n) + 1); }, 0, from);
  return out;
}

// -- Printing -----------------------------------------------------------------

std::string to_string(const Name& a) {
  if (a.is_zero()) return "0";
  if (const std::string* l = a.label()) return *l;
  if (a.is_finitary() && same(a, und(a.height()))) return std::to_string(a.height());
  if (!a.index().is_finite()) return "<nat#" + std::to_string(a.ident()) + ">";
  std::ostringstream out;
  out << "suc(";
  for (std::uint64_t i = 0; i < a.index().count(); ++i) {
    if (i) out << ", ";
    out << to_string(a.at(i));
  }
  out << ")";
  return out.str();
}

}  // namespace ordinal
