#include "ordinal/trees.hpp"

#include <algorithm>

namespace ordinal {

bool member(const NodePath& path, const Name& a) {
  Name cur = a;
  for (std::uint64_t n : path) {
    if (!cur.index().contains(n)) return false;
    cur = cur.at(n);
  }
  return true;
}

std::uint64_t mu(const NodePath& path) {
  std::uint64_t m = 0;
  for (std::uint64_t x : path) m += x + 1;
  return m;
}

namespace {

void collect(const Name& a, std::uint64_t budget, NodePath& path, std::vector<NodePath>& out) {
  out.push_back(path);
  Index idx = a.index();
  for (std::uint64_t i = 0; i + 1 <= budget && idx.contains(i); ++i) {
    path.push_back(i);
    collect(a.at(i), budget - (i + 1), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<NodePath> enumerate(const Name& a, std::uint64_t mu_bound) {
  std::vector<NodePath> out;
  NodePath path;
  collect(a, mu_bound, path, out);
  std::sort(out.begin(), out.end(), [](const NodePath& x, const NodePath& y) {
    auto mx = mu(x), my = mu(y);
    if (mx != my) return mx < my;
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

std::uint64_t node_count(const Name& a) {
  if (!a.is_finitary()) throw InvalidArgument("node_count: name is not finitary");
  return fold<std::uint64_t>(a, [](const Name&, const FoldResults<std::uint64_t>& r) {
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < r.index.count(); ++i) n += r.at(i);
    return n;
  });
}

BarProbe bar_probe(const Name& a, const std::function<std::uint64_t(std::uint64_t)>& f,
                   std::uint64_t guard) {
  Name cur = a;
  for (std::uint64_t n = 0; n < guard; ++n) {
    std::uint64_t step = f(n);
    if (!cur.index().contains(step)) return BarProbe{false, n + 1};
    cur = cur.at(step);
  }
  return BarProbe{true, guard};
}

std::string to_string(const NodePath& path) {
  std::string s = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(path[i]);
  }
  return s + "]";
}

}  // namespace ordinal
