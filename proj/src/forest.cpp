#include <algorithm>

#include "nmrot/enumeration.hpp"

namespace nmrot {

int Forest::root_count() const {
  int k = 0;
  for (int p : parent)
    if (p < 0) ++k;
  return k;
}

namespace {

std::string encode_subtree(int node, const std::vector<std::vector<int>>& kids) {
  std::vector<std::string> parts;
  for (int c : kids[node]) parts.push_back(encode_subtree(c, kids));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

// Catalog of rooted trees up to isomorphism, sizes ascending; within a size,
// encodings ascending. A forest is a non-increasing sequence of catalog ids.
struct TreeCatalog {
  struct Tree {
    int size;
    std::vector<int> children;  // catalog ids, non-increasing
    std::string enc;
  };
  std::vector<Tree> trees;

  explicit TreeCatalog(int max_size) {
    std::vector<std::vector<int>> by_size(max_size + 1);
    for (int k = 1; k <= max_size; ++k) {
      std::vector<Tree> fresh;
      std::vector<int> pick;
      auto choose = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
          Tree t;
          t.size = k;
          t.children = pick;
          std::string enc = "(";
          for (int id : pick) enc += trees[id].enc;
          enc += ")";
          t.enc = std::move(enc);
          fresh.push_back(std::move(t));
          return;
        }
        for (int id = std::min(bound, static_cast<int>(trees.size()) - 1); id >= 0; --id) {
          if (trees[id].size > remaining) continue;
          pick.push_back(id);
          self(self, remaining - trees[id].size, id);
          pick.pop_back();
        }
      };
      if (k == 1) {
        fresh.push_back({1, {}, "()"});
      } else {
        choose(choose, k - 1, static_cast<int>(trees.size()) - 1);
      }
      std::sort(fresh.begin(), fresh.end(), [](const Tree& a, const Tree& b) { return a.enc < b.enc; });
      for (Tree& t : fresh) {
        by_size[k].push_back(static_cast<int>(trees.size()));
        trees.push_back(std::move(t));
      }
    }
  }

  void emit_nodes(int id, int parent, std::vector<int>& out) const {
    const int me = static_cast<int>(out.size());
    out.push_back(parent);
    for (int c : trees[id].children) emit_nodes(c, me, out);
  }
};

}  // namespace

std::string Forest::encoding() const {
  std::vector<std::vector<int>> kids(nodes);
  std::vector<std::string> parts;
  for (int i = 0; i < nodes; ++i)
    if (parent[i] >= 0) kids[parent[i]].push_back(i);
  for (int i = 0; i < nodes; ++i)
    if (parent[i] < 0) parts.push_back(encode_subtree(i, kids));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

std::vector<Forest> enumerate_forests(int n) {
  if (n < 0) fail(ErrorKind::SchemaError, "negative node count");
  std::vector<Forest> out;
  if (n == 0) {
    out.push_back(Forest{0, {}});
    return out;
  }
  TreeCatalog cat(n);
  std::vector<int> pick;
  auto choose = [&](auto&& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      Forest f;
      f.nodes = n;
      for (int id : pick) cat.emit_nodes(id, -1, f.parent);
      out.push_back(std::move(f));
      return;
    }
    for (int id = std::min(bound, static_cast<int>(cat.trees.size()) - 1); id >= 0; --id) {
      if (cat.trees[id].size > remaining) continue;
      pick.push_back(id);
      self(self, remaining - cat.trees[id].size, id);
      pick.pop_back();
    }
  };
  choose(choose, n, static_cast<int>(cat.trees.size()) - 1);
  std::sort(out.begin(), out.end(),
            [](const Forest& a, const Forest& b) { return a.encoding() < b.encoding(); });
  return out;
}

ResiduatedAlgebra godel_from_forest(const Forest& f) {
  const int m = f.nodes;
  if (m > 20) fail(ErrorKind::SchemaError, "forest too large for downset construction");
  std::vector<unsigned> downsets;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    bool closed = true;
    for (int i = 0; i < m && closed; ++i)
      if ((mask >> i & 1u) && f.parent[i] >= 0 && !(mask >> f.parent[i] & 1u)) closed = false;
    if (closed) downsets.push_back(mask);
  }
  const int n = static_cast<int>(downsets.size());

  std::vector<std::string> labels;
  labels.reserve(n);
  for (unsigned mask : downsets) {
    std::string l = "{";
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) l += (l.size() > 1 ? "," : "") + std::to_string(i);
    l += "}";
    labels.push_back(std::move(l));
  }

  Relation leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[static_cast<size_t>(i) * n + j] = (downsets[i] & ~downsets[j]) == 0 ? 1 : 0;
  FiniteLattice lat = FiniteLattice::from_order(std::move(labels), std::move(leq));
  BinaryTable star = lat.meet_table();
  return ResiduatedAlgebra::make(std::move(lat), std::move(star));
}

}  // namespace nmrot
