#include "ngraph/switching.hpp"

#include <numeric>

#include "ngraph/errors.hpp"

namespace ngraph {

std::vector<int> switchable_links(const ProofGraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.link_count(); ++i)
    if (is_switchable(g.links()[i].kind)) out.push_back(i);
  return out;
}

MetaSwitchingRange::MetaSwitchingRange(const ProofGraph& g, ResourceLimit limit)
    : switchable_(switchable_links(g)) {
  int k = static_cast<int>(switchable_.size());
  if (k > limit.max_switchables)
    throw ResourceLimitError("graph has " + std::to_string(k) +
                                 " switchable links, enumeration bound is " +
                                 std::to_string(limit.max_switchables),
                             k, limit.max_switchables);
}

MetaSwitching MetaSwitchingRange::at(uint64_t mask) const {
  MetaSwitching s;
  for (size_t j = 0; j < switchable_.size(); ++j)
    s.choices.emplace_back(switchable_[j],
                           (mask >> j) & 1 ? SwitchChoice::Right : SwitchChoice::Left);
  return s;
}

std::vector<SwitchEdge> switching_graph(const ProofGraph& g, const MetaSwitching& s) {
  std::vector<SwitchEdge> edges;
  const auto& views = g.link_views();
  for (int li = 0; li < g.link_count(); ++li) {
    const auto& v = views[li];
    switch (v.kind) {
    case LinkKind::Contraction: {
      int p = s.choice_for(li) == SwitchChoice::Left ? v.premises[0] : v.premises[1];
      edges.push_back({p, v.conclusions[0], false});
      break;
    }
    case LinkKind::Expansion: {
      int c = s.choice_for(li) == SwitchChoice::Left ? v.conclusions[0] : v.conclusions[1];
      edges.push_back({v.premises[0], c, false});
      break;
    }
    case LinkKind::ImpI: {
      if (s.choice_for(li) == SwitchChoice::Left)
        edges.push_back({v.premises[0], v.conclusions[0], false});
      else
        edges.push_back({v.hypothesis, v.conclusions[0], true});
      break;
    }
    default:
      for (int p : v.premises)
        for (int c : v.conclusions) edges.push_back({p, c, false});
    }
  }
  return edges;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // false if already connected (joining would close a cycle)
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

} // namespace

std::optional<Defect> switching_defect(int node_count, const std::vector<SwitchEdge>& edges) {
  if (node_count == 0) return Defect::Disconnected;
  UnionFind uf(node_count);
  int components = node_count;
  bool cycle = false;
  for (const auto& e : edges) {
    if (uf.join(e.upper, e.lower)) --components;
    else cycle = true;
  }
  if (cycle) return Defect::Cyclic;
  if (components > 1) return Defect::Disconnected;
  return std::nullopt;
}

Verdict is_ngraph(const ProofGraph& g, const ResourceLimit& limit) {
  MetaSwitchingRange range(g, limit);
  if (g.node_count() == 0)
    return {false, range.at(0), Defect::Disconnected};
  for (uint64_t mask = 0; mask < range.size(); ++mask) {
    MetaSwitching s = range.at(mask);
    auto defect = switching_defect(g.node_count(), switching_graph(g, s));
    if (defect) return {false, std::move(s), *defect};
  }
  return {true, std::nullopt, std::nullopt};
}

} // namespace ngraph
