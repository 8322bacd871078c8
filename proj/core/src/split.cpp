#include "ngraph/split.hpp"

#include <algorithm>

#include "ngraph/errors.hpp"

namespace ngraph {

std::vector<int> order_domain(const ProofGraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.node_count(); ++i)
    if (!g.premises().contains(i) && !g.conclusions().contains(i)) out.push_back(i);
  return out;
}

bool order_lt(const ProofGraph& g, const NodeId& a, const NodeId& b) {
  int ai = g.node_index(a), bi = g.node_index(b);
  for (int i : {ai, bi})
    if (g.premises().contains(i) || g.conclusions().contains(i))
      throw DomainError("node '" + g.node(i).id +
                        "' is a premise or conclusion of the graph; the occurrence "
                        "ordering is defined on internal nodes only");
  return whole_empire_set(g, ai).proper_subset_of(whole_empire_set(g, bi));
}

namespace {

// Every link lies wholly inside `members` or wholly outside; true if inside.
// Split postconditions reject candidates with straddling links before this
// is consulted.
bool link_inside(const ProofGraph::LinkView& v, const NodeSet& members) {
  for (int p : v.premises)
    if (!members.contains(p)) return false;
  for (int c : v.conclusions)
    if (!members.contains(c)) return false;
  if (v.hypothesis >= 0 && !members.contains(v.hypothesis)) return false;
  return true;
}

} // namespace

SplitResult find_split(const ProofGraph& g, const ResourceLimit& limit) {
  if (g.link_count() < 2)
    throw PreconditionError("find_split needs at least two links");
  for (const auto& v : g.link_views()) {
    if (v.kind == LinkKind::Expansion && g.premises().contains(v.premises[0]))
      throw PreconditionError("initial expansion link present; reduce it first");
    if (v.kind == LinkKind::Contraction && g.conclusions().contains(v.conclusions[0]))
      throw PreconditionError("final contraction link present; reduce it first");
    if (v.kind == LinkKind::ImpI && g.conclusions().contains(v.conclusions[0]))
      throw PreconditionError("final implication-introduction link present; reduce it first");
  }

  std::vector<int> candidates;
  for (int i : order_domain(g))
    if (!g.hypotheses().contains(i)) candidates.push_back(i);

  std::vector<NodeSet> wholes;
  wholes.reserve(candidates.size());
  for (int c : candidates) wholes.push_back(whole_empire_set(g, c));

  std::vector<int> maximal;
  for (size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < candidates.size() && !dominated; ++j)
      dominated = i != j && wholes[i].proper_subset_of(wholes[j]);
    if (!dominated) maximal.push_back(static_cast<int>(i));
  }
  std::sort(maximal.begin(), maximal.end(), [&](int x, int y) {
    return g.node(candidates[x]).id < g.node(candidates[y]).id;
  });

  const NodeSet all = NodeSet::full(g.node_count());
  for (int mi : maximal) {
    int a = candidates[mi];
    if (wholes[mi] != all) continue;

    NodeSet north = empire_closure_set(g, a, Side::North);
    NodeSet south = empire_closure_set(g, a, Side::South);
    NodeSet meet = north & south;
    if ((north | south) != all) continue;
    if (meet.count() != 1 || !meet.contains(a)) continue;

    int north_links = 0, south_links = 0;
    bool partitioned = true;
    for (const auto& v : g.link_views()) {
      bool in_n = link_inside(v, north), in_s = link_inside(v, south);
      if (in_n == in_s) { partitioned = false; break; }
      ++(in_n ? north_links : south_links);
    }
    if (!partitioned || north_links == 0 || south_links == 0) continue;
    if (north_links + south_links != g.link_count()) continue;

    Empire en{g.node(a).id, Side::North, north};
    Empire es{g.node(a).id, Side::South, south};
    ResourceLimit side_limit = limit;
    auto side_ok = [&](const Empire& e) {
      ProofGraph sub = empire_subgraph(g, e);
      if (static_cast<int>(switchable_links(sub).size()) > side_limit.max_switchables)
        return true; // too large to recheck; set-level postconditions already hold
      return is_ngraph(sub, side_limit).sound;
    };
    if (!side_ok(en) || !side_ok(es)) continue;
    return SplitResult{g.node(a).id, std::move(en), std::move(es)};
  }
  throw SequentializeError(
      "no split node found; this contradicts the sequentialization theorem for sound inputs");
}

} // namespace ngraph
