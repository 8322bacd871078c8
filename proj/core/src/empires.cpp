#include "ngraph/empires.hpp"

#include "ngraph/errors.hpp"

namespace ngraph {

std::string to_string(Side s) {
  switch (s) {
  case Side::North: return "north";
  case Side::South: return "south";
  case Side::Whole: return "whole";
  }
  return "?";
}

std::vector<NodeId> Empire::member_ids(const ProofGraph& g) const {
  std::vector<NodeId> ids;
  for (int i : members.to_indices()) ids.push_back(g.node(i).id);
  return ids;
}

NodeSet s_component(const ProofGraph& g, const std::vector<SwitchEdge>& edges, int a,
                    Side side) {
  if (side == Side::Whole) throw DomainError("s_component is defined for North and South only");
  int n = g.node_count();
  bool deleted_any = false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    bool cut = side == Side::North ? e.upper == a : e.lower == a;
    if (cut) {
      deleted_any = true;
      continue;
    }
    adj[e.upper].push_back(e.lower);
    adj[e.lower].push_back(e.upper);
  }
  if (!deleted_any) return NodeSet::full(n);

  NodeSet seen(n);
  seen.insert(a);
  std::vector<int> stack = {a};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen.contains(v)) {
        seen.insert(v);
        stack.push_back(v);
      }
  }
  return seen;
}

NodeSet s_component(const ProofGraph& g, const MetaSwitching& s, int a, Side side) {
  return s_component(g, switching_graph(g, s), a, side);
}

NodeSet empire_closure_set(const ProofGraph& g, int a, Side side) {
  if (side == Side::Whole)
    return whole_empire_set(g, a);
  const bool north = side == Side::North;
  NodeSet e(g.node_count());
  e.insert(a);

  // Fixpoint over the closure rules. Upward rules pull premise-side nodes in
  // from conclusion-side members, downward rules push membership through to
  // conclusion-side nodes; the root blocks growth past itself on its own
  // side (north never crosses below a, south never above).
  bool changed = true;
  auto add = [&](int x) {
    if (!e.contains(x)) {
      e.insert(x);
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (const auto& v : g.link_views()) {
      switch (v.kind) {
      case LinkKind::Contraction: {
        int p1 = v.premises[0], p2 = v.premises[1], c = v.conclusions[0];
        if (e.contains(c) && (north || c != a)) { add(p1); add(p2); }
        if (e.contains(p1) && e.contains(p2) && (!north || (p1 != a && p2 != a))) add(c);
        break;
      }
      case LinkKind::Expansion: {
        int p = v.premises[0], c1 = v.conclusions[0], c2 = v.conclusions[1];
        if (e.contains(c1) && e.contains(c2) && (north || (c1 != a && c2 != a))) add(p);
        if (e.contains(p) && (!north || p != a)) { add(c1); add(c2); }
        break;
      }
      case LinkKind::ImpI: {
        int y = v.premises[0], m = v.conclusions[0], x = v.hypothesis;
        if (e.contains(m) && (north || m != a)) { add(y); add(x); }
        if (e.contains(y) && e.contains(x) && (!north || (y != a && x != a))) add(m);
        break;
      }
      default:
        if (shape_of(v.kind) == LinkShape::Simple) {
          int x = v.premises[0], y = v.conclusions[0];
          if (e.contains(y) && (north || y != a)) add(x);
          if (e.contains(x) && (!north || x != a)) add(y);
        } else if (shape_of(v.kind) == LinkShape::Focussing) {
          int x = v.premises[0], y = v.premises[1], z = v.conclusions[0];
          if (e.contains(z) && (north || z != a)) { add(x); add(y); }
          if ((e.contains(x) || e.contains(y)) && (!north || (x != a && y != a))) add(z);
        } else {
          int x = v.premises[0], y = v.conclusions[0], z = v.conclusions[1];
          if ((e.contains(y) || e.contains(z)) && (north || (y != a && z != a))) add(x);
          if (e.contains(x) && (!north || x != a)) { add(y); add(z); }
        }
      }
    }
  }
  return e;
}

Empire empire_closure(const ProofGraph& g, const NodeId& a, Side side) {
  int ai = g.node_index(a);
  return Empire{a, side,
                side == Side::Whole ? whole_empire_set(g, ai) : empire_closure_set(g, ai, side)};
}

NodeSet empire_by_intersection(const ProofGraph& g, int a, Side side,
                               const ResourceLimit& limit) {
  if (side == Side::Whole)
    throw DomainError("intersection oracle is defined for North and South only");
  MetaSwitchingRange range(g, limit);
  NodeSet acc = NodeSet::full(g.node_count());
  for (uint64_t mask = 0; mask < range.size(); ++mask)
    acc = acc & s_component(g, switching_graph(g, range.at(mask)), a, side);
  return acc;
}

MetaSwitching principal_switching(const ProofGraph& g, int a, Side side,
                                  const NodeSet& members) {
  if (side == Side::Whole)
    throw DomainError("principal switchings are defined for North and South only");
  const bool north = side == Side::North;
  MetaSwitching s;
  for (int li : switchable_links(g)) {
    const auto& v = g.link_views()[li];
    SwitchChoice choice = SwitchChoice::Left;
    // The two switched slots: upper pair for contraction (premises), lower
    // pair for expansion (conclusions); ImpI switches between its premise
    // (Left/Direct) and hypothesis (Right/Virtual), both upper ends.
    int left, right;
    bool slots_upper;
    if (v.kind == LinkKind::Contraction) {
      left = v.premises[0]; right = v.premises[1]; slots_upper = true;
    } else if (v.kind == LinkKind::Expansion) {
      left = v.conclusions[0]; right = v.conclusions[1]; slots_upper = false;
    } else {
      left = v.premises[0]; right = v.hypothesis; slots_upper = true;
    }
    // When a holds a switched slot on the side the s-component cuts, its own
    // edge must be the kept one so that the cut actually separates it.
    // Otherwise a boundary link (exactly one slot inside the empire) keeps
    // the outside slot's edge, so the flood cannot escape the empire.
    if (slots_upper == north && left == a) choice = SwitchChoice::Left;
    else if (slots_upper == north && right == a) choice = SwitchChoice::Right;
    else if (members.contains(left) != members.contains(right))
      choice = members.contains(left) ? SwitchChoice::Right : SwitchChoice::Left;
    s.choices.emplace_back(li, choice);
  }
  return s;
}

MetaSwitching principal_switching(const ProofGraph& g, const NodeId& a, Side side) {
  int ai = g.node_index(a);
  return principal_switching(g, ai, side, empire_closure_set(g, ai, side));
}

NodeSet whole_empire_set(const ProofGraph& g, int a) {
  return empire_closure_set(g, a, Side::North) | empire_closure_set(g, a, Side::South);
}

Empire whole_empire(const ProofGraph& g, const NodeId& a) {
  return Empire{a, Side::Whole, whole_empire_set(g, g.node_index(a))};
}

ProofGraph empire_subgraph(const ProofGraph& g, const Empire& e) {
  return g.induced(e.members);
}

} // namespace ngraph
