#include "ngraph/generate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>

#include "ngraph/errors.hpp"
#include "ngraph/switching.hpp"

namespace ngraph {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

} // namespace

NodeId GraphBuilder::fresh(const Formula& label) {
  NodeId id = "n" + std::to_string(next_++);
  index_[id] = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{id, label});
  dead_.push_back(false);
  premise_used_.push_back(false);
  conclusion_used_.push_back(false);
  parent_.push_back(static_cast<int>(parent_.size()));
  ++components_;
  return id;
}

int GraphBuilder::idx(const NodeId& id) const {
  auto it = index_.find(id);
  require(it != index_.end() && !dead_[it->second], "unknown node " + id);
  return it->second;
}

int GraphBuilder::find(int a) const {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

void GraphBuilder::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  parent_[b] = a;
  --components_;
}

void GraphBuilder::add_link(Link link) {
  int anchor = idx(link.premises[0]);
  for (const auto& p : link.premises) {
    premise_used_[idx(p)] = true;
    unite(anchor, idx(p));
  }
  for (const auto& c : link.conclusions) {
    conclusion_used_[idx(c)] = true;
    unite(anchor, idx(c));
  }
  if (link.hypothesis) {
    conclusion_used_[idx(*link.hypothesis)] = true;
    unite(anchor, idx(*link.hypothesis));
  }
  links_.push_back(std::move(link));
}

NodeId GraphBuilder::add_node(const Formula& label) { return fresh(label); }

bool GraphBuilder::known(const NodeId& id) const {
  auto it = index_.find(id);
  return it != index_.end() && !dead_[it->second];
}

const Formula& GraphBuilder::label(const NodeId& id) const { return nodes_[idx(id)].label; }

bool GraphBuilder::available_below(const NodeId& id) const { return !premise_used_[idx(id)]; }

bool GraphBuilder::available_above(const NodeId& id) const { return !conclusion_used_[idx(id)]; }

bool GraphBuilder::same_component(const NodeId& a, const NodeId& b) const {
  return find(idx(a)) == find(idx(b));
}

std::vector<NodeId> GraphBuilder::extend_below(const NodeId& c, LinkKind kind,
                                               const Formula& other) {
  require(available_below(c), c + " is already the premise of a link");
  Formula l = label(c);
  auto want = [&](bool ok) {
    require(ok, to_string(kind) + " does not fit the label " + l.to_string());
  };
  std::vector<NodeId> out;
  switch (kind) {
  case LinkKind::AndEL:
    want(l.kind() == Formula::Kind::And);
    out = {fresh(l.left())};
    break;
  case LinkKind::AndER:
    want(l.kind() == Formula::Kind::And);
    out = {fresh(l.right())};
    break;
  case LinkKind::OrIL:
    out = {fresh(Formula::disj(l, other))};
    break;
  case LinkKind::OrIR:
    out = {fresh(Formula::disj(other, l))};
    break;
  case LinkKind::TopSW:
    out = {fresh(Formula::top())};
    break;
  case LinkKind::BotSW:
    want(l.kind() == Formula::Kind::Bottom);
    out = {fresh(other)};
    break;
  case LinkKind::OrE:
    want(l.kind() == Formula::Kind::Or);
    out = {fresh(l.left()), fresh(l.right())};
    break;
  case LinkKind::TopLink:
    want(l.kind() == Formula::Kind::Top);
    out = {fresh(other), fresh(Formula::neg(other))};
    break;
  case LinkKind::BotDW:
    out = {fresh(l), fresh(Formula::bottom())};
    break;
  default:
    throw PreconditionError("extend_below does not take " + to_string(kind) + " links");
  }
  add_link(Link{kind, {c}, out, std::nullopt});
  return out;
}

std::vector<NodeId> GraphBuilder::extend_above(const NodeId& p, LinkKind kind,
                                               const Formula& other) {
  require(available_above(p), p + " is already concluded by a link");
  Formula l = label(p);
  auto want = [&](bool ok) {
    require(ok, to_string(kind) + " does not fit the label " + l.to_string());
  };
  std::vector<NodeId> out;
  switch (kind) {
  case LinkKind::AndEL:
    out = {fresh(Formula::conj(l, other))};
    break;
  case LinkKind::AndER:
    out = {fresh(Formula::conj(other, l))};
    break;
  case LinkKind::OrIL:
    want(l.kind() == Formula::Kind::Or);
    out = {fresh(l.left())};
    break;
  case LinkKind::OrIR:
    want(l.kind() == Formula::Kind::Or);
    out = {fresh(l.right())};
    break;
  case LinkKind::TopSW:
    want(l.kind() == Formula::Kind::Top);
    out = {fresh(other)};
    break;
  case LinkKind::BotSW:
    out = {fresh(Formula::bottom())};
    break;
  case LinkKind::AndI:
    want(l.kind() == Formula::Kind::And);
    out = {fresh(l.left()), fresh(l.right())};
    break;
  case LinkKind::BotLink:
    want(l.kind() == Formula::Kind::Bottom);
    out = {fresh(other), fresh(Formula::neg(other))};
    break;
  case LinkKind::ImpE:
    out = {fresh(other), fresh(Formula::imp(other, l))};
    break;
  case LinkKind::TopFW:
    out = {fresh(Formula::top()), fresh(l)};
    break;
  default:
    throw PreconditionError("extend_above does not take " + to_string(kind) + " links");
  }
  add_link(Link{kind, out, {p}, std::nullopt});
  return out;
}

NodeId GraphBuilder::join(const NodeId& c1, const NodeId& c2, LinkKind kind) {
  require(available_below(c1), c1 + " is already the premise of a link");
  require(available_below(c2), c2 + " is already the premise of a link");
  require(!same_component(c1, c2),
          "join needs two components; a focussing link inside one closes a cycle");
  Formula l1 = label(c1), l2 = label(c2);
  Formula m = Formula::top();
  switch (kind) {
  case LinkKind::AndI:
    m = Formula::conj(l1, l2);
    break;
  case LinkKind::BotLink:
    require(l2 == Formula::neg(l1), "BotLink wants " + l1.to_string() + " against its negation");
    m = Formula::bottom();
    break;
  case LinkKind::ImpE:
    require(l2.kind() == Formula::Kind::Imp && l2.left() == l1,
            "ImpE wants an implication whose antecedent is " + l1.to_string());
    m = l2.right();
    break;
  case LinkKind::TopFW:
    require(l1.kind() == Formula::Kind::Top, "TopFW wants T as its first premise");
    m = l2;
    break;
  default:
    throw PreconditionError("join does not take " + to_string(kind) + " links");
  }
  NodeId id = fresh(m);
  add_link(Link{kind, {c1, c2}, {id}, std::nullopt});
  return id;
}

NodeId GraphBuilder::contract(const NodeId& c1, const NodeId& c2) {
  require(c1 != c2, "contraction needs two distinct conclusions");
  require(available_below(c1) && available_below(c2), "both nodes must still be conclusions");
  require(label(c1) == label(c2), "contraction needs equal labels");
  require(same_component(c1, c2),
          "contracting across components leaves one side stranded under some switching");
  NodeId id = fresh(label(c1));
  add_link(Link{LinkKind::Contraction, {c1, c2}, {id}, std::nullopt});
  return id;
}

NodeId GraphBuilder::expand(const NodeId& p1, const NodeId& p2) {
  require(p1 != p2, "expansion needs two distinct premises");
  require(available_above(p1) && available_above(p2), "both nodes must still be premises");
  require(label(p1) == label(p2), "expansion needs equal labels");
  require(same_component(p1, p2),
          "expanding across components leaves one side stranded under some switching");
  NodeId id = fresh(label(p1));
  add_link(Link{LinkKind::Expansion, {id}, {p1, p2}, std::nullopt});
  return id;
}

NodeId GraphBuilder::discharge(const NodeId& h, const NodeId& y) {
  require(available_above(h), "the hypothesis must not be concluded by a link");
  require(available_below(y), "the conclusion is already the premise of a link");
  require(same_component(h, y),
          "discharging across components leaves the hypothesis stranded");
  NodeId id = fresh(Formula::imp(label(h), label(y)));
  add_link(Link{LinkKind::ImpI, {y}, {id}, h});
  return id;
}

void GraphBuilder::glue(const NodeId& c, const NodeId& p) {
  require(c != p, "glue needs two distinct nodes");
  require(available_below(c), c + " is already the premise of a link");
  require(premise_used_[idx(p)], p + " must feed a link");
  require(available_above(p), p + " must be a premise of the graph");
  require(label(c) == label(p), "glue needs equal labels");
  require(!same_component(c, p), "gluing inside one component closes a cycle");
  int pi = idx(p), ci = idx(c);
  for (auto& link : links_)
    for (auto& q : link.premises)
      if (q == p) q = c;
  premise_used_[ci] = true;
  unite(ci, pi);
  dead_[pi] = true;
}

std::vector<Node> GraphBuilder::nodes() const {
  std::vector<Node> out;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (!dead_[i]) out.push_back(nodes_[i]);
  return out;
}

ProofGraph GraphBuilder::build() const { return ProofGraph(nodes(), links_); }

namespace {

// Raw engine draws, reduced by modulo: mt19937_64's sequence is pinned down
// by the standard while the library distributions are not, so this is what
// keeps seeds reproducible across platforms. The bias is irrelevant here.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  uint64_t below(uint64_t n) { return n ? gen() % n : 0; }
  double unit() { return double(gen() >> 11) * 0x1.0p-53; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }
};

std::string random_atom(Rng& rng, const std::vector<std::string>& pool) {
  static const std::vector<std::string> fallback = {"a"};
  const auto& p = pool.empty() ? fallback : pool;
  return p[rng.below(p.size())];
}

Formula random_formula(Rng& rng, const std::vector<std::string>& pool) {
  uint64_t r = rng.below(20);
  Formula x = Formula::atom(random_atom(rng, pool));
  if (r < 12) return x;
  if (r < 16) return Formula::neg(x);
  if (r == 19) return rng.below(2) ? Formula::top() : Formula::bottom();
  Formula y = Formula::atom(random_atom(rng, pool));
  if (r == 16) return Formula::conj(x, y);
  if (r == 17) return Formula::disj(x, y);
  return Formula::imp(x, y);
}

const LinkKind kAllKinds[] = {
    LinkKind::AndEL,   LinkKind::AndER, LinkKind::OrIL,        LinkKind::OrIR,
    LinkKind::TopSW,   LinkKind::BotSW, LinkKind::AndI,        LinkKind::BotLink,
    LinkKind::ImpE,    LinkKind::TopFW, LinkKind::Contraction, LinkKind::OrE,
    LinkKind::TopLink, LinkKind::BotDW, LinkKind::Expansion,   LinkKind::ImpI,
};

bool below_fits(LinkKind k, const Formula& l) {
  switch (k) {
  case LinkKind::AndEL:
  case LinkKind::AndER:
    return l.kind() == Formula::Kind::And;
  case LinkKind::OrE:
    return l.kind() == Formula::Kind::Or;
  case LinkKind::TopLink:
    return l.kind() == Formula::Kind::Top;
  case LinkKind::BotSW:
    return l.kind() == Formula::Kind::Bottom;
  default:
    return true;
  }
}

bool above_fits(LinkKind k, const Formula& l) {
  switch (k) {
  case LinkKind::AndI:
    return l.kind() == Formula::Kind::And;
  case LinkKind::BotLink:
    return l.kind() == Formula::Kind::Bottom;
  default:
    return true;
  }
}

bool join_fits(LinkKind k, const Formula& l1, const Formula& l2) {
  switch (k) {
  case LinkKind::AndI:
    return true;
  case LinkKind::BotLink:
    return l2 == Formula::neg(l1);
  case LinkKind::ImpE:
    return l2.kind() == Formula::Kind::Imp && l2.left() == l1;
  case LinkKind::TopFW:
    return l1.kind() == Formula::Kind::Top;
  default:
    return false;
  }
}

bool try_join(GraphBuilder& b, Rng& rng, LinkKind k) {
  std::vector<Node> below;
  for (const auto& n : b.nodes())
    if (b.available_below(n.id)) below.push_back(n);
  if (below.size() < 2) return false;
  for (int t = 0; t < 16; ++t) {
    const Node& a = rng.pick(below);
    const Node& c = rng.pick(below);
    if (a.id == c.id || b.same_component(a.id, c.id)) continue;
    if (!join_fits(k, a.label, c.label)) continue;
    b.join(a.id, c.id, k);
    return true;
  }
  return false;
}

void try_glue(GraphBuilder& b, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> fits;
  auto nodes = b.nodes();
  for (const auto& c : nodes) {
    if (!b.available_below(c.id)) continue;
    for (const auto& p : nodes)
      if (p.id != c.id && !b.available_below(p.id) && b.available_above(p.id) &&
          p.label == c.label && !b.same_component(c.id, p.id))
        fits.emplace_back(c.id, p.id);
  }
  if (fits.empty()) return;
  const auto& [c, p] = rng.pick(fits);
  b.glue(c, p);
}

void try_kind(GraphBuilder& b, Rng& rng, const GeneratorSpec& spec, LinkKind k) {
  auto nodes = b.nodes();
  switch (k) {
  case LinkKind::AndEL:
  case LinkKind::AndER:
  case LinkKind::OrIL:
  case LinkKind::OrIR:
  case LinkKind::TopSW:
  case LinkKind::BotSW:
  case LinkKind::OrE:
  case LinkKind::TopLink:
  case LinkKind::BotDW: {
    std::vector<NodeId> fits;
    for (const auto& n : nodes)
      if (b.available_below(n.id) && below_fits(k, n.label)) fits.push_back(n.id);
    if (fits.empty()) return;
    b.extend_below(rng.pick(fits), k, random_formula(rng, spec.atom_pool));
    return;
  }
  case LinkKind::AndI:
  case LinkKind::BotLink:
  case LinkKind::ImpE:
  case LinkKind::TopFW: {
    if (b.component_count() > 1 && rng.below(2) == 0 && try_join(b, rng, k)) return;
    std::vector<NodeId> fits;
    for (const auto& n : nodes)
      if (b.available_above(n.id) && above_fits(k, n.label)) fits.push_back(n.id);
    if (fits.empty()) return;
    b.extend_above(rng.pick(fits), k, random_formula(rng, spec.atom_pool));
    return;
  }
  case LinkKind::Contraction: {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (!b.available_below(nodes[i].id)) continue;
      for (size_t j = i + 1; j < nodes.size(); ++j)
        if (b.available_below(nodes[j].id) && nodes[i].label == nodes[j].label &&
            b.same_component(nodes[i].id, nodes[j].id))
          pairs.emplace_back(nodes[i].id, nodes[j].id);
    }
    if (pairs.empty()) return;
    const auto& [c1, c2] = rng.pick(pairs);
    b.contract(c1, c2);
    return;
  }
  case LinkKind::Expansion: {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (!b.available_above(nodes[i].id)) continue;
      for (size_t j = i + 1; j < nodes.size(); ++j)
        if (b.available_above(nodes[j].id) && nodes[i].label == nodes[j].label &&
            b.same_component(nodes[i].id, nodes[j].id))
          pairs.emplace_back(nodes[i].id, nodes[j].id);
    }
    if (pairs.empty()) return;
    const auto& [p1, p2] = rng.pick(pairs);
    b.expand(p1, p2);
    return;
  }
  case LinkKind::ImpI: {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (const auto& h : nodes) {
      if (!b.available_above(h.id)) continue;
      for (const auto& y : nodes)
        if (b.available_below(y.id) && b.same_component(h.id, y.id))
          pairs.emplace_back(h.id, y.id);
    }
    if (pairs.empty()) return;
    const auto& [h, y] = rng.pick(pairs);
    b.discharge(h, y);
    return;
  }
  }
}

void grow(GraphBuilder& b, Rng& rng, const GeneratorSpec& spec) {
  int seeds = spec.max_links <= 1 ? 1 : 1 + static_cast<int>(rng.below(3));
  for (int i = 0; i < seeds; ++i)
    b.add_node(Formula::atom(random_atom(rng, spec.atom_pool)));

  std::vector<uint64_t> weights;
  uint64_t total = 0;
  for (LinkKind k : kAllKinds) {
    auto it = spec.kind_weights.find(k);
    double w = it == spec.kind_weights.end() ? 1.0 : it->second;
    uint64_t wi = w <= 0 ? 0 : static_cast<uint64_t>(std::llround(w * 1024));
    weights.push_back(wi);
    total += wi;
  }
  if (total == 0) {
    weights.assign(std::size(kAllKinds), 1);
    total = std::size(kAllKinds);
  }
  auto pick_kind = [&] {
    uint64_t r = rng.below(total);
    for (size_t i = 0; i < weights.size(); ++i) {
      if (r < weights[i]) return kAllKinds[i];
      r -= weights[i];
    }
    return kAllKinds[0];
  };

  int cap = 20 * spec.max_links + 40;
  for (int attempt = 0;
       b.link_count() + (b.component_count() - 1) < spec.max_links && attempt < cap;
       ++attempt) {
    if (b.component_count() > 1 && rng.below(8) == 0) {
      try_glue(b, rng);
      continue;
    }
    try_kind(b, rng, spec, pick_kind());
  }

  while (b.component_count() > 1) {
    std::vector<NodeId> below;
    for (const auto& n : b.nodes())
      if (b.available_below(n.id)) below.push_back(n.id);
    NodeId c1 = below.front();
    for (const auto& c2 : below)
      if (!b.same_component(c1, c2)) {
        b.join(c1, c2, LinkKind::AndI);
        break;
      }
  }
}

struct Draft {
  std::vector<Node> nodes;
  std::vector<Link> links;
  int next = 0;

  NodeId fresh(const Formula& f) {
    NodeId id = "u" + std::to_string(next++);
    nodes.push_back(Node{id, f});
    return id;
  }

  const Formula& label(const NodeId& id) const {
    for (const auto& n : nodes)
      if (n.id == id) return n.label;
    throw PreconditionError("unknown node " + id);
  }

  std::vector<NodeId> free_below() const {
    std::set<NodeId> used;
    for (const auto& l : links)
      for (const auto& p : l.premises) used.insert(p);
    std::vector<NodeId> out;
    for (const auto& n : nodes)
      if (!used.count(n.id)) out.push_back(n.id);
    return out;
  }
};

// Focussing link inside the single component: every switching gains a cycle.
bool mutate_cycle_join(Draft& d, Rng& rng) {
  auto free = d.free_below();
  if (free.size() < 2) return false;
  size_t i = rng.below(free.size());
  size_t j = rng.below(free.size() - 1);
  if (j >= i) ++j;
  NodeId m = d.fresh(Formula::conj(d.label(free[i]), d.label(free[j])));
  d.links.push_back(Link{LinkKind::AndI, {free[i], free[j]}, {m}, std::nullopt});
  return true;
}

// Contraction bridging a fresh component: the kept premise edge strands the
// other side under every switching.
bool mutate_bridge_contraction(Draft& d, Rng& rng, const std::vector<std::string>& pool) {
  auto free = d.free_below();
  if (free.empty()) return false;
  NodeId c = free[rng.below(free.size())];
  NodeId x = d.fresh(Formula::atom(random_atom(rng, pool)));
  NodeId t1 = d.fresh(Formula::top());
  NodeId t2 = d.fresh(Formula::top());
  NodeId t3 = d.fresh(Formula::top());
  d.links.push_back(Link{LinkKind::TopSW, {c}, {t1}, std::nullopt});
  d.links.push_back(Link{LinkKind::TopSW, {x}, {t2}, std::nullopt});
  d.links.push_back(Link{LinkKind::Contraction, {t1, t2}, {t3}, std::nullopt});
  return true;
}

// Implication whose hypothesis nothing uses: the direct switching strands
// the hypothesis, the virtual one strands the rest.
bool mutate_dangling_discharge(Draft& d, Rng& rng, const std::vector<std::string>& pool) {
  auto free = d.free_below();
  if (free.empty()) return false;
  NodeId y = free[rng.below(free.size())];
  Formula a = Formula::atom(random_atom(rng, pool));
  NodeId h = d.fresh(a);
  NodeId m = d.fresh(Formula::imp(a, d.label(y)));
  d.links.push_back(Link{LinkKind::ImpI, {y}, {m}, h});
  return true;
}

// Rewires one contraction premise to a free equal-labelled node elsewhere.
bool mutate_rewire_contraction(Draft& d, Rng& rng) {
  std::vector<size_t> contractions;
  for (size_t i = 0; i < d.links.size(); ++i)
    if (d.links[i].kind == LinkKind::Contraction) contractions.push_back(i);
  if (contractions.empty()) return false;
  Link& link = d.links[contractions[rng.below(contractions.size())]];
  const Formula& l = d.label(link.premises[0]);
  std::vector<NodeId> fits;
  for (const auto& z : d.free_below())
    if (z != link.premises[0] && z != link.premises[1] && d.label(z) == l)
      fits.push_back(z);
  if (fits.empty()) return false;
  link.premises[rng.below(2)] = fits[rng.below(fits.size())];
  return true;
}

bool mutate(Draft& d, int which, Rng& rng, const GeneratorSpec& spec) {
  switch (which) {
  case 0:
    return mutate_cycle_join(d, rng);
  case 1:
    return mutate_bridge_contraction(d, rng, spec.atom_pool);
  case 2:
    return mutate_dangling_discharge(d, rng, spec.atom_pool);
  default:
    return mutate_rewire_contraction(d, rng);
  }
}

std::optional<ProofGraph> checked_unsound(const Draft& d) {
  std::optional<ProofGraph> g;
  try {
    g.emplace(d.nodes, d.links);
  } catch (const StructuralError&) {
    return std::nullopt;
  }
  if (is_ngraph(*g).sound) return std::nullopt;
  return g;
}

} // namespace

ProofGraph generate_sound(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  GraphBuilder b;
  grow(b, rng, spec);
  return b.build();
}

ProofGraph generate_unsound(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  GraphBuilder b;
  grow(b, rng, spec);
  Draft base{b.nodes(), b.links(), 0};

  for (int attempt = 0; attempt < 64; ++attempt) {
    Draft d = base;
    if (!mutate(d, static_cast<int>(rng.below(4)), rng, spec)) continue;
    auto g = checked_unsound(d);
    if (!g) continue;
    if (rng.unit() < spec.mutation_rate) {
      Draft stacked = d;
      if (mutate(stacked, static_cast<int>(rng.below(4)), rng, spec))
        if (auto g2 = checked_unsound(stacked)) return *g2;
    }
    return *g;
  }

  Draft d = base;
  mutate_dangling_discharge(d, rng, spec.atom_pool);
  return ProofGraph(d.nodes, d.links);
}

} // namespace ngraph
