// Acceptance gate for the proof-graph workbench. Each check prints exactly
// one PASS/FAIL line; the exit code is 0 iff everything passed. The checks
// run against the hand-built fixtures plus a generated corpus of 1000 sound
// and 500 unsound graphs.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixtures.hpp"
#include "ngraph/empires.hpp"
#include "ngraph/errors.hpp"
#include "ngraph/generate.hpp"
#include "ngraph/sequentialize.hpp"
#include "ngraph/split.hpp"
#include "ngraph/switching.hpp"

using namespace ngraph;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(bool ok, const char* what, double elapsed) {
  std::printf("%s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", what, elapsed);
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Entry {
  ProofGraph g;
  std::vector<NodeSet> north, south, whole;
};

// ---------------------------------------------------------------- fixtures

bool fixtures_classify() {
  Verdict diamond = is_ngraph(fixtures::cyclic_diamond());
  if (diamond.sound || diamond.defect != Defect::Cyclic) return false;

  if (!is_ngraph(fixtures::contraction_merge()).sound) return false;
  if (!is_ngraph(fixtures::expansion_fork()).sound) return false;

  ProofGraph circ = fixtures::circular_discharge();
  Verdict cv = is_ngraph(circ);
  if (cv.sound || cv.defect != Defect::Cyclic) return false;
  // Both discharge choices must leave a cycle, not just the witness.
  for (const MetaSwitching& s : MetaSwitchingRange(circ))
    if (switching_defect(circ.node_count(), switching_graph(circ, s)) != Defect::Cyclic)
      return false;

  ProofGraph dcs = fixtures::discharge_case_split();
  if (!is_ngraph(dcs).sound) return false;
  Sequent want{{}, {parse_formula("(A|B)->A"), parse_formula("B")}};
  return sequent_equal(dcs.end_sequent(), want);
}

bool showcase_empires() {
  ProofGraph g = fixtures::empire_showcase();
  auto labels = [&](const NodeSet& m) {
    std::vector<std::string> out;
    for (int i : m.to_indices()) out.push_back(g.label(i).to_string());
    std::sort(out.begin(), out.end());
    return out;
  };
  int a1 = g.node_index("a1");
  std::vector<std::string> north_want = {"A", "A | C", "C", "C & Z", "Z", "~A & Z"};
  std::vector<std::string> south_want = {"A", "F", "~A", "~A & Z"};
  return labels(empire_closure_set(g, a1, Side::North)) == north_want &&
         labels(empire_closure_set(g, a1, Side::South)) == south_want;
}

// ------------------------------------------------------------------ corpus

GeneratorSpec corpus_spec(uint64_t seed) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.max_links = 12;
  spec.atom_pool = {"a", "b"};
  spec.kind_weights[LinkKind::Contraction] = 8.0;
  spec.kind_weights[LinkKind::Expansion] = 8.0;
  spec.kind_weights[LinkKind::ImpI] = 5.0;
  return spec;
}

std::vector<Entry> build_corpus(int want, int max_switchables, int* max_seen,
                                std::set<LinkKind>* kinds_seen) {
  std::vector<Entry> corpus;
  corpus.reserve(want);
  *max_seen = 0;
  for (uint64_t seed = 1; static_cast<int>(corpus.size()) < want; ++seed) {
    ProofGraph g = generate_sound(corpus_spec(seed));
    int k = static_cast<int>(switchable_links(g).size());
    if (k > max_switchables) continue;
    if (!is_ngraph(g).sound) continue; // belt and braces; never expected
    *max_seen = std::max(*max_seen, k);
    for (const Link& l : g.links()) kinds_seen->insert(l.kind);
    corpus.push_back(Entry{std::move(g), {}, {}, {}});
  }
  return corpus;
}

// --------------------------------------------------------- empire checks

bool closure_matches_oracle(std::vector<Entry>& corpus) {
  bool ok = true;
  for (Entry& e : corpus) {
    const ProofGraph& g = e.g;
    int n = g.node_count();
    e.north.reserve(n);
    e.south.reserve(n);
    e.whole.reserve(n);
    for (int i = 0; i < n; ++i) {
      NodeSet north = empire_closure_set(g, i, Side::North);
      NodeSet south = empire_closure_set(g, i, Side::South);
      ok = ok && north == empire_by_intersection(g, i, Side::North);
      ok = ok && south == empire_by_intersection(g, i, Side::South);
      e.whole.push_back(north | south);
      e.north.push_back(std::move(north));
      e.south.push_back(std::move(south));
    }
  }
  return ok;
}

bool principal_cuts_and_border_spans(const std::vector<Entry>& corpus) {
  bool ok = true;
  for (const Entry& e : corpus) {
    const ProofGraph& g = e.g;
    NodeSet all = NodeSet::full(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) {
      MetaSwitching pn = principal_switching(g, i, Side::North, e.north[i]);
      ok = ok && s_component(g, pn, i, Side::North) == e.north[i];
      MetaSwitching ps = principal_switching(g, i, Side::South, e.south[i]);
      ok = ok && s_component(g, ps, i, Side::South) == e.south[i];
    }
    for (int i : g.premises().to_indices())
      ok = ok && e.south[i] == all && e.whole[i] == all;
    for (int i : g.conclusions().to_indices())
      ok = ok && e.north[i] == all && e.whole[i] == all;
  }
  return ok;
}

bool nesting_laws(const std::vector<Entry>& corpus) {
  bool ok = true;
  for (const Entry& e : corpus) {
    int n = e.g.node_count();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const NodeSet &na = e.north[a], &nb = e.north[b];
        const NodeSet &sa = e.south[a], &sb = e.south[b];
        const NodeSet &wa = e.whole[a], &wb = e.whole[b];
        // North against north.
        if (nb.contains(a) && !na.contains(b)) ok = ok && na.proper_subset_of(nb);
        if (!nb.contains(a) && !na.contains(b)) ok = ok && !na.intersects(nb);
        // South against south.
        if (sb.contains(a) && !sa.contains(b)) ok = ok && sa.proper_subset_of(sb);
        if (!sb.contains(a) && !sa.contains(b)) ok = ok && !sa.intersects(sb);
        // Mixed sides.
        if (nb.contains(a) && !sa.contains(b)) ok = ok && sa.proper_subset_of(nb);
        if (sb.contains(a) && !na.contains(b)) ok = ok && na.proper_subset_of(sb);
        if (!nb.contains(a) && !sa.contains(b)) ok = ok && !sa.intersects(nb);
        // Whole empires.
        if (!wb.contains(a) && !wa.contains(b)) ok = ok && !wa.intersects(wb);
        if (wb.contains(a) && !wa.contains(b)) ok = ok && wa.proper_subset_of(wb);
        if (!ok) return false;
      }
  }
  return ok;
}

// ------------------------------------------------------ sub-graph algebra

struct SubKey {
  std::vector<uint64_t> words;
  uint64_t links = 0;
  bool operator==(const SubKey& o) const = default;
};

struct SubKeyHash {
  size_t operator()(const SubKey& k) const {
    size_t h = std::hash<uint64_t>()(k.links);
    for (uint64_t w : k.words) h = h * 1099511628211ull ^ w;
    return h;
  }
};

uint64_t induced_link_mask(const ProofGraph& g, const NodeSet& m) {
  uint64_t mask = 0;
  for (int j = 0; j < g.link_count(); ++j) {
    const auto& lv = g.link_views()[j];
    bool in = true;
    for (int p : lv.premises) in = in && m.contains(p);
    for (int c : lv.conclusions) in = in && m.contains(c);
    if (lv.hypothesis >= 0) in = in && m.contains(lv.hypothesis);
    if (in) mask |= uint64_t(1) << j;
  }
  return mask;
}

bool union_and_intersection_algebra(const std::vector<Entry>& corpus) {
  bool ok = true;
  for (const Entry& e : corpus) {
    const ProofGraph& g = e.g;
    uint64_t all_links = (uint64_t(1) << g.link_count()) - 1;
    int n = g.node_count();

    // Distinct empires of the graph, as node sets with their induced links.
    std::set<std::pair<std::vector<uint64_t>, uint64_t>> seen;
    std::vector<std::pair<NodeSet, uint64_t>> empires;
    for (int i = 0; i < n; ++i)
      for (const NodeSet* m : {&e.north[i], &e.south[i]}) {
        uint64_t lm = induced_link_mask(g, *m);
        if (seen.insert({m->words(), lm}).second) empires.push_back({*m, lm});
      }

    std::unordered_map<SubKey, bool, SubKeyHash> memo;
    auto sound = [&](const NodeSet& nodes, uint64_t lmask) {
      if (nodes.count() == n && lmask == all_links) return true; // g itself
      SubKey key{nodes.words(), lmask};
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      std::vector<Node> ns;
      for (int i : nodes.to_indices()) ns.push_back(g.node(i));
      std::vector<Link> ls;
      for (int j = 0; j < g.link_count(); ++j)
        if (lmask >> j & 1) ls.push_back(g.links()[j]);
      bool s = is_ngraph(ProofGraph(std::move(ns), std::move(ls))).sound;
      memo.emplace(std::move(key), s);
      return s;
    };

    for (size_t x = 0; x < empires.size() && ok; ++x)
      for (size_t y = x; y < empires.size() && ok; ++y) {
        const auto& [mx, lx] = empires[x];
        const auto& [my, ly] = empires[y];
        bool meet = mx.intersects(my);
        bool union_sound = sound(mx | my, lx | ly);
        ok = ok && union_sound == meet;
        if (meet) ok = ok && sound(mx & my, lx & ly);
      }
    if (!ok) return false;
  }
  return ok;
}

// --------------------------------------------------------- derivations

bool corpus_sequentializes(const std::vector<Entry>& corpus) {
  bool ok = true;
  for (const Entry& e : corpus) {
    try {
      LKDerivation d = sequentialize(e.g);
      ok = ok && lk_check(d).sound && sequent_equal(d.conclusion, e.g.end_sequent());
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) return false;
  }
  return ok;
}

std::string skeleton(const LKDerivation& d) {
  std::string out = to_string(d.rule);
  if (!d.premises.empty()) {
    out += "(";
    for (size_t i = 0; i < d.premises.size(); ++i) {
      if (i) out += ",";
      out += skeleton(d.premises[i]);
    }
    out += ")";
  }
  return out;
}

bool golden_skeletons() {
  return skeleton(sequentialize(fixtures::contraction_merge())) ==
             "RC(OrL(Axiom,Axiom))" &&
         skeleton(sequentialize(fixtures::discharge_case_split())) ==
             "ImpR(OrL(Axiom,Axiom))" &&
         skeleton(sequentialize(fixtures::contract_then_widen())) ==
             "Cut(RC(OrL(Axiom,Axiom)),OrR1(Axiom))";
}

// ------------------------------------------------------------- rejection

// Independent tree test: component count by depth-first search, cycle by
// comparing the edge count against nodes minus components.
std::optional<Defect> recount_defect(int n, const std::vector<SwitchEdge>& edges) {
  if (n == 0) return Defect::Disconnected;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.upper].push_back(e.lower);
    adj[e.lower].push_back(e.upper);
  }
  std::vector<char> seen(n, 0);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  if (static_cast<int>(edges.size()) > n - components) return Defect::Cyclic;
  if (components > 1) return Defect::Disconnected;
  return std::nullopt;
}

bool unsound_rejected(int want) {
  std::set<Defect> defects_seen;
  for (uint64_t seed = 1; seed <= static_cast<uint64_t>(want); ++seed) {
    GeneratorSpec spec = corpus_spec(seed);
    spec.max_links = 10;
    ProofGraph g = generate_unsound(spec);
    Verdict v = is_ngraph(g);
    if (v.sound || !v.witness || !v.defect) return false;
    // The reported witness must fail the independent tree test, with the
    // same defect class.
    auto again = recount_defect(g.node_count(), switching_graph(g, *v.witness));
    if (again != v.defect) return false;
    defects_seen.insert(*v.defect);
  }
  return defects_seen.size() == 2; // both failure modes exercised
}

} // namespace

int main() {
  auto t0 = Clock::now();
  report(fixtures_classify() && seconds_since(t0) < 1.0,
         "hand-built fixtures classify exactly, in under a second",
         seconds_since(t0));

  t0 = Clock::now();
  report(showcase_empires(),
         "empire membership around the showcase expansion is exact",
         seconds_since(t0));

  t0 = Clock::now();
  int max_switchables = 0;
  std::set<LinkKind> kinds_seen;
  std::vector<Entry> corpus = build_corpus(1000, 12, &max_switchables, &kinds_seen);
  std::printf("corpus: %zu sound graphs, up to %d switchable links, %zu link kinds\n",
              corpus.size(), max_switchables, kinds_seen.size());

  double build_time = seconds_since(t0);
  t0 = Clock::now();
  bool ok3 = closure_matches_oracle(corpus);
  double t3 = seconds_since(t0);
  report(ok3 && build_time + t3 <= 600.0,
         "closure empires match the all-switchings oracle across the corpus", t3);

  t0 = Clock::now();
  report(principal_cuts_and_border_spans(corpus),
         "principal switchings cut whole empires and border nodes own the graph",
         seconds_since(t0));

  t0 = Clock::now();
  report(nesting_laws(corpus),
         "empire nesting laws hold for every ordered node pair",
         seconds_since(t0));

  t0 = Clock::now();
  report(union_and_intersection_algebra(corpus),
         "empire unions are sound exactly when the empires intersect",
         seconds_since(t0));

  t0 = Clock::now();
  bool ok7 = corpus_sequentializes(corpus);
  double t7 = seconds_since(t0);
  report(ok7 && t7 <= 600.0,
         "the whole corpus sequentializes into checked derivations", t7);

  t0 = Clock::now();
  report(golden_skeletons(),
         "derivation skeletons of the teaching fixtures are stable",
         seconds_since(t0));

  t0 = Clock::now();
  report(unsound_rejected(500),
         "mutated graphs are rejected with independently confirmed witnesses",
         seconds_since(t0));

  report(kinds_seen.size() == 16 && max_switchables >= 6,
         "the sound corpus spans all link kinds and stacks six switchable links",
         build_time);

  return failures == 0 ? 0 : 1;
}
