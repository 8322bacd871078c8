#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ngraph/proof_graph.hpp"

namespace ngraph {

// Choice for one switchable link. Contraction: which premise edge is kept
// (Left = premises[0]). Expansion: which conclusion edge (Left =
// conclusions[0]). ImpI: Left keeps the solid premise->main edge (Direct),
// Right replaces it by the virtual hypothesis->main edge.
enum class SwitchChoice { Left, Right };

// Total assignment: one choice per switchable link, keyed by link index,
// ascending.
struct MetaSwitching {
  std::vector<std::pair<int, SwitchChoice>> choices;

  SwitchChoice choice_for(int link) const {
    for (const auto& [l, c] : choices)
      if (l == link) return c;
    return SwitchChoice::Left;
  }
};

// One kept edge of a switching graph, oriented premise side -> conclusion
// side. A virtual edge runs hypothesis -> main conclusion; the main
// conclusion counts as the edge's conclusion end.
struct SwitchEdge {
  int upper;
  int lower;
  bool is_virtual;
};

// Indices of Contraction/Expansion/ImpI links, ascending.
std::vector<int> switchable_links(const ProofGraph& g);

struct ResourceLimit {
  int max_switchables = 20;
};

// All 2^k assignments for the k switchable links, in mask order: bit j of the
// counter is the choice of the j-th switchable link, 0 = Left. Lazy; throws
// ResourceLimitError if k exceeds the bound.
class MetaSwitchingRange {
public:
  explicit MetaSwitchingRange(const ProofGraph& g, ResourceLimit limit = {});

  uint64_t size() const { return uint64_t(1) << switchable_.size(); }
  MetaSwitching at(uint64_t mask) const;

  class iterator {
  public:
    iterator(const MetaSwitchingRange* r, uint64_t mask) : range_(r), mask_(mask) {}
    MetaSwitching operator*() const { return range_->at(mask_); }
    iterator& operator++() { ++mask_; return *this; }
    bool operator!=(const iterator& o) const { return mask_ != o.mask_; }

  private:
    const MetaSwitchingRange* range_;
    uint64_t mask_;
  };
  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

private:
  std::vector<int> switchable_;
};

// Kept edges of the switching graph for s. Vertex set = all nodes of g.
std::vector<SwitchEdge> switching_graph(const ProofGraph& g, const MetaSwitching& s);

enum class Defect { Cyclic, Disconnected };

// Union-find tree test on the undirected carrier: nullopt iff the edges form
// a spanning tree of the node_count vertices. Cyclic wins over Disconnected
// when both are present.
std::optional<Defect> switching_defect(int node_count, const std::vector<SwitchEdge>& edges);

struct Verdict {
  bool sound = false;
  std::optional<MetaSwitching> witness; // first failing switching in mask order
  std::optional<Defect> defect;
};

// The soundness criterion: sound iff every meta-switching graph is a tree.
// Deterministic: the witness is the first counterexample in mask order.
Verdict is_ngraph(const ProofGraph& g, const ResourceLimit& limit = {});

} // namespace ngraph
