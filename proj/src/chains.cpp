#include "cover/chains.hpp"

#include <algorithm>

#include "cover/error.hpp"
#include "cover/graph_action.hpp"

namespace cover {

namespace {

struct Expansion {
  Cover cover;
  LiftedGroup lifted;
  SplitKind kind;
  uint64_t class_vector;
  bool cdc_edge;
};

std::vector<Expansion> expand_node(const GraphPtr& graph, const PermGroup& group,
                                   const ChainBudgets& budgets, bool* truncated) {
  std::vector<Expansion> result;
  ClassBasis cb = admissible_classes(graph, group);
  std::vector<uint64_t> classes = cb.span_nonzero(budgets.class_budget + 1);
  if (classes.size() > budgets.class_budget) {
    classes.resize(budgets.class_budget);
    *truncated = true;
  }
  uint64_t cdc = cdc_class_vector(*graph, cb.tree);
  for (uint64_t vec : classes) {
    if (2 * graph->vertex_count() > budgets.vertex_budget) {
      *truncated = true;
      break;
    }
    auto zeta = VoltageAssignment::from_class_vector(graph, cb.tree, vec);
    Cover cover = derived_cover(graph, zeta);
    SplitReport report = classify_split(cover, group);
    LiftedGroup lifted = lifted_group(cover, group);
    result.push_back(Expansion{std::move(cover), std::move(lifted), report.kind, vec,
                               vec == cdc && cdc != 0});
  }
  return result;
}

void merge_summary(ChainSummary& summary) {
  // Group concrete nodes by isomorphism (screened by cheap invariants).
  for (ChainNode& node : summary.nodes) {
    bool placed = false;
    for (MergedNode& m : summary.merged) {
      if (m.depth != node.depth || m.vertex_count != node.graph->vertex_count() ||
          m.group_order != node.group.order()) {
        continue;
      }
      const ChainNode& witness = summary.nodes[m.members.front()];
      if (isomorphic(*witness.graph, *node.graph)) {
        node.merged_id = m.id;
        m.members.push_back(node.id);
        placed = true;
        break;
      }
    }
    if (!placed) {
      MergedNode m;
      m.id = static_cast<uint32_t>(summary.merged.size());
      m.depth = node.depth;
      m.vertex_count = node.graph->vertex_count();
      m.girth = node.graph->girth();
      m.bipartite = node.graph->bipartition().has_value();
      m.group_order = node.group.order();
      m.members = {node.id};
      node.merged_id = m.id;
      summary.merged.push_back(std::move(m));
    }
  }
  for (const ChainNode& node : summary.nodes) {
    if (node.parent < 0) continue;
    uint32_t from = summary.nodes[node.parent].merged_id;
    uint32_t to = node.merged_id;
    bool found = false;
    for (MergedEdge& e : summary.merged_edges) {
      if (e.from == from && e.to == to && e.kind == node.kind && e.cdc_edge == node.cdc_edge) {
        ++e.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) {
      summary.merged_edges.push_back(
          MergedEdge{from, to, node.kind, node.cdc_edge, 1, node.class_vector});
    }
  }
}

void compute_lengths(ChainSummary& summary) {
  // Longest root paths under edge predicates, over the concrete tree.
  auto longest = [&](auto&& keep) {
    uint32_t best = 0;
    std::vector<uint32_t> depth_ok(summary.nodes.size(), 0);
    for (const ChainNode& node : summary.nodes) {
      if (node.parent < 0) {
        depth_ok[node.id] = 1;
        continue;
      }
      if (depth_ok[node.parent] && keep(node)) {
        depth_ok[node.id] = 1;
        best = std::max(best, node.depth);
      }
    }
    return best;
  };
  summary.length = 0;
  for (const ChainNode& node : summary.nodes) summary.length = std::max(summary.length, node.depth);
  summary.split_length = longest([](const ChainNode& n) { return n.kind != SplitKind::NonSplit; });
  summary.sectional_length =
      longest([](const ChainNode& n) { return n.kind == SplitKind::SplitSectional; });
  summary.transitive_length =
      longest([](const ChainNode& n) { return n.kind == SplitKind::SplitTransitive; });
}

}  // namespace

ChainSummary explore(GraphPtr base, const PermGroup& group, ChainBudgets budgets) {
  if (!base->is_connected()) throw Error::domain("chain exploration needs a connected base");
  if (!group.is_transitive()) {
    throw Error::domain("chain exploration needs a vertex-transitive group");
  }
  ChainSummary summary;
  ChainNode root;
  root.id = 0;
  root.depth = 0;
  root.graph = base;
  root.group = group;
  summary.nodes.push_back(std::move(root));

  for (size_t at = 0; at < summary.nodes.size(); ++at) {
    if (summary.nodes[at].depth >= budgets.max_depth) continue;
    bool truncated = false;
    GraphPtr graph = summary.nodes[at].graph;
    PermGroup node_group = summary.nodes[at].group;
    uint32_t depth = summary.nodes[at].depth;
    for (Expansion& ex : expand_node(graph, node_group, budgets, &truncated)) {
      ChainNode child;
      child.id = static_cast<uint32_t>(summary.nodes.size());
      child.depth = depth + 1;
      child.parent = static_cast<int64_t>(at);
      child.class_vector = ex.class_vector;
      child.cdc_edge = ex.cdc_edge;
      child.kind = ex.kind;
      child.graph = ex.cover.derived;
      child.group = ex.lifted.group;
      summary.nodes.push_back(std::move(child));
    }
    if (truncated) summary.exhaustive = false;
  }
  merge_summary(summary);
  compute_lengths(summary);
  return summary;
}

uint32_t split_length(GraphPtr base, const PermGroup& group, ChainBudgets budgets) {
  return explore(std::move(base), group, budgets).split_length;
}

bool check_split_chain_bound(const ChainSummary& summary) {
  // Count split edges along each root path; a node's path data is its
  // parent's plus its own edge.
  struct PathInfo {
    uint32_t splits = 0;
    bool transitive_seen = false;
    bool sectional_seen = false;
  };
  std::vector<PathInfo> info(summary.nodes.size());
  for (const ChainNode& node : summary.nodes) {
    if (node.parent < 0) continue;
    PathInfo p = info[node.parent];
    if (node.kind != SplitKind::NonSplit) {
      ++p.splits;
      if (node.kind == SplitKind::SplitTransitive) p.transitive_seen = true;
      if (node.kind == SplitKind::SplitSectional || node.kind == SplitKind::SplitMixed) {
        p.sectional_seen = true;
      }
    }
    if (p.splits > 2) return false;
    if (p.splits == 2 && !(p.transitive_seen && p.sectional_seen)) return false;
    info[node.id] = p;
  }
  return true;
}

NonsplitProbe nonsplit_probe(GraphPtr base, const PermGroup& group, ChainBudgets budgets) {
  ChainSummary summary = explore(std::move(base), group, budgets);
  NonsplitProbe probe;
  probe.exhaustive = summary.exhaustive;
  std::vector<uint32_t> run(summary.nodes.size(), 0);
  int64_t best_node = -1;
  for (const ChainNode& node : summary.nodes) {
    if (node.parent < 0) continue;
    bool parent_ok = node.parent == 0 || run[node.parent] > 0;
    if (parent_ok && node.kind == SplitKind::NonSplit) {
      run[node.id] = node.depth;
      if (node.depth > probe.longest_run) {
        probe.longest_run = node.depth;
        best_node = node.id;
      }
    }
  }
  for (int64_t v = best_node; v >= 0; v = summary.nodes[v].parent) {
    probe.path.push_back(static_cast<uint32_t>(v));
  }
  std::reverse(probe.path.begin(), probe.path.end());
  return probe;
}

RearrangeResult rearrange_chain(GraphPtr base, const PermGroup& group, uint64_t first_class,
                                uint64_t second_class) {
  SpanningData tree0 = spanning_data(*base, 0);
  auto zeta1 = VoltageAssignment::from_class_vector(base, tree0, first_class);
  Cover cover1 = derived_cover(base, zeta1);
  LiftedGroup lift1 = lifted_group(cover1, group);

  SpanningData tree1 = spanning_data(*cover1.derived, 0);
  auto zeta2 = VoltageAssignment::from_class_vector(cover1.derived, tree1, second_class);
  Cover cover2 = derived_cover(cover1.derived, zeta2);
  SplitReport upper = classify_split(cover2, lift1.group);
  if (upper.kind != SplitKind::SplitTransitive && upper.kind != SplitKind::SplitSectional) {
    throw Error::domain("rearrangement needs a purely transitive or sectional upper step");
  }
  LiftedGroup lift2 = lifted_group(cover2, lift1.group);

  // The complement's preimage of the lower deck transformation.
  const ComplementInfo& complement = upper.complements.front();
  PermGroup complement_group =
      PermGroup::generated(cover2.derived->vertex_count(), complement.gens);
  Perm lifted_deck1 = lift_automorphism(cover2, cover1.deck);
  if (!complement_group.contains(lifted_deck1)) lifted_deck1 = lifted_deck1 * cover2.deck;
  if (!complement_group.contains(lifted_deck1)) {
    throw Error::domain("no lift of the lower deck lies in the complement");
  }
  if (!(lifted_deck1 * lifted_deck1).is_identity()) {
    throw Error::domain("the complement's deck preimage is not an involution");
  }

  Quotient q2 = quotient_by_involution(*cover2.derived, lifted_deck1);
  RearrangeResult result{q2.graph, upper.kind, SplitKind::NonSplit, false, false};
  result.middle_iso_original = isomorphic(*q2.graph, *cover1.derived);

  // Project the top group and the top deck to the alternate middle graph.
  std::vector<Perm> middle_gens;
  for (const Perm& s : lift2.group.generators()) middle_gens.push_back(induced_on_quotient(q2, s));
  Perm middle_deck = induced_on_quotient(q2, cover2.deck);
  PermGroup middle_group = PermGroup::generated(q2.graph->vertex_count(), middle_gens);

  Quotient q1 = quotient_by_involution(*q2.graph, middle_deck);
  result.base_recovered = isomorphic(*q1.graph, *base);

  std::vector<Perm> base_gens;
  for (const Perm& s : middle_group.generators()) base_gens.push_back(induced_on_quotient(q1, s));
  PermGroup projected_base = PermGroup::generated(q1.graph->vertex_count(), base_gens);
  if (projected_base.order() != group.order()) {
    throw Error::domain("projected base group has the wrong order");
  }
  Cover rebuilt = derived_cover(q1.graph, q1.zeta);
  result.new_first_kind = classify_split(rebuilt, projected_base).kind;
  return result;
}

}  // namespace cover
