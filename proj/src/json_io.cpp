#include "cover/json_io.hpp"

#include <sstream>

#include "cover/error.hpp"
#include "cover/fixtures.hpp"

namespace cover {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw Error::malformed("graph JSON needs fields n and edges");
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error::malformed("edge must be a pair");
    edges.emplace_back(e[0].get<uint32_t>(), e[1].get<uint32_t>());
  }
  return Graph::from_edges(j.at("n").get<uint32_t>(), std::move(edges));
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& s : g.generators()) gens.push_back(s.to_cycle_string());
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators")) {
    throw Error::malformed("group JSON needs fields degree and generators");
  }
  uint32_t degree = j.at("degree").get<uint32_t>();
  std::vector<Perm> gens;
  for (const auto& s : j.at("generators")) {
    gens.push_back(Perm::from_cycles(degree, s.get<std::string>()));
  }
  return PermGroup::generated(degree, std::move(gens));
}

Json voltage_to_json(const VoltageAssignment& zeta) {
  Json entries = Json::array();
  const Graph& g = zeta.graph();
  for (uint32_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    entries.push_back({u, v, zeta.edge_bit(e)});
  }
  return Json{{"graph", graph_to_json(g)}, {"voltages", entries}};
}

VoltageAssignment voltage_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("voltages")) {
    throw Error::malformed("voltage JSON needs fields graph and voltages");
  }
  auto graph = std::make_shared<Graph>(graph_from_json(j.at("graph")));
  std::vector<int> seen(graph->edge_count(), 0);
  std::vector<uint8_t> bits(graph->edge_count(), 0);
  for (const auto& entry : j.at("voltages")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw Error::malformed("voltage entry must be [u, v, bit]");
    }
    auto e = graph->edge_id(entry[0].get<uint32_t>(), entry[1].get<uint32_t>());
    if (!e) throw Error::malformed("voltage entry names a missing edge");
    if (seen[*e]++) throw Error::malformed("voltage entry repeats an edge");
    bits[*e] = entry[2].get<uint8_t>();
  }
  for (int s : seen) {
    if (!s) throw Error::malformed("voltage assignment must cover every edge exactly once");
  }
  return VoltageAssignment::from_bits(graph, std::move(bits));
}

Json split_report_to_json(const SplitReport& report) {
  Json complements = Json::array();
  for (const ComplementInfo& c : report.complements) {
    Json gens = Json::array();
    for (const Perm& s : c.gens) gens.push_back(s.to_cycle_string());
    Json orbit_sizes = Json::array();
    for (const auto& orbit : c.orbits) orbit_sizes.push_back(orbit.size());
    complements.push_back(Json{{"generators", gens},
                               {"transitive", c.transitive},
                               {"orbit_sizes", orbit_sizes}});
  }
  return Json{{"kind", to_string(report.kind)}, {"complements", complements}};
}

namespace {

std::string hex_class(uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

std::string merged_label(const MergedNode& m, const std::string& census) {
  std::ostringstream out;
  if (!census.empty()) {
    out << census;
  } else {
    out << "n" << m.vertex_count;
  }
  return out.str();
}

}  // namespace

Json chain_summary_to_json(const ChainSummary& summary) {
  Json nodes = Json::array();
  std::vector<std::string> labels;
  for (const MergedNode& m : summary.merged) {
    const ChainNode& witness = summary.nodes[m.members.front()];
    std::string census = census_name(*witness.graph);
    labels.push_back(merged_label(m, census));
    Json node{{"id", m.id},
              {"depth", m.depth},
              {"order", m.vertex_count},
              {"group_order", m.group_order.str()},
              {"bipartite", m.bipartite},
              {"identification", census},
              {"members", m.members.size()}};
    if (m.girth) node["girth"] = *m.girth;
    nodes.push_back(std::move(node));
  }
  Json edges = Json::array();
  for (const MergedEdge& e : summary.merged_edges) {
    edges.push_back(Json{{"from", e.from},
                         {"to", e.to},
                         {"kind", to_string(e.kind)},
                         {"cdc", e.cdc_edge},
                         {"class", hex_class(e.class_vector)},
                         {"multiplicity", e.multiplicity}});
  }
  return Json{{"nodes", nodes},
              {"edges", edges},
              {"length", summary.length},
              {"split_length", summary.split_length},
              {"sectional_length", summary.sectional_length},
              {"transitive_length", summary.transitive_length},
              {"exhaustive", summary.exhaustive}};
}

std::string chain_summary_to_dot(const ChainSummary& summary) {
  std::ostringstream out;
  out << "digraph chain {\n  rankdir=BT;\n";
  for (const MergedNode& m : summary.merged) {
    const ChainNode& witness = summary.nodes[m.members.front()];
    std::string census = census_name(*witness.graph);
    out << "  n" << m.id << " [label=\"" << merged_label(m, census) << "\\norder "
        << m.vertex_count << "\"];\n";
  }
  for (const MergedEdge& e : summary.merged_edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << to_string(e.kind);
    if (e.cdc_edge) out << " (CDC)";
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cover
