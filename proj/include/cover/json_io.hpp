#pragma once

#include <json.hpp>

#include "cover/chains.hpp"
#include "cover/graph.hpp"
#include "cover/lifting.hpp"
#include "cover/perm_group.hpp"
#include "cover/voltage.hpp"

namespace cover {

using Json = nlohmann::json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

Json voltage_to_json(const VoltageAssignment& zeta);
VoltageAssignment voltage_from_json(const Json& j);

Json split_report_to_json(const SplitReport& report);

Json chain_summary_to_json(const ChainSummary& summary);
std::string chain_summary_to_dot(const ChainSummary& summary);

}  // namespace cover
