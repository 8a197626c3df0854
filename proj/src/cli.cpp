#include "cover/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "cover/error.hpp"
#include "cover/family.hpp"
#include "cover/fixtures.hpp"
#include "cover/graph_action.hpp"
#include "cover/json_io.hpp"

namespace cover {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error::malformed("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error::malformed(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

GraphPtr resolve_graph(const std::string& spec) {
  if (auto g = fixture_graph(spec)) return std::make_shared<Graph>(std::move(*g));
  return std::make_shared<Graph>(graph_from_json(read_json_file(spec)));
}

PermGroup resolve_group(const std::string& spec) {
  if (auto g = fixture_group(spec)) return *g;
  return group_from_json(read_json_file(spec));
}

VoltageAssignment resolve_voltage(const std::string& spec, const GraphPtr& graph) {
  if (spec == "cdc" || spec == "all-ones") return VoltageAssignment::ones(graph);
  if (spec.starts_with("0x") || spec.starts_with("0X")) {
    uint64_t vec = std::stoull(spec.substr(2), nullptr, 16);
    SpanningData tree = spanning_data(*graph, 0);
    if (tree.betti() < 64 && vec >> tree.betti()) {
      throw Error::malformed("class vector has bits beyond the cycle space");
    }
    return VoltageAssignment::from_class_vector(graph, tree, vec);
  }
  VoltageAssignment zeta = voltage_from_json(read_json_file(spec));
  if (zeta.graph().edges() != graph->edges() ||
      zeta.graph().vertex_count() != graph->vertex_count()) {
    throw Error::malformed("voltage file does not match the selected graph");
  }
  return VoltageAssignment::from_bits(graph, zeta.bits());
}

std::string hex64(uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct ReportSink {
  std::string command;
  std::string digest_material;
  Json budget_flags = Json::object();
  std::string json_out;
  bool timing = false;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void add_input(const Json& j) { digest_material += j.dump(); }
  void add_input(const std::string& s) { digest_material += s; }

  void emit(const Json& results, std::ostream& out) const {
    std::ostringstream digest;
    digest << "0x" << std::hex << fnv1a(digest_material);
    Json report{{"command", command},
                {"inputs_digest", digest.str()},
                {"results", results},
                {"budget_flags", budget_flags}};
    if (timing) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    std::string text = report.dump(2);
    if (!json_out.empty()) {
      std::ofstream f(json_out);
      if (!f) throw Error::malformed("cannot write " + json_out);
      f << text << "\n";
    }
    out << text << "\n";
  }
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "covertool";
  for (const auto& a : args) {
    s += ' ';
    s += a;
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"analysis of 2-fold covers of connected simple graphs"};
  app.require_subcommand(1);

  std::string graph_spec, voltage_spec, group_spec, stabilizer_spec, edge_elem;
  std::string json_out, dot_out;
  uint32_t family_k = 0;
  uint32_t depth = 2;
  uint64_t budget_vertices = 5000;
  bool verify = false, materialize = false, nonsplit = false, timing = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--json-out", json_out, "also write the report to this path");
    cmd->add_flag("--timing", timing, "include wall-clock timing in the report");
  };

  CLI::App* classify = app.add_subcommand("classify", "split type of one cover");
  classify->add_option("--graph", graph_spec)->required();
  classify->add_option("--voltage", voltage_spec)->required();
  classify->add_option("--group", group_spec)->required();
  add_common(classify);

  CLI::App* cdc_test = app.add_subcommand("cdc-test", "parity-class test of one assignment");
  cdc_test->add_option("--graph", graph_spec)->required();
  cdc_test->add_option("--voltage", voltage_spec)->required();
  add_common(cdc_test);

  CLI::App* lift_check = app.add_subcommand("lift-check", "does the group lift along the cover");
  lift_check->add_option("--graph", graph_spec)->required();
  lift_check->add_option("--voltage", voltage_spec)->required();
  lift_check->add_option("--group", group_spec)->required();
  add_common(lift_check);

  CLI::App* classes = app.add_subcommand("classes", "invariant cover classes of a group");
  classes->add_option("--graph", graph_spec)->required();
  classes->add_option("--group", group_spec)->required();
  add_common(classes);

  CLI::App* coset = app.add_subcommand("coset-graph", "materialize a coset graph");
  coset->add_option("--group", group_spec)->required();
  coset->add_option("--stabilizer", stabilizer_spec)->required();
  coset->add_option("--b", edge_elem)->required();
  coset->add_option("--budget-vertices", budget_vertices);
  add_common(coset);

  CLI::App* family = app.add_subcommand("family", "split-transitive cover family");
  family->add_option("--k", family_k)->required();
  family->add_flag("--verify", verify);
  family->add_flag("--materialize", materialize);
  family->add_option("--budget-vertices", budget_vertices);
  add_common(family);

  CLI::App* chain = app.add_subcommand("chain", "explore chains of consecutive 2-covers");
  chain->add_option("--graph", graph_spec)->required();
  chain->add_option("--group", group_spec)->required();
  chain->add_option("--depth", depth);
  chain->add_option("--budget-vertices", budget_vertices);
  chain->add_flag("--nonsplit", nonsplit, "probe runs of consecutive non-split covers");
  chain->add_option("--dot", dot_out, "write a DOT rendering of the chain diagram");
  add_common(chain);

  CLI::App* quotient = app.add_subcommand("quotient", "quotient by a semiregular involution");
  quotient->add_option("--graph", graph_spec)->required();
  quotient->add_option("--group", group_spec,
                       "group file generated by the quotienting involution")->required();
  add_common(quotient);

  CLI::App* sreg = app.add_subcommand("sreg", "regularity level of a group action");
  sreg->add_option("--graph", graph_spec)->required();
  sreg->add_option("--group", group_spec)->required();
  add_common(sreg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "argument error: " << e.what() << "\n";
    return 2;
  }

  ReportSink sink;
  sink.command = join_args(args);
  sink.json_out = json_out;
  sink.timing = timing;

  try {
    Json results;
    if (classify->parsed() || cdc_test->parsed() || lift_check->parsed()) {
      GraphPtr g = resolve_graph(graph_spec);
      VoltageAssignment zeta = resolve_voltage(voltage_spec, g);
      sink.add_input(graph_to_json(*g));
      sink.add_input(voltage_to_json(zeta));
      if (cdc_test->parsed()) {
        results = Json{{"cdc", is_canonical_double_cover(zeta)}};
      } else {
        PermGroup group = resolve_group(group_spec);
        sink.add_input(group_to_json(group));
        if (lift_check->parsed()) {
          results = Json{{"lifts", lifts_group(zeta, group)}};
        } else {
          Cover cover = derived_cover(g, zeta);
          results = split_report_to_json(classify_split(cover, group));
        }
      }
    } else if (classes->parsed()) {
      GraphPtr g = resolve_graph(graph_spec);
      PermGroup group = resolve_group(group_spec);
      sink.add_input(graph_to_json(*g));
      sink.add_input(group_to_json(group));
      ClassBasis cb = admissible_classes(g, group);
      Json basis = Json::array(), span = Json::array();
      for (uint64_t v : cb.basis) basis.push_back(hex64(v));
      for (uint64_t v : cb.span_nonzero(4096)) span.push_back(hex64(v));
      results = Json{{"betti", cb.betti},
                     {"dimension", cb.basis.size()},
                     {"basis", basis},
                     {"classes", span},
                     {"cdc_class", hex64(cdc_class_vector(*g, cb.tree))}};
    } else if (coset->parsed()) {
      PermGroup group = resolve_group(group_spec);
      PermGroup stab_gens = resolve_group(stabilizer_spec);
      if (stab_gens.degree() != group.degree()) {
        throw Error::malformed("stabilizer degree does not match the group");
      }
      Perm b = Perm::from_cycles(group.degree(), edge_elem);
      sink.add_input(group_to_json(group));
      sink.add_input(group_to_json(stab_gens));
      sink.add_input(edge_elem);
      Subgroup h = make_subgroup(group, stab_gens.generators());
      CosetGraphResult res = coset_graph(group, h, b, budget_vertices);
      results = Json{{"graph", graph_to_json(res.graph)},
                     {"valency", res.valency},
                     {"connected", res.connected}};
    } else if (family->parsed()) {
      sink.add_input(std::to_string(family_k));
      results = Json::object();
      if (verify || !materialize) {
        FamilyVerification v = family_verify(family_k);
        results["verify"] = Json{{"order", v.order.str()},
                                 {"expected_order", v.expected_order.str()},
                                 {"order_ok", v.order_ok},
                                 {"conditions_ok", v.conditions.ok},
                                 {"cycle_ok", v.cycle_ok},
                                 {"stabilizer_intersection_ok", v.h_intersection_ok},
                                 {"a_even", v.a_even},
                                 {"b_even", v.b_even},
                                 {"r_even", v.r_even},
                                 {"pass", v.pass}};
      }
      if (materialize) {
        FamilyMaterialization m = family_materialize(family_k, budget_vertices);
        Json mat{{"cover_vertices", m.cover.graph.vertex_count()},
                 {"cover_connected", m.cover.connected},
                 {"cover_valency", m.cover.valency},
                 {"cover_arcs", m.cover_arcs},
                 {"cover_arc_regular", m.cover_arc_transitive},
                 {"group_has_no_index2", m.group_has_no_index2},
                 {"base_constructible", m.base_constructible},
                 {"stabilizer_candidates_searched", m.stabilizer_candidates_searched}};
        if (m.base) {
          mat["base_vertices"] = m.base->graph.vertex_count();
          mat["base_connected"] = m.base->connected;
          mat["base_valency"] = m.base->valency;
          mat["base_two_arcs"] = m.base_two_arcs;
          mat["base_two_arc_regular"] = m.base_two_arc_transitive;
        }
        results["materialize"] = mat;
      }
    } else if (chain->parsed()) {
      GraphPtr g = resolve_graph(graph_spec);
      PermGroup group = resolve_group(group_spec);
      sink.add_input(graph_to_json(*g));
      sink.add_input(group_to_json(group));
      sink.add_input(std::to_string(depth));
      ChainBudgets budgets;
      budgets.max_depth = depth;
      budgets.vertex_budget = static_cast<uint32_t>(budget_vertices);
      ChainSummary summary = explore(g, group, budgets);
      results = chain_summary_to_json(summary);
      sink.budget_flags["partial"] = !summary.exhaustive;
      if (nonsplit) {
        NonsplitProbe probe = nonsplit_probe(g, group, budgets);
        Json path = Json::array();
        for (uint32_t id : probe.path) {
          path.push_back(Json{{"vertices", summary.nodes[id].graph->vertex_count()},
                              {"depth", summary.nodes[id].depth}});
        }
        results["nonsplit_probe"] =
            Json{{"longest_run", probe.longest_run}, {"path", path}};
      }
      if (!dot_out.empty()) {
        std::ofstream f(dot_out);
        if (!f) throw Error::malformed("cannot write " + dot_out);
        f << chain_summary_to_dot(summary);
      }
    } else if (quotient->parsed()) {
      GraphPtr g = resolve_graph(graph_spec);
      PermGroup group = resolve_group(group_spec);
      sink.add_input(graph_to_json(*g));
      sink.add_input(group_to_json(group));
      if (group.generators().size() != 1) {
        throw Error::malformed("quotient expects a group file with exactly one generator");
      }
      Quotient q = quotient_by_involution(*g, group.generators()[0]);
      results = Json{{"graph", graph_to_json(*q.graph)}, {"voltage", voltage_to_json(q.zeta)}};
    } else if (sreg->parsed()) {
      GraphPtr g = resolve_graph(graph_spec);
      PermGroup group = resolve_group(group_spec);
      sink.add_input(graph_to_json(*g));
      sink.add_input(group_to_json(group));
      RegularityResult r = regularity_degree(make_action(g, group));
      results = Json{{"verified", r.verified}};
      if (r.s) {
        results["s"] = *r.s;
      } else {
        results["s"] = nullptr;
      }
    }
    sink.emit(results, out);
    return 0;
  } catch (const Error& e) {
    Json error{{"error",
                Json{{"kind", e.kind() == ErrorKind::MalformedInput ? "malformed-input"
                              : e.kind() == ErrorKind::Resource     ? "resource"
                                                                    : "domain"},
                     {"message", e.what()}}}};
    out << error.dump(2) << "\n";
    return e.kind() == ErrorKind::MalformedInput ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cover
