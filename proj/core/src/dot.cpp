#include "antinef/dot.hpp"

#include <sstream>

namespace antinef {

std::string graph_to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph dual_graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"v" << v << " (" << g.self_int(v) << ")\"];\n";
  for (auto [a, b] : g.edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string fan_to_dot(const DualGraph& g, const Cycle& z,
                       const AdjacencyReport& report) {
  std::ostringstream os;
  os << "digraph adjacency_fan {\n";
  os << "  root [label=\"colength " << colength(g, z).get_str() << "\"];\n";
  int id = 0;
  auto leaf = [&](const std::string& label) {
    os << "  n" << id << " [label=\"" << label << "\"];\n";
    os << "  root -> n" << id << ";\n";
    ++id;
  };
  for (const auto& entry : report.type1) {
    std::ostringstream label;
    label << "type1 {";
    for (std::size_t i = 0; i < entry.component.size(); ++i)
      label << (i ? "," : "") << entry.component[i];
    label << "} colength " << colength(g, entry.new_cycle).get_str();
    leaf(label.str());
  }
  for (const auto& family : report.type2_free) {
    std::ostringstream label;
    label << "free v" << family.curve << " colength "
          << colength(family.graph_after, family.cycle_after).get_str();
    leaf(label.str());
  }
  for (const auto& point : report.type2_satellite) {
    std::ostringstream label;
    label << "satellite {" << point.edge.first << "," << point.edge.second
          << "} colength "
          << colength(point.graph_after, point.cycle_after).get_str();
    leaf(label.str());
  }
  os << "}\n";
  return os.str();
}

std::string graph_chain_to_dot(const DualGraph& g, const Cycle& start,
                               const std::vector<ChainStep>& steps) {
  std::ostringstream os;
  os << "digraph chain {\n";
  os << "  c0 [label=\"colength " << colength(g, start).get_str() << "\"];\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    os << "  c" << i + 1 << " [label=\"colength "
       << colength(steps[i].graph, steps[i].cycle).get_str() << "\"];\n";
    os << "  c" << i << " -> c" << i + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string monomial_chain_to_dot(const MonomialIdeal& start,
                                  const std::vector<MonomialIdeal>& steps) {
  std::ostringstream os;
  os << "digraph chain {\n";
  os << "  c0 [label=\"colength " << colength(start).get_str() << "\"];\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    os << "  c" << i + 1 << " [label=\"colength "
       << colength(steps[i]).get_str() << "\"];\n";
    os << "  c" << i << " -> c" << i + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace antinef
