#pragma once

// JSON wire formats. Parsers accept a superset (integers or "p/q" strings
// for rationals); emitters are deterministic, so equal values always
// serialize to equal bytes.
//
//   graph         {"vertices":[{"self_int":-2},...],"edges":[[0,1],...]}
//   cycle         {"coeffs":[1,1,1]}
//   qcycle        {"coeffs":["-1/3","0"]}
//   blow-up spec  {"free":0} | {"satellite":[0,1]}
//   ideal         {"dim":2,"gens":[[3,0],[0,2]]}
//   presentation  {"vars":3,"field":{"fp":3}|"rational","relations":[[[1,[1,1,0]]]]}
//   point         {"coords":[1,0,0]}
//   polynomial    [[1,[2,1]],[-1,[0,3]]]

#include <string>
#include <vector>

#include "antinef/adjacency.hpp"
#include "antinef/blowup.hpp"
#include "antinef/fiber_cone.hpp"
#include "antinef/graph.hpp"
#include "antinef/monomial.hpp"
#include "antinef/oracle.hpp"

namespace antinef {

DualGraph graph_from_json(const std::string& text);
std::string graph_to_json(const DualGraph& g);

Cycle cycle_from_json(const std::string& text);
std::string cycle_to_json(const Cycle& z);

QCycle qcycle_from_json(const std::string& text);
std::string qcycle_to_json(const QCycle& z);

BlowUpSpec blowup_spec_from_json(const std::string& text);
std::string blowup_spec_to_json(const BlowUpSpec& spec);

MonomialIdeal monomial_ideal_from_json(const std::string& text);
std::string monomial_ideal_to_json(const MonomialIdeal& ideal);

FiberConePresentation presentation_from_json(const std::string& text);
std::string presentation_to_json(const FiberConePresentation& pres);

ProjectivePoint point_from_json(const std::string& text, FieldSpec field);
std::string point_to_json(const ProjectivePoint& point);

Poly poly_from_json(const std::string& text, long p = 0);
std::string poly_to_json(const Poly& q);
std::vector<Poly> poly_list_from_json(const std::string& text, long p = 0);

std::string components_to_json(const ComponentSet& components);
std::string adjacency_report_to_json(const AdjacencyReport& report);
std::string graph_chain_to_json(const std::vector<ChainStep>& steps);
std::string monomial_list_to_json(const std::vector<MonomialIdeal>& ideals);
std::string enumeration_to_json(int colength, const ColengthEnumeration& e);
std::string points_to_json(const std::vector<ProjectivePoint>& points);
std::string certificate_to_json(const Certificate& cert);

}  // namespace antinef
