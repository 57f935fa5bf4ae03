#include "antinef/json_io.hpp"

#include <json.hpp>

namespace antinef {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("ParseError", "input is not valid JSON");
  return j;
}

long as_long(const json& j, const char* what) {
  if (!j.is_number_integer())
    fail("ParseError", std::string(what) + " must be an integer");
  return j.get<long>();
}

Rat as_rat(const json& j, const char* what) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const std::exception&) {
      fail("ParseError", std::string(what) + ": bad rational literal");
    }
  }
  fail("ParseError", std::string(what) + " must be an integer or \"p/q\"");
}

json int_to_json(const Int& v) {
  if (!v.fits_slong_p())
    fail("Overflow", "integer too large for the JSON encoding");
  return json(v.get_si());
}

json cycle_coeffs(const Cycle& z) {
  json a = json::array();
  for (const auto& c : z.coeffs) a.push_back(int_to_json(c));
  return a;
}

json graph_value(const DualGraph& g) {
  json vertices = json::array();
  for (long s : g.self_ints()) vertices.push_back({{"self_int", s}});
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"vertices", vertices}, {"edges", edges}};
}

json ideal_value(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g);
  return {{"dim", ideal.dim()}, {"gens", gens}};
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

DualGraph graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("vertices"))
    fail("ParseError", "graph needs a \"vertices\" array");
  std::vector<long> self_ints;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("self_int"))
      fail("ParseError", "vertex needs \"self_int\"");
    if (v.contains("genus") && as_long(v["genus"], "genus") != 0)
      fail("MalformedGraph", "only genus-zero curves are supported");
    self_ints.push_back(as_long(v["self_int"], "self_int"));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2)
      fail("ParseError", "edge must be a pair");
    edges.emplace_back(static_cast<int>(as_long(e[0], "edge endpoint")),
                       static_cast<int>(as_long(e[1], "edge endpoint")));
  }
  return DualGraph::validate(std::move(self_ints), std::move(edges));
}

std::string graph_to_json(const DualGraph& g) { return dump(graph_value(g)); }

Cycle cycle_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail("ParseError", "cycle needs a \"coeffs\" array");
  Cycle z;
  for (const auto& c : j["coeffs"]) z.coeffs.emplace_back(as_long(c, "coeff"));
  return z;
}

std::string cycle_to_json(const Cycle& z) {
  return dump({{"coeffs", cycle_coeffs(z)}});
}

QCycle qcycle_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail("ParseError", "cycle needs a \"coeffs\" array");
  QCycle z;
  for (const auto& c : j["coeffs"]) z.coeffs.push_back(as_rat(c, "coeff"));
  return z;
}

std::string qcycle_to_json(const QCycle& z) {
  json a = json::array();
  for (const auto& c : z.coeffs) a.push_back(rat_to_string(c));
  return dump({{"coeffs", a}});
}

BlowUpSpec blowup_spec_from_json(const std::string& text) {
  json j = parse(text);
  if (j.is_object() && j.contains("free"))
    return BlowUpSpec::free_point(
        static_cast<int>(as_long(j["free"], "free curve")));
  if (j.is_object() && j.contains("satellite")) {
    const auto& e = j["satellite"];
    if (!e.is_array() || e.size() != 2)
      fail("ParseError", "\"satellite\" must be a vertex pair");
    return BlowUpSpec::satellite(static_cast<int>(as_long(e[0], "endpoint")),
                                 static_cast<int>(as_long(e[1], "endpoint")));
  }
  fail("ParseError", "spec must be {\"free\":i} or {\"satellite\":[i,j]}");
}

std::string blowup_spec_to_json(const BlowUpSpec& spec) {
  if (spec.kind == BlowUpSpec::Kind::Free)
    return dump({{"free", spec.curve}});
  return dump({{"satellite", {spec.edge.first, spec.edge.second}}});
}

MonomialIdeal monomial_ideal_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("gens"))
    fail("ParseError", "ideal needs \"dim\" and \"gens\"");
  const int dim = static_cast<int>(as_long(j["dim"], "dim"));
  std::vector<Exponent> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_array()) fail("ParseError", "generator must be an array");
    Exponent v;
    for (const auto& e : g)
      v.push_back(static_cast<int>(as_long(e, "exponent")));
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::make(dim, std::move(gens));
}

std::string monomial_ideal_to_json(const MonomialIdeal& ideal) {
  return dump(ideal_value(ideal));
}

namespace {

FieldSpec field_from_value(const json& j) {
  if (j.is_string() && j.get<std::string>() == "rational") return FieldSpec{0};
  if (j.is_object() && j.contains("fp"))
    return FieldSpec{as_long(j["fp"], "fp")};
  fail("ParseError", "field must be \"rational\" or {\"fp\":p}");
}

json field_value(const FieldSpec& field) {
  if (field.p == 0) return json("rational");
  return json{{"fp", field.p}};
}

}  // namespace

FiberConePresentation presentation_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("vars") || !j.contains("relations"))
    fail("ParseError", "presentation needs \"vars\" and \"relations\"");
  FieldSpec field =
      j.contains("field") ? field_from_value(j["field"]) : FieldSpec{0};
  std::vector<Relation> relations;
  for (const auto& rel : j["relations"]) {
    Relation relation;
    for (const auto& term : rel) {
      if (!term.is_array() || term.size() != 2 || !term[1].is_array())
        fail("ParseError", "term must be [coeff,[exponents]]");
      Term t;
      t.coeff = as_rat(term[0], "coefficient");
      for (const auto& e : term[1])
        t.exps.push_back(static_cast<int>(as_long(e, "exponent")));
      relation.push_back(std::move(t));
    }
    relations.push_back(std::move(relation));
  }
  return FiberConePresentation::make(
      static_cast<int>(as_long(j["vars"], "vars")), field,
      std::move(relations));
}

std::string presentation_to_json(const FiberConePresentation& pres) {
  json relations = json::array();
  for (const auto& rel : pres.relations()) {
    json terms = json::array();
    for (const auto& term : rel) {
      json coeff = term.coeff.get_den() == 1
                       ? int_to_json(term.coeff.get_num())
                       : json(rat_to_string(term.coeff));
      terms.push_back({coeff, term.exps});
    }
    relations.push_back(terms);
  }
  return dump({{"vars", pres.num_vars()},
               {"field", field_value(pres.field())},
               {"relations", relations}});
}

ProjectivePoint point_from_json(const std::string& text, FieldSpec field) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array())
    fail("ParseError", "point needs a \"coords\" array");
  std::vector<Rat> coords;
  for (const auto& c : j["coords"]) coords.push_back(as_rat(c, "coordinate"));
  return ProjectivePoint::make(std::move(coords), field);
}

namespace {

json point_value(const ProjectivePoint& point) {
  json coords = json::array();
  for (const auto& c : point.coords())
    coords.push_back(c.get_den() == 1 ? int_to_json(c.get_num())
                                      : json(rat_to_string(c)));
  return {{"coords", coords}};
}

}  // namespace

std::string point_to_json(const ProjectivePoint& point) {
  return dump(point_value(point));
}

Poly poly_from_json(const std::string& text, long p) {
  json j = parse(text);
  if (!j.is_array()) fail("ParseError", "polynomial must be a term list");
  Poly q;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_array() ||
        term[1].size() != 2)
      fail("ParseError", "term must be [coeff,[ex,ey]]");
    Exp2 e{static_cast<int>(as_long(term[1][0], "exponent")),
           static_cast<int>(as_long(term[1][1], "exponent"))};
    auto [it, inserted] = q.emplace(e, as_rat(term[0], "coefficient"));
    if (!inserted) it->second += as_rat(term[0], "coefficient");
  }
  return poly_normalize(std::move(q), p);
}

namespace {

json poly_value(const Poly& q) {
  json terms = json::array();
  for (const auto& [e, c] : q) {
    json coeff = c.get_den() == 1 ? int_to_json(c.get_num())
                                  : json(rat_to_string(c));
    terms.push_back({coeff, {e[0], e[1]}});
  }
  return terms;
}

}  // namespace

std::string poly_to_json(const Poly& q) { return dump(poly_value(q)); }

std::vector<Poly> poly_list_from_json(const std::string& text, long p) {
  json j = parse(text);
  if (!j.is_array()) fail("ParseError", "expected a list of polynomials");
  std::vector<Poly> polys;
  for (const auto& q : j) polys.push_back(poly_from_json(q.dump(), p));
  return polys;
}

std::string components_to_json(const ComponentSet& components) {
  json a = json::array();
  for (const auto& c : components) a.push_back(c);
  return dump({{"components", a}});
}

std::string adjacency_report_to_json(const AdjacencyReport& report) {
  json type1 = json::array();
  for (const auto& entry : report.type1)
    type1.push_back({{"component", entry.component},
                     {"y", cycle_coeffs(entry.y)},
                     {"new_cycle", cycle_coeffs(entry.new_cycle)}});
  json free = json::array();
  for (const auto& family : report.type2_free)
    free.push_back({{"curve", family.curve},
                    {"graph_after", graph_value(family.graph_after)},
                    {"cycle_after", cycle_coeffs(family.cycle_after)}});
  json satellite = json::array();
  for (const auto& point : report.type2_satellite)
    satellite.push_back(
        {{"edge", {point.edge.first, point.edge.second}},
         {"graph_after", graph_value(point.graph_after)},
         {"cycle_after", cycle_coeffs(point.cycle_after)}});
  return dump({{"type1", type1},
               {"type2_free", free},
               {"type2_satellite", satellite},
               {"counts",
                {{"type1", report.type1.size()},
                 {"free", report.type2_free.size()},
                 {"satellite", report.type2_satellite.size()}}}});
}

std::string graph_chain_to_json(const std::vector<ChainStep>& steps) {
  json a = json::array();
  for (const auto& step : steps)
    a.push_back({{"graph", graph_value(step.graph)},
                 {"cycle", cycle_coeffs(step.cycle)}});
  return dump({{"steps", a}});
}

std::string monomial_list_to_json(const std::vector<MonomialIdeal>& ideals) {
  json a = json::array();
  for (const auto& ideal : ideals) a.push_back(ideal_value(ideal));
  return dump({{"ideals", a}});
}

std::string enumeration_to_json(int colength, const ColengthEnumeration& e) {
  json witnesses = json::array();
  for (const auto& w : e.witnesses) witnesses.push_back(ideal_value(w));
  return dump({{"colength", colength},
               {"total", int_to_json(e.total)},
               {"ic", int_to_json(e.ic)},
               {"witnesses", witnesses}});
}

std::string points_to_json(const std::vector<ProjectivePoint>& points) {
  json a = json::array();
  for (const auto& point : points) a.push_back(point_value(point));
  return dump({{"points", a}});
}

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["field"] = field_value(FieldSpec{cert.p});
  j["bounds"] = {{"n_max", cert.bounds.n_max},
                 {"deg_max", cert.bounds.deg_max},
                 {"weight_bound", cert.bounds.weight_bound}};
  switch (cert.verdict) {
    case Certificate::Verdict::Integral: {
      j["verdict"] = "integral";
      j["degree"] = cert.degree;
      json coeffs = json::array();
      for (const auto& a : cert.coefficients) coeffs.push_back(poly_value(a));
      j["coefficients"] = coeffs;
      break;
    }
    case Certificate::Verdict::NotIntegral:
      j["verdict"] = "not_integral";
      j["weights"] = {cert.weights[0], cert.weights[1]};
      j["change"] = {{cert.change[0][0], cert.change[0][1]},
                     {cert.change[1][0], cert.change[1][1]}};
      break;
    case Certificate::Verdict::Unknown:
      j["verdict"] = "unknown";
      break;
  }
  return dump(j);
}

}  // namespace antinef
