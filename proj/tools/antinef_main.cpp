#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "antinef/adjacency.hpp"
#include "antinef/blowup.hpp"
#include "antinef/dot.hpp"
#include "antinef/fiber_cone.hpp"
#include "antinef/graph.hpp"
#include "antinef/json_io.hpp"
#include "antinef/monomial.hpp"
#include "antinef/oracle.hpp"

namespace {

using namespace antinef;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flag values are file paths or inline JSON; inline input starts with a
// JSON delimiter.
std::string load_input(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read input file: " + arg);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Per-leaf format choice with a per-leaf default.
std::shared_ptr<std::string> format_option(CLI::App* cmd,
                                           const char* default_format) {
  auto fmt = std::make_shared<std::string>(default_format);
  cmd->add_option("--format", *fmt, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  return fmt;
}

void check_format(const std::string& format,
                  const std::vector<std::string>& allowed) {
  for (const auto& a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "' here");
}

std::string cycle_text(const Cycle& z) {
  std::ostringstream os;
  for (int i = 0; i < z.size(); ++i)
    os << (i ? " " : "") << z.coeffs[i].get_str();
  return os.str();
}

std::string gens_text(const MonomialIdeal& ideal) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    os << (i ? " " : "") << "(";
    for (std::size_t j = 0; j < ideal.gens()[i].size(); ++j)
      os << (j ? "," : "") << ideal.gens()[i][j];
    os << ")";
  }
  return os.str();
}

// strip the trailing newline of a oneline JSON dump for embedding
std::string bare(std::string json_line) {
  if (!json_line.empty() && json_line.back() == '\n') json_line.pop_back();
  return json_line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "antinef: exact computation with integrally closed ideals, as anti-nef "
      "cycles on resolution dual graphs and as monomial Newton polyhedra"};
  app.require_subcommand(1);

  // --- graph ---------------------------------------------------------------
  auto* graph_cmd = app.add_subcommand("graph", "dual-graph calculus");
  graph_cmd->require_subcommand(1);
  struct {
    std::string graph, cycle;
  } g_opt;

  {
    auto* cmd = graph_cmd->add_subcommand("validate", "validate a dual graph");
    cmd->add_option("--graph", g_opt.graph, "graph JSON (file or inline)")
        ->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text", "dot"});
      DualGraph g = graph_from_json(load_input(g_opt.graph));
      if (*fmt == "dot")
        std::cout << graph_to_dot(g);
      else if (*fmt == "text")
        std::cout << "valid: " << g.vertex_count() << " vertices, "
                  << g.edges().size() << " edges\n";
      else
        std::cout << graph_to_json(g);
    });
  }
  {
    auto* cmd = graph_cmd->add_subcommand("k", "canonical cycle");
    cmd->add_option("--graph", g_opt.graph)->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      QCycle k = canonical_cycle(graph_from_json(load_input(g_opt.graph)));
      if (*fmt == "text") {
        for (int i = 0; i < k.size(); ++i)
          std::cout << (i ? " " : "") << rat_to_string(k.coeffs[i]);
        std::cout << "\n";
      } else {
        std::cout << qcycle_to_json(k);
      }
    });
  }
  {
    auto* cmd = graph_cmd->add_subcommand("fundamental", "fundamental cycle");
    cmd->add_option("--graph", g_opt.graph)->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      Cycle z = fundamental_cycle(graph_from_json(load_input(g_opt.graph)));
      if (*fmt == "text")
        std::cout << cycle_text(z) << "\n";
      else
        std::cout << cycle_to_json(z);
    });
  }
  {
    auto* cmd =
        graph_cmd->add_subcommand("colength", "colength of an anti-nef cycle");
    cmd->add_option("--graph", g_opt.graph)->required();
    cmd->add_option("--cycle", g_opt.cycle)->required();
    auto fmt = format_option(cmd, "text");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      DualGraph g = graph_from_json(load_input(g_opt.graph));
      Int len = colength(g, cycle_from_json(load_input(g_opt.cycle)));
      if (*fmt == "text")
        std::cout << len.get_str() << "\n";
      else
        std::cout << "{\"colength\":" << len.get_str() << "}\n";
    });
  }
  {
    auto* cmd = graph_cmd->add_subcommand("rational", "rationality test");
    cmd->add_option("--graph", g_opt.graph)->required();
    auto fmt = format_option(cmd, "text");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      bool r = is_rational(graph_from_json(load_input(g_opt.graph)));
      if (*fmt == "text")
        std::cout << (r ? "true" : "false") << "\n";
      else
        std::cout << "{\"rational\":" << (r ? "true" : "false") << "}\n";
    });
  }

  // --- blowup --------------------------------------------------------------
  auto* blowup_cmd = app.add_subcommand("blowup", "blow-up surgery");
  blowup_cmd->require_subcommand(1);
  struct {
    std::string graph, cycle;
    int curve = -1;
    std::vector<int> edge;
    bool adjacent = false;
  } b_opt;

  auto blowup_action = [&](const BlowUpSpec& spec, const std::string& fmt) {
    check_format(fmt, {"json", "text"});
    DualGraph g = graph_from_json(load_input(b_opt.graph));
    if (b_opt.adjacent) {
      if (b_opt.cycle.empty()) throw UsageError("--adjacent needs --cycle");
      auto [g_after, z_after] = adjacent_cycle_via_blowup(
          g, cycle_from_json(load_input(b_opt.cycle)), spec);
      if (fmt == "text")
        std::cout << "graph: " << g_after.vertex_count() << " vertices\n"
                  << "cycle: " << cycle_text(z_after) << "\n"
                  << "colength: " << colength(g_after, z_after).get_str()
                  << "\n";
      else
        std::cout << "{\"graph\":" << bare(graph_to_json(g_after))
                  << ",\"adjacent_cycle\":" << bare(cycle_to_json(z_after))
                  << "}\n";
      return;
    }
    BlowUpResult r = blow_up(g, spec);
    std::string pulled;
    if (!b_opt.cycle.empty())
      pulled = bare(cycle_to_json(
          pullback(g, r.graph, spec, cycle_from_json(load_input(b_opt.cycle)))));
    if (fmt == "text") {
      std::cout << "graph: " << r.graph.vertex_count()
                << " vertices, new vertex " << r.new_vertex << "\n";
      if (!pulled.empty()) std::cout << "pullback: " << pulled << "\n";
    } else {
      std::cout << "{\"graph\":" << bare(graph_to_json(r.graph))
                << ",\"new_vertex\":" << r.new_vertex;
      if (!pulled.empty()) std::cout << ",\"pullback\":" << pulled;
      std::cout << "}\n";
    }
  };

  {
    auto* cmd = blowup_cmd->add_subcommand("free", "blow up a free point");
    cmd->add_option("--graph", b_opt.graph)->required();
    cmd->add_option("--curve", b_opt.curve, "curve carrying the point")
        ->required();
    cmd->add_option("--cycle", b_opt.cycle, "optional cycle to pull back");
    cmd->add_flag("--adjacent", b_opt.adjacent,
                  "emit pullback + E (the adjacent ideal's cycle)");
    auto fmt = format_option(cmd, "json");
    cmd->callback(
        [&, fmt] { blowup_action(BlowUpSpec::free_point(b_opt.curve), *fmt); });
  }
  {
    auto* cmd =
        blowup_cmd->add_subcommand("satellite", "blow up a satellite point");
    cmd->add_option("--graph", b_opt.graph)->required();
    cmd->add_option("--edge", b_opt.edge, "the two curves through the point")
        ->expected(2)
        ->required();
    cmd->add_option("--cycle", b_opt.cycle, "optional cycle to pull back");
    cmd->add_flag("--adjacent", b_opt.adjacent,
                  "emit pullback + E (the adjacent ideal's cycle)");
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      blowup_action(BlowUpSpec::satellite(b_opt.edge[0], b_opt.edge[1]), *fmt);
    });
  }

  // --- adjacency -----------------------------------------------------------
  auto* adj_cmd = app.add_subcommand("adjacency", "adjacent-below reports");
  adj_cmd->require_subcommand(1);
  struct {
    std::string graph, cycle, from, to;
  } a_opt;

  {
    auto* cmd = adj_cmd->add_subcommand("e0", "zero-product components");
    cmd->add_option("--graph", a_opt.graph)->required();
    cmd->add_option("--cycle", a_opt.cycle)->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      DualGraph g = graph_from_json(load_input(a_opt.graph));
      ComponentSet components =
          e_zero_components(g, cycle_from_json(load_input(a_opt.cycle)));
      if (*fmt == "text") {
        for (const auto& component : components) {
          std::cout << "{";
          for (std::size_t i = 0; i < component.size(); ++i)
            std::cout << (i ? "," : "") << component[i];
          std::cout << "}\n";
        }
      } else {
        std::cout << components_to_json(components);
      }
    });
  }
  {
    auto* cmd = adj_cmd->add_subcommand("report", "full adjacency report");
    cmd->add_option("--graph", a_opt.graph)->required();
    cmd->add_option("--cycle", a_opt.cycle)->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text", "dot"});
      DualGraph g = graph_from_json(load_input(a_opt.graph));
      Cycle z = cycle_from_json(load_input(a_opt.cycle));
      AdjacencyReport report = adjacent_below(g, z);
      if (*fmt == "dot") {
        std::cout << fan_to_dot(g, z, report);
      } else if (*fmt == "text") {
        std::cout << "type1: " << report.type1.size()
                  << ", free: " << report.type2_free.size()
                  << ", satellite: " << report.type2_satellite.size() << "\n";
        for (const auto& entry : report.type1)
          std::cout << "  type1 Y = " << cycle_text(entry.y) << "\n";
        for (const auto& family : report.type2_free)
          std::cout << "  free family on v" << family.curve << "\n";
        for (const auto& point : report.type2_satellite)
          std::cout << "  satellite point {" << point.edge.first << ","
                    << point.edge.second << "}\n";
      } else {
        std::cout << adjacency_report_to_json(report);
      }
    });
  }
  {
    auto* cmd = adj_cmd->add_subcommand("chain", "composition series");
    cmd->add_option("--graph", a_opt.graph)->required();
    cmd->add_option("--from", a_opt.from, "upper anti-nef cycle")->required();
    cmd->add_option("--to", a_opt.to, "lower anti-nef cycle")->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text", "dot"});
      DualGraph g = graph_from_json(load_input(a_opt.graph));
      Cycle hi = cycle_from_json(load_input(a_opt.from));
      Cycle lo = cycle_from_json(load_input(a_opt.to));
      auto steps = chain_graph(g, hi, lo);
      if (*fmt == "dot") {
        std::cout << graph_chain_to_dot(g, hi, steps);
      } else if (*fmt == "text") {
        std::cout << "colength " << colength(g, hi).get_str() << ": "
                  << cycle_text(hi) << "\n";
        for (const auto& step : steps)
          std::cout << "colength "
                    << colength(step.graph, step.cycle).get_str() << ": "
                    << cycle_text(step.cycle) << " ("
                    << step.graph.vertex_count() << " vertices)\n";
      } else {
        std::cout << graph_chain_to_json(steps);
      }
    });
  }

  // --- monomial ------------------------------------------------------------
  auto* mono_cmd = app.add_subcommand("monomial", "monomial-ideal toolkit");
  mono_cmd->require_subcommand(1);
  struct {
    std::string ideal, from, to;
    int n = 0, cap = 12;
  } m_opt;

  {
    auto* cmd = mono_cmd->add_subcommand("closure", "integral closure");
    cmd->add_option("--ideal", m_opt.ideal)->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      MonomialIdeal closed =
          newton_closure(monomial_ideal_from_json(load_input(m_opt.ideal)));
      if (*fmt == "text")
        std::cout << gens_text(closed) << "\n";
      else
        std::cout << monomial_ideal_to_json(closed);
    });
  }
  {
    auto* cmd = mono_cmd->add_subcommand("ic", "integrally closed?");
    cmd->add_option("--ideal", m_opt.ideal)->required();
    auto fmt = format_option(cmd, "text");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      bool closed = is_integrally_closed(
          monomial_ideal_from_json(load_input(m_opt.ideal)));
      if (*fmt == "text")
        std::cout << (closed ? "true" : "false") << "\n";
      else
        std::cout << "{\"integrally_closed\":" << (closed ? "true" : "false")
                  << "}\n";
    });
  }
  {
    auto* cmd = mono_cmd->add_subcommand("colength", "colength");
    cmd->add_option("--ideal", m_opt.ideal)->required();
    auto fmt = format_option(cmd, "text");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      Int len = colength(monomial_ideal_from_json(load_input(m_opt.ideal)));
      if (*fmt == "text")
        std::cout << len.get_str() << "\n";
      else
        std::cout << "{\"colength\":" << len.get_str() << "}\n";
    });
  }
  {
    auto* cmd = mono_cmd->add_subcommand("adjacent", "adjacent ideals below");
    cmd->add_option("--ideal", m_opt.ideal)->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      auto ideals =
          adjacent_below(monomial_ideal_from_json(load_input(m_opt.ideal)));
      if (*fmt == "text")
        for (const auto& ideal : ideals) std::cout << gens_text(ideal) << "\n";
      else
        std::cout << monomial_list_to_json(ideals);
    });
  }
  {
    auto* cmd = mono_cmd->add_subcommand("chain", "composition series");
    cmd->add_option("--from", m_opt.from, "upper ideal")->required();
    cmd->add_option("--to", m_opt.to, "lower ideal")->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text", "dot"});
      MonomialIdeal from = monomial_ideal_from_json(load_input(m_opt.from));
      MonomialIdeal to = monomial_ideal_from_json(load_input(m_opt.to));
      auto steps = chain(from, to);
      if (*fmt == "dot") {
        std::cout << monomial_chain_to_dot(from, steps);
      } else if (*fmt == "text") {
        std::cout << "colength " << colength(from).get_str() << ": "
                  << gens_text(from) << "\n";
        for (const auto& step : steps)
          std::cout << "colength " << colength(step).get_str() << ": "
                    << gens_text(step) << "\n";
      } else {
        std::cout << monomial_list_to_json(steps);
      }
    });
  }
  {
    auto* cmd = mono_cmd->add_subcommand(
        "enumerate", "all plane m-primary ideals of one colength");
    cmd->add_option("--n", m_opt.n, "colength")->required();
    cmd->add_option("--cap", m_opt.cap, "enumeration cap (default 12)");
    auto fmt = format_option(cmd, "text");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      ColengthEnumeration e = enumerate_colength(m_opt.n, m_opt.cap);
      if (*fmt == "text") {
        std::cout << "colength  total  ic  witnesses\n";
        std::cout << m_opt.n << "  " << e.total.get_str() << "  "
                  << e.ic.get_str() << "  " << e.witnesses.size() << "\n";
        for (const auto& w : e.witnesses)
          std::cout << "  witness: " << gens_text(w) << "\n";
      } else {
        std::cout << enumeration_to_json(m_opt.n, e);
      }
    });
  }

  // --- fibercone -----------------------------------------------------------
  auto* fiber_cmd = app.add_subcommand("fibercone", "fiber-cone criterion");
  fiber_cmd->require_subcommand(1);
  struct {
    std::string pres, point, name;
    int n = 1;
    long fp = 0;
  } f_opt;

  {
    auto* cmd = fiber_cmd->add_subcommand("check", "adjacency point test");
    cmd->add_option("--pres", f_opt.pres, "presentation JSON")->required();
    cmd->add_option("--point", f_opt.point, "projective point JSON")
        ->required();
    auto fmt = format_option(cmd, "text");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      FiberConePresentation pres =
          presentation_from_json(load_input(f_opt.pres));
      ProjectivePoint point =
          point_from_json(load_input(f_opt.point), pres.field());
      bool adjacent = is_adjacent_point(pres, point);
      if (*fmt == "text")
        std::cout << (adjacent ? "true" : "false") << "\n";
      else
        std::cout << "{\"adjacent\":" << (adjacent ? "true" : "false")
                  << "}\n";
    });
  }
  {
    auto* cmd = fiber_cmd->add_subcommand("points", "all points over F_p");
    cmd->add_option("--pres", f_opt.pres, "presentation JSON")->required();
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      auto points =
          enumerate_points(presentation_from_json(load_input(f_opt.pres)));
      if (*fmt == "text") {
        for (const auto& point : points) {
          std::cout << "[";
          for (std::size_t i = 0; i < point.coords().size(); ++i)
            std::cout << (i ? ":" : "") << rat_to_string(point.coords()[i]);
          std::cout << "]\n";
        }
      } else {
        std::cout << points_to_json(points);
      }
    });
  }
  {
    auto* cmd = fiber_cmd->add_subcommand("builtin", "built-in presentations");
    cmd->add_option("--name", f_opt.name, "an_maximal_ideal or veronese_m2")
        ->required();
    cmd->add_option("--n", f_opt.n, "parameter for an_maximal_ideal");
    cmd->add_option("--fp", f_opt.fp, "prime field (0 = rationals)");
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json"});
      std::cout << presentation_to_json(
          builtin_presentation(f_opt.name, f_opt.n, FieldSpec{f_opt.fp}));
    });
  }

  // --- oracle ----------------------------------------------------------------
  auto* oracle_cmd =
      app.add_subcommand("oracle", "integral-dependence certificates");
  oracle_cmd->require_subcommand(1);
  struct {
    std::string element, ideal;
    long fp = 0;
    OracleBounds bounds;
  } o_opt;

  {
    auto* cmd = oracle_cmd->add_subcommand("classify", "classify y over I");
    cmd->add_option("--element", o_opt.element, "polynomial JSON")->required();
    cmd->add_option("--ideal", o_opt.ideal, "list of polynomial JSON")
        ->required();
    cmd->add_option("--fp", o_opt.fp, "prime field (0 = rationals)");
    cmd->add_option("--nmax", o_opt.bounds.n_max, "max equation degree");
    cmd->add_option("--degmax", o_opt.bounds.deg_max, "max coefficient degree");
    cmd->add_option("--wbound", o_opt.bounds.weight_bound,
                    "max valuation weight");
    auto fmt = format_option(cmd, "json");
    cmd->callback([&, fmt] {
      check_format(*fmt, {"json", "text"});
      Poly y = poly_from_json(load_input(o_opt.element), o_opt.fp);
      auto gens = poly_list_from_json(load_input(o_opt.ideal), o_opt.fp);
      Certificate cert = classify(y, gens, o_opt.bounds, o_opt.fp);
      if (*fmt == "text") {
        switch (cert.verdict) {
          case Certificate::Verdict::Integral:
            std::cout << "integral at degree " << cert.degree << "\n";
            break;
          case Certificate::Verdict::NotIntegral:
            std::cout << "not integral: weights (" << cert.weights[0] << ","
                      << cert.weights[1] << ")\n";
            break;
          case Certificate::Verdict::Unknown:
            std::cout << "unknown within bounds\n";
            break;
        }
      } else {
        std::cout << certificate_to_json(cert);
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << "{\"error\":\"" << e.kind() << "\",\"message\":"
              << nlohmann::json(std::string(e.what())).dump() << "}\n";
    return 1;
  }
  return 0;
}
