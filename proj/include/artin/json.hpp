#ifndef ARTIN_JSON_HPP
#define ARTIN_JSON_HPP

// JSON serialization of certificates and decisions. Graphs, expressions and
// paths are embedded in their text formats so every field re-parses.

#include <artin/coxeter.hpp>
#include <artin/groupoid.hpp>
#include <artin/verify.hpp>
#include <artin/words.hpp>

#include <json.hpp>

#include <string>

namespace artin {

inline std::string format_exponents(CoxeterGraph const&       g,
                                    ExponentAssignment const& exponents) {
  std::string out;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (s > 0) {
      out += ',';
    }
    out += g.name(s) + "=" + exponents[s].str();
  }
  return out;
}

inline nlohmann::json to_json(NontrivialityCertificate const& cert) {
  nlohmann::json out;
  out["graph"]      = format_graph(cert.graph);
  out["exponents"]  = format_exponents(cert.graph, cert.exponents);
  out["expression"] = format_expression(cert.graph, cert.expression);
  if (cert.witness) {
    out["kind"]    = "groupoid";
    out["witness"] = format_path(cert.graph,
                                 GroupoidPath::generator(cert.witness->generator));
    out["witness_vertex"] = cert.graph.name(cert.witness->generator.source);
    out["image"] = format_path(cert.graph, cert.witness->image);
  } else {
    out["kind"]  = "cyclic";
    out["power"] = cert.power.str();
  }
  out["stages"] = cert.stages;
  return out;
}

/// Inverse of to_json; throws ParseError or nlohmann::json::exception.
inline NontrivialityCertificate certificate_from_json(nlohmann::json const& j) {
  NontrivialityCertificate cert;
  cert.graph      = parse_graph(j.at("graph").get<std::string>());
  cert.exponents  = parse_exponents(cert.graph, j.at("exponents").get<std::string>());
  cert.expression = parse_expression(cert.graph, j.at("expression").get<std::string>());
  cert.stages     = j.at("stages").get<std::vector<std::string>>();
  if (j.at("kind") == "groupoid") {
    auto const og  = build_graph(cert.graph);
    auto const gen = parse_path(og, j.at("witness").get<std::string>());
    if (gen.runs().size() != 1 || gen.runs()[0].power != 1) {
      throw ContractError("certificate witness must be a single generator");
    }
    cert.witness = GroupoidWitness{gen.runs()[0].edge,
                                   parse_path(og, j.at("image").get<std::string>())};
  } else {
    cert.power = Integer(j.at("power").get<std::string>());
  }
  return cert;
}

inline nlohmann::json to_json(CoxeterGraph const& g,
                              TrivialityDecision const& decision) {
  nlohmann::json out;
  out["trivial"] = decision.trivial;
  out["reduced"] = format_expression(g, decision.reduced);
  out["certificate"] =
      decision.certificate ? to_json(*decision.certificate) : nlohmann::json();
  return out;
}

}  // namespace artin

#endif
