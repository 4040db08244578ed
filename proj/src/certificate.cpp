#include <htg/certificate.hpp>

#include <json.hpp>

namespace htg {

using nlohmann::json;

namespace {

json vertex_to_json(Vertex v) { return json::array({v.i, v.j}); }

Vertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(ErrorKind::SchemaError, "vertex must be an [i,j] integer pair");
  return Vertex{j[0].get<int>(), j[1].get<int>()};
}

json params_json(const HtgParams& p) { return json{{"m", p.m}, {"n", p.n}, {"ell", p.ell}}; }

HtgParams params_from(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("ell"))
    fail(ErrorKind::SchemaError, "params must be an object with m, n, ell");
  return validate(j["m"].get<int>(), j["n"].get<int>(), j["ell"].get<int>());
}

}  // namespace

std::string params_to_json(const HtgParams& params) { return params_json(params).dump(); }

HtgParams params_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::SchemaError, "invalid JSON");
  return params_from(j);
}

std::string encode_certificate(const SeparationCertificate& cert) {
  json edges = json::array();
  for (const Edge& e : cert.factor.edges)
    edges.push_back(json::array({vertex_to_json(e.a), vertex_to_json(e.b)}));

  json doc{{"params", params_json(cert.params)},
           {"pair", json::array({vertex_to_json(cert.pair.first), vertex_to_json(cert.pair.second)})},
           {"edges", edges},
           {"provenance", cert.provenance}};
  return doc.dump(2) + "\n";
}

SeparationCertificate decode_certificate(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(ErrorKind::SchemaError, "invalid JSON");
  if (!doc.is_object() || !doc.contains("params") || !doc.contains("pair") ||
      !doc.contains("edges") || !doc.contains("provenance"))
    fail(ErrorKind::SchemaError, "certificate must carry params, pair, edges, provenance");

  HtgParams params = params_from(doc["params"]);
  const json& jpair = doc["pair"];
  if (!jpair.is_array() || jpair.size() != 2)
    fail(ErrorKind::SchemaError, "pair must hold two vertices");
  Vertex x = vertex_from_json(jpair[0]);
  Vertex y = vertex_from_json(jpair[1]);

  if (!doc["edges"].is_array()) fail(ErrorKind::SchemaError, "edges must be an array");
  std::vector<std::pair<Vertex, Vertex>> endpoints;
  endpoints.reserve(doc["edges"].size());
  for (const json& je : doc["edges"]) {
    if (!je.is_array() || je.size() != 2) fail(ErrorKind::SchemaError, "edge must hold two vertices");
    endpoints.emplace_back(vertex_from_json(je[0]), vertex_from_json(je[1]));
  }

  HtgGraph graph = build_graph(params);
  if (!graph.contains(x) || !graph.contains(y))
    fail(ErrorKind::SchemaError, "pair vertex out of range for " + format_params(params));

  TwoFactor factor;
  try {
    factor = verify_factor(graph, endpoints);
  } catch (const Error& err) {
    fail(ErrorKind::VerificationFailed, std::string("edge list rejected: ") + err.what());
  }
  if (x == y) fail(ErrorKind::VerificationFailed, "pair vertices coincide");
  if (!separates(factor, x, y))
    fail(ErrorKind::VerificationFailed, "factor does not separate " + format_vertex(x) + " and " +
                                            format_vertex(y));

  return SeparationCertificate{params, {x, y}, std::move(factor),
                               doc["provenance"].get<std::string>()};
}

}  // namespace htg
