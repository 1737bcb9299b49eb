#ifndef ALEXSPAN_IO_HPP_
#define ALEXSPAN_IO_HPP_

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alexspan/bigint.hpp"
#include "alexspan/errors.hpp"
#include "alexspan/graph.hpp"
#include "alexspan/planar.hpp"

namespace alexspan
{

/// Malformed graph document; the message names the offending field.
class ParseError : public InvalidInput
{
public:
  ParseError(const std::string & where, const std::string & what)
  : InvalidInput(where + ": " + what) {}
};

/**
 * Graph document:
 *
 *   {
 *     "vertices": ["v1", "v2"],
 *     "edges": [{"id": "e", "tail": "v1", "head": "v2", "weight": 3}, ...],
 *     "rotation": {"v1": ["e:t", "f:h"], ...},   // optional, counterclockwise
 *     "basepoint": "e"                           // optional
 *   }
 *
 * Weights may be JSON integers or decimal strings. Unknown fields are errors.
 */
struct GraphDocument
{
  DirectedMultigraph graph;
  std::optional<CombinatorialMap> map;
  std::optional<EdgeId> basepoint;

  const CombinatorialMap & require_map() const
  {
    if (!map) {throw InvalidInput("this command needs a \"rotation\" field in the input");}
    return *map;
  }
};

namespace detail
{

using nlohmann::json;

inline void reject_unknown(const json & obj, const std::set<std::string> & allowed,
  const std::string & where)
{
  for (const auto & item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw ParseError(where, "unknown field \"" + item.key() + "\"");
    }
  }
}

inline std::string get_string(const json & obj, const std::string & key, const std::string & where)
{
  if (!obj.contains(key)) {throw ParseError(where, "missing field \"" + key + "\"");}
  const auto & v = obj.at(key);
  if (!v.is_string()) {throw ParseError(where + "." + key, "expected a string");}
  return v.get<std::string>();
}

inline BigInt parse_weight(const json & v, const std::string & where)
{
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) {
      return BigInt(s);
    }
  }
  throw ParseError(where, "expected an integer (number or decimal string)");
}

inline Dart parse_dart(const DirectedMultigraph & g, const std::string & text, const std::string & where)
{
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) {
    throw ParseError(where, "dart \"" + text + "\" must look like <edgeId>:t or <edgeId>:h");
  }
  const std::string edge = text.substr(0, colon);
  const std::string end = text.substr(colon + 1);
  if (end != "t" && end != "h") {
    throw ParseError(where, "dart \"" + text + "\" must end in :t or :h");
  }
  if (!g.has_edge(edge)) {throw ParseError(where, "unknown edge \"" + edge + "\"");}
  return {g.edge_index(edge), end == "t" ? End::tail : End::head};
}

}  // namespace detail

inline GraphDocument parse_document(const nlohmann::json & doc)
{
  using detail::json;
  if (!doc.is_object()) {throw ParseError("document", "expected a JSON object");}
  detail::reject_unknown(doc, {"vertices", "edges", "rotation", "basepoint"}, "document");

  if (!doc.contains("vertices")) {throw ParseError("document", "missing field \"vertices\"");}
  const auto & jv = doc.at("vertices");
  if (!jv.is_array()) {throw ParseError("vertices", "expected an array of strings");}
  std::vector<VertexId> vertices;
  for (std::size_t k = 0; k < jv.size(); ++k) {
    if (!jv[k].is_string()) {
      throw ParseError("vertices[" + std::to_string(k) + "]", "expected a string");
    }
    vertices.push_back(jv[k].get<std::string>());
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto & je = doc.at("edges");
    if (!je.is_array()) {throw ParseError("edges", "expected an array of records");}
    for (std::size_t k = 0; k < je.size(); ++k) {
      const std::string where = "edges[" + std::to_string(k) + "]";
      const auto & rec = je[k];
      if (!rec.is_object()) {throw ParseError(where, "expected an object");}
      detail::reject_unknown(rec, {"id", "tail", "head", "weight"}, where);
      if (!rec.contains("weight")) {throw ParseError(where, "missing field \"weight\"");}
      edges.push_back({detail::get_string(rec, "id", where), detail::get_string(rec, "tail", where),
          detail::get_string(rec, "head", where), detail::parse_weight(rec.at("weight"), where + ".weight")});
    }
  }

  GraphDocument out{DirectedMultigraph(std::move(vertices), std::move(edges)), std::nullopt, std::nullopt};
  const auto & g = out.graph;

  if (doc.contains("rotation")) {
    const auto & jr = doc.at("rotation");
    if (!jr.is_object()) {throw ParseError("rotation", "expected an object keyed by vertex id");}
    Rotation rot(g.vertex_count());
    for (const auto & item : jr.items()) {
      const std::string where = "rotation." + item.key();
      if (!g.has_vertex(item.key())) {throw ParseError(where, "unknown vertex");}
      if (!item.value().is_array()) {throw ParseError(where, "expected an array of darts");}
      auto & cyc = rot[g.vertex_index(item.key())];
      for (std::size_t k = 0; k < item.value().size(); ++k) {
        const auto & jd = item.value()[k];
        const std::string at = where + "[" + std::to_string(k) + "]";
        if (!jd.is_string()) {throw ParseError(at, "expected a string");}
        cyc.push_back(detail::parse_dart(g, jd.get<std::string>(), at));
      }
    }
    out.map.emplace(g, std::move(rot));
  }

  if (doc.contains("basepoint")) {
    const auto & jb = doc.at("basepoint");
    if (!jb.is_string()) {throw ParseError("basepoint", "expected an edge id");}
    if (!g.has_edge(jb.get<std::string>())) {throw ParseError("basepoint", "unknown edge");}
    out.basepoint = jb.get<std::string>();
  }
  return out;
}

inline GraphDocument parse_document(const std::string & text)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error & e) {
    throw ParseError("document", std::string("invalid JSON: ") + e.what());
  }
  return parse_document(doc);
}

inline GraphDocument load_document(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {throw Error("cannot open '" + path + "'");}
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

inline nlohmann::json to_json(const DirectedMultigraph & g,
  const CombinatorialMap * map = nullptr, const EdgeId * basepoint = nullptr)
{
  nlohmann::json doc;
  doc["vertices"] = g.vertices();
  doc["edges"] = nlohmann::json::array();
  for (const auto & e : g.edges()) {
    nlohmann::json rec{{"id", e.id}, {"tail", e.tail}, {"head", e.head}};
    if (e.weight >= INT64_MIN && e.weight <= INT64_MAX) {
      rec["weight"] = e.weight.convert_to<std::int64_t>();
    } else {
      rec["weight"] = e.weight.str();
    }
    doc["edges"].push_back(rec);
  }
  if (map) {
    nlohmann::json rot = nlohmann::json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      auto & arr = rot[g.vertex(v)] = nlohmann::json::array();
      for (const auto & d : map->rotation()[v]) {arr.push_back(dart_name(g, d));}
    }
    doc["rotation"] = rot;
  }
  if (basepoint) {doc["basepoint"] = *basepoint;}
  return doc;
}

}  // namespace alexspan

#endif  // ALEXSPAN_IO_HPP_
