#pragma once

// JSON interchange documents and Graphviz export.
//
//   {
//     "torus_rank": 2,
//     "vertices": ["p", "q"],
//     "edges": [{"id": "e1", "endpoints": ["p", "q"], "weight": [1, 0]}, ...],
//     "connection": [{"dart": "e1", "mapping": [["e1", "e1~"], ...]}, ...],   (optional)
//     "orderings": {"p": ["e1", "e2", "e3"], ...}                             (optional)
//   }
//
// Edge "X" yields darts "X" (first endpoint to second, the given weight) and
// "X~" (reversed, negated weight). Weights beyond 64 bits may be written as
// decimal strings.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gkm/axial.hpp"
#include "gkm/congruence.hpp"
#include "gkm/graph.hpp"
#include "json.hpp"

namespace gkm {

struct DocumentEdge {
  std::string id;
  std::string from;
  std::string to;
  Weight weight;

  friend bool operator==(const DocumentEdge&, const DocumentEdge&) = default;
};

struct DocumentConnection {
  std::string dart;
  std::vector<std::pair<std::string, std::string>> mapping;

  friend bool operator==(const DocumentConnection&, const DocumentConnection&) = default;
};

struct GkmDocument {
  std::size_t torus_rank = 0;
  std::vector<std::string> vertices;
  std::vector<DocumentEdge> edges;
  std::optional<std::vector<DocumentConnection>> connection;
  std::optional<std::vector<std::pair<std::string, std::vector<std::string>>>> orderings;

  friend bool operator==(const GkmDocument&, const GkmDocument&) = default;
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

inline const ordered_json& require(const ordered_json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string as_string(const ordered_json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

inline Integer as_integer(const ordered_json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  schema_error(path, "expected an integer");
}

inline ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace detail

/// Structural parse only; semantic checks happen when building the graph.
inline GkmDocument parse_gkm(std::string_view text) {
  using detail::ordered_json;
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(detail::line_of(text, e.byte)) + ": " + e.what());
  }
  GkmDocument doc;
  const auto& rank = detail::require(root, "torus_rank", "$");
  if (!rank.is_number_unsigned()) detail::schema_error("$.torus_rank", "expected a non-negative integer");
  doc.torus_rank = rank.get<std::size_t>();

  const auto& vertices = detail::require(root, "vertices", "$");
  if (!vertices.is_array()) detail::schema_error("$.vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    doc.vertices.push_back(detail::as_string(vertices[i], "$.vertices[" + std::to_string(i) + "]"));

  const auto& edges = detail::require(root, "edges", "$");
  if (!edges.is_array()) detail::schema_error("$.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    DocumentEdge edge;
    edge.id = detail::as_string(detail::require(edges[i], "id", path), path + ".id");
    const auto& ends = detail::require(edges[i], "endpoints", path);
    if (!ends.is_array() || ends.size() != 2) detail::schema_error(path + ".endpoints", "expected two vertex ids");
    edge.from = detail::as_string(ends[0], path + ".endpoints[0]");
    edge.to = detail::as_string(ends[1], path + ".endpoints[1]");
    const auto& w = detail::require(edges[i], "weight", path);
    if (!w.is_array()) detail::schema_error(path + ".weight", "expected an array");
    if (w.size() != doc.torus_rank)
      detail::schema_error(path + ".weight", "has " + std::to_string(w.size()) + " entries, torus_rank is " +
                                                 std::to_string(doc.torus_rank));
    for (std::size_t k = 0; k < w.size(); ++k)
      edge.weight.push_back(detail::as_integer(w[k], path + ".weight[" + std::to_string(k) + "]"));
    doc.edges.push_back(std::move(edge));
  }

  if (auto it = root.find("connection"); it != root.end()) {
    if (!it->is_array()) detail::schema_error("$.connection", "expected an array");
    std::vector<DocumentConnection> entries;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "$.connection[" + std::to_string(i) + "]";
      DocumentConnection entry;
      entry.dart = detail::as_string(detail::require((*it)[i], "dart", path), path + ".dart");
      const auto& mapping = detail::require((*it)[i], "mapping", path);
      if (!mapping.is_array()) detail::schema_error(path + ".mapping", "expected an array");
      for (std::size_t k = 0; k < mapping.size(); ++k) {
        const std::string mpath = path + ".mapping[" + std::to_string(k) + "]";
        if (!mapping[k].is_array() || mapping[k].size() != 2) detail::schema_error(mpath, "expected a pair of dart ids");
        entry.mapping.emplace_back(detail::as_string(mapping[k][0], mpath + "[0]"),
                                   detail::as_string(mapping[k][1], mpath + "[1]"));
      }
      entries.push_back(std::move(entry));
    }
    doc.connection = std::move(entries);
  }

  if (auto it = root.find("orderings"); it != root.end()) {
    if (!it->is_object()) detail::schema_error("$.orderings", "expected an object");
    std::vector<std::pair<std::string, std::vector<std::string>>> orderings;
    for (const auto& [vertex, list] : it->items()) {
      const std::string path = "$.orderings." + vertex;
      if (!list.is_array()) detail::schema_error(path, "expected an array of dart ids");
      std::vector<std::string> ids;
      for (std::size_t k = 0; k < list.size(); ++k) ids.push_back(detail::as_string(list[k], path + "[" + std::to_string(k) + "]"));
      orderings.emplace_back(vertex, std::move(ids));
    }
    doc.orderings = std::move(orderings);
  }
  return doc;
}

inline std::string emit_gkm(const GkmDocument& doc) {
  using detail::ordered_json;
  ordered_json root;
  root["torus_rank"] = doc.torus_rank;
  root["vertices"] = doc.vertices;
  root["edges"] = ordered_json::array();
  for (const auto& e : doc.edges) {
    ordered_json w = ordered_json::array();
    for (const auto& x : e.weight) w.push_back(detail::integer_json(x));
    root["edges"].push_back({{"id", e.id}, {"endpoints", {e.from, e.to}}, {"weight", std::move(w)}});
  }
  if (doc.connection) {
    root["connection"] = ordered_json::array();
    for (const auto& c : *doc.connection) {
      ordered_json mapping = ordered_json::array();
      for (const auto& [a, b] : c.mapping) mapping.push_back({a, b});
      root["connection"].push_back({{"dart", c.dart}, {"mapping", std::move(mapping)}});
    }
  }
  if (doc.orderings) {
    root["orderings"] = ordered_json::object();
    for (const auto& [v, ids] : *doc.orderings) root["orderings"][v] = ids;
  }
  return root.dump(2) + "\n";
}

/// Builds the graph and axial function; infers the connection when the
/// document has none. Graph errors propagate; axioms are not checked here.
inline GkmGraph to_gkm(const GkmDocument& doc) {
  GraphDescription desc;
  desc.vertices = doc.vertices;
  for (const auto& e : doc.edges) desc.edges.push_back({e.id, e.from, e.to});
  if (doc.orderings) desc.orderings = *doc.orderings;
  OrientedGraph g = build_graph(desc);
  std::vector<Weight> labels(g.dart_count());
  for (const auto& e : doc.edges) {
    const std::size_t d = g.dart_index(e.id);
    labels[d] = e.weight;
    Weight neg(e.weight.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -e.weight[i];
    labels[g.reverse(d)] = std::move(neg);
  }
  AxialFunction alpha(doc.torus_rank, std::move(labels));
  std::optional<Connection> nabla;
  if (doc.connection) {
    nabla.emplace(g.dart_count());
    for (const auto& entry : *doc.connection) {
      const std::size_t e = g.dart_index(entry.dart);
      for (const auto& [from, to] : entry.mapping) nabla->set(e, g.dart_index(from), g.dart_index(to));
    }
  }
  return make_gkm(std::move(g), std::move(alpha), std::move(nabla));
}

struct DocumentOptions {
  bool include_connection = true;
};

/// Document for a gkm whose darts follow the "X" / "X~" convention. Orderings
/// are written only for vertices that deviate from dart-id order.
inline GkmDocument to_document(const GkmGraph& gkm, DocumentOptions options = {}) {
  const auto& g = gkm.graph;
  GkmDocument doc;
  doc.torus_rank = gkm.torus_rank();
  doc.vertices = g.vertex_ids();
  for (std::size_t e : g.edge_representatives()) {
    if (g.dart_id(g.reverse(e)) != reversed_dart_id(g.dart_id(e)))
      throw Error(ErrorCode::SchemaError, "dart '" + g.dart_id(g.reverse(e)) + "' does not follow the reversed-id convention");
    doc.edges.push_back({g.dart_id(e), g.vertex_id(g.source(e)), g.vertex_id(g.target(e)), gkm.label(e)});
  }
  if (options.include_connection) {
    std::vector<DocumentConnection> entries;
    for (std::size_t e = 0; e < g.dart_count(); ++e) {
      DocumentConnection entry{g.dart_id(e), {}};
      for (std::size_t from : g.out_darts(g.source(e)))
        entry.mapping.emplace_back(g.dart_id(from), g.dart_id(gkm.connection.apply(e, from)));
      entries.push_back(std::move(entry));
    }
    doc.connection = std::move(entries);
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> orderings;
  for (std::size_t p = 0; p < g.vertex_count(); ++p) {
    const auto sorted = g.out_darts_by_id(p);
    const auto out = g.out_darts(p);
    if (std::equal(out.begin(), out.end(), sorted.begin())) continue;
    std::vector<std::string> ids;
    for (std::size_t d : out) ids.push_back(g.dart_id(d));
    orderings.emplace_back(g.vertex_id(p), std::move(ids));
  }
  if (!orderings.empty()) doc.orderings = std::move(orderings);
  return doc;
}

enum class DotAnnotation { None, Weights, Congruence };

/// Graphviz text with one undirected edge per dart pair.
inline std::string emit_dot(const GkmGraph& gkm, DotAnnotation annotate = DotAnnotation::Weights) {
  const auto& g = gkm.graph;
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::vector<CongruenceVector> invariant;
  if (annotate == DotAnnotation::Congruence) invariant = invariant_function(gkm);
  std::string out = "graph gkm {\n";
  for (const auto& v : g.vertex_ids()) out += "  " + quote(v) + ";\n";
  for (std::size_t e : g.edge_representatives()) {
    const std::size_t r = g.reverse(e);
    out += "  " + quote(g.vertex_id(g.source(e))) + " -- " + quote(g.vertex_id(g.target(e)));
    switch (annotate) {
      case DotAnnotation::None:
        break;
      case DotAnnotation::Weights:
        out += " [label=" + quote(g.dart_id(e) + ": " + to_string(gkm.label(e))) + "]";
        break;
      case DotAnnotation::Congruence:
        out += " [label=" + quote(g.dart_id(e) + ": " + to_string(invariant[e]) + " / " + g.dart_id(r) + ": " +
                                  to_string(invariant[r])) + "]";
        break;
    }
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace gkm
