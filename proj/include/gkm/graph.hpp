#pragma once

// Connected m-valent multigraphs built from darts (directed half-edges) with a
// fixed-point-free reversal involution, plus a per-vertex order of out-darts.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gkm/error.hpp"

namespace gkm {

/// Dart id of the reversal of an edge's forward dart.
inline std::string reversed_dart_id(std::string_view edge_id) { return std::string(edge_id) + "~"; }

struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
};

struct DartSpec {
  std::string id;
  std::string source;
  std::string target;
  std::string reverse;
};

/// Parsed graph input. Undirected `edges` expand to the dart pair (id, id~);
/// explicit `darts` carry their own reversal. `orderings` pins the out-dart
/// order at any listed vertex; unlisted vertices use dart-id order.
struct GraphDescription {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<DartSpec> darts;
  std::vector<std::pair<std::string, std::vector<std::string>>> orderings;
};

class OrientedGraph {
 public:
  struct Dart {
    std::string id;
    std::size_t source;
    std::size_t target;
    std::size_t reverse;
  };

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t dart_count() const noexcept { return darts_.size(); }
  std::size_t valence() const noexcept { return valence_; }

  const std::string& vertex_id(std::size_t v) const { return vertex_ids_.at(v); }
  const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
  const Dart& dart(std::size_t d) const { return darts_.at(d); }
  const std::vector<Dart>& darts() const noexcept { return darts_; }
  const std::string& dart_id(std::size_t d) const { return darts_.at(d).id; }
  std::size_t source(std::size_t d) const { return darts_[d].source; }
  std::size_t target(std::size_t d) const { return darts_[d].target; }
  std::size_t reverse(std::size_t d) const { return darts_[d].reverse; }

  /// Out-darts of p in the vertex ordering (e_{1,p}, ..., e_{m,p}).
  std::span<const std::size_t> out_darts(std::size_t p) const { return ordering_.at(p); }
  const std::vector<std::vector<std::size_t>>& ordering() const noexcept { return ordering_; }
  /// Index j of d within the ordering at its source.
  std::size_t position(std::size_t d) const { return position_.at(d); }

  std::optional<std::size_t> find_vertex(std::string_view id) const {
    auto it = vertex_index_.find(std::string(id));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_dart(std::string_view id) const {
    auto it = dart_index_.find(std::string(id));
    if (it == dart_index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t vertex_index(std::string_view id) const {
    if (auto v = find_vertex(id)) return *v;
    throw Error(ErrorCode::UnknownId, "vertex '" + std::string(id) + "'");
  }
  std::size_t dart_index(std::string_view id) const {
    if (auto d = find_dart(id)) return *d;
    throw Error(ErrorCode::UnknownId, "dart '" + std::string(id) + "'");
  }

  /// Vertex with the lexicographically smallest id.
  std::size_t base_vertex() const { return vertex_index_.empty() ? 0 : vertex_index_.begin()->second; }

  /// Out-darts of p sorted by dart id (independent of the vertex ordering).
  std::vector<std::size_t> out_darts_by_id(std::size_t p) const {
    std::vector<std::size_t> out(ordering_.at(p).begin(), ordering_.at(p).end());
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return darts_[a].id < darts_[b].id; });
    return out;
  }

  /// One dart per undirected edge: the member of each reversal pair that was
  /// listed first.
  std::vector<std::size_t> edge_representatives() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < darts_.size(); ++d)
      if (d < darts_[d].reverse) out.push_back(d);
    return out;
  }

  /// Same graph with a different vertex ordering; each list must permute the
  /// out-darts of its vertex.
  OrientedGraph with_ordering(std::vector<std::vector<std::size_t>> ordering) const {
    OrientedGraph g = *this;
    g.set_ordering(std::move(ordering));
    return g;
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    if (a.vertex_ids_ != b.vertex_ids_ || a.darts_.size() != b.darts_.size() || a.ordering_ != b.ordering_)
      return false;
    for (std::size_t d = 0; d < a.darts_.size(); ++d) {
      const Dart &x = a.darts_[d], &y = b.darts_[d];
      if (x.id != y.id || x.source != y.source || x.target != y.target || x.reverse != y.reverse) return false;
    }
    return true;
  }

 private:
  friend OrientedGraph build_graph(const GraphDescription& desc);

  void set_ordering(std::vector<std::vector<std::size_t>> ordering) {
    if (ordering.size() != vertex_ids_.size())
      throw Error(ErrorCode::BadOrdering, "ordering must list every vertex");
    position_.assign(darts_.size(), 0);
    std::vector<char> seen(darts_.size(), 0);
    for (std::size_t p = 0; p < ordering.size(); ++p) {
      if (ordering[p].size() != valence_)
        throw Error(ErrorCode::BadOrdering, "ordering at '" + vertex_ids_[p] + "' has wrong length");
      for (std::size_t j = 0; j < ordering[p].size(); ++j) {
        const std::size_t d = ordering[p][j];
        if (d >= darts_.size() || darts_[d].source != p || seen[d])
          throw Error(ErrorCode::BadOrdering, "ordering at '" + vertex_ids_[p] + "' is not a permutation of its out-darts");
        seen[d] = 1;
        position_[d] = j;
      }
    }
    ordering_ = std::move(ordering);
  }

  std::vector<std::string> vertex_ids_;
  std::map<std::string, std::size_t> vertex_index_;
  std::vector<Dart> darts_;
  std::map<std::string, std::size_t> dart_index_;
  std::vector<std::vector<std::size_t>> ordering_;
  std::vector<std::size_t> position_;
  std::size_t valence_ = 0;
};

/// Validates a description and materializes the graph and its ordering.
/// Throws LoopEdge, BadInvolution, NonRegular, Disconnected, UnknownId or
/// BadOrdering.
inline OrientedGraph build_graph(const GraphDescription& desc) {
  OrientedGraph g;
  for (const auto& v : desc.vertices) {
    if (!g.vertex_index_.emplace(v, g.vertex_ids_.size()).second)
      throw Error(ErrorCode::UnknownId, "duplicate vertex '" + v + "'");
    g.vertex_ids_.push_back(v);
  }
  auto vertex = [&](const std::string& id) { return g.vertex_index(id); };
  auto add_dart = [&](const std::string& id, std::size_t s, std::size_t t) {
    if (s == t) throw Error(ErrorCode::LoopEdge, "dart '" + id + "' at vertex '" + g.vertex_ids_[s] + "'");
    if (!g.dart_index_.emplace(id, g.darts_.size()).second)
      throw Error(ErrorCode::UnknownId, "duplicate dart '" + id + "'");
    g.darts_.push_back({id, s, t, 0});
  };

  for (const auto& e : desc.edges) {
    const std::size_t s = vertex(e.from), t = vertex(e.to);
    add_dart(e.id, s, t);
    add_dart(reversed_dart_id(e.id), t, s);
    const std::size_t d = g.darts_.size() - 2;
    g.darts_[d].reverse = d + 1;
    g.darts_[d + 1].reverse = d;
  }
  const std::size_t first_explicit = g.darts_.size();
  for (const auto& d : desc.darts) add_dart(d.id, vertex(d.source), vertex(d.target));
  for (std::size_t k = 0; k < desc.darts.size(); ++k) {
    auto r = g.find_dart(desc.darts[k].reverse);
    if (!r) throw Error(ErrorCode::BadInvolution, "dart '" + desc.darts[k].id + "' names unknown reverse '" + desc.darts[k].reverse + "'");
    g.darts_[first_explicit + k].reverse = *r;
  }
  for (std::size_t d = 0; d < g.darts_.size(); ++d) {
    const auto& x = g.darts_[d];
    const auto& y = g.darts_[x.reverse];
    if (x.reverse == d || y.reverse != d || y.source != x.target || y.target != x.source)
      throw Error(ErrorCode::BadInvolution, "dart '" + x.id + "' and its reverse '" + y.id + "'");
  }

  std::vector<std::vector<std::size_t>> by_vertex(g.vertex_ids_.size());
  for (std::size_t d = 0; d < g.darts_.size(); ++d) by_vertex[g.darts_[d].source].push_back(d);
  g.valence_ = by_vertex.empty() ? 0 : by_vertex.front().size();
  for (std::size_t p = 0; p < by_vertex.size(); ++p)
    if (by_vertex[p].size() != g.valence_)
      throw Error(ErrorCode::NonRegular, "vertex '" + g.vertex_ids_[p] + "' has " + std::to_string(by_vertex[p].size()) +
                                             " out-darts, expected " + std::to_string(g.valence_));

  if (!g.vertex_ids_.empty()) {
    std::vector<char> seen(g.vertex_ids_.size(), 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop_front();
      for (std::size_t d : by_vertex[p]) {
        const std::size_t q = g.darts_[d].target;
        if (!seen[q]) {
          seen[q] = 1;
          ++reached;
          queue.push_back(q);
        }
      }
    }
    if (reached != g.vertex_ids_.size()) {
      std::size_t lost = 0;
      while (seen[lost]) ++lost;
      throw Error(ErrorCode::Disconnected, "vertex '" + g.vertex_ids_[lost] + "' is unreachable");
    }
  }

  for (auto& list : by_vertex)
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) { return g.darts_[a].id < g.darts_[b].id; });
  for (const auto& [vid, ids] : desc.orderings) {
    auto& list = by_vertex.at(vertex(vid));
    std::vector<std::size_t> pinned;
    for (const auto& id : ids) pinned.push_back(g.dart_index(id));
    list = std::move(pinned);
  }
  g.set_ordering(std::move(by_vertex));
  return g;
}

}  // namespace gkm
