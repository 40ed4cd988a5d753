#pragma once

// Builtin fixtures: complete graphs of projective spaces, the (3,2)-type graph
// of S^6 = G_2/SU(3), and Johnson graphs J(n+2,2) of the Grassmannians
// G_2(C^{n+2}).

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gkm/axial.hpp"
#include "gkm/graph.hpp"

namespace gkm {

/// K_{m+1} on vertices 0..m, dart i -> j labeled a_j - a_i with a_0 = 0.
/// An (m,m)-type graph; the connection is inferred.
inline GkmGraph gen_projective(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::DimensionMismatch, "projective graph needs m >= 1");
  GraphDescription desc;
  for (std::size_t i = 0; i <= m; ++i) desc.vertices.push_back(std::to_string(i));
  std::vector<Weight> labels;
  auto weight = [m](std::size_t from, std::size_t to) {
    Weight w(m);
    if (to) w[to - 1] += 1;
    if (from) w[from - 1] -= 1;
    return w;
  };
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      desc.edges.push_back({std::to_string(i) + "-" + std::to_string(j), std::to_string(i), std::to_string(j)});
      labels.push_back(weight(i, j));
      labels.push_back(weight(j, i));
    }
  OrientedGraph g = build_graph(desc);
  return make_gkm(std::move(g), AxialFunction(m, std::move(labels)));
}

/// Two vertices p, q joined by e1, e2, e3 with labels a, b, -a-b, and the
/// connection e_i -> rev e_i, e_j -> rev e_k for {i,j,k} = {1,2,3}.
inline GkmGraph gen_s6() {
  GraphDescription desc;
  desc.vertices = {"p", "q"};
  desc.edges = {{"e1", "p", "q"}, {"e2", "p", "q"}, {"e3", "p", "q"}};
  OrientedGraph g = build_graph(desc);
  const std::vector<Weight> forward = {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})};
  std::vector<Weight> labels(g.dart_count());
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t e = g.dart_index("e" + std::to_string(i + 1));
    labels[e] = forward[i];
    labels[g.reverse(e)] = Weight{-forward[i][0], -forward[i][1]};
  }
  Connection nabla(g.dart_count());
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t e = g.dart_index("e" + std::to_string(i + 1));
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t from = g.dart_index("e" + std::to_string(j + 1));
      const std::size_t k = (i == j) ? i : 3 - i - j;
      const std::size_t to = g.reverse(g.dart_index("e" + std::to_string(k + 1)));
      nabla.set(e, from, to);
      nabla.set(g.reverse(e), to, from);
    }
  }
  return GkmGraph{std::move(g), AxialFunction(2, std::move(labels)), std::move(nabla)};
}

inline std::string grassmannian_vertex_id(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

namespace detail {

struct SubsetDart {
  std::size_t kept, removed, added;
};

inline std::pair<std::size_t, std::size_t> parse_pair(const std::string& id) {
  const auto comma = id.find(',');
  return {std::stoul(id.substr(1, comma - 1)), std::stoul(id.substr(comma + 1, id.size() - comma - 2))};
}

inline SubsetDart describe_subset_dart(const OrientedGraph& g, std::size_t d) {
  const auto [a, b] = parse_pair(g.vertex_id(g.source(d)));
  const auto [c, e] = parse_pair(g.vertex_id(g.target(d)));
  const std::size_t kept = (a == c || a == e) ? a : b;
  const std::size_t removed = kept == a ? b : a;
  const std::size_t added = (c == kept) ? e : c;
  return {kept, removed, added};
}

}  // namespace detail

/// The closed-form connection on J(n+2,2): along the dart {i,j} -> {i,k},
///   {i,j}->{i,k} |-> its reverse,   {i,j}->{i,l} |-> {i,k}->{i,l},
///   {i,j}->{j,l} |-> {i,k}->{k,l},  {i,j}->{j,k} |-> {i,k}->{j,k}.
inline Connection grassmannian_connection(const OrientedGraph& g) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> by_move;  // (source, removed, added)
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    const auto s = detail::describe_subset_dart(g, d);
    by_move[{g.source(d), s.removed, s.added}] = d;
  }
  Connection nabla(g.dart_count());
  for (std::size_t e = 0; e < g.dart_count(); ++e) {
    const auto [i, j, k] = detail::describe_subset_dart(g, e);
    const std::size_t target = g.target(e);
    for (std::size_t from : g.out_darts(g.source(e))) {
      const auto s = detail::describe_subset_dart(g, from);
      std::size_t to;
      if (s.removed == j)
        to = s.added == k ? g.reverse(e) : by_move.at({target, k, s.added});
      else
        to = by_move.at({target, i, s.added == k ? j : s.added});
      nabla.set(e, from, to);
    }
  }
  return nabla;
}

/// Johnson graph J(n+2,2) with alpha({i,j}->{i,k}) = a_k - a_j, a_{n+2} = 0,
/// the closed-form connection, and at {i,j} (i<j) the out-dart order: darts
/// keeping i by increasing new element, then darts keeping j likewise.
inline GkmGraph gen_grassmannian(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "Grassmannian graph needs n >= 1");
  const std::size_t top = n + 2;
  GraphDescription desc;
  std::vector<std::pair<std::size_t, std::size_t>> subsets;
  for (std::size_t i = 1; i <= top; ++i)
    for (std::size_t j = i + 1; j <= top; ++j) {
      subsets.emplace_back(i, j);
      desc.vertices.push_back(grassmannian_vertex_id(i, j));
    }
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      const auto [i, j] = subsets[a];
      const auto [k, l] = subsets[b];
      if (i != k && i != l && j != k && j != l) continue;
      const std::string from = grassmannian_vertex_id(i, j), to = grassmannian_vertex_id(k, l);
      desc.edges.push_back({from + "-" + to, from, to});
    }
  OrientedGraph g = build_graph(desc);
  std::vector<std::vector<std::size_t>> ordering(g.vertex_count());
  for (std::size_t p = 0; p < g.vertex_count(); ++p) {
    const std::size_t i = detail::parse_pair(g.vertex_id(p)).first;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> keyed;  // (kept rank, added, dart)
    for (std::size_t d : g.out_darts(p)) {
      const auto s = detail::describe_subset_dart(g, d);
      keyed.emplace_back(s.kept == i ? 0 : 1, s.added, d);
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& key : keyed) ordering[p].push_back(std::get<2>(key));
  }
  g = g.with_ordering(std::move(ordering));

  std::vector<Weight> labels(g.dart_count(), Weight(n + 1));
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    const auto s = detail::describe_subset_dart(g, d);
    if (s.added < top) labels[d][s.added - 1] += 1;
    if (s.removed < top) labels[d][s.removed - 1] -= 1;
  }
  Connection nabla = grassmannian_connection(g);
  return GkmGraph{std::move(g), AxialFunction(n + 1, std::move(labels)), std::move(nabla)};
}

}  // namespace gkm
