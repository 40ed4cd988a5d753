#pragma once

// The group of axial functions: vertex-indexed vectors f with
//   N_e f(p) - f(q) = f(q)_{rev e} * c(rev e)   for every dart e: p -> q,
// solved exactly as an integer kernel.

#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

#include "gkm/axial.hpp"
#include "gkm/congruence.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

/// f : V -> Z^m, coordinates at each vertex in its out-dart ordering.
struct AxialElement {
  std::vector<IntVector> values;

  const IntVector& at(std::size_t p) const { return values.at(p); }

  IntVector flatten() const {
    IntVector out;
    for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  static AxialElement unflatten(std::span<const Integer> flat, std::size_t vertices, std::size_t m) {
    AxialElement f;
    f.values.reserve(vertices);
    for (std::size_t p = 0; p < vertices; ++p) f.values.emplace_back(flat.begin() + p * m, flat.begin() + (p + 1) * m);
    return f;
  }

  friend bool operator==(const AxialElement&, const AxialElement&) = default;
};

enum class SolveMethod { Propagate, FullSystem };

struct AxialGroupOptions {
  SolveMethod method = SolveMethod::Propagate;
  /// Root of the spanning tree for Propagate; defaults to the smallest vertex id.
  std::optional<std::size_t> base_vertex;
  /// FullSystem only: add the equations of both orientations of each edge.
  bool both_orientations = false;
};

struct AxialGroupBasis {
  std::vector<AxialElement> elements;  ///< rows of canonical_matrix
  std::size_t rank = 0;
  /// Hermite normal form of the flattened elements (|V| * m columns).
  IntegerMatrix canonical_matrix;
  std::size_t base_vertex = 0;
};

/// Per-dart data the solvers need: sigma of nabla_e and c(rev e).
struct DefiningData {
  std::vector<std::vector<std::size_t>> sigma;
  std::vector<CongruenceVector> invariant;

  explicit DefiningData(const GkmGraph& gkm) : invariant(invariant_function(gkm)) {
    sigma.reserve(gkm.graph.dart_count());
    for (std::size_t e = 0; e < gkm.graph.dart_count(); ++e) sigma.push_back(connection_permutation(gkm, e));
  }
};

/// f(q) = N_e f(p) + f(p)_e * c(rev e), the unique value at t(e) compatible
/// with f(p).
inline IntVector propagate(const GkmGraph& gkm, const DefiningData& data, std::span<const Integer> f_p, std::size_t e) {
  const auto& g = gkm.graph;
  const auto& sigma = data.sigma[e];
  const auto& c = data.invariant[g.reverse(e)];
  const Integer& along = f_p[g.position(e)];
  IntVector f_q(f_p.size());
  for (std::size_t j = 0; j < f_p.size(); ++j) f_q[sigma[j]] = f_p[j];
  for (std::size_t i = 0; i < f_q.size(); ++i) f_q[i] += along * c[i];
  return f_q;
}

inline IntVector propagate(const GkmGraph& gkm, std::span<const Integer> f_p, std::size_t e) {
  return propagate(gkm, DefiningData(gkm), f_p, e);
}

/// Whether f satisfies the defining relation along every dart.
inline bool is_axial_element(const GkmGraph& gkm, const DefiningData& data, const AxialElement& f) {
  const auto& g = gkm.graph;
  if (f.values.size() != g.vertex_count()) return false;
  for (std::size_t e = 0; e < g.dart_count(); ++e) {
    const auto& fp = f.at(g.source(e));
    const auto& fq = f.at(g.target(e));
    const auto& sigma = data.sigma[e];
    const auto& c = data.invariant[g.reverse(e)];
    const Integer& coeff = fq[g.position(g.reverse(e))];
    for (std::size_t j = 0; j < fp.size(); ++j) {
      const std::size_t i = sigma[j];
      if (fp[j] - fq[i] != coeff * c[i]) return false;
    }
  }
  return true;
}

inline bool is_axial_element(const GkmGraph& gkm, const AxialElement& f) {
  return is_axial_element(gkm, DefiningData(gkm), f);
}

namespace detail {

inline AxialGroupBasis finish_basis(const GkmGraph& gkm, const std::vector<IntVector>& flat, std::size_t base) {
  const std::size_t m = gkm.valence(), vertices = gkm.graph.vertex_count();
  AxialGroupBasis out;
  out.base_vertex = base;
  out.canonical_matrix = flat.empty() ? IntegerMatrix(0, vertices * m) : canonical_lattice(flat, vertices * m);
  out.rank = out.canonical_matrix.rows();
  for (std::size_t r = 0; r < out.rank; ++r)
    out.elements.push_back(AxialElement::unflatten(out.canonical_matrix.row(r), vertices, m));
  return out;
}

inline AxialGroupBasis solve_by_propagation(const GkmGraph& gkm, const DefiningData& data, std::size_t base) {
  const auto& g = gkm.graph;
  const std::size_t m = g.valence(), vertices = g.vertex_count();
  // transfer[q] * x = f(q) for x = f(base), built along a breadth-first tree.
  std::vector<std::optional<IntegerMatrix>> transfer(vertices);
  std::vector<char> tree_edge(g.dart_count(), 0);
  transfer[base] = IntegerMatrix::identity(m);
  auto push_forward = [&](const IntegerMatrix& tp, std::size_t e) {
    const auto& sigma = data.sigma[e];
    const auto& c = data.invariant[g.reverse(e)];
    const std::size_t along = g.position(e);
    IntegerMatrix tq(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t i = sigma[j];
      for (std::size_t k = 0; k < m; ++k) tq(i, k) = tp(j, k) + c[i] * tp(along, k);
    }
    return tq;
  };
  std::deque<std::size_t> queue{base};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t e : g.out_darts_by_id(p)) {
      const std::size_t q = g.target(e);
      if (transfer[q]) continue;
      transfer[q] = push_forward(*transfer[p], e);
      tree_edge[e] = tree_edge[g.reverse(e)] = 1;
      queue.push_back(q);
    }
  }
  // Every edge off the tree constrains x.
  IntegerMatrix constraints(0, m);
  for (std::size_t e : g.edge_representatives()) {
    if (tree_edge[e]) continue;
    const IntegerMatrix pushed = push_forward(*transfer[g.source(e)], e);
    const IntegerMatrix& tq = *transfer[g.target(e)];
    IntVector row(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) row[k] = pushed(i, k) - tq(i, k);
      if (!is_zero(row)) constraints.append_row(row);
    }
  }
  const auto kernel = constraints.rows() == 0 ? IntegerMatrix::identity(m).row_vectors()
                                              : integer_kernel_basis(constraints);
  std::vector<IntVector> flat;
  for (const auto& x : kernel) {
    IntVector f;
    f.reserve(vertices * m);
    for (std::size_t q = 0; q < vertices; ++q) {
      const IntVector fq = *transfer[q] * x;
      f.insert(f.end(), fq.begin(), fq.end());
    }
    flat.push_back(std::move(f));
  }
  return finish_basis(gkm, flat, base);
}

inline AxialGroupBasis solve_full_system(const GkmGraph& gkm, const DefiningData& data, bool both_orientations) {
  const auto& g = gkm.graph;
  const std::size_t m = g.valence(), vertices = g.vertex_count();
  std::vector<std::size_t> darts = g.edge_representatives();
  if (both_orientations) {
    const std::size_t k = darts.size();
    for (std::size_t i = 0; i < k; ++i) darts.push_back(g.reverse(darts[i]));
  }
  IntegerMatrix system(darts.size() * m, vertices * m);
  std::size_t row = 0;
  for (std::size_t e : darts) {
    const std::size_t p = g.source(e), q = g.target(e), r = g.reverse(e);
    const auto& sigma = data.sigma[e];
    const auto& c = data.invariant[r];
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t i = sigma[j];
      // f(p)_j - f(q)_i - c_i * f(q)_{rev e} = 0
      system(row + i, p * m + j) += 1;
      system(row + i, q * m + i) -= 1;
      system(row + i, q * m + g.position(r)) -= c[i];
    }
    row += m;
  }
  return finish_basis(gkm, integer_kernel_basis(system), g.base_vertex());
}

}  // namespace detail

/// Lattice basis and rank of the group of axial functions.
inline AxialGroupBasis axial_group_basis(const GkmGraph& gkm, const AxialGroupOptions& options = {}) {
  const DefiningData data(gkm);
  if (options.method == SolveMethod::FullSystem) return detail::solve_full_system(gkm, data, options.both_orientations);
  const std::size_t base = options.base_vertex.value_or(gkm.graph.base_vertex());
  if (base >= gkm.graph.vertex_count()) throw Error(ErrorCode::UnknownId, "base vertex out of range");
  return detail::solve_by_propagation(gkm, data, base);
}

/// f_i(p)_j = coefficient of a_i in alpha(e_{j,p}), for i = 1..n. These split
/// alpha and always belong to the group.
inline std::vector<AxialElement> canonical_elements(const GkmGraph& gkm) {
  const auto& g = gkm.graph;
  std::vector<AxialElement> out(gkm.torus_rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].values.resize(g.vertex_count());
    for (std::size_t p = 0; p < g.vertex_count(); ++p)
      for (std::size_t d : g.out_darts(p)) out[i].values[p].push_back(gkm.label(d)[i]);
  }
  return out;
}

}  // namespace gkm
