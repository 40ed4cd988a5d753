#pragma once

// The invariant function e -> (c_e(e_{1,i(e)}), ..., c_e(e_{m,i(e)})) and the
// permutation matrices N_e induced by the connection.

#include <cstddef>
#include <vector>

#include "gkm/axial.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

using CongruenceVector = IntVector;

/// sigma with nabla_e(e_{j,i(e)}) = e_{sigma[j],t(e)}.
inline std::vector<std::size_t> connection_permutation(const GkmGraph& gkm, std::size_t e) {
  const auto& g = gkm.graph;
  const auto out = g.out_darts(g.source(e));
  std::vector<std::size_t> sigma(out.size());
  for (std::size_t j = 0; j < out.size(); ++j) sigma[j] = g.position(gkm.connection.apply(e, out[j]));
  return sigma;
}

/// N_e : Z E_{i(e)} -> Z E_{t(e)}, sending basis vector e' to nabla_e(e').
inline IntegerMatrix permutation_matrix(const GkmGraph& gkm, std::size_t e) {
  const auto sigma = connection_permutation(gkm, e);
  IntegerMatrix n(sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) n(sigma[j], j) = 1;
  return n;
}

inline CongruenceVector congruence_vector(const GkmGraph& gkm, std::size_t e) {
  const auto out = gkm.graph.out_darts(gkm.graph.source(e));
  CongruenceVector c(out.size());
  for (std::size_t j = 0; j < out.size(); ++j) c[j] = congruence_coefficient(gkm, e, out[j]);
  return c;
}

/// Congruence vectors for every dart, indexed by dart.
inline std::vector<CongruenceVector> invariant_function(const GkmGraph& gkm) {
  std::vector<CongruenceVector> out;
  out.reserve(gkm.graph.dart_count());
  for (std::size_t e = 0; e < gkm.graph.dart_count(); ++e) out.push_back(congruence_vector(gkm, e));
  return out;
}

}  // namespace gkm
