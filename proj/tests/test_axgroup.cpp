#include <gtest/gtest.h>

#include <random>

#include "gkm/gkm.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

AxialGroupBasis solve(const GkmGraph& g, SolveMethod method, bool both = false) {
  AxialGroupOptions options;
  options.method = method;
  options.both_orientations = both;
  return axial_group_basis(g, options);
}

}  // namespace

TEST(AxialGroup, S6Lattice) {
  const auto s6 = gen_s6();
  const auto b = axial_group_basis(s6);
  EXPECT_EQ(b.rank, 2u);
  // {((x,y,z),(-x,-y,-z)) : x+y+z = 0}, generated by these two.
  const IntegerMatrix expected = canonical_lattice(
      {make_vector({1, -1, 0, -1, 1, 0}), make_vector({0, 1, -1, 0, -1, 1})}, 6);
  EXPECT_EQ(b.canonical_matrix, expected);
}

TEST(AxialGroup, S6PropagationRule) {
  const auto s6 = gen_s6();
  const auto& g = s6.graph;
  const std::size_t p = g.vertex_index("p");
  const auto fq = propagate(s6, make_vector({1, 2, -3}), g.out_darts(p)[0]);
  EXPECT_EQ(fq, make_vector({-1, -2, 3}));
}

TEST(AxialGroup, BasisElementsSatisfyRelation) {
  for (const auto& [name, g] : oracle::fixtures()) {
    const auto b = axial_group_basis(g);
    for (const auto& f : b.elements) {
      EXPECT_TRUE(oracle::satisfies_defining_relation(g, f)) << name;
      EXPECT_TRUE(is_axial_element(g, f)) << name;
    }
  }
}

TEST(AxialGroup, RankMatchesRationalNullity) {
  for (const auto& [name, g] : oracle::fixtures())
    EXPECT_EQ(axial_group_basis(g).rank, oracle::rational_axial_rank(g)) << name;
}

TEST(AxialGroup, CanonicalElementsBelong) {
  for (const auto& [name, g] : oracle::fixtures()) {
    const auto b = axial_group_basis(g);
    std::vector<IntVector> lattice;
    for (const auto& f : b.elements) lattice.push_back(f.flatten());
    for (const auto& f : canonical_elements(g)) {
      EXPECT_TRUE(oracle::satisfies_defining_relation(g, f)) << name;
      EXPECT_TRUE(lattice_coordinates(f.flatten(), lattice).has_value()) << name;
    }
  }
}

TEST(AxialGroup, AntisymmetryOfElements) {
  for (const auto& [name, g] : oracle::fixtures())
    for (const auto& f : axial_group_basis(g).elements)
      for (std::size_t e = 0; e < g.graph.dart_count(); ++e) {
        const std::size_t r = g.graph.reverse(e);
        EXPECT_EQ(f.at(g.graph.source(e))[g.graph.position(e)], -f.at(g.graph.source(r))[g.graph.position(r)]) << name;
      }
}

TEST(AxialGroup, MethodsAgree) {
  for (const auto& [name, g] : oracle::fixtures()) {
    const auto a = solve(g, SolveMethod::Propagate);
    EXPECT_EQ(solve(g, SolveMethod::FullSystem).canonical_matrix, a.canonical_matrix) << name;
    EXPECT_EQ(solve(g, SolveMethod::FullSystem, true).canonical_matrix, a.canonical_matrix) << name;
  }
}

TEST(AxialGroup, BaseVertexIndependent) {
  for (const auto& [name, g] : oracle::fixtures()) {
    const auto ref = axial_group_basis(g).canonical_matrix;
    for (std::size_t p = 0; p < g.graph.vertex_count(); ++p) {
      AxialGroupOptions options;
      options.base_vertex = p;
      EXPECT_EQ(axial_group_basis(g, options).canonical_matrix, ref) << name << " base " << p;
    }
  }
}

TEST(AxialGroup, RankBounds) {
  for (const auto& [name, g] : oracle::fixtures()) {
    const auto r = axial_group_basis(g).rank;
    EXPECT_LE(g.torus_rank(), r) << name;
    EXPECT_LE(r, g.valence()) << name;
  }
}

TEST(AxialGroup, UnimodularWeightChangeKeepsLattice) {
  const auto k4 = gen_projective(3);
  std::mt19937 rng(1);
  const auto u = oracle::random_unimodular(3, rng);
  const auto changed = oracle::change_weights(k4, u);
  const auto b = axial_group_basis(changed);
  EXPECT_EQ(b.canonical_matrix, axial_group_basis(k4).canonical_matrix);
}

TEST(AxialGroup, BadBaseVertex) {
  AxialGroupOptions options;
  options.base_vertex = 99;
  EXPECT_THROW(axial_group_basis(gen_s6(), options), Error);
}
