#pragma once

// Extensions of axial functions: building the maximal extension from elements
// of the group of axial functions, projecting, and checking extension pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gkm/axgroup.hpp"
#include "gkm/axial.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

struct ExtensionResult {
  GkmGraph extended;
  IntegerMatrix projection;  ///< n x l coordinate projection, projection * extended label = original label
  std::vector<AxialElement> chosen_elements;
  ValidationReport report;
  bool saturated = false;  ///< the first choice failed effectiveness and was replaced
  std::vector<std::string> log;
};

/// Label every dart e_{j,p} with (f_1(p)_j, ..., f_l(p)_j).
inline GkmGraph label_with_elements(const GkmGraph& gkm, const std::vector<AxialElement>& elements) {
  const auto& g = gkm.graph;
  std::vector<Weight> labels(g.dart_count(), Weight(elements.size()));
  for (std::size_t d = 0; d < g.dart_count(); ++d)
    for (std::size_t i = 0; i < elements.size(); ++i) labels[d][i] = elements[i].at(g.source(d))[g.position(d)];
  return GkmGraph{g, AxialFunction(elements.size(), std::move(labels)), gkm.connection};
}

inline IntegerMatrix coordinate_projection(std::size_t n, std::size_t l) {
  IntegerMatrix pi(n, l);
  for (std::size_t i = 0; i < n; ++i) pi(i, i) = 1;
  return pi;
}

namespace detail {

inline std::string first_witness(const ValidationReport& report) {
  for (const auto& a : report.axioms)
    if (!a.witnesses.empty()) return a.witnesses.front();
  return {};
}

}  // namespace detail

/// Extended axial function into Z^target_rank whose first n coordinates are
/// the original labels. Throws RankExceeded when target_rank exceeds the rank
/// of the group of axial functions.
inline ExtensionResult extend_axial(const GkmGraph& gkm, std::size_t target_rank) {
  const std::size_t n = gkm.torus_rank();
  if (target_rank < n)
    throw Error(ErrorCode::DimensionMismatch,
                "target rank " + std::to_string(target_rank) + " is below torus rank " + std::to_string(n));
  const AxialGroupBasis basis = axial_group_basis(gkm);
  if (target_rank > basis.rank)
    throw Error(ErrorCode::RankExceeded, "target rank " + std::to_string(target_rank) + " exceeds rank " +
                                             std::to_string(basis.rank) + " of the group of axial functions");
  const std::size_t vertices = gkm.graph.vertex_count(), m = gkm.valence(), dim = vertices * m;

  std::vector<IntVector> canonical, lattice;
  for (const auto& f : canonical_elements(gkm)) canonical.push_back(f.flatten());
  for (const auto& f : basis.elements) lattice.push_back(f.flatten());

  ExtensionResult out;
  auto attempt = [&](const std::vector<IntVector>& extra) {
    std::vector<IntVector> chosen = canonical;
    chosen.insert(chosen.end(), extra.begin(), extra.end());
    out.chosen_elements.clear();
    for (const auto& v : chosen) out.chosen_elements.push_back(AxialElement::unflatten(v, vertices, m));
    out.extended = label_with_elements(gkm, out.chosen_elements);
    out.report = validate_axial(out.extended);
    return chosen;
  };

  const LatticeCompletion completion = complete_inside_lattice(canonical, lattice);
  std::vector<IntVector> extra(completion.completion.begin(), completion.completion.begin() + (target_rank - n));
  auto chosen = attempt(extra);

  if (!out.report[Axiom::Effectiveness].passed()) {
    out.log.push_back("first choice not effective (" + detail::first_witness(out.report) +
                      "); retrying with the saturation of its span");
    out.saturated = true;
    extra = extend_to_basis(canonical, saturate(chosen, dim));
    attempt(extra);
    if (!out.report[Axiom::Effectiveness].passed())
      throw Error(ErrorCode::EffectivenessUnachievable, out.report[Axiom::Effectiveness].witnesses.front());
  }
  if (!out.report.ok()) throw Error(ErrorCode::AxiomViolation, detail::first_witness(out.report));
  out.projection = coordinate_projection(n, target_rank);
  return out;
}

/// Relabels with pi * alpha, keeping graph and connection. pi must map onto
/// Z^rows; throws NotSurjective or AxiomViolation.
inline GkmGraph project_axial(const GkmGraph& gkm, const IntegerMatrix& pi) {
  if (pi.cols() != gkm.torus_rank())
    throw Error(ErrorCode::DimensionMismatch, "projection has " + std::to_string(pi.cols()) + " columns, torus rank is " +
                                                  std::to_string(gkm.torus_rank()));
  if (!generates_full_lattice(pi.transpose()))
    throw Error(ErrorCode::NotSurjective, "projection " + pi.to_string() + " is not onto Z^" + std::to_string(pi.rows()));
  std::vector<Weight> labels;
  labels.reserve(gkm.graph.dart_count());
  for (const auto& w : gkm.axial.labels()) labels.push_back(pi * w);
  GkmGraph out{gkm.graph, AxialFunction(pi.rows(), std::move(labels)), gkm.connection};
  const auto report = validate_axial(out);
  if (!report.ok()) throw Error(ErrorCode::AxiomViolation, detail::first_witness(report));
  return out;
}

struct ExtensionCheck {
  bool is_extension = false;
  std::optional<IntegerMatrix> projection;  ///< pi with pi * candidate label = base label on every dart
  ValidationReport candidate_report;
  std::string reason;
};

/// Whether `candidate` extends `base`: same graph and connection, candidate
/// satisfies the axioms, and some integer pi carries its labels onto base's.
inline ExtensionCheck verify_extension(const GkmGraph& base, const GkmGraph& candidate) {
  if (!(base.graph == candidate.graph)) throw Error(ErrorCode::GraphMismatch, "graphs or vertex orderings differ");
  ExtensionCheck out;
  out.candidate_report = validate_axial(candidate);
  if (!(base.connection == candidate.connection)) {
    out.reason = "connections differ";
    return out;
  }
  const std::size_t darts = base.graph.dart_count();
  IntegerMatrix a(darts, candidate.torus_rank()), b(darts, base.torus_rank());
  for (std::size_t d = 0; d < darts; ++d) {
    std::copy(candidate.label(d).begin(), candidate.label(d).end(), a.row(d).begin());
    std::copy(base.label(d).begin(), base.label(d).end(), b.row(d).begin());
  }
  auto x = solve_integer(a, b);
  if (!x) {
    out.reason = "no integer projection carries the candidate labels onto the base labels";
    return out;
  }
  out.projection = x->transpose();
  if (!out.candidate_report.ok()) {
    out.reason = "candidate violates the axioms: " + detail::first_witness(out.candidate_report);
    return out;
  }
  out.is_extension = true;
  return out;
}

}  // namespace gkm
