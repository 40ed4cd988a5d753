#pragma once

// Axial functions, connections, the four axioms and connection inference.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/error.hpp"
#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

/// Coefficients of a weight in the fixed basis a_1, ..., a_n of Z^n.
using Weight = IntVector;

/// Dart labeling alpha: E -> Z^n.
class AxialFunction {
 public:
  AxialFunction() = default;
  AxialFunction(std::size_t torus_rank, std::vector<Weight> labels)
      : torus_rank_(torus_rank), labels_(std::move(labels)) {
    for (std::size_t d = 0; d < labels_.size(); ++d)
      if (labels_[d].size() != torus_rank_)
        throw Error(ErrorCode::DimensionMismatch,
                    "label of dart #" + std::to_string(d) + " has length " + std::to_string(labels_[d].size()) +
                        ", torus rank is " + std::to_string(torus_rank_));
  }

  std::size_t torus_rank() const noexcept { return torus_rank_; }
  const Weight& label(std::size_t d) const { return labels_.at(d); }
  const std::vector<Weight>& labels() const noexcept { return labels_; }

  friend bool operator==(const AxialFunction&, const AxialFunction&) = default;

 private:
  std::size_t torus_rank_ = 0;
  std::vector<Weight> labels_;
};

/// The family of bijections nabla_e : E_{i(e)} -> E_{t(e)}, stored per dart e
/// as (e', nabla_e(e')) pairs. Independent of the vertex ordering.
class Connection {
 public:
  Connection() = default;
  explicit Connection(std::size_t dart_count) : maps_(dart_count) {}

  void set(std::size_t e, std::size_t from, std::size_t to) {
    auto& m = maps_.at(e);
    for (auto& [a, b] : m)
      if (a == from) {
        b = to;
        return;
      }
    m.emplace_back(from, to);
  }

  std::optional<std::size_t> find(std::size_t e, std::size_t from) const {
    if (e >= maps_.size()) return std::nullopt;
    for (const auto& [a, b] : maps_[e])
      if (a == from) return b;
    return std::nullopt;
  }

  std::size_t apply(std::size_t e, std::size_t from) const {
    if (auto to = find(e, from)) return *to;
    throw Error(ErrorCode::UnknownId, "connection undefined on dart #" + std::to_string(from) + " along dart #" + std::to_string(e));
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& pairs(std::size_t e) const { return maps_.at(e); }
  std::size_t dart_count() const noexcept { return maps_.size(); }

  friend bool operator==(const Connection& a, const Connection& b) {
    if (a.maps_.size() != b.maps_.size()) return false;
    for (std::size_t e = 0; e < a.maps_.size(); ++e) {
      if (a.maps_[e].size() != b.maps_[e].size()) return false;
      for (const auto& [from, to] : a.maps_[e])
        if (b.find(e, from) != to) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> maps_;
};

/// A labeled graph with its connection.
struct GkmGraph {
  OrientedGraph graph;
  AxialFunction axial;
  Connection connection;

  std::size_t valence() const noexcept { return graph.valence(); }
  std::size_t torus_rank() const noexcept { return axial.torus_rank(); }
  const Weight& label(std::size_t d) const { return axial.label(d); }
};

/// c with diff = c * w, if such an integer exists and w != 0.
inline std::optional<Integer> integer_ratio(const IntVector& diff, const IntVector& w) {
  std::size_t k = 0;
  while (k < w.size() && sgn(w[k]) == 0) ++k;
  if (k == w.size()) return std::nullopt;
  if (!mpz_divisible_p(diff[k].get_mpz_t(), w[k].get_mpz_t())) return std::nullopt;
  Integer c = diff[k] / w[k];
  for (std::size_t i = 0; i < w.size(); ++i)
    if (diff[i] != c * w[i]) return std::nullopt;
  return c;
}

inline IntVector difference(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool linearly_independent(const IntVector& u, const IntVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return true;
  return false;
}

enum class Axiom : std::size_t { Antisymmetry = 0, PairwiseIndependence = 1, Connection = 2, Effectiveness = 3 };

struct AxiomCheck {
  bool checked = false;
  std::vector<std::string> witnesses;  ///< one entry per failure
  bool passed() const noexcept { return checked && witnesses.empty(); }
};

struct ValidationReport {
  std::array<AxiomCheck, 4> axioms;

  const AxiomCheck& operator[](Axiom a) const { return axioms[static_cast<std::size_t>(a)]; }
  AxiomCheck& operator[](Axiom a) { return axioms[static_cast<std::size_t>(a)]; }

  /// All checked axioms hold.
  bool ok() const {
    for (const auto& a : axioms)
      if (a.checked && !a.witnesses.empty()) return false;
    return true;
  }

  std::string to_string() const {
    static constexpr std::array<const char*, 4> names = {
        "axiom (1) antisymmetry", "axiom (2) pairwise independence", "axiom (3) connection", "axiom (4) effectiveness"};
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
      out += names[i];
      out += ": ";
      if (!axioms[i].checked) {
        out += "not checked\n";
        continue;
      }
      out += axioms[i].witnesses.empty() ? "pass\n" : "FAIL\n";
      for (const auto& w : axioms[i].witnesses) out += "  " + w + "\n";
    }
    return out;
  }
};

struct ValidationOptions {
  /// Relax axiom (4) from integer span to rational span.
  bool rational_span = false;
};

namespace detail {

inline void check_connection(const OrientedGraph& g, const AxialFunction& alpha, const Connection& nabla,
                             AxiomCheck& out) {
  if (nabla.dart_count() != g.dart_count()) {
    out.witnesses.push_back("connection covers " + std::to_string(nabla.dart_count()) + " darts, graph has " +
                            std::to_string(g.dart_count()));
    return;
  }
  for (std::size_t e = 0; e < g.dart_count(); ++e) {
    const std::size_t p = g.source(e), q = g.target(e);
    const std::string& name = g.dart_id(e);
    bool complete = true;
    std::vector<char> hit(g.dart_count(), 0);
    for (std::size_t from : g.out_darts(p)) {
      auto to = nabla.find(e, from);
      if (!to || *to >= g.dart_count() || g.source(*to) != q) {
        out.witnesses.push_back("dart " + name + ": no image in E_" + g.vertex_id(q) + " for " + g.dart_id(from));
        complete = false;
        continue;
      }
      if (hit[*to]++) {
        out.witnesses.push_back("dart " + name + ": not injective at " + g.dart_id(*to));
        complete = false;
      }
    }
    if (nabla.pairs(e).size() != g.valence()) {
      out.witnesses.push_back("dart " + name + ": map defined on darts outside E_" + g.vertex_id(p));
      complete = false;
    }
    if (!complete) continue;
    if (nabla.apply(e, e) != g.reverse(e))
      out.witnesses.push_back("dart " + name + ": does not send itself to its reverse");
    const std::size_t r = g.reverse(e);
    for (std::size_t from : g.out_darts(p)) {
      const std::size_t to = nabla.apply(e, from);
      if (nabla.find(r, to) != from)
        out.witnesses.push_back("dart " + name + ": reverse map is not the inverse at " + g.dart_id(from));
      if (!integer_ratio(difference(alpha.label(to), alpha.label(from)), alpha.label(e)))
        out.witnesses.push_back("dart " + name + ": congruence fails for " + g.dart_id(from) + " -> " + g.dart_id(to));
    }
  }
}

}  // namespace detail

/// Checks axioms (1), (2) and (4), and (3) when a connection is supplied.
/// Failures are reported with witnesses, never thrown.
inline ValidationReport validate_axial(const OrientedGraph& g, const AxialFunction& alpha,
                                       const Connection* nabla = nullptr, ValidationOptions options = {}) {
  ValidationReport report;
  if (alpha.labels().size() != g.dart_count()) {
    for (auto& a : report.axioms) {
      a.checked = true;
      a.witnesses.push_back("axial function labels " + std::to_string(alpha.labels().size()) + " darts, graph has " +
                            std::to_string(g.dart_count()));
    }
    return report;
  }
  const std::size_t n = alpha.torus_rank();

  auto& anti = report[Axiom::Antisymmetry];
  anti.checked = true;
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    const std::size_t r = g.reverse(d);
    if (d > r) continue;
    IntVector sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = alpha.label(d)[i] + alpha.label(r)[i];
    if (!is_zero(sum))
      anti.witnesses.push_back("dart " + g.dart_id(d) + ": alpha=" + to_string(alpha.label(d)) + ", reverse " +
                               g.dart_id(r) + ": alpha=" + to_string(alpha.label(r)));
  }

  auto& pairwise = report[Axiom::PairwiseIndependence];
  pairwise.checked = true;
  for (std::size_t p = 0; p < g.vertex_count(); ++p) {
    const auto out = g.out_darts(p);
    for (std::size_t j = 0; j < out.size(); ++j)
      for (std::size_t k = j + 1; k < out.size(); ++k)
        if (!linearly_independent(alpha.label(out[j]), alpha.label(out[k])))
          pairwise.witnesses.push_back("vertex " + g.vertex_id(p) + ": darts " + g.dart_id(out[j]) + ", " +
                                       g.dart_id(out[k]));
  }

  if (nabla) {
    auto& conn = report[Axiom::Connection];
    conn.checked = true;
    detail::check_connection(g, alpha, *nabla, conn);
  }

  auto& eff = report[Axiom::Effectiveness];
  eff.checked = true;
  for (std::size_t p = 0; p < g.vertex_count(); ++p) {
    std::vector<IntVector> rows;
    for (std::size_t d : g.out_darts(p)) rows.push_back(alpha.label(d));
    const IntegerMatrix m = IntegerMatrix::from_rows(rows, n);
    const bool spans = options.rational_span ? rank(m) == n : generates_full_lattice(m);
    if (!spans) {
      std::string factors;
      for (const auto& f : invariant_factors(m)) factors += (factors.empty() ? "" : ",") + f.get_str();
      eff.witnesses.push_back("vertex " + g.vertex_id(p) + ": weights do not span, invariant factors [" + factors + "]");
    }
  }
  return report;
}

inline ValidationReport validate_axial(const GkmGraph& gkm, ValidationOptions options = {}) {
  return validate_axial(gkm.graph, gkm.axial, &gkm.connection, options);
}

/// The unique connection compatible with alpha: nabla_e(e) = reverse(e) and
/// every other e' goes to the one out-dart e'' at t(e) with
/// alpha(e'') - alpha(e') in Z alpha(e). Throws NoMatch or AmbiguousConnection.
inline Connection infer_connection(const OrientedGraph& g, const AxialFunction& alpha) {
  Connection nabla(g.dart_count());
  for (std::size_t e = 0; e < g.dart_count(); ++e) {
    const std::size_t p = g.source(e), q = g.target(e), r = g.reverse(e);
    nabla.set(e, e, r);
    std::vector<char> used(g.dart_count(), 0);
    used[r] = 1;
    for (std::size_t from : g.out_darts(p)) {
      if (from == e) continue;
      std::vector<std::size_t> candidates;
      for (std::size_t to : g.out_darts(q)) {
        if (to == r) continue;
        if (integer_ratio(difference(alpha.label(to), alpha.label(from)), alpha.label(e))) candidates.push_back(to);
      }
      if (candidates.empty())
        throw Error(ErrorCode::NoMatch, "along dart " + g.dart_id(e) + ", out-dart " + g.dart_id(from) + " has no partner");
      if (candidates.size() > 1)
        throw Error(ErrorCode::AmbiguousConnection, "along dart " + g.dart_id(e) + ", out-dart " + g.dart_id(from) +
                                                        " matches both " + g.dart_id(candidates[0]) + " and " +
                                                        g.dart_id(candidates[1]));
      if (used[candidates[0]]++)
        throw Error(ErrorCode::NoMatch, "along dart " + g.dart_id(e) + ", " + g.dart_id(candidates[0]) + " is hit twice");
      nabla.set(e, from, candidates[0]);
    }
  }
  for (std::size_t e = 0; e < g.dart_count(); ++e)
    for (const auto& [from, to] : nabla.pairs(e))
      if (nabla.find(g.reverse(e), to) != from)
        throw Error(ErrorCode::NoMatch, "inferred maps along " + g.dart_id(e) + " and its reverse are not inverse");
  return nabla;
}

/// Bundles a graph and axial function, inferring the connection when none is
/// given. Does not validate.
inline GkmGraph make_gkm(OrientedGraph g, AxialFunction alpha, std::optional<Connection> nabla = std::nullopt) {
  if (alpha.labels().size() != g.dart_count())
    throw Error(ErrorCode::DimensionMismatch, "axial function does not label every dart");
  Connection c = nabla ? std::move(*nabla) : infer_connection(g, alpha);
  return GkmGraph{std::move(g), std::move(alpha), std::move(c)};
}

/// c_e(e') with alpha(nabla_e(e')) - alpha(e') = c_e(e') alpha(e).
inline Integer congruence_coefficient(const GkmGraph& gkm, std::size_t e, std::size_t e_prime) {
  const auto& g = gkm.graph;
  if (g.source(e_prime) != g.source(e))
    throw Error(ErrorCode::UnknownId, "dart " + g.dart_id(e_prime) + " does not leave the source of " + g.dart_id(e));
  const std::size_t image = gkm.connection.apply(e, e_prime);
  const IntVector diff = difference(gkm.label(image), gkm.label(e_prime));
  if (is_zero(diff)) return 0;
  if (auto c = integer_ratio(diff, gkm.label(e))) return *c;
  throw Error(ErrorCode::NotProportional, "alpha(" + g.dart_id(image) + ") - alpha(" + g.dart_id(e_prime) + ") = " +
                                              to_string(diff) + " is not a multiple of alpha(" + g.dart_id(e) + ")");
}

}  // namespace gkm
