// Acceptance gate: one PASS/FAIL line per criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gkm/gkm.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::size_t dart_between(const OrientedGraph& g, const std::string& a, const std::string& b) {
  for (std::size_t d : g.out_darts(g.vertex_index(a)))
    if (g.vertex_id(g.target(d)) == b) return d;
  throw Error(ErrorCode::UnknownId, a + " -> " + b);
}

// Fixtures plus 100 randomized valid projections of the projective graphs
// (n = m gives random unimodular relabelings).
struct Corpus {
  std::vector<std::pair<std::string, GkmGraph>> fixtures = oracle::fixtures();
  std::vector<std::pair<std::string, GkmGraph>> projections;

  Corpus() {
    std::mt19937 rng(20240601);
    std::size_t made = 0;
    while (projections.size() < 100) {
      const std::size_t m = 2 + made % 4;  // m = 2..5
      const std::size_t n = 2 + rng() % (m - 1);  // n = 2..m; rank 1 can never be pairwise independent
      ++made;
      auto p = oracle::random_valid_projection(gen_projective(m), n, rng);
      if (p) projections.emplace_back("projective-" + std::to_string(m) + "/proj" + std::to_string(made), std::move(*p));
    }
  }
};

void criterion1(Outcome& out) {
  const auto t = Clock::now();
  const auto s6 = gen_s6();
  const auto b = axial_group_basis(s6);
  out.require(b.rank == 2, "rank " + std::to_string(b.rank));
  // Lattice {((x,y,z),(-x,-y,-z)) : x+y+z=0} from the independent rational
  // description: every basis vector in it, and index/rank agree.
  for (const auto& f : b.elements) {
    const auto& p = f.at(s6.graph.vertex_index("p"));
    const auto& q = f.at(s6.graph.vertex_index("q"));
    out.require(p[0] + p[1] + p[2] == 0, "x+y+z=0");
    for (int i = 0; i < 3; ++i) out.require(q[i] == -p[i], "f(q) = -f(p)");
  }
  const auto expected = canonical_lattice({make_vector({1, -1, 0, -1, 1, 0}), make_vector({0, 1, -1, 0, -1, 1})}, 6);
  out.require(b.canonical_matrix == expected, "canonical lattice " + b.canonical_matrix.to_string());
  const double s = seconds_since(t);
  out.require(s < 1.0, "runtime");
  out.detail << "rank 2, lattice " << b.canonical_matrix.to_string() << ", " << s << "s";
}

void criterion2(Outcome& out) {
  const auto t = Clock::now();
  const auto s6 = gen_s6();
  const auto c = invariant_function(s6);
  out.require(c[s6.graph.dart_index("e1")] == make_vector({-2, 1, 1}), "c(e1) = " + to_string(c[s6.graph.dart_index("e1")]));
  for (std::size_t e = 0; e < s6.graph.dart_count(); ++e)
    out.require(permutation_matrix(s6, e) * c[e] == c[s6.graph.reverse(e)], "N_e c(e) = c(rev e) at " + s6.graph.dart_id(e));
  const double s = seconds_since(t);
  out.require(s < 1.0, "runtime");
  out.detail << "c(e1) = (-2,1,1), N_e c(e) = c(rev e) on 6 darts, " << s << "s";
}

void criterion3(Outcome& out) {
  const auto t = Clock::now();
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto g = gen_grassmannian(n);
    const auto r = axial_group_basis(g).rank;
    out.require(r == n + 1, "n=" + std::to_string(n) + " rank " + std::to_string(r));
    out.detail << "n=" << n << ":" << r << " ";
  }
  const double s = seconds_since(t);
  out.require(s < 30.0, "runtime");
  out.detail << s << "s";
}

void criterion4(Outcome& out) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = gen_grassmannian(n);
    const auto& graph = g.graph;
    for (std::size_t e = 0; e < graph.dart_count(); ++e) {
      const auto s = detail::describe_subset_dart(graph, e);  // {i,j} -> {i,k}
      for (std::size_t from : graph.out_darts(graph.source(e))) {
        const auto f = detail::describe_subset_dart(graph, from);
        long expected;
        if (from == e) expected = -2;
        else if (f.kept == s.kept) expected = -1;                             // {i,j} -> {i,l}
        else if (f.added == s.added) expected = -1;                           // {i,j} -> {j,k}
        else expected = 0;                                                    // {i,j} -> {j,l}
        out.require(congruence_coefficient(g, e, from) == expected,
                    "n=" + std::to_string(n) + " " + graph.dart_id(e) + " on " + graph.dart_id(from));
        ++checked;
      }
    }
  }
  out.detail << checked << " coefficients";
}

void criterion5(Outcome& out) {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = gen_grassmannian(n);
    const std::size_t top = g.graph.vertex_index(grassmannian_vertex_id(n + 1, n + 2));
    // Check the variable layout at {n+1,n+2} before using it.
    for (std::size_t k = 1; k <= n; ++k) {
      out.require(g.graph.out_darts(top)[k - 1] == dart_between(g.graph, grassmannian_vertex_id(n + 1, n + 2), grassmannian_vertex_id(k, n + 1)),
                  "ordering x_k");
      out.require(g.graph.out_darts(top)[n + k - 1] == dart_between(g.graph, grassmannian_vertex_id(n + 1, n + 2), grassmannian_vertex_id(k, n + 2)),
                  "ordering x_{n+k}");
    }
    for (const auto& f : axial_group_basis(g).elements) {
      const auto& x = f.at(top);
      auto var = [&](std::size_t i) -> const Integer& { return x[i - 1]; };
      for (std::size_t j = 0; j + 2 <= n; ++j) {
        out.require(var(2 * n - j) + var(1) - var(n - j) - var(n + 1) == 0,
                    "n=" + std::to_string(n) + " j=" + std::to_string(j));
        ++checked;
      }
    }
  }
  out.detail << checked << " functional evaluations vanish";
}

void criterion6(Outcome& out, const Corpus& corpus) {
  std::size_t checked = 0;
  auto check = [&](const std::string& name, const GkmGraph& g) {
    const auto r = axial_group_basis(g).rank;
    out.require(g.torus_rank() <= r && r <= g.valence(), name + " rank " + std::to_string(r));
    ++checked;
  };
  for (const auto& [name, g] : corpus.fixtures) check(name, g);
  for (const auto& [name, g] : corpus.projections) check(name, g);
  out.detail << checked << " gkms (" << corpus.projections.size() << " random projections)";
}

void criterion7(Outcome& out, const Corpus& corpus) {
  std::size_t checked = 0;
  auto check = [&](const std::string& name, const GkmGraph& g) {
    AxialGroupOptions full;
    full.method = SolveMethod::FullSystem;
    out.require(axial_group_basis(g).canonical_matrix == axial_group_basis(g, full).canonical_matrix, name);
    ++checked;
  };
  for (const auto& [name, g] : corpus.fixtures) check(name, g);
  for (std::size_t n = 5; n <= 6; ++n) check("grassmannian-" + std::to_string(n), gen_grassmannian(n));
  for (const auto& [name, g] : corpus.projections) check(name, g);
  out.detail << checked << " identical canonical lattices";
}

void criterion8(Outcome& out) {
  const auto original = gen_projective(3);
  // With a_0 = 0 every literal coordinate drop sends the dart 0 -> k to zero;
  // confirm that, then drop the last coordinate of the adapted basis
  // (a_1, a_2, a_3 - a_1 - a_2) instead.
  for (std::size_t k = 0; k < 3; ++k) {
    IntegerMatrix literal(2, 3);
    for (std::size_t r = 0, c = 0; c < 3; ++c)
      if (c != k) literal(r++, c) = 1;
    bool rejected = false;
    try {
      project_axial(original, literal);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::AxiomViolation;
    }
    out.require(rejected, "literal drop of a_" + std::to_string(k + 1) + " should violate the axioms");
  }
  const IntegerMatrix drop{{1, 0, 1}, {0, 1, 1}};
  out.require(generates_full_lattice(drop.transpose()), "adapted drop is onto");
  const auto base = project_axial(original, drop);
  const auto r = extend_axial(base, 3);
  const auto check = verify_extension(base, r.extended);
  out.require(check.is_extension, "verify_extension: " + check.reason);
  for (std::size_t d = 0; d < base.graph.dart_count(); ++d)
    out.require(r.projection * r.extended.label(d) == base.label(d), "pi o alpha~ = alpha at " + base.graph.dart_id(d));
  out.require(invariant_function(r.extended) == invariant_function(base), "invariant functions");
  const auto rb = axial_group_basis(base).rank, re = axial_group_basis(r.extended).rank;
  out.require(rb == re && rb == 3, "ranks " + std::to_string(rb) + " vs " + std::to_string(re));
  out.require(verify_extension(base, original).is_extension, "original extends the projection");
  out.detail << "projected along " << drop.to_string() << " to (3,2), extended back to (3,3), pi = " << r.projection.to_string() << ", rank " << re;
}

void criterion9(Outcome& out) {
  for (std::size_t n = 1; n <= 4; ++n) {
    bool raised = false;
    try {
      extend_axial(gen_grassmannian(n), n + 2);
    } catch (const Error& e) {
      raised = e.code() == ErrorCode::RankExceeded;
    }
    out.require(raised, "n=" + std::to_string(n));
  }
  out.detail << "RankExceeded for n = 1..4";
}

void criterion10(Outcome& out) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = gen_grassmannian(n);
    out.require(infer_connection(g.graph, g.axial) == grassmannian_connection(g.graph), "n=" + std::to_string(n));
  }
  out.detail << "inferred == closed form for n = 1..4";
}

void criterion11(Outcome& out, const Corpus& corpus) {
  std::mt19937 rng(11);
  std::vector<std::pair<std::string, GkmGraph>> pool = corpus.fixtures;
  for (int t = 0; t < 50; ++t) {
    const auto& [name, g] = corpus.fixtures[t % corpus.fixtures.size()];
    pool.emplace_back(name + "/unimodular" + std::to_string(t),
                      oracle::change_weights(g, oracle::random_unimodular(g.torus_rank(), rng)));
  }
  for (const auto& [name, g] : pool) {
    const auto& graph = g.graph;
    out.require(validate_axial(g).ok(), name + " valid");
    const auto basis = axial_group_basis(g);
    // f(p)_e = -f(q)_{rev e} for every element.
    for (const auto& f : basis.elements)
      for (std::size_t e = 0; e < graph.dart_count(); ++e) {
        const std::size_t r = graph.reverse(e);
        out.require(f.at(graph.source(e))[graph.position(e)] == -f.at(graph.source(r))[graph.position(r)], name + " antisymmetry");
      }
    for (std::size_t e = 0; e < graph.dart_count(); ++e) {
      out.require(congruence_coefficient(g, e, e) == -2, name + " c_e(e)");
      out.require(permutation_matrix(g, graph.reverse(e)) * permutation_matrix(g, e) == IntegerMatrix::identity(g.valence()),
                  name + " N_rev = N^-1");
    }
    for (std::size_t p = 0; p < graph.vertex_count(); ++p) {
      AxialGroupOptions options;
      options.base_vertex = p;
      out.require(axial_group_basis(g, options).canonical_matrix == basis.canonical_matrix, name + " base vertex");
    }
    // Ordering independence: shuffle every vertex's out-dart order.
    std::vector<std::vector<std::size_t>> shuffled(graph.vertex_count());
    for (std::size_t p = 0; p < graph.vertex_count(); ++p) {
      shuffled[p].assign(graph.out_darts(p).begin(), graph.out_darts(p).end());
      std::shuffle(shuffled[p].begin(), shuffled[p].end(), rng);
    }
    const GkmGraph reordered{graph.with_ordering(shuffled), g.axial, g.connection};
    out.require(axial_group_basis(reordered).rank == basis.rank, name + " ordering");
  }
  out.detail << pool.size() << " gkms (" << pool.size() - corpus.fixtures.size() << " unimodular weight changes)";
}

}  // namespace

int main() {
  const Corpus corpus;
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, criterion4},
      {5, criterion5},
      {6, [&](Outcome& o) { criterion6(o, corpus); }},
      {7, [&](Outcome& o) { criterion7(o, corpus); }},
      {8, criterion8},
      {9, criterion9},
      {10, criterion10},
      {11, [&](Outcome& o) { criterion11(o, corpus); }},
  };
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    if (!out.pass) ++failures;
    std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << " - " << out.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
