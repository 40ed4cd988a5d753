// gkm: command-line front end for GKM graph documents.
//
// Exit status: 0 success, 1 validation failure (or any library error),
// 2 usage error (bad arguments, unreadable files).

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gkm/gkm.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

gkm::GkmGraph load(const std::string& path) { return gkm::to_gkm(gkm::parse_gkm(read_file(path))); }

// "1,0,0;0,1,0" -> 2 x 3 matrix.
gkm::IntegerMatrix parse_matrix(const std::string& text) {
  std::vector<gkm::IntVector> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    gkm::IntVector values;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(" \t"));
      cell.erase(cell.find_last_not_of(" \t") + 1);
      gkm::Integer v;
      if (cell.empty() || v.set_str(cell, 10) != 0) throw UsageError("bad matrix entry '" + cell + "'");
      values.push_back(v);
    }
    if (!rows.empty() && values.size() != rows.front().size()) throw UsageError("matrix rows differ in length");
    rows.push_back(std::move(values));
  }
  if (rows.empty() || rows.front().empty()) throw UsageError("empty matrix");
  return gkm::IntegerMatrix::from_rows(rows, rows.front().size());
}

struct Result {
  int status = kOk;
  std::string out;
  std::string err;
};

// Runs `task` on each file concurrently; prints results in input order.
int for_each_file(const std::vector<std::string>& files, const std::function<Result(const std::string&)>& task) {
  std::vector<std::future<Result>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [&task, f] {
      try {
        return task(f);
      } catch (const UsageError& e) {
        return Result{kUsage, "", f + ": " + e.what() + "\n"};
      } catch (const gkm::Error& e) {
        return Result{kFailed, "", f + ": " + e.what() + "\n"};
      }
    }));
  int status = kOk;
  for (auto& job : jobs) {
    const Result r = job.get();
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    status = std::max(status, r.status);
  }
  return status;
}

std::string header(const std::vector<std::string>& files, const std::string& f) {
  return files.size() > 1 ? "== " + f + "\n" : "";
}

std::string describe_connection(const gkm::GkmGraph& g) {
  std::string out;
  for (std::size_t e = 0; e < g.graph.dart_count(); ++e) {
    out += "along " + g.graph.dart_id(e) + ":";
    for (std::size_t from : g.graph.out_darts(g.graph.source(e)))
      out += " " + g.graph.dart_id(from) + "->" + g.graph.dart_id(g.connection.apply(e, from));
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Axial functions and torus extensions of GKM graphs"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string output, method = "propagate", annotate = "weights", matrix;
  std::size_t target = 0, m = 0, n = 0;
  bool basis = false;
  std::string base_file, candidate_file;
  bool no_connection = false;

  auto* validate = app.add_subcommand("validate", "Check the axial function axioms");
  validate->add_option("files", files, "GKM documents")->required()->check(CLI::ExistingFile);

  auto* connection = app.add_subcommand("connection", "Infer and print the connection");
  connection->add_option("files", files, "GKM documents")->required()->check(CLI::ExistingFile);

  auto* invariant = app.add_subcommand("invariant", "Print the congruence vector of every dart");
  invariant->add_option("files", files, "GKM documents")->required()->check(CLI::ExistingFile);

  auto* rank = app.add_subcommand("rank", "Rank of the group of axial functions");
  rank->add_option("files", files, "GKM documents")->required()->check(CLI::ExistingFile);
  rank->add_option("--method", method, "propagate or full")->check(CLI::IsMember({"propagate", "full"}));
  rank->add_flag("--basis", basis, "Also print a lattice basis");

  auto* extend = app.add_subcommand("extend", "Write the extended GKM document");
  extend->add_option("file", base_file, "GKM document")->required()->check(CLI::ExistingFile);
  extend->add_option("--target", target, "Target torus rank")->required();
  extend->add_option("-o,--output", output, "Output path (default stdout)");

  auto* project = app.add_subcommand("project", "Relabel with a surjection pi");
  project->add_option("file", base_file, "GKM document")->required()->check(CLI::ExistingFile);
  project->add_option("--matrix", matrix, "Rows separated by ';', entries by ','")->required();
  project->add_option("-o,--output", output, "Output path (default stdout)");

  auto* check = app.add_subcommand("check-extension", "Decide whether candidate extends base");
  check->add_option("base", base_file, "Base GKM document")->required()->check(CLI::ExistingFile);
  check->add_option("candidate", candidate_file, "Candidate GKM document")->required()->check(CLI::ExistingFile);

  auto* gen = app.add_subcommand("gen", "Emit a builtin fixture");
  gen->require_subcommand(1);
  auto* gen_projective = gen->add_subcommand("projective", "Complete graph of CP^m");
  gen_projective->add_option("--m", m, "Dimension")->required()->check(CLI::PositiveNumber);
  gen->add_subcommand("s6", "Two-vertex graph of S^6");
  auto* gen_grass = gen->add_subcommand("grassmannian", "Johnson graph J(n+2,2)");
  gen_grass->add_option("--n", n, "Parameter n")->required()->check(CLI::PositiveNumber);
  for (auto* sub : gen->get_subcommands({})) {
    sub->add_option("-o,--output", output, "Output path (default stdout)");
    sub->add_flag("--no-connection", no_connection, "Leave the connection to be inferred");
  }

  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("files", files, "GKM documents")->required()->check(CLI::ExistingFile);
  dot->add_option("--annotate", annotate, "weights, congruence or none")
      ->check(CLI::IsMember({"weights", "congruence", "none"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate)
      return for_each_file(files, [&](const std::string& f) {
        const auto report = gkm::validate_axial(load(f));
        return Result{report.ok() ? kOk : kFailed, header(files, f) + report.to_string(), ""};
      });

    if (*connection)
      return for_each_file(files, [&](const std::string& f) {
        const auto doc = gkm::parse_gkm(read_file(f));
        auto stripped = doc;
        stripped.connection.reset();
        const auto g = gkm::to_gkm(stripped);
        std::string out = header(files, f) + describe_connection(g);
        if (doc.connection && !(gkm::to_gkm(doc).connection == g.connection))
          return Result{kFailed, out, f + ": inferred connection differs from the one in the document\n"};
        return Result{kOk, out, ""};
      });

    if (*invariant)
      return for_each_file(files, [&](const std::string& f) {
        const auto g = load(f);
        const auto c = gkm::invariant_function(g);
        std::string out = header(files, f);
        for (std::size_t e = 0; e < g.graph.dart_count(); ++e) out += g.graph.dart_id(e) + ": " + gkm::to_string(c[e]) + "\n";
        return Result{kOk, out, ""};
      });

    if (*rank)
      return for_each_file(files, [&](const std::string& f) {
        const auto g = load(f);
        gkm::AxialGroupOptions options;
        options.method = method == "full" ? gkm::SolveMethod::FullSystem : gkm::SolveMethod::Propagate;
        const auto b = gkm::axial_group_basis(g, options);
        std::string out = header(files, f);
        out += "rank " + std::to_string(b.rank) + " (valence " + std::to_string(g.valence()) + ", torus rank " +
               std::to_string(g.torus_rank()) + ")\n";
        out += "no effective torus of dimension > " + std::to_string(b.rank) + " extends this axial function\n";
        if (basis)
          for (std::size_t i = 0; i < b.elements.size(); ++i) {
            out += "f" + std::to_string(i + 1) + ":";
            for (std::size_t p = 0; p < g.graph.vertex_count(); ++p)
              out += " " + g.graph.vertex_id(p) + "=" + gkm::to_string(b.elements[i].at(p));
            out += "\n";
          }
        return Result{kOk, out, ""};
      });

    if (*dot)
      return for_each_file(files, [&](const std::string& f) {
        const auto mode = annotate == "none"         ? gkm::DotAnnotation::None
                          : annotate == "congruence" ? gkm::DotAnnotation::Congruence
                                                     : gkm::DotAnnotation::Weights;
        return Result{kOk, gkm::emit_dot(load(f), mode), ""};
      });

    if (*extend) {
      const auto g = load(base_file);
      const auto r = gkm::extend_axial(g, target);
      for (const auto& line : r.log) std::cerr << line << "\n";
      write_output(output, gkm::emit_gkm(gkm::to_document(r.extended)));
      std::cerr << "extended to torus rank " << target << ", projection " << r.projection.to_string() << "\n";
      return kOk;
    }

    if (*project) {
      const auto g = gkm::project_axial(load(base_file), parse_matrix(matrix));
      write_output(output, gkm::emit_gkm(gkm::to_document(g)));
      return kOk;
    }

    if (*check) {
      const auto result = gkm::verify_extension(load(base_file), load(candidate_file));
      if (result.is_extension) {
        std::cout << "is an extension, projection " << result.projection->to_string() << "\n";
        return kOk;
      }
      std::cout << "not an extension: " << result.reason << "\n";
      return kFailed;
    }

    if (*gen) {
      gkm::GkmGraph g = *gen_projective ? gkm::gen_projective(m) : *gen_grass ? gkm::gen_grassmannian(n) : gkm::gen_s6();
      gkm::DocumentOptions options;
      options.include_connection = !no_connection;
      write_output(output, gkm::emit_gkm(gkm::to_document(g, options)));
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gkm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
