// Command-line front end. Exit codes: 0 success, 1 domain error, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanoscape/errors.hpp"
#include "fanoscape/grading.hpp"
#include "fanoscape/json_io.hpp"
#include "fanoscape/landscape.hpp"
#include "fanoscape/laurent.hpp"
#include "fanoscape/polytope.hpp"
#include "fanoscape/wps.hpp"

using namespace fanoscape;

namespace {

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json analyze(const LatticePolytope& p) {
  Json j = to_json(p);
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json h;
    h["normal"] = to_json(f.normal);
    h["offset"] = f.offset.get_str();
    facets.push_back(std::move(h));
  }
  j["facets"] = std::move(facets);
  j["lattice_points"] = lattice_points(p).size();
  j["interior_points"] = interior_lattice_points(p).size();
  const bool fano = is_fano(p);
  j["fano"] = fano;
  if (!fano) return j;
  j["reflexive"] = is_reflexive(p);
  j["singularity"] = to_string(singularity_class(p));
  j["normal_form"] = to_json(normal_form(p))["vertices"];
  if (p.dim() == 3) {
    j["genus"] = genus(p);
    j["codimension"] = codimension_estimate(p);
  }
  return j;
}

std::vector<HypersurfaceCandidate> read_candidates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<HypersurfaceCandidate> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(candidate_from_json(parse_json(line)));
    } catch (const ParseError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric and weighted-projective tools for Fano threefolds"};
  app.require_subcommand(1);

  auto* polytope_cmd = app.add_subcommand("polytope", "lattice polytope utilities");
  polytope_cmd->require_subcommand(1);
  auto* analyze_cmd = polytope_cmd->add_subcommand("analyze", "report invariants of a polytope");
  std::string polytope_file;
  analyze_cmd->add_option("file", polytope_file, "polytope JSON")->required();

  auto* period_cmd = app.add_subcommand("period", "classical period of a Laurent polynomial");
  std::string laurent_file;
  std::size_t order = 10;
  period_cmd->add_option("file", laurent_file, "Laurent polynomial JSON")->required();
  period_cmd->add_option("--order", order, "number of coefficients")->check(CLI::PositiveNumber);

  auto* mutate_cmd = app.add_subcommand("mutate", "algebraic mutation of a Laurent polynomial");
  std::string mutate_file, factor_file;
  std::vector<long> weight;
  mutate_cmd->add_option("file", mutate_file, "Laurent polynomial JSON")->required();
  mutate_cmd->add_option("--weight", weight, "grading vector")->required()->delimiter(',');
  mutate_cmd->add_option("--factor", factor_file, "factor Laurent polynomial JSON")->required();

  auto* mirror_cmd = app.add_subcommand("mirror", "Laurent polynomial mirror of a hypersurface");
  std::vector<long> mirror_weights;
  long mirror_degree = 0;
  mirror_cmd->add_option("--weights", mirror_weights, "1,a1,a2,a3,a4")->required()->delimiter(',');
  mirror_cmd->add_option("--degree", mirror_degree, "degree d")->required();

  auto* search_cmd = app.add_subcommand("search95", "search terminal quasismooth hypersurfaces");
  long bound = 66;
  std::string search_out;
  search_cmd->add_option("--bound", bound, "largest weight")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", search_out, "output JSONL (default stdout)");

  auto* landscape_cmd = app.add_subcommand("landscape", "landscape records and figures");
  landscape_cmd->require_subcommand(1);
  auto* plot_cmd = landscape_cmd->add_subcommand("plot", "render records as SVG");
  std::string plot_in, plot_out, plot_kind = "scatter";
  double marker_size = 4.0;
  plot_cmd->add_option("--in", plot_in, "records JSONL")->required();
  plot_cmd->add_option("--kind", plot_kind, "scatter or histogram")
      ->check(CLI::IsMember({"scatter", "histogram"}));
  plot_cmd->add_option("--out", plot_out, "output SVG")->required();
  plot_cmd->add_option("--marker-size", marker_size, "base marker radius");

  auto* build_cmd = landscape_cmd->add_subcommand("build", "turn candidates and polytopes into records");
  std::string build_candidates, build_out;
  std::vector<std::string> build_polytopes;
  build_cmd->add_option("--candidates", build_candidates, "candidate JSONL from search95");
  build_cmd->add_option("--polytope", build_polytopes, "3-dimensional Fano polytope JSON");
  build_cmd->add_option("--out", build_out, "output records JSONL")->required();

  auto* ingest_cmd = landscape_cmd->add_subcommand("ingest", "validate external records");
  std::string ingest_in, ingest_out, ingest_format = "csv";
  ingest_cmd->add_option("--in", ingest_in, "input file")->required();
  ingest_cmd->add_option("--format", ingest_format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  ingest_cmd->add_option("--out", ingest_out, "output records JSONL")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      print(analyze(polytope_from_json(read_json_file(polytope_file))));
    } else if (period_cmd->parsed()) {
      const auto f = laurent_from_json(read_json_file(laurent_file));
      print(to_json(classical_period(f, order).series));
    } else if (mutate_cmd->parsed()) {
      const auto f = laurent_from_json(read_json_file(mutate_file));
      const auto a = laurent_from_json(read_json_file(factor_file));
      LatticeVector w(weight.size());
      for (std::size_t i = 0; i < weight.size(); ++i) w[i] = weight[i];
      print(to_json(algebraic_mutation(f, MutationData(w, a))));
    } else if (mirror_cmd->parsed()) {
      print(to_json(przyjalkowski_mirror(mirror_weights, mirror_degree)));
    } else if (search_cmd->parsed()) {
      std::ostringstream text;
      const auto found = search_famous_95(bound);
      for (const auto& c : found) text << to_json(c).dump() << '\n';
      write_text(search_out, text.str());
      if (!search_out.empty() && search_out != "-")
        std::cout << found.size() << " candidates\n";
    } else if (plot_cmd->parsed()) {
      PlotSpec spec;
      spec.kind = plot_kind == "scatter" ? PlotKind::scatter : PlotKind::histogram;
      spec.marker_size = marker_size;
      spec.output_path = plot_out;
      emit_plot(ingest(plot_in, IngestFormat::jsonl), spec);
    } else if (build_cmd->parsed()) {
      LandscapeStore store;
      if (!build_candidates.empty())
        for (const auto& c : read_candidates(build_candidates)) store.add(record_from_candidate(c));
      for (const auto& path : build_polytopes)
        store.add(record_from_polytope(polytope_from_json(read_json_file(path))));
      save_jsonl(store, build_out);
      std::cout << store.size() << " records\n";
    } else if (ingest_cmd->parsed()) {
      const auto store = ingest(ingest_in, ingest_format == "csv" ? IngestFormat::csv : IngestFormat::jsonl);
      save_jsonl(store, ingest_out);
      std::cout << store.size() << " records\n";
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
