// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "fanoscape/errors.hpp"
#include "fanoscape/grading.hpp"
#include "fanoscape/json_io.hpp"
#include "fanoscape/landscape.hpp"
#include "fanoscape/laurent.hpp"
#include "fanoscape/polytope.hpp"
#include "fanoscape/wps.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#ifndef FANOSCAPE_CLI
#error "FANOSCAPE_CLI must name the fanoscape executable"
#endif

using namespace fanoscape;
namespace fs = std::filesystem;

namespace {

using L = LaurentPolynomial;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("fanoscape_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FANOSCAPE_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++n;
  return n;
}

// 1
Outcome famous_95() {
  Outcome o;
  const auto out = work_dir() / "search40.jsonl";
  o.require(run_cli("search95 --bound 40 --out " + out.string()) == 0, "search95 exited nonzero");
  const auto text = slurp(out);
  o.require(count_lines(text) == 95, "CLI returned " + std::to_string(count_lines(text)) + " candidates");
  o.require(text.find("\"weights\":[1,5,6,22,33],\"degree\":66") != std::string::npos,
            "X_66(1,5,6,22,33) missing from CLI output");
  const auto base = search_famous_95(40);
  o.require(base.size() == 95, "library count at bound 40 is " + std::to_string(base.size()));
  for (long bound : {50L, 66L}) {
    const auto more = search_famous_95(bound);
    o.require(more == base, "list changes at bound " + std::to_string(bound));
  }
  return o;
}

// 2
Outcome x66_mirror() {
  Outcome o;
  const auto f = przyjalkowski_mirror({1, 5, 6, 22, 33}, 66);
  const auto p = newton_polytope(f);
  const auto interior = interior_lattice_points(p).size();
  o.require(interior == 43680, "interior points " + std::to_string(interior));
  o.require(interior_point_formula(66) == (66 - 3) * (66 - 2) * (66 - 1) / 6, "formula disagrees");
  o.require(genus(p) == -1, "genus " + std::to_string(genus(p)));
  return o;
}

// 3
Outcome p3_model() {
  Outcome o;
  const auto p3 = fixtures::p3_simplex();
  o.require(genus(p3) == 33, "genus " + std::to_string(genus(p3)));
  o.require(codimension_estimate(p3) == 31, "codimension " + std::to_string(codimension_estimate(p3)));
  const auto hb = hilbert_basis(anticanonical_cone(dual(p3)));
  o.require(hb.elements.size() == 35, "Hilbert basis size " + std::to_string(hb.elements.size()));
  return o;
}

// 4
Outcome cubic_normalization() {
  Outcome o;
  const L x = L::variable(2, 0), y = L::variable(2, 1);
  const L f = L::monomial(LatticeVector{-1, -1}) * (L::constant(2, 1) + x + y).pow(3) - L::constant(2, 6);
  const auto c = classical_period(f, 3).series;
  const auto direct = oracle::constant_terms_direct(f, 3);
  o.require(c[0] == 1, "c0 != 1");
  o.require(c[1] == 0, "c1 != 0");
  o.require(c[2] == direct[2], "c2 differs from direct expansion");
  o.require(f == przyjalkowski_mirror({1, 1, 1}, 3), "mirror construction differs");
  return o;
}

// 5
Outcome h0_obstruction() {
  Outcome o;
  const auto h = hilbert_series_complete_intersection({2, 3, 4, 5, 6, 7}, {12, 14});
  o.require(h.expand(2)[1] == 0, "t^1 coefficient nonzero");
  return o;
}

// 6
Outcome quartic_series_match() {
  Outcome o;
  const auto c = HypersurfaceCandidate::make({1, 1, 1, 1, 1}, 4);
  const auto h = candidate_invariants(c).hilbert_series;
  const auto p = newton_polytope(przyjalkowski_mirror({1, 1, 1, 1, 1}, 4));
  const auto e = ehrhart_series(dual(p), 11);
  const auto expected = h.expand(11);
  o.require(e == expected, "Ehrhart series differs from (1-t^4)/(1-t)^5");
  for (long k = 0; k <= 10; ++k)
    o.require(e[k] == Rational(oracle::dual_dilation_count(p.vertices(), k)),
              "dilation " + std::to_string(k) + " disagrees with brute count");
  return o;
}

// 7
struct MutationCase {
  L f;
  MutationData m;
};

std::vector<MutationCase> mutation_corpus() {
  const L one = L::constant(2, 1), x = L::variable(2, 0), y = L::variable(2, 1);
  const L worked = y + x + L::monomial(LatticeVector{-1, 0}) + L::monomial(LatticeVector{-1, -1}) * (one + x).pow(2);
  std::vector<MutationCase> out;
  out.push_back({worked, MutationData(LatticeVector{0, 1}, one + x)});
  out.push_back({przyjalkowski_mirror({1, 1, 1}, 3),
                 MutationData(LatticeVector{-1, -1}, one + L::monomial(LatticeVector{1, -1}))});

  // Chains of neighbours from a few seeds, deduplicated up to monomial changes.
  const std::vector<L> seeds = {worked, x + y + L::monomial(LatticeVector{-1, -1}),
                                przyjalkowski_mirror({1, 1, 1}, 3)};
  std::set<std::pair<L::Terms, L::Terms>> seen;
  auto key = [](const L& f, const L& g) {
    return std::make_pair(canonical_form(f).terms(), canonical_form(g).terms());
  };
  for (const auto& seed : seeds) {
    std::vector<L> frontier{seed};
    std::size_t taken = 0;
    for (int depth = 0; depth < 2 && taken < 8; ++depth) {
      std::vector<L> next;
      for (const auto& f : frontier)
        for (const auto& nb : mutation_neighbours(f, MutationBounds{3, 1})) {
          if (taken >= 8) break;
          if (!seen.insert(key(f, nb.result)).second) continue;
          out.push_back({f, nb.mutation});
          next.push_back(nb.result);
          ++taken;
        }
      frontier = std::move(next);
    }
  }
  // Threefold cases.
  const L quartic = przyjalkowski_mirror({1, 1, 1, 1, 1}, 4);
  std::size_t taken = 0;
  for (const auto& nb : mutation_neighbours(quartic, MutationBounds{3, 1})) {
    out.push_back({quartic, nb.mutation});
    if (++taken == 4) break;
  }
  return out;
}

Outcome mutation_invariance() {
  Outcome o;
  const auto corpus = mutation_corpus();
  o.require(corpus.size() >= 20, "corpus has only " + std::to_string(corpus.size()) + " pairs");
  std::size_t index = 0;
  for (const auto& [f, m] : corpus) {
    const std::string tag = "pair " + std::to_string(index++);
    const L g = algebraic_mutation(f, m);
    o.require(classical_period(g, 11).series == classical_period(f, 11).series, tag + ": periods differ");
    const auto pf = newton_polytope(f);
    const auto support = m.factor().support();
    const auto q = combinatorial_mutation(pf, m.weight(), support);
    o.require(q == newton_polytope(g), tag + ": combinatorial and algebraic Newton polytopes differ");
    o.require(ehrhart_series(dual(q), 11) == ehrhart_series(dual(pf), 11), tag + ": dual Ehrhart differs");
  }
  std::size_t threefolds = 0;
  for (const auto& c : corpus) threefolds += c.f.num_variables() == 3;
  o.require(threefolds > 0, "no threefold pairs");
  if (o.ok)
    o.detail = std::to_string(corpus.size()) + " pairs, " + std::to_string(threefolds) + " in three variables";
  return o;
}

// 8
Outcome polygons() {
  Outcome o;
  const auto polys = enumerate_fano_polygons(1);
  o.require(polys.size() == 16, "found " + std::to_string(polys.size()) + " classes");
  for (const auto& p : polys) o.require(is_reflexive(p), "non-reflexive polygon");
  o.require(enumerate_fano_polygons(1, default_polygon_search_radius(1) + 2) == polys,
            "list changes in a larger box");
  std::set<LatticePolytope> forms;
  for (const auto& p : polys) forms.insert(normal_form(p));
  o.require(forms.size() == polys.size(), "duplicate normal forms");
  return o;
}

// 9
Outcome oracle_equivalences() {
  Outcome o;
  long violations = 0;
  std::mt19937_64 rng(2024);
  for (std::size_t n : {2u, 3u})
    for (int t = 0; t < 20; ++t) {
      const auto pts = fixtures::random_points(n, 7, n == 2 ? 4 : 3, rng);
      if (lattice_points(convex_hull(pts)) != oracle::lattice_points_brute(pts)) ++violations;
    }
  std::vector<LatticePolytope> fanos{fixtures::p3_simplex(),
                                     fixtures::hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}})};
  for (int t = 0; t < 8; ++t) fanos.push_back(fixtures::random_fano(3, 6, 2, rng));
  for (const auto& p : fanos) {
    const auto hb = hilbert_basis(anticanonical_cone(dual(p))).elements;
    violations += oracle::certify_anticanonical_hilbert_basis(p.vertices(), hb, 3);
  }
  std::vector<LatticePolytope> reflexive = enumerate_fano_polygons(1);
  reflexive.push_back(fixtures::p3_simplex());
  reflexive.push_back(fixtures::hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -3}}));
  reflexive.push_back(newton_polytope(przyjalkowski_mirror({1, 1, 1, 1, 1}, 4)));
  for (const auto& p : reflexive) {
    const auto d = dual(p);
    if (!d.is_integral()) {
      ++violations;
      continue;
    }
    const auto dd = dual(d.to_lattice_polytope());
    if (!dd.is_integral() || dd.to_lattice_polytope() != p) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  return o;
}

// 10
Outcome landscape_pipeline() {
  Outcome o;
  const auto dir = work_dir();
  const auto cands = dir / "cands.jsonl";
  const auto p3 = dir / "p3.json";
  const auto x66 = dir / "x66.json";
  const auto records = dir / "records.jsonl";
  o.require(run_cli("search95 --bound 40 --out " + cands.string()) == 0, "search95 failed");
  write_text(p3, to_json(fixtures::p3_simplex()).dump());
  write_text(x66, to_json(newton_polytope(przyjalkowski_mirror({1, 5, 6, 22, 33}, 66))).dump());
  o.require(run_cli("landscape build --candidates " + cands.string() + " --polytope " + p3.string() +
                    " --polytope " + x66.string() + " --out " + records.string()) == 0,
            "landscape build failed");
  const auto a = dir / "a.svg", b = dir / "b.svg";
  for (const auto& out : {a, b})
    o.require(run_cli("landscape plot --in " + records.string() + " --kind scatter --out " + out.string()) == 0,
              "landscape plot failed");
  const auto svg = slurp(a);
  o.require(!svg.empty() && svg == slurp(b), "SVG output not deterministic");
  o.require(svg.find(">genus<") != std::string::npos && svg.find(">codimension<") != std::string::npos,
            "axis labels missing");
  for (const auto& [g, c] : {std::pair{3, 1}, std::pair{33, 31}, std::pair{-1, 1}}) {
    const std::string marker =
        "data-genus=\"" + std::to_string(g) + "\" data-codimension=\"" + std::to_string(c) + "\"";
    o.require(svg.find(marker) != std::string::npos,
              "no marker at (" + std::to_string(g) + "," + std::to_string(c) + ")");
  }
  o.require(count_lines(slurp(records)) == 97, "expected 97 records");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"95 families at bounds 40, 50, 66", famous_95},
      {"X_66 mirror simplex", x66_mirror},
      {"P^3 anticanonical model", p3_model},
      {"cubic surface mirror normalization", cubic_normalization},
      {"vanishing t^1 coefficient", h0_obstruction},
      {"quartic mirror series match", quartic_series_match},
      {"mutation invariance", mutation_invariance},
      {"16 reflexive polygons", polygons},
      {"oracle equivalences", oracle_equivalences},
      {"landscape pipeline", landscape_pipeline},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << index << " " << name << " (" << timing << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  std::error_code ec;
  fs::remove_all(work_dir(), ec);
  return failures == 0 ? 0 : 1;
}
