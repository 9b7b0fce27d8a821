// Command-line driver: generate, analyze, audit, search, render.
//
// Exit codes: 0 success, 1 usage or parse failure, 2 audit assertion
// failure (including a search result breaching a proven bound), 3
// guardrail violation.

#include "envelopes/generators.hpp"
#include "envelopes/io.hpp"
#include "envelopes/render.hpp"
#include "envelopes/search.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace envelopes;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out.good()) throw std::runtime_error("failed while writing '" + path + "'");
}

ArrangementFile load_arrangement(const std::string& path) {
  return parse_arrangement_file(read_file(path));
}

int cmd_gen(const std::string& family, int n, int d, bool d_given, std::uint64_t seed,
            bool seed_given, long long coord_bound, bool coord_bound_given,
            const std::string& epsilon_text, const std::string& out_path) {
  const bool is_random = family == "random";
  if (!is_random && (seed_given || coord_bound_given))
    throw std::invalid_argument("--seed and --coord-bound only apply to --family random");
  if (is_random && !epsilon_text.empty())
    throw std::invalid_argument("--epsilon does not apply to --family random");

  Arrangement arr;
  std::vector<std::string> comments;
  if (family == "paper2d") {
    if (d_given && d != 2) throw std::invalid_argument("--family paper2d is two-dimensional");
    const Rational eps = !epsilon_text.empty() ? parse_rational(epsilon_text)
                         : n >= 4              ? default_epsilon_2d(n)
                                               : Rational(1);
    arr = paper_line_arrangement(n, eps);
    comments = {
        "family paper2d n=" + std::to_string(n) + " epsilon=" + format_rational(eps),
        "h1: the x1 axis (x2 = 0); h2: the x2 axis (x1 = 0)",
        "h_k (k = 3..n-1) through (1+(k-3)*epsilon, 0) and (0, 1-(k-3)*epsilon)",
        "h_n through (2, 0) on the x1 axis and (0, 2+epsilon) on the x2 axis",
    };
  } else if (family == "paper3d") {
    if (d_given && d != 3) throw std::invalid_argument("--family paper3d is three-dimensional");
    const Rational eps = !epsilon_text.empty() ? parse_rational(epsilon_text)
                         : n >= 5              ? default_epsilon_3d(n)
                                               : Rational(1);
    arr = paper_plane_arrangement(n, eps);
    comments = {
        "family paper3d n=" + std::to_string(n) + " epsilon=" + format_rational(eps),
        "h1: x3 = 0; h2: x2 = 0; h3: x1 = 0",
        "h_k (k = 4..n-1) with axis intercepts (1+2(k-4)*epsilon, 1+(k-4)*epsilon, 1-(k-4)*epsilon)",
        "h_n with axis intercepts (3, 2, 3+epsilon)",
    };
  } else if (family == "cyclic3d") {
    if (d_given && d != 3) throw std::invalid_argument("--family cyclic3d is three-dimensional");
    const Rational eps = !epsilon_text.empty() ? parse_rational(epsilon_text)
                         : n >= 4              ? default_epsilon_3d(n + 1)
                                               : Rational(1);
    arr = cyclic_plane_arrangement(n, eps);
    comments = {
        "family cyclic3d n=" + std::to_string(n) + " epsilon=" + format_rational(eps),
        "the first n planes of the (n+1)-plane paper3d construction",
    };
  } else {  // random
    if (!d_given) throw std::invalid_argument("--family random requires --d");
    arr = random_simple_arrangement(d, n, seed, coord_bound);
    comments = {
        "family random d=" + std::to_string(d) + " n=" + std::to_string(n) + " seed=" +
        std::to_string(seed) + " coord-bound=" + std::to_string(coord_bound),
    };
  }
  write_file(out_path, serialize_arrangement(arr, comments));
  std::cout << "wrote " << out_path << " (d=" << arr.dim << ", n=" << arr.size() << ")\n";
  return 0;
}

int cmd_analyze(const std::string& path, const std::string& report_path) {
  const ArrangementFile file = load_arrangement(path);
  enforce_guardrails(file.arrangement);
  const SimplicityVerdict verdict = check_simple(file.arrangement);
  nlohmann::json j;
  if (!verdict.ok()) {
    j = not_simple_report_json(file.arrangement, verdict);
  } else {
    EnvelopeAnalysis analysis(file.arrangement);
    j = analysis_report_json(analysis.report(), check_bounds(analysis));
  }
  const std::string text = j.dump(2) + "\n";
  if (report_path.empty())
    std::cout << text;
  else
    write_file(report_path, text);
  return 0;
}

int cmd_audit(const std::string& path) {
  const ArrangementFile file = load_arrangement(path);
  enforce_guardrails(file.arrangement);
  const SimplicityVerdict verdict = check_simple(file.arrangement);
  if (!verdict.ok()) {
    std::cout << not_simple_report_json(file.arrangement, verdict).dump(2) << "\n";
    std::cerr << "audit failed: arrangement is not simple\n";
    return 2;
  }
  const AuditResult audit = run_audit(file.arrangement);
  std::cout << audit_report_json(audit, file.comments).dump(2) << "\n";
  if (audit.bounds.hypothesis == BoundVerdict::violated) {
    const std::string dump_path = path + ".hypothesis-counterexample";
    write_file(dump_path,
               serialize_arrangement(
                   file.arrangement,
                   {"external facet count " + std::to_string(audit.bounds.facet_count) +
                    " is below the conjectured d*C(n-2,d-1) = " + audit.bounds.hypothesis_bound.str()}));
    std::cerr << "FLAG: external facet count below the conjectured bound; arrangement dumped to "
              << dump_path << "\n";
  }
  if (!audit.passed) {
    std::cerr << "audit failed\n";
    return 2;
  }
  return 0;
}

int cmd_search(int d, int n, std::uint64_t seed, long long iters, long long coord_bound,
               const std::string& start_path, const std::string& out_path) {
  SearchOptions options;
  options.dim = d;
  options.n = n;
  options.seed = seed;
  options.iterations = iters;
  options.coord_bound = coord_bound;
  if (!start_path.empty()) {
    ArrangementFile file = load_arrangement(start_path);
    enforce_guardrails(file.arrangement);
    options.start = std::move(file.arrangement);
  }
  const SearchResult result = minimize_external_facets(options);
  for (const auto& imp : result.trace) {
    write_file(out_path,
               serialize_arrangement(imp.arrangement,
                                     {"external facets: " + std::to_string(imp.count) +
                                      " (iteration " + std::to_string(imp.iteration) + ")"}));
    std::cout << imp.iteration << " " << imp.count << " " << out_path << "\n";
  }
  if (result.below_best_known) {
    const std::string dump_path = out_path + ".counterexample";
    write_file(dump_path,
               serialize_arrangement(result.best,
                                     {"external facets: " + std::to_string(result.best_count) +
                                      "; fewer than 22, the best count known for six planes"}));
    std::cerr << "FLAG: " << result.best_count
              << " external facets for d=3, n=6 beats the best known count of 22; dumped to "
              << dump_path << "\n";
  }
  std::cout << "best " << result.best_count << " " << out_path << "\n";
  return 0;
}

int cmd_render(const std::string& path, const std::string& out_path, bool shade) {
  const ArrangementFile file = load_arrangement(path);
  enforce_guardrails(file.arrangement);
  std::string content;
  if (out_path.ends_with(".svg")) {
    if (file.arrangement.dim != 2)
      throw std::invalid_argument("SVG output needs a d=2 arrangement");
    content = render_svg(file.arrangement, SvgOptions{shade});
  } else if (out_path.ends_with(".off")) {
    if (file.arrangement.dim != 3)
      throw std::invalid_argument("OFF output needs a d=3 arrangement");
    content = render_envelope_off(file.arrangement);
  } else {
    throw std::invalid_argument("unsupported output format: expected a .svg or .off path");
  }
  write_file(out_path, content);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simple line/plane arrangements and their envelopes"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate an arrangement file");
  std::string family;
  int gen_n = 0;
  int gen_d = 0;
  std::uint64_t gen_seed = 1;
  long long gen_bound = 100;
  std::string eps_text, gen_out;
  gen->add_option("--family", family, "paper2d, paper3d, cyclic3d, or random")
      ->required()
      ->check(CLI::IsMember({"paper2d", "paper3d", "cyclic3d", "random"}));
  gen->add_option("--n", gen_n, "number of hyperplanes")->required();
  auto* gen_d_opt = gen->add_option("--d", gen_d, "dimension (required for random)");
  auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "seed (random family)");
  auto* gen_bound_opt =
      gen->add_option("--coord-bound", gen_bound, "integer coordinate bound (random family)");
  gen->add_option("--epsilon", eps_text, "perturbation, a rational like 1/8");
  gen->add_option("-o,--output", gen_out, "output arrangement file")->required();

  auto* analyze = app.add_subcommand("analyze", "report envelope counts and bounds as JSON");
  std::string analyze_path, analyze_report;
  analyze->add_option("file", analyze_path, "arrangement file")->required();
  analyze->add_option("--report", analyze_report, "write the JSON report here instead of stdout");

  auto* audit = app.add_subcommand("audit", "run every structural check; nonzero exit on failure");
  std::string audit_path;
  audit->add_option("file", audit_path, "arrangement file")->required();

  auto* search = app.add_subcommand("search", "randomized descent on the external facet count");
  int search_d = 0;
  int search_n = 0;
  std::uint64_t search_seed = 1;
  long long search_iters = 1000;
  long long search_bound = 100;
  std::string search_start, search_out;
  search->add_option("--d", search_d, "dimension")->required();
  search->add_option("--n", search_n, "number of hyperplanes")->required();
  search->add_option("--seed", search_seed, "seed")->required();
  search->add_option("--iters", search_iters, "iteration budget")->required();
  search->add_option("--coord-bound", search_bound, "integer coordinate bound for moves");
  search->add_option("--start", search_start, "starting arrangement file");
  search->add_option("-o,--output", search_out, "best arrangement file")->required();

  auto* render = app.add_subcommand("render", "draw an arrangement (.svg) or its envelope (.off)");
  std::string render_path, render_out;
  bool shade = false;
  render->add_option("file", render_path, "arrangement file")->required();
  render->add_option("-o,--output", render_out, "output path ending in .svg or .off")->required();
  render->add_flag("--shade", shade, "shade bounded cells (SVG only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed())
      return cmd_gen(family, gen_n, gen_d, gen_d_opt->count() > 0, gen_seed,
                     gen_seed_opt->count() > 0, gen_bound, gen_bound_opt->count() > 0, eps_text,
                     gen_out);
    if (analyze->parsed()) return cmd_analyze(analyze_path, analyze_report);
    if (audit->parsed()) return cmd_audit(audit_path);
    if (search->parsed())
      return cmd_search(search_d, search_n, search_seed, search_iters, search_bound, search_start,
                        search_out);
    if (render->parsed()) return cmd_render(render_path, render_out, shade);
  } catch (const GuardrailError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SearchInvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
