// Command-line front end: exact traces of polynomial spline paths through
// semi-algebraic regions, LTL checking, scene generation, and plot export.
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polytrace/ltl.hpp"
#include "polytrace/plot.hpp"
#include "polytrace/scene_gen.hpp"
#include "polytrace/scene_io.hpp"
#include "polytrace/trace_gen.hpp"

namespace {

using namespace polytrace;

/// Runs fn, reports its wall time on stderr, and forwards the result.
template <class F>
auto timed(const char* stage, F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto result = fn();
  const std::chrono::duration<double, std::milli> ms =
      std::chrono::steady_clock::now() - start;
  std::cerr << "[time] " << stage << ": " << ms.count() << " ms\n";
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct run_options {
  std::string scene_path;
  std::string formula_path;
  int jobs = 1;
  bool raw = false;
  bool accept_floats = false;
};

bool certify_all(const spline_result& sp) {
  for (const segment_trace& st : sp.segments) {
    if (!certify_trace(st.P, st.V, st.checkpoints)) return false;
  }
  return true;
}

void print_trace_report(const scene& sc, const trajectory_result& res,
                        bool raw) {
  const std::vector<std::string> ids = sc.region_ids();
  const trace_word shown =
      raw ? res.spline.trace : stutter_reduce(res.spline.trace);
  std::cout << "trace=" << format_word(shown, ids) << "\n";
  std::cout << "lasso-prefix=" << format_word(res.word.prefix, ids) << "\n";
  std::cout << "lasso-loop=" << format_word(res.word.loop, ids) << "\n";
}

int run_trace(const run_options& opt) {
  const scene sc = timed("parse", [&] {
    return load_scene(opt.scene_path, opt.accept_floats);
  });
  const trajectory_result res =
      timed("trace", [&] { return trajectory_trace(sc, opt.jobs); });
  const bool cert = timed("certify", [&] { return certify_all(res.spline); });
  print_trace_report(sc, res, opt.raw);
  std::cout << "certificate=" << (cert ? "ok" : "FAIL") << "\n";
  return 0;
}

int run_check(const run_options& opt) {
  const scene sc = timed("parse", [&] {
    return load_scene(opt.scene_path, opt.accept_floats);
  });
  const formula_ptr f = parse_formula(read_file(opt.formula_path));
  const trajectory_result res =
      timed("trace", [&] { return trajectory_trace(sc, opt.jobs); });
  const bool cert = timed("certify", [&] { return certify_all(res.spline); });
  const ltl_verdict verdict = timed("check", [&] {
    return lasso_check(f, res.word, sc.region_ids());
  });
  print_trace_report(sc, res, opt.raw);
  std::cout << "certificate=" << (cert ? "ok" : "FAIL") << "\n";
  std::cout << "verdict=" << (verdict.satisfied ? "satisfied" : "violated")
            << "\n";
  return verdict.satisfied ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact region-transition traces of polynomial spline paths "
      "through semi-algebraic scenes"};
  app.require_subcommand(1);

  run_options opt;
  CLI::App* trace_cmd =
      app.add_subcommand("trace", "Compute the trace of a scene's path");
  trace_cmd->add_option("scene", opt.scene_path, "Scene JSON file")
      ->required();
  trace_cmd->add_option("--jobs", opt.jobs, "Parallel per-segment workers");
  trace_cmd->add_flag("--raw", opt.raw, "Print the unreduced trace");
  trace_cmd->add_flag("--accept-floats", opt.accept_floats,
                      "Convert float literals to exact binary rationals");

  CLI::App* check_cmd = app.add_subcommand(
      "check", "Check the trajectory's lasso word against a formula");
  check_cmd->add_option("scene", opt.scene_path, "Scene JSON file")
      ->required();
  check_cmd->add_option("formula", opt.formula_path, "Formula text file")
      ->required();
  check_cmd->add_option("--jobs", opt.jobs, "Parallel per-segment workers");
  check_cmd->add_flag("--raw", opt.raw, "Print the unreduced trace");
  check_cmd->add_flag("--accept-floats", opt.accept_floats,
                      "Convert float literals to exact binary rationals");

  gen_options gen;
  std::string gen_out;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Generate a random scene deterministically");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--regions", gen.region_count, "Number of regions");
  gen_cmd->add_option("--segments", gen.segment_count,
                      "Number of spline segments");
  const std::map<std::string, degree_profile> profiles{
      {"quadratic", degree_profile::quadratic},
      {"offset8", degree_profile::offset8}};
  gen_cmd
      ->add_option("--profile", gen.profile,
                   "Region shape class: quadratic or offset8")
      ->transform(CLI::CheckedTransformer(profiles, CLI::ignore_case));
  gen_cmd->add_option("output", gen_out,
                      "Output file (stdout when omitted)");

  int samples = 101;
  int digits = 6;
  CLI::App* plot_cmd =
      app.add_subcommand("plot", "Export path samples and letters as CSV");
  plot_cmd->add_option("scene", opt.scene_path, "Scene JSON file")
      ->required();
  plot_cmd->add_option("--samples", samples, "Uniform samples per segment")
      ->check(CLI::Range(2, 1000000));
  plot_cmd->add_option("--digits", digits, "Fractional decimal digits")
      ->check(CLI::Range(0, 1000));
  plot_cmd->add_option("--jobs", opt.jobs, "Parallel per-segment workers");
  plot_cmd->add_flag("--accept-floats", opt.accept_floats,
                     "Convert float literals to exact binary rationals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help prints with code 0; errors exit 2
  }

  try {
    if (*trace_cmd) return run_trace(opt);
    if (*check_cmd) return run_check(opt);
    if (*gen_cmd) {
      const scene sc = generate_scene(gen);
      if (gen_out.empty()) {
        std::cout << scene_to_json(sc);
      } else {
        save_scene(sc, gen_out);
      }
      return 0;
    }
    if (*plot_cmd) {
      const scene sc = load_scene(opt.scene_path, opt.accept_floats);
      std::cout << plot_csv(sc, samples, digits, opt.jobs);
      return 0;
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
