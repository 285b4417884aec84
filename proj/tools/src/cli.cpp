#include "slopepoly/app/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "slopepoly/app/family.hpp"
#include "slopepoly/app/report.hpp"
#include "slopepoly/app/svg.hpp"
#include "slopepoly/app/sweep.hpp"

namespace slopepoly::app {

namespace {

struct GlobalFlags {
  bool json = false;
  double tol_scale = 1.0;

  Tolerances tolerances() const { return Tolerances{}.scaled(tol_scale); }
};

int exit_for(const std::vector<std::string>& failed_checks) {
  return failed_checks.empty() ? kExitOk : kExitPropertyViolation;
}

int slopes_analyze(const std::string& path, const GlobalFlags& flags, std::ostream& out) {
  const SlopesReport rep = analyze_slopes(parse_slopes_input(read_json_file(path)), flags.tolerances());
  out << (flags.json ? dump(nlohmann::json(rep)) : format_text(rep));
  return exit_for(rep.failed_checks);
}

int cyclic_analyze(const std::string& path, const GlobalFlags& flags, std::ostream& out) {
  const CyclicReport rep = analyze_cyclic(parse_cyclic_input(read_json_file(path)), flags.tolerances());
  out << (flags.json ? dump(nlohmann::json(rep)) : format_text(rep));
  return exit_for(rep.failed_checks);
}

int family(const std::string& path, std::size_t steps, const GlobalFlags& flags, std::ostream& out) {
  const FamilyTable table = run_family(parse_family_input(read_json_file(path)), steps, flags.tolerances());
  out << (flags.json ? dump(to_json(table)) : format_text(table));
  return kExitOk;
}

int render(const std::string& path, const std::string& output, const GlobalFlags& flags, std::ostream& out) {
  const std::string svg = render_svg(read_json_file(path), flags.tolerances());
  std::ofstream file(output);
  if (!file) throw InputError("cannot write '" + output + "'");
  file << svg;
  if (!file.flush()) throw InputError("cannot write '" + output + "'");
  if (flags.json) {
    out << dump({{"output", output}, {"bytes", svg.size()}});
  } else {
    out << "wrote " << output << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Configuration spaces of polygons with fixed slopes or fixed side lengths"};
  app.name("slopepoly");
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Machine-readable JSON output");
  app.add_option("--tol-scale", flags.tol_scale, "Multiply every tolerance by this factor")
      ->check(CLI::PositiveNumber);

  std::string file;
  auto* slopes = app.add_subcommand("slopes", "Slope-system analysis");
  slopes->require_subcommand(1);
  auto* slopes_analyze_cmd = slopes->add_subcommand("analyze", "Analyze {\"angles_deg\": [...]}");
  slopes_analyze_cmd->add_option("file", file, "Slopes JSON file")->required();

  auto* cyclic = app.add_subcommand("cyclic", "Cyclic-polygon analysis");
  cyclic->require_subcommand(1);
  auto* cyclic_analyze_cmd = cyclic->add_subcommand("analyze", "Analyze {\"radius\": R, \"phis_deg\": [...]}");
  cyclic_analyze_cmd->add_option("file", file, "Cyclic JSON file")->required();

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Randomized invariant sweep");
  sweep->add_option("--seed", sweep_opts.seed, "Generator seed")->capture_default_str();
  sweep->add_option("--trials", sweep_opts.trials, "Number of trials")->capture_default_str();
  sweep->add_option("--n-min", sweep_opts.n_min, "Smallest polygon size")->capture_default_str()->check(
      CLI::Range(3, 1000));
  sweep->add_option("--n-max", sweep_opts.n_max, "Largest polygon size")->capture_default_str()->check(
      CLI::Range(3, 1000));
  sweep->add_option("--threads", sweep_opts.threads, "Worker threads")->capture_default_str()->check(
      CLI::Range(1, 256));

  std::size_t steps = 20;
  auto* family_cmd = app.add_subcommand("family", "One-parameter slope family");
  family_cmd->add_option("file", file, "{\"from\": {...}, \"to\": {...}}")->required();
  family_cmd->add_option("--steps", steps, "Number of intervals")->capture_default_str()->check(
      CLI::PositiveNumber);

  std::string output;
  auto* render_cmd = app.add_subcommand("render", "Write an SVG figure");
  render_cmd->add_option("file", file, "Slopes or cyclic JSON file")->required();
  render_cmd->add_option("-o,--output", output, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*slopes_analyze_cmd) return slopes_analyze(file, flags, out);
    if (*cyclic_analyze_cmd) return cyclic_analyze(file, flags, out);
    if (*family_cmd) return family(file, steps, flags, out);
    if (*render_cmd) return render(file, output, flags, out);
    if (*sweep) {
      if (sweep_opts.n_max < sweep_opts.n_min) throw InputError("--n-max must be at least --n-min");
      sweep_opts.tol = flags.tolerances();
      const SweepSummary summary = run_sweep(sweep_opts);
      out << (flags.json ? dump(to_json(summary)) : format_text(summary));
      return summary.ok() ? kExitOk : kExitPropertyViolation;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitInputError : kExitPropertyViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitPropertyViolation;
  }
  return kExitInputError;
}

}  // namespace slopepoly::app
