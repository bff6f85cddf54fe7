#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "optosteer/errors.hpp"
#include "optosteer/sweep.hpp"

namespace optosteer::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("failed writing '" + path + "'");
}

int emit_sweep(const SweepSpec& spec, const std::string& out_path, const std::string& plot_path,
               std::ostream& err) {
  const auto records = run_sweep(spec);
  write_file(out_path, write_csv(records, spec.outputs));
  if (!plot_path.empty()) write_file(plot_path, plot_script(out_path, spec.swept));

  const auto failed = std::count_if(records.begin(), records.end(),
                                    [](const SweepRecord& r) { return r.status != PointStatus::ok; });
  if (failed > 0) {
    err << "error: " << failed << " of " << records.size() << " grid points failed numerically\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady-state Gaussian steering and entanglement of two mirrors in an "
               "optomechanical ring cavity"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  auto* point = app.add_subcommand("point", "Evaluate one parameter point");
  point->add_option("--config", config_path, "Configuration file");
  point->add_option("--set", overrides, "Override a configuration key (key=value)");

  std::string sweep_config, out_path, plot_path;
  auto* sweep = app.add_subcommand("sweep", "Run the sweep described by a configuration file");
  sweep->add_option("--config", sweep_config, "Configuration file")->required();
  sweep->add_option("--out", out_path, "Output CSV file")->required();
  sweep->add_option("--plot-script", plot_path, "Also write a gnuplot script");

  std::string figure_name;
  auto* figure = app.add_subcommand("figure", "Reproduce a preset dataset");
  figure->add_option("id", figure_name, "fig2a | fig2b | fig3a | fig3b")
      ->required()
      ->check(CLI::IsMember({"fig2a", "fig2b", "fig3a", "fig3b"}));
  figure->add_option("--out", out_path, "Output CSV file")->required();
  figure->add_option("--plot-script", plot_path, "Also write a gnuplot script");

  std::string validate_config;
  auto* validate = app.add_subcommand("validate", "Check a configuration file");
  validate->add_option("--config", validate_config, "Configuration file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (point->parsed()) {
      const std::string text = config_path.empty() ? std::string{} : read_file(config_path);
      const auto spec = parse_config(text, overrides);
      const auto rep = evaluate_point(spec.base);
      out << "g_ab=" << format_number(rep.g_ab) << '\n'
          << "g_ba=" << format_number(rep.g_ba) << '\n'
          << "e_n=" << format_number(rep.e_n) << '\n'
          << "nu=" << format_number(rep.nu) << '\n'
          << "regime=" << to_string(rep.regime) << '\n';
      return kExitOk;
    }
    if (sweep->parsed()) {
      return emit_sweep(parse_config(read_file(sweep_config)), out_path, plot_path, err);
    }
    if (figure->parsed()) {
      return emit_sweep(figure_preset(*parse_figure_id(figure_name)), out_path, plot_path, err);
    }
    if (validate->parsed()) {
      const auto spec = parse_config(read_file(validate_config));
      const auto rep = validate_params(spec.base);
      for (const auto& e : rep.errors) out << "error: " << e << '\n';
      for (const auto& w : rep.warnings) out << "warning: " << w << '\n';
      if (rep.errors.empty() && rep.warnings.empty()) out << "ok\n";
      return rep.ok() ? kExitOk : kExitConfig;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitConfig;
}

}  // namespace optosteer::cli
