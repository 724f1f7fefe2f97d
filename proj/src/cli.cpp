#include "xcoh/cli.hpp"

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "xcoh/csv.hpp"
#include "xcoh/svg.hpp"
#include "xcoh/verify.hpp"

namespace xcoh {

namespace {

const std::map<std::string, FamilyKind> kFamilyByName = {
    {"mnms", FamilyKind::Mnms},
    {"werner", FamilyKind::Werner},
    {"mems", FamilyKind::Mems},
    {"rho_l", FamilyKind::RhoL},
};

std::vector<EnsembleRecord> family_records(FamilyKind kind, int steps) {
  std::vector<EnsembleRecord> records;
  records.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double eps =
        steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
    records.push_back(make_record(family(kind, eps)));
  }
  return records;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Coherence quantifiers and ensemble experiments for two-qubit "
               "X states"};
  app.require_subcommand(1);

  // sample
  std::uint64_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  bool sample_phases = false;
  unsigned sample_workers = 0;
  std::string sample_out;
  auto* sample = app.add_subcommand(
      "sample", "Generate a random X-state ensemble and write it as CSV");
  sample->add_option("--n", sample_n, "Number of states")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_seed, "Sampler seed")->required();
  sample->add_flag("--phases", sample_phases,
                   "Sample complex coherence phases instead of canonical "
                   "real-nonnegative form");
  sample->add_option("--workers", sample_workers,
                     "Worker threads (0 = hardware concurrency)");
  sample->add_option("--out", sample_out, "Output CSV path")->required();

  // family
  std::string family_name_arg;
  int family_steps = 0;
  std::string family_out;
  auto* family_cmd = app.add_subcommand(
      "family", "Evaluate a named family over an epsilon grid");
  family_cmd
      ->add_option("--name", family_name_arg,
                   "Family: mnms, werner, mems, or rho_l")
      ->required()
      ->check(CLI::IsMember({"mnms", "werner", "mems", "rho_l"}));
  family_cmd->add_option("--steps", family_steps, "Number of grid points")
      ->required()
      ->check(CLI::PositiveNumber);
  family_cmd->add_option("--out", family_out, "Output CSV path")->required();

  // verify
  std::string verify_in;
  std::string verify_report;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check every claim against an ensemble CSV");
  verify_cmd->add_option("--in", verify_in, "Input CSV path")->required();
  verify_cmd->add_option("--report", verify_report, "JSON report path")
      ->required();

  // plot
  std::string plot_x, plot_y, plot_in, plot_out;
  std::vector<std::string> plot_families;
  auto* plot = app.add_subcommand("plot", "Render a scatter plot as SVG");
  plot->add_option("--x", plot_x, "Column for the x axis")->required();
  plot->add_option("--y", plot_y, "Column for the y axis")->required();
  plot->add_option("--in", plot_in, "Input CSV path")->required();
  plot->add_option("--families", plot_families,
                   "Comma-separated overlay families")
      ->delimiter(',');
  plot->add_option("--out", plot_out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sample->parsed()) {
      const auto records = run_ensemble(sample_seed, sample_n, sample_phases,
                                        sample_workers);
      write_csv(std::filesystem::path(sample_out), records);
      return 0;
    }
    if (family_cmd->parsed()) {
      const FamilyKind kind = kFamilyByName.at(family_name_arg);
      write_csv(std::filesystem::path(family_out),
                family_records(kind, family_steps));
      return 0;
    }
    if (verify_cmd->parsed()) {
      const auto records = read_csv(std::filesystem::path(verify_in));
      const VerificationReport report = verify(records);
      std::cout << format_report(report);
      write_report_json(std::filesystem::path(verify_report), report);
      return report.all_pass() ? 0 : 1;
    }
    if (plot->parsed()) {
      FigureSpec spec;
      spec.x_column = plot_x;
      spec.y_column = plot_y;
      for (const auto& name : plot_families) {
        const auto it = kFamilyByName.find(name);
        if (it == kFamilyByName.end())
          throw std::invalid_argument("unknown family '" + name + "'");
        spec.overlays.push_back(it->second);
      }
      const auto records = read_csv(std::filesystem::path(plot_in));
      emit_svg_scatter(spec, records, std::filesystem::path(plot_out));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "xcoh: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("xcoh");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace xcoh
