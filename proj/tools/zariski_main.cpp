#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zariski/commands.hpp"

namespace {

using zariski::cli::OutputFormat;

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

OutputFormat to_format(const std::string& format) {
  return format == "json" ? OutputFormat::Json : OutputFormat::Text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zariski decompositions and divisorial-filtration invariants of surface "
               "singularity resolutions"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  bool oracle = false;
  std::string g;
  std::size_t jobs = 1;
  std::string out_dir;

  auto* check = app.add_subcommand("check", "Validate a configuration");
  auto* decompose = app.add_subcommand("decompose", "Zariski decomposition of the divisor");
  auto* oracle_cmd = app.add_subcommand("oracle", "Alias for decompose --oracle");
  auto* classify = app.add_subcommand("classify", "Full classification report");
  auto* fundcycle = app.add_subcommand("fundcycle", "Fundamental cycle of the dual graph");
  auto* batch = app.add_subcommand("batch", "Classify every .json file in a directory");

  for (auto* sub : {check, decompose, oracle_cmd, classify, fundcycle}) {
    sub->add_option("config", path, "Configuration file")->required();
    add_format(sub, format);
  }
  decompose->add_flag("--oracle", oracle, "Cross-check against support enumeration");
  classify->add_option("--g", g, "\"fund\" or a G file (default: the file's G, else fund)");
  batch->add_option("dir", path, "Directory of configuration files")->required();
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  batch->add_option("--out", out_dir, "Report directory (default <dir>/reports)");

  CLI11_PARSE(app, argc, argv);

  namespace cli = zariski::cli;
  if (*check) return cli::cmd_check(path, to_format(format), std::cout, std::cerr);
  if (*decompose) return cli::cmd_decompose(path, oracle, to_format(format), std::cout, std::cerr);
  if (*oracle_cmd) return cli::cmd_decompose(path, true, to_format(format), std::cout, std::cerr);
  if (*classify) {
    const cli::GOption g_option = g.empty() ? cli::GOption{} : cli::GOption{g};
    return cli::cmd_classify(path, g_option, to_format(format), std::cout, std::cerr);
  }
  if (*fundcycle) return cli::cmd_fundcycle(path, to_format(format), std::cout, std::cerr);
  cli::BatchOptions options;
  options.jobs = jobs;
  if (!out_dir.empty()) options.out_dir = out_dir;
  return cli::cmd_batch(path, options, std::cout, std::cerr);
}
