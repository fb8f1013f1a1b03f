// equideform <command> --input <file> [--convention paper|classical]
//            [--format json|csv|text] [--max-order N] [--degree n]

#include "equideform/cli.hpp"
#include "equideform/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

using namespace equideform;

int main(int argc, char **argv) {
  CLI::App app{"Covariant dimension counts for curves with automorphisms"};
  app.set_version_flag("--version", std::string(cli::kToolVersion));
  app.require_subcommand(1, 1);

  std::string input, catalog, convention = "paper", format = "json", scope = "fast";
  std::optional<std::size_t> max_order, degree;

  const std::map<std::string, std::string> commands{
      {"dim-im-alpha", "dim im(alpha) of a cover"},
      {"ordinary-covariants", "full covariants report for an ordinary cover"},
      {"homology", "group homology dimensions of a module"},
      {"psi-report", "ranks of psi1 and psi2 for the decomposition groups of a cover"},
      {"verify", "run the self-verification suite"}};

  for (const auto &[name, help] : commands) {
    auto *sub = app.add_subcommand(name, help);
    if (name != "verify") sub->add_option("--input,-i", input, "input JSON document")->required();
    sub->add_option("--convention", convention, "dim im(alpha) convention")
        ->check(CLI::IsMember({"paper", "classical"}));
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--max-order", max_order, "largest accepted group order")->check(CLI::PositiveNumber);
    sub->add_option("--degree", degree, "single homology degree (0-2)")->check(CLI::Range(0, 2));
    sub->add_option("--catalog", catalog, "group catalog JSON replacing the built-in one");
    if (name == "verify")
      sub->add_option("--scope", scope, "verification scope")->check(CLI::IsMember({"fast", "full"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitMalformed;
  }

  cli::JobSpec job;
  job.command = *cli::parse_command(app.get_subcommands().front()->get_name());
  job.input_path = input;
  if (!catalog.empty()) job.catalog_path = catalog;
  job.convention = convention == "paper" ? ImAlphaConvention::PaperCeilingFromE1
                                         : ImAlphaConvention::ClassicalFloorFromE0;
  job.format = format == "json" ? cli::Format::Json : format == "csv" ? cli::Format::Csv : cli::Format::Text;
  job.degree = degree;
  job.scope = scope == "full" ? VerifyScope::Full : VerifyScope::Fast;
  try {
    cli::resolve_max_order(job, max_order, std::getenv(cli::kMaxOrderEnv));
  } catch (const Error &e) {
    std::cerr << cli::kToolName << ": error: " << e.what() << "\n";
    return cli::kExitMalformed;
  }
  return cli::run_job(job, std::cout, std::cerr);
}
