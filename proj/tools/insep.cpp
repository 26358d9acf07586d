#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "insep/job.hpp"

#ifndef INSEP_DEFAULT_CATALOG
#define INSEP_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace {

using insep::cli::json;

// Exit codes: 0 every task passed, 1 some task failed, 2 the input did not validate.
int emit(const json& report) {
  std::cout << insep::cli::dump(report);
  return report["ok"].get<bool>() ? 0 : 1;
}

json parse_field_option(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw insep::cli::ValidationError(std::string("--field: ") + e.what());
  }
}

json single_task_job(const std::string& field, json task) {
  return {{"field", parse_field_option(field)}, {"tasks", json::array({std::move(task)})}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inseparability invariants and p-Fermat hypersurfaces"};
  app.require_subcommand(1);

  insep::cli::RunOptions options;
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", options.jobs, "worker threads")->check(CLI::Range(1, 256));
    cmd->add_flag("--fail-fast", options.fail_fast, "skip remaining tasks after the first failure");
  };

  std::string job_path;
  auto* run = app.add_subcommand("run", "run a job file ('-' reads stdin)");
  run->add_option("job", job_path, "job JSON")->required();
  add_run_flags(run);

  std::string catalog_path = INSEP_DEFAULT_CATALOG;
  auto* verify = app.add_subcommand("verify-all", "run every catalog entry");
  verify->add_option("--catalog", catalog_path, "catalog JSON");
  add_run_flags(verify);

  std::string field;
  std::vector<std::string> exprs;
  auto* pdeg = app.add_subcommand("pdegree", "p-degree of K^p(exprs) over K^p");
  pdeg->add_option("--field", field, "{\"p\": .., \"vars\": [..]}")->required();
  pdeg->add_option("exprs", exprs, "generators");

  std::vector<std::string> lambda;
  auto* cls = app.add_subcommand("classify", "classify the p-Fermat hypersurface with coefficients lambda");
  cls->add_option("--field", field, "{\"p\": .., \"vars\": [..]}")->required();
  cls->add_option("--lambda", lambda, "coefficients lambda_0 .. lambda_n")->required()->expected(2, 8);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      json spec;
      if (job_path == "-") {
        try {
          spec = json::parse(std::cin);
        } catch (const json::parse_error& e) {
          throw insep::cli::ValidationError(std::string("stdin: ") + e.what());
        }
      } else {
        spec = insep::cli::load_json_file(job_path);
        options.base_dir = std::filesystem::path(job_path).parent_path();
        if (options.base_dir.empty()) options.base_dir = ".";
      }
      return emit(insep::cli::run_job(spec, options));
    }
    if (*verify) return emit(insep::cli::verify_all(insep::cli::load_json_file(catalog_path), options));
    if (*pdeg) return emit(insep::cli::run_job(single_task_job(field, {{"kind", "pdegree"}, {"gens", exprs}})));
    if (*cls) return emit(insep::cli::run_job(single_task_job(field, {{"kind", "classify"}, {"lambda", lambda}})));
  } catch (const insep::cli::ValidationError& e) {
    std::cerr << "insep: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "insep: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
