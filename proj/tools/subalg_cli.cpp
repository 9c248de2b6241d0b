// Command-line front end; links only the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "subalg.h"

int main(int argc, char** argv) {
  CLI::App app{"Subalgebra bases, subalgebra-ideal bases and syzygies over exact arithmetic"};
  app.set_version_flag("--version", subalg_version());
  app.require_subcommand(1);

  std::string file;
  std::string poly;
  bool json = false, trail = false, certificates = false;
  int max_passes = 0;

  auto add_common = [&](CLI::App* cmd, bool with_poly) {
    cmd->add_option("file", file, "problem file")->required();
    cmd->add_flag("--json", json, "emit a JSON report");
    cmd->add_flag("--trail", trail, "include the per-pass trail");
    cmd->add_flag("--certificates", certificates, "include certificates");
    cmd->add_option("--max-passes", max_passes, "construction pass cap")->check(CLI::PositiveNumber);
    if (with_poly) cmd->add_option("--poly", poly, "query polynomial")->required();
  };

  add_common(app.add_subcommand("sagbi", "construct a subalgebra basis from [F]"), false);
  add_common(app.add_subcommand("sg", "construct an ideal basis from [G] over [F]"), false);
  add_common(app.add_subcommand("syz", "syzygy generators of [H] over [F]"), false);
  add_common(app.add_subcommand("reduce", "reduce --poly via the [F] generators"), true);
  add_common(app.add_subcommand("member", "decide membership of --poly"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  std::string command = app.get_subcommands().front()->get_name();

  subalg_problem* problem = nullptr;
  int rc = subalg_problem_parse_file(file.c_str(), &problem);
  if (rc != SUBALG_OK) {
    std::fprintf(stderr, "error: %s\n", subalg_last_error());
    return 2;
  }

  subalg_options opts{};
  opts.json = json ? 1 : 0;
  opts.trail = trail ? 1 : 0;
  opts.certificates = certificates ? 1 : 0;
  opts.max_passes = max_passes;
  opts.poly = poly.empty() ? nullptr : poly.c_str();

  subalg_result* result = nullptr;
  rc = subalg_run(problem, command.c_str(), &opts, &result);
  if (rc != SUBALG_OK && rc != SUBALG_ITERATION_CAP) {
    std::fprintf(stderr, "error: %s\n", subalg_last_error());
    subalg_problem_free(problem);
    return rc == SUBALG_PARSE_ERROR ? 2 : 1;
  }
  std::fputs(subalg_result_text(result), stdout);
  int status = subalg_result_status(result);
  subalg_result_free(result);
  subalg_problem_free(problem);
  return status;
}
