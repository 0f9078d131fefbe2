// blochcomp command line. Thin shell over the C library: parse arguments,
// read the spec, run one command, print the report, write any artifacts.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "blochcomp/blochcomp.h"

namespace {

struct Args {
  std::string command;
  std::string spec_path;
  std::optional<double> alpha;
  std::optional<double> c;
  std::optional<double> r;
  std::optional<double> r0;
  std::optional<int> kmax;
  std::optional<std::string> out_dir;
};

int fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

std::optional<std::string> read_spec(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string take_error(char* message) {
  std::string out = message ? message : "unknown error";
  bc_string_free(message);
  return out;
}

int write_artifacts(const bc_result* result, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return fail("cannot create output directory " + dir + ": " + ec.message());
  for (int i = 0; i < bc_result_artifact_count(result); ++i) {
    const std::filesystem::path path =
        std::filesystem::path(dir) / bc_result_artifact_name(result, i);
    std::ofstream out(path, std::ios::binary);
    if (!out) return fail("cannot write " + path.string());
    out << bc_result_artifact_data(result, i);
    if (!out) return fail("short write to " + path.string());
    std::cerr << "wrote " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  CLI::App app{"Composition operators on harmonic Bloch spaces of the disk"};
  app.require_subcommand(1);

  for (const char* name : {"classify", "tau-profile", "omega", "closed-range",
                           "seminorm", "net-check"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--spec", args.spec_path, "spec JSON file, or - for stdin")
        ->required();
    sub->add_option("--alpha", args.alpha, "Bloch exponent override (> 0)");
    sub->add_option("--c", args.c, "level-set threshold");
    sub->add_option("--r", args.r, "net radius");
    sub->add_option("--r0", args.r0, "annulus inner radius");
    sub->add_option("--kmax", args.kmax, "search depth override");
    sub->add_option("--out", args.out_dir, "directory for CSV artifacts");
    sub->callback([&args, name] { args.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  const auto spec_text = read_spec(args.spec_path);
  if (!spec_text) return fail("cannot read spec file " + args.spec_path);

  char* message = nullptr;
  bc_document* doc = nullptr;
  if (bc_document_parse(spec_text->c_str(), &doc, &message) != BC_OK)
    return fail(take_error(message));

  bc_options opts;
  bc_options_init(&opts);
  if (args.alpha) { opts.alpha = *args.alpha; opts.has_alpha = 1; }
  if (args.c) { opts.c = *args.c; opts.has_c = 1; }
  if (args.r) { opts.r = *args.r; opts.has_r = 1; }
  if (args.r0) { opts.r0 = *args.r0; opts.has_r0 = 1; }
  if (args.kmax) { opts.kmax = *args.kmax; opts.has_kmax = 1; }

  bc_result* result = nullptr;
  const bc_status status =
      bc_run(doc, args.command.c_str(), &opts, &result, &message);
  bc_document_free(doc);
  if (status != BC_OK) return fail(take_error(message));

  std::fputs(bc_result_text(result), stdout);

  int rc = bc_result_exit_code(result);
  if (args.out_dir) {
    const int write_rc = write_artifacts(result, *args.out_dir);
    if (write_rc != 0) rc = write_rc;
  }
  bc_result_free(result);
  return rc;
}
