// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "polydisc/commands.hpp"

namespace {

using polydisc::cli::CommandOutput;
using polydisc::cli::Format;
using polydisc::cli::RunConfig;

int emit(const CommandOutput& out, const std::string& path) {
  if (path.empty()) {
    std::cout << out.report;
    return out.exit_code;
  }
  std::ofstream f(path, std::ios::binary);
  f << out.report;
  if (!f) {
    std::cerr << "polydisc: cannot write " << path << "\n";
    return polydisc::cli::kExitInvalid;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic functions of commuting contraction tuples"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<double> tol;
  std::string out_path;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};

  app.option_defaults()->always_capture_default();
  app.add_option("--tol", tol, "Structural tolerance for equality checks");
  app.add_option("--degree", cfg.degree, "Truncation or dilation degree N");
  app.add_option("--grid", cfg.grid, "Torus grid points per axis");
  app.add_option("--seed", cfg.seed, "Seed for all random generators");
  app.add_option("--window", cfg.window, "Window margin; enables windowed tuples");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", cfg.format, "Report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("json|csv [json]");
  app.fallthrough();

  std::string tuple_file, points_file, symbol_file, unitary_file;

  auto* classify = app.add_subcommand("classify", "Classify a tuple");
  classify->add_option("tuple", tuple_file, "Tuple JSON file")->required();

  auto* charfn = app.add_subcommand("charfn", "Evaluate the characteristic function");
  charfn->add_option("tuple", tuple_file, "Tuple JSON file")->required();
  charfn->add_option("points", points_file, "Evaluation request JSON file");

  auto* hardy = app.add_subcommand("hardy", "Build the truncated Beurling model of a symbol");
  hardy->add_option("symbol", symbol_file, "Inner symbol JSON file")->required();

  auto* dilate = app.add_subcommand("dilate", "Build and check the Hardy-space dilation");
  dilate->add_option("tuple", tuple_file, "Tuple JSON file")->required();

  auto* coincide = app.add_subcommand("coincide", "Check coincidence under a unitary conjugation");
  coincide->add_option("tuple", tuple_file, "Tuple JSON file")->required();
  coincide->add_option("unitary", unitary_file, "Unitary JSON file")->required();

  app.add_subcommand("suite", "Run the acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return polydisc::cli::kExitInvalid;
  }
  if (tol) cfg.tol.structural = *tol;

  CommandOutput out;
  if (*classify) {
    out = polydisc::cli::cmd_classify(tuple_file, cfg);
  } else if (*charfn) {
    std::optional<std::string> pts;
    if (!points_file.empty()) pts = points_file;
    out = polydisc::cli::cmd_charfn(tuple_file, pts, cfg);
  } else if (*hardy) {
    out = polydisc::cli::cmd_hardy(symbol_file, cfg);
  } else if (*dilate) {
    out = polydisc::cli::cmd_dilate(tuple_file, cfg);
  } else if (*coincide) {
    out = polydisc::cli::cmd_coincide(tuple_file, unitary_file, cfg);
  } else {
    out = polydisc::cli::cmd_suite(cfg);
  }
  return emit(out, out_path);
}
