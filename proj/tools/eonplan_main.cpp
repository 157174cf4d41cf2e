// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eonplan/errors.hpp"
#include "eonplan/report.hpp"

namespace {

using namespace eonplan;

// Prints to stdout and, when EONPLAN_OUT_DIR is set, also writes the same
// bytes to <dir>/<filename>.
void emit(const std::string& text, const std::string& filename) {
  std::cout << text;
  const char* dir = std::getenv("EONPLAN_OUT_DIR");
  if (!dir || !*dir) return;
  std::filesystem::path path(dir);
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  std::ofstream file(path / filename, std::ios::binary);
  if (!file) {
    throw validation_error("cannot write " + (path / filename).string());
  }
  file << text;
}

std::string render(const RunReport& report, const std::string& format) {
  if (format == "csv") return render_csv(report);
  if (format == "jsonl") return render_jsonl(report);
  return render_markdown(report);
}

void warn_skipped(const RunReport& report) {
  for (const ReportRow& row : report.rows) {
    if (!row.error.empty()) {
      std::cerr << "warning: target " << format_scaled_decimal(row.target_bp, 4)
                << " skipped: " << row.error << '\n';
    }
  }
}

// "0.9" or "a:b:step"; the range walks from a toward b inclusive.
std::vector<int64_t> parse_targets(const std::string& range) {
  std::vector<std::string> parts;
  size_t pos = 0;
  for (;;) {
    size_t colon = range.find(':', pos);
    parts.push_back(range.substr(pos, colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  auto fraction = [&](const std::string& text) {
    int64_t bp = parse_scaled_decimal(text, 4);
    if (bp < 0 || bp > 10000) {
      throw validation_error("target '" + text + "' must lie between 0 and 1");
    }
    return bp;
  };
  if (parts.size() == 1) return {fraction(parts[0])};
  if (parts.size() != 3) {
    throw validation_error("expected --targets <fraction> or a:b:step, got '" + range +
                           "'");
  }
  int64_t from = fraction(parts[0]);
  int64_t to = fraction(parts[1]);
  int64_t step = parse_scaled_decimal(parts[2], 4);
  if (step <= 0) {
    throw validation_error("target step must be positive in '" + range + "'");
  }
  std::vector<int64_t> out;
  if (from >= to) {
    for (int64_t v = from; v >= to; v -= step) out.push_back(v);
  } else {
    for (int64_t v = from; v <= to; v += step) out.push_back(v);
  }
  return out;
}

std::string stem(const std::string& path) {
  std::string s = std::filesystem::path(path).stem().string();
  return s.empty() ? "scenario" : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"survivable elastic optical network planner"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string format = "md";
  std::string targets_arg;
  std::string objective_name;
  std::string config_text;
  bool round_targets = false;
  bool paper = false;

  CLI::App* run = app.add_subcommand("run", "plan a scenario at its own targets");
  run->add_option("scenario", scenario_path, "scenario file")->required();
  run->add_option("--format", format, "md, csv or jsonl")
      ->check(CLI::IsMember({"md", "csv", "jsonl"}));

  CLI::App* sweep =
      app.add_subcommand("sweep", "plan a scenario across a target range");
  sweep->add_option("scenario", scenario_path, "scenario file")->required();
  sweep->add_option("--targets", targets_arg, "fraction or a:b:step range")
      ->required();
  sweep->add_option("--objective", objective_name, "coded-link or network")
      ->check(CLI::IsMember({"coded-link", "network"}));
  sweep->add_option("--format", format, "md, csv or jsonl")
      ->check(CLI::IsMember({"md", "csv", "jsonl"}));
  sweep->add_flag("--round", round_targets,
                  "snap off-grid targets to the nearest attainable sum");

  CLI::App* verify =
      app.add_subcommand("verify", "price one configuration and sweep failures");
  verify->add_option("scenario", scenario_path, "scenario file")->required();
  verify->add_option("--config", config_text, "protected rates, e.g. \"100+125\"")
      ->required();

  CLI::App* tables = app.add_subcommand("tables", "emit the case-study tables");
  tables->add_flag("--paper", paper, "canonical two-demand case study")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      Scenario s = load_scenario(scenario_path);
      RunReport report = run_scenario(s);
      warn_skipped(report);
      emit(render(report, format), stem(scenario_path) + "-run." + format);
    } else if (sweep->parsed()) {
      Scenario s = load_scenario(scenario_path);
      if (!objective_name.empty()) s.objective = parse_objective(objective_name);
      s.round_targets = round_targets;
      std::vector<int64_t> targets = parse_targets(targets_arg);
      RunReport report = run_scenario(s, targets);
      warn_skipped(report);
      bool any_solved = false;
      for (const ReportRow& row : report.rows) {
        if (row.error.empty()) any_solved = true;
      }
      if (!any_solved) {
        throw infeasible_error("no target in the sweep could be solved");
      }
      emit(render(report, format), stem(scenario_path) + "-sweep." + format);
    } else if (verify->parsed()) {
      Scenario s = load_scenario(scenario_path);
      Config config = parse_config_string(s, config_text);
      VerifyReport report = verify_config(s, config);
      emit(render_markdown(report), stem(scenario_path) + "-verify.md");
      if (!report.pass) return 3;
    } else if (tables->parsed()) {
      emit(render_case_study_tables(), "tables.md");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
