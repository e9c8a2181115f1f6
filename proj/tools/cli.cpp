#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "circact/errors.hpp"
#include "circact/hp2.hpp"
#include "circact/localization.hpp"
#include "circact/verifier.hpp"
#include "config_file.hpp"

namespace circact::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson report_json(const AdmissibilityReport& report) {
  ojson checks = ojson::array();
  for (const auto& c : report.checks) {
    checks.push_back(ojson{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return ojson{{"admissible", report.passed}, {"checks", std::move(checks)}};
}

ojson pontryagin_json(const PontryaginReport& r) {
  return ojson{{"unit_sum", r.unit_sum.to_string()},
               {"p1_sum", r.p1_sum.to_string()},
               {"p1_squared", r.p1_squared.to_string()},
               {"p2", r.p2.to_string()},
               {"signature_candidate", r.signature_candidate.to_string()}};
}

ojson match_json(const MatchResult& m) {
  const auto p = m.params.p();
  return ojson{{"family", std::string(to_string(m.family))},
               {"p", {p[0].to_string(), p[1].to_string(), p[2].to_string()}},
               {"doubled", m.params.doubled()},
               {"roles", m.role_permutation},
               {"case", std::string(to_string(m.case_label))}};
}

void print_report(const AdmissibilityReport& report, std::ostream& out) {
  out << "checks:\n";
  for (const auto& c : report.checks) {
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  }
  out << "result: " << (report.passed ? "ADMISSIBLE" : "INADMISSIBLE") << "\n";
}

void print_pontryagin(const PontryaginReport& r, std::ostream& out) {
  out << "pontryagin numbers:\n"
      << "  unit sum             " << r.unit_sum << "\n"
      << "  p1 sum               " << r.p1_sum << "\n"
      << "  p1^2                 " << r.p1_squared << "\n"
      << "  p2                   " << r.p2 << "\n"
      << "  signature candidate  " << r.signature_candidate << "\n";
}

void print_match(const MatchResult& m, std::ostream& out) {
  const auto& r = m.role_permutation;
  out << to_string(m.family) << ", p = " << m.params.p_string() << "\n"
      << "doubled parameters: (" << m.params.doubled()[0] << ", " << m.params.doubled()[1] << ", "
      << m.params.doubled()[2] << ")\n"
      << "roles: q1 = point " << r[0] << ", q2 = point " << r[1] << ", q3 = point " << r[2] << "\n"
      << "case: " << to_string(m.case_label) << "\n";
}

}  // namespace

int cmd_check(const std::filesystem::path& path, bool json, std::ostream& out, std::ostream& err) {
  try {
    const auto data = load_config(path);
    const auto report = admissible(data);
    const auto numbers = pontryagin_report(data);
    if (json) {
      ojson doc{{"configuration", to_json(data)}};
      doc.update(report_json(report));
      doc["pontryagin"] = pontryagin_json(numbers);
      out << doc.dump(2) << "\n";
    } else {
      out << "configuration: " << to_string(data) << "\n";
      print_report(report, out);
      print_pontryagin(numbers, out);
    }
    return report.passed ? kPass : kInadmissible;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
  }
  return kInputError;
}

int cmd_hp2(const Hp2Options& options, std::ostream& out, std::ostream& err) {
  try {
    std::optional<Hp2ActionParams> params;
    if (!options.doubled.empty()) {
      if (!options.k.empty()) throw InvalidParams("give either --k or --doubled, not both");
      if (options.doubled.size() != 3) throw InvalidParams("--doubled takes three integers");
      params.emplace(options.doubled[0], options.doubled[1], options.doubled[2]);
    } else if (!options.k.empty()) {
      if (options.k.size() != 3) throw InvalidParams("--k takes three integers");
      Family family;
      if (options.family == "standard") {
        family = Family::Standard;
      } else if (options.family == "semi" || options.family == "semi-integer") {
        family = Family::SemiInteger;
      } else {
        throw InvalidParams("--family must be standard or semi, got " + options.family);
      }
      params = Hp2ActionParams::from_exponents({options.k[0], options.k[1], options.k[2]}, family);
    } else {
      throw InvalidParams("one of --k or --doubled is required");
    }
    out << dump_config(weights_from_params(*params));
    return kPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_classify(const std::filesystem::path& path, bool json, std::ostream& out, std::ostream& err) {
  try {
    const auto data = load_config(path);
    const auto outcome = classify(data);
    if (json) {
      ojson doc{{"configuration", to_json(data)}};
      doc.update(report_json(outcome.report));
      doc["match"] = outcome.match ? match_json(*outcome.match) : ojson(nullptr);
      out << doc.dump(2) << "\n";
    } else if (outcome.match) {
      print_match(*outcome.match, out);
    } else {
      out << "configuration: " << to_string(data) << "\n";
      print_report(outcome.report, out);
    }
    return outcome.match ? kPass : kInadmissible;
  } catch (const TheoremViolation& e) {
    err << "THEOREM VIOLATION: " << e.what() << "\n";
    return kTheoremViolation;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
  }
  return kInputError;
}

int cmd_search(const SearchOptions& options, bool json, std::ostream& out, std::ostream& err) {
  if (options.bound < 2) {
    err << "error: --bound must be at least 2, got " << options.bound << "\n";
    return kInputError;
  }
  SearchSummary summary;
  try {
    summary = search(options.bound, options.workers);
  } catch (const TheoremViolation& e) {
    err << "THEOREM VIOLATION: " << e.what() << "\n";
    return kTheoremViolation;
  }

  if (options.emit) {
    ojson configs = ojson::array();
    for (const auto& c : summary.admissible_configs) {
      configs.push_back(ojson{{"configuration", to_json(c.data)}, {"match", match_json(c.match)}});
    }
    std::ofstream file(*options.emit);
    if (!file) {
      err << "error: cannot write " << options.emit->string() << "\n";
      return kInputError;
    }
    file << configs.dump(2) << "\n";
  }

  const std::size_t standard = summary.count(Family::Standard);
  const std::size_t semi = summary.count(Family::SemiInteger);
  if (json) {
    ojson doc{{"bound", summary.bound},
              {"pairings_enumerated", summary.pairings_enumerated},
              {"candidates_checked", summary.candidates_checked},
              {"admissible", summary.admissible_configs.size()},
              {"standard", standard},
              {"semi_integer", semi},
              {"generated", summary.generated_count},
              {"case_counts",
               {{"Case1", summary.case_counts.case1},
                {"Case2", summary.case_counts.case2},
                {"Case3", summary.case_counts.case3},
                {"not_applicable", summary.case_counts.not_applicable}}},
              {"case3_b2_check", summary.case3_b2_check},
              {"generated_set_equal", summary.generated_set_equal},
              {"pontryagin_match", summary.pontryagin_match},
              {"verified", summary.verified()}};
    out << doc.dump(2) << "\n";
  } else {
    auto row = [&out](const char* label, const auto& value) {
      out << "  " << std::left << std::setw(30) << label << value << "\n";
    };
    auto yes_no = [](bool b) { return b ? "yes" : "NO"; };
    out << "search summary\n";
    row("bound", summary.bound);
    row("pairings enumerated", summary.pairings_enumerated);
    row("canonical candidates", summary.candidates_checked);
    row("admissible configurations", summary.admissible_configs.size());
    row("  Standard", standard);
    row("  SemiInteger", semi);
    row("HP^2 configurations in bound", summary.generated_count);
    row("Case1 pairings", summary.case_counts.case1);
    row("Case2 pairings", summary.case_counts.case2);
    row("strict Case3 pairings", summary.case_counts.case3);
    row("generated set equal", yes_no(summary.generated_set_equal));
    row("p1^2 = 4 and p2 = 7", yes_no(summary.pontryagin_match));
    out << "verification: " << (summary.verified() ? "PASS" : "FAIL") << "\n";
  }
  return summary.verified() ? kPass : kTheoremViolation;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circle actions with isolated fixed points: localization and HP^2 classification"};
  app.require_subcommand(1);

  bool json = false;
  std::filesystem::path check_path, classify_path;
  Hp2Options hp2;
  SearchOptions search_opts;

  auto* check = app.add_subcommand("check", "Run the admissibility pipeline and Pontryagin report on a file");
  check->add_option("path", check_path, "configuration JSON file")->required();
  check->add_flag("--json", json, "machine-readable output");

  auto* classify_cmd = app.add_subcommand("classify", "Match a configuration to an HP^2 action family");
  classify_cmd->add_option("path", classify_path, "configuration JSON file")->required();
  classify_cmd->add_flag("--json", json, "machine-readable output");

  auto* hp2_cmd = app.add_subcommand("hp2", "Print the fixed-point data of an HP^2 circle action");
  auto* k_opt = hp2_cmd->add_option("--k", hp2.k, "family exponents k1,k2,k3")->delimiter(',')->allow_extra_args(false);
  hp2_cmd->add_option("--family", hp2.family, "standard or semi")->check(CLI::IsMember({"standard", "semi", "semi-integer"}));
  auto* d_opt = hp2_cmd->add_option("--doubled", hp2.doubled, "doubled parameters d1,d2,d3 (d = 2p)")->delimiter(',')->allow_extra_args(false);
  k_opt->excludes(d_opt);
  hp2_cmd->add_flag("--json", json, "accepted for uniformity; output is always JSON");

  auto* search_cmd = app.add_subcommand("search", "Exhaustively verify the HP^2 classification up to a weight bound");
  search_cmd->add_option("--bound", search_opts.bound, "largest weight to enumerate")->required();
  search_cmd->add_option("--emit", search_opts.emit, "write every admissible configuration to this JSON file");
  search_cmd->add_option("--workers", search_opts.workers, "worker threads (0 = hardware concurrency)");
  search_cmd->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (check->parsed()) return cmd_check(check_path, json, out, err);
  if (classify_cmd->parsed()) return cmd_classify(classify_path, json, out, err);
  if (hp2_cmd->parsed()) return cmd_hp2(hp2, out, err);
  return cmd_search(search_opts, json, out, err);
}

}  // namespace circact::cli
