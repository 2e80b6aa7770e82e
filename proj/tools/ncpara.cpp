// Copyright 2026 The ncpara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: compile, score, baseline, stats, validate.
// Exit codes: 0 success (warnings allowed), 2 input error, 3 config error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncpara/baseline.hpp"
#include "ncpara/formats.hpp"
#include "ncpara/gold.hpp"
#include "ncpara/gold_pipeline.hpp"
#include "ncpara/scoring.hpp"
#include "ncpara/text_norm.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

struct Config {
  double rank_r = ncpara::kDefaultRankR;
  std::string mode = "both";          // iso | noniso | both
  std::string format = "text";        // text | json | tsv
  std::string determiners = "a,an,the";
  bool per_compound = false;
};

ncpara::DeterminerSet parse_determiners(const std::string& spec) {
  ncpara::DeterminerSet set;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    for (const auto& token : ncpara::tokenize_lenient(item)) set.insert(token);
  }
  return set;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ncpara::ParseError(path, 0, "cannot open file");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ncpara::ParseError(path, 0, "cannot open file for writing");
  return out;
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    auto out = open_output(path);
    out << content;
  }
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& warning : warnings) std::cerr << "warning: " << warning << "\n";
}

int cmd_compile(const std::string& raw_path, const std::string& out_path) {
  auto in = open_input(raw_path);
  const auto records = ncpara::parse_raw_annotations(in, raw_path);
  if (records.empty()) {
    std::cerr << "error: " << raw_path << ": no records\n";
    return kExitInput;
  }
  const auto result = ncpara::compile_gold(records);
  print_warnings(result.warnings);
  std::ostringstream buffer;
  ncpara::write_gold_file(buffer, result.gold);
  emit(out_path, buffer.str());
  return kExitOk;
}

ordered_json report_to_json(const ncpara::ScoreReport& report,
                            const Config& config) {
  ordered_json j;
  j["name"] = report.system_name;
  if (config.mode != "noniso") {
    j["iso"] = report.mean_iso;
    j["iso_x100"] = ncpara::format_score_x100(report.mean_iso);
  }
  if (config.mode != "iso") {
    j["noniso"] = report.mean_noniso;
    j["noniso_x100"] = ncpara::format_score_x100(report.mean_noniso);
  }
  if (config.per_compound) {
    ordered_json compounds = ordered_json::array();
    for (const auto& score : report.per_compound) {
      ordered_json c;
      c["modifier"] = score.compound.modifier;
      c["head"] = score.compound.head;
      c["in_submission"] = score.in_submission;
      if (config.mode != "noniso") c["iso"] = score.iso;
      if (config.mode != "iso") c["noniso"] = score.noniso;
      const auto matches_to_json = [](const std::vector<ncpara::ParaphraseMatch>& matches) {
        ordered_json out = ordered_json::array();
        for (const auto& match : matches) {
          ordered_json m;
          m["paraphrase"] = match.text;
          if (match.gold_index) {
            m["gold_entry"] = *match.gold_index;
            m["weighted"] = match.weighted;
          } else {
            m["gold_entry"] = nullptr;
          }
          out.push_back(std::move(m));
        }
        return out;
      };
      if (config.mode != "noniso") c["iso_matches"] = matches_to_json(score.iso_matches);
      if (config.mode != "iso") c["noniso_matches"] = matches_to_json(score.noniso_matches);
      compounds.push_back(std::move(c));
    }
    j["compounds"] = std::move(compounds);
  }
  return j;
}

std::string render_reports(const std::vector<ncpara::ScoreReport>& reports,
                           const Config& config) {
  const bool show_iso = config.mode != "noniso";
  const bool show_noniso = config.mode != "iso";
  std::ostringstream out;

  if (config.format == "json") {
    ordered_json j;
    j["rank_r"] = config.rank_r;
    j["mode"] = config.mode;
    j["determiners"] = parse_determiners(config.determiners);
    j["systems"] = ordered_json::array();
    for (const auto& report : reports) {
      j["systems"].push_back(report_to_json(report, config));
    }
    out << j.dump(2) << "\n";
    return out.str();
  }

  if (config.format == "tsv") {
    for (const auto& report : reports) {
      out << "aggregate\t" << report.system_name;
      if (show_iso) out << '\t' << ncpara::format_score_x100(report.mean_iso);
      if (show_noniso) out << '\t' << ncpara::format_score_x100(report.mean_noniso);
      out << '\n';
      if (config.per_compound) {
        for (const auto& score : report.per_compound) {
          out << "compound\t" << report.system_name << '\t'
              << score.compound.modifier << '\t' << score.compound.head;
          if (show_iso) out << '\t' << ncpara::format_score_x100(score.iso);
          if (show_noniso) out << '\t' << ncpara::format_score_x100(score.noniso);
          out << '\n';
        }
      }
    }
    return out.str();
  }

  // text leaderboard
  std::size_t width = 6;  // "system"
  for (const auto& report : reports) {
    width = std::max(width, report.system_name.size());
  }
  out << "system";
  out << std::string(width - 6 + 2, ' ');
  if (show_iso) out << "   iso";
  if (show_noniso) out << "  noniso";
  out << '\n';
  for (const auto& report : reports) {
    out << report.system_name
        << std::string(width - report.system_name.size() + 2, ' ');
    if (show_iso) {
      std::string s = ncpara::format_score_x100(report.mean_iso);
      out << std::string(6 - std::min<std::size_t>(6, s.size()), ' ') << s;
    }
    if (show_noniso) {
      std::string s = ncpara::format_score_x100(report.mean_noniso);
      out << std::string(8 - std::min<std::size_t>(8, s.size()), ' ') << s;
    }
    out << '\n';
    if (config.per_compound) {
      for (const auto& score : report.per_compound) {
        out << "  " << display(score.compound) << ": ";
        bool first = true;
        if (show_iso) {
          out << "iso " << ncpara::format_score_x100(score.iso);
          first = false;
        }
        if (show_noniso) {
          if (!first) out << ", ";
          out << "noniso " << ncpara::format_score_x100(score.noniso);
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

int cmd_score(const std::string& gold_path,
              const std::vector<std::string>& system_paths,
              const std::string& out_path, const Config& config) {
  auto gold_in = open_input(gold_path);
  const auto gold = ncpara::parse_gold_file(gold_in, gold_path);
  if (gold.empty()) {
    std::cerr << "error: " << gold_path << ": no gold entries\n";
    return kExitInput;
  }

  ncpara::ScoreOptions options;
  options.rank_r = config.rank_r;
  options.determiners = parse_determiners(config.determiners);

  std::vector<ncpara::ScoreReport> reports;
  for (const auto& path : system_paths) {
    auto system_in = open_input(path);
    const auto submission = ncpara::parse_system_output(system_in, path, path);
    auto report = ncpara::score_system(submission, gold, options);
    print_warnings(report.warnings);
    reports.push_back(std::move(report));
  }
  emit(out_path, render_reports(reports, config));
  return kExitOk;
}

// Accepts either a compiled gold file (5 columns) or a plain compound list
// (2 columns: modifier <TAB> head).
std::vector<ncpara::Compound> load_compounds(const std::string& path) {
  auto in = open_input(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  std::size_t columns = 0;
  std::istringstream sniff(content);
  std::string line;
  while (std::getline(sniff, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    columns = std::count(line.begin(), line.end(), '\t') + 1;
    break;
  }

  std::vector<ncpara::Compound> compounds;
  if (columns == 5) {
    std::istringstream stream(content);
    for (const auto& list : ncpara::parse_gold_file(stream, path)) {
      compounds.push_back(list.compound);
    }
    return compounds;
  }
  if (columns != 2) {
    throw ncpara::ParseError(path, 0,
                             "expected a compound list (2 columns) or a gold "
                             "file (5 columns)");
  }
  std::istringstream stream(content);
  std::size_t lineno = 0;
  std::set<ncpara::Compound> seen;
  while (std::getline(stream, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ncpara::Compound compound;
    compound.modifier = line.substr(0, tab);
    compound.head = line.substr(tab + 1);
    const auto mods = ncpara::tokenize_lenient(compound.modifier);
    const auto heads = ncpara::tokenize_lenient(compound.head);
    if (mods.size() != 1 || heads.size() != 1) {
      throw ncpara::ParseError(path, lineno, "expected: modifier<TAB>head");
    }
    compound.modifier = mods.front();
    compound.head = heads.front();
    if (seen.insert(compound).second) compounds.push_back(compound);
  }
  return compounds;
}

int cmd_baseline(const std::string& input_path, const std::string& out_path,
                 const std::string& train_path, std::size_t top_k) {
  const auto compounds = load_compounds(input_path);
  if (compounds.empty()) {
    std::cerr << "error: " << input_path << ": no compounds\n";
    return kExitInput;
  }

  std::vector<ncpara::GoldList> training;
  if (!train_path.empty()) {
    auto in = open_input(train_path);
    training = ncpara::parse_gold_file(in, train_path);
    if (training.empty()) {
      std::cerr << "error: " << train_path << ": no gold entries\n";
      return kExitInput;
    }
  }

  ncpara::SystemSubmission submission;
  submission.name = train_path.empty() ? "naive-baseline" : "trained-baseline";
  for (const auto& compound : compounds) {
    ncpara::SubmissionEntry entry;
    entry.compound = compound;
    entry.paraphrases = train_path.empty()
                            ? ncpara::naive_baseline(compound)
                            : ncpara::trained_baseline(training, compound, top_k);
    if (entry.paraphrases.empty()) {
      std::cerr << "warning: no baseline paraphrases for '"
                << display(compound) << "'\n";
      continue;
    }
    submission.entries.push_back(std::move(entry));
  }
  std::ostringstream buffer;
  ncpara::write_system_file(buffer, submission);
  emit(out_path, buffer.str());
  return kExitOk;
}

int cmd_stats(const std::string& gold_path, const std::string& format) {
  auto in = open_input(gold_path);
  const auto gold = ncpara::parse_gold_file(in, gold_path);
  const auto stats = ncpara::dataset_stats(gold);

  if (format == "json") {
    ordered_json j;
    j["compounds"] = stats.compounds;
    j["paraphrases"] = {{"total", stats.total_paraphrases},
                        {"min", stats.min_total},
                        {"max", stats.max_total},
                        {"avg", stats.avg_total}};
    j["unique_paraphrases"] = {{"total", stats.unique_paraphrases},
                               {"min", stats.min_unique},
                               {"max", stats.max_unique},
                               {"avg", stats.avg_unique}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (format == "tsv") {
    std::cout << "compounds\t" << stats.compounds << '\n'
              << "paraphrases\t" << stats.total_paraphrases << '\t'
              << stats.min_total << '\t' << stats.max_total << '\t'
              << ncpara::format_fixed1(stats.avg_total) << '\n'
              << "unique_paraphrases\t" << stats.unique_paraphrases << '\t'
              << stats.min_unique << '\t' << stats.max_unique << '\t'
              << ncpara::format_fixed1(stats.avg_unique) << '\n';
    return kExitOk;
  }

  const std::string total = ncpara::group_thousands(stats.total_paraphrases);
  const std::string unique = ncpara::group_thousands(stats.unique_paraphrases);
  const std::size_t width = std::max<std::size_t>({5, total.size(), unique.size()});
  const auto right = [width](const std::string& s) {
    return std::string(width - s.size(), ' ') + s;
  };
  std::cout << "Gold dataset (" << stats.compounds << " NCs)\n";
  std::cout << "                    " << right("Total") << "   Min / Max / Avg\n";
  std::cout << "paraphrases         " << right(total) << "   " << stats.min_total
            << " / " << stats.max_total << " / "
            << ncpara::format_fixed1(stats.avg_total) << '\n';
  std::cout << "unique paraphrases  " << right(unique) << "   "
            << stats.min_unique << " / " << stats.max_unique << " / "
            << ncpara::format_fixed1(stats.avg_unique) << '\n';
  return kExitOk;
}

int cmd_validate(const std::string& raw_path) {
  auto in = open_input(raw_path);
  const auto records = ncpara::parse_raw_annotations(in, raw_path);
  for (const auto& record : records) {
    const auto verdict = ncpara::validate_paraphrase(record.compound,
                                                     record.paraphrase);
    std::cout << "line " << record.line << '\t' << display(record.compound)
              << '\t'
              << (verdict.valid()
                      ? std::string("valid")
                      : "invalid: " + std::string(to_string(*verdict.reason)))
              << '\t' << record.paraphrase << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noun-compound paraphrase gold compiler and scorer"};
  app.require_subcommand(1);

  Config config;
  const char* env_determiners = std::getenv("NCPARA_DETERMINERS");
  if (env_determiners != nullptr) config.determiners = env_determiners;

  std::string raw_path, gold_path, input_path, out_path, train_path;
  std::vector<std::string> system_paths;
  std::size_t top_k = 10;

  auto* compile = app.add_subcommand("compile",
                                     "compile raw annotations into a ranked gold file");
  compile->add_option("raw", raw_path, "raw annotations TSV")->required();
  compile->add_option("-o,--output", out_path, "gold file to write (default: stdout)");

  auto* score = app.add_subcommand("score",
                                   "score system outputs against a gold file");
  score->add_option("--gold", gold_path, "compiled gold TSV")->required();
  score->add_option("--system", system_paths, "system output TSV (repeatable)")
      ->required();
  score->add_option("--rank-r", config.rank_r, "rank multiplier parameter R")
      ->check(CLI::PositiveNumber);
  score->add_option("--mode", config.mode, "iso|noniso|both")
      ->check(CLI::IsMember({"iso", "noniso", "both"}));
  score->add_option("--format", config.format, "text|json|tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  score->add_option("--determiners", config.determiners,
                    "comma-separated determiner list");
  score->add_flag("--per-compound", config.per_compound,
                  "include per-compound scores");
  score->add_option("-o,--output", out_path, "write results here instead of stdout");

  auto* baseline = app.add_subcommand("baseline",
                                      "generate baseline paraphrases in system format");
  baseline->add_option("input", input_path,
                       "compound list (modifier<TAB>head) or gold file")
      ->required();
  baseline->add_option("-o,--output", out_path, "system file to write (default: stdout)");
  baseline->add_option("--train", train_path,
                       "gold file to learn link templates from (default: naive)");
  baseline->add_option("--top-k", top_k, "templates per compound when trained")
      ->check(CLI::PositiveNumber);

  auto* stats = app.add_subcommand("stats", "dataset statistics for a gold file");
  stats->add_option("gold", gold_path, "compiled gold TSV")->required();
  stats->add_option("--format", config.format, "text|json|tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));

  auto* validate = app.add_subcommand("validate",
                                      "report well-formedness of raw annotations");
  validate->add_option("raw", raw_path, "raw annotations TSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (compile->parsed()) return cmd_compile(raw_path, out_path);
    if (score->parsed()) return cmd_score(gold_path, system_paths, out_path, config);
    if (baseline->parsed()) return cmd_baseline(input_path, out_path, train_path, top_k);
    if (stats->parsed()) return cmd_stats(gold_path, config.format);
    if (validate->parsed()) return cmd_validate(raw_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
