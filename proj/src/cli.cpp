// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "accinfo/cli.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "accinfo/channel.hpp"
#include "accinfo/error.hpp"
#include "accinfo/ledger.hpp"
#include "accinfo/level_analysis.hpp"
#include "accinfo/measures.hpp"
#include "accinfo/report.hpp"

namespace accinfo::cli {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open '{}'", path.string()));
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<LevelReport> period_reports(const RunConfig& config) {
  if (config.kind == InputKind::ChannelMatrix) {
    throw Error(ErrorKind::Usage, "a channel matrix has no periods; use the 'channel' command");
  }
  const std::string bytes = read_file(config.input);
  std::istringstream in(bytes);
  const auto shape =
      config.kind == InputKind::FrequencyTable ? InputShape::FrequencyTable : InputShape::Transactions;
  const Ledger ledger = load_ledger_csv(in, config.schema, shape);
  if (ledger.records.empty()) throw Error(ErrorKind::EmptyLedger, "ledger has no records");

  std::map<std::string, Ledger> parts;
  if (config.pool_periods) {
    parts.emplace("all", ledger);
  } else {
    parts = split_periods(ledger);
  }

  std::vector<std::string> selected = config.periods;
  if (selected.empty()) {
    for (const auto& [name, part] : parts) selected.push_back(name);
  }

  const std::string digest = sha256_hex(bytes);
  std::vector<LevelReport> reports;
  for (const auto& name : selected) {
    const auto it = parts.find(name);
    if (it == parts.end()) {
      throw Error(ErrorKind::PeriodNotFound, fmt::format("period '{}' not present in input", name));
    }
    auto report = sweep_levels(tally_events(it->second), config.schema, name);
    report.provenance.input_digest = digest;
    reports.push_back(std::move(report));
  }
  return reports;
}

InputKind parse_kind(const std::string& text) {
  if (text == "ledger") return InputKind::Ledger;
  if (text == "frequency-table") return InputKind::FrequencyTable;
  if (text == "channel-matrix") return InputKind::ChannelMatrix;
  throw Error(ErrorKind::Usage,
              fmt::format("unknown --kind '{}' (ledger | frequency-table | channel-matrix)", text));
}

OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::Usage, fmt::format("unknown --format '{}' (table | json | csv)", text));
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.output) {
    out << text;
    return;
  }
  std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::Io, fmt::format("cannot write '{}'", config.output->string()));
  file << text;
}

}  // namespace

std::string cmd_analyze(const RunConfig& config) {
  const auto reports = period_reports(config);
  switch (config.format) {
    case OutputFormat::Json: return render_reports_json(reports);
    case OutputFormat::Csv: return render_reports_csv(reports);
    case OutputFormat::Table: break;
  }
  return render_reports_table(reports);
}

std::string cmd_compare(const RunConfig& config) {
  const auto table = compare_periods(period_reports(config));
  switch (config.format) {
    case OutputFormat::Json: return render_comparison_json(table);
    case OutputFormat::Csv: return render_comparison_csv(table);
    case OutputFormat::Table: break;
  }
  return render_comparison_table(table);
}

std::string cmd_channel(const RunConfig& config) {
  if (config.kind != InputKind::ChannelMatrix) {
    throw Error(ErrorKind::Usage, "the 'channel' command reads --kind channel-matrix input");
  }
  std::istringstream in(read_file(config.input));
  const MeasureSet m = measure_channel(load_channel_csv(in));
  switch (config.format) {
    case OutputFormat::Json: return render_measures_json(m);
    case OutputFormat::Csv: return render_measures_csv(m);
    case OutputFormat::Table: break;
  }
  return render_measures_table(m);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information measures of accounting classification channels", "accinfo"};
  app.require_subcommand(1);

  struct Options {
    std::string input;
    std::string kind;
    std::string schema = "2,2,2,3,5";
    char separator = '.';
    std::string format = "table";
    std::string output;
    std::vector<std::string> periods;
    bool pool = false;
  } opts;

  auto add_common = [&opts](CLI::App* cmd, const std::string& default_kind) {
    cmd->add_option("--input", opts.input, "Input CSV path")->required();
    cmd->add_option("--kind", opts.kind, "ledger | frequency-table | channel-matrix")
        ->default_str(default_kind);
    cmd->add_option("--format", opts.format, "table | json | csv")->capture_default_str();
    cmd->add_option("--output", opts.output, "Write to this path instead of standard output");
  };
  auto add_ledger = [&opts](CLI::App* cmd) {
    cmd->add_option("--schema", opts.schema, "Segment widths, e.g. 2,2,2,3,5")->capture_default_str();
    cmd->add_option("--separator", opts.separator, "Code segment separator")->capture_default_str();
    cmd->add_option("--periods", opts.periods, "Comma-separated period tags, in output order")
        ->delimiter(',');
  };

  auto* analyze = app.add_subcommand("analyze", "Level sweep per period");
  add_common(analyze, "ledger");
  add_ledger(analyze);
  analyze->add_flag("--pool-periods", opts.pool, "Analyse all records as a single period");

  auto* compare = app.add_subcommand("compare", "Compare I and U across periods, level by level");
  add_common(compare, "ledger");
  add_ledger(compare);

  auto* channel = app.add_subcommand("channel", "Measures of a theoretical channel matrix");
  add_common(channel, "channel-matrix");

  std::vector<std::string> argv_storage{"accinfo"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    RunConfig config;
    config.input = opts.input;
    config.format = parse_format(opts.format);
    config.output = opts.output.empty() ? std::nullopt : std::optional<std::filesystem::path>(opts.output);
    config.periods = opts.periods;
    config.pool_periods = opts.pool;

    std::string text;
    if (analyze->parsed() || compare->parsed()) {
      config.kind = parse_kind(opts.kind.empty() ? "ledger" : opts.kind);
      config.schema = CodeSchema::from_widths_text(opts.schema, opts.separator);
      text = analyze->parsed() ? cmd_analyze(config) : cmd_compare(config);
    } else {
      config.kind = parse_kind(opts.kind.empty() ? "channel-matrix" : opts.kind);
      text = cmd_channel(config);
    }
    write_output(config, text, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? kExitInternalError : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace accinfo::cli
