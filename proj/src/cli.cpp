//------------------------------------------------------------------------------
//
//   Copyright 2026 The nonext Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "nonext/cli.hpp"

#include "nonext/divergence.hpp"
#include "nonext/entropy.hpp"
#include "nonext/errors.hpp"
#include "nonext/histogram.hpp"
#include "nonext/minimize.hpp"
#include "nonext/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace nonext {
namespace {

using nlohmann::json;

/// Bad flags or flag combinations; exit code 1.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or invalid input data; exit code 2.
class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos)
  {
    return {};
  }
  auto const last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text)
{
  text = trim(text);
  if (!text.empty() && text.front() == '+')
  {
    text.remove_prefix(1);
  }
  double value = 0.0;
  auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
  {
    throw ArgumentError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

/// A table cell: a finite number, a non-finite number (kept as text), text,
/// or empty.
json cell(double value)
{
  if (std::isfinite(value))
  {
    return value;
  }
  return format_value(value);
}

struct Table
{
  std::vector<std::string>       columns;
  std::vector<std::vector<json>> rows;
};

std::string csv_field(std::string const &text)
{
  if (text.find_first_of(",\"\n") == std::string::npos)
  {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text)
  {
    if (c == '"')
    {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + "\"";
}

std::string cell_text(json const &value)
{
  if (value.is_null())
  {
    return "";
  }
  if (value.is_string())
  {
    return value.get<std::string>();
  }
  if (value.is_number_unsigned())
  {
    return std::to_string(value.get<std::uint64_t>());
  }
  if (value.is_number())
  {
    return format_value(value.get<double>());
  }
  if (value.is_boolean())
  {
    return value.get<bool>() ? "true" : "false";
  }
  return value.dump();
}

void write_table(Table const &table, OutputFormat format, std::ostream &out)
{
  if (format == OutputFormat::kStructured)
  {
    json records = json::array();
    for (auto const &row : table.rows)
    {
      json record = json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c)
      {
        record[table.columns[c]] = row[c];
      }
      records.push_back(std::move(record));
    }
    out << records.dump(2) << '\n';
    return;
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c)
  {
    out << (c ? "," : "") << csv_field(table.columns[c]);
  }
  out << '\n';
  for (auto const &row : table.rows)
  {
    for (std::size_t c = 0; c < row.size(); ++c)
    {
      out << (c ? "," : "") << csv_field(cell_text(row[c]));
    }
    out << '\n';
  }
}

struct LoadedInputs
{
  std::vector<std::string>       labels;
  std::vector<ProbabilityVector> distributions;
};

LoadedInputs load_inputs(RunConfig const &config)
{
  LabelOrder const       order = config.sort_labels ? LabelOrder::kLexicographic : LabelOrder::kFirstSeen;
  std::vector<Histogram> histograms;
  for (auto const &path : config.inputs)
  {
    try
    {
      histograms.push_back(read_histogram_file(path, order));
    }
    catch (ParseError const &e)
    {
      throw InputError(e.what());
    }
  }
  LoadedInputs loaded;
  loaded.labels = union_labels(histograms, order);
  for (std::size_t j = 0; j < histograms.size(); ++j)
  {
    auto const counts = align_to(histograms[j], loaded.labels);
    if (!(counts.total() > 0.0))
    {
      throw InputError(config.inputs[j] + ": histogram has no mass");
    }
    loaded.distributions.push_back(ProbabilityVector::normalized(counts.values()));
  }
  return loaded;
}

void require_inputs(RunConfig const &config, std::size_t minimum, char const *command)
{
  if (config.inputs.size() < minimum)
  {
    throw UsageError(std::string(command) + ": needs at least " + std::to_string(minimum) + " input file" +
                     (minimum == 1 ? "" : "s"));
  }
}

void require_known_measures(std::vector<std::string> const &requested, std::vector<std::string> const &known,
                            char const *command)
{
  for (auto const &name : requested)
  {
    if (std::find(known.begin(), known.end(), name) == known.end())
    {
      std::string list;
      for (auto const &k : known)
      {
        list += (list.empty() ? "" : ", ") + k;
      }
      throw UsageError(std::string(command) + ": unknown measure '" + name + "' (expected one of " + list + ")");
    }
  }
}

std::vector<std::string> measures_or(RunConfig const &config, std::vector<std::string> fallback)
{
  return config.measures.empty() ? fallback : config.measures;
}

ProbabilityVector weights_for(RunConfig const &config, std::size_t count, char const *command)
{
  if (config.weights.empty())
  {
    return ProbabilityVector::uniform(count);
  }
  if (config.weights.size() != count)
  {
    throw UsageError(std::string(command) + ": --weights needs " + std::to_string(count) + " entries");
  }
  return ProbabilityVector(config.weights);
}

int cmd_entropy(RunConfig const &config, std::ostream &out)
{
  require_inputs(config, 1, "entropy");
  auto const measures = measures_or(config, {"shannon", "tsallis", "renyi"});
  require_known_measures(measures, {"shannon", "tsallis", "renyi"}, "entropy");
  auto const loaded = load_inputs(config);

  Table table{{"input", "measure", "q", "value"}, {}};
  for (std::size_t j = 0; j < loaded.distributions.size(); ++j)
  {
    auto const &p = loaded.distributions[j];
    for (auto const &measure : measures)
    {
      if (measure == "shannon")
      {
        table.rows.push_back({config.inputs[j], measure, 1.0, cell(shannon_entropy(p))});
        continue;
      }
      for (double q : config.q_grid)
      {
        double const value = measure == "tsallis" ? tsallis_entropy(p, q) : renyi_entropy(p, q);
        table.rows.push_back({config.inputs[j], measure, q, cell(value)});
      }
    }
  }
  write_table(table, config.format, out);
  return kExitSuccess;
}

int cmd_divergence(RunConfig const &config, std::ostream &out)
{
  require_inputs(config, 2, "divergence");
  std::vector<std::string> const known{"kld", "d_q", "renyi_div", "jsd", "jrd", "jtd", "jtqd"};
  auto const                     measures = measures_or(config, known);
  require_known_measures(measures, known, "divergence");
  auto const weights = weights_for(config, 2, "divergence");
  auto const loaded  = load_inputs(config);
  auto const &dists  = loaded.distributions;

  Table table{{"measure", "q", "first", "second", "value"}, {}};
  for (auto const &measure : measures)
  {
    bool const uses_q = measure != "kld" && measure != "jsd";
    std::vector<double> const grid = uses_q ? config.q_grid : std::vector<double>{1.0};
    for (double q : grid)
    {
      for (std::size_t a = 0; a < dists.size(); ++a)
      {
        for (std::size_t b = 0; b < dists.size(); ++b)
        {
          ProbabilityVector const pair[] = {dists[a], dists[b]};
          double                  value  = 0.0;
          if (measure == "kld")
          {
            value = kld(dists[a], dists[b]);
          }
          else if (measure == "d_q")
          {
            value = tsallis_relative_entropy(dists[a], dists[b], q);
          }
          else if (measure == "renyi_div")
          {
            value = renyi_divergence(dists[a], dists[b], q);
          }
          else if (measure == "jsd")
          {
            value = jsd(weights, pair);
          }
          else if (measure == "jrd")
          {
            value = jrd(weights, pair, q);
          }
          else if (measure == "jtd")
          {
            value = jtd(weights, pair, q);
          }
          else
          {
            value = jtqd(weights, pair, q);
          }
          table.rows.push_back({measure, uses_q ? json(q) : json(nullptr), config.inputs[a], config.inputs[b],
                                cell(value)});
        }
      }
    }
  }
  write_table(table, config.format, out);
  return kExitSuccess;
}

int cmd_sweep(RunConfig const &config, std::ostream &out)
{
  require_inputs(config, 2, "sweep");
  auto const measures = measures_or(config, {"jtqd"});
  require_known_measures(measures, {"jtqd", "jtd", "jrd", "jsd"}, "sweep");
  auto const weights = weights_for(config, config.inputs.size(), "sweep");
  auto const loaded  = load_inputs(config);
  auto const &dists  = loaded.distributions;

  Table table{{"q"}, {}};
  table.columns.insert(table.columns.end(), measures.begin(), measures.end());
  for (double q : config.q_grid)
  {
    std::vector<json> row{q};
    for (auto const &measure : measures)
    {
      double value = 0.0;
      if (measure == "jtqd")
      {
        value = jtqd(weights, dists, q);
      }
      else if (measure == "jtd")
      {
        value = jtd(weights, dists, q);
      }
      else if (measure == "jrd")
      {
        value = jrd(weights, dists, q);
      }
      else
      {
        value = jsd(weights, dists);
      }
      row.push_back(cell(value));
    }
    table.rows.push_back(std::move(row));
  }
  write_table(table, config.format, out);
  return kExitSuccess;
}

int cmd_verify(RunConfig const &config, std::ostream &out)
{
  SamplingPlan plan;
  plan.seed   = config.seed;
  plan.trials = config.trials;
  if (!config.q_grid.empty())
  {
    plan.q_grid = config.q_grid;
  }
  try
  {
    plan.validate();
  }
  catch (ArgumentError const &e)
  {
    throw UsageError(std::string("verify: ") + e.what());
  }

  auto suite = verification_suite();
  if (!config.only.empty())
  {
    auto const it = std::find_if(suite.begin(), suite.end(), [&](auto const &c) { return c.name == config.only; });
    if (it == suite.end())
    {
      std::string names;
      for (auto const &c : suite)
      {
        names += (names.empty() ? "" : ", ") + c.name;
      }
      throw UsageError("verify: unknown check '" + config.only + "' (expected one of " + names + ")");
    }
    suite = {*it};
  }

  Table table{{"check", "name", "verdict", "worst_violation", "tolerance", "samples", "seed", "witness", "note"}, {}};
  bool  all_passed = true;
  for (auto const &check : suite)
  {
    for (auto const &report : check.run(plan))
    {
      all_passed = all_passed && report.passed();
      table.rows.push_back({check.name, report.name, report.verdict(), cell(report.worst_violation),
                            report.tolerance, report.samples, report.seed, report.witness, report.note});
    }
  }
  write_table(table, config.format, out);
  return all_passed ? kExitSuccess : kExitVerification;
}

int cmd_minimize(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  if (config.inputs.size() != 1)
  {
    throw UsageError("minimize: needs exactly one input file");
  }
  if (!config.q)
  {
    throw UsageError("minimize: --q is required");
  }
  auto const loaded = load_inputs(config);
  auto const &p2    = loaded.distributions.front();
  QParameter const q(*config.q);
  auto const       result    = minimize_jtqd_first_arg(p2, q, 500, config.tolerance);
  double const     at_target = jtqd2(p2, p2, q);

  if (config.format == OutputFormat::kStructured)
  {
    json record{{"q", q.value()},
                {"labels", loaded.labels},
                {"target", p2.values()},
                {"minimizer", result.argmin.values()},
                {"objective", cell(result.objective)},
                {"objective_at_target", cell(at_target)},
                {"iterations", result.iterations},
                {"converged", result.converged}};
    out << record.dump(2) << '\n';
  }
  else
  {
    Table table{{"label", "target", "minimizer"}, {}};
    for (std::size_t i = 0; i < p2.size(); ++i)
    {
      table.rows.push_back({loaded.labels[i], p2[i], result.argmin[i]});
    }
    table.rows.push_back({"objective", cell(at_target), cell(result.objective)});
    write_table(table, config.format, out);
  }
  if (!result.converged)
  {
    err << "minimize: descent did not converge in " << result.iterations << " iterations\n";
    return kExitOptimizer;
  }
  return kExitSuccess;
}

int execute(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  switch (config.command)
  {
  case Command::kEntropy:
    return cmd_entropy(config, out);
  case Command::kDivergence:
    return cmd_divergence(config, out);
  case Command::kSweep:
    return cmd_sweep(config, out);
  case Command::kVerify:
    return cmd_verify(config, out);
  case Command::kMinimize:
    return cmd_minimize(config, out, err);
  }
  return kExitUsage;
}

std::vector<std::string> split_names(std::string const &text)
{
  std::vector<std::string> names;
  std::size_t              start = 0;
  while (start <= text.size())
  {
    auto const end  = std::min(text.find(',', start), text.size());
    auto const name = trim(std::string_view(text).substr(start, end - start));
    if (!name.empty())
    {
      names.emplace_back(name);
    }
    start = end + 1;
  }
  return names;
}

}  // namespace

std::vector<double> default_q_grid()
{
  return {0.0, 0.5, 1.0, 1.5, 2.0};
}

std::vector<double> parse_q_grid(std::string_view text)
{
  std::vector<std::string_view> parts;
  std::size_t                   start = 0;
  while (true)
  {
    auto const end = text.find(':', start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos)
    {
      break;
    }
    start = end + 1;
  }
  if (parts.size() != 3)
  {
    throw ArgumentError("q grid must look like a:b:step, got '" + std::string(text) + "'");
  }
  double const first = parse_number(parts[0]);
  double const last  = parse_number(parts[1]);
  double const step  = parse_number(parts[2]);
  if (!std::isfinite(first) || !std::isfinite(last) || !(step > 0.0) || !std::isfinite(step))
  {
    throw ArgumentError("q grid needs finite bounds and a positive step");
  }
  if (first < 0.0)
  {
    throw ArgumentError("q grid values must be >= 0");
  }
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k)
  {
    double const q = first + static_cast<double>(k) * step;
    if (q > last + 1e-9 * step)
    {
      break;
    }
    grid.push_back(std::min(q, std::max(last, first)));
  }
  return grid;
}

std::vector<double> parse_number_list(std::string_view text)
{
  std::vector<double> values;
  std::size_t         start = 0;
  while (true)
  {
    auto const end = text.find(',', start);
    values.push_back(parse_number(text.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos)
    {
      break;
    }
    start = end + 1;
  }
  return values;
}

int run_cli(std::span<std::string const> args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Nonextensive entropies and Jensen-Tsallis divergences over histogram files", "nonext"};
  app.require_subcommand(1);

  RunConfig                config;
  std::optional<double>    q;
  std::string              q_grid_text;
  std::string              weights_text;
  std::string              measure_text;
  std::string              format_text = "csv";

  auto const add_common = [&](CLI::App *sub) {
    sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    sub->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"csv", "structured"}))
        ->capture_default_str();
  };
  auto const add_inputs = [&](CLI::App *sub) {
    sub->add_option("inputs", config.inputs, "Histogram files with label,count rows");
    sub->add_flag("--sort-labels", config.sort_labels, "Order labels lexicographically instead of first-seen");
  };
  auto const add_grid = [&](CLI::App *sub) {
    sub->add_option("--q", q, "Single entropic index");
    sub->add_option("--q-grid", q_grid_text, "Grid a:b:step of entropic indices");
  };

  auto *entropy = app.add_subcommand("entropy", "Shannon, Tsallis and Renyi entropies of each input");
  add_inputs(entropy);
  add_grid(entropy);
  entropy->add_option("--measure", measure_text, "shannon,tsallis,renyi");
  add_common(entropy);

  auto *divergence = app.add_subcommand("divergence", "Pairwise divergences between inputs");
  add_inputs(divergence);
  add_grid(divergence);
  divergence->add_option("--measure", measure_text, "kld,d_q,renyi_div,jsd,jrd,jtd,jtqd");
  divergence->add_option("--weights", weights_text, "Pair weights w1,w2 (default 0.5,0.5)");
  add_common(divergence);

  auto *sweep = app.add_subcommand("sweep", "Jensen-Tsallis q-difference of all inputs across q");
  add_inputs(sweep);
  add_grid(sweep);
  sweep->add_option("--measure", measure_text, "jtqd,jtd,jrd,jsd (default jtqd)");
  sweep->add_option("--weights", weights_text, "Input weights (default uniform)");
  add_common(sweep);

  auto *verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--only", config.only, "Run a single check group");
  verify->add_option("--trials", config.trials, "Samples per check")->capture_default_str();
  verify->add_option("--q-grid", q_grid_text, "Grid a:b:step of entropic indices");
  add_common(verify);

  auto *minimize = app.add_subcommand("minimize", "Minimize the JTqD over its first argument");
  add_inputs(minimize);
  minimize->add_option("--q", q, "Entropic index")->required();
  minimize->add_option("--tolerance", config.tolerance, "Step tolerance")->capture_default_str();
  add_common(minimize);

  std::vector<std::string> argv_storage{"nonext"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char const *> argv;
  for (auto const &a : argv_storage)
  {
    argv.push_back(a.c_str());
  }

  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (CLI::CallForHelp const &e)
  {
    app.exit(e, out, err);
    return kExitSuccess;
  }
  catch (CLI::CallForAllHelp const &e)
  {
    app.exit(e, out, err);
    return kExitSuccess;
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try
  {
    if (entropy->parsed())
    {
      config.command = Command::kEntropy;
    }
    else if (divergence->parsed())
    {
      config.command = Command::kDivergence;
    }
    else if (sweep->parsed())
    {
      config.command = Command::kSweep;
    }
    else if (verify->parsed())
    {
      config.command = Command::kVerify;
    }
    else
    {
      config.command = Command::kMinimize;
    }
    config.format   = format_text == "structured" ? OutputFormat::kStructured : OutputFormat::kCsv;
    config.measures = split_names(measure_text);
    config.q        = q;

    try
    {
      if (q && !q_grid_text.empty())
      {
        throw UsageError("--q and --q-grid are mutually exclusive");
      }
      if (q)
      {
        QParameter{*q};
        config.q_grid = {*q};
      }
      else if (!q_grid_text.empty())
      {
        config.q_grid = parse_q_grid(q_grid_text);
        if (config.q_grid.empty())
        {
          throw UsageError("empty q grid '" + q_grid_text + "'");
        }
      }
      else if (config.command != Command::kVerify)
      {
        config.q_grid = default_q_grid();
      }
      if (!weights_text.empty())
      {
        config.weights = parse_number_list(weights_text);
        ProbabilityVector{config.weights};
      }
    }
    catch (ArgumentError const &e)
    {
      throw UsageError(e.what());
    }

    return execute(config, out, err);
  }
  catch (UsageError const &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (InputError const &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace nonext
