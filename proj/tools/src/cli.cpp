// Copyright 2026 The overlapkit Authors
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

#include "overlapkit_cli/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <overlapkit/aggregation.hpp>
#include <overlapkit/expression.hpp>
#include <overlapkit/implication.hpp>
#include <overlapkit/report.hpp>

#include "CLI11.hpp"
#include "json.hpp"

namespace overlapkit::cli {

namespace {

using nlohmann::json;

// Help output is a successful run, not an error.
struct HelpRequested {
  std::string text;
};

struct Flags {
  std::optional<int> grid;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<double> bisect_tol;
  std::optional<std::string> config_path;
  std::string format;
  bool assert_results = false;
};

void add_common(CLI::App* sub, Flags& flags) {
  sub->add_option("--grid", flags.grid, "grid resolution (points per axis, endpoints included)");
  sub->add_option("--samples", flags.samples, "random samples appended to the grid");
  sub->add_option("--seed", flags.seed, "seed for the random samples");
  sub->add_option("--tol", flags.tol, "tolerance for closed-form identities");
  sub->add_option("--bisect-tol", flags.bisect_tol, "tolerance for bisection");
  sub->add_option("--config", flags.config_path, "key = value config file (default: $OVERLAPKIT_CONFIG)");
  sub->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_flag("--assert", flags.assert_results, "exit with status 1 when a check fails");
}

Format format_from(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::text;
}

std::string head_of(std::string_view text) {
  const auto cut = text.find_first_of("(:");
  std::string head(text.substr(0, cut));
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front()))) head.erase(head.begin());
  return head;
}

struct AnyExpression {
  std::optional<Implication> implication;
  std::optional<FusionFunction> fusion;
  std::optional<Negation> negation;
};

// Tries the three grammars in turn; on total failure reports the error of the
// grammar the leading name belongs to.
AnyExpression parse_any(const std::string& text, const CheckConfig& config) {
  AnyExpression out;
  std::string errors[3];
  try {
    out.implication = parse_implication(text, config);
    return out;
  } catch (const ParseError& e) {
    errors[0] = e.what();
  }
  try {
    out.fusion = parse_fusion(text, config);
    return out;
  } catch (const ParseError& e) {
    errors[1] = e.what();
  }
  try {
    out.negation = parse_negation(text, config);
    return out;
  } catch (const ParseError& e) {
    errors[2] = e.what();
  }
  const std::string head = head_of(text);
  static const std::vector<std::string> implication_heads{"gon", "gn", "ql", "ro", "d", "tn", "crisp"};
  static const std::vector<std::string> negation_heads{"zadeh",       "standard",    "bottom", "top",
                                                       "crisp_lower", "crisp_upper", "power",  "inverse",
                                                       "natural"};
  for (const auto& h : implication_heads) {
    if (h == head) throw ParseError(errors[0]);
  }
  for (const auto& h : negation_heads) {
    if (h == head) throw ParseError(errors[2]);
  }
  throw ParseError(errors[1]);
}

std::string fmt(double v) { return format_value(v); }

// Every point of grid^arity in lexicographic order.
std::vector<std::vector<double>> grid_points(const std::vector<double>& axis, std::size_t arity) {
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    std::vector<double> p(arity);
    for (std::size_t d = 0; d < arity; ++d) p[d] = axis[idx[d]];
    out.push_back(std::move(p));
    std::size_t d = arity;
    while (d > 0) {
      --d;
      if (++idx[d] < axis.size()) break;
      idx[d] = 0;
      if (d == 0) return out;
    }
    if (arity == 0) return out;
  }
}

Outcome run_eval(const Command& cmd, Format format) {
  const auto& text = cmd.targets.at(0);
  const auto expr = parse_any(text, cmd.config);
  std::size_t arity = 2;
  std::function<double(const std::vector<double>&)> evaluate;
  if (expr.implication) {
    evaluate = [&](const std::vector<double>& p) { return expr.implication->at(p[0], p[1]).value(); };
  } else if (expr.fusion) {
    arity = expr.fusion->arity();
    evaluate = [&](const std::vector<double>& p) {
      std::vector<UnitValue> xs;
      for (double v : p) xs.emplace_back(v);
      return (*expr.fusion)(std::span<const UnitValue>(xs)).value();
    };
  } else {
    arity = 1;
    evaluate = [&](const std::vector<double>& p) { return expr.negation->at(p[0]).value(); };
  }

  std::vector<std::vector<double>> points;
  if (!cmd.at.empty()) {
    if (cmd.at.size() != arity) {
      throw ParseError("--at needs " + std::to_string(arity) + " value(s) for '" + text + "'");
    }
    points.push_back(cmd.at);
  } else {
    const int res = arity <= 2 ? cmd.config.grid_resolution : std::min(cmd.config.grid_resolution, kTripleGridResolution);
    points = grid_points(regular_grid(res), arity);
  }

  std::vector<std::string> names;
  if (arity == 1) {
    names = {"x"};
  } else if (arity == 2) {
    names = {"x", "y"};
  } else {
    for (std::size_t d = 0; d < arity; ++d) names.push_back("x" + std::to_string(d + 1));
  }

  Outcome out;
  if (format == Format::json) {
    json rows = json::array();
    for (const auto& p : points) rows.push_back(json{{"point", p}, {"value", evaluate(p)}});
    out.out = json{{"expression", text}, {"values", rows}}.dump(2) + "\n";
  } else if (format == Format::csv) {
    auto header = names;
    header.emplace_back("value");
    out.out = csv_row(header) + "\n";
    for (const auto& p : points) {
      std::vector<std::string> row;
      for (double v : p) row.push_back(fmt(v));
      row.push_back(fmt(evaluate(p)));
      out.out += csv_row(row) + "\n";
    }
  } else if (!cmd.at.empty()) {
    out.out = fmt(evaluate(points.front())) + "\n";
  } else {
    auto header = names;
    header.emplace_back("value");
    std::vector<std::vector<std::string>> rows{header};
    for (const auto& p : points) {
      std::vector<std::string> row;
      for (double v : p) row.push_back(fmt(v));
      row.push_back(fmt(evaluate(p)));
      rows.push_back(std::move(row));
    }
    out.out = text_table(rows);
  }
  return out;
}

AxiomSet default_set(Role role) {
  switch (role) {
    case Role::overlap: return AxiomSet::overlap;
    case Role::grouping: return AxiomSet::grouping;
    case Role::t_norm: return AxiomSet::t_norm;
    case Role::aggregation: return AxiomSet::aggregation;
    default: return AxiomSet::general_overlap;
  }
}

std::string render(const AxiomReport& report, Format format) {
  if (format == Format::json) return to_json(report);
  if (format == Format::csv) return to_csv(report);
  return to_text(report);
}

std::string render(const std::vector<PropertyReport>& reports, Format format) {
  if (format == Format::json) return to_json(reports);
  if (format == Format::csv) return to_csv(reports);
  return to_text(reports);
}

AxiomReport axioms_of(const std::string& text, const std::optional<std::string>& set_name, const CheckConfig& config) {
  const auto expr = parse_any(text, config);
  if (expr.negation) throw PreconditionError("axiom sets apply to fusion functions and implications, not negations");
  std::optional<AxiomSet> set;
  if (set_name) {
    set = axiom_set_from_string(*set_name);
    if (!set) throw ParseError("unknown axiom set '" + *set_name + "' (expected O, G, GO, T, A or I)");
  }
  if (expr.implication) {
    if (set && *set != AxiomSet::implication) return check_axioms(expr.implication->as_fusion(), *set, config);
    return check_implication_axioms(*expr.implication, config);
  }
  return check_axioms(*expr.fusion, set.value_or(default_set(expr.fusion->role())), config);
}

Outcome run_axioms(const Command& cmd, Format format) {
  const auto report = axioms_of(cmd.targets.at(0), cmd.axiom_set, cmd.config);
  Outcome out;
  out.out = render(report, format);
  if (cmd.assert_results && !report.passed()) out.exit_code = kExitPropertyFailure;
  return out;
}

std::vector<PropertyReport> properties_of(const Implication& i, const std::vector<std::string>& names,
                                          const std::optional<Negation>& n, const CheckConfig& config) {
  std::vector<Property> props;
  const bool explicit_list = !names.empty();
  if (explicit_list) {
    for (const auto& name : names) {
      const auto p = property_from_string(name);
      if (!p) throw ParseError("unknown property '" + name + "'");
      props.push_back(*p);
    }
  } else {
    props = all_properties();
  }
  std::vector<PropertyReport> reports;
  for (Property p : props) {
    if (needs_negation(p) && !n) {
      if (explicit_list) throw PreconditionError(std::string(to_string(p)) + " needs --neg");
      continue;
    }
    reports.push_back(check_property(i, p, n, config));
  }
  return reports;
}

Outcome run_props(const Command& cmd, Format format) {
  const auto i = parse_implication(cmd.targets.at(0), cmd.config);
  std::optional<Negation> n;
  if (cmd.negation) n = parse_negation(*cmd.negation, cmd.config);
  const auto reports = properties_of(i, cmd.properties, n, cmd.config);
  Outcome out;
  out.out = render(reports, format);
  const bool all_hold = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds(); });
  if (cmd.assert_results && !all_hold) out.exit_code = kExitPropertyFailure;
  return out;
}

Outcome run_compare(const Command& cmd, Format format) {
  const auto a = parse_implication(cmd.targets.at(0), cmd.config);
  const auto b = parse_implication(cmd.targets.at(1), cmd.config);
  const auto cmp = compare(a, b, cmd.config);
  const double tol = check_tolerance(cmd.config, combine(a.evaluation(), b.evaluation()));
  Outcome out;
  if (format == Format::json) {
    out.out = json{{"first", a.label()},
                   {"second", b.label()},
                   {"deviation", cmp.deviation},
                   {"at", {cmp.x, cmp.y}},
                   {"tolerance", tol},
                   {"samples_checked", cmp.samples_checked}}
                  .dump(2) +
              "\n";
  } else if (format == Format::csv) {
    out.out = csv_row({"first", "second", "deviation", "x", "y", "tolerance"}) + "\n" +
              csv_row({a.label(), b.label(), fmt(cmp.deviation), fmt(cmp.x), fmt(cmp.y), fmt(tol)}) + "\n";
  } else {
    out.out = "deviation " + fmt(cmp.deviation) + " at (" + fmt(cmp.x) + ", " + fmt(cmp.y) + "), tolerance " +
              fmt(tol) + "\n";
  }
  if (cmd.assert_results && cmp.deviation > tol) out.exit_code = kExitPropertyFailure;
  return out;
}

std::string observed_word(bool holds) { return holds ? "yes" : "no"; }

Outcome run_table2(const Command& cmd, Format format) {
  const auto cells = table2(cmd.config);
  const auto& columns = table2_columns();
  const auto& rows = table2_rows();
  Outcome out;
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& c : cells) {
      json j{{"property", c.row},         {"column", c.column},       {"observed", observed_word(c.observed)},
             {"printed", c.printed},      {"condition_met", c.condition_met},
             {"max_deviation", c.report.max_deviation}};
      j["expected"] = c.expected ? json(observed_word(*c.expected)) : json(nullptr);
      if (c.report.witness) j["witness"] = c.report.witness->point;
      arr.push_back(std::move(j));
    }
    json cols = json::array();
    for (const auto& c : columns) cols.push_back(json{{"header", c.header}, {"implication", c.implication}});
    out.out = json{{"columns", cols}, {"cells", arr}}.dump(2) + "\n";
  } else {
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header{"property"};
    std::vector<std::string> instance{"instance"};
    for (const auto& c : columns) {
      header.push_back(c.header);
      instance.push_back(c.implication);
    }
    table.push_back(header);
    table.push_back(instance);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<std::string> line{rows[r]};
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& cell = cells[r * columns.size() + c];
        std::string word = observed_word(cell.observed);
        if (format == Format::text && !cell.matches()) word += " (expected " + observed_word(*cell.expected) + ")";
        line.push_back(word);
      }
      table.push_back(std::move(line));
    }
    if (format == Format::csv) {
      for (const auto& line : table) out.out += csv_row(line) + "\n";
    } else {
      out.out = text_table(table);
    }
  }
  const bool all_match = std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.matches(); });
  if (cmd.assert_results && !all_match) out.exit_code = kExitPropertyFailure;
  return out;
}

std::string substitute(const std::string& templ, double value) {
  std::ostringstream v;
  v.precision(9);
  v << value;
  std::string out = templ;
  for (auto pos = out.find("{}"); pos != std::string::npos; pos = out.find("{}", pos + v.str().size())) {
    out.replace(pos, 2, v.str());
  }
  return out;
}

Outcome run_search(const Command& cmd, Format format) {
  const auto& templ = cmd.targets.at(0);
  if (templ.find("{}") == std::string::npos) throw ParseError("search template needs a {} placeholder");
  if (cmd.steps < 1) throw ParseError("--steps must be at least 1");
  if (!cmd.axiom_set && cmd.properties.empty()) throw ParseError("search needs --prop or --set");
  std::optional<Negation> n;
  if (cmd.negation) n = parse_negation(*cmd.negation, cmd.config);

  Outcome out;
  for (int k = 0; k < cmd.steps; ++k) {
    const double t =
        cmd.steps == 1 ? cmd.from : cmd.from + (cmd.to - cmd.from) * static_cast<double>(k) / (cmd.steps - 1);
    const std::string text = substitute(templ, t);
    std::string body;
    bool violated = false;
    if (cmd.axiom_set) {
      const auto report = axioms_of(text, cmd.axiom_set, cmd.config);
      violated = !report.passed();
      body = render(report, format);
    } else {
      const auto reports = properties_of(parse_implication(text, cmd.config), cmd.properties, n, cmd.config);
      violated = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.holds(); });
      body = render(reports, format);
    }
    if (violated) {
      if (format == Format::text) out.out = "violation at parameter " + fmt(t) + ": " + text + "\n";
      out.out += body;
      if (cmd.assert_results) out.exit_code = kExitPropertyFailure;
      return out;
    }
  }
  if (format == Format::json) {
    out.out = json{{"template", templ}, {"from", cmd.from}, {"to", cmd.to}, {"steps", cmd.steps},
                   {"violation", nullptr}}
                  .dump(2) +
              "\n";
  } else {
    out.out = "no violation for " + templ + " on [" + fmt(cmd.from) + ", " + fmt(cmd.to) + "] in " +
              std::to_string(cmd.steps) + " steps\n";
  }
  return out;
}

Outcome run_catalog(Format format) {
  Outcome out;
  const auto& entries = grammar_entries();
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(json{{"kind", e.kind}, {"syntax", e.syntax}, {"summary", e.summary}});
    out.out = arr.dump(2) + "\n";
  } else if (format == Format::csv) {
    out.out = csv_row({"kind", "syntax", "summary"}) + "\n";
    for (const auto& e : entries) out.out += csv_row({e.kind, e.syntax, e.summary}) + "\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"kind", "syntax", "summary"}};
    for (const auto& e : entries) rows.push_back({e.kind, e.syntax, e.summary});
    out.out = text_table(rows);
  }
  return out;
}

}  // namespace

std::optional<std::string> process_env(std::string_view name) {
  const char* v = std::getenv(std::string(name).c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

Command parse_command(const std::vector<std::string>& args, const EnvLookup& env) {
  CLI::App app{"Fuzzy implications from general overlap functions and negations", "overlapkit"};
  app.require_subcommand(1);
  Flags flags;
  Command cmd;
  std::string first;
  std::string second;

  auto* eval = app.add_subcommand("eval", "evaluate an expression at a point or over the grid");
  eval->add_option("expression", first, "negation, fusion function or implication")->required();
  eval->add_option("--at", cmd.at, "coordinates of the point")->expected(1, 64);
  add_common(eval, flags);

  auto* axioms = app.add_subcommand("axioms", "check an axiom set on the grid");
  axioms->add_option("expression", first, "fusion function or implication")->required();
  axioms->add_option("--set", cmd.axiom_set, "O, G, GO, T, A or I (default from the expression's role)");
  add_common(axioms, flags);

  auto* props = app.add_subcommand("props", "check implication properties");
  props->add_option("expression", first, "implication")->required();
  props->add_option("--prop", cmd.properties, "NP IP EP EP1 IB LOP ROP CP L-CP R-CP (default: all)");
  props->add_option("--neg", cmd.negation, "negation for CP, L-CP and R-CP");
  add_common(props, flags);

  auto* cmp = app.add_subcommand("compare", "sup deviation between two implications");
  cmp->add_option("first", first, "implication")->required();
  cmp->add_option("second", second, "implication")->required();
  add_common(cmp, flags);

  auto* t2 = app.add_subcommand("table2", "property matrix of (T,N)- and (GO,N)-implications");
  add_common(t2, flags);

  auto* search = app.add_subcommand("search", "scan a parameter range for the first violation");
  search->add_option("template", first, "expression with {} where the parameter goes")->required();
  search->add_option("--from", cmd.from, "first parameter value");
  search->add_option("--to", cmd.to, "last parameter value");
  search->add_option("--steps", cmd.steps, "number of parameter values");
  search->add_option("--prop", cmd.properties, "implication properties to check");
  search->add_option("--neg", cmd.negation, "negation for CP, L-CP and R-CP");
  search->add_option("--set", cmd.axiom_set, "axiom set to check instead of properties");
  add_common(search, flags);

  auto* catalog_cmd = app.add_subcommand("catalog", "list every named constructor");
  add_common(catalog_cmd, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream o;
    std::ostringstream er;
    app.exit(e, o, er);
    throw HelpRequested{o.str()};
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream o;
    std::ostringstream er;
    app.exit(e, o, er);
    throw HelpRequested{o.str()};
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "eval") cmd.verb = Verb::eval;
  if (name == "axioms") cmd.verb = Verb::axioms;
  if (name == "props") cmd.verb = Verb::props;
  if (name == "compare") cmd.verb = Verb::compare;
  if (name == "table2") cmd.verb = Verb::table2;
  if (name == "search") cmd.verb = Verb::search;
  if (name == "catalog") cmd.verb = Verb::catalog;
  if (!first.empty()) cmd.targets.push_back(first);
  if (!second.empty()) cmd.targets.push_back(second);

  try {
    std::optional<std::string> path = flags.config_path;
    if (!path) path = env("OVERLAPKIT_CONFIG");
    if (path && !path->empty()) cmd.config = load_config(*path);
    if (flags.grid) cmd.config.grid_resolution = *flags.grid;
    if (flags.samples) cmd.config.random_samples = *flags.samples;
    if (flags.seed) cmd.config.rng_seed = *flags.seed;
    if (flags.tol) cmd.config.eq_tol = *flags.tol;
    if (flags.bisect_tol) cmd.config.bisect_tol = *flags.bisect_tol;
    cmd.config.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  if (!flags.format.empty()) cmd.format = format_from(flags.format);
  cmd.assert_results = flags.assert_results;
  return cmd;
}

Outcome run(const Command& command) {
  const Format format = command.format.value_or(command.verb == Verb::table2 ? Format::csv : Format::text);
  switch (command.verb) {
    case Verb::eval: return run_eval(command, format);
    case Verb::axioms: return run_axioms(command, format);
    case Verb::props: return run_props(command, format);
    case Verb::compare: return run_compare(command, format);
    case Verb::table2: return run_table2(command, format);
    case Verb::search: return run_search(command, format);
    case Verb::catalog: return run_catalog(format);
  }
  return {};
}

Outcome run_cli(const std::vector<std::string>& args, const EnvLookup& env) {
  try {
    return run(parse_command(args, env));
  } catch (const HelpRequested& h) {
    return {kExitOk, h.text, {}};
  } catch (const ParseError& e) {
    return {kExitParse, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitParse, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return {kExitPrecondition, {}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace overlapkit::cli
