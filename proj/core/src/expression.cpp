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

#include "overlapkit/expression.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "overlapkit/aggregation.hpp"
#include "overlapkit/conjunctors.hpp"

namespace overlapkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw ParseError("cannot parse '" + std::string(text) + "': " + why);
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) fail(text, "expected a number");
  return v;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// Splits at `sep` outside parentheses.
std::vector<std::string_view> split_top(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (--depth < 0) fail(text, "unbalanced ')'");
    }
    if (c == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) fail(text, "unbalanced '('");
  out.push_back(trim(text.substr(start)));
  return out;
}

bool is_bare_assignment(std::string_view piece) {
  const auto eq = piece.find('=');
  if (eq == std::string_view::npos || piece.find('(') != std::string_view::npos) return false;
  return is_identifier(trim(piece.substr(0, eq)));
}

// Argument lists split at commas; a bare `k=v` piece continues the
// parameter list of the argument before it ("trunc:O_P:p=1,a=0.5").
std::vector<std::string> split_args(std::string_view text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  for (auto piece : split_top(text, ',')) {
    if (piece.empty()) fail(text, "empty argument");
    if (!out.empty() && is_bare_assignment(piece)) {
      out.back() += ",";
      out.back() += piece;
    } else {
      out.emplace_back(piece);
    }
  }
  return out;
}

struct Call {
  std::string name;
  std::string inner;
};

// "name(inner)" with the closing parenthesis last, or nullopt for an atom.
std::optional<Call> as_call(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    if (text.find(')') != std::string_view::npos) fail(text, "unbalanced ')'");
    return std::nullopt;
  }
  if (text.back() != ')') fail(text, "trailing text after ')'");
  const auto name = trim(text.substr(0, open));
  if (!is_identifier(name)) fail(text, "expected a constructor name before '('");
  const auto inner = text.substr(open + 1, text.size() - open - 2);
  split_top(inner, ',');  // balance check
  return Call{std::string(name), std::string(inner)};
}

std::vector<std::string> expect_args(const Call& call, std::string_view text, std::size_t count) {
  auto args = split_args(call.inner);
  if (args.size() != count) {
    fail(text, call.name + " takes " + std::to_string(count) + " argument(s), got " + std::to_string(args.size()));
  }
  return args;
}

struct Atom {
  std::string name;
  std::string rest;
};

Atom split_atom(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return {std::string(text), {}};
  return {std::string(trim(text.substr(0, colon))), std::string(trim(text.substr(colon + 1)))};
}

Params parse_params(std::string_view text) {
  Params out;
  if (trim(text).empty()) return out;
  for (auto piece : split_top(text, ',')) {
    const auto eq = piece.find('=');
    if (eq == std::string_view::npos) fail(piece, "expected key=value");
    const auto key = trim(piece.substr(0, eq));
    if (!is_identifier(key)) fail(piece, "bad parameter name");
    out.emplace_back(std::string(key), parse_number(piece.substr(eq + 1)));
  }
  return out;
}

double take_param(Params& params, std::string_view key, std::string_view text) {
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (it->first == key) {
      const double v = it->second;
      params.erase(it);
      return v;
    }
  }
  fail(text, "missing parameter '" + std::string(key) + "'");
}

void no_params_left(const Params& params, std::string_view text) {
  if (!params.empty()) fail(text, "unexpected parameter '" + params.front().first + "'");
}

bool is_catalog_name(std::string_view name) {
  for (const auto& n : catalog_names()) {
    if (n == name) return true;
  }
  return false;
}

bool is_aggregation_name(std::string_view name) {
  for (const auto& n : aggregation_names()) {
    if (n == name) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(const CheckConfig& config) : config_(config) {}

  Negation negation(std::string_view text) {
    text = trim(text);
    if (text.empty()) fail(text, "empty negation");
    if (const auto call = as_call(text)) {
      if (call->name == "inverse") {
        const auto args = expect_args(*call, text, 1);
        return make_inverse(negation(args[0]), config_.bisect_tol);
      }
      if (call->name == "natural") {
        const auto args = expect_args(*call, text, 1);
        return natural_negation(implication(args[0]), config_);
      }
      fail(text, "unknown negation constructor '" + call->name + "'");
    }
    const auto atom = split_atom(text);
    if (atom.name == "zadeh" || atom.name == "standard") {
      no_rest(atom, text);
      return make_standard();
    }
    if (atom.name == "bottom") {
      no_rest(atom, text);
      return make_bottom();
    }
    if (atom.name == "top") {
      no_rest(atom, text);
      return make_top();
    }
    if (atom.name == "crisp_lower" || atom.name == "crisp_upper") {
      const double a = parse_number(atom.rest);
      if (!(a >= 0.0 && a <= 1.0)) fail(text, "alpha must lie in [0,1]");
      return make_crisp(atom.name == "crisp_lower" ? CrispSide::lower : CrispSide::upper, UnitValue(a));
    }
    if (atom.name == "power") return make_power_strict(parse_number(atom.rest));
    fail(text, "unknown negation '" + atom.name + "'");
  }

  FusionFunction fusion(std::string_view text) {
    text = trim(text);
    if (text.empty()) fail(text, "empty fusion function");
    if (const auto call = as_call(text)) return fusion_call(*call, text);

    const auto atom = split_atom(text);
    if (is_catalog_name(atom.name)) return catalog(atom.name, parse_params(atom.rest));
    if (atom.name == "trunc") return truncated(atom.rest, text);
    if (atom.name == "neutral_go") {
      auto params = parse_params(atom.rest);
      const double e = take_param(params, "e", text);
      no_params_left(params, text);
      return piecewise_neutral_go(e);
    }
    if (atom.name == "idem_go") {
      auto params = parse_params(atom.rest);
      const double p = take_param(params, "p", text);
      const double q = take_param(params, "q", text);
      no_params_left(params, text);
      return idempotent_go(p, q);
    }
    if (atom.name == "max_grouping") {
      no_rest(atom, text);
      return max_grouping();
    }
    if (atom.name == "probsum") {
      no_rest(atom, text);
      return probabilistic_sum();
    }
    if (is_aggregation_name(atom.name) && atom.name != "identity") {
      no_rest(atom, text);
      return make_aggregation(atom.name, 2);
    }
    fail(text, "unknown fusion function '" + atom.name + "'");
  }

  Implication implication(std::string_view text) {
    text = trim(text);
    const auto call = as_call(text);
    if (!call) fail(text, "expected an implication constructor such as gon(F, N)");
    const auto& name = call->name;
    if (name == "gon") {
      const auto args = expect_args(*call, text, 2);
      return make_gon(fusion(args[0]), negation(args[1]));
    }
    if (name == "gn") {
      const auto args = expect_args(*call, text, 2);
      return make_gn(fusion(args[0]), negation(args[1]));
    }
    if (name == "ql") {
      const auto args = expect_args(*call, text, 2);
      return make_ql(fusion(args[0]), fusion(args[1]));
    }
    if (name == "ro") {
      const auto args = expect_args(*call, text, 1);
      return make_residual(fusion(args[0]), config_);
    }
    if (name == "d") {
      const auto args = expect_args(*call, text, 1);
      return make_d(fusion(args[0]));
    }
    if (name == "tn") {
      const auto args = expect_args(*call, text, 2);
      return make_tn(fusion(args[0]), negation(args[1]), config_);
    }
    if (name == "crisp") {
      const auto args = expect_args(*call, text, 3);
      const auto kind = crisp_kind_from_string(args[0]);
      if (!kind) fail(text, "crisp kind must be one of C1, C2, C3, C4");
      return make_crisp_family(*kind, parse_number(args[1]), parse_number(args[2]));
    }
    if (name == "agg") {
      const auto [a, members] = aggregation_call(*call, text);
      std::vector<Implication> family;
      for (const auto& m : members) family.push_back(implication(m));
      auto agg = make_aggregation(a, family.size());
      return aggregate(std::move(agg), OperatorFamily<Implication>(std::move(family)));
    }
    fail(text, "unknown implication constructor '" + name + "'");
  }

 private:
  static void no_rest(const Atom& atom, std::string_view text) {
    if (!atom.rest.empty()) fail(text, "'" + atom.name + "' takes no parameters");
  }

  FusionFunction truncated(std::string_view rest, std::string_view text) {
    const auto cut = rest.find_first_of(":,");
    const auto inner_name = trim(rest.substr(0, cut));
    auto params = cut == std::string_view::npos ? Params{} : parse_params(rest.substr(cut + 1));
    const double a = take_param(params, "a", text);
    if (!is_catalog_name(inner_name)) fail(text, "trunc needs a catalog overlap, got '" + std::string(inner_name) + "'");
    return truncate_overlap(catalog(inner_name, params), a);
  }

  std::pair<std::string, std::vector<std::string>> aggregation_call(const Call& call, std::string_view text) {
    const auto parts = split_top(call.inner, ';');
    if (parts.size() != 2) fail(text, "agg expects 'agg(A; member, member, ...)'");
    const std::string a(parts[0]);
    if (!is_aggregation_name(a)) fail(text, "unknown aggregation '" + a + "'");
    auto members = split_args(parts[1]);
    if (members.empty()) fail(text, "agg needs at least one member");
    return {a, std::move(members)};
  }

  FusionFunction fusion_call(const Call& call, std::string_view text) {
    const auto& name = call.name;
    if (name == "dualG") {
      const auto args = expect_args(call, text, 2);
      return grouping_from(fusion(args[0]), negation(args[1]), config_);
    }
    if (name == "dualO") {
      const auto args = expect_args(call, text, 2);
      return overlap_from(fusion(args[0]), negation(args[1]), config_);
    }
    if (name == "dual") {
      const auto args = expect_args(call, text, 2);
      return dual(fusion(args[0]), negation(args[1]));
    }
    if (name == "recover") {
      const auto args = expect_args(call, text, 2);
      return recover_go(implication(args[0]), negation(args[1]), config_.bisect_tol);
    }
    if (name == "agg") {
      const auto [a, members] = aggregation_call(call, text);
      std::vector<FusionFunction> family;
      bool all_go = true;
      for (const auto& m : members) {
        family.push_back(fusion(m));
        const Role r = family.back().role();
        all_go = all_go && (r == Role::overlap || r == Role::general_overlap);
      }
      const auto agg = make_aggregation(a, family.size());
      OperatorFamily<FusionFunction> fam(std::move(family));
      return all_go ? aggregate_go(agg, fam, config_) : aggregate(agg, fam);
    }
    fail(text, "unknown fusion constructor '" + name + "'");
  }

  const CheckConfig& config_;
};

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Negation parse_negation(std::string_view text, const CheckConfig& config) {
  return guarded([&] { return Parser(config).negation(text); });
}

FusionFunction parse_fusion(std::string_view text, const CheckConfig& config) {
  return guarded([&] { return Parser(config).fusion(text); });
}

Implication parse_implication(std::string_view text, const CheckConfig& config) {
  return guarded([&] { return Parser(config).implication(text); });
}

const std::vector<GrammarEntry>& grammar_entries() {
  static const std::vector<GrammarEntry> entries{
      {"negation", "zadeh", "N(x) = 1 - x (alias: standard)"},
      {"negation", "crisp_lower:A", "0 if x > A, else 1"},
      {"negation", "crisp_upper:A", "0 if x >= A, else 1"},
      {"negation", "bottom", "crisp_lower:0"},
      {"negation", "top", "crisp_upper:1"},
      {"negation", "power:P", "1 - x^P, strict for P > 0"},
      {"negation", "inverse(N)", "inverse of a strict negation, by bisection"},
      {"negation", "natural(I)", "x -> I(x, 0)"},
      {"fusion", "O_mM", "min(x,y) * max(x^2, y^2)"},
      {"fusion", "O_DB", "2xy / (x + y), 0 at the origin"},
      {"fusion", "O_P:p=P", "x^P y^P"},
      {"fusion", "O_V", "(1 + (2x-1)^2 (2y-1)^2) / 2 on [0.5,1]^2, else min"},
      {"fusion", "O_min", "min(x, y)"},
      {"fusion", "GO_max", "max(0, x^2 + y^2 - 1)"},
      {"fusion", "GO_TL:p=P", "min(x,y)^P * max(0, x + y - 1)"},
      {"fusion", "GO_PN:n=K", "K-ary: prod(x) * (0 if sum(x) <= 1 else min(x))"},
      {"fusion", "GO_GN:n=K", "K-ary: prod(x)^(1/K) * (0 if sum(x) <= 1 else min(x))"},
      {"fusion", "trunc:O:...,a=A", "truncated overlap O_a for a catalog overlap O"},
      {"fusion", "neutral_go:e=E", "general overlap with neutral element E"},
      {"fusion", "idem_go:p=P,q=Q", "((x^P y^Q + x^Q y^P) / 2)^(1/(P+Q))"},
      {"fusion", "max_grouping", "max(x, y) as a grouping function"},
      {"fusion", "probsum", "x + y - xy"},
      {"fusion", "mean | min | max | product", "binary aggregation functions"},
      {"fusion", "dualG(F, N)", "N(F(N(x), N(y))) as a grouping, N strict"},
      {"fusion", "dualO(G, N)", "N(G(N(x), N(y))) as a general overlap, N strict"},
      {"fusion", "dual(F, N)", "N-dual of any fusion function"},
      {"fusion", "recover(I, N)", "N^-1(I(x, N^-1(y))), N strict"},
      {"fusion", "agg(A; F1, ..., Fn)", "A(F1(x), ..., Fn(x)), A in mean|min|max|product"},
      {"implication", "gon(F, N)", "N(F(x, N(y)))"},
      {"implication", "gn(G, N)", "G(N(x), y)"},
      {"implication", "ql(O, G)", "G(0, O(1,y)) if x = 1, else 1"},
      {"implication", "ro(O)", "max{z : O(x,z) <= y}"},
      {"implication", "d(G)", "G(0,y) if x = 1, else 1"},
      {"implication", "tn(T, N)", "N(T(x, N(y))) for a t-norm T"},
      {"implication", "crisp(Ck, A, B)", "two-valued family C1..C4 with thresholds A, B"},
      {"implication", "agg(A; I1, ..., In)", "A(I1(x,y), ..., In(x,y))"},
  };
  return entries;
}

}  // namespace overlapkit
