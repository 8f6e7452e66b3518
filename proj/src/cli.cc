// Copyright 2026 The sumsetlab Authors
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

#include "sumsetlab/cli.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sumsetlab/conjecture_harness.h"
#include "sumsetlab/constructions.h"
#include "sumsetlab/extremal_search.h"
#include "sumsetlab/literals.h"
#include "sumsetlab/lp_certificates.h"
#include "sumsetlab/parallel.h"
#include "sumsetlab/set_engine.h"
#include "sumsetlab/spectral.h"
#include "sumsetlab/subgroup.h"

namespace sumsetlab {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::vector<std::string> groups;
  int k = 0;
  int kmax = 4;
  int rho = 0;
  int n = 0;
  std::string kind;
  std::string set;
  std::string cosets = "0,1";
  std::string parity;
  std::string definition = "generating";
  std::string suite;
  std::string sampler;
  std::string lp_case;
  bool all = false;
  bool verify = false;
  double lo = -1;
  double hi = -1;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t budget = SearchOptions{}.budget;
  int threads = 0;
};

std::vector<std::int64_t> ParseIntList(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("not an integer list: \"" + text + "\"");
    }
  }
  return out;
}

GroupSpec RequireGroup(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  return ParseGroupLiteral(o.group);
}

void RequirePositive(int value, const char* flag) {
  if (value < 1) throw UsageError(std::string(flag) + " must be a positive integer");
}

SearchOptions MakeSearchOptions(const Options& o) {
  SearchOptions s;
  s.budget = o.budget;
  s.threads = o.threads;
  return s;
}

json KnownJson(const std::vector<KnownValue>& known) {
  json out = json::array();
  for (const KnownValue& v : known) out.push_back({{"value", v.value}, {"source", v.source}});
  return out;
}

std::string CsvField(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return v.dump();
}

// Rows of flat objects with the given columns.
std::string Csv(const json& rows, const std::vector<std::string>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += "\n";
  for (const json& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out += (i ? "," : "") + CsvField(row.value(columns[i], json()));
    }
    out += "\n";
  }
  return out;
}

void CmdMk(const Options& o, CommandResult& r) {
  const GroupSpec spec = RequireGroup(o);
  RequirePositive(o.k, "--k");
  const MkFormulaResult f = MkFormula(spec, o.k);
  r.payload = {{"group", spec.ToString()},
               {"k", o.k},
               {"formula", {{"value", f.value}, {"divisor", f.divisor}}},
               {"value", f.value}};
  try {
    const SearchReport s = MkBruteforce(spec, o.k, MakeSearchOptions(o));
    r.payload["search"] = ToJson(s);
    r.payload["agree"] = s.value == f.value;
    if (s.value != f.value) r.verdict = Verdict::kCounterexample;
    r.summary = "M_" + std::to_string(o.k) + "(" + spec.ToString() + ") = " +
                std::to_string(f.value) + " (formula), " + std::to_string(s.value) + " (search)";
  } catch (const BudgetExceeded& e) {
    r.payload["search"] = nullptr;
    r.payload["search_refused"] = e.what();
    r.summary = "M_" + std::to_string(o.k) + "(" + spec.ToString() + ") = " +
                std::to_string(f.value) + " (formula; search refused)";
  }
}

void CmdNk(const Options& o, CommandResult& r) {
  const GroupSpec spec = RequireGroup(o);
  RequirePositive(o.k, "--k");
  const SearchReport s = NkSearch(spec, o.k, MakeSearchOptions(o));
  const std::vector<KnownValue> known = LookupKnownValues(spec, o.k);
  r.payload = ToJson(s);
  r.payload["known"] = KnownJson(known);
  bool agree = true;
  for (const KnownValue& v : known) agree &= v.value == s.value;
  r.payload["agree"] = agree;
  if (!agree) r.verdict = Verdict::kCounterexample;
  r.summary = "N_" + std::to_string(o.k) + "(" + spec.ToString() + ") = " +
              std::to_string(s.value) + (known.empty() ? "" : agree ? ", matches known value"
                                                                    : ", DISAGREES with known value");
}

void CmdBt(const Options& o, CommandResult& r) {
  const GroupSpec spec = RequireGroup(o);
  RequirePositive(o.rho, "--rho");
  BtDefinition def;
  if (o.definition == "generating") {
    def = BtDefinition::kGenerating;
  } else if (o.definition == "simplified") {
    def = BtDefinition::kSimplified;
  } else {
    throw UsageError("--definition must be generating or simplified");
  }
  const SearchReport s = BtRhoSearch(spec, o.rho, MakeSearchOptions(o), def);
  r.payload = ToJson(s);
  r.payload["definition"] = o.definition;
  r.summary = "b+_" + std::to_string(o.rho) + "(" + spec.ToString() + ") = " + std::to_string(s.value);
}

void CmdDiam(const Options& o, CommandResult& r) {
  const GroupSpec spec = RequireGroup(o);
  const std::int64_t formula = DiamPlus(spec);
  r.payload = {{"group", spec.ToString()}, {"diam_plus", formula}, {"value", formula}};
  r.summary = "diam+(" + spec.ToString() + ") = " + std::to_string(formula);
  try {
    const std::int64_t brute = DiamPlusBruteforce(spec);
    r.payload["bruteforce"] = brute;
    r.payload["agree"] = brute == formula;
    if (brute != formula) r.verdict = Verdict::kCounterexample;
    r.summary += ", bruteforce " + std::to_string(brute);
  } catch (const BudgetExceeded&) {
    r.payload["bruteforce"] = nullptr;
  }
}

Construction Build(const Options& o) {
  if (o.kind == "decomp") return BuildDecomp(ParseIntList(o.group));
  if (o.kind == "two_coset") {
    RequirePositive(o.n, "--n");
    const std::vector<std::int64_t> ij = ParseIntList(o.cosets);
    if (ij.size() != 2) throw UsageError("--cosets takes two indices, e.g. 0,1");
    return BuildTwoCoset(o.n, static_cast<int>(ij[0]), static_cast<int>(ij[1]));
  }
  if (o.kind == "x22") {
    RequirePositive(o.n, "--n");
    return BuildX22(o.n);
  }
  if (o.kind == "mod3" || o.kind == "mod3_odd" || o.kind == "mod3_even") {
    std::optional<Parity> parity;
    if (o.kind == "mod3_odd" || o.parity == "odd") parity = Parity::kOdd;
    if (o.kind == "mod3_even" || o.parity == "even") parity = Parity::kEven;
    return BuildMod3(ParseIntList(o.group), parity);
  }
  throw UsageError("--kind must be decomp, two_coset, x22, mod3, mod3_odd or mod3_even");
}

void CmdConstruct(const Options& o, CommandResult& r) {
  const Construction c = Build(o);
  r.payload = ToJson(c, o.verify);
  r.summary = c.kind + " in " + c.set.group()->spec().ToString() + ": " +
              std::to_string(c.set.size()) + " elements";
  if (o.verify) {
    if (!c.AllPass()) r.verdict = Verdict::kCounterexample;
    r.summary += c.AllPass() ? ", every claimed property holds" : ", a claimed property FAILS";
  }
}

void CmdSpectral(const Options& o, CommandResult& r) {
  if (o.set.empty()) throw UsageError("--set is required");
  GroupSpec spec;
  if (!o.group.empty()) {
    spec = ParseGroupLiteral(o.group);
  } else if (const auto colon = o.set.find(':'); colon != std::string::npos) {
    spec = ParseGroupLiteral(o.set.substr(0, colon));
  } else {
    // Z_5^n with n read off the first element literal.
    const auto open = o.set.find('(');
    const auto close = o.set.find(')', open);
    if (open == std::string::npos || close == std::string::npos) {
      throw UsageError("cannot infer the group from --set; pass --group");
    }
    const auto coords = std::count(o.set.begin() + open, o.set.begin() + close, ',') + 1;
    spec = GroupSpec::FromChain(std::vector<std::int64_t>(coords, 5));
  }
  const DenseSubset a = ParseSetLiteral(o.set, Group::Make(spec));
  const SpectralWitness w = FindWitness(a);
  const Complex cubic = CubicSum(a);
  const double alpha = static_cast<double>(a.size()) / static_cast<double>(spec.order());
  const double parseval = ParsevalOffPrincipal(a);
  json witness = ToJson(w);
  r.payload = {{"group", spec.ToString()},
               {"set", FormatSetLiteral(a)},
               {"alpha", alpha},
               {"cubic_sum", {cubic.real(), cubic.imag()}},
               {"parseval", {{"off_principal", parseval},
                             {"expected", alpha - alpha * alpha},
                             {"error", std::abs(parseval - (alpha - alpha * alpha))}}},
               {"witness", witness}};
  const bool ok = std::abs(cubic) <= 1e-10 && std::abs(parseval - (alpha - alpha * alpha)) <= 1e-12 &&
                  w.realpart >= w.bound - 1e-12;
  if (!ok) r.verdict = Verdict::kCounterexample;
  std::ostringstream s;
  s << "Re z = " << w.realpart << ", bound alpha^2/(1-alpha) = " << w.bound
    << (ok ? "" : ", an identity FAILS");
  r.summary = s.str();
}

void CmdLpCert(const Options& o, CommandResult& r) {
  std::vector<LpInstance> instances;
  if (o.all) {
    for (LpCase c : {LpCase::kI, LpCase::kII}) {
      for (int k = 0; k < 5; ++k) instances.push_back(LpInstance::Make(c, k));
    }
  } else {
    if (o.lp_case != "I" && o.lp_case != "II") throw UsageError("pass --all or --case I|II --k K");
    if (o.k < 0 || o.k > 4) throw UsageError("--k must be in [0, 4] for lp-cert");
    instances.push_back(LpInstance::Make(o.lp_case == "I" ? LpCase::kI : LpCase::kII, o.k));
  }
  json certs = json::array();
  double min_margin = INFINITY;
  int failed = 0;
  for (const LpInstance& inst : instances) {
    const LpCertificate c = Certify(inst);
    certs.push_back(ToJson(c));
    min_margin = std::min(min_margin, c.margin);
    failed += !c.certified;
  }
  r.payload = {{"certificates", certs}, {"min_margin", min_margin}};
  if (failed) r.verdict = Verdict::kCounterexample;
  r.summary = std::to_string(certs.size()) + " certificates, " + std::to_string(failed) +
              " failed, least margin " + std::to_string(min_margin);
  json rows = json::array();
  for (const json& c : certs) {
    json row = c;
    for (int j = 0; j < 5; ++j) {
      row["alpha" + std::to_string(j)] = c["argmin"][j];
    }
    rows.push_back(row);
  }
  r.csv = Csv(rows, {"case", "k", "minimum", "error_bound", "margin", "method_agreement", "alpha0",
                     "alpha1", "alpha2", "alpha3", "alpha4", "verdict"});
}

int FiveRank(const GroupSpec& spec) {
  if (!spec.is_elementary(5)) throw UsageError("this suite needs --group 5,...,5");
  return spec.rank();
}

void CmdHarness(const Options& o, CommandResult& r) {
  std::int64_t violations = 0;
  json reports = json::array();
  const auto sampler = [&](SamplerKind fallback) {
    if (o.sampler.empty()) return fallback;
    const auto kind = ParseSamplerKind(o.sampler);
    if (!kind) throw UsageError("--sampler must be uniform, window or perturb");
    return *kind;
  };
  const auto config = [&](SamplerKind fallback, double lo, double hi) {
    TrialConfig cfg;
    cfg.group = RequireGroup(o);
    cfg.sampler = sampler(fallback);
    cfg.lo = o.lo >= 0 ? o.lo : lo;
    cfg.hi = o.hi >= 0 ? o.hi : hi;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    return cfg;
  };
  const auto add = [&](const SuiteReport& s) {
    violations += static_cast<std::int64_t>(s.violations.size());
    reports.push_back(ToJson(s));
  };
  if (o.trials < 1) throw UsageError("--trials must be positive");

  if (o.suite == "kneser") {
    add(CheckKneserSuite(config(SamplerKind::kUniformSize, 0, 1)));
  } else if (o.suite == "props") {
    const int n = FiveRank(RequireGroup(o));
    add(CheckQuarterDensity(config(SamplerKind::kUniformSize, 0, 1)));
    if (n <= 3) {
      add(CheckCosetPropositions(config(SamplerKind::kPerturbation, 0.3, 0.5)));
      if (n >= 2) add(CheckTripleSum(config(SamplerKind::kUniformSize, 0, 1)));
    }
  } else if (o.suite == "stability") {
    const int n = o.group.empty() ? o.n : FiveRank(RequireGroup(o));
    if (n <= 2) {
      const StabilityReport s = VerifyStabilityExhaustive(n, -1, -1, o.threads, o.seed);
      violations += static_cast<std::int64_t>(s.violations.size());
      reports.push_back(ToJson(s));
    } else {
      FalsifierConfig f;
      f.n = n;
      f.restarts = o.trials;
      f.seed = o.seed;
      f.threads = o.threads;
      const FalsifierReport s = FalsifyStabilityStochastic(f);
      violations += static_cast<std::int64_t>(s.violations.size());
      reports.push_back(ToJson(s));
    }
  } else {
    throw UsageError("--suite must be kneser, props or stability");
  }
  r.payload = {{"suite", o.suite}, {"reports", reports}, {"violations", violations}};
  if (violations) r.verdict = Verdict::kCounterexample;
  r.summary = o.suite + ": " + std::to_string(violations) + " violations";
}

void CmdTable(const Options& o, CommandResult& r) {
  std::vector<std::string> groups = o.groups;
  if (groups.empty()) groups = {"5", "7", "3,3", "2,2,2,2", "5,5"};
  RequirePositive(o.kmax, "--kmax");
  json rows = json::array();
  int disagreements = 0;
  for (const std::string& literal : groups) {
    const GroupSpec spec = ParseGroupLiteral(literal);
    for (int k = 1; k <= o.kmax; ++k) {
      const std::vector<KnownValue> known = LookupKnownValues(spec, k);
      json row = {{"group", spec.is_trivial() ? "trivial" : spec.ToString()}, {"k", k}};
      row["known_value"] = known.empty() ? json() : json(known.front().value);
      row["source"] = known.empty() ? json() : json(known.front().source);
      std::optional<std::int64_t> search;
      try {
        search = NkSearch(spec, k, MakeSearchOptions(o)).value;
        row["search_value"] = *search;
      } catch (const BudgetExceeded&) {
        row["search_value"] = nullptr;
      }
      bool agree = true;
      for (const KnownValue& v : known) agree &= !search || v.value == *search;
      row["compared"] = search.has_value() && !known.empty();
      row["agree"] = agree;
      disagreements += !agree;
      rows.push_back(row);
    }
  }
  r.payload = {{"rows", rows}, {"disagreements", disagreements}};
  if (disagreements) r.verdict = Verdict::kCounterexample;
  r.summary = std::to_string(rows.size()) + " rows, " + std::to_string(disagreements) +
              " disagreements";
  r.csv = Csv(rows, {"group", "k", "known_value", "source", "search_value", "compared", "agree"});
}

}  // namespace

std::string ToString(Verdict v) {
  switch (v) {
    case Verdict::kOk:
      return "ok";
    case Verdict::kCounterexample:
      return "counterexample";
    case Verdict::kError:
      return "error";
  }
  return "error";
}

int ExitCode(Verdict v) {
  switch (v) {
    case Verdict::kOk:
      return 0;
    case Verdict::kCounterexample:
      return 1;
    case Verdict::kError:
      return 2;
  }
  return 2;
}

CommandResult Run(const std::vector<std::string>& args) {
  CommandResult r;
  Options o;
  bool json_flag = false;
  CLI::App app("Sumsets in finite abelian groups: extremal constants, constructions and "
               "certificates.",
               "sumsetlab");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads (default: SUMSETLAB_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", r.out_path, "Write the output to this file instead of stdout");
  app.add_option("--budget", o.budget, "Largest number of candidate subsets a search may test");
  app.add_option("--seed", o.seed, "Seed for randomized commands");
  auto* json_opt = app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--csv", r.want_csv, "CSV output (lp-cert, table)")->excludes(json_opt);

  std::map<std::string, std::function<void(const Options&, CommandResult&)>> handlers;
  const auto sub = [&](const std::string& name, const std::string& help,
                       std::function<void(const Options&, CommandResult&)> fn) {
    handlers[name] = std::move(fn);
    return app.add_subcommand(name, help);
  };

  auto* mk = sub("mk", "M_k(G) by formula and by search", CmdMk);
  mk->add_option("--group", o.group, "Group, e.g. 5,5")->required();
  mk->add_option("--k", o.k)->required();

  auto* nk = sub("nk", "N_k(G) by size-descending search, checked against known values", CmdNk);
  nk->add_option("--group", o.group)->required();
  nk->add_option("--k", o.k)->required();

  auto* bt = sub("bt", "b+_rho(G) by search", CmdBt);
  bt->add_option("--group", o.group)->required();
  bt->add_option("--rho", o.rho)->required();
  bt->add_option("--definition", o.definition, "generating or simplified");

  auto* diam = sub("diam", "diam+(G) by formula and, for |G| <= 12, by enumeration", CmdDiam);
  diam->add_option("--group", o.group)->required();

  auto* construct = sub("construct", "Build and verify an explicit large set", CmdConstruct);
  construct->add_option("--kind", o.kind, "decomp, two_coset, x22, mod3, mod3_odd, mod3_even")
      ->required();
  construct->add_option("--n", o.n, "Rank n of Z_5^n (two_coset, x22)");
  construct->add_option("--group", o.group, "Cyclic orders of the summands (decomp, mod3)");
  construct->add_option("--cosets", o.cosets, "Coset indices i,j (two_coset)");
  construct->add_option("--parity", o.parity, "odd or even (mod3)");
  construct->add_flag("--verify", o.verify, "Check every claimed property");

  auto* spectral = sub("spectral", "Fourier witness for A in Z_5^n with 0 not in 3A", CmdSpectral);
  spectral->add_option("--set", o.set, "Set literal")->required();
  spectral->add_option("--group", o.group, "Group (default: read off the set literal)");

  auto* lp = sub("lp-cert", "Exact certificates for the coset density programs", CmdLpCert);
  lp->add_flag("--all", o.all, "All ten instances");
  lp->add_option("--case", o.lp_case, "I or II");
  lp->add_option("--k", o.k, "Relaxed coset index in [0, 4]");

  auto* harness = sub("harness", "Randomized and exhaustive property checks", CmdHarness);
  harness->add_option("--suite", o.suite, "kneser, props or stability")->required();
  harness->add_option("--group", o.group);
  harness->add_option("--n", o.n, "Rank of Z_5^n (stability, instead of --group)");
  harness->add_option("--trials", o.trials, "Trials, or restarts of the stochastic search");
  harness->add_option("--sampler", o.sampler, "uniform, window or perturb");
  harness->add_option("--lo", o.lo, "Least density of sampled sets");
  harness->add_option("--hi", o.hi, "Greatest density of sampled sets");

  auto* table = sub("table", "Known N_k values against search for a list of groups", CmdTable);
  table->add_option("--group", o.groups, "Group (repeatable; default 5, 7, 3,3, 2,2,2,2, 5,5)")
      ->delimiter(';');
  table->add_option("--kmax", o.kmax, "Largest k");

  const auto start = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    const CLI::App* chosen = app.get_subcommands().front();
    r.command = chosen->get_name();
    if (r.want_csv && r.command != "lp-cert" && r.command != "table") {
      throw UsageError("--csv is not supported by " + r.command);
    }
    handlers.at(r.command)(o, r);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    r.help = chosen.empty() ? app.help() : chosen.front()->help();
  } catch (const CLI::CallForAllHelp&) {
    r.help = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::ParseError& e) {
    r.verdict = Verdict::kError;
    r.payload = {{"error", e.what()}};
    r.summary = std::string("usage error: ") + e.what() + " (see --help)";
  } catch (const UsageError& e) {
    r.verdict = Verdict::kError;
    r.payload = {{"error", e.what()}};
    r.summary = std::string("usage error: ") + e.what();
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::kError;
    r.payload = {{"error", std::string("budget refused: ") + e.what()}};
    r.summary = std::string("budget refused: ") + e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::kError;
    r.payload = {{"error", e.what()}};
    r.summary = std::string("error: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

json Document(const CommandResult& r) {
  json doc = r.payload.is_object() ? r.payload : json{{"payload", r.payload}};
  doc["command"] = r.command;
  doc["verdict"] = ToString(r.verdict);
  doc["elapsed_ms"] = r.elapsed_ms;
  return doc;
}

int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const CommandResult r = Run(args);
  if (!r.help.empty()) {
    out << r.help;
    return 0;
  }
  const std::string text =
      r.want_csv && r.verdict != Verdict::kError ? r.csv : Document(r).dump(2) + "\n";
  if (r.out_path.empty() || r.verdict == Verdict::kError) {
    out << text;
  } else {
    std::ofstream file(r.out_path);
    file << text;
    if (!file) {
      err << "error: cannot write " << r.out_path << "\n";
      return ExitCode(Verdict::kError);
    }
  }
  err << (r.command.empty() ? "sumsetlab" : r.command) << ": " << r.summary << " ["
      << ToString(r.verdict) << ", " << static_cast<std::int64_t>(r.elapsed_ms) << " ms]\n";
  return ExitCode(r.verdict);
}

}  // namespace sumsetlab
