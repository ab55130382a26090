#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cppforge/constructions.hpp"
#include "grid.hpp"

namespace cppforge::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  u64 budget = kDefaultBudget;
  unsigned jobs = 1;
  std::string out_path;
  bool timing = false;

  CertifyOptions certify() const { return CertifyOptions{ExhaustiveOptions{budget, jobs}, true}; }
};

struct Params {
  std::optional<u64> p;
  unsigned k = 1;
  std::optional<unsigned> n;
  std::string a;
  std::string b;
  std::string family;
  std::string grid;
  std::string theorem_id;
};

/// Results of a multi-instance run, merged in grid order.
struct Accumulator {
  Json results = Json::array();
  Json skipped = Json::array();
  std::vector<Certificate> certs;
  bool bad = false;
  bool budget = false;

  void add(const Certificate& cert, const Common& common, Json extra = Json::object()) {
    Json j = to_json(cert, common.timing);
    for (auto& [key, value] : extra.items()) j[key] = value;
    results.push_back(std::move(j));
    if (cert.budget_exceeded) budget = true;
    const auto& v = cert.verdict;
    if (v.verdict == Verdict::kError || v.has_event("falsification") || v.has_event("discrepancy")) bad = true;
    if (claims(cert.instance.family) && v.verdict == Verdict::kFail) bad = true;
    certs.push_back(cert);
  }
  void skip(Json point, const std::string& reason) {
    point["reason"] = reason;
    skipped.push_back(std::move(point));
  }
  static bool claims(Family f) {
    return f == Family::kThm1_2 || f == Family::kThm2_2 || f == Family::kThm2_3 || f == Family::kLem2_1;
  }
  int exit_code() const { return bad ? kExitFail : budget ? kExitBudget : kExitPass; }
};

u64 default_budget() {
  const char* env = std::getenv("CPPFORGE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("CPPFORGE_BUDGET is not a positive integer: ") + env);
  }
}

Family require_family(const std::string& tag) {
  const auto f = parse_family(tag);
  if (!f) throw UsageError("unknown family '" + tag + "'");
  return *f;
}

const FieldCtx& field_or_usage(u64 p, unsigned m) {
  try {
    return make_field(p, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Elem elem_or_usage(const FieldCtx& ctx, const std::string& text, const char* flag) {
  try {
    return parse_elem(ctx, text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Json point_json(u64 p, unsigned k, unsigned n) { return Json{{"p", p}, {"k", k}, {"n", n}}; }

Json witness_json(const Conj1Witness& w) {
  auto poly = [](const DensePoly& f) {
    Json j = Json::array();
    for (const auto& c : f.coeffs()) j.push_back(c.to_string());
    return j;
  };
  return Json{{"b", w.b.to_string()},
              {"zeta", w.zeta.to_string()},
              {"c", w.c.to_string()},
              {"odd_half_case", w.odd_half_case},
              {"h_a", poly(w.h_a)},
              {"dickson", poly(w.dickson)},
              {"matches_dickson", w.matches_dickson}};
}

void run_conj1(u64 p, unsigned k, unsigned n, const Elem& b, const Common& common, Accumulator& acc) {
  Json pt = point_json(p, k, n);
  pt["b"] = b.to_string();
  try {
    const auto w = conj1_witness(p, k, n, b);
    const auto cert = certify(w.instance, common.certify());
    acc.add(cert, common, Json{{"witness", witness_json(w)}});
    if (!w.matches_dickson) acc.bad = true;
  } catch (const HypothesisViolation& e) {
    acc.skip(std::move(pt), e.what());
  } catch (const NoSuchRoot& e) {
    acc.skip(std::move(pt), e.what());
  }
}

void run_family_point(Family fam, u64 p, unsigned k, unsigned n, std::optional<Elem> b, const Common& common,
                      Accumulator& acc) {
  field_or_usage(p, k);
  const ExhaustiveOptions ex{common.budget, common.jobs};
  std::vector<CPPInstance> instances;
  try {
    switch (fam) {
      case Family::kThm1_2: {
        const FieldCtx& small = make_field(p, k);
        if (b) {
          run_conj1(p, k, n, *b, common, acc);
        } else {
          for (u64 i = 1; i < small.order(); ++i) run_conj1(p, k, n, small.from_index(i), common, acc);
        }
        return;
      }
      case Family::kThm2_2:
      case Family::kLem2_1:
        instances = conj2_family(p, k, n, ex);
        for (auto& inst : instances) inst.family = fam;
        break;
      case Family::kThm2_3:
        instances = thm2_3_family(p, k, n, ex);
        break;
      case Family::kThm2_4:
      case Family::kCor2_5:
        instances = primitive_orbit_family(fam, p, k, n, ex);
        break;
      case Family::kAdhoc:
        throw UsageError("the adhoc family has no generator; use verify");
    }
  } catch (const HypothesisViolation& e) {
    acc.skip(point_json(p, k, n), e.what());
    return;
  } catch (const BudgetExceeded& e) {
    acc.budget = true;
    acc.skip(point_json(p, k, n), e.what());
    return;
  }
  if (instances.empty()) acc.skip(point_json(p, k, n), "no qualifying a");
  for (const auto& inst : instances) acc.add(certify(inst, common.certify()), common);
}

void run_lemma_point(u64 p, unsigned m, unsigned n, const Common& common, Accumulator& acc) {
  const FieldCtx& ctx = field_or_usage(p, m);
  Json pt{{"p", p}, {"m", m}, {"n", n}};
  if (ctx.order() > common.budget) {
    acc.budget = true;
    acc.skip(std::move(pt), BudgetExceeded(ctx.order(), common.budget).what());
    return;
  }
  if (p == 2 || n == 0 || (p - 1) % n != 0) {
    acc.skip(std::move(pt), "hypothesis violated: n divides p - 1 with p odd");
    return;
  }
  const auto power = static_cast<std::int64_t>((ctx.order() - 1) / n);
  for (u64 i = 1; i < ctx.order(); ++i) {
    const Elem c = ctx.from_index(i);
    if (c.pow(power).is_one()) continue;
    const auto rep = exceptional_lemma_pp(p, m, n, c, ExhaustiveOptions{common.budget, common.jobs});
    Json j{{"p", p}, {"m", m}, {"n", n}, {"c", c.to_string()}, {"report", to_json(rep, common.timing)}};
    acc.results.push_back(std::move(j));
    if (!rep.passed()) acc.bad = true;
  }
}

unsigned as_unsigned(const grid::Point& pt, const std::string& var) {
  const auto v = pt.at(var);
  if (v < 1 || v > 1'000'000) throw UsageError("grid variable " + var + " out of range: " + std::to_string(v));
  return static_cast<unsigned>(v);
}

std::vector<grid::Point> expand_grid(const std::string& text) {
  try {
    return grid::expand(text);
  } catch (const grid::GridError& e) {
    throw UsageError(std::string("grid: ") + e.what());
  }
}

void run_grid(std::optional<Family> fam, const std::string& grid_text, const Common& common, Accumulator& acc) {
  for (const auto& pt : expand_grid(grid_text)) {
    try {
      const u64 p = as_unsigned(pt, "p");
      const unsigned n = as_unsigned(pt, "n");
      if (!fam) {
        run_lemma_point(p, as_unsigned(pt, "m"), n, common, acc);
        continue;
      }
      const unsigned k = as_unsigned(pt, "k");
      std::optional<Elem> b;
      if (pt.has("b")) {
        const FieldCtx& small = field_or_usage(p, k);
        const auto it = pt.fields.find("b");
        if (it != pt.fields.end() && it->second != small.order()) {
          throw UsageError("b ranges over GF(" + std::to_string(it->second) + ") but p^k = " +
                           std::to_string(small.order()));
        }
        const auto idx = pt.at("b");
        if (idx < 0 || static_cast<u64>(idx) >= small.order()) throw UsageError("b index out of range");
        b = small.from_index(static_cast<u64>(idx));
      }
      run_family_point(*fam, p, k, n, b, common, acc);
    } catch (const grid::GridError& e) {
      throw UsageError(std::string("grid: ") + e.what());
    }
  }
}

struct TheoremSpec {
  std::optional<Family> family;  // nullopt: the exceptional-polynomial lemma
  const char* default_grid;
};

const std::map<std::string, TheoremSpec>& theorem_table() {
  static const std::map<std::string, TheoremSpec> table{
      {"1.2", {Family::kThm1_2, "p=3, k=1, n=4, b in GF(3)*"}},
      {"2.1", {std::nullopt, "p in {3,5,7}, m in 1..4, p^m <= 2401, n | p-1"}},
      {"2.2", {Family::kThm2_2, "p in {3,5,7}, k=1, n | p-1"}},
      {"2.3", {Family::kThm2_3, "p in {3,5,7}, k=1, n | p^k-1"}},
      {"2.4", {Family::kThm2_4, "p=7, k=1, n=3"}},
      {"2.5", {Family::kCor2_5, "p in {5,7}, k=1, n | p^k-1, n >= 3"}},
  };
  return table;
}

Json multi_report(const std::string& command, Json config, const Accumulator& acc) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["config"] = std::move(config);
  j["results"] = acc.results;
  Json summary = Json::array();
  for (const auto& row : summarize(acc.certs)) summary.push_back(to_json(row));
  j["summary"] = std::move(summary);
  if (!acc.skipped.empty()) j["skipped"] = acc.skipped;
  j["exit_code"] = acc.exit_code();
  return j;
}

Json base_config(const Common& common) { return Json{{"budget", common.budget}, {"jobs", common.jobs}}; }

int cmd_verify(const Params& prm, const Common& common, Json& report) {
  if (!prm.p || !prm.n) throw UsageError("verify needs --p and --n");
  const u64 p = *prm.p;
  const unsigned n = *prm.n;
  const Family fam = require_family(prm.family.empty() ? "adhoc" : prm.family);
  const FieldCtx& small = field_or_usage(p, prm.k);
  Json config = base_config(common);
  config["p"] = p;
  config["k"] = prm.k;
  config["n"] = n;
  config["family"] = std::string(to_string(fam));

  CPPInstance inst;
  std::optional<Conj1Witness> witness;
  if (prm.a.empty()) {
    if (fam != Family::kThm1_2 || prm.b.empty()) throw UsageError("verify needs --a (or --b with --family thm1_2)");
    config["b"] = prm.b;
    try {
      witness = conj1_witness(p, prm.k, n, elem_or_usage(small, prm.b, "--b"));
    } catch (const HypothesisViolation& e) {
      throw UsageError(e.what());
    } catch (const NoSuchRoot& e) {
      throw UsageError(e.what());
    }
    inst = witness->instance;
  } else {
    config["a"] = prm.a;
    const FieldCtx& big = field_or_usage(p, n * prm.k);
    try {
      inst = make_instance(fam, p, prm.k, n, elem_or_usage(big, prm.a, "--a"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  const Certificate cert = certify(inst, common.certify());
  Json result = to_json(cert, common.timing);
  if (witness) result["witness"] = witness_json(*witness);
  int code = cert.verdict.passed() ? kExitPass : kExitFail;
  if (cert.budget_exceeded) code = kExitBudget;
  if (witness && !witness->matches_dickson) code = kExitFail;

  report = Json::object();
  report["schema"] = 1;
  report["command"] = "verify";
  report["config"] = std::move(config);
  report["results"] = Json::array({std::move(result)});
  report["exit_code"] = code;
  return code;
}

int cmd_family(const Params& prm, const Common& common, Json& report) {
  if (!prm.p || !prm.n) throw UsageError("family needs --p and --n");
  const Family fam = require_family(prm.family);
  Json config = base_config(common);
  config["family"] = prm.family;
  config["p"] = *prm.p;
  config["k"] = prm.k;
  config["n"] = *prm.n;
  std::optional<Elem> b;
  if (!prm.b.empty()) {
    b = elem_or_usage(field_or_usage(*prm.p, prm.k), prm.b, "--b");
    config["b"] = prm.b;
  }
  Accumulator acc;
  run_family_point(fam, *prm.p, prm.k, *prm.n, b, common, acc);
  report = multi_report("family", std::move(config), acc);
  return acc.exit_code();
}

int cmd_theorem(const Params& prm, const Common& common, Json& report) {
  const auto& table = theorem_table();
  const auto it = table.find(prm.theorem_id);
  if (it == table.end()) throw UsageError("unknown theorem id '" + prm.theorem_id + "'");
  const std::string grid_text = prm.grid.empty() ? it->second.default_grid : prm.grid;
  Json config = base_config(common);
  config["theorem"] = prm.theorem_id;
  config["grid"] = grid_text;
  Accumulator acc;
  run_grid(it->second.family, grid_text, common, acc);
  report = multi_report("theorem", std::move(config), acc);
  return acc.exit_code();
}

int cmd_sweep(const Params& prm, const Common& common, Json& report) {
  if (prm.grid.empty()) throw UsageError("sweep needs --grid");
  const Family fam = require_family(prm.family);
  Json config = base_config(common);
  config["family"] = prm.family;
  config["grid"] = prm.grid;
  Accumulator acc;
  run_grid(fam, prm.grid, common, acc);
  report = multi_report("sweep", std::move(config), acc);
  return acc.exit_code();
}

void emit(const Json& report, const Common& common, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + common.out_path + " for writing");
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field permutation polynomial laboratory"};
  app.require_subcommand(1);
  Params prm;
  Common common;
  std::optional<u64> budget;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "largest field brute-forced exhaustively")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", common.jobs, "worker threads for exhaustive scans")->check(CLI::Range(1u, 256u));
    sub->add_option("--out", common.out_path, "write the JSON report here instead of stdout");
    sub->add_flag("--timing", common.timing, "include timing_ms in reports");
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--p", prm.p, "characteristic");
    sub->add_option("--k", prm.k, "subfield degree")->check(CLI::PositiveNumber);
    sub->add_option("--n", prm.n, "extension degree over GF(p^k)")->check(CLI::PositiveNumber);
    sub->add_option("--b", prm.b, "element of GF(p^k), e.g. [1]");
    sub->add_option("--family", prm.family, "thm1_2, lem2_1, thm2_2, thm2_3, thm2_4, cor2_5 or adhoc");
  };

  auto* verify = app.add_subcommand("verify", "certify a single instance a^{-1} x^d");
  add_params(verify);
  verify->add_option("--a", prm.a, "element of GF(p^{nk}) as [c0,c1,...]");
  add_common(verify);

  auto* family = app.add_subcommand("family", "enumerate and certify a whole family at (p, k, n)");
  add_params(family);
  add_common(family);

  auto* theorem = app.add_subcommand("theorem", "reproduce a theorem over a parameter grid");
  theorem->add_option("id", prm.theorem_id, "1.2, 2.1, 2.2, 2.3, 2.4 or 2.5")->required();
  theorem->add_option("--grid", prm.grid, "parameter grid, e.g. \"p in {3,5,7}, k=1, n | p-1\"");
  add_common(theorem);

  auto* sweep = app.add_subcommand("sweep", "certify a family over a parameter grid");
  sweep->add_option("--family", prm.family, "family tag")->required();
  sweep->add_option("--grid", prm.grid, "parameter grid")->required();
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    common.budget = budget ? *budget : default_budget();
    Json report;
    int code = kExitUsage;
    if (*verify) code = cmd_verify(prm, common, report);
    if (*family) code = cmd_family(prm, common, report);
    if (*theorem) code = cmd_theorem(prm, common, report);
    if (*sweep) code = cmd_sweep(prm, common, report);
    emit(report, common, out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  }
}

}  // namespace cppforge::cli
