// Copyright 2026 The Choquet Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end. Exit codes: 0 success, 1 a theorem-level
// invariant was violated (JSON witness on stdout), 2 usage, validation or
// refusal.

#ifndef CHOQUET_TOOLS_CLI_HPP
#define CHOQUET_TOOLS_CLI_HPP

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "suite.hpp"

namespace choquet::cli {

using io::json;

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";

  void emit(const json& doc) const {
    if (format == "table")
      io::render_table(doc, out);
    else
      out << doc.dump(2) << "\n";
  }
  int violation(const std::string& what, const json& witness) const {
    emit({{"invariant_violated", what}, {"witness", witness}});
    return kViolation;
  }
};

inline Capacity read_capacity(const Context& ctx, const std::string& file) {
  auto loaded = io::load_capacity(io::read_file(file));
  for (const auto& w : loaded.warnings) ctx.err << "warning: " << file << ": " << w << "\n";
  return std::move(loaded.capacity);
}

inline StepFunction read_function(const std::string& file) { return io::load_function(io::read_file(file)); }

/// A set given inline as JSON ("[0,2]") over the capacity's ground set.
inline SubsetMask parse_set(const std::string& text, GroundSet u) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("--set: ") + e.what());
  }
  return io::load_subset(j, u, "--set");
}

inline std::vector<ExtReal> parse_values(const std::string& text, const char* flag) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(flag) + ": " + e.what());
  }
  if (!j.is_array()) throw ValidationError(std::string(flag) + ": expected a JSON array");
  std::vector<ExtReal> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(io::load_value(j[i], io::child(flag, i)));
  return out;
}

inline void write_file(const std::string& file, const json& doc) {
  std::ofstream o(file);
  if (!o) throw ValidationError("cannot write " + file);
  o << doc.dump(2) << "\n";
}

struct Options {
  std::string capacity, function, sets, sequence, cells, exported, dominator;
  std::string axiom = "all", set, kind = "random-monotone", method = "lp", mode = "qu", targets;
  std::string beta = "1", eta = "1/8", k_level, eps;
  bool breakdown = false, semifinite_demo = false, search = false;
  int n = 3, dim = 1, depth = 2, threshold = 0, per_kind = 3, functions = 8;
  long m = 3, k = 2;
  std::size_t tail_start = 0;
  std::uint64_t seed = 7;
  unsigned jobs = 1;
};

// ---------------------------------------------------------------- handlers

inline int do_integrate(const Context& ctx, const Options& o) {
  const Capacity h = read_capacity(ctx, o.capacity);
  const StepFunction f = read_function(o.function);
  ctx.emit(io::to_json(choquet(f, h), o.breakdown));
  return kOk;
}

inline int do_capacity_check(const Context& ctx, const Options& o) {
  const Capacity h = read_capacity(ctx, o.capacity);
  json reports = json::array();
  auto one = [&](Axiom a) {
    const AxiomReport r = check_axiom(h, a);
    if (!r.holds && !witness_violates(h, r))
      throw InvariantViolation("witness for " + std::string(axiom_name(a)) + " does not violate the axiom");
    reports.push_back(io::to_json(r));
  };
  if (o.axiom == "all")
    for (Axiom a : kAllAxioms) one(a);
  else
    one(parse_axiom(o.axiom));
  ctx.emit(reports.size() == 1 ? reports[0] : json{{"reports", reports}});
  return kOk;
}

inline int do_capacity_contract(const Context& ctx, const Options& o) {
  const Capacity h = read_capacity(ctx, o.capacity);
  ctx.emit(io::to_json(contract(h, parse_set(o.set, h.universe()))));
  return kOk;
}

inline int do_capacity_regularize(const Context& ctx, const Options& o) {
  const Capacity h = read_capacity(ctx, o.capacity);
  const Capacity reg = regularize(h);
  if (check_axiom(h, Axiom::Monotone).holds) {
    if (!check_axiom(reg, Axiom::Semifinite).holds)
      return ctx.violation("the regularization of a monotone capacity is semifinite", io::to_json(h));
    for (std::size_t a = 0; a < h.size(); ++a)
      if (h.at(static_cast<Mask>(a)).is_finite() && !(reg.at(static_cast<Mask>(a)) == h.at(static_cast<Mask>(a))))
        return ctx.violation("the regularization agrees with H where H is finite",
                             {{"capacity", io::to_json(h)}, {"set", io::to_json(SubsetMask(h.universe(), static_cast<Mask>(a)))}});
  }
  ctx.emit(io::to_json(reg));
  return kOk;
}

inline int do_capacity_generate(const Context& ctx, const Options& o) {
  if (o.n < 1 || o.n > GroundSet::kMaxSize) throw ValidationError("--n must be in [1, 24]");
  GeneratorOptions opt;
  opt.threshold = o.threshold;
  ctx.emit(io::to_json(generate_capacity(parse_kind(o.kind), GroundSet(o.n), o.seed, opt)));
  return kOk;
}

inline int do_capacity_sublinearity(const Context& ctx, const Options& o) {
  const Capacity h = read_capacity(ctx, o.capacity);
  const SublinearityReport r = verify_sublinearity_equivalence(h, o.m, o.k, enumeration_budget(), o.jobs);
  if (!r.consistent) return ctx.violation("sublinearity holds iff H is strongly subadditive", io::to_json(r));
  ctx.emit(io::to_json(r));
  return kOk;
}

inline int do_nest(const Context& ctx, const Options& o) {
  const auto family = io::load_sets(io::read_file(o.sets));
  NestingTrace trace;
  const NestedFamily a = nest(family, &trace);
  json doc = {{"input", io::sets_json(family)},
              {"d_chain", io::to_json(lemma_step(family))},
              {"a_chain", io::to_json(a.sets())},
              {"indicator_counts", indicator_counts(family)}};
  if (!o.capacity.empty()) {
    const Capacity h = read_capacity(ctx, o.capacity);
    require_same(h.universe(), family.front().universe(), "nest --capacity");
    const CapacitySumAudit audit = capacity_sum_audit(family, h);
    doc["sums"] = {{"sum_c", io::to_json(audit.sum_c)}, {"sum_d", io::to_json(audit.sum_d)},
                   {"sum_a", io::to_json(audit.sum_a)}, {"holds", audit.holds}};
    if (!audit.holds) return ctx.violation("capacity sums decrease along the rearrangement", doc);
  }
  ctx.emit(doc);
  return kOk;
}

inline int do_dual(const Context& ctx, const Options& o) {
  const Capacity h = read_capacity(ctx, o.capacity);
  const StepFunction f = read_function(o.function);
  if (o.semifinite_demo) {
    std::optional<std::vector<ExtReal>> targets;
    if (!o.targets.empty()) targets = parse_values(o.targets, "--targets");
    const SemifiniteDemo demo = semifinite_unboundedness_demo(f, h, targets);
    const json doc = io::to_json(demo);
    for (const auto& s : demo.steps)
      if (!s.witnessed) return ctx.violation("dual values reach t·M under a semifinite capacity", doc);
    ctx.emit(doc);
    return kOk;
  }
  const DualityReport r = dual_value(f, h, parse_method(o.method));
  const json doc = io::to_json(r);
  const bool monotone = check_axiom(h, Axiom::Monotone).holds;
  if (monotone && check_axiom(h, Axiom::FiniteSubadditive).holds && r.choquet_value < r.dual_value)
    return ctx.violation("weak duality: the dual value is at most the Choquet integral", doc);
  if (monotone && h.is_finite() && is_zero(h.at(0)) && check_axiom(h, Axiom::StronglySubadditive).holds &&
      !(r.gap == Gap{Gap::Kind::Finite, Rational(0)}))
    return ctx.violation("strong duality under a strongly subadditive capacity", doc);
  ctx.emit(doc);
  return kOk;
}

inline int do_hausdorff(const Context& ctx, const Options& o) {
  const DyadicDomain dom(o.dim, o.depth);
  const Rational beta = parse_rational(o.beta);
  const DyadicCellSet cells = io::load_cells(io::read_file(o.cells), dom);
  const CoverSolution sol = content(cells, beta);
  const CertificateCheck check = cover_certificate_check(cells, beta, sol);
  json doc = io::to_json(sol);
  doc["certificate_valid"] = check.valid();
  if (!check.valid()) return ctx.violation("the optimal cover certifies its own value", doc);
  if (!o.exported.empty()) {
    const ContentCapacity h = export_capacity(dom, beta);
    write_file(o.exported, io::to_json(h));
    doc["exported"] = o.exported;
  }
  ctx.emit(doc);
  return kOk;
}

inline int do_converge(const Context& ctx, const Options& o) {
  const Capacity h = read_capacity(ctx, o.capacity);
  const FunctionSequence seq = io::load_sequence(io::read_file(o.sequence));
  const Rational eta = parse_rational(o.eta);

  if (o.mode == "qu") {
    std::optional<Rational> eps;
    if (!o.eps.empty()) eps = parse_rational(o.eps);
    ctx.emit(io::to_json(qu_audit(seq, h, eta, o.tail_start, eps)));
    return kOk;
  }
  if (o.mode == "fatou") {
    if (o.search && !check_axiom(h, Axiom::FiniteSubadditive).holds) {
      const auto found = fatou_counterexample_search(h);
      json doc = {{"hypothesis", "finite-subadd"}, {"found", found.has_value()}};
      if (found) {
        doc["sequence"] = io::to_json(found->sequence);
        doc["eta"] = to_string(found->options.eta);
        doc["k"] = to_string(found->options.k);
        doc["audit"] = io::to_json(found->audit);
      }
      ctx.emit(doc);
      return kOk;
    }
    FatouOptions opt{eta, o.k_level.empty() ? Rational(1) : parse_rational(o.k_level), o.tail_start};
    const ConvergenceAudit a = fatou_harness(seq, h, opt);
    if (!a.all_hold() && a.qu_verdict == QuVerdict::Verified)
      return ctx.violation("Fatou bound on a stabilized prefix", io::to_json(a));
    ctx.emit(io::to_json(a));
    return kOk;
  }
  if (o.mode == "dct") {
    if (o.dominator.empty()) throw ValidationError("--mode dct needs --dominator");
    DctOptions opt{eta, o.k_level.empty() ? Rational(2) : parse_rational(o.k_level), o.tail_start};
    const ConvergenceAudit a = dct_harness(seq, read_function(o.dominator), h, opt);
    if (!a.all_hold()) return ctx.violation("dominated convergence piece bounds", io::to_json(a));
    ctx.emit(io::to_json(a));
    return kOk;
  }
  if (o.mode == "converse") {
    const ConvergenceAudit a = converse_dct_audit(seq, h);
    if (!a.all_hold()) return ctx.violation("converse dominated convergence bounds", io::to_json(a));
    ctx.emit(io::to_json(a));
    return kOk;
  }
  if (o.mode == "countable") {
    if (o.search) {
      const auto found = countable_sublinearity_counterexample(h);
      json doc = {{"hypothesis", "strong-subadd"}, {"found", found.has_value()}};
      if (found)
        doc["counterexample"] = {{"e", io::to_json(found->e)}, {"f", io::to_json(found->f)},
                                 {"lhs", io::to_json(found->lhs)}, {"rhs", io::to_json(found->rhs)}};
      ctx.emit(doc);
      return kOk;
    }
    const ConvergenceAudit a = countable_sublinearity_audit(seq, h);
    if (!a.all_hold()) return ctx.violation("countable sublinearity", io::to_json(a));
    ctx.emit(io::to_json(a));
    return kOk;
  }
  throw ValidationError("unknown mode '" + o.mode + "' (expected qu, fatou, dct, converse or countable)");
}

inline int do_suite(const Context& ctx, const Options& o) {
  suite::SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.n = o.n;
  cfg.per_kind = o.per_kind;
  cfg.functions = o.functions;
  cfg.jobs = o.jobs;
  const suite::SuiteReport r = suite::run(cfg);
  if (!r.ok) return ctx.violation("suite property failed", r.document);
  ctx.emit(r.document);
  return kOk;
}

// ---------------------------------------------------------------- entry

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact Choquet integrals, capacities and their audits", "choquet"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  Context ctx{out, err};
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::function<int()> handler;
  auto bind = [&](CLI::App* sub, int (*fn)(const Context&, const Options&)) {
    sub->callback([&, fn] { handler = [&, fn] { return fn(ctx, o); }; });
  };

  auto* integrate = app.add_subcommand("integrate", "Choquet integral of a function");
  integrate->add_option("--capacity", o.capacity, "Capacity JSON")->required();
  integrate->add_option("--function", o.function, "Function JSON")->required();
  integrate->add_flag("--breakdown", o.breakdown, "Include the layer-cake breakdown");
  bind(integrate, do_integrate);

  auto* capacity = app.add_subcommand("capacity", "Capacity axioms and transforms");
  capacity->require_subcommand(1);
  capacity->fallthrough();
  auto* check = capacity->add_subcommand("check", "Check one axiom or all of them");
  check->add_option("--capacity", o.capacity)->required();
  check->add_option("--axiom", o.axiom, "Axiom name or 'all'");
  bind(check, do_capacity_check);
  auto* contract_cmd = capacity->add_subcommand("contract", "A -> H(A ∩ S)");
  contract_cmd->add_option("--capacity", o.capacity)->required();
  contract_cmd->add_option("--set", o.set, "S as a JSON array of points")->required();
  bind(contract_cmd, do_capacity_contract);
  auto* reg = capacity->add_subcommand("regularize", "Semifinite regularization");
  reg->add_option("--capacity", o.capacity)->required();
  bind(reg, do_capacity_regularize);
  auto* gen = capacity->add_subcommand("generate", "Draw a corpus capacity");
  gen->add_option("--kind", o.kind, "Generator kind");
  gen->add_option("--n", o.n, "Ground set size");
  gen->add_option("--seed", o.seed, "Seed");
  gen->add_option("--threshold", o.threshold, "m for the threshold kinds");
  bind(gen, do_capacity_generate);
  auto* sub = capacity->add_subcommand("sublinearity", "Exhaustive sublinearity equivalence");
  sub->add_option("--capacity", o.capacity)->required();
  sub->add_option("--m", o.m, "Largest grid value");
  sub->add_option("--k", o.k, "Grid denominator");
  sub->add_option("--jobs", o.jobs, "Worker threads");
  bind(sub, do_capacity_sublinearity);

  auto* nest_cmd = app.add_subcommand("nest", "Rearrange a family into a nested chain");
  nest_cmd->add_option("--sets", o.sets, "Family JSON")->required();
  nest_cmd->add_option("--capacity", o.capacity, "Capacity JSON for the sum audit");
  bind(nest_cmd, do_nest);

  auto* dual = app.add_subcommand("dual", "Dual representation by dominated measures");
  dual->add_option("--capacity", o.capacity)->required();
  dual->add_option("--function", o.function)->required();
  dual->add_option("--method", o.method, "greedy, lp or both")->check(CLI::IsMember({"greedy", "lp", "both"}));
  dual->add_flag("--semifinite-demo", o.semifinite_demo, "Unboundedness through finite contractions");
  dual->add_option("--targets", o.targets, "Targets M as a JSON array");
  bind(dual, do_dual);

  auto* haus = app.add_subcommand("hausdorff", "Dyadic Hausdorff content");
  haus->add_option("--dim", o.dim)->required();
  haus->add_option("--depth", o.depth)->required();
  haus->add_option("--beta", o.beta)->required();
  haus->add_option("--cells", o.cells, "Cells JSON")->required();
  haus->add_option("--export", o.exported, "Write the content capacity here");
  bind(haus, do_hausdorff);

  auto* conv = app.add_subcommand("converge", "Convergence audits");
  conv->add_option("--capacity", o.capacity)->required();
  conv->add_option("--sequence", o.sequence)->required();
  conv->add_option("--mode", o.mode)->check(CLI::IsMember({"qu", "fatou", "dct", "converse", "countable"}));
  conv->add_option("--eta", o.eta, "η");
  conv->add_option("--k", o.k_level, "Window height k");
  conv->add_option("--tail-start", o.tail_start);
  conv->add_option("--eps", o.eps, "ε for the qu audit");
  conv->add_option("--dominator", o.dominator, "Dominating function JSON");
  conv->add_flag("--search", o.search, "Search for a counterexample when the hypothesis fails");
  bind(conv, do_converge);

  auto* suite_cmd = app.add_subcommand("suite", "Property suite on a seeded corpus");
  suite_cmd->add_option("--seed", o.seed);
  suite_cmd->add_option("--n", o.n, "Largest ground set size");
  suite_cmd->add_option("--jobs", o.jobs);
  suite_cmd->add_option("--per-kind", o.per_kind, "Capacities per kind and size");
  suite_cmd->add_option("--functions", o.functions, "Functions per capacity");
  bind(suite_cmd, do_suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return handler();
  } catch (const InvariantViolation& e) {
    return ctx.violation(e.what(), nullptr);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace choquet::cli

#endif  // CHOQUET_TOOLS_CLI_HPP
