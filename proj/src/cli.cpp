#include "zelcalc/cli.hpp"

#include <optional>

#include <CLI11.hpp>

#include "zelcalc/basechange.hpp"
#include "zelcalc/catalog.hpp"
#include "zelcalc/distinction.hpp"
#include "zelcalc/dsl.hpp"
#include "zelcalc/errors.hpp"
#include "zelcalc/involution.hpp"
#include "zelcalc/json_out.hpp"
#include "zelcalc/testkit.hpp"
#include "zelcalc/universe_io.hpp"

namespace zelcalc::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string universe;
  std::string input;
  bool trace = false;
  int twist = 0;
  std::string suite;
  int max_size = 5;
  std::string range = "-3..3";
  unsigned jobs = 1;
  std::string lattice = "both";
  std::uint64_t seed = SuiteConfig{}.seed;
  std::size_t cases = SuiteConfig{}.random_cases;
};

// "LO..HI" with half-integer bounds.
std::optional<std::pair<HalfInt, HalfInt>> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  auto lo = parse_half_int(text.substr(0, dots));
  auto hi = parse_half_int(text.substr(dots + 2));
  if (!lo || !hi || *hi < *lo) return std::nullopt;
  return std::pair{*lo, *hi};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int cmd_dual(const Options& o, std::ostream& out) {
  const Universe u = load_universe(o.universe);
  const MultiSegment m = parse_multisegment(o.input, u);
  const MwResult r = mw_dual(m);
  json j = {{"input", format_multisegment(m, u)}, {"dual", format_multisegment(r.dual, u)}};
  if (o.trace) j["trace"] = to_json(r.trace, u);
  emit(out, j);
  return kOk;
}

int cmd_bc_class(const Options& o, std::ostream& out) {
  const Universe u = load_universe(o.universe);
  emit(out, to_json(bc_class(parse_multisegment(o.input, u), u)));
  return kOk;
}

int cmd_ladder_dist(const Options& o, std::ostream& out) {
  const Universe u = load_universe(o.universe);
  emit(out, to_json(ladder_distinction(parse_multisegment(o.input, u), u)));
  return kOk;
}

int cmd_induced_dist(const Options& o, std::ostream& out) {
  const Universe u = load_universe(o.universe);
  emit(out, to_json(induced_distinction(parse_rep(o.input, u), u, o.twist)));
  return kOk;
}

int cmd_parse(const Options& o, std::ostream& out) {
  const RepAst ast = parse_rep_syntax(o.input);
  if (!o.universe.empty()) {
    const Universe u = load_universe(o.universe);
    if (ast.parenthesized) {
      (void)resolve(ast, u);
    } else {
      (void)resolve(ast.factors.at(0), u);
    }
  }
  const std::string canonical = ast.parenthesized ? format_ast(ast) : format_ast(ast.factors.at(0));
  emit(out, {{"canonical", canonical}, {"ast", to_json(ast)}});
  return kOk;
}

int cmd_catalog_verify(std::ostream& out) {
  json entries = json::array();
  bool all = true;
  for (const EntryReport& r : verify_catalog()) {
    all = all && r.pass;
    entries.push_back(to_json(r));
  }
  emit(out, {{"entries", std::move(entries)}, {"pass", all}});
  return all ? kOk : kFailed;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.name = o.suite;
  const auto range = parse_range(o.range);
  if (!range) throw Error(ErrorCode::InvalidArgument, "bad --range '" + o.range + "', expected LO..HI");
  cfg.lo = range->first;
  cfg.hi = range->second;
  const auto lattice = parse_lattice_mode(o.lattice);
  if (!lattice) throw Error(ErrorCode::InvalidArgument, "bad --lattice '" + o.lattice + "'");
  cfg.lattice = *lattice;
  cfg.max_segments = o.max_size;
  cfg.jobs = o.jobs;
  cfg.seed = o.seed;
  cfg.random_cases = o.cases;
  const SuiteReport report = run_suite(cfg);
  emit(out, to_json(report));
  if (report.failure_count > 0) {
    err << "zelcalc: suite " << report.suite << ": " << report.failure_count << " failure(s)\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multisegment calculator for GL_n(E): Zelevinsky duals, base change classes, distinction"};
  app.name("zelcalc");
  app.require_subcommand(1);
  Options o;

  auto add_universe = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-u,--universe", o.universe, "universe JSON file");
    if (required) opt->required();
  };

  auto* dual = app.add_subcommand("dual", "Zelevinsky dual via the MW algorithm");
  add_universe(dual, true);
  dual->add_option("mseg", o.input, "multisegment")->required();
  dual->add_flag("--trace", o.trace, "include the per-round trace");

  auto* bc = app.add_subcommand("bc-class", "base change image classification");
  add_universe(bc, true);
  bc->add_option("mseg", o.input, "multisegment")->required();

  auto* ladder = app.add_subcommand("ladder-dist", "distinction of a ladder representation");
  add_universe(ladder, true);
  ladder->add_option("mseg", o.input, "multisegment")->required();

  auto* induced = app.add_subcommand("induced-dist", "distinction of a product of proper ladders");
  add_universe(induced, true);
  induced->add_option("rep", o.input, "representation spec")->required();
  induced->add_option("--twist", o.twist, "0: H, 1: (H, omega)")->check(CLI::IsMember({0, 1}));

  auto* parse = app.add_subcommand("parse", "canonical form and syntax tree");
  add_universe(parse, false);
  parse->add_option("expr", o.input, "multisegment or representation spec")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in example catalog");
  catalog_cmd->require_subcommand(1);
  auto* verify = catalog_cmd->add_subcommand("verify", "recompute every catalog entry");

  auto* check = app.add_subcommand("check", "run a property suite");
  std::vector<std::string> names(suite_names().begin(), suite_names().end());
  check->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(names));
  check->add_option("--max-size", o.max_size, "segments per multisegment")->check(CLI::Range(0, 64));
  check->add_option("--range", o.range, "exponent window LO..HI");
  check->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  check->add_option("--lattice", o.lattice, "int, half or both");
  check->add_option("--seed", o.seed, "seed for induced-hereditary");
  check->add_option("--cases", o.cases, "random cases per kind for induced-hereditary");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, err, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dual) return cmd_dual(o, out);
    if (*bc) return cmd_bc_class(o, out);
    if (*ladder) return cmd_ladder_dist(o, out);
    if (*induced) return cmd_induced_dist(o, out);
    if (*parse) return cmd_parse(o, out);
    if (*verify) return cmd_catalog_verify(out);
    if (*check) return cmd_check(o, out, err);
  } catch (const Error& e) {
    err << "zelcalc: " << to_string(e.code()) << ": " << e.what() << '\n';
    return is_input_error(e.code()) ? kInput : kEngine;
  } catch (const std::exception& e) {
    err << "zelcalc: " << e.what() << '\n';
    return kEngine;
  }
  return kUsage;
}

}  // namespace zelcalc::cli
