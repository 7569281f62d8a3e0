#include "plk/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "plk/decomposability.hpp"
#include "plk/errors.hpp"
#include "plk/json_io.hpp"
#include "plk/random.hpp"
#include "plk/young.hpp"

namespace plk::cli {
namespace {

using nlohmann::json;

struct CommandConfig {
  std::string subcommand;
  std::string input;
  std::string criterion = "all";
  std::string mode = "symbolic";
  int k = 2;
  int trials = 64;
  std::uint64_t seed = 0;
  int bound = 10;
  int dim = 0;
  int grade = -1;
  bool simple = false;
  bool nonsimple = false;
  bool json = false;
  bool all = false;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw InputError("no input file given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ContractionOptions contraction_options(const CommandConfig& cfg) {
  ContractionOptions o;
  if (cfg.mode == "symbolic") {
    o.mode = ContractionMode::Symbolic;
  } else if (cfg.mode == "randomized") {
    o.mode = ContractionMode::Randomized;
  } else {
    throw InputError("unknown mode '" + cfg.mode + "'");
  }
  if (cfg.trials < 1) throw InputError("--trials must be positive");
  if (cfg.bound < 1) throw InputError("--bound must be positive");
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.bound = cfg.bound;
  return o;
}

std::vector<Criterion> all_criteria(int k) {
  return {{CriterionKind::Classical},   {CriterionKind::Dual},
          {CriterionKind::Contraction, k}, {CriterionKind::Improved},
          {CriterionKind::DualImproved}, {CriterionKind::Optimal},
          {CriterionKind::Oracle}};
}

json report_json(const CriterionReport& r) {
  json j = {{"criterion", criterion_name(r.criterion)},
            {"verdict", r.verdict},
            {"equations_checked", r.equations_checked},
            {"probabilistic", r.probabilistic}};
  if (r.witness) j["witness"] = describe_witness(r);
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

std::string report_line(const CriterionReport& r, const std::string& note = "") {
  std::ostringstream os;
  os << criterion_name(r.criterion) << ": " << (r.verdict ? "true" : "false") << " ("
     << r.equations_checked << " equations)";
  if (r.probabilistic) os << " probabilistic";
  if (r.seed) os << " seed=" << *r.seed;
  if (r.witness) os << " witness: " << describe_witness(r);
  if (!note.empty()) os << ' ' << note;
  return os.str();
}

int cmd_check(const CommandConfig& cfg, std::ostream& out) {
  const Multivector p = parse_multivector(read_file(cfg.input));
  if (p.is_dual()) throw InputError("check expects a primal multivector (\"dual\": false)");
  const ContractionOptions options = contraction_options(cfg);
  const bool run_all = cfg.criterion == "all" || cfg.all;
  const std::vector<Criterion> selected =
      run_all ? all_criteria(cfg.k) : std::vector<Criterion>{parse_criterion(cfg.criterion, cfg.k)};

  std::vector<CriterionReport> reports;
  std::vector<std::string> notes;
  for (const Criterion& c : selected) {
    if (c.kind == CriterionKind::Optimal && p.grade() < 2) {
      CriterionReport vacuous;
      vacuous.criterion = c;
      reports.push_back(vacuous);
      notes.push_back("(vacuous: grade < 2)");
      continue;
    }
    reports.push_back(run_criterion(c, p, options));
    notes.emplace_back();
  }

  bool agree = true;
  for (const auto& r : reports) agree = agree && r.verdict == reports.front().verdict;
  const bool simple = run_all ? reports.back().verdict : reports.front().verdict;

  if (cfg.json) {
    json j = {{"simple", simple}, {"reports", json::array()}};
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    if (run_all) j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) out << report_line(reports[i], notes[i]) << '\n';
    if (run_all && !agree) out << "criteria disagree: invariant violation\n";
  }
  if (run_all && !agree) return kInvariantViolation;
  return simple ? kSimple : kNotSimple;
}

int cmd_factor(const CommandConfig& cfg, std::ostream& out) {
  const Multivector p = parse_multivector(read_file(cfg.input));
  if (p.is_dual()) throw InputError("factor expects a primal multivector");
  if (p.is_zero() || p.grade() == 0) {
    out << (p.is_zero() ? "zero multivector: no factors" : "scalar: no vector factors") << '\n';
    return kSimple;
  }
  const auto factors = factorize(p);
  if (!factors) {
    out << "not simple\n";
    return kNotSimple;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : *factors) arr.push_back(to_json(f));
  out << (cfg.json ? arr.dump(2) : arr.dump()) << '\n';
  return kSimple;
}

void require_dim_grade(const CommandConfig& cfg) {
  if (cfg.dim < 1 || cfg.dim > kMaxDim) throw InputError("--dim must lie in [1, 64]");
  if (cfg.grade < 0 || cfg.grade > cfg.dim) throw InputError("--grade must lie in [0, dim]");
}

int cmd_count(const CommandConfig& cfg, std::ostream& out) {
  require_dim_grade(cfg);
  const std::vector<Criterion> order = {{CriterionKind::Classical},
                                        {CriterionKind::Dual},
                                        {CriterionKind::Improved},
                                        {CriterionKind::DualImproved},
                                        {CriterionKind::Optimal}};
  json j = json::object();
  for (const auto& c : order) {
    const std::string value = equation_count(cfg.dim, cfg.grade, c).get_str();
    if (cfg.json) {
      j[criterion_name(c)] = value;
    } else {
      out << criterion_name(c) << ' ' << value << '\n';
    }
  }
  if (cfg.json) out << json{{"dim", cfg.dim}, {"grade", cfg.grade}, {"counts", j}}.dump(2) << '\n';
  return kSimple;
}

int cmd_dims(const CommandConfig& cfg, std::ostream& out) {
  require_dim_grade(cfg);
  const StarStarReport report = verify_star_star(cfg.dim, cfg.grade);
  if (cfg.json) {
    json j = {{"dim", cfg.dim}, {"grade", cfg.grade}, {"components", json::array()},
              {"identities", json::array()}, {"pass", report.pass()}};
    for (const auto& [shape, d] : report.components) {
      j["components"].push_back({{"shape", {shape.first_col, shape.second_col}}, {"dim", d.get_str()}});
    }
    for (const auto& id : report.identities) {
      j["identities"].push_back(
          {{"name", id.name}, {"lhs", id.lhs.get_str()}, {"rhs", id.rhs.get_str()}, {"pass", id.pass()}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [shape, d] : report.components) {
      out << "Y^{" << shape.first_col << ',' << shape.second_col << "} " << d.get_str() << '\n';
    }
    for (const auto& id : report.identities) {
      out << (id.pass() ? "PASS " : "FAIL ") << id.name << ": " << id.lhs.get_str()
          << " == " << id.rhs.get_str() << '\n';
    }
  }
  return report.pass() ? kSimple : kNotSimple;
}

int cmd_random(const CommandConfig& cfg, std::ostream& out) {
  require_dim_grade(cfg);
  if (cfg.simple == cfg.nonsimple) throw InputError("give exactly one of --simple and --nonsimple");
  if (cfg.bound < 1) throw InputError("--bound must be positive");
  Rng rng(cfg.seed);
  const Multivector p = cfg.simple ? random_simple(rng, cfg.dim, cfg.grade, cfg.bound)
                                   : random_nonsimple(rng, cfg.dim, cfg.grade, cfg.bound);
  out << (cfg.json ? to_json(p).dump(2) : emit(p)) << '\n';
  return kSimple;
}

int cmd_family(const CommandConfig& cfg, std::ostream& out) {
  const DecomposableFamily family(parse_multivector_list(read_file(cfg.input)));
  const ThreePlaneResult r = three_plane_check(family);
  if (cfg.json) {
    out << json{{"branch", branch_name(r.branch)},
                {"span_dim", r.span_dim},
                {"intersection_dim", r.intersection_dim}}
               .dump(2)
        << '\n';
  } else {
    out << branch_name(r.branch) << " (k=" << family.grade() << ", span dim " << r.span_dim
        << ", intersection dim " << r.intersection_dim << ")\n";
  }
  return kSimple;
}

void add_common(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--criterion", cfg.criterion,
                  "classical|dual|contraction|improved|dual-improved|optimal|oracle|all");
  sub->add_option("--mode", cfg.mode, "symbolic|randomized (contraction criterion)");
  sub->add_option("--k", cfg.k, "contraction target grade k >= 2");
  sub->add_option("--trials", cfg.trials, "randomized trials");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--bound", cfg.bound, "random integers are drawn from [-B, B]");
  sub->add_option("--dim", cfg.dim, "ambient dimension n");
  sub->add_option("--grade", cfg.grade, "grade s");
  sub->add_flag("--simple", cfg.simple, "generate a decomposable element");
  sub->add_flag("--nonsimple", cfg.nonsimple, "generate a non-decomposable element");
  sub->add_flag("--json", cfg.json, "machine-readable output");
  sub->add_flag("--all", cfg.all, "run every criterion and require agreement");
  sub->add_option("FILE", cfg.input, "input JSON file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Exact decomposability tests for multivectors", "plk"};
  app.require_subcommand(1);
  for (const char* name : {"check", "factor", "count", "dims", "random", "family"}) {
    add_common(app.add_subcommand(name), cfg);
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSimple;
  } catch (const CLI::ParseError& e) {
    err << "plk: " << e.what() << '\n';
    return kInputError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (cfg.subcommand == "check") return cmd_check(cfg, out);
    if (cfg.subcommand == "factor") return cmd_factor(cfg, out);
    if (cfg.subcommand == "count") return cmd_count(cfg, out);
    if (cfg.subcommand == "dims") return cmd_dims(cfg, out);
    if (cfg.subcommand == "random") return cmd_random(cfg, out);
    if (cfg.subcommand == "family") return cmd_family(cfg, out);
  } catch (const InputError& e) {
    err << "plk: input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "plk: invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kInputError;
}

}  // namespace plk::cli
