// upoly: command line front end for unipotent polytope character tables.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "upoly/upoly.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kBudget = 2, kVerification = 3 };

struct Options {
  std::string spec_path;
  std::optional<long> q;
  std::string beta;
  std::string poset;
  std::optional<unsigned long long> budget;
  bool close = false;
  std::string format = "csv";
  std::string suite;
  std::string lambda = "0";
  std::string mu = "0";
  int dilate = 1;
  int length = 3;
};

upoly::TheorySpec load_spec(const Options& o) {
  upoly::TheorySpec spec;
  if (!o.spec_path.empty()) {
    std::ifstream in(o.spec_path);
    if (!in) throw upoly::ValidationError("cannot read spec file " + o.spec_path);
    std::stringstream ss;
    ss << in.rdbuf();
    spec = upoly::parse_spec(ss.str());
  } else {
    spec.poset_is_chain = true;
  }
  try {
    if (!o.beta.empty()) {
      std::string b = o.beta;
      if (b.front() != '[') b = "[" + b + "]";
      spec.beta = upoly::read_beta(nlohmann::json::parse(b));
    }
    if (!o.poset.empty()) {
      const bool word = o.poset == "chain" || o.poset == "empty";
      upoly::read_poset(spec, nlohmann::json::parse(word ? "\"" + o.poset + "\"" : o.poset));
    }
  } catch (const nlohmann::json::exception& e) {
    throw upoly::ValidationError(std::string("cannot parse --beta/--poset: ") + e.what());
  }
  if (o.q) spec.q = *o.q;
  if (o.budget) spec.budget = *o.budget;
  if (o.close) spec.close = true;
  if (spec.q < 2) throw upoly::ValidationError("q must be at least 2");
  if (spec.beta.empty() && o.spec_path.empty() && o.beta.empty()) {
    throw upoly::ValidationError("no composition given: pass --spec or --beta");
  }
  return spec;
}

int print_report(const upoly::Report& rep) {
  for (const auto& c : rep.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  if (const auto* f = rep.first_failure()) {
    std::cerr << "first counterexample: " << f->name << ": " << f->detail << '\n';
    return kVerification;
  }
  return kOk;
}

int run_enum(const Options& o) {
  const auto spec = load_spec(o);
  const auto pts = upoly::enumerate_lattice_points(spec.polytope(), spec.budget);
  std::cout << pts.size() << '\n';
  for (const auto& t : pts) std::cout << t.to_text() << '\n';
  return kOk;
}

int run_table(const Options& o) {
  const auto spec = load_spec(o);
  const auto t = upoly::char_table(spec.polytope(), spec.q, spec.budget);
  if (o.format == "json") {
    upoly::write_json(std::cout, t);
  } else {
    upoly::write_csv(std::cout, t);
  }
  return kOk;
}

int run_value(const Options& o) {
  const auto spec = load_spec(o);
  const auto poly = spec.polytope();
  const auto lambda = upoly::parse_tableau(o.lambda, poly.length());
  const auto mu = upoly::parse_tableau(o.mu, poly.length());
  std::cout << upoly::char_value(poly, lambda, mu, spec.q).str() << '\n';
  return kOk;
}

int run_count(const Options& o) {
  const auto spec = load_spec(o);
  std::cout << upoly::count_lattice_points(spec.polytope(), o.dilate, spec.budget).str() << '\n';
  return kOk;
}

int run_posets(const Options& o) {
  const auto all = upoly::enumerate_normal_subposets(o.length);
  for (const auto& p : all) {
    std::string rows;
    for (int r : upoly::row_lengths(p)) rows += (rows.empty() ? "" : ",") + std::to_string(r);
    std::cout << p.to_string() << " rows=" << (rows.empty() ? "-" : rows) << " dyck=" << upoly::dyck_of(p) << '\n';
  }
  return kOk;
}

int run_verify(const Options& o) {
  if (o.suite == "bijections") {
    return print_report(upoly::verify_bijections(o.length));
  }
  const auto spec = load_spec(o);
  if (o.suite == "kernels") return print_report(upoly::verify_kernels(upoly::Composition(spec.beta)));
  const auto poly = spec.polytope();
  if (o.suite == "orthogonality") return print_report(upoly::verify_orthogonality(poly, spec.q));
  upoly::require_prime(spec.q);
  if (o.suite == "oracle") return print_report(upoly::verify_oracle(poly, spec.q, spec.oracle_budget));
  if (o.suite == "stats") return print_report(upoly::verify_stats(poly, spec.q));
  throw upoly::ValidationError("unknown suite '" + o.suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact supercharacter tables of unipotent polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--spec", o.spec_path, "JSON theory spec");
  app.add_option("--q", o.q, "field size");
  app.add_option("--beta", o.beta, "composition, e.g. 2,1");
  app.add_option("--poset", o.poset, "relations as JSON pairs, or chain/empty");
  app.add_option("--budget", o.budget, "enumeration budget");
  app.add_flag("--close", o.close, "take the transitive closure of the poset");

  auto* enum_cmd = app.add_subcommand("enum", "list lattice points");
  auto* table_cmd = app.add_subcommand("table", "character table");
  table_cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* value_cmd = app.add_subcommand("value", "one character value");
  value_cmd->add_option("lambda", o.lambda, "character label, e.g. 1,2:1")->required();
  value_cmd->add_option("mu", o.mu, "superclass label")->required();
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  verify_cmd->add_option("--suite", o.suite, "orthogonality, oracle, stats, kernels or bijections")
      ->required()
      ->check(CLI::IsMember({"orthogonality", "oracle", "stats", "kernels", "bijections"}));
  verify_cmd->add_option("--length", o.length, "chain length for the bijections suite");
  auto* posets_cmd = app.add_subcommand("posets", "normal subposets of a chain");
  posets_cmd->add_option("length", o.length, "chain length")->required();
  auto* count_cmd = app.add_subcommand("count", "count lattice points of a dilate");
  count_cmd->add_option("--dilate", o.dilate, "dilation factor")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (*enum_cmd) return run_enum(o);
    if (*table_cmd) return run_table(o);
    if (*value_cmd) return run_value(o);
    if (*verify_cmd) return run_verify(o);
    if (*posets_cmd) return run_posets(o);
    if (*count_cmd) return run_count(o);
  } catch (const upoly::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const upoly::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerification;
  } catch (const upoly::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
