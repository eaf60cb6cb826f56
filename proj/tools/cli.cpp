#include "cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <stdexcept>

#include "mclain/mclain.hpp"

namespace mclain::cli {

namespace {

struct Options {
  std::string ring = "Z";
  std::string relation_file;
  std::string positional_relation;
  bool lower = false;
  bool upper = false;
  std::string expression;
  std::string order_file;
  std::string gamma_file;
  int ngon_size = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Relation load_relation(const Options& opt) {
  const std::string& path = opt.positional_relation.empty() ? opt.relation_file : opt.positional_relation;
  if (path.empty()) throw UsageError("a relation file is required (--relation FILE)");
  return parse_relation(read_file(path));
}

Group load_group(const Options& opt) {
  const RingSpec ring = RingSpec::parse(opt.ring);
  Relation delta = load_relation(opt);
  const AxiomReport report = check_axioms(delta);
  if (!report.valid()) throw DomainError("invalid relation: " + report.describe().front());
  return Group(ring, std::move(delta));
}

int cmd_check(const Options& opt, std::ostream& out) {
  const AxiomReport report = check_axioms(load_relation(opt));
  if (report.valid()) {
    out << "valid\n";
    return 0;
  }
  for (const auto& line : report.describe()) out << line << "\n";
  return 1;
}

int cmd_series(const Options& opt, std::ostream& out) {
  const Group group = load_group(opt);
  if (opt.upper) {
    out << format_upper_series(upper_central_series(group.relation()));
  } else {
    const LowerCentralSeries series = lower_central_series(group.relation(), group.ring());
    out << format_lower_series(series);
    out << "class " << series.nilpotency_class() << "\n";
  }
  return 0;
}

GroupElement load_element(const Group& group, const Options& opt) {
  return eval_word(group, parse_word(opt.expression, group.ring()));
}

int cmd_eval(const Options& opt, std::ostream& out) {
  const Group group = load_group(opt);
  out << load_element(group, opt).to_string() << "\n";
  return 0;
}

int cmd_factor(const Options& opt, std::ostream& out) {
  const Group group = load_group(opt);
  const GroupElement g = load_element(group, opt);
  if (opt.order_file.empty()) {
    out << word_factorization(g).to_string() << "\n";
    return 0;
  }
  const auto order = resolve_pairs(parse_pair_list(read_file(opt.order_file)), group.relation());
  out << ordered_factorization(g, order).to_string();
  return 0;
}

int cmd_quotient(const Options& opt, std::ostream& out) {
  const Group group = load_group(opt);
  const GroupElement g = load_element(group, opt);
  const Relation gamma = group.relation().with_pairs(
      resolve_pairs(parse_pair_list(read_file(opt.gamma_file)), group.relation()));
  if (!is_normal(gamma, group.relation())) {
    throw DomainError("subset " + gamma.to_string() + " is not normal in the relation");
  }
  const QuotientMap map(group, gamma);
  out << "quotient: " << map.project(g).to_string() << "\n";
  out << "representative: " << map.representative(g).to_string() << "\n";
  out << "lift: " << map.canonical_lift(g).to_string() << "\n";
  return 0;
}

int cmd_demo_ngon(const Options& opt, bool ring_given, std::ostream& out) {
  if (opt.ngon_size < 4 || opt.ngon_size > 6) {
    throw UsageError("demo-ngon needs 4 <= n <= 6, got " + std::to_string(opt.ngon_size));
  }
  const RingSpec ring = ring_given ? RingSpec::parse(opt.ring) : RingSpec::integers_mod(2);
  const NgonObstruction report = demonstrate_ngon_obstruction(opt.ngon_size, ring);
  out << "ngon " << report.n << " over " << report.ring.to_string() << ": target "
      << report.target.to_string() << "\n";
  out << report.summary() << "\n";
  out << "edge coefficients forced: " << (report.edge_coefficients_forced ? "yes" : "no") << "\n";
  out << "orderings with a diagonal term: " << report.orderings_with_diagonal_term << "\n";
  out << "mixed factorization: " << report.mixed_word.to_string() << "\n";
  out << "mixed factorization evaluates to target: "
      << (report.mixed_word_evaluates_to_target ? "yes" : "no") << "\n";
  return report.obstruction_confirmed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations in extended McLain groups", "mclain"};
  app.require_subcommand(1);
  auto* ring_opt = app.add_option("--ring", opt.ring, "Coefficient ring: Z, Z/n or M2(Z/n)");
  app.add_option("--relation", opt.relation_file, "Relation file");

  auto* check = app.add_subcommand("check", "Check axioms (A1) and (A2)");
  check->add_option("file", opt.positional_relation, "Relation file");

  auto* series = app.add_subcommand("series", "Lower or upper central series");
  series->add_option("file", opt.positional_relation, "Relation file");
  auto* lower = series->add_flag("--lower", opt.lower, "Lower central series (default)");
  auto* upper = series->add_flag("--upper", opt.upper, "Upper central series");
  lower->excludes(upper);

  auto* eval = app.add_subcommand("eval", "Evaluate an element expression to normal form");
  eval->add_option("expression", opt.expression)->required();

  auto* factor = app.add_subcommand("factor", "Factor an element into generators");
  factor->add_option("expression", opt.expression)->required();
  factor->add_option("--order", opt.order_file, "Order file for the ordered canonical form");

  auto* quotient = app.add_subcommand("quotient", "Project onto G(relation minus gamma)");
  quotient->add_option("expression", opt.expression)->required();
  quotient->add_option("--gamma", opt.gamma_file, "Normal subset, relation file format")->required();

  auto* demo = app.add_subcommand("demo-ngon", "Ordered edge products in the n-gon relation");
  demo->add_option("n", opt.ngon_size)->required();

  for (auto* sub : {check, series, eval, factor, quotient, demo}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (series->parsed()) return cmd_series(opt, out);
    if (eval->parsed()) return cmd_eval(opt, out);
    if (factor->parsed()) return cmd_factor(opt, out);
    if (quotient->parsed()) return cmd_quotient(opt, out);
    if (demo->parsed()) return cmd_demo_ngon(opt, ring_opt->count() > 0, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace mclain::cli
