#include <iostream>

#include "CLI11.hpp"
#include "setopt/audit.hpp"
#include "setopt/report.hpp"

namespace {

using namespace setopt;

Point parse_point(const std::string& s, int dim) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != dim)
    throw InstanceError("--point needs " + std::to_string(dim) + " comma-separated rationals");
  Point p;
  for (const auto& t : parts) p.push_back(rat_from_string(t));
  return p;
}

int cmd_check(const std::string& path, const std::string& point_str, const std::string& report_kind,
              const std::vector<std::string>& asserts) {
  Instance inst = load_instance(path);
  if (!inst.fun) throw InstanceError("instance has no function block");
  Point x0 = parse_point(point_str, inst.dim_x);
  bool known = false;
  for (const auto& c : inst.candidates) known = known || c == x0;
  if (!known) throw InstanceError("--point is not among the instance candidates");
  if (!inst.fun->in_domain(x0)) throw InstanceError("candidate lies outside dom f");

  ViOptions opt;
  opt.ts = inst.ts;
  DiagramReport rep = implication_audit(*inst.fun, {x0}, inst.directions, opt);
  if (rep.candidates.empty()) throw InstanceError("candidate produced no report");
  const CandidateReport& cr = rep.candidates.front();

  if (report_kind == "structured")
    std::cout << render_candidate_json(inst.name, cr) << "\n";
  else
    std::cout << render_candidate_table(inst.name, cr);

  int rc = rep.violations_total == 0 ? 0 : 1;
  for (const auto& a : asserts) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw InstanceError("--assert needs PREDICATE=STATUS");
    std::string name = a.substr(0, eq), want = a.substr(eq + 1);
    bool matched = false;
    for (const auto& [id, res] : cr.predicates) {
      if (name == to_string(id)) {
        matched = true;
        if (want != to_string(res.status)) {
          std::cerr << "assert failed: " << name << " is " << to_string(res.status) << ", expected "
                    << want << "\n";
          rc = 1;
        }
      }
    }
    if (!matched) throw InstanceError("unknown predicate in --assert: " + name);
  }
  return rc;
}

int cmd_enumerate(const std::string& path, const std::string& report_kind) {
  Instance inst = load_instance(path);
  EnumerationResult r = enumerate_solutions(inst);
  if (report_kind == "structured")
    std::cout << render_enumeration_json(inst.name, r) << "\n";
  else
    std::cout << render_enumeration_table(inst.name, r);
  return (r.asserted && !r.diff_empty) ? 1 : 0;
}

int cmd_audit_instance(const std::string& path) {
  Instance inst = load_instance(path);
  InstanceAuditResult res = run_instance_audit(inst);
  std::cout << "instance: " << inst.name << "\n";
  std::cout << render_suites(res.suites);
  if (res.diagram) {
    std::cout << "implication-diagram: " << res.diagram->candidates.size() << " candidates, "
              << res.diagram->violations_total << " violations\n";
    for (const auto& cr : res.diagram->candidates)
      for (const auto& n : cr.strictness_notes)
        std::cout << "  note at x0=" << vec_to_string(cr.x0) << ": " << n << "\n";
  }
  return res.violations_total() == 0 ? 0 : 1;
}

int cmd_audit_random(int dim, unsigned seed, int cases) {
  auto suites = run_random_audit(dim, seed, cases);
  std::cout << "random audit: dim=" << dim << " seed=" << seed << " cases=" << cases << "\n";
  std::cout << render_suites(suites);
  int violations = 0;
  for (const auto& s : suites) violations += s.violations;
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"setopt: exact conlinear set calculus and variational-inequality checks"};
  app.require_subcommand(1);

  std::string inst_path, point_str, report_kind = "table";
  std::vector<std::string> asserts;

  auto* check = app.add_subcommand("check", "evaluate the seven predicates at a candidate");
  check->add_option("--instance", inst_path, "instance file")->required();
  check->add_option("--point", point_str, "candidate x0 as comma-separated rationals")->required();
  check->add_option("--report", report_kind)->check(CLI::IsMember({"table", "structured"}));
  check->add_option("--assert", asserts, "PREDICATE=STATUS assertions");

  auto* enumerate = app.add_subcommand("enumerate", "weak-minimizer lists with oracle cross-check");
  enumerate->add_option("--instance", inst_path)->required();
  enumerate->add_option("--report", report_kind)->check(CLI::IsMember({"table", "structured"}));

  std::vector<std::string> random_args;
  auto* audit = app.add_subcommand("audit", "property suites and implication diagrams");
  audit->add_option("--instance", inst_path);
  audit->add_option("--random", random_args, "DIM SEED CASES")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(inst_path, point_str, report_kind, asserts);
    if (enumerate->parsed()) return cmd_enumerate(inst_path, report_kind);
    if (audit->parsed()) {
      if (!random_args.empty())
        return cmd_audit_random(std::stoi(random_args[0]),
                                static_cast<unsigned>(std::stoul(random_args[1])),
                                std::stoi(random_args[2]));
      if (!inst_path.empty()) return cmd_audit_instance(inst_path);
      std::cerr << "audit needs --instance or --random\n";
      return 2;
    }
  } catch (const setopt::InstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal violation: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
