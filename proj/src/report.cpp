#include "setopt/report.hpp"

#include <sstream>

#include "json.hpp"
#include "setopt/oracle.hpp"

namespace setopt {

namespace {

const PredicateId kOrder[] = {PredicateId::WMin,  PredicateId::WlMin,  PredicateId::ScWMin,
                              PredicateId::WSVI,  PredicateId::ScWSVI, PredicateId::WMVI,
                              PredicateId::ScWMVI};

}  // namespace

std::string render_candidate_table(const std::string& instance_name, const CandidateReport& cr) {
  std::ostringstream out;
  out << "instance: " << instance_name << "\n";
  out << "candidate x0 = " << vec_to_string(cr.x0) << "\n";
  out << "hypotheses: convex=" << (cr.convex_hypothesis ? "yes" : "no")
      << " extension=" << (cr.extension_backend ? "yes" : "no")
      << " lsc=" << (cr.lsc_hypothesis ? "yes" : "no") << "\n";
  for (PredicateId p : kOrder) {
    auto it = cr.predicates.find(p);
    if (it == cr.predicates.end()) continue;
    const auto& r = it->second;
    out << "  " << to_string(p) << ": " << to_string(r.status);
    if (r.witness_point) out << "  witness " << vec_to_string(*r.witness_point);
    if (r.certificate) out << "  certificate " << vec_to_string(*r.certificate);
    if (!r.exact) out << "  (estimate)";
    out << "\n";
  }
  for (const auto& v : cr.implication_violations) out << "  VIOLATION: " << v << "\n";
  for (const auto& n : cr.strictness_notes) out << "  note: " << n << "\n";
  return out.str();
}

std::string render_candidate_json(const std::string& instance_name, const CandidateReport& cr) {
  nlohmann::ordered_json j;
  j["instance"] = instance_name;
  j["candidate"] = vec_to_string(cr.x0);
  j["hypotheses"] = {{"convex", cr.convex_hypothesis},
                     {"extension", cr.extension_backend},
                     {"lsc", cr.lsc_hypothesis}};
  j["predicates"] = nlohmann::ordered_json::array();
  for (PredicateId p : kOrder) {
    auto it = cr.predicates.find(p);
    if (it == cr.predicates.end()) continue;
    const auto& r = it->second;
    nlohmann::ordered_json e;
    e["predicate"] = to_string(p);
    e["status"] = to_string(r.status);
    e["witness_point"] = r.witness_point ? vec_to_string(*r.witness_point) : "";
    e["certificate_dual"] = r.certificate ? vec_to_string(*r.certificate) : "";
    e["exact"] = r.exact;
    j["predicates"].push_back(e);
  }
  j["implication_violations"] = cr.implication_violations;
  j["notes"] = cr.strictness_notes;
  return j.dump(2);
}

EnumerationResult enumerate_solutions(const Instance& inst) {
  if (!inst.fun || inst.fun->backend() != SetFun::Backend::Extension)
    throw InstanceError("enumerate: needs a vector_pl (extension) instance");
  const SetFun& f = *inst.fun;
  EnumerationResult r;
  const auto& X = inst.directions;
  ViOptions opt;
  opt.ts = inst.ts;
  r.oracle_set = weak_efficient_bruteforce(f.pl(), *inst.cone, inst.candidates);
  for (const auto& x0 : inst.candidates) {
    if (!f.in_domain(x0)) continue;
    if (solves_wsvi(f, x0, X, opt).status == TriState::Holds) r.svi_set.push_back(x0);
    if (solves_sc_wmvi(f, x0, X, opt).status == TriState::Holds) r.sc_mvi_set.push_back(x0);
  }
  r.asserted = f.declared_convex();
  r.diff_empty = r.oracle_set == r.svi_set && r.oracle_set == r.sc_mvi_set;
  return r;
}

namespace {

std::string render_point_list(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += " ";
    s += vec_to_string(pts[i]);
  }
  return s;
}

}  // namespace

std::string render_enumeration_table(const std::string& instance_name, const EnumerationResult& r) {
  std::ostringstream out;
  out << "instance: " << instance_name << "\n";
  out << "oracle weak-efficient (" << r.oracle_set.size() << "): " << render_point_list(r.oracle_set) << "\n";
  out << "W-SVI solutions (" << r.svi_set.size() << "): " << render_point_list(r.svi_set) << "\n";
  out << "Sc-W-MVI solutions (" << r.sc_mvi_set.size() << "): " << render_point_list(r.sc_mvi_set) << "\n";
  if (r.asserted) {
    out << "diff: " << (r.diff_empty ? "empty" : "NONEMPTY (violation)") << "\n";
  } else {
    out << "diff: not asserted (hypotheses absent)\n";
  }
  return out.str();
}

std::string render_enumeration_json(const std::string& instance_name, const EnumerationResult& r) {
  nlohmann::ordered_json j;
  j["instance"] = instance_name;
  auto dump = [](const std::vector<Point>& pts) {
    std::vector<std::string> v;
    v.reserve(pts.size());
    for (const auto& p : pts) v.push_back(vec_to_string(p));
    return v;
  };
  j["oracle_weak_efficient"] = dump(r.oracle_set);
  j["wsvi_solutions"] = dump(r.svi_set);
  j["sc_wmvi_solutions"] = dump(r.sc_mvi_set);
  j["asserted"] = r.asserted;
  j["diff_empty"] = r.diff_empty;
  return j.dump(2);
}

}  // namespace setopt
