#pragma once

#include <map>

#include "setopt/dini.hpp"

namespace setopt {

// The seven predicates of the weak-efficiency diagrams.
enum class PredicateId { WMin, WlMin, ScWMin, WSVI, ScWSVI, WMVI, ScWMVI };
const char* to_string(PredicateId p);

struct PredicateResult {
  TriState status = TriState::Unknown;
  std::optional<Point> witness_point;     // failing direction, when status == Fails
  std::optional<DualVector> certificate;  // last z* involved, informative
  bool exact = true;
};

// Quantifiers range over the instance's finite direction set X; ts is the
// fallback sequence for derivative estimates on non-convex data.
struct ViOptions {
  std::vector<Rat> ts;  // strictly decreasing to 0
  static ViOptions dyadic(int n = 20);
};

PredicateResult is_weak_min(const SetFun& f, const Point& x0, const std::vector<Point>& X);
PredicateResult is_weak_l_min(const SetFun& f, const Point& x0, const std::vector<Point>& X);
PredicateResult is_sc_weak_min(const SetFun& f, const Point& x0, const std::vector<Point>& X);
PredicateResult solves_wsvi(const SetFun& f, const Point& x0, const std::vector<Point>& X,
                            const ViOptions& opt);
PredicateResult solves_sc_wsvi(const SetFun& f, const Point& x0, const std::vector<Point>& X,
                               const ViOptions& opt);
PredicateResult solves_wmvi(const SetFun& f, const Point& x0, const std::vector<Point>& X,
                            const ViOptions& opt);
PredicateResult solves_sc_wmvi(const SetFun& f, const Point& x0, const std::vector<Point>& X,
                               const ViOptions& opt);

struct CandidateReport {
  Point x0;
  std::map<PredicateId, PredicateResult> predicates;
  std::vector<std::string> implication_violations;
  std::vector<std::string> strictness_notes;
  bool convex_hypothesis = false;
  bool extension_backend = false;
  bool lsc_hypothesis = false;
};

struct DiagramReport {
  std::vector<CandidateReport> candidates;
  std::vector<std::string> convexity_findings;
  int violations_total = 0;
};

// Evaluates all seven predicates at every candidate in dom f and checks
// each implication the hypotheses support; one-way arrows are probed for
// strictness witnesses.  Candidates off dom f are skipped.
DiagramReport implication_audit(const SetFun& f, const std::vector<Point>& candidates,
                                const std::vector<Point>& X, const ViOptions& opt);

}  // namespace setopt
