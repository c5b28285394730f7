#pragma once

#include "setopt/instance.hpp"
#include "setopt/vi.hpp"

namespace setopt {

// Stable field names for the structured form: predicate, status,
// witness_point, certificate_dual, exact.
std::string render_candidate_table(const std::string& instance_name, const CandidateReport& cr);
std::string render_candidate_json(const std::string& instance_name, const CandidateReport& cr);

struct EnumerationResult {
  std::vector<Point> oracle_set;
  std::vector<Point> svi_set;
  std::vector<Point> sc_mvi_set;
  bool asserted = false;  // equality asserted only under the convex-extension hypotheses
  bool diff_empty = false;
};
EnumerationResult enumerate_solutions(const Instance& inst);
std::string render_enumeration_table(const std::string& instance_name, const EnumerationResult& r);
std::string render_enumeration_json(const std::string& instance_name, const EnumerationResult& r);

}  // namespace setopt
