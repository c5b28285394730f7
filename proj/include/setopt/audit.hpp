#pragma once

#include <random>

#include "setopt/instance.hpp"
#include "setopt/oracle.hpp"
#include "setopt/vi.hpp"

namespace setopt {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int violations = 0;
  std::vector<std::string> notes;
};

ConePtr pareto_cone(int dim);

// Seeded random normalized G-set over a cone; occasionally the lattice
// extremes.
GSet random_gset(std::mt19937_64& rng, const ConePtr& cone);

// Property suites on random data: residuation adjunction, lattice bounds
// and distributivity, the conlinear residuation inequality, the
// scalarization lemmas, recession duality, the inclusion chain, and the
// definitional residual cross-check.
std::vector<SuiteResult> run_random_audit(int dim, unsigned seed, int cases);

struct InstanceAuditResult {
  std::vector<SuiteResult> suites;
  std::optional<DiagramReport> diagram;
  int violations_total() const;
};
InstanceAuditResult run_instance_audit(const Instance& inst);

std::string render_suites(const std::vector<SuiteResult>& suites);

}  // namespace setopt
