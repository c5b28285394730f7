#pragma once

#include <stdexcept>

#include "setopt/setfun.hpp"

namespace setopt {

struct InstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Data for the inclusion-chain audit on a profile-described set A against a
// polyhedral set B: -sigma(z*|A) on a dual grid, the recession rays of A,
// B's constraints, and the epsilons to test.
struct InclusionBlock {
  std::vector<std::pair<DualVector, ExtReal>> profile_a;
  std::vector<Point> rec_rays;
  std::vector<Halfspace> b_constraints;
  std::vector<Rat> epsilons;
};

// A parsed instance file: cone and function blocks, the finite candidate
// and direction sets, and audit options.  See docs/instance-format.md.
struct Instance {
  std::string name;
  int dim_x = 0, dim_z = 0;
  ConePtr cone;  // absent for pure profile instances
  std::optional<SetFun> fun;
  std::vector<Point> candidates;
  std::vector<Point> directions;
  std::vector<Rat> ts;        // defaults to the dyadic sequence 1/2^k, k <= 20
  std::vector<Rat> epsilons;  // for margin probes; defaults to 1/2^k, k <= 6
  std::optional<InclusionBlock> inclusion;
};

Instance parse_instance(const std::string& text, const std::string& name);
Instance load_instance(const std::string& path);

}  // namespace setopt
