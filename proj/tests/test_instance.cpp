#include "doctest.h"
#include "setopt/audit.hpp"
#include "setopt/report.hpp"

#include <cstdlib>

using namespace setopt;

namespace {

std::string instance_dir() {
  if (const char* env = std::getenv("SETOPT_INSTANCES")) return env;
  return std::string(SETOPT_SOURCE_DIR) + "/instances";
}

}  // namespace

TEST_CASE("parse the triangle instance") {
  Instance inst = load_instance(instance_dir() + "/triangle.sopt");
  CHECK(inst.dim_x == 1);
  CHECK(inst.dim_z == 2);
  REQUIRE(inst.fun.has_value());
  CHECK(inst.fun->backend() == SetFun::Backend::Tracks);
  CHECK(inst.fun->declared_convex());
  CHECK(inst.cone->dual_base.size() == 3);
  CHECK(inst.candidates.size() == 3);
  CHECK(inst.directions.size() == 5);
  CHECK(inst.ts.size() == 16);
}

TEST_CASE("parse the identity instance") {
  Instance inst = load_instance(instance_dir() + "/identity.sopt");
  REQUIRE(inst.fun.has_value());
  CHECK(inst.fun->backend() == SetFun::Backend::Extension);
  CHECK(inst.candidates.size() == 81);
  CHECK(inst.fun->pl().simplices.size() == 128);
}

TEST_CASE("parse profile and inclusion instances") {
  Instance circle = load_instance(instance_dir() + "/circle_profiles.sopt");
  REQUIRE(circle.fun.has_value());
  CHECK(circle.fun->backend() == SetFun::Backend::Profiles);
  CHECK(circle.fun->profiles().entries.size() == 4);
  CHECK(circle.fun->profiles().declared_primal_derivative->is_empty());
  CHECK(!circle.cone);

  Instance incl = load_instance(instance_dir() + "/inclusions_b.sopt");
  REQUIRE(incl.inclusion.has_value());
  CHECK(incl.inclusion->b_constraints.size() == 16);
  CHECK(incl.inclusion->profile_a.size() == 19);
  CHECK(incl.inclusion->epsilons.size() == 6);
}

TEST_CASE("malformed rational is rejected") {
  CHECK_THROWS_AS(load_instance(instance_dir() + "/bad_rational.sopt"), InstanceError);
}

TEST_CASE("corrupted cone is rejected at load") {
  std::string text = R"(
space {
  dim_x 1
  dim_z 2
}
cone {
  normal 1 0
  normal -1 0
}
)";
  CHECK_THROWS_AS(parse_instance(text, "corrupt"), InstanceError);
}

TEST_CASE("unknown directives are rejected") {
  CHECK_THROWS_AS(parse_instance("space {\n dim_x 1\n dim_z 1\n wat 3\n}\n", "x"), InstanceError);
  CHECK_THROWS_AS(parse_instance("nonsense {\n}\n", "x"), InstanceError);
}

TEST_CASE("reports are deterministic") {
  Instance inst = load_instance(instance_dir() + "/triangle.sopt");
  ViOptions opt;
  opt.ts = inst.ts;
  auto rep1 = implication_audit(*inst.fun, {inst.candidates[0]}, inst.directions, opt);
  auto rep2 = implication_audit(*inst.fun, {inst.candidates[0]}, inst.directions, opt);
  CHECK(render_candidate_table(inst.name, rep1.candidates[0]) ==
        render_candidate_table(inst.name, rep2.candidates[0]));
  CHECK(render_candidate_json(inst.name, rep1.candidates[0]) ==
        render_candidate_json(inst.name, rep2.candidates[0]));
}

TEST_CASE("triangle report content") {
  Instance inst = load_instance(instance_dir() + "/triangle.sopt");
  ViOptions opt;
  opt.ts = inst.ts;
  auto rep = implication_audit(*inst.fun, {Point{Rat(0)}}, inst.directions, opt);
  REQUIRE(rep.candidates.size() == 1);
  const auto& cr = rep.candidates[0];
  CHECK(cr.predicates.at(PredicateId::WMin).status == TriState::Holds);
  CHECK(cr.predicates.at(PredicateId::WlMin).status == TriState::Holds);
  CHECK(cr.predicates.at(PredicateId::ScWMin).status == TriState::Holds);
  CHECK(cr.predicates.at(PredicateId::WSVI).status == TriState::Holds);
  auto mv = cr.predicates.at(PredicateId::WMVI);
  CHECK(mv.status == TriState::Fails);
  REQUIRE(mv.witness_point.has_value());
  CHECK(*mv.witness_point == Point{Rat(1)});  // direction 1 is declared first
  CHECK(rep.violations_total == 0);
}

TEST_CASE("enumerate the affine segment") {
  Instance inst = load_instance(instance_dir() + "/affine_segment.sopt");
  auto r = enumerate_solutions(inst);
  REQUIRE(r.oracle_set.size() == 1);
  CHECK(r.oracle_set[0] == Point{Rat(0)});
  CHECK(r.asserted);
  CHECK(r.diff_empty);
}

TEST_CASE("instance audits run clean") {
  for (const char* name : {"triangle.sopt", "affine_segment.sopt", "circle_profiles.sopt",
                           "inclusions_b.sopt", "jump.sopt"}) {
    Instance inst = load_instance(instance_dir() + "/" + name);
    auto res = run_instance_audit(inst);
    CHECK(res.violations_total() == 0);
  }
}

TEST_CASE("inclusion audit flags the non-reversibility witness") {
  Instance inst = load_instance(instance_dir() + "/inclusions_b.sopt");
  auto res = run_instance_audit(inst);
  bool witnessed = false;
  for (const auto& s : res.suites)
    for (const auto& n : s.notes)
      if (n.find("non-reversibility witnessed") != std::string::npos) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("circle audit flags the assembly gap") {
  Instance inst = load_instance(instance_dir() + "/circle_profiles.sopt");
  auto res = run_instance_audit(inst);
  bool gap = false;
  for (const auto& s : res.suites)
    for (const auto& n : s.notes)
      if (n.find("assembly-vs-primal gap flagged") != std::string::npos) gap = true;
  CHECK(gap);
}
