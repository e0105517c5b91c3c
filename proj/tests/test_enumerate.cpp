#include "dualenum/enumerate.hpp"

#include "dualenum/oracle.hpp"
#include "support.hpp"

#include <doctest.h>
#include <random>

using namespace dualenum;

namespace {

Lit L(int n) { return Lit::from_dimacs(n); }

Cube cube_of(std::vector<int> dimacs) {
  Cube m;
  for (int n : dimacs)
    m.push(Lit::from_dimacs(n));
  return m;
}

const char *kExampleCnf = "p cnf 4 4\n1 3 0\n1 -3 0\n2 4 0\n2 -4 0\n";

std::vector<RuleKind> rules(std::initializer_list<RuleKind> rs) { return rs; }

} // namespace

TEST_CASE("irredundant trace of the four-variable example") {
  auto inst = testsupport::parse_text(kExampleCnf);
  inst.relevant_vars = {1, 3};
  EnumOptions options;
  options.record_rules = true;
  options.check_invariants = true;
  EnumResult result = enumerate(inst, options);

  REQUIRE(result.models.size() == 1);
  CHECK(result.models[0].same_literals(cube_of({1})));
  CHECK(result.cause == TerminationCause::Exhausted);
  CHECK(result.rules == rules({RuleKind::DecX, RuleKind::DecX, RuleKind::DecYS,
                               RuleKind::DecYS, RuleKind::BTop, RuleKind::Unit,
                               RuleKind::EBot}));
}

TEST_CASE("redundant trace of the four-variable example") {
  auto inst = testsupport::parse_text(kExampleCnf);
  inst.relevant_vars = {1, 2};
  EnumOptions options;
  options.mode = Mode::Redundant;
  options.record_rules = true;
  options.check_invariants = true;
  EnumResult result = enumerate(inst, options);

  REQUIRE(result.models.size() == 2);
  CHECK(result.models[0].same_literals(cube_of({1, 2})));
  CHECK(result.models[1].same_literals(cube_of({1, 2})));
  CHECK(result.rules == rules({RuleKind::DecX, RuleKind::DecX, RuleKind::DecYS,
                               RuleKind::DecYS, RuleKind::BTop, RuleKind::Unit,
                               RuleKind::BBot, RuleKind::DecX, RuleKind::DecYS,
                               RuleKind::DecYS, RuleKind::BTop, RuleKind::Unit,
                               RuleKind::EBot}));
}

TEST_CASE("unsatisfiable input terminates with the empty DNF") {
  auto inst = testsupport::parse_text("p cnf 1 2\n1 0\n-1 0\n");
  EnumOptions options;
  options.record_rules = true;
  EnumResult result = enumerate(inst, options);
  CHECK(result.models.empty());
  CHECK(result.cause == TerminationCause::Exhausted);
  REQUIRE(!result.rules.empty());
  CHECK(result.rules.back() == RuleKind::EBot);
}

TEST_CASE("an input empty clause terminates before any decision") {
  auto inst = testsupport::parse_text("p cnf 2 2\n0\n1 2 0\n");
  EnumOptions options;
  options.record_rules = true;
  EnumResult result = enumerate(inst, options);
  CHECK(result.models.empty());
  CHECK(result.cause == TerminationCause::Exhausted);
  REQUIRE(result.rules.size() == 1);
  CHECK(result.rules[0] == RuleKind::EBot);
}

TEST_CASE("a unit chain conflicting at level zero reaches EBot") {
  auto inst = testsupport::parse_text("p cnf 2 3\n1 0\n-1 2 0\n-2 0\n");
  EnumOptions options;
  options.record_rules = true;
  options.check_invariants = true;
  EnumResult result = enumerate(inst, options);
  CHECK(result.models.empty());
  CHECK(result.rules.back() == RuleKind::EBot);
}

TEST_CASE("a learned unit that re-conflicts at level zero reaches EBot next") {
  // (a v b)(a v ~b)(~a v b)(~a v ~b): the first conflict learns a unit,
  // propagating it conflicts again at level zero.
  auto inst = testsupport::parse_text("p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
  EnumOptions options;
  options.record_rules = true;
  options.check_invariants = true;
  EnumResult result = enumerate(inst, options);
  CHECK(result.models.empty());
  CHECK(result.cause == TerminationCause::Exhausted);
  REQUIRE(result.rules.size() >= 2);
  CHECK(result.rules.back() == RuleKind::EBot);
  CHECK(std::count(result.rules.begin(), result.rules.end(), RuleKind::BBot) >= 1);
}

TEST_CASE("a model without relevant decisions ends the search") {
  // X empty: the first total model projects to the empty cube.
  auto inst = testsupport::parse_text("p cnf 2 1\n1 2 0\nc p show 0\n");
  EnumOptions options;
  options.record_rules = true;
  EnumResult result = enumerate(inst, options);
  REQUIRE(result.models.size() == 1);
  CHECK(result.models[0].empty());
  CHECK(result.rules.back() == RuleKind::ETop);
}

TEST_CASE("a cube that loses every relevant decision ends the search covered") {
  // F is true; the single relevant variable never enters a conflict, so
  // the shrunk cube is empty while a relevant decision is on the trail.
  auto inst = testsupport::parse_text("p cnf 1 0\n");
  EnumOptions options;
  options.record_rules = true;
  options.check_invariants = true;
  EnumResult result = enumerate(inst, options);
  REQUIRE(result.models.size() == 1);
  CHECK(result.models[0].empty());
  CHECK(result.cause == TerminationCause::EmptyBlock);
  CHECK(oracle::covers_equal(result.models, inst.formula, {1}, {1}));
}

TEST_CASE("model limit yields a sound partial enumeration and a signal") {
  auto inst = testsupport::parse_text("p cnf 2 1\n1 2 0\n");
  EnumOptions options;
  options.limits.max_models = 1;
  EnumResult result = enumerate(inst, options);
  CHECK(result.cause == TerminationCause::ModelLimit);
  REQUIRE(result.models.size() == 1);
  // Every emitted cube entails the formula.
  for (const auto &a : oracle::total_models(CnfFormula(2), {1, 2}))
    if (a.satisfies(result.models[0]))
      CHECK(a.satisfies(inst.formula));
}

TEST_CASE("conflict limit yields a sound partial enumeration") {
  auto inst = testsupport::parse_text("p cnf 3 3\n1 2 0\n-1 2 3 0\n2 -3 0\n");
  EnumOptions options;
  options.limits.max_conflicts = 1;
  EnumResult result = enumerate(inst, options);
  if (result.cause == TerminationCause::ConflictLimit) {
    for (const Cube &m : result.models)
      for (const auto &a : oracle::total_models(CnfFormula(3), {1, 2, 3}))
        if (a.satisfies(m))
          CHECK(a.satisfies(inst.formula));
  }
}

TEST_CASE("the streaming sink sees cubes in enumeration order") {
  auto inst = testsupport::parse_text(kExampleCnf);
  inst.relevant_vars = {1, 3};
  EnumOptions options;
  size_t streamed = 0;
  options.on_model = [&](const Cube &m) {
    CHECK(m.same_literals(cube_of({1})));
    ++streamed;
  };
  EnumResult result = enumerate(inst, options);
  CHECK(streamed == result.models.size());
}

TEST_CASE("check_invariants reports a clean state and a broken one") {
  auto inst = testsupport::parse_text(kExampleCnf);
  inst.relevant_vars = {1, 3};

  SUBCASE("fresh enumerator passes") {
    Enumerator e(inst, {});
    InvariantReport rep = e.check_invariants(10);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
  }

  SUBCASE("skipping the negation update trips DualPN at the next boundary") {
    EnumOptions options;
    options.check_invariants = true;
    options.omit_negation_update = true;
    Enumerator e(inst, options);
    try {
      e.run();
      FAIL("expected an invariant violation");
    } catch (const InvariantViolation &v) {
      CHECK(v.invariant() == "DualPN");
    }
  }

  SUBCASE("a doctored accumulator fails the DSOP check") {
    Enumerator e(inst, {});
    InvariantReport rep = e.check_invariants(10);
    CHECK(rep.ok);
    DnfAccumulator bad(Mode::Irredundant);
    bad.append(cube_of({1, 3}));
    bad.append(cube_of({3, 1}));
    CHECK(!oracle::is_dsop(bad));
  }
}

TEST_CASE("a trail with two decisions at one level fails the Decs check") {
  Trail t;
  t.ensure_vars(2);
  t.push_decision(L(1));
  CHECK(t.well_formed());
  t.push_unchecked(L(2), EntryKind::Decision, 1, kNoReason);
  std::string why;
  CHECK(!t.well_formed(&why));
  CHECK(why.find("opener") != std::string::npos);
}

TEST_CASE("random instances: irredundant enumeration is exact and disjoint") {
  std::mt19937 rng(12345);
  for (int round = 0; round < 120; ++round) {
    ProblemInstance inst = testsupport::random_instance(rng);
    EnumOptions options;
    options.mode = Mode::Irredundant;
    EnumResult result = enumerate(inst, options);
    REQUIRE((result.cause == TerminationCause::Exhausted ||
             result.cause == TerminationCause::EmptyBlock));
    CHECK(oracle::covers_equal(result.models, inst.formula, testsupport::all_vars_of(inst),
                               testsupport::relevant_of(inst)));
    CHECK(oracle::is_dsop(result.models));
  }
}

TEST_CASE("random instances: redundant enumeration is exact") {
  std::mt19937 rng(54321);
  for (int round = 0; round < 120; ++round) {
    ProblemInstance inst = testsupport::random_instance(rng);
    EnumOptions options;
    options.mode = Mode::Redundant;
    EnumResult result = enumerate(inst, options);
    REQUIRE((result.cause == TerminationCause::Exhausted ||
             result.cause == TerminationCause::EmptyBlock));
    CHECK(oracle::covers_equal(result.models, inst.formula, testsupport::all_vars_of(inst),
                               testsupport::relevant_of(inst)));
  }
}
