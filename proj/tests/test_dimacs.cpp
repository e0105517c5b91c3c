#include "dualenum/dimacs.hpp"

#include "support.hpp"

#include <doctest.h>
#include <random>
#include <sstream>

using namespace dualenum;

TEST_CASE("parses the four-variable example with a projection line") {
  auto inst = testsupport::parse_text("p cnf 4 4\n1 3 0\n1 -3 0\n2 4 0\n2 -4 0\nc p show 1 3 0\n");
  CHECK(inst.declared_var_count == 4);
  CHECK(inst.declared_clause_count == 4);
  REQUIRE(inst.formula.size() == 4);
  CHECK(inst.relevant_vars == std::set<Var>{1, 3});
  CHECK(inst.formula[0].contains(Lit::from_dimacs(1)));
  CHECK(inst.formula[1].contains(Lit::from_dimacs(-3)));
}

TEST_CASE("no projection line means every variable is relevant") {
  auto inst = testsupport::parse_text("p cnf 1 0\n");
  CHECK(inst.formula.size() == 0); // the empty CNF is true
  CHECK(inst.relevant_vars == std::set<Var>{1});
}

TEST_CASE("tautological clauses are dropped at normalization") {
  auto inst = testsupport::parse_text("p cnf 2 1\n1 -1 0\n");
  CHECK(inst.formula.size() == 0);
}

TEST_CASE("multiple show lines are united; other comments ignored") {
  auto inst = testsupport::parse_text(
      "c a comment\np cnf 3 1\nc p show 1 0\n1 2 3 0\nc p show 3 0\nc trailing\n");
  CHECK(inst.relevant_vars == std::set<Var>{1, 3});
}

TEST_CASE("carriage returns and a zero-variable header are accepted") {
  auto crlf = testsupport::parse_text("p cnf 2 1\r\n1 -2 0\r\n");
  CHECK(crlf.formula.size() == 1);

  auto empty = testsupport::parse_text("p cnf 0 0\n");
  CHECK(empty.declared_var_count == 0);
  CHECK(empty.relevant_vars.empty());
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error = [](const std::string &text, int line) {
    std::istringstream in(text);
    try {
      parse_dimacs(in);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError &e) {
      CHECK(e.line() == line);
    }
  };
  expect_error("", 1);                              // empty input
  expect_error("p dnf 2 1\n", 1);                   // malformed header
  expect_error("p cnf 2 1\n1 3 0\n", 2);            // literal out of range
  expect_error("p cnf 2 1\n1 2\n", 2);              // missing terminating 0
  expect_error("p cnf 2 1\n1 0\np cnf 2 1\n", 3);   // duplicate header
  expect_error("1 0\n", 1);                         // clause before header
  expect_error("p cnf 2 1\nc p show 1\n", 2);       // unterminated show line
}

TEST_CASE("write_cube emits input numbering, variable-sorted") {
  auto text_of = [](const Cube &m) {
    std::ostringstream out;
    write_cube(m, out);
    return out.str();
  };
  Cube a(std::vector<Lit>{Lit(1, true)});
  CHECK(text_of(a) == "v 1 0\n");

  Cube empty;
  CHECK(text_of(empty) == "v 0\n");

  Cube ba(std::vector<Lit>{Lit(2, true), Lit(1, true)});
  CHECK(text_of(ba) == "v 1 2 0\n");
}

TEST_CASE("write_summary reports cube count and exact cover") {
  Stats stats;
  std::ostringstream out;

  SUBCASE("one cube of one literal over two relevant variables covers 2") {
    DnfAccumulator m(Mode::Irredundant);
    m.append(Cube(std::vector<Lit>{Lit(1, true)}));
    write_summary(m, 2, stats, out);
    CHECK(out.str().find("s cubes 1\n") != std::string::npos);
    CHECK(out.str().find("s cover 2\n") != std::string::npos);
  }

  SUBCASE("empty accumulator covers nothing") {
    DnfAccumulator m(Mode::Irredundant);
    write_summary(m, 2, stats, out);
    CHECK(out.str().find("s cubes 0\n") != std::string::npos);
    CHECK(out.str().find("s cover 0\n") != std::string::npos);
  }

  SUBCASE("a full-width cube covers exactly itself") {
    DnfAccumulator m(Mode::Irredundant);
    m.append(Cube(std::vector<Lit>{Lit(1, true), Lit(2, true)}));
    CHECK(cover_count(m, 2) == 1);
  }

  SUBCASE("redundant mode omits the cover line") {
    DnfAccumulator m(Mode::Redundant);
    m.append(Cube(std::vector<Lit>{Lit(1, true)}));
    write_summary(m, 2, stats, out);
    CHECK(out.str().find("s cover") == std::string::npos);
  }
}

TEST_CASE("projection override file accepts both show spellings") {
  std::istringstream a("p show 1 2 0\n");
  CHECK(parse_projection(a, 4) == std::set<Var>{1, 2});
  std::istringstream b("c p show 3 0\n");
  CHECK(parse_projection(b, 4) == std::set<Var>{3});
}

// Re-parsing emitted cubes against the original numbering yields the
// same literal sets.
TEST_CASE("cube writing round-trips through the v-line format") {
  std::mt19937 rng(21);
  std::bernoulli_distribution coin(0.5);
  for (int round = 0; round < 50; ++round) {
    std::uniform_int_distribution<int> nvars(0, 12);
    Cube m;
    int n = nvars(rng);
    for (Var v = 1; v <= n; ++v)
      if (coin(rng))
        m.push(Lit(v, coin(rng)));
    std::ostringstream out;
    write_cube(m, out);
    std::istringstream in(out.str());
    std::string v_tag;
    in >> v_tag;
    REQUIRE(v_tag == "v");
    Cube back;
    int lit;
    while (in >> lit && lit != 0)
      back.push(Lit::from_dimacs(lit));
    CHECK(back.same_literals(m));
  }
}
