#include <catch2/catch_amalgamated.hpp>

#include "clifsat/cnf.hpp"
#include "clifsat/oracle.hpp"
#include "oracles.hpp"

using namespace clifsat;
using testsupport::known_unsat_3var;
using testsupport::known_unsat_3var_dimacs;
using testsupport::splitmix64;

TEST_CASE("dimacs parsing", "[cnf][dimacs]") {
  SECTION("five clause instance") {
    const Cnf f = parse_dimacs(known_unsat_3var_dimacs());
    CHECK(f.n == 3);
    CHECK(f.num_clauses() == 5);
    CHECK(equal_mod_order(f, known_unsat_3var()));
  }
  SECTION("empty problem") {
    const Cnf f = parse_dimacs("p cnf 1 0\n");
    CHECK(f.n == 1);
    CHECK(f.clause_free());
  }
  SECTION("single clause") {
    const Cnf f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
    REQUIRE(f.num_clauses() == 1);
    CHECK(f.clauses[0].contains(Literal::pos(1)));
    CHECK(f.clauses[0].contains(Literal::neg(2)));
  }
  SECTION("comments, CRLF and stray whitespace are accepted") {
    const Cnf f = parse_dimacs("c header comment\r\np cnf 2 1\r\nc mid\r\n 1   -2  0\r\n");
    CHECK(f.n == 2);
    CHECK(f.num_clauses() == 1);
  }
  SECTION("duplicate literals are dropped") {
    const Cnf f = parse_dimacs("p cnf 2 1\n1 1 -2 1 0\n");
    CHECK(f.clauses[0].size() == 2);
  }
  SECTION("clause count mismatch is a warning, not an error") {
    std::vector<std::string> warnings;
    const Cnf f = parse_dimacs("p cnf 2 3\n1 0\n", &warnings);
    CHECK(f.num_clauses() == 1);
    REQUIRE(warnings.size() == 1);
  }
  SECTION("errors carry line and column") {
    try {
      parse_dimacs("p cnf 2 1\n1 x 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.col() == 3);
    }
  }
  SECTION("malformed inputs") {
    CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ParseError);           // no header
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);  // var > n
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n-0 0\n"), ParseError);   // var 0
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 -2\n"), ParseError);   // unterminated
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"), ParseError);
  }
}

TEST_CASE("dimacs writing", "[cnf][dimacs]") {
  CHECK(write_dimacs(Cnf{1, {}}) == "p cnf 1 0\n");
  SECTION("five clause instance round trips") {
    const std::string text = write_dimacs(known_unsat_3var());
    CHECK(text.substr(0, 10) == "p cnf 3 5\n");
    CHECK(equal_mod_order(parse_dimacs(text), known_unsat_3var()));
  }
  SECTION("round trip on random instances") {
    for (int i = 0; i < 100; ++i) {
      const std::uint64_t seed = splitmix64(0xC0FFEE + i);
      const int n = 2 + static_cast<int>(seed % 14);
      const int k = 1 + static_cast<int>((seed >> 8) % std::min(3, n));
      const int m = static_cast<int>((seed >> 16) % 40);
      const Cnf f = random_ksat(n, m, k, seed);
      CHECK(equal_mod_order(parse_dimacs(write_dimacs(f)), f));
    }
  }
}

TEST_CASE("normalization", "[cnf]") {
  SECTION("tautological clause drops") {
    const Cnf f{2, {Clause{Literal::pos(1), Literal::neg(1), Literal::pos(2)}}};
    CHECK(normalize(f).clause_free());
  }
  SECTION("duplicate literal collapses") {
    const Cnf f{1, {Clause{Literal::pos(1), Literal::pos(1)}}};
    const Cnf g = normalize(f);
    REQUIRE(g.num_clauses() == 1);
    CHECK(g.clauses[0].size() == 1);
  }
  SECTION("duplicate clauses collapse, order is kept") {
    const Cnf f{2,
                {Clause{Literal::pos(2)}, Clause{Literal::pos(1)},
                 Clause{Literal::pos(2)}}};
    const Cnf g = normalize(f);
    REQUIRE(g.num_clauses() == 2);
    CHECK(g.clauses[0].contains(Literal::pos(2)));
    CHECK(g.clauses[1].contains(Literal::pos(1)));
  }
  SECTION("five clause instance is already normalized") {
    CHECK(normalize(known_unsat_3var()).num_clauses() == 5);
  }
  SECTION("evaluation is preserved, exhaustively") {
    for (int i = 0; i < 40; ++i) {
      const std::uint64_t seed = splitmix64(0xAB + i);
      const int n = 1 + static_cast<int>(seed % 12);
      Cnf f = random_ksat(n, static_cast<int>((seed >> 5) % 20),
                          1 + static_cast<int>((seed >> 9) % std::min(3, n)), seed);
      // inject duplicates and a tautological clause to give normalize work
      if (!f.clauses.empty()) f.clauses.push_back(f.clauses.front());
      f.clauses.push_back(Clause{Literal::pos(1), Literal::neg(1)});
      const Cnf g = normalize(f);
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
        REQUIRE(eval(f, Assignment(n, a)) == eval(g, Assignment(n, a)));
    }
  }
}

TEST_CASE("evaluation", "[cnf]") {
  const Cnf five = known_unsat_3var();
  // x1=T, x2=T, x3=F falsifies the fourth clause
  CHECK_FALSE(eval(five, Assignment(3, 0b011)));
  CHECK(eval(Cnf{2, {}}, Assignment(2, 0)));
  CHECK_FALSE(eval(Cnf{2, {Clause{}}}, Assignment(2, 3)));
  CHECK_THROWS_AS(eval(five, Assignment(2, 0)), std::invalid_argument);
}

TEST_CASE("restriction", "[cnf]") {
  const Cnf unit{1, {Clause{Literal::pos(1)}}};
  SECTION("unit clause cofactors") {
    const Cnf zero = restrict(unit, 1, false);
    REQUIRE(zero.num_clauses() == 1);
    CHECK(zero.clauses[0].empty());
    CHECK(restrict(unit, 1, true).clause_free());
  }
  SECTION("three clause example") {
    const Cnf f{3,
                {Clause{Literal::pos(1), Literal::pos(2)},
                 Clause{Literal::neg(1), Literal::pos(3)},
                 Clause{Literal::pos(2), Literal::pos(3)}}};
    const Cnf g = restrict(f, 1, false);
    const Cnf expect{3, {Clause{Literal::pos(2)}, Clause{Literal::pos(2), Literal::pos(3)}}};
    CHECK(equal_mod_order(g, expect));
  }
  SECTION("out of range") {
    CHECK_THROWS_AS(restrict(unit, 2, true), std::out_of_range);
    CHECK_THROWS_AS(restrict(unit, 0, true), std::out_of_range);
  }
  SECTION("restrictions on distinct variables commute") {
    for (int i = 0; i < 60; ++i) {
      const std::uint64_t seed = splitmix64(0xDD + i);
      const int n = 2 + static_cast<int>(seed % 9);
      const Cnf f = random_ksat(n, static_cast<int>((seed >> 4) % 25),
                                1 + static_cast<int>((seed >> 10) % std::min(3, n)), seed);
      const int u = 1 + static_cast<int>((seed >> 20) % n);
      int v = 1 + static_cast<int>((seed >> 30) % n);
      if (v == u) v = (v % n) + 1;
      const bool bu = (seed >> 40) & 1, bv = (seed >> 41) & 1;
      const Cnf ab = restrict(restrict(f, u, bu), v, bv);
      const Cnf ba = restrict(restrict(f, v, bv), u, bu);
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
        REQUIRE(eval(ab, Assignment(n, a)) == eval(ba, Assignment(n, a)));
    }
  }
}

TEST_CASE("clause splitting", "[cnf]") {
  SECTION("three clause example") {
    const Cnf f{3,
                {Clause{Literal::pos(1), Literal::pos(2)},
                 Clause{Literal::neg(1), Literal::pos(3)},
                 Clause{Literal::pos(2), Literal::pos(3)}}};
    const ClauseSplit s = clause_split(f, 1);
    CHECK(equal_mod_order(s.s0, Cnf{3, {Clause{Literal::pos(2), Literal::pos(3)}}}));
    CHECK(equal_mod_order(s.s1p, Cnf{3, {Clause{Literal::pos(2)}}}));
    CHECK(equal_mod_order(s.s2p, Cnf{3, {Clause{Literal::pos(3)}}}));
  }
  SECTION("unit clause") {
    const Cnf f{1, {Clause{Literal::pos(1)}}};
    const ClauseSplit s = clause_split(f, 1);
    CHECK(s.s0.clause_free());
    REQUIRE(s.s1p.num_clauses() == 1);
    CHECK(s.s1p.clauses[0].empty());
    CHECK(s.s2p.clause_free());
  }
  SECTION("absent variable") {
    const Cnf f{2, {Clause{Literal::pos(2)}}};
    const ClauseSplit s = clause_split(f, 1);
    CHECK(equal_mod_order(s.s0, f));
    CHECK(s.s1p.clause_free());
    CHECK(s.s2p.clause_free());
  }
  SECTION("both polarities in one clause: satisfied either way") {
    const Cnf f{2, {Clause{Literal::pos(1), Literal::neg(1), Literal::pos(2)}}};
    const ClauseSplit s = clause_split(f, 1);
    CHECK(s.s0.clause_free());
    CHECK(s.s1p.clause_free());
    CHECK(s.s2p.clause_free());
  }
  SECTION("cofactors factor through the split") {
    for (int i = 0; i < 80; ++i) {
      const std::uint64_t seed = splitmix64(0xE5 + i);
      const int n = 1 + static_cast<int>(seed % 10);
      const Cnf f = random_ksat(n, static_cast<int>((seed >> 4) % 30),
                                1 + static_cast<int>((seed >> 12) % std::min(3, n)), seed);
      for (int v = 1; v <= n; ++v) {
        const ClauseSplit s = clause_split(f, v);
        const Cnf low = conjoin(s.s0, s.s1p);   // x_v = F side
        const Cnf high = conjoin(s.s0, s.s2p);  // x_v = T side
        const Cnf rlow = restrict(f, v, false);
        const Cnf rhigh = restrict(f, v, true);
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
          REQUIRE(eval(low, Assignment(n, a)) == eval(rlow, Assignment(n, a)));
          REQUIRE(eval(high, Assignment(n, a)) == eval(rhigh, Assignment(n, a)));
        }
      }
    }
  }
}

TEST_CASE("random instance generator", "[cnf]") {
  CHECK(random_ksat(3, 0, 3, 1).clause_free());
  SECTION("deterministic for a fixed seed") {
    const Cnf a = random_ksat(3, 5, 3, 77), b = random_ksat(3, 5, 3, 77);
    REQUIRE(a.num_clauses() == b.num_clauses());
    for (std::size_t j = 0; j < a.clauses.size(); ++j)
      CHECK(a.clauses[j].canonical_key() == b.clauses[j].canonical_key());
  }
  SECTION("clauses have k distinct variables") {
    const Cnf f = random_ksat(10, 43, 3, 42);
    REQUIRE(f.num_clauses() == 43);
    for (const Clause& c : f.clauses) {
      REQUIRE(c.size() == 3);
      CHECK_FALSE(c.tautological());
      CHECK((c.lits[0].var != c.lits[1].var && c.lits[1].var != c.lits[2].var &&
             c.lits[0].var != c.lits[2].var));
    }
    f.validate();
  }
  CHECK_THROWS_AS(random_ksat(2, 1, 3, 0), std::invalid_argument);
}
