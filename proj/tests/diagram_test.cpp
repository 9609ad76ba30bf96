#include <doctest.h>

#include <array>
#include <random>
#include <sstream>

#include "gaussknot/diagram.hpp"
#include "oracles.hpp"
#include "samples.hpp"

using namespace gaussknot;

TEST_CASE("parse: empty input is the empty diagram") {
  const GaussDiagram d = parse("");
  CHECK(d.size() == 0);
  CHECK(d.num_positions() == 0);
}

TEST_CASE("parse: trefoil chords") {
  const GaussDiagram d = parse(samples::kTrefoil);
  REQUIRE(d.size() == 3);
  const Chord& c1 = d.chord(1);
  const Chord& c2 = d.chord(2);
  const Chord& c3 = d.chord(3);
  CHECK(c1.tail == 0);
  CHECK(c1.head == 3);
  CHECK(c2.tail == 4);
  CHECK(c2.head == 1);
  CHECK(c3.tail == 2);
  CHECK(c3.head == 5);
  for (const Chord& c : d.chords()) CHECK(c.sign == Sign::positive);
}

TEST_CASE("parse: labels renumbered by first appearance") {
  const GaussDiagram d = parse("U7-O12+O7-U12+");
  CHECK(d.chord(1).head == 0);
  CHECK(d.chord(1).sign == Sign::negative);
  CHECK(d.chord(2).tail == 1);
  CHECK(serialize(d) == "U1-O2+O1-U2+");
}

TEST_CASE("parse: separators") {
  CHECK(parse("O1+ U1+") == parse("O1+U1+"));
  CHECK(parse("O1+,U2-,O2-,U1+") == parse("O1+U2-O2-U1+"));
  CHECK_THROWS_AS(parse("O1+  U1+"), ParseError);
  CHECK_THROWS_AS(parse(" O1+U1+"), ParseError);
  CHECK_THROWS_AS(parse("O1+U1+,"), ParseError);
}

TEST_CASE("parse: errors") {
  SUBCASE("sign mismatch") {
    try {
      parse("O1+U1-");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("sign mismatch for chord 1") != std::string::npos);
    }
  }
  SUBCASE("unpaired label") {
    try {
      parse("O1+");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("unpaired label 1") != std::string::npos);
    }
  }
  SUBCASE("bad tokens") {
    CHECK_THROWS_AS(parse("X1+U1+"), ParseError);
    CHECK_THROWS_AS(parse("O0+U0+"), ParseError);
    CHECK_THROWS_AS(parse("O01+U01+"), ParseError);
    CHECK_THROWS_AS(parse("O1U1"), ParseError);
    CHECK_THROWS_AS(parse("o1+u1+"), ParseError);
  }
  SUBCASE("label used twice with the same kind") {
    CHECK_THROWS_AS(parse("O1+O1+"), ParseError);
    CHECK_THROWS_AS(parse("O1+U1+U1+"), ParseError);
  }
}

TEST_CASE("serialize") {
  CHECK(serialize(GaussDiagram{}) == "");
  const GaussDiagram kink = GaussDiagram::from_chords({Chord{1, 0, 1, Sign::positive}});
  CHECK(serialize(kink) == "O1+U1+");
  CHECK(serialize(parse(samples::kTrefoil)) == samples::kTrefoil);
}

TEST_CASE("from_chords validation") {
  CHECK_THROWS_AS(GaussDiagram::from_chords({Chord{1, 0, 0, Sign::positive}}), std::invalid_argument);
  CHECK_THROWS_AS(GaussDiagram::from_chords({Chord{1, 0, 2, Sign::positive}}), std::invalid_argument);
  CHECK_THROWS_AS(GaussDiagram::from_chords({Chord{1, 0, 1, Sign::positive}, Chord{1, 2, 3, Sign::positive}}),
                  std::invalid_argument);
}

TEST_CASE("round trip over random diagrams") {
  for (const GaussDiagram& d : samples::random(11, 0, 12, 200)) {
    const GaussDiagram back = parse(serialize(d));
    CHECK(back == d);
    CHECK(serialize(back) == serialize(d));
  }
}

TEST_CASE("interlacement") {
  const GaussDiagram crossing = GaussDiagram::from_chords({{1, 0, 2, Sign::positive}, {2, 1, 3, Sign::positive}});
  CHECK(interlacement(crossing).get(0, 1));
  const GaussDiagram apart = GaussDiagram::from_chords({{1, 0, 1, Sign::positive}, {2, 2, 3, Sign::positive}});
  CHECK_FALSE(interlacement(apart).get(0, 1));

  const InterlacementMatrix t = interlacement(parse(samples::kTrefoil));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(t.get(a, b) == (a != b));
}

TEST_CASE("interlacement: symmetric, zero diagonal, matches alternation oracle") {
  for (const GaussDiagram& d : samples::random(12, 0, 10, 100)) {
    const InterlacementMatrix m = interlacement(d);
    for (std::size_t a = 0; a < d.size(); ++a) {
      CHECK_FALSE(m.get(a, a));
      for (std::size_t b = 0; b < d.size(); ++b) {
        CHECK(m.get(a, b) == m.get(b, a));
        if (a != b) CHECK(m.get(a, b) == oracle::interlaced(d, d.chords()[a].id, d.chords()[b].id));
      }
    }
  }
}

TEST_CASE("GF(2) rank") {
  CHECK(InterlacementMatrix(0).rank() == 0);
  CHECK(interlacement(parse(samples::kTrefoil)).rank() == 2);
  InterlacementMatrix wide(70);
  wide.set(0, 69, true);
  wide.set(69, 0, true);
  wide.set(3, 68, true);
  wide.set(68, 3, true);
  CHECK(wide.rank() == 4);
  CHECK(wide.row_weight(0) == 1);
}

TEST_CASE("delete_chords") {
  const GaussDiagram t = parse(samples::kTrefoil);
  CHECK(delete_chords(t, std::span<const int>{}) == t);

  const std::array<int, 1> one{1};
  const GaussDiagram minus = delete_chords(t, one);
  REQUIRE(minus.size() == 2);
  CHECK(minus.chord(2).tail == 2);
  CHECK(minus.chord(2).head == 0);
  CHECK(minus.chord(3).tail == 1);
  CHECK(minus.chord(3).head == 3);
  CHECK(interlacement(minus).get(0, 1));

  const std::array<int, 3> all{1, 2, 3};
  CHECK(delete_chords(t, all).empty());

  const std::array<int, 1> bogus{9};
  CHECK_THROWS_AS(delete_chords(t, bogus), UnknownChord);
}

TEST_CASE("delete_chords composes over disjoint sets") {
  std::mt19937_64 rng(5);
  for (const GaussDiagram& d : samples::random(13, 2, 9, 100)) {
    std::vector<int> a, b, both;
    for (const Chord& c : d.chords()) {
      const auto r = rng() % 3;
      if (r == 0) a.push_back(c.id);
      if (r == 1) b.push_back(c.id);
      if (r != 2) both.push_back(c.id);
    }
    CHECK(delete_chords(d, both) == delete_chords(delete_chords(d, a), b));
  }
}

TEST_CASE("canonical_form") {
  CHECK(canonical_form(GaussDiagram{}) == "");
  CHECK(canonical_form(parse("U1+O1+")) == canonical_form(parse("O1+U1+")));
  CHECK(canonical_form(parse("U1+O1+")) == "O1+U1+");
  const GaussDiagram t = parse(samples::kTrefoil);
  const std::string c = canonical_form(t);
  for (int r = 0; r < 6; ++r) CHECK(canonical_form(t.rotated(r)) == c);
}

TEST_CASE("canonical_form is the least rotation and rotation invariant") {
  std::mt19937_64 rng(17);
  for (const GaussDiagram& d : samples::random(14, 1, 11, 60)) {
    std::string least;
    for (int r = 0; r < d.num_positions(); ++r) {
      const std::string s = serialize(d.rotated(r));
      if (r == 0 || s < least) least = s;
    }
    CHECK(canonical_form(d) == least);
    const int r = static_cast<int>(rng() % static_cast<std::uint64_t>(d.num_positions()));
    CHECK(canonical_form(d.rotated(r)) == least);
    // canonical forms re-parse to a diagram with the same form
    CHECK(canonical_form(parse(least)) == least);
  }
}

TEST_CASE("equality ignores ids") {
  const GaussDiagram a = GaussDiagram::from_chords({{5, 0, 1, Sign::negative}});
  const GaussDiagram b = GaussDiagram::from_chords({{9, 0, 1, Sign::negative}});
  CHECK(a == b);
  CHECK_FALSE(a == GaussDiagram::from_chords({{5, 1, 0, Sign::negative}}));
}

TEST_CASE("read_corpus") {
  std::istringstream in("# comment\nkink\tO1+U1+\r\n\nunknot\t\ntrefoil\tO1+U2+O3+U1+O2+U3+\n");
  const auto entries = read_corpus(in);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "kink");
  CHECK(entries[1].diagram.empty());
  CHECK(entries[2].line == 5);

  std::istringstream bad("a\tO1+U1+\nb\tO1+\n");
  try {
    read_corpus(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream notab("kink O1+U1+\n");
  CHECK_THROWS_AS(read_corpus(notab), ParseError);
}
