#include "doctest.h"
#include "zagier/cli/parser.hpp"
#include "zagier/errors.hpp"

using namespace zagier;

TEST_CASE("points") {
  CHECK(parse_point("inf").is_infinity());
  CHECK(parse_point("0") == PPoint(0));
  CHECK(parse_point("-3/7") == PPoint(FieldExpr(BigRational(-3, 7))));
  const FieldExpr x = FieldExpr::variable("x"), y = FieldExpr::variable("y");
  CHECK(parse_point("1/x") == PPoint(x.inverse()));
  CHECK(parse_point("2*x - (y + 1)/3") ==
        PPoint(x * BigRational(2) - (y + FieldExpr(BigRational(1))) / FieldExpr(BigRational(3))));
  CHECK(parse_point(" - x ") == PPoint(-x));
  const PPoint A = PPoint::variable("A"), B = PPoint::variable("B"), C = PPoint::variable("C"),
               D = PPoint::variable("D");
  CHECK(parse_point("cr(A, B, C, D)") == PPoint(cross_ratio(A, B, C, D)));
  CHECK(parse_point("1 - cr(A,B,C,D)") == PPoint(one_minus(cross_ratio(A, B, C, D))));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_point(""), ParseError);
  CHECK_THROWS_AS(parse_point("x +"), ParseError);
  CHECK_THROWS_AS(parse_point("(x"), ParseError);
  CHECK_THROWS_AS(parse_point("inf + 1"), ParseError);
  CHECK_THROWS_AS(parse_point("cr(A,B,C)"), ParseError);
  CHECK_THROWS_AS(parse_point("x $ y"), ParseError);
  CHECK_THROWS_AS(parse_point("1/0"), DegenerateArgument);
  CHECK_THROWS_AS(parse_point("1/(x - x)"), DegenerateArgument);
  CHECK_THROWS_AS(parse_iterm("I(0; 1; )"), ParseError);
  CHECK_THROWS_AS(parse_iterm("I(0, 1, 2)"), ParseError);
  CHECK_THROWS_AS(parse_iterm("J(0;1;2)"), ParseError);
  try {
    parse_point("x + * y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("iterms") {
  const ITerm t = parse_iterm("I(0; 1/x, 0; 1)");
  CHECK(t.weight() == 2);
  CHECK(t.a0 == PPoint(0));
  CHECK(t.end == PPoint(1));
  CHECK(t.word[1] == PPoint(0));
  const ITerm u = parse_iterm("I(a;;b)");
  CHECK(u.weight() == 0);
  const ITerm w = parse_iterm("I(A; B, C, inf, E; F)");
  CHECK(w.weight() == 4);
  CHECK(w.word[2].is_infinity());
  CHECK(parse_iterm(t.str()) == t);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("0.3") == std::complex<double>(0.3, 0));
  CHECK(parse_complex("0.3+0.2i") == std::complex<double>(0.3, 0.2));
  CHECK(parse_complex("0.3 - 0.2i") == std::complex<double>(0.3, -0.2));
  CHECK(parse_complex("2i") == std::complex<double>(0, 2));
  CHECK(parse_complex("i") == std::complex<double>(0, 1));
  CHECK(parse_complex("-i") == std::complex<double>(0, -1));
  CHECK(parse_complex("1e-3-2e-2i") == std::complex<double>(1e-3, -2e-2));
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex(""), ParseError);
}
