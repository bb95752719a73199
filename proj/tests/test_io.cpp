#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "quaderint/errors.hpp"
#include "quaderint/io.hpp"
#include "support.hpp"

using namespace quaderint;
using namespace qtest;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

bool mentions(const std::exception& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("scalar grammar: fractions, decimals, complex pairs") {
    CHECK(parse_value("7/3") == StepValue(rat(7, 3)));
    CHECK(parse_value("-2") == StepValue(rat(-2)));
    CHECK(parse_value("0.25") == StepValue(rat(1, 4)));
    CHECK(parse_value("-1.5") == StepValue(rat(-3, 2)));
    CHECK(parse_value("2/4") == StepValue(rat(1, 2)));
    CHECK(parse_value("  10/4  # half of five\n") == StepValue(rat(5, 2)));
    CHECK(parse_value("+3/9") == StepValue(rat(1, 3)));
    CHECK(parse_value("(0, 1)") == StepValue(rat(0), rat(1)));
    CHECK(parse_value("( -1/2 ,2.5 )") == StepValue(rat(-1, 2), rat(5, 2)));

    CHECK_THROWS_AS(parse_value("1/0"), ParseError);
    CHECK_THROWS_AS(parse_value("abc"), ParseError);
    CHECK_THROWS_AS(parse_value("1.5x"), ParseError);
    CHECK_THROWS_AS(parse_value(""), ParseError);
    CHECK_THROWS_AS(parse_value("1 2"), ParseError);
    CHECK_THROWS_AS(parse_value("(1, 2"), ParseError);
    CHECK_THROWS_AS(parse_value("(1; 2)"), ParseError);

    CHECK(format_value(StepValue(rat(3))) == "3");
    CHECK(format_value(StepValue(rat(5, 2))) == "5/2");
    CHECK(format_value(StepValue(rat(0), rat(-1))) == "(0, -1)");
    CHECK(parse_value(format_value(StepValue(rat(2, 7), rat(-5, 3)))) ==
          StepValue(rat(2, 7), rat(-5, 3)));
}

TEST_CASE("interval round trips cover every endpoint shape") {
    const std::vector<Interval> cases = {
        Interval::closed(rat(0), rat(1)),
        Interval::open(rat(0), rat(1)),
        Interval::make(Endpoint::finite(rat(1, 3), true), Endpoint::finite(rat(2, 3), false)),
        Interval::make(Endpoint::finite(rat(-5, 4), false), Endpoint::finite(rat(7), true)),
        Interval::make(Endpoint::neg_inf(), Endpoint::finite(rat(5), true)),
        Interval::make(Endpoint::finite(rat(-2), true), Endpoint::pos_inf()),
        Interval::make(Endpoint::neg_inf(), Endpoint::pos_inf()),
        Interval::point(rat(9, 8)),
        Interval::empty(),
    };
    for (const Interval& iv : cases) {
        CAPTURE(format_interval(iv));
        CHECK(parse_interval(format_interval(iv)) == iv);
    }

    // crossed finite bounds canonicalize to the empty interval
    CHECK(parse_interval("[2, 1]") == Interval::empty());
    CHECK(parse_interval("]0, 0[") == Interval::empty());
    CHECK(format_interval(Interval::empty()) == "empty");

    CHECK_THROWS_AS(parse_interval("[-inf, 0]"), ParseError);
    CHECK_THROWS_AS(parse_interval("]0, inf]"), ParseError);
    CHECK_THROWS_AS(parse_interval("[inf, 0]"), ParseError);
    CHECK_THROWS_AS(parse_interval("[0 1]"), ParseError);
    CHECK_THROWS_AS(parse_interval("[0, 1"), ParseError);
}

TEST_CASE("quader parsing: factors, canonical empties, dimension form") {
    const Quader q = parse_quader("[0,1] x ]0,2[ x [3,3]");
    CHECK(q.dim() == 3);
    CHECK(q.factor(0) == Interval::closed(rat(0), rat(1)));
    CHECK(q.factor(1) == Interval::open(rat(0), rat(2)));
    CHECK(q.factor(2) == Interval::point(rat(3)));
    CHECK(parse_quader(format_quader(q)) == q);

    CHECK(parse_quader("empty(3)") == Quader::empty(3));
    CHECK(format_quader(Quader::empty(2)) == "empty(2)");

    // an empty factor collapses the whole quader to the canonical empty
    CHECK(parse_quader("[0,1] x empty") == Quader::empty(2));
    CHECK(parse_quader("empty x [0,1]") == Quader::empty(2));
    CHECK(parse_quader("[0,1] x [5,4]") == Quader::empty(2));

    const Quader unbounded = parse_quader("]-inf, 0] x [0, inf[");
    CHECK_FALSE(unbounded.is_bounded());
    CHECK(parse_quader(format_quader(unbounded)) == unbounded);

    CHECK_THROWS_AS(parse_quader("empty()"), ParseError);
    CHECK_THROWS_AS(parse_quader("[0,1] x"), ParseError);
    CHECK_THROWS_AS(parse_quader("box"), ParseError);
}

TEST_CASE("parkettable parsing drops empty pieces and validates disjointness") {
    const Parkettable p = parse_parkettable("[0,1[ x [0,1[ | [1,2] x [0,1[ | empty(2)");
    CHECK(p.pieces().size() == 2);
    CHECK(pk_set_equal(parse_parkettable(format_parkettable(p)), p));

    CHECK(pk_set_equal(parse_parkettable("empty(2)"), Parkettable(2)));
    CHECK(format_parkettable(Parkettable(1)) == "empty(1)");

    // overlapping pieces are well-formed text but violate the contract
    CHECK_THROWS_AS(parse_parkettable("[0,2] x [0,2] | [1,3] x [1,3]"), ContractError);
    // mixed dimensions likewise
    CHECK_THROWS_AS(parse_parkettable("[0,1] | [0,1] x [0,1]"), ContractError);
}

TEST_CASE("measure round trips for every kind") {
    const std::vector<BoxMeasure> cases = {
        BoxMeasure::volume(2),
        BoxMeasure::dirac({rat(1, 2), rat(-3)}),
        BoxMeasure::discrete({{rat(0)}, {rat(1, 2)}, {rat(1)}}, {rat(1, 4), rat(1, 2), rat(1, 4)}),
        BoxMeasure::stieltjes(StieltjesWeight::identity()),
        BoxMeasure::stieltjes(StieltjesWeight::heaviside(rat(1, 3))),
        BoxMeasure::stieltjes(StieltjesWeight({rat(0), rat(1)},
                                              {{rat(0), rat(0)}, {rat(0), rat(2)}, {rat(1), rat(1)}},
                                              {rat(0), rat(2)})),
        BoxMeasure::product(BoxMeasure::volume(1), BoxMeasure::dirac({rat(0)})),
        BoxMeasure::product(BoxMeasure::product(BoxMeasure::volume(1), BoxMeasure::volume(1)),
                            BoxMeasure::volume(1)),
    };
    for (const BoxMeasure& m : cases) {
        const std::string doc = "measure " + format_measure(m);
        CAPTURE(doc);
        const BoxMeasure back = parse_measure(doc);
        CHECK(back == m);
    }

    CHECK_THROWS_AS(parse_measure("measure gaussian(0, 1)"), ParseError);
    CHECK_THROWS_AS(parse_measure("volume(1)"), ParseError);  // missing leading keyword
    // negative mass: parses fine, rejected by the factory
    CHECK_THROWS_AS(parse_measure("measure discrete((0): -1)"), ContractError);
    // monotonicity violation in a stieltjes weight
    CHECK_THROWS_AS(
        parse_measure("measure stieltjes(breaks: 0; values: 0; pieces: (0, -1), (0, 1))"),
        ContractError);
}

TEST_CASE("stepfn document: multi-line, comments, complex weights") {
    const std::string doc =
        "# two bumps and a complex plateau\n"
        "stepfn\n"
        "ambient [0, 4] x [0, 2]\n"
        "term 3/2     on [0, 1[ x [0, 2]\n"
        "term (0, 2)  on [1, 2[ x [0, 1[\n"
        "term -1      on [2, 4] x [1, 2]\n";
    const StepFunction f = parse_stepfn(doc);
    CHECK(f.ambient() == parse_quader("[0,4] x [0,2]"));
    CHECK(f.terms().size() == 3);
    CHECK(f.evaluate({rat(1, 2), rat(1)}) == StepValue(rat(3, 2)));
    CHECK(f.evaluate({rat(3, 2), rat(1, 2)}) == StepValue(rat(0), rat(2)));
    CHECK(f.evaluate({rat(3), rat(2)}) == StepValue(rat(-1)));
    CHECK(f.evaluate({rat(3), rat(1, 2)}) == StepValue::zero());

    // term outside the ambient is a contract violation, not a parse error
    CHECK_THROWS_AS(parse_stepfn("stepfn ambient [0,1] term 1 on [0,2]"), ContractError);
    CHECK_THROWS_AS(parse_stepfn("stepfn ambient [0,1] bogus 1 on [0,1]"), ParseError);
    // zero-term function is legal
    CHECK(sf_equal(parse_stepfn("stepfn ambient [0,1]"), StepFunction::zero(parse_quader("[0,1]"))));
}

TEST_CASE("oracle document: poly, polyprod, indicator, optional domain") {
    const OracleDoc sq = parse_oracle("oracle poly(0, 0, 1) domain [0, 1]");
    CHECK(sq.kind == "poly");
    CHECK(sq.oracle.dim == 1);
    REQUIRE(sq.domain.has_value());
    CHECK(*sq.domain == parse_quader("[0,1]"));
    CHECK(sq.oracle.eval({rat(1, 2)}) == rat(1, 4));

    const OracleDoc prod = parse_oracle("oracle polyprod((0, 1), (1, 0, 1))");
    CHECK(prod.oracle.dim == 2);
    CHECK_FALSE(prod.domain.has_value());
    CHECK(prod.oracle.eval({rat(3), rat(2)}) == rat(15));  // 3 * (1+4)

    const OracleDoc ind = parse_oracle("oracle indicator([0, 1] x [0, 1])");
    CHECK(ind.oracle.dim == 2);
    CHECK(ind.oracle.eval({rat(1, 2), rat(1, 2)}) == rat(1));
    CHECK(ind.oracle.eval({rat(2), rat(0)}) == rat(0));

    CHECK_THROWS_AS(parse_oracle("oracle spline(1, 2)"), ParseError);
    CHECK_THROWS_AS(parse_oracle("oracle poly(1) domian [0,1]"), ParseError);
}

TEST_CASE("elements document: vectors and polynomials") {
    const std::vector<IPElement> els = parse_elements(
        "elements\n"
        "vec(1, (0, 1))\n"
        "vec((1, 0), 2/3)\n");
    REQUIRE(els.size() == 2);
    // <x, y> with conjugation in the second slot: 1*conj(1) + i*conj(2/3)
    CHECK(inner(els[0], els[1]) == StepValue(rat(1), rat(2, 3)));

    const std::vector<IPElement> polys = parse_elements("elements poly([-1, 1]; 0, 1)");
    REQUIRE(polys.size() == 1);
    CHECK(inner(polys[0], polys[0]) == StepValue(rat(2, 3)));  // ∫ t² over [-1,1]

    CHECK_THROWS_AS(parse_elements("elements"), ParseError);
    CHECK_THROWS_AS(parse_elements("elements poly(]-inf, 1]; 1)"), ParseError);
    CHECK_THROWS_AS(parse_elements("elements poly(]0, 1[; 1)"), ParseError);
    CHECK_THROWS_AS(parse_elements("elements step(1)"), ParseError);
}

TEST_CASE("contraction document: affine and cos") {
    const ContractionSpec aff = parse_contraction(
        "contraction affine\n"
        "matrix 2\n"
        "0.25 0.25\n"
        "0    0.5\n"
        "offset 1 2\n"
        "start 0 0\n");
    CHECK(aff.factor == doctest::Approx(0.5).epsilon(1e-15));
    const std::vector<double> y = aff.map({4.0, 2.0});
    CHECK(y[0] == doctest::Approx(2.5));
    CHECK(y[1] == doctest::Approx(3.0));
    CHECK(aff.start == std::vector<double>{0.0, 0.0});

    const ContractionSpec cosc = parse_contraction("contraction cos start 0.5");
    CHECK(cosc.factor == doctest::Approx(std::sin(1.0)));
    CHECK(cosc.map({0.0})[0] == doctest::Approx(1.0));

    // expansive affine map: parses, factory rejects
    CHECK_THROWS_AS(
        parse_contraction("contraction affine matrix 1 2 offset 0 start 0"), ContractError);
    CHECK_THROWS_AS(parse_contraction("contraction cos start 1.5"), ContractError);
    CHECK_THROWS_AS(parse_contraction("contraction spiral start 0"), ParseError);
    CHECK_THROWS_AS(parse_contraction("contraction affine matrix 2 1 0 0"), ParseError);
}

TEST_CASE("matrix, halfspaces, and points documents") {
    const Matrix m = parse_matrix("matrix 2  0.5 1  0 0.5");
    CHECK(m.at(0, 1) == 1.0);
    CHECK(matrix_norm(m, OpNorm::Inf) == 1.5);
    CHECK_THROWS_AS(parse_matrix("matrix 0"), ParseError);
    CHECK_THROWS_AS(parse_matrix("matrix 2 1 2 3"), ParseError);

    const Halfspaces hs = parse_halfspaces(
        "halfspaces 2\n"
        "row -1 0 bound 1\n"
        "row 0 -1 bound 1\n"
        "row 1 1 bound 1\n");
    CHECK(minkowski_gauge(hs, {0.5, 0.5}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(parse_halfspaces("halfspaces 2 row 1 0 bound -1"), ContractError);
    CHECK_THROWS_AS(parse_halfspaces("halfspaces 2 line 1 0 bound 1"), ParseError);

    const auto pts = parse_points("points 2  0 0  1.5 -2  3 4");
    REQUIRE(pts.size() == 3);
    CHECK(pts[1] == std::vector<double>{1.5, -2.0});
    CHECK(parse_points("points 3").empty());
    CHECK_THROWS_AS(parse_points("points 2 1 2 3"), ParseError);  // dangling coordinate
    CHECK_THROWS_AS(parse_points("points 2 1 nan"), ParseError);
}

TEST_CASE("region document: open, closed, and svc shorthand") {
    const RegionDoc r = parse_region(
        "region\n"
        "open ]0, 1[ x ]0, 1[ | ]2, 3[ x ]0, 1[\n"
        "closed [0, 1] x [0, 1] | [2, 3] x [0, 1]\n");
    CHECK(r.open.size() == 2);
    REQUIRE(r.closed.has_value());
    CHECK(r.closed->pieces().size() == 2);

    const RegionDoc svc = parse_region("region svc 3");
    REQUIRE(svc.closed.has_value());
    CHECK(pk_set_equal(*svc.closed, svc_stage(3)));
    CHECK(svc.open.size() == svc.closed->pieces().size());
    for (std::size_t i = 0; i < svc.open.size(); ++i) {
        CHECK(svc.open[i].closure() == svc.closed->pieces()[i]);
    }

    CHECK(parse_region("region").open.empty());
    CHECK_THROWS_AS(parse_region("region interior [0,1]"), ParseError);
}

TEST_CASE("parse errors carry line and column positions") {
    try {
        parse_stepfn("stepfn\nambient [0, 1]\nterm 1 oops [0, 1]\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(mentions(e, "line 3"));
        CHECK(mentions(e, "'on'"));
    }
    try {
        parse_quader("[0, 1] x [2, )");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(mentions(e, "line 1"));
        CHECK(mentions(e, "column 14"));
    }
    try {
        parse_matrix("matrix 2\n1 2\n3 fast\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(mentions(e, "line 3"));
        CHECK(mentions(e, "fast"));
    }
}

TEST_CASE("random geometry round trips") {
    Rng rng(20260815);
    for (int trial = 0; trial < 200; ++trial) {
        const Interval iv = random_bounded_interval(rng);
        CHECK(parse_interval(format_interval(iv)) == iv);
        const std::size_t n = 1 + rng.next(3);
        const Quader q = random_bounded_quader(rng, n);
        CHECK(parse_quader(format_quader(q)) == q);
        const Parkettable p = random_parkettable(rng, n, 3);
        CHECK(pk_set_equal(parse_parkettable(format_parkettable(p)), p));
    }
}
