#include "quaderint/integrate.hpp"

#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace quaderint;
using namespace qtest;

namespace {

Rational rat(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

Quader box1(const Rational& a, const Rational& b) { return Quader({Interval::closed(a, b)}); }

// Exact Darboux sums of t^2 over the depth-k dyadic partition of [0,1]:
// lower = sum i^2 / 2^{3k}, upper shifts the index by one.
std::pair<Rational, Rational> darboux_t2(int depth) {
    Integer n = Integer(1) << depth;
    Integer lower = (n - 1) * n * (2 * n - 1) / 6;
    Integer upper = n * (n + 1) * (2 * n + 1) / 6;
    Rational scale = pow2(-3 * depth);
    return {Rational(lower) * scale, Rational(upper) * scale};
}

}  // namespace

TEST_CASE("polynomial oracle produces exact bounds at rational critical points") {
    // p(t) = (t - 1/2)^2 has its only critical point at 1/2
    BoundedOracle f = oracle_poly({rat(1, 4), rat(-1), rat(1)});
    auto [lo, hi] = f.bounds_on(box1(rat(0), rat(1)));
    CHECK(lo == 0.0);
    CHECK(hi == 0.25);
    auto [lo2, hi2] = f.bounds_on(box1(rat(1, 2), rat(1, 2)));
    CHECK(lo2 == 0.0);
    CHECK(hi2 == 0.0);
    auto [lo3, hi3] = f.bounds_on(box1(rat(3, 4), rat(2)));
    CHECK(lo3 == doctest::Approx(1.0 / 16).epsilon(1e-15));
    CHECK(hi3 == doctest::Approx(9.0 / 4).epsilon(1e-15));
    CHECK(f.eval({rat(1, 2)}) == 0.0);
}

TEST_CASE("polynomial oracle bounds are safe and nested for irrational critical points") {
    // p(t) = t^3 - 2t, critical points at +-sqrt(2/3)
    BoundedOracle f = oracle_poly({rat(0), rat(-2), rat(0), rat(1)});
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = random_rational(rng, 12, 6), b = random_rational(rng, 12, 6);
        if (b < a) std::swap(a, b);
        Quader cell = box1(a, b);
        auto [lo, hi] = f.bounds_on(cell);
        CHECK(lo <= hi);
        // every sampled value stays inside the certified bounds
        for (int s = 0; s <= 4; ++s) {
            Rational x = a + (b - a) * rat(s, 4);
            double v = f.eval({x});
            CHECK(lo <= v);
            CHECK(v <= hi);
        }
        if (a < b) {
            // halving the cell must tighten (or keep) the bounds
            Rational mid = (a + b) / 2;
            for (const Quader& half : {box1(a, mid), box1(mid, b)}) {
                auto [hlo, hhi] = f.bounds_on(half);
                CHECK(lo <= hlo);
                CHECK(hhi <= hi);
            }
        }
    }
}

TEST_CASE("product oracle bounds cover all sign combinations") {
    BoundedOracle f = oracle_poly_product({{rat(0), rat(1)}, {rat(0), rat(1)}});  // f(x,y) = x*y
    Quader q({Interval::closed(rat(-1), rat(1)), Interval::closed(rat(-1), rat(1))});
    auto [lo, hi] = f.bounds_on(q);
    CHECK(lo == -1.0);
    CHECK(hi == 1.0);
    CHECK(f.eval({rat(-1, 2), rat(1, 2)}) == -0.25);
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Quader cell = random_nonempty_quader(rng, 2).closure();
        auto [l, h] = f.bounds_on(cell);
        for (int s = 0; s < 5; ++s) {
            std::vector<Rational> x;
            for (std::size_t a = 0; a < 2; ++a) {
                Rational lo_a = cell.factor(a).lower().value;
                Rational hi_a = cell.factor(a).upper().value;
                x.push_back(lo_a + (hi_a - lo_a) * rat(rng.next_int(0, 4), 4));
            }
            double v = f.eval(x);
            CHECK(l <= v);
            CHECK(v <= h);
        }
    }
}

TEST_CASE("riemann bracket of t^2 matches the exact dyadic Darboux sums") {
    BoundedOracle f = oracle_poly({rat(0), rat(0), rat(1)});
    Quader dom = box1(rat(0), rat(1));

    Bracket b2 = riemann_bracket(f, dom, 2);
    CHECK(b2.lower == 7.0 / 32);
    CHECK(b2.upper == 15.0 / 32);

    Bracket b12 = riemann_bracket(f, dom, 12);
    auto [exact_lo, exact_hi] = darboux_t2(12);
    CHECK(b12.lower == to_double(exact_lo));
    CHECK(b12.upper == to_double(exact_hi));
    CHECK(b12.upper - b12.lower == std::ldexp(1.0, -12));  // gap exactly 2^-12
    double mid = (b12.lower + b12.upper) / 2;
    CHECK(std::abs(mid - 1.0 / 3) <= std::ldexp(1.0, -12));

    // nesting across depths
    Bracket prev = riemann_bracket(f, dom, 0);
    for (int k = 1; k <= 8; ++k) {
        Bracket cur = riemann_bracket(f, dom, k);
        CHECK(prev.lower <= cur.lower);
        CHECK(cur.upper <= prev.upper);
        CHECK(cur.lower <= cur.upper);
        prev = cur;
    }
}

TEST_CASE("indicator bracket gap is exactly one cell") {
    BoundedOracle f = oracle_indicator(box1(rat(0), rat(1, 2)));
    Quader dom = box1(rat(0), rat(1));
    for (int k = 1; k <= 6; ++k) {
        Bracket b = riemann_bracket(f, dom, k);
        CHECK(b.lower == 0.5);
        CHECK(b.upper == 0.5 + std::ldexp(1.0, -k));
    }
}

TEST_CASE("constant oracle brackets are exact with zero gap") {
    BoundedOracle f = oracle_poly({rat(3)});
    Bracket b = riemann_bracket(f, box1(rat(-1), rat(3)), 3);
    CHECK(b.lower == 12.0);
    CHECK(b.upper == 12.0);
}

TEST_CASE("bracket step functions integrate back to the bracket and sandwich f") {
    BoundedOracle f = oracle_poly({rat(0), rat(0), rat(1)});
    Quader dom = box1(rat(0), rat(1));
    Bracket b = riemann_bracket(f, dom, 4);
    auto [lo_sf, hi_sf] = bracket_steps(f, dom, 4);
    CHECK(to_double(sf_integral(lo_sf, BoxMeasure::volume(1)).re) == b.lower);
    CHECK(to_double(sf_integral(hi_sf, BoxMeasure::volume(1)).re) == b.upper);
    CHECK(sf_equal(sf_sup(lo_sf, hi_sf), hi_sf));
    CHECK(sf_equal(sf_inf(lo_sf, hi_sf), lo_sf));
    for (int j = 0; j <= 32; ++j) {
        Rational t = rat(j, 32);
        Rational ft = t * t;
        CHECK(lo_sf.evaluate({t}).re <= ft);
        CHECK(ft <= hi_sf.evaluate({t}).re);
    }
}

TEST_CASE("riemann bracket rejects degenerate and mismatched input") {
    BoundedOracle f = oracle_poly({rat(1)});
    CHECK_THROWS_AS(riemann_bracket(f, box1(rat(1), rat(1)), 2), ContractError);
    CHECK_THROWS_AS(riemann_bracket(f, Quader::whole_space(1), 2), ContractError);
    Quader dom2({Interval::closed(rat(0), rat(1)), Interval::closed(rat(0), rat(1))});
    CHECK_THROWS_AS(riemann_bracket(f, dom2, 2), ContractError);
    CHECK_THROWS_AS(riemann_bracket(f, box1(rat(0), rat(1)), -1), ContractError);
}

TEST_CASE("integrate_continuous weights the bracket by the measure") {
    BoundedOracle t2 = oracle_poly({rat(0), rat(0), rat(1)});
    Quader dom = box1(rat(0), rat(1));

    Approximation a = integrate_continuous(t2, dom, BoxMeasure::volume(1), 12);
    CHECK(std::abs(a.value - 1.0 / 3) <= a.halfwidth);
    CHECK(a.halfwidth == std::ldexp(1.0, -13));

    // Dirac mass: only the cell containing the point contributes
    Approximation d = integrate_continuous(t2, box1(rat(-1), rat(1)), BoxMeasure::dirac({rat(0)}), 8);
    CHECK(std::abs(d.value - 0.0) <= d.halfwidth);
    CHECK(d.halfwidth <= 0.01);

    // constant integrand over dyadic data is exact
    Approximation c = integrate_continuous(oracle_poly({rat(3)}), dom, BoxMeasure::volume(1), 3);
    CHECK(c.value == 3.0);
    CHECK(c.halfwidth == 0.0);
}

TEST_CASE("integrate_discrete is an exact weighted point sum") {
    // masses 1 at p = 0..10, f(p) = 2^-p: geometric sum 2 - 2^-10
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> ms;
    for (long p = 0; p <= 10; ++p) {
        pts.push_back({rat(p)});
        ms.push_back(rat(1));
    }
    BoundedOracle f = oracle_piecewise_monotone([](double t) { return std::exp2(-t); }, {});
    Approximation a = integrate_discrete(f, BoxMeasure::discrete(pts, ms), std::ldexp(1.0, -10));
    CHECK(a.value == 2.0 - std::ldexp(1.0, -10));
    CHECK(a.halfwidth == std::ldexp(1.0, -10));

    BoundedOracle id = oracle_poly({rat(0), rat(1)});
    Approximation b =
        integrate_discrete(id, BoxMeasure::discrete({{rat(-1)}, {rat(3)}}, {rat(1, 2), rat(2)}));
    CHECK(b.value == 5.5);
    CHECK(b.halfwidth == 0.0);

    CHECK_THROWS_AS(integrate_discrete(id, BoxMeasure::volume(1)), ContractError);
}

TEST_CASE("stieltjes integral handles jumps, slopes, and the identity weight") {
    BoundedOracle t2 = oracle_poly({rat(0), rat(0), rat(1)});
    BoundedOracle id = oracle_poly({rat(0), rat(1)});
    BoundedOracle one = oracle_poly({rat(1)});

    // identity weight agrees with the volume integral exactly
    Approximation s = stieltjes_integral(t2, StieltjesWeight::identity(), rat(0), rat(1), 10);
    Approximation v = integrate_continuous(t2, box1(rat(0), rat(1)), BoxMeasure::volume(1), 10);
    CHECK(s.value == v.value);
    CHECK(s.halfwidth == v.halfwidth);

    // pure jump: Heaviside picks out f(0)
    BoundedOracle shifted = oracle_poly({rat(1, 16), rat(-1, 2), rat(1)});  // (t - 1/4)^2
    Approximation h = stieltjes_integral(shifted, StieltjesWeight::heaviside(rat(0)), rat(-1),
                                         rat(1), 4);
    CHECK(h.value == 0.0625);
    CHECK(h.halfwidth == 0.0);

    // slope 2 on [0,1]: 2 * integral of t
    StieltjesWeight ramp({rat(0), rat(1)},
                         {{rat(0), rat(0)}, {rat(0), rat(2)}, {rat(2), rat(0)}}, {rat(0), rat(2)});
    Approximation r = stieltjes_integral(id, ramp, rat(0), rat(1), 10);
    CHECK(std::abs(r.value - 1.0) <= r.halfwidth + 1e-12);

    // mixed weight: jumps at 0 and 1 plus slopes 1 and 2; f == 1 recovers the
    // measure of [-1,2], f == t the hand-computed value 3/2
    StieltjesWeight g({rat(0), rat(1)}, {{rat(0), rat(1)}, {rat(1), rat(2)}, {rat(4), rat(0)}},
                      {rat(1, 2), rat(3)});
    Approximation total = stieltjes_integral(one, g, rat(-1), rat(2), 6);
    CHECK(total.value == 5.0);
    CHECK(total.halfwidth == 0.0);
    Approximation lin = stieltjes_integral(id, g, rat(-1), rat(2), 10);
    CHECK(std::abs(lin.value - 1.5) <= lin.halfwidth + 1e-12);
    CHECK(lin.halfwidth <= 0.01);

    CHECK_THROWS_AS(stieltjes_integral(id, g, rat(1), rat(1), 4), ContractError);
}

TEST_CASE("fine_step is delta-fine, sandwiched by the bracket, and exact for constants") {
    // f(t) = t on [0,1], depth 3: Lipschitz constant 1 gives sup error <= 1/8
    BoundedOracle id = oracle_poly({rat(0), rat(1)});
    Parkettable unit = pk_from_quader(box1(rat(0), rat(1)));
    StepFunction t3 = fine_step(id, unit, 3);
    for (int j = 0; j <= 16; ++j) {
        Rational t = rat(j, 16);
        Rational diff = rat_abs(t3.evaluate({t}).re - t);
        CHECK(diff <= rat(1, 8));
    }

    // sandwich against the bracket at equal depth
    BoundedOracle t2 = oracle_poly({rat(0), rat(0), rat(1)});
    for (int k = 2; k <= 6; ++k) {
        Bracket b = riemann_bracket(t2, box1(rat(0), rat(1)), k);
        Rational integral = sf_integral(fine_step(t2, unit, k), BoxMeasure::volume(1)).re;
        CHECK(rational_from_double(b.lower) <= integral);
        CHECK(integral <= rational_from_double(b.upper));
    }

    // constants are reproduced exactly on multi-piece domains
    Parkettable two = pk_union(pk_from_quader(Quader({Interval::right_open(rat(0), rat(1))})),
                               pk_from_quader(box1(rat(2), rat(3))));
    BoundedOracle five = oracle_poly({rat(5)});
    StepFunction c = fine_step(five, two, 2);
    StepFunction expect = sf_scale(StepValue(rat(5)),
                                   sf_add(StepFunction::indicator(two.pieces()[0], c.ambient()),
                                          StepFunction::indicator(two.pieces()[1], c.ambient())));
    CHECK(sf_equal(c, expect));

    CHECK_THROWS_AS(fine_step(id, Parkettable(1), 3), ContractError);
}

TEST_CASE("fubini on fixed examples") {
    Quader amb = Quader::whole_space(2);
    StepFunction a = StepFunction::indicator(
        Quader({Interval::closed(rat(0), rat(1)), Interval::closed(rat(0), rat(2))}), amb);
    CHECK(fubini_step(a, BoxMeasure::volume(1), BoxMeasure::volume(1)) == StepValue(rat(2)));
    CHECK(fubini_step(sf_swap_blocks(a, 1), BoxMeasure::volume(1), BoxMeasure::volume(1)) ==
          StepValue(rat(2)));

    StepFunction b = StepFunction::indicator(
        Quader({Interval::closed(rat(-1), rat(1)), Interval::closed(rat(0), rat(3))}), amb);
    CHECK(fubini_step(b, BoxMeasure::dirac({rat(0)}), BoxMeasure::volume(1)) == StepValue(rat(3)));
}

TEST_CASE("fubini equals the direct product integral in both orders on random data") {
    Rng rng(99);
    std::vector<std::pair<BoxMeasure, BoxMeasure>> pairs;
    pairs.emplace_back(BoxMeasure::volume(1), BoxMeasure::volume(1));
    pairs.emplace_back(BoxMeasure::dirac({rat(0)}), BoxMeasure::volume(1));
    pairs.emplace_back(BoxMeasure::volume(1),
                       BoxMeasure::discrete({{rat(1, 2)}, {rat(3)}}, {rat(2), rat(1, 3)}));
    Quader amb = Quader::whole_space(2);
    for (int trial = 0; trial < 40; ++trial) {
        StepFunction t = StepFunction::zero(amb);
        int terms = static_cast<int>(rng.next(3)) + 1;
        for (int j = 0; j < terms; ++j) {
            StepValue v(random_rational(rng), random_rational(rng));
            t = sf_add(t, sf_scale(v, StepFunction::indicator(random_nonempty_quader(rng, 2), amb)));
        }
        for (const auto& [m1, m2] : pairs) {
            BoxMeasure prod = BoxMeasure::product(m1, m2);
            StepValue direct = sf_integral(t, prod);
            CHECK(fubini_step(t, m1, m2) == direct);
            CHECK(fubini_step(sf_swap_blocks(t, 1), m2, m1) == direct);
        }
    }
}

TEST_CASE("fubini splits higher-dimensional ambients") {
    Rng rng(3);
    Quader amb = Quader::whole_space(3);
    BoxMeasure m1 = BoxMeasure::product(BoxMeasure::volume(1), BoxMeasure::dirac({rat(1)}));
    BoxMeasure m2 = BoxMeasure::volume(1);
    for (int trial = 0; trial < 15; ++trial) {
        StepFunction t = StepFunction::zero(amb);
        for (int j = 0; j < 2; ++j)
            t = sf_add(t, sf_scale(StepValue(random_rational(rng)),
                                   StepFunction::indicator(random_nonempty_quader(rng, 3), amb)));
        StepValue direct = sf_integral(t, BoxMeasure::product(m1, m2));
        CHECK(fubini_step(t, m1, m2) == direct);
        CHECK(fubini_step(sf_swap_blocks(t, 2), m2, m1) == direct);
    }
    CHECK_THROWS_AS(fubini_step(StepFunction::zero(Quader::whole_space(3)), BoxMeasure::volume(1),
                                BoxMeasure::volume(1)),
                    ContractError);
}

TEST_CASE("jordan grid approximations hit the closed-form boundary corrections") {
    BoxMeasure vol = BoxMeasure::volume(1);
    for (int k = 2; k <= 6; ++k) {
        Rational h = pow2(-k);
        CHECK(jordan_inner({Quader({Interval::open(rat(0), rat(1))})}, k, vol) == 1 - 2 * h);
        CHECK(jordan_outer(pk_from_quader(box1(rat(0), rat(1))), k, vol) == 1 + 2 * h);
    }
    BoxMeasure vol2 = BoxMeasure::volume(2);
    for (int k = 2; k <= 4; ++k) {
        Rational h = pow2(-k);
        Quader open2({Interval::open(rat(0), rat(1)), Interval::open(rat(0), rat(1))});
        CHECK(jordan_inner({open2}, k, vol2) == (1 - 2 * h) * (1 - 2 * h));
        Quader closed2({Interval::closed(rat(0), rat(1)), Interval::closed(rat(0), rat(1))});
        CHECK(jordan_outer(pk_from_quader(closed2), k, vol2) == (1 + 2 * h) * (1 + 2 * h));
    }

    // overlapping open quaders cover ]0, 3/2[
    CHECK(jordan_inner({Quader({Interval::open(rat(0), rat(1))}),
                        Quader({Interval::open(rat(1, 2), rat(3, 2))})},
                       4, vol) == rat(3, 2) - 2 * pow2(-4));

    // non-dyadic endpoints
    CHECK(jordan_inner({Quader({Interval::open(rat(0), rat(1, 3))})}, 4, vol) == rat(1, 4));
    CHECK(jordan_outer(pk_from_quader(box1(rat(0), rat(1, 3))), 4, vol) == rat(7, 16));

    // monotone convergence and inner <= outer
    Rational prev_in(0), prev_out(100);
    for (int k = 1; k <= 7; ++k) {
        Rational in = jordan_inner({Quader({Interval::open(rat(-1, 3), rat(5, 7))})}, k, vol);
        Rational out = jordan_outer(pk_from_quader(box1(rat(-1, 3), rat(5, 7))), k, vol);
        CHECK(prev_in <= in);
        CHECK(out <= prev_out);
        CHECK(in <= out);
        prev_in = in;
        prev_out = out;
    }

    // point-mass measures see whether the kept cells capture the mass
    BoxMeasure d = BoxMeasure::dirac({rat(1, 2)});
    CHECK(jordan_inner({Quader({Interval::open(rat(0), rat(1))})}, 3, d) == 1);
    CHECK(jordan_outer(pk_from_quader(box1(rat(0), rat(1))), 3, d) == 1);

    CHECK_THROWS_AS(jordan_inner({Quader({Interval::open(rat(0), rat(1)).closure()})}, 3, vol),
                    ContractError);
    CHECK_THROWS_AS(jordan_inner({Quader::whole_space(1)}, 3, vol), ContractError);
    CHECK_THROWS_AS(jordan_outer(pk_from_quader(Quader({Interval::open(rat(0), rat(1))})), 3, vol),
                    ContractError);
}

TEST_CASE("smith-volterra-cantor stages have the exact closed-form measure") {
    BoxMeasure vol = BoxMeasure::volume(1);
    CHECK(pk_set_equal(svc_stage(0), pk_from_quader(box1(rat(0), rat(1)))));
    CHECK(pk_set_equal(svc_stage(1), pk_union(pk_from_quader(box1(rat(0), rat(3, 8))),
                                              pk_from_quader(box1(rat(5, 8), rat(1))))));
    Rational removed(0);
    for (int j = 0; j <= 9; ++j) {
        Parkettable s = svc_stage(j);
        CHECK(s.pieces().size() == std::size_t(1) << j);
        CHECK(vol.eval_parkettable(s) == 1 - removed);
        if (j < 9) {
            // next stage is contained in this one
            CHECK(pk_diff(svc_stage(j + 1), s).is_empty());
            removed += Rational(Integer(1) << j) * rat_pow(rat(1, 4), unsigned(j + 1));
        }
    }
    Rational stage8 = vol.eval_parkettable(svc_stage(8));
    CHECK(stage8 == rat(257, 512));  // 1/2 + 2^-9
    CHECK(rat_abs(stage8 - rat(1, 2)) <= pow2(-9));
    CHECK_FALSE(nullset_check(svc_stage(8), vol));
    CHECK_THROWS_AS(svc_stage(-1), ContractError);
    CHECK_THROWS_AS(svc_stage(15), ContractError);
}

TEST_CASE("nullset_check matches exact zero measure") {
    BoxMeasure vol2 = BoxMeasure::volume(2);
    Quader slab({Interval::closed(rat(0), rat(0)), Interval::closed(rat(0), rat(1))});
    CHECK(nullset_check(pk_from_quader(slab), vol2));
    CHECK_FALSE(nullset_check(pk_from_quader(box1(rat(0), rat(1))), BoxMeasure::volume(1)));
    BoxMeasure d0 = BoxMeasure::dirac({rat(0)});
    CHECK_FALSE(nullset_check(pk_from_quader(box1(rat(0), rat(0))), d0));
    CHECK(nullset_check(pk_from_quader(box1(rat(1), rat(1))), d0));
}
