#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "quaderint/stepfn.hpp"

namespace quaderint {

// Interval-extension oracle for a bounded function: exact-point evaluation
// plus certified bounds over closed bounded quaders. Bounds must satisfy
// lower <= inf f(Q) and sup f(Q) <= upper, nest under refinement, and shrink
// to the value as Q shrinks; eval(x) always lies inside bounds_on(Q) for
// x in Q. Cell infima/suprema are never sampled.
struct BoundedOracle {
    std::size_t dim = 1;
    std::function<double(const std::vector<Rational>&)> eval;
    std::function<std::pair<double, double>(const Quader&)> bounds_on;
};

// Univariate polynomial sum c[i] t^i. Bounds come from a monotonicity
// decomposition: the derivative's real roots are enclosed by exact rational
// bisection (width 2^-80), and cell bounds are min/max over endpoint values
// and the enclosed critical values with a safe slope penalty. Rational
// critical points are hit exactly.
BoundedOracle oracle_poly(std::vector<Rational> coeffs);
// Separable product f(x) = prod_i p_i(x_i); bounds by interval products.
BoundedOracle oracle_poly_product(std::vector<std::vector<Rational>> axis_coeffs);
// Indicator of a quader; bounds are exact (0/0, 1/1, or 0/1).
BoundedOracle oracle_indicator(Quader q);
// f monotone on each closed piece cut at the given breakpoints (univariate).
BoundedOracle oracle_piecewise_monotone(std::function<double(double)> f,
                                        std::vector<Rational> breaks);

struct Bracket {
    int depth = 0;
    double lower = 0, upper = 0;
};

// Volume-weighted Darboux bracket over the dyadic partition of a closed
// bounded nondegenerate quader: per axis 2^depth equal cells, the first
// closed, the rest left-open; bounds are taken over the closed cells.
Bracket riemann_bracket(const BoundedOracle& f, const Quader& domain, int depth);
// The bracketing step functions (lower, upper) on the same partition.
std::pair<StepFunction, StepFunction> bracket_steps(const BoundedOracle& f, const Quader& domain,
                                                    int depth);

struct Approximation {
    double value = 0, halfwidth = 0;
};

// Measure-weighted bracket midpoint; halfwidth is half the bracket gap.
Approximation integrate_continuous(const BoundedOracle& f, const Quader& domain,
                                   const BoxMeasure& m, int depth);
// Exact weighted point sum for a discrete measure; the caller's tail bound is
// passed through as the halfwidth.
Approximation integrate_discrete(const BoundedOracle& f, const BoxMeasure& discrete,
                                 double tail_bound = 0.0);
// Integral over [a, b] against a piecewise affine weight: slope-weighted
// continuous parts plus jump contributions at breakpoints inside [a, b]
// (closed interval, so endpoint jumps count fully).
Approximation stieltjes_integral(const BoundedOracle& f, const StieltjesWeight& g,
                                 const Rational& a, const Rational& b, int depth);

// Step approximation of f on a parkettable: absolute half-open dyadic cells
// of edge 2^-depth anchored at the bounding box corner; one sample per cell,
// taken at the componentwise infimum of the closure of (cell ∩ first piece
// met); terms are the cells clipped to the parkettable.
StepFunction fine_step(const BoundedOracle& f, const Parkettable& m_dom, int depth);

// Iterated integral of a step function on a product: inner over the trailing
// m2-block, then outer over m1.
StepValue fubini_step(const StepFunction& t, const BoxMeasure& m1, const BoxMeasure& m2);
// Moves the leading block of n1 coordinates behind the rest.
StepFunction sf_swap_blocks(const StepFunction& t, std::size_t n1);

// Jordan content approximations on the absolute closed grid of edge 2^-depth
// anchored at integer multiples: cells fully inside the open union (inner)
// resp. cells meeting the closed set (outer).
Rational jordan_inner(const std::vector<Quader>& open_quaders, int depth, const BoxMeasure& m);
Rational jordan_outer(const Parkettable& closed_set, int depth, const BoxMeasure& m);

bool nullset_check(const Parkettable& p, const BoxMeasure& m);

// Fat Cantor set on [0,1]: stage i removes a centered open interval of length
// 4^-i from each remaining piece. Stage must be between 0 and 14.
Parkettable svc_stage(int stage);

}  // namespace quaderint
