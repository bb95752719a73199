#pragma once

#include <vector>

#include "quaderint/integrate.hpp"
#include "quaderint/stepfn.hpp"

namespace quaderint {

// Exponent for Lp seminorms: a positive rational or infinity.
class PExponent {
public:
    static PExponent finite(Rational p);
    static PExponent infinity();

    bool is_finite() const { return finite_; }
    const Rational& value() const;  // throws unless finite

private:
    bool finite_ = true;
    Rational p_{1};
};

// Sum of |value|^p * measure over the terms, tagged by exactness: exact
// rational when p is a positive integer, float otherwise.
struct PowSum {
    bool exact = false;
    Rational exact_value;  // meaningful only when exact
    double value = 0;
};

// Requires a real-valued step function and p > 0.
PowSum lp_pow_sum(const StepFunction& t, const Rational& p, const BoxMeasure& m);

// p-th root of the pow sum (complex moduli in float); for p = infinity the
// essential supremum: max |value| over terms whose quader is not an m-nullset.
double lp_norm(const StepFunction& t, const PExponent& p, const BoxMeasure& m);

struct IneqResult {
    double lhs = 0, rhs = 0, slack = 0;
};

// Hoelder: ||f g||_1 <= ||f||_p ||g||_q for conjugate exponents in [1, inf],
// 1/p + 1/q = 1 with 1/inf read as 0. slack = rhs - lhs.
IneqResult check_hoelder(const StepFunction& f, const StepFunction& g, const PExponent& p,
                         const PExponent& q, const BoxMeasure& m);
// Minkowski: ||f + g||_p <= ||f||_p + ||g||_p for p in [1, inf].
IneqResult check_minkowski(const StepFunction& f, const StepFunction& g, const PExponent& p,
                           const BoxMeasure& m);
// Jensen on finite sequences, 0 < p <= p_tilde (p_tilde may be infinity):
// l^{p_tilde} norm <= l^p norm. slack = rhs - lhs.
IneqResult check_jensen(const std::vector<double>& xs, const Rational& p,
                        const PExponent& p_tilde);
// Clarkson: for p >= 2 the p-exponent form
//   ||f+g||_p^p + ||f-g||_p^p <= 2^{p-1} (||f||_p^p + ||g||_p^p),
// for 1 < p < 2 the q-exponent form with q = p/(p-1)
//   ||f+g||_p^q + ||f-g||_p^q <= 2 (||f||_p^p + ||g||_p^p)^{q-1}.
IneqResult check_clarkson(const StepFunction& f, const StepFunction& g, const Rational& p,
                          const BoxMeasure& m);
// Reverse Minkowski for 0 < p < 1 and nonnegative real f, g:
// ||f + g||_p >= ||f||_p + ||g||_p. slack = lhs - rhs.
IneqResult check_reverse_minkowski(const StepFunction& f, const StepFunction& g, const Rational& p,
                                   const BoxMeasure& m);
// Quasi-triangle for 0 < p < 1: ||f + g||_p <= 2^{1/p - 1} (||f||_p + ||g||_p).
IneqResult check_quasi_triangle(const StepFunction& f, const StepFunction& g, const Rational& p,
                                const BoxMeasure& m);

}  // namespace quaderint
