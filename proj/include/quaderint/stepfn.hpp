#pragma once

#include <utility>
#include <vector>

#include "quaderint/measure.hpp"

namespace quaderint {

// Complex number with exact rational parts.
struct StepValue {
    Rational re{}, im{};

    StepValue() = default;
    StepValue(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
    StepValue(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    static StepValue zero() { return StepValue(); }
    static StepValue one() { return StepValue(Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    StepValue conj() const { return {re, -im}; }
    Rational abs2() const { return re * re + im * im; }

    bool operator==(const StepValue&) const = default;
    StepValue operator+(const StepValue& o) const { return {re + o.re, im + o.im}; }
    StepValue operator-(const StepValue& o) const { return {re - o.re, im - o.im}; }
    StepValue operator-() const { return {-re, -im}; }
    StepValue operator*(const StepValue& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
};

// Finite linear combination of indicators of disjoint bounded quaders inside a
// fixed ambient quader (possibly all of R^n). Zero-valued and empty terms are
// pruned on construction, so "no terms" means the zero function.
class StepFunction {
public:
    using Term = std::pair<Quader, StepValue>;

    StepFunction(Quader ambient, std::vector<Term> terms, bool verify = true);
    static StepFunction zero(Quader ambient) { return {std::move(ambient), {}}; }
    static StepFunction indicator(const Quader& q, Quader ambient);

    const Quader& ambient() const { return ambient_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_real() const;
    // x must lie in the ambient quader.
    StepValue evaluate(const std::vector<Rational>& x) const;

private:
    Quader ambient_;
    std::vector<Term> terms_;
};

StepFunction sf_add(const StepFunction& a, const StepFunction& b);
StepFunction sf_scale(const StepValue& lambda, const StepFunction& t);
StepFunction sf_mul(const StepFunction& a, const StepFunction& b);
// Pointwise max/min; both operands real-valued.
StepFunction sf_sup(const StepFunction& a, const StepFunction& b);
StepFunction sf_inf(const StepFunction& a, const StepFunction& b);
// Real-valued t only (complex moduli are not rational).
StepFunction sf_abs(const StepFunction& t);
StepFunction sf_pos_part(const StepFunction& t);
StepFunction sf_neg_part(const StepFunction& t);
StepFunction sf_conj(const StepFunction& t);

// psi given as an explicit finite value table; it must cover every value of t
// and map 0 to 0 (the complement of the terms keeps value 0).
StepFunction sf_compose(const std::vector<std::pair<StepValue, StepValue>>& psi,
                        const StepFunction& t);

// New ambient sub, terms clipped; sub must be a nonempty subset of the ambient.
StepFunction sf_restrict(const StepFunction& t, const Quader& sub);
// Extension by zero to all of R^n.
StepFunction sf_extend_hat(const StepFunction& t);

// Exact integral: sum of value * measure(quader) over the terms.
StepValue sf_integral(const StepFunction& t, const BoxMeasure& m);

// Equality as functions (same ambient, difference has no terms).
bool sf_equal(const StepFunction& a, const StepFunction& b);

}  // namespace quaderint
