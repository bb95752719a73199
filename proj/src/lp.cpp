#include "quaderint/lp.hpp"

#include <algorithm>
#include <cmath>

namespace quaderint {

namespace {

struct Kahan {
    double s = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

double modulus(const StepValue& v) {
    if (v.is_real()) return std::abs(to_double(v.re));
    return std::hypot(to_double(v.re), to_double(v.im));
}

bool integral_exponent(const Rational& p) {
    return boost::multiprecision::denominator(p) == 1;
}

// |value|^p-weighted sum for complex step functions; exact path when the
// moduli stay rational (real values with integer p, or any values with even
// integer p via |v|^2).
double pow_sum_any(const StepFunction& t, const Rational& p, const BoxMeasure& m) {
    if (t.is_real()) {
        PowSum ps = lp_pow_sum(t, p, m);
        return ps.value;
    }
    if (integral_exponent(p) && boost::multiprecision::numerator(p) % 2 == 0) {
        unsigned half = (boost::multiprecision::numerator(p) / 2).convert_to<unsigned>();
        Rational acc(0);
        for (const auto& [q, v] : t.terms()) acc += rat_pow(v.abs2(), half) * m.eval_quader(q);
        return to_double(acc);
    }
    double pd = to_double(p);
    Kahan sum;
    for (const auto& [q, v] : t.terms())
        sum.add(std::pow(modulus(v), pd) * to_double(m.eval_quader(q)));
    return sum.s;
}

void require_positive(const Rational& p) {
    if (!(p > 0)) throw ContractError("exponent must be positive");
}

double norm_finite(const StepFunction& t, const Rational& p, const BoxMeasure& m) {
    double ps = pow_sum_any(t, p, m);
    if (p == 2) return std::sqrt(ps);
    if (p == 1) return ps;
    return std::pow(ps, to_double(Rational(1) / p));
}

double two_pow(const Rational& e) { return std::pow(2.0, to_double(e)); }

}  // namespace

PExponent PExponent::finite(Rational p) {
    require_positive(p);
    PExponent e;
    e.finite_ = true;
    e.p_ = std::move(p);
    return e;
}

PExponent PExponent::infinity() {
    PExponent e;
    e.finite_ = false;
    return e;
}

const Rational& PExponent::value() const {
    if (!finite_) throw ContractError("infinite exponent has no rational value");
    return p_;
}

PowSum lp_pow_sum(const StepFunction& t, const Rational& p, const BoxMeasure& m) {
    if (!t.is_real()) throw ContractError("lp_pow_sum needs a real-valued step function");
    require_positive(p);
    if (integral_exponent(p)) {
        unsigned n = boost::multiprecision::numerator(p).convert_to<unsigned>();
        Rational acc(0);
        for (const auto& [q, v] : t.terms()) acc += rat_pow(rat_abs(v.re), n) * m.eval_quader(q);
        return {true, acc, to_double(acc)};
    }
    double pd = to_double(p);
    Kahan sum;
    for (const auto& [q, v] : t.terms())
        sum.add(std::pow(std::abs(to_double(v.re)), pd) * to_double(m.eval_quader(q)));
    return {false, Rational(0), sum.s};
}

double lp_norm(const StepFunction& t, const PExponent& p, const BoxMeasure& m) {
    if (!p.is_finite()) {
        double best = 0;
        for (const auto& [q, v] : t.terms())
            if (!nullset_check(pk_from_quader(q), m)) best = std::max(best, modulus(v));
        return best;
    }
    return norm_finite(t, p.value(), m);
}

IneqResult check_hoelder(const StepFunction& f, const StepFunction& g, const PExponent& p,
                         const PExponent& q, const BoxMeasure& m) {
    bool conjugate;
    if (p.is_finite() && q.is_finite())
        conjugate = Rational(1) / p.value() + Rational(1) / q.value() == 1;
    else if (p.is_finite())
        conjugate = p.value() == 1;
    else
        conjugate = q.is_finite() && q.value() == 1;
    if (!conjugate) throw ContractError("hoelder needs conjugate exponents 1/p + 1/q = 1");
    double lhs = lp_norm(sf_mul(f, g), PExponent::finite(Rational(1)), m);
    double rhs = lp_norm(f, p, m) * lp_norm(g, q, m);
    return {lhs, rhs, rhs - lhs};
}

IneqResult check_minkowski(const StepFunction& f, const StepFunction& g, const PExponent& p,
                           const BoxMeasure& m) {
    if (p.is_finite() && p.value() < 1)
        throw ContractError("minkowski needs p >= 1 (use the reverse/quasi checks below 1)");
    double lhs = lp_norm(sf_add(f, g), p, m);
    double rhs = lp_norm(f, p, m) + lp_norm(g, p, m);
    return {lhs, rhs, rhs - lhs};
}

IneqResult check_jensen(const std::vector<double>& xs, const Rational& p,
                        const PExponent& p_tilde) {
    require_positive(p);
    if (p_tilde.is_finite() && p_tilde.value() < p)
        throw ContractError("jensen needs p <= p_tilde");
    auto lp_seq = [&xs](const Rational& e) {
        double ed = to_double(e);
        Kahan sum;
        for (double x : xs) sum.add(std::pow(std::abs(x), ed));
        return std::pow(sum.s, 1 / ed);
    };
    double lhs;
    if (p_tilde.is_finite()) {
        lhs = lp_seq(p_tilde.value());
    } else {
        lhs = 0;
        for (double x : xs) lhs = std::max(lhs, std::abs(x));
    }
    double rhs = lp_seq(p);
    return {lhs, rhs, rhs - lhs};
}

IneqResult check_clarkson(const StepFunction& f, const StepFunction& g, const Rational& p,
                          const BoxMeasure& m) {
    if (!(p > 1)) throw ContractError("clarkson needs p > 1");
    double sum_ps = pow_sum_any(sf_add(f, g), p, m);
    double diff_ps = pow_sum_any(sf_add(f, sf_scale(StepValue(Rational(-1)), g)), p, m);
    double f_ps = pow_sum_any(f, p, m);
    double g_ps = pow_sum_any(g, p, m);
    if (p >= 2) {
        double lhs = sum_ps + diff_ps;
        double rhs = two_pow(p - 1) * (f_ps + g_ps);
        return {lhs, rhs, rhs - lhs};
    }
    Rational q = p / (p - 1);
    double q_over_p = to_double(q / p);
    double lhs = std::pow(sum_ps, q_over_p) + std::pow(diff_ps, q_over_p);
    double rhs = 2 * std::pow(f_ps + g_ps, to_double(q - 1));
    return {lhs, rhs, rhs - lhs};
}

IneqResult check_reverse_minkowski(const StepFunction& f, const StepFunction& g, const Rational& p,
                                   const BoxMeasure& m) {
    if (!(p > 0 && p < 1)) throw ContractError("reverse minkowski needs 0 < p < 1");
    for (const StepFunction* t : {&f, &g}) {
        if (!t->is_real()) throw ContractError("reverse minkowski needs real step functions");
        for (const auto& [q, v] : t->terms())
            if (v.re < 0) throw ContractError("reverse minkowski needs nonnegative values");
    }
    double lhs = norm_finite(sf_add(f, g), p, m);
    double rhs = norm_finite(f, p, m) + norm_finite(g, p, m);
    return {lhs, rhs, lhs - rhs};
}

IneqResult check_quasi_triangle(const StepFunction& f, const StepFunction& g, const Rational& p,
                                const BoxMeasure& m) {
    if (!(p > 0 && p < 1)) throw ContractError("quasi triangle needs 0 < p < 1");
    double lhs = norm_finite(sf_add(f, g), p, m);
    double rhs = two_pow(Rational(1) / p - 1) * (norm_finite(f, p, m) + norm_finite(g, p, m));
    return {lhs, rhs, rhs - lhs};
}

}  // namespace quaderint
