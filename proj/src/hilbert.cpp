#include "quaderint/hilbert.hpp"

#include <algorithm>
#include <cmath>

namespace quaderint {

namespace {

constexpr double kDependenceThreshold = 1e-10;
constexpr double kOrthogonalityTol = 1e-12;

double modulus(const StepValue& v) {
    return std::hypot(to_double(v.re), to_double(v.im));
}

StepValue div_real(const StepValue& v, const Rational& d) {
    return StepValue(v.re / d, v.im / d);
}

void require_same_kind(const IPElement& x, const IPElement& y) {
    if (x.kind() != y.kind()) throw ContractError("inner-product carriers must match");
}

Rational poly_moment_integral(const std::vector<Rational>& coeffs, const Rational& a,
                              const Rational& b) {
    Rational acc(0);
    Rational pa = a, pb = b;  // a^{k+1}, b^{k+1}
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        acc += coeffs[k] * (pb - pa) / Rational(Integer(k + 1));
        pa *= a;
        pb *= b;
    }
    return acc;
}

}  // namespace

IPElement IPElement::vec(std::vector<StepValue> entries) {
    if (entries.empty()) throw ContractError("vector carrier needs at least one entry");
    IPElement e;
    e.kind_ = Kind::Vec;
    e.entries_ = std::move(entries);
    return e;
}

IPElement IPElement::step(StepFunction t, BoxMeasure m) {
    if (t.ambient().dim() != m.dim()) throw ContractError("step carrier dimension mismatch");
    IPElement e;
    e.kind_ = Kind::Step;
    e.t_ = std::move(t);
    e.m_ = std::move(m);
    return e;
}

IPElement IPElement::poly(std::vector<Rational> coeffs, Rational a, Rational b) {
    if (!(a < b)) throw ContractError("polynomial carrier needs a < b");
    IPElement e;
    e.kind_ = Kind::Poly;
    e.coeffs_ = std::move(coeffs);
    e.a_ = std::move(a);
    e.b_ = std::move(b);
    return e;
}

const std::vector<StepValue>& IPElement::entries() const {
    if (kind_ != Kind::Vec) throw ContractError("not a vector element");
    return entries_;
}
const StepFunction& IPElement::step_fn() const {
    if (kind_ != Kind::Step) throw ContractError("not a step element");
    return t_;
}
const BoxMeasure& IPElement::step_measure() const {
    if (kind_ != Kind::Step) throw ContractError("not a step element");
    return m_;
}
const std::vector<Rational>& IPElement::poly_coeffs() const {
    if (kind_ != Kind::Poly) throw ContractError("not a polynomial element");
    return coeffs_;
}
const Rational& IPElement::poly_lo() const {
    if (kind_ != Kind::Poly) throw ContractError("not a polynomial element");
    return a_;
}
const Rational& IPElement::poly_hi() const {
    if (kind_ != Kind::Poly) throw ContractError("not a polynomial element");
    return b_;
}

StepValue inner(const IPElement& x, const IPElement& y) {
    require_same_kind(x, y);
    switch (x.kind()) {
        case IPElement::Kind::Vec: {
            const auto& xs = x.entries();
            const auto& ys = y.entries();
            if (xs.size() != ys.size()) throw ContractError("vector lengths differ");
            StepValue acc;
            for (std::size_t i = 0; i < xs.size(); ++i) acc = acc + xs[i] * ys[i].conj();
            return acc;
        }
        case IPElement::Kind::Step: {
            if (!(x.step_measure() == y.step_measure()))
                throw ContractError("step carriers need the same measure");
            return sf_integral(sf_mul(x.step_fn(), sf_conj(y.step_fn())), x.step_measure());
        }
        case IPElement::Kind::Poly: {
            if (x.poly_lo() != y.poly_lo() || x.poly_hi() != y.poly_hi())
                throw ContractError("polynomial carriers need the same interval");
            const auto& p = x.poly_coeffs();
            const auto& q = y.poly_coeffs();
            if (p.empty() || q.empty()) return StepValue();
            std::vector<Rational> prod(p.size() + q.size() - 1, Rational(0));
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; j < q.size(); ++j) prod[i + j] += p[i] * q[j];
            return StepValue(poly_moment_integral(prod, x.poly_lo(), x.poly_hi()));
        }
    }
    throw ContractError("unreachable");
}

IPElement ip_add(const IPElement& x, const IPElement& y) {
    require_same_kind(x, y);
    switch (x.kind()) {
        case IPElement::Kind::Vec: {
            const auto& xs = x.entries();
            const auto& ys = y.entries();
            if (xs.size() != ys.size()) throw ContractError("vector lengths differ");
            std::vector<StepValue> out;
            out.reserve(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(xs[i] + ys[i]);
            return IPElement::vec(std::move(out));
        }
        case IPElement::Kind::Step:
            if (!(x.step_measure() == y.step_measure()))
                throw ContractError("step carriers need the same measure");
            return IPElement::step(sf_add(x.step_fn(), y.step_fn()), x.step_measure());
        case IPElement::Kind::Poly: {
            if (x.poly_lo() != y.poly_lo() || x.poly_hi() != y.poly_hi())
                throw ContractError("polynomial carriers need the same interval");
            std::vector<Rational> out = x.poly_coeffs();
            const auto& q = y.poly_coeffs();
            if (q.size() > out.size()) out.resize(q.size(), Rational(0));
            for (std::size_t i = 0; i < q.size(); ++i) out[i] += q[i];
            return IPElement::poly(std::move(out), x.poly_lo(), x.poly_hi());
        }
    }
    throw ContractError("unreachable");
}

IPElement ip_scale(const StepValue& lambda, const IPElement& x) {
    switch (x.kind()) {
        case IPElement::Kind::Vec: {
            std::vector<StepValue> out;
            out.reserve(x.entries().size());
            for (const StepValue& e : x.entries()) out.push_back(lambda * e);
            return IPElement::vec(std::move(out));
        }
        case IPElement::Kind::Step:
            return IPElement::step(sf_scale(lambda, x.step_fn()), x.step_measure());
        case IPElement::Kind::Poly: {
            if (!lambda.is_real())
                throw ContractError("polynomial carrier supports real scalars only");
            std::vector<Rational> out;
            out.reserve(x.poly_coeffs().size());
            for (const Rational& c : x.poly_coeffs()) out.push_back(lambda.re * c);
            return IPElement::poly(std::move(out), x.poly_lo(), x.poly_hi());
        }
    }
    throw ContractError("unreachable");
}

IPElement ip_sub(const IPElement& x, const IPElement& y) {
    return ip_add(x, ip_scale(StepValue(Rational(-1)), y));
}

double ip_norm(const IPElement& x) { return std::sqrt(to_double(inner(x, x).re)); }

double cs_slack(const IPElement& x, const IPElement& y) {
    Rational slack = inner(x, x).re * inner(y, y).re - inner(x, y).abs2();
    return to_double(slack);
}

double parallelogram_residual(const IPElement& x, const IPElement& y) {
    Rational lhs = inner(ip_add(x, y), ip_add(x, y)).re + inner(ip_sub(x, y), ip_sub(x, y)).re;
    Rational rhs = 2 * inner(x, x).re + 2 * inner(y, y).re;
    return to_double(rat_abs(lhs - rhs));
}

double pythagoras_residual(const std::vector<IPElement>& family,
                           const std::vector<StepValue>& coefficients) {
    if (family.size() != coefficients.size())
        throw ContractError("one coefficient per family member required");
    if (family.empty()) return 0;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (modulus(inner(family[i], family[j])) > kOrthogonalityTol)
                throw ContractError("family is not pairwise orthogonal");
    IPElement combo = ip_scale(coefficients[0], family[0]);
    Rational rhs = coefficients[0].abs2() * inner(family[0], family[0]).re;
    for (std::size_t i = 1; i < family.size(); ++i) {
        combo = ip_add(combo, ip_scale(coefficients[i], family[i]));
        rhs += coefficients[i].abs2() * inner(family[i], family[i]).re;
    }
    return to_double(rat_abs(inner(combo, combo).re - rhs));
}

double gram_residual(const std::vector<IPElement>& elements) {
    double worst = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i; j < elements.size(); ++j) {
            StepValue v = inner(elements[i], elements[j]);
            if (i == j) v = v + StepValue(Rational(-1));
            worst = std::max(worst, modulus(v));
        }
    }
    return worst;
}

GramSchmidtResult gram_schmidt(const std::vector<IPElement>& xs) {
    if (xs.empty()) throw ContractError("gram_schmidt needs at least one element");
    GramSchmidtResult result;
    std::vector<Rational> norms_sq;                    // <v_i, v_i>
    std::vector<Rational> scales;                      // e_i = scales[i] * v_i
    std::vector<std::vector<StepValue>> combo_coeffs;  // x_i = v_i + sum c_ij v_j
    for (const IPElement& x : xs) {
        IPElement v = x;
        std::vector<StepValue> cs;
        for (std::size_t j = 0; j < result.orthogonal.size(); ++j) {
            StepValue c = div_real(inner(x, result.orthogonal[j]), norms_sq[j]);
            v = ip_sub(v, ip_scale(c, result.orthogonal[j]));
            cs.push_back(c);
        }
        Rational vv = inner(v, v).re;
        Rational xx = inner(x, x).re;
        if (to_double(vv) <= kDependenceThreshold * kDependenceThreshold * to_double(xx) ||
            vv == 0)
            throw ContractError("gram_schmidt input is linearly dependent");
        result.orthogonal.push_back(std::move(v));
        norms_sq.push_back(vv);
        scales.push_back(rational_from_double(1.0 / std::sqrt(to_double(vv))));
        combo_coeffs.push_back(std::move(cs));
    }
    for (std::size_t i = 0; i < result.orthogonal.size(); ++i)
        result.family.elements.push_back(
            ip_scale(StepValue(scales[i]), result.orthogonal[i]));
    result.family.gram_residual = gram_residual(result.family.elements);
    // exact expansion x_i = sum_j table[i][j] e_j, using v_j = e_j / scales[j]
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<StepValue> row;
        for (std::size_t j = 0; j < i; ++j) row.push_back(div_real(combo_coeffs[i][j], scales[j]));
        row.push_back(StepValue(Rational(1) / scales[i]));
        result.table.push_back(std::move(row));
    }
    return result;
}

ProjectionResult project(const IPElement& x, const OrthonormalFamily& family) {
    if (family.elements.empty()) throw ContractError("projection needs a nonempty family");
    ProjectionResult r{ip_scale(StepValue(), family.elements[0]), {}, 0};
    for (const IPElement& e : family.elements) {
        StepValue c = inner(x, e);
        r.projection = ip_add(r.projection, ip_scale(c, e));
        r.coefficients.push_back(c);
    }
    r.defect = ip_norm(ip_sub(x, r.projection));
    return r;
}

std::vector<std::complex<double>> fourier_coeffs(const StepFunction& t, int kmax) {
    if (kmax < 0) throw ContractError("kmax must be nonnegative");
    if (t.ambient() != Quader({Interval::closed(Rational(-1), Rational(1))}))
        throw ContractError("fourier ambient must be [-1,1] in units of pi");
    const double pi = std::acos(-1.0);
    const double root = 1.0 / std::sqrt(2 * pi);
    std::vector<std::complex<double>> cs(2 * std::size_t(kmax) + 1);
    for (const auto& [q, v] : t.terms()) {
        double a = to_double(q.factor(0).lower().value);
        double b = to_double(q.factor(0).upper().value);
        std::complex<double> alpha(to_double(v.re), to_double(v.im));
        for (int k = -kmax; k <= kmax; ++k) {
            std::complex<double> seg;
            if (k == 0) {
                seg = (b - a) * pi;
            } else {
                std::complex<double> hi = std::polar(1.0, -k * pi * b);
                std::complex<double> lo = std::polar(1.0, -k * pi * a);
                seg = (hi - lo) / std::complex<double>(0.0, -double(k));
            }
            cs[std::size_t(k + kmax)] += root * alpha * seg;
        }
    }
    return cs;
}

double fourier_norm_sq(const StepFunction& t) {
    if (t.ambient() != Quader({Interval::closed(Rational(-1), Rational(1))}))
        throw ContractError("fourier ambient must be [-1,1] in units of pi");
    Rational acc(0);
    for (const auto& [q, v] : t.terms()) acc += v.abs2() * q.factor(0).length();
    return to_double(acc) * std::acos(-1.0);
}

double parseval_gap(const StepFunction& t, int kmax) {
    double sum = 0;
    for (const std::complex<double>& c : fourier_coeffs(t, kmax)) sum += std::norm(c);
    return fourier_norm_sq(t) - sum;
}

}  // namespace quaderint
