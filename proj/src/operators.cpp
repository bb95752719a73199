#include "quaderint/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "quaderint/errors.hpp"

namespace quaderint {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw ContractError(std::string(what) + " must be finite");
}

void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw ContractError("matrix dimensions differ");
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t n) : n_(n), e_(n * n, 0.0) {
    if (n == 0) throw ContractError("matrix dimension must be positive");
}

Matrix::Matrix(std::size_t n, std::vector<double> entries) : n_(n), e_(std::move(entries)) {
    if (n == 0) throw ContractError("matrix dimension must be positive");
    if (e_.size() != n * n) throw ContractError("matrix needs exactly n*n entries");
    for (double v : e_) require_finite(v, "matrix entry");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Matrix mat_scale(double lambda, const Matrix& a) {
    require_finite(lambda, "scale factor");
    Matrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = lambda * a.at(i, j);
    return out;
}

std::vector<double> mat_apply(const Matrix& a, const std::vector<double>& x) {
    if (x.size() != a.dim()) throw ContractError("matrix/vector dimension mismatch");
    std::vector<double> out(a.dim(), 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a.at(i, j) * x[j];
    return out;
}

double matrix_norm(const Matrix& a, OpNorm norm) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.dim(); ++j)
            s += std::abs(norm == OpNorm::Inf ? a.at(i, j) : a.at(j, i));
        best = std::max(best, s);
    }
    return best;
}

double vec_sup_norm(const std::vector<double>& x) {
    double best = 0.0;
    for (double v : x) best = std::max(best, std::abs(v));
    return best;
}

double vec_sup_dist(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ContractError("vector dimension mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) best = std::max(best, std::abs(x[i] - y[i]));
    return best;
}

// ---------------------------------------------------------------------------
// Banach fixed-point iteration
// ---------------------------------------------------------------------------

ContractionSpec make_affine_contraction(const Matrix& a, std::vector<double> offset,
                                        std::vector<double> start) {
    if (offset.size() != a.dim() || start.size() != a.dim())
        throw ContractError("affine contraction needs offset/start of the matrix dimension");
    for (double v : offset) require_finite(v, "offset entry");
    for (double v : start) require_finite(v, "start entry");
    const double norm = matrix_norm(a, OpNorm::Inf);
    if (!(norm < 1.0))
        throw ContractError("affine map is not a sup-norm contraction (||a||_inf >= 1)");
    ContractionSpec spec;
    spec.map = [a, offset](const std::vector<double>& x) {
        std::vector<double> y = mat_apply(a, x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset[i];
        return y;
    };
    spec.factor = std::max(norm, std::numeric_limits<double>::min());
    spec.start = std::move(start);
    return spec;
}

ContractionSpec make_cos_contraction(double start) {
    require_finite(start, "start");
    if (start < 0.0 || start > 1.0) throw ContractError("cos contraction lives on [0,1]");
    ContractionSpec spec;
    spec.map = [](const std::vector<double>& x) {
        return std::vector<double>{std::cos(x[0])};
    };
    spec.factor = std::sin(1.0);
    spec.start = {start};
    return spec;
}

BanachResult banach_iterate(const ContractionSpec& spec, double tol, std::size_t max_iter) {
    if (!spec.map) throw ContractError("contraction needs a map");
    if (!(spec.factor > 0.0 && spec.factor < 1.0))
        throw ContractError("contraction factor must lie in ]0,1[");
    if (!(tol > 0.0)) throw ContractError("tolerance must be positive");
    if (spec.start.empty()) throw ContractError("contraction needs a start point");
    if (max_iter == 0) throw ContractError("max_iter must allow at least one step");
    for (double v : spec.start) require_finite(v, "start entry");

    const double c = spec.factor;
    auto step = [&spec](const std::vector<double>& x) {
        std::vector<double> y = spec.map(x);
        if (y.size() != x.size()) throw ContractError("contraction map changed the dimension");
        for (double v : y) require_finite(v, "iterate entry");
        return y;
    };

    BanachResult out;
    out.iterates.push_back(spec.start);
    out.iterates.push_back(step(spec.start));
    double d_prev = vec_sup_dist(out.iterates[0], out.iterates[1]);
    out.bounds.push_back(d_prev / (1.0 - c));
    out.bounds.push_back(out.bounds.back() * c);

    while (out.bounds.back() > tol && d_prev > 0.0) {
        if (out.iterates.size() - 1 >= max_iter)
            throw ContractError("banach_iterate: max_iter exceeded before reaching the tolerance");
        const std::vector<double>& x = out.iterates.back();
        std::vector<double> y = step(x);
        const double d_next = vec_sup_dist(x, y);
        const double slack = 1e-12 * (1.0 + vec_sup_norm(x) + vec_sup_norm(y));
        if (d_next > c * d_prev + slack)
            throw ContractError(
                "banach_iterate: observed contraction ratio exceeds the declared factor");
        out.bounds.push_back(out.bounds.back() * c);
        out.iterates.push_back(std::move(y));
        d_prev = d_next;
    }
    out.x_star = out.iterates.back();
    return out;
}

// ---------------------------------------------------------------------------
// Neumann series and spectral radius
// ---------------------------------------------------------------------------

NeumannResult neumann_inverse(const Matrix& a, std::size_t terms, OpNorm norm) {
    const double na = matrix_norm(a, norm);
    if (!(na < 1.0)) throw ContractError("neumann_inverse needs operator norm < 1");
    Matrix sum = Matrix::identity(a.dim());
    Matrix power = Matrix::identity(a.dim());
    for (std::size_t k = 1; k <= terms; ++k) {
        power = mat_mul(power, a);
        sum = mat_add(sum, power);
    }
    const double bound = std::pow(na, static_cast<double>(terms) + 1.0) / (1.0 - na);
    return {std::move(sum), bound, na};
}

SpectralRadiusResult spectral_radius_seq(const Matrix& a, std::size_t kmax, OpNorm norm) {
    if (kmax < 1) throw ContractError("spectral_radius_seq needs kmax >= 1");
    SpectralRadiusResult out;
    std::vector<double> norms;
    norms.reserve(kmax);
    Matrix power = Matrix::identity(a.dim());
    for (std::size_t k = 1; k <= kmax; ++k) {
        power = mat_mul(power, a);
        const double nk = matrix_norm(power, norm);
        if (!std::isfinite(nk))
            throw ContractError("spectral_radius_seq: matrix powers overflowed; rescale the input");
        norms.push_back(nk);
        const double rk = nk == 0.0 ? 0.0 : std::pow(nk, 1.0 / static_cast<double>(k));
        out.values.push_back(rk);
        out.running_inf.push_back(out.running_inf.empty() ? rk
                                                          : std::min(out.running_inf.back(), rk));
    }
    // Submultiplicativity spot checks ||a^{k+l}|| <= ||a^k||*||a^l|| (with
    // rounding slack); a failure indicates numerical breakdown.
    static const std::size_t probes[] = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (std::size_t i : probes)
        for (std::size_t j : probes) {
            if (i > kmax || j > kmax || i + j > kmax) continue;
            if (norms[i + j - 1] > norms[i - 1] * norms[j - 1] * (1.0 + 1e-9))
                throw ContractError("spectral_radius_seq: submultiplicativity check failed");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Minkowski gauge
// ---------------------------------------------------------------------------

Halfspaces::Halfspaces(std::size_t dim, std::vector<std::vector<double>> rows,
                       std::vector<double> bounds)
    : dim_(dim), rows_(std::move(rows)), bounds_(std::move(bounds)) {
    if (dim_ == 0) throw ContractError("halfspaces need a positive dimension");
    if (rows_.size() != bounds_.size()) throw ContractError("halfspaces need one bound per row");
    for (const auto& r : rows_) {
        if (r.size() != dim_) throw ContractError("halfspace row has the wrong dimension");
        for (double v : r) require_finite(v, "halfspace row entry");
    }
    for (double b : bounds_) {
        require_finite(b, "halfspace bound");
        if (!(b > 0.0)) throw ContractError("halfspace bounds must be positive (0 interior)");
    }
}

double minkowski_gauge(const Halfspaces& hs, const std::vector<double>& x) {
    if (x.size() != hs.dim()) throw ContractError("gauge point has the wrong dimension");
    for (double v : x) require_finite(v, "gauge point entry");
    double best = 0.0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        double dot = 0.0;
        for (std::size_t j = 0; j < hs.dim(); ++j) dot += hs.row(i)[j] * x[j];
        best = std::max(best, dot / hs.bound(i));
    }
    return best;
}

// ---------------------------------------------------------------------------
// |t|-approximating polynomials
// ---------------------------------------------------------------------------

namespace {

constexpr int kAbsPolyCap = 12;

void check_abs_poly_level(int n) {
    if (n < 0) throw ContractError("abs_poly needs n >= 0");
    if (n > kAbsPolyCap) throw ContractError("abs_poly is capped at n = 12");
}

// Dyadic scalar num / 2^exp; keeps the value recursion free of gcd work.
struct Dyadic {
    Integer num;
    long exp = 0;
};

bool dyadic_leq(const Dyadic& a, const Dyadic& b) {
    const long e = std::max(a.exp, b.exp);
    return (a.num << (e - a.exp)) <= (b.num << (e - b.exp));
}

Rational dyadic_to_rational(const Dyadic& d) { return Rational(d.num, Integer(1) << d.exp); }

}  // namespace

AbsPolyResult abs_poly(int n) {
    check_abs_poly_level(n);
    // Polynomial as integer numerators over the common denominator 2^exp.
    std::vector<Integer> num;
    long exp = 0;
    for (int step = 0; step < n; ++step) {
        const long e2 = 2 * exp;
        std::vector<Integer> sq(num.empty() ? 0 : 2 * num.size() - 1, Integer(0));
        for (std::size_t i = 0; i < num.size(); ++i)
            for (std::size_t j = 0; j < num.size(); ++j) sq[i + j] += num[i] * num[j];
        // p' = p + (t^2 - p^2)/2 over the denominator 2^{e2+1}
        std::vector<Integer> next(std::max<std::size_t>(sq.size(), 3), Integer(0));
        for (std::size_t k = 0; k < num.size(); ++k) next[k] = num[k] << (e2 + 1 - exp);
        next[2] += Integer(1) << e2;
        for (std::size_t k = 0; k < sq.size(); ++k) next[k] -= sq[k];
        num = std::move(next);
        exp = e2 + 1;
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    AbsPolyResult out;
    const Integer den = Integer(1) << exp;
    for (const Integer& c : num) out.coeffs.emplace_back(c, den);
    out.grid_sup_error = abs_poly_grid_report(n).sup_errors.back();
    return out;
}

Rational abs_poly_value(int n, const Rational& t) {
    check_abs_poly_level(n);
    if (rat_abs(t) > Rational(1)) throw ContractError("abs_poly_value needs |t| <= 1");
    const Rational t2 = t * t;
    Rational v(0);
    for (int i = 0; i < n; ++i) v += (t2 - v * v) / 2;
    return v;
}

AbsPolyGridReport abs_poly_grid_report(int n_max, std::size_t points) {
    check_abs_poly_level(n_max);
    if (points < 2) throw ContractError("abs_poly grid needs at least two points");
    const std::size_t cells = points - 1;
    if ((cells & (cells - 1)) != 0)
        throw ContractError("abs_poly grid must split [-1,1] into a power-of-two cell count");
    long s = 0;
    while ((std::size_t(1) << s) != cells) ++s;

    AbsPolyGridReport rep;
    rep.n_max = n_max;
    rep.points = points;
    rep.chain_ok = true;
    std::vector<Dyadic> best(std::size_t(n_max) + 1, Dyadic{Integer(-1), 0});

    for (std::size_t i = 0; i < points; ++i) {
        // grid node t = m / 2^s with m = 2i - 2^s
        const Integer m = Integer(2) * Integer(i) - (Integer(1) << s);
        const Integer m_abs = m < 0 ? Integer(-m) : m;
        const Integer m2 = m * m;  // t^2 numerator over 2^{2s}
        Dyadic v{Integer(0), 0};
        for (int level = 0;; ++level) {
            if (v.num < 0) rep.chain_ok = false;
            const long e_err = std::max(v.exp, s);
            Dyadic err{(m_abs << (e_err - s)) - (v.num << (e_err - v.exp)), e_err};
            if (err.num < 0) rep.chain_ok = false;
            if (!dyadic_leq(err, best[std::size_t(level)])) best[std::size_t(level)] = err;
            if (level == n_max) break;
            const long e2 = 2 * v.exp;
            const long e_next = std::max(e2, 2 * s) + 1;
            Dyadic next{(v.num << (e_next - v.exp)) + (m2 << (e_next - 1 - 2 * s)) -
                            ((v.num * v.num) << (e_next - 1 - e2)),
                        e_next};
            if (!dyadic_leq(v, next)) rep.chain_ok = false;
            v = std::move(next);
        }
    }
    rep.sup_errors.reserve(best.size());
    for (const Dyadic& d : best) rep.sup_errors.push_back(dyadic_to_rational(d));
    return rep;
}

}  // namespace quaderint
