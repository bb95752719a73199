#pragma once

#include <complex>
#include <vector>

#include "quaderint/measure.hpp"
#include "quaderint/stepfn.hpp"

namespace quaderint {

// Element of one of three exact inner-product carriers:
//   Vec:  finite complex-rational tuples, <x,y> = sum x_i conj(y_i)
//   Step: step functions against a shared box measure, <f,g> = int f conj(g) dm
//   Poly: real rational polynomials on a common interval [a,b] against volume
// Carriers never mix within one computation.
class IPElement {
public:
    enum class Kind { Vec, Step, Poly };

    static IPElement vec(std::vector<StepValue> entries);
    static IPElement step(StepFunction t, BoxMeasure m);
    static IPElement poly(std::vector<Rational> coeffs, Rational a, Rational b);

    Kind kind() const { return kind_; }
    const std::vector<StepValue>& entries() const;
    const StepFunction& step_fn() const;
    const BoxMeasure& step_measure() const;
    const std::vector<Rational>& poly_coeffs() const;
    const Rational& poly_lo() const;
    const Rational& poly_hi() const;

private:
    IPElement() = default;
    Kind kind_ = Kind::Vec;
    std::vector<StepValue> entries_;
    StepFunction t_{StepFunction::zero(Quader::whole_space(1))};
    BoxMeasure m_{BoxMeasure::volume(1)};
    std::vector<Rational> coeffs_;
    Rational a_{0}, b_{0};
};

// Exact sesquilinear product: linear in the first slot, conjugate-linear in
// the second. Throws on carrier mismatch.
StepValue inner(const IPElement& x, const IPElement& y);
IPElement ip_add(const IPElement& x, const IPElement& y);
IPElement ip_scale(const StepValue& lambda, const IPElement& x);
IPElement ip_sub(const IPElement& x, const IPElement& y);
double ip_norm(const IPElement& x);

// <x,x><y,y> - |<x,y>|^2, computed exactly then rounded; never negative.
double cs_slack(const IPElement& x, const IPElement& y);
// | (||x+y||^2 + ||x-y||^2) - (2||x||^2 + 2||y||^2) |, exact arithmetic.
double parallelogram_residual(const IPElement& x, const IPElement& y);
// | ||sum a_i x_i||^2 - sum |a_i|^2 ||x_i||^2 | for a pairwise-orthogonal
// family; throws if the family is not orthogonal.
double pythagoras_residual(const std::vector<IPElement>& family,
                           const std::vector<StepValue>& coefficients);

struct OrthonormalFamily {
    std::vector<IPElement> elements;
    double gram_residual = 0;  // max |<e_i, e_j> - delta_ij|
};

double gram_residual(const std::vector<IPElement>& elements);

// Classical Gram-Schmidt. The orthogonalization runs in exact rational
// arithmetic, so `orthogonal` is pairwise orthogonal exactly; normalization
// divides by a rational approximation of each norm, keeping exact
// orthogonality while bringing the diagonal within a few ulps of 1. The
// table gives the exact expansion x_i = sum_j table[i][j] e_j.
struct GramSchmidtResult {
    std::vector<IPElement> orthogonal;
    OrthonormalFamily family;
    std::vector<std::vector<StepValue>> table;
};
// Throws when an input is linearly dependent on its predecessors (relative
// residual norm <= 1e-10).
GramSchmidtResult gram_schmidt(const std::vector<IPElement>& xs);

struct ProjectionResult {
    IPElement projection;
    std::vector<StepValue> coefficients;  // <x, e_i>
    double defect;                        // ||x - projection||
};
ProjectionResult project(const IPElement& x, const OrthonormalFamily& family);

// Fourier analysis of step functions on [-pi, pi] against the Hilbert basis
// e_k(x) = e^{ikx}/sqrt(2 pi). Coordinates are stored in units of pi: the
// ambient must be exactly [-1, 1] (representing [-pi, pi]) and a breakpoint
// b stands for the point b*pi. Returns c_k for k = -kmax..kmax at index
// k + kmax, with c_k = (1/sqrt(2 pi)) sum_j alpha_j (e^{-ik pi b_j} -
// e^{-ik pi a_j})/(-ik) and c_0 = area/sqrt(2 pi).
std::vector<std::complex<double>> fourier_coeffs(const StepFunction& t, int kmax);
// ||t||_2^2 = pi * sum |alpha_j|^2 (b_j - a_j) in actual coordinates.
double fourier_norm_sq(const StepFunction& t);
// ||t||_2^2 - sum_{|k| <= kmax} |c_k|^2; nonnegative (Bessel), decreasing
// in kmax, tending to zero (Parseval).
double parseval_gap(const StepFunction& t, int kmax);

}  // namespace quaderint
