#pragma once

// Error-bounded iterative schemes on R^n:
//   * Banach fixed-point iteration with the a-priori bound C^n/(1-C) * d(x0,x1),
//   * Neumann partial sums S_n = sum_{k<=n} a^k with the tail bound
//     ||a||^{n+1}/(1-||a||),
//   * spectral-radius sequences r_k = ||a^k||^{1/k} with their running infimum,
//   * Minkowski gauges of polytopes {x : a_i . x <= b_i} with 0 interior,
//   * the quadratic recursion p_{n+1} = p_n + (t^2 - p_n^2)/2 whose iterates
//     approximate |t| from below on [-1,1], kept in exact rational arithmetic.
//
// Conventions:
//   * Points are std::vector<double>; the metric/norm on R^n is the sup norm.
//   * Operator norms are the exact row-sum (OpNorm::Inf) and column-sum
//     (OpNorm::One) formulas; no spectral norm.
//   * Violated preconditions throw ContractError.

#include <cstddef>
#include <functional>
#include <vector>

#include "quaderint/rational.hpp"

namespace quaderint {

// ---------------------------------------------------------------------------
// Matrices and vector helpers
// ---------------------------------------------------------------------------

class Matrix {
  public:
    explicit Matrix(std::size_t n);                      // n x n zero matrix, n >= 1
    Matrix(std::size_t n, std::vector<double> entries);  // row-major, finite entries
    static Matrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    double& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const std::vector<double>& entries() const { return e_; }

  private:
    std::size_t n_ = 0;
    std::vector<double> e_;
};

enum class OpNorm { One, Inf };

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_scale(double lambda, const Matrix& a);
std::vector<double> mat_apply(const Matrix& a, const std::vector<double>& x);

// Row-sum norm for OpNorm::Inf, column-sum norm for OpNorm::One.
double matrix_norm(const Matrix& a, OpNorm norm);

double vec_sup_norm(const std::vector<double>& x);
double vec_sup_dist(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Banach fixed-point iteration
// ---------------------------------------------------------------------------

// The caller asserts that `map` is a self-map of a closed subset containing
// the iterates and contracts distances by at least `factor` in ]0,1[.  The
// assertion is policed empirically: whenever consecutive iterate distances
// shrink by a ratio exceeding `factor` (beyond rounding slack), the iteration
// aborts with ContractError.
struct ContractionSpec {
    std::function<std::vector<double>(const std::vector<double>&)> map;
    double factor = 0.0;
    std::vector<double> start;
};

// F(x) = a.x + offset with factor ||a||_inf (must be < 1).
ContractionSpec make_affine_contraction(const Matrix& a, std::vector<double> offset,
                                        std::vector<double> start);
// F = cos on [0,1] with factor sin(1); start must lie in [0,1].
ContractionSpec make_cos_contraction(double start);

struct BanachResult {
    std::vector<std::vector<double>> iterates;  // x_0, x_1, ..., x_N
    std::vector<double> bounds;                 // bounds[n] = factor^n/(1-factor) * d(x_0,x_1)
    std::vector<double> x_star;                 // final iterate; d(x_N, fixpoint) <= bounds[N]
};

// Iterates x_{n+1} = F(x_n) until the a-priori bound drops to tol (or an exact
// fixed point is hit).  Throws if more than max_iter map evaluations would be
// needed or a contraction-ratio violation is observed.
BanachResult banach_iterate(const ContractionSpec& spec, double tol, std::size_t max_iter);

// ---------------------------------------------------------------------------
// Neumann series and spectral radius
// ---------------------------------------------------------------------------

struct NeumannResult {
    Matrix partial_sum;    // S_n = sum_{k=0}^{terms} a^k
    double bound = 0.0;    // ||(I-a)^{-1} - S_n|| <= ||a||^{terms+1} / (1 - ||a||)
    double operator_norm = 0.0;
};

// Requires ||a|| < 1 in the chosen norm.
NeumannResult neumann_inverse(const Matrix& a, std::size_t terms, OpNorm norm);

struct SpectralRadiusResult {
    std::vector<double> values;       // r_k = ||a^k||^{1/k}, k = 1..kmax
    std::vector<double> running_inf;  // running infimum; limit estimate is back()
};

// Requires kmax >= 1.  Throws if matrix powers overflow (rescale the input) or
// the computed norms fail the submultiplicativity spot checks.
SpectralRadiusResult spectral_radius_seq(const Matrix& a, std::size_t kmax, OpNorm norm);

// ---------------------------------------------------------------------------
// Minkowski gauge of a polytope
// ---------------------------------------------------------------------------

// C = {x : rows[i] . x <= bounds[i]} with every bound positive, so 0 is
// strictly interior.  An empty row list describes all of R^n (gauge 0).
class Halfspaces {
  public:
    Halfspaces(std::size_t dim, std::vector<std::vector<double>> rows,
               std::vector<double> bounds);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<double>& row(std::size_t i) const { return rows_[i]; }
    double bound(std::size_t i) const { return bounds_[i]; }

  private:
    std::size_t dim_ = 0;
    std::vector<std::vector<double>> rows_;
    std::vector<double> bounds_;
};

// inf{tau > 0 : x in tau*C} = max over rows of max(0, a_i.x / b_i).
double minkowski_gauge(const Halfspaces& hs, const std::vector<double>& x);

// ---------------------------------------------------------------------------
// |t|-approximating polynomials
// ---------------------------------------------------------------------------

struct AbsPolyResult {
    std::vector<Rational> coeffs;  // exact coefficients of p_n, degree 2^n (empty for n = 0)
    Rational grid_sup_error;       // max over the standard 4097-point grid of |t| - p_n(t)
};

// Exact coefficients of p_n plus its grid sup-error.  The coefficient count
// grows like 2^n, so n is capped at 12.
AbsPolyResult abs_poly(int n);

// Exact value p_n(t) via the value recursion; requires |t| <= 1 and n <= 12.
// Cost grows quickly with n for non-dyadic t (denominators square each step).
Rational abs_poly_value(int n, const Rational& t);

struct AbsPolyGridReport {
    int n_max = 0;
    std::size_t points = 0;
    // 0 <= p_k(t) <= p_{k+1}(t) <= |t| held exactly at every grid point, k < n_max.
    bool chain_ok = false;
    std::vector<Rational> sup_errors;  // per level k = 0..n_max: max over grid of |t| - p_k(t)
};

// Evaluates the whole chain p_0..p_{n_max} on the equispaced rational grid over
// [-1,1] with `points` nodes (points-1 must be a power of two; default 4097)
// and reports exact monotonicity checks plus per-level sup-errors.
AbsPolyGridReport abs_poly_grid_report(int n_max, std::size_t points = 4097);

}  // namespace quaderint
