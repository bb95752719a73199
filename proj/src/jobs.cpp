#include "quaderint/jobs.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "quaderint/errors.hpp"
#include "quaderint/io.hpp"
#include "quaderint/suites.hpp"

namespace quaderint {

namespace {

const std::string& need_input(const JobSpec& job, const std::string& slot) {
    auto it = job.inputs.find(slot);
    if (it == job.inputs.end())
        throw ContractError("subcommand '" + job.subcommand + "' needs input '" + slot + "'");
    return it->second;
}

double param_or(const JobSpec& job, const std::string& name, double dflt) {
    auto it = job.params.find(name);
    return it == job.params.end() ? dflt : it->second;
}

long int_param(const JobSpec& job, const std::string& name, long dflt, long lo, long hi) {
    const double v = param_or(job, name, static_cast<double>(dflt));
    if (!(v == std::floor(v)) || v < static_cast<double>(lo) || v > static_cast<double>(hi))
        throw ContractError("parameter '" + name + "' must be an integer in [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<long>(v);
}

double tol_param(const JobSpec& job, double dflt = 1e-9) {
    const double t = param_or(job, "tol", dflt);
    if (!(t >= 0) || !std::isfinite(t)) throw ContractError("parameter 'tol' must be >= 0");
    return t;
}

std::string csv_value(const StepValue& v) {
    return format_rational(v.re) + "," + format_rational(v.im);
}

// [a, b] from an oracle document's domain: 1-d, closed, bounded.
std::pair<Rational, Rational> closed_bounds(const OracleDoc& doc) {
    if (!doc.domain) throw ContractError("oracle document needs a 'domain' entry here");
    const Quader& d = *doc.domain;
    if (d.dim() != 1 || d.is_empty()) throw ContractError("domain must be a nonempty interval");
    const Interval& iv = d.factor(0);
    if (!iv.lower().is_finite() || !iv.upper().is_finite())
        throw ContractError("domain must be bounded");
    return {iv.lower().value, iv.upper().value};
}

std::string job_integrate(const JobSpec& job) {
    const StepFunction f = parse_stepfn(need_input(job, "stepfn"));
    const BoxMeasure m = parse_measure(need_input(job, "measure"));
    return "re,im\n" + csv_value(sf_integral(f, m)) + "\n";
}

std::string job_bracket(const JobSpec& job) {
    const OracleDoc doc = parse_oracle(need_input(job, "oracle"));
    if (!doc.domain) throw ContractError("bracket needs an oracle domain");
    const long depth = int_param(job, "depth", 12, 0, 22);
    std::string out = "depth,lower,upper,gap\n";
    for (long d = 0; d <= depth; ++d) {
        const Bracket b = riemann_bracket(doc.oracle, *doc.domain, static_cast<int>(d));
        out += std::to_string(d) + "," + format_double(b.lower) + "," + format_double(b.upper) +
               "," + format_double(b.upper - b.lower) + "\n";
    }
    return out;
}

std::string job_fubini(const JobSpec& job) {
    const StepFunction f = parse_stepfn(need_input(job, "stepfn"));
    const BoxMeasure m = parse_measure(need_input(job, "measure"));
    if (m.kind() != BoxMeasure::Kind::Product)
        throw ContractError("fubini needs a product measure");
    const BoxMeasure& m1 = m.left();
    const BoxMeasure& m2 = m.right();
    std::string out = "order,re,im\n";
    out += "direct," + csv_value(sf_integral(f, m)) + "\n";
    out += "first-then-second," + csv_value(fubini_step(f, m1, m2)) + "\n";
    out += "second-then-first," +
           csv_value(fubini_step(sf_swap_blocks(f, m1.dim()), m2, m1)) + "\n";
    return out;
}

std::string job_jordan(const JobSpec& job) {
    const RegionDoc region = parse_region(need_input(job, "region"));
    if (region.open.empty() || !region.closed)
        throw ContractError("jordan needs both open and closed region entries");
    const long depth = int_param(job, "depth", 8, 0, 20);
    const BoxMeasure m = BoxMeasure::volume(region.closed->dim());
    std::string out = "depth,inner,outer,gap\n";
    for (long d = 0; d <= depth; ++d) {
        const Rational inner = jordan_inner(region.open, static_cast<int>(d), m);
        const Rational outer = jordan_outer(*region.closed, static_cast<int>(d), m);
        out += std::to_string(d) + "," + format_rational(inner) + "," + format_rational(outer) +
               "," + format_rational(outer - inner) + "\n";
    }
    return out;
}

std::string job_stieltjes(const JobSpec& job) {
    const OracleDoc doc = parse_oracle(need_input(job, "oracle"));
    const BoxMeasure m = parse_measure(need_input(job, "measure"));
    if (m.kind() != BoxMeasure::Kind::Stieltjes)
        throw ContractError("stieltjes needs a stieltjes measure");
    const auto [a, b] = closed_bounds(doc);
    const long depth = int_param(job, "depth", 12, 0, 22);
    std::string out = "depth,value,halfwidth\n";
    for (long d = 0; d <= depth; ++d) {
        const Approximation ap = stieltjes_integral(doc.oracle, m.weight(), a, b,
                                                    static_cast<int>(d));
        out += std::to_string(d) + "," + format_double(ap.value) + "," +
               format_double(ap.halfwidth) + "\n";
    }
    return out;
}

std::string job_discrete(const JobSpec& job) {
    const OracleDoc doc = parse_oracle(need_input(job, "oracle"));
    const BoxMeasure m = parse_measure(need_input(job, "measure"));
    const Approximation ap = integrate_discrete(doc.oracle, m, tol_param(job, 0.0));
    return "value,halfwidth\n" + format_double(ap.value) + "," + format_double(ap.halfwidth) +
           "\n";
}

std::string job_lp_norm(const JobSpec& job) {
    const StepFunction f = parse_stepfn(need_input(job, "stepfn"));
    const BoxMeasure m = parse_measure(need_input(job, "measure"));
    const double p = param_or(job, "p", 2.0);
    PExponent pe = PExponent::finite(Rational(2));
    std::string label = "2";
    if (std::isinf(p) && p > 0) {
        pe = PExponent::infinity();
        label = "inf";
    } else if (p > 0 && std::isfinite(p)) {
        pe = PExponent::finite(rational_from_double(p));
        label = format_double(p);
    } else {
        throw ContractError("parameter 'p' must be positive (or inf)");
    }
    return "p,norm\n" + label + "," + format_double(lp_norm(f, pe, m)) + "\n";
}

std::string job_ineq_check(const JobSpec& job) {
    const IneqSuite suite = ineq_suite_from_name(need_input(job, "suite"));
    const long cases = int_param(job, "kmax", 1000, 1, 1000000);
    const SuiteReport r =
        run_ineq_suite(suite, job.seed, static_cast<std::size_t>(cases), tol_param(job));
    std::string out = "case,p,q,lhs,rhs,slack,pass\n";
    for (const SuiteCaseRow& row : r.rows) {
        out += std::to_string(row.index) + "," + row.p_label + "," + row.q_label + "," +
               format_double(row.result.lhs) + "," + format_double(row.result.rhs) + "," +
               format_double(row.result.slack) + "," + (row.pass ? "1" : "0") + "\n";
    }
    return out;
}

std::string job_gram_schmidt(const JobSpec& job) {
    const std::vector<IPElement> xs = parse_elements(need_input(job, "elements"));
    const GramSchmidtResult gs = gram_schmidt(xs);
    const std::vector<IPElement>& es = gs.family.elements;
    std::string out = "i,j,re,im\n";
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            const StepValue v = inner(es[i], es[j]);
            out += std::to_string(i) + "," + std::to_string(j) + "," +
                   format_double(to_double(v.re)) + "," + format_double(to_double(v.im)) + "\n";
        }
    }
    return out;
}

std::string job_fourier(const JobSpec& job) {
    const StepFunction f = parse_stepfn(need_input(job, "stepfn"));
    const long kmax = int_param(job, "kmax", 16, 0, 4096);
    const std::vector<std::complex<double>> cs = fourier_coeffs(f, static_cast<int>(kmax));
    std::string out = "k,re,im\n";
    for (long k = -kmax; k <= kmax; ++k) {
        const std::complex<double>& c = cs[static_cast<std::size_t>(k + kmax)];
        out += std::to_string(k) + "," + format_double(c.real()) + "," +
               format_double(c.imag()) + "\n";
    }
    return out;
}

std::string job_project(const JobSpec& job) {
    const std::vector<IPElement> xs = parse_elements(need_input(job, "elements"));
    if (xs.size() < 2)
        throw ContractError("project needs a target element followed by a family");
    const std::vector<IPElement> family(xs.begin() + 1, xs.end());
    const ProjectionResult pr = project(xs.front(), gram_schmidt(family).family);
    std::string out = "i,re,im,defect\n";
    for (std::size_t i = 0; i < pr.coefficients.size(); ++i) {
        out += std::to_string(i) + "," + format_double(to_double(pr.coefficients[i].re)) + "," +
               format_double(to_double(pr.coefficients[i].im)) + "," +
               format_double(pr.defect) + "\n";
    }
    return out;
}

double sup_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

std::string job_fixpoint(const JobSpec& job) {
    const ContractionSpec spec = parse_contraction(need_input(job, "contraction"));
    const long max_iter = int_param(job, "kmax", 1000, 1, 1000000);
    const BanachResult r =
        banach_iterate(spec, tol_param(job), static_cast<std::size_t>(max_iter));
    std::string out = "n,value,bound,error\n";
    for (std::size_t n = 0; n < r.iterates.size(); ++n) {
        const double value =
            r.iterates[n].size() == 1 ? r.iterates[n][0] : vec_sup_norm(r.iterates[n]);
        out += std::to_string(n) + "," + format_double(value) + "," +
               format_double(r.bounds[n]) + "," +
               format_double(sup_dist(r.iterates[n], r.x_star)) + "\n";
    }
    return out;
}

std::string job_neumann(const JobSpec& job) {
    const Matrix a = parse_matrix(need_input(job, "matrix"));
    const long terms = int_param(job, "kmax", 10, 0, 256);
    const NeumannResult r = neumann_inverse(a, static_cast<std::size_t>(terms), OpNorm::Inf);
    std::string out = "i,j,value,bound,norm\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out += std::to_string(i) + "," + std::to_string(j) + "," +
                   format_double(r.partial_sum.at(i, j)) + "," + format_double(r.bound) + "," +
                   format_double(r.operator_norm) + "\n";
        }
    }
    return out;
}

std::string job_specrad(const JobSpec& job) {
    const Matrix a = parse_matrix(need_input(job, "matrix"));
    const long kmax = int_param(job, "kmax", 200, 1, 5000);
    const SpectralRadiusResult r =
        spectral_radius_seq(a, static_cast<std::size_t>(kmax), OpNorm::Inf);
    std::string out = "k,value,running_inf\n";
    for (std::size_t k = 0; k < r.values.size(); ++k) {
        out += std::to_string(k + 1) + "," + format_double(r.values[k]) + "," +
               format_double(r.running_inf[k]) + "\n";
    }
    return out;
}

std::string job_gauge(const JobSpec& job) {
    const Halfspaces hs = parse_halfspaces(need_input(job, "halfspaces"));
    const std::vector<std::vector<double>> pts = parse_points(need_input(job, "points"));
    std::string out = "point,gauge\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out += std::to_string(i) + "," + format_double(minkowski_gauge(hs, pts[i])) + "\n";
    }
    return out;
}

std::string job_abspoly(const JobSpec& job) {
    const long depth = int_param(job, "depth", 10, 0, 12);
    const AbsPolyGridReport r = abs_poly_grid_report(static_cast<int>(depth));
    std::string out = "n,sup_error,chain_ok\n";
    for (std::size_t n = 0; n < r.sup_errors.size(); ++n) {
        out += std::to_string(n) + "," + format_double(to_double(r.sup_errors[n])) + "," +
               (r.chain_ok ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace

std::string run_job(const JobSpec& job) {
    using Runner = std::string (*)(const JobSpec&);
    static const std::map<std::string, Runner> table = {
        {"integrate", job_integrate}, {"bracket", job_bracket},
        {"fubini", job_fubini},       {"jordan", job_jordan},
        {"stieltjes", job_stieltjes}, {"discrete", job_discrete},
        {"lp-norm", job_lp_norm},     {"ineq-check", job_ineq_check},
        {"gram-schmidt", job_gram_schmidt}, {"fourier", job_fourier},
        {"project", job_project},     {"fixpoint", job_fixpoint},
        {"neumann", job_neumann},     {"specrad", job_specrad},
        {"gauge", job_gauge},         {"abspoly", job_abspoly},
    };
    auto it = table.find(job.subcommand);
    if (it == table.end()) throw ContractError("unknown subcommand '" + job.subcommand + "'");
    return it->second(job);
}

}  // namespace quaderint
