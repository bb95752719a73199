#include "quaderint/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "quaderint/errors.hpp"

namespace quaderint {

namespace {

// "mt64-mod v1" — see suites.hpp for the determinism contract.
struct Gen {
    std::mt19937_64 eng;
    explicit Gen(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

Rational rand_rat(Gen& g, long lo, long hi) {
    return Rational(g.next_int(lo, hi), g.next_int(1, 4));
}

StepValue rand_value(Gen& g, bool complex_ok, bool nonneg) {
    Rational re = rand_rat(g, nonneg ? 0 : -8, 8);
    if (complex_ok && g.next(2) == 1) return {std::move(re), rand_rat(g, -8, 8)};
    return StepValue(std::move(re));
}

// A pair of step functions over [0, 4[ on a shared random quarter-grid.
std::pair<StepFunction, StepFunction> rand_pair(Gen& g, bool complex_ok, bool nonneg) {
    const std::size_t cut_count = 1 + g.next(5);
    std::set<long> cuts;
    while (cuts.size() < cut_count) cuts.insert(g.next_int(1, 15));
    std::vector<Rational> edges{Rational(0)};
    for (long k : cuts) edges.emplace_back(k, 4);
    edges.emplace_back(4);

    std::vector<StepFunction::Term> tf, tg;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const Quader cell({Interval::right_open(edges[i], edges[i + 1])});
        if (g.next(4) != 0) tf.emplace_back(cell, rand_value(g, complex_ok, nonneg));
        if (g.next(4) != 0) tg.emplace_back(cell, rand_value(g, complex_ok, nonneg));
    }
    const Quader ambient({Interval::right_open(Rational(0), Rational(4))});
    return {StepFunction(ambient, std::move(tf)), StepFunction(ambient, std::move(tg))};
}

std::vector<double> rand_sequence(Gen& g) {
    std::vector<double> xs(1 + g.next(8));
    for (double& x : xs) x = static_cast<double>(g.next_int(-32, 32)) / 8.0;
    return xs;
}

struct LabeledExponent {
    PExponent p;
    const char* label;
};

const LabeledExponent kConjugatePairs[][2] = {
    {{PExponent::finite(Rational(1)), "1"}, {PExponent::infinity(), "inf"}},
    {{PExponent::finite(Rational(3, 2)), "3/2"}, {PExponent::finite(Rational(3)), "3"}},
    {{PExponent::finite(Rational(2)), "2"}, {PExponent::finite(Rational(2)), "2"}},
    {{PExponent::finite(Rational(3)), "3"}, {PExponent::finite(Rational(3, 2)), "3/2"}},
    {{PExponent::infinity(), "inf"}, {PExponent::finite(Rational(1)), "1"}},
};

const LabeledExponent kMinkowskiExponents[] = {
    {PExponent::finite(Rational(1)), "1"},       {PExponent::finite(Rational(3, 2)), "3/2"},
    {PExponent::finite(Rational(2)), "2"},       {PExponent::finite(Rational(3)), "3"},
    {PExponent::infinity(), "inf"},
};

struct LabeledRational {
    Rational p;
    const char* label;
};

const LabeledRational kClarksonExponents[] = {
    {Rational(3, 2), "3/2"}, {Rational(2), "2"}, {Rational(3), "3"}};

const LabeledRational kQuasiExponents[] = {
    {Rational(1, 4), "1/4"}, {Rational(1, 2), "1/2"}, {Rational(3, 4), "3/4"}};

// (p, p_tilde) pairs with p <= p_tilde for the sequence-space comparison.
const std::pair<LabeledRational, LabeledExponent> kJensenPairs[] = {
    {{Rational(1, 2), "1/2"}, {PExponent::finite(Rational(1)), "1"}},
    {{Rational(1), "1"}, {PExponent::finite(Rational(2)), "2"}},
    {{Rational(2), "2"}, {PExponent::infinity(), "inf"}},
    {{Rational(3, 2), "3/2"}, {PExponent::finite(Rational(3)), "3"}},
    {{Rational(1), "1"}, {PExponent::finite(Rational(1)), "1"}},
};

}  // namespace

IneqSuite ineq_suite_from_name(const std::string& name) {
    if (name == "hoelder") return IneqSuite::Hoelder;
    if (name == "minkowski") return IneqSuite::Minkowski;
    if (name == "jensen") return IneqSuite::Jensen;
    if (name == "quasi-triangle") return IneqSuite::QuasiTriangle;
    if (name == "clarkson") return IneqSuite::Clarkson;
    if (name == "reverse-minkowski") return IneqSuite::ReverseMinkowski;
    throw ContractError("unknown inequality suite '" + name + "'");
}

std::string ineq_suite_name(IneqSuite suite) {
    switch (suite) {
        case IneqSuite::Hoelder: return "hoelder";
        case IneqSuite::Minkowski: return "minkowski";
        case IneqSuite::Jensen: return "jensen";
        case IneqSuite::QuasiTriangle: return "quasi-triangle";
        case IneqSuite::Clarkson: return "clarkson";
        case IneqSuite::ReverseMinkowski: return "reverse-minkowski";
    }
    throw ContractError("unknown inequality suite");
}

SuiteReport run_ineq_suite(IneqSuite suite, std::uint64_t seed, std::size_t cases, double tol) {
    if (cases == 0) throw ContractError("suite needs at least one case");
    if (!(tol >= 0)) throw ContractError("suite tolerance must be nonnegative");

    Gen g(seed);
    const BoxMeasure mu = BoxMeasure::volume(1);
    SuiteReport report;
    report.suite = suite;
    report.seed = seed;
    report.tol = tol;
    report.rows.reserve(cases);

    for (std::size_t i = 0; i < cases; ++i) {
        SuiteCaseRow row;
        row.index = i;
        switch (suite) {
            case IneqSuite::Hoelder: {
                const auto& pair = kConjugatePairs[i % 5];
                auto [f, gfn] = rand_pair(g, /*complex_ok=*/true, /*nonneg=*/false);
                row.p_label = pair[0].label;
                row.q_label = pair[1].label;
                row.result = check_hoelder(f, gfn, pair[0].p, pair[1].p, mu);
                break;
            }
            case IneqSuite::Minkowski: {
                const auto& pe = kMinkowskiExponents[i % 5];
                auto [f, gfn] = rand_pair(g, /*complex_ok=*/true, /*nonneg=*/false);
                row.p_label = pe.label;
                row.result = check_minkowski(f, gfn, pe.p, mu);
                break;
            }
            case IneqSuite::Jensen: {
                const auto& [p, pt] = kJensenPairs[i % 5];
                row.p_label = p.label;
                row.q_label = pt.label;
                row.result = check_jensen(rand_sequence(g), p.p, pt.p);
                break;
            }
            case IneqSuite::QuasiTriangle: {
                const auto& pe = kQuasiExponents[i % 3];
                auto [f, gfn] = rand_pair(g, /*complex_ok=*/false, /*nonneg=*/false);
                row.p_label = pe.label;
                row.result = check_quasi_triangle(f, gfn, pe.p, mu);
                break;
            }
            case IneqSuite::Clarkson: {
                const auto& pe = kClarksonExponents[i % 3];
                auto [f, gfn] = rand_pair(g, /*complex_ok=*/false, /*nonneg=*/false);
                row.p_label = pe.label;
                row.result = check_clarkson(f, gfn, pe.p, mu);
                break;
            }
            case IneqSuite::ReverseMinkowski: {
                auto [f, gfn] = rand_pair(g, /*complex_ok=*/false, /*nonneg=*/true);
                row.p_label = "1/2";
                row.result = check_reverse_minkowski(f, gfn, Rational(1, 2), mu);
                break;
            }
        }
        row.pass = row.result.slack >= -tol;
        if (!row.pass) ++report.failures;
        report.min_slack =
            report.rows.empty() ? row.result.slack : std::min(report.min_slack, row.result.slack);
        report.rows.push_back(std::move(row));
    }
    return report;
}

IneqResult minkowski_failure_example() {
    const Quader ambient({Interval::closed(Rational(0), Rational(1))});
    const StepFunction f =
        StepFunction::indicator(Quader({Interval::closed(Rational(0), Rational(1, 2))}), ambient);
    const StepFunction g = StepFunction::indicator(
        Quader({Interval::left_open(Rational(1, 2), Rational(1))}), ambient);
    const BoxMeasure mu = BoxMeasure::volume(1);
    const PExponent half = PExponent::finite(Rational(1, 2));
    IneqResult out;
    out.lhs = lp_norm(sf_add(f, g), half, mu);
    out.rhs = lp_norm(f, half, mu) + lp_norm(g, half, mu);
    out.slack = out.rhs - out.lhs;
    return out;
}

}  // namespace quaderint
