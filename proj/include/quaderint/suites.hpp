#pragma once

// Seeded randomized inequality suites.
//
// Generator ("mt64-mod v1"): a single std::mt19937_64 stream seeded with the
// user-supplied seed; every draw maps engine output by modulo reduction.  Both
// the engine sequence and the draw order are fixed, so a (suite, seed, cases)
// triple produces byte-identical reports on every platform.
//
// Each case draws a pair of step functions on the ambient [0, 4[ — a random
// quarter-grid partition with rational values of denominator up to 4 — and the
// suite-specific exponents cycle through a fixed list so a long run covers
// every exponent evenly.

#include <cstdint>
#include <string>
#include <vector>

#include "quaderint/lp.hpp"

namespace quaderint {

enum class IneqSuite { Hoelder, Minkowski, Jensen, QuasiTriangle, Clarkson, ReverseMinkowski };

// CLI spellings: hoelder, minkowski, jensen, quasi-triangle, clarkson,
// reverse-minkowski.  Unknown names throw ContractError.
IneqSuite ineq_suite_from_name(const std::string& name);
std::string ineq_suite_name(IneqSuite suite);

struct SuiteCaseRow {
    std::size_t index = 0;
    std::string p_label;  // exponent used for this case
    std::string q_label;  // conjugate exponent (hoelder) or second exponent (jensen)
    IneqResult result;
    bool pass = false;  // slack >= -tol
};

struct SuiteReport {
    IneqSuite suite = IneqSuite::Hoelder;
    std::uint64_t seed = 0;
    double tol = 0;
    std::size_t failures = 0;
    double min_slack = 0;
    std::vector<SuiteCaseRow> rows;
};

// Runs `cases` seeded random cases; requires cases >= 1 and tol >= 0.
SuiteReport run_ineq_suite(IneqSuite suite, std::uint64_t seed, std::size_t cases, double tol);

// The classical failure of the triangle inequality below p = 1: indicators of
// [0, 1/2] and ]1/2, 1] at p = 1/2 give ||f+g|| = 1 but ||f|| + ||g|| = 1/2.
// slack = rhs - lhs = -1/2 in the (violated) Minkowski orientation.
IneqResult minkowski_failure_example();

}  // namespace quaderint
