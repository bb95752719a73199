#pragma once

// Textual formats for the engine's objects: deterministic formatting plus
// parsers that report failures as ParseError with "line L, column C: ...".
//
// Scalars
//   rational   7/3, -2, 0.25 (exact decimal), -1.5
//   value      3/2  or complex  (re, im)
//   double     anything strtod accepts and is finite; printed as %.17g
// Geometry
//   interval   [a,b]  ]a,b[  [a,b[  ]a,b]  ]-inf,b]  [a,inf[  ]-inf,inf[  empty
//   quader     interval x interval x ...      or  empty(n)
//   set        quader | quader | ...          or  empty(n)   (disjoint pieces)
// Measures (one expression, nestable)
//   volume(n)
//   dirac(x1, ..., xn)
//   discrete((x, ...): mass, ...)
//   stieltjes(breaks: b1, ...; values: v1, ...; pieces: (a,b), ...)
//     -- pieces are affine a + b*t, one more piece than breaks
//   product(measure, measure)
// Documents (keyword-driven; '#' starts a comment anywhere)
//   stepfn:       stepfn / ambient <quader> / term <value> on <quader> ...
//   measure:      measure <measure-expr>
//   oracle:       oracle <poly(c0,...)|polyprod((c...),(c...))|indicator(<quader>)>
//                 [domain <quader>]
//   elements:     elements / vec(v, ...) / poly(<closed interval>; c0, ...) ...
//   contraction:  contraction affine / matrix n / <n*n doubles> /
//                 offset <n doubles> / start <n doubles>
//                 or: contraction cos / start <double>
//   matrix:       matrix n / <n*n doubles>
//   halfspaces:   halfspaces n / row <n doubles> bound <double> ...
//   points:       points n / <doubles, a multiple of n>
//   region:       region / [open <quader> | <quader> ...] [closed <set>] [svc <stage>]

#include <optional>
#include <string>
#include <vector>

#include "quaderint/hilbert.hpp"
#include "quaderint/integrate.hpp"
#include "quaderint/operators.hpp"

namespace quaderint {

// Rational formatting/parsing of bare "p/q" strings lives in rational.hpp;
// everything here goes through the position-tracking document parser.
std::string format_value(const StepValue& v);
std::string format_double(double v);  // %.17g
std::string format_interval(const Interval& iv);
std::string format_quader(const Quader& q);
std::string format_parkettable(const Parkettable& p);
std::string format_measure(const BoxMeasure& m);

StepValue parse_value(const std::string& text);
Interval parse_interval(const std::string& text);
Quader parse_quader(const std::string& text);
Parkettable parse_parkettable(const std::string& text);

BoxMeasure parse_measure(const std::string& text);
StepFunction parse_stepfn(const std::string& text);

struct OracleDoc {
    BoundedOracle oracle;
    std::string kind;  // "poly", "polyprod", or "indicator"
    std::optional<Quader> domain;
};
OracleDoc parse_oracle(const std::string& text);

std::vector<IPElement> parse_elements(const std::string& text);
ContractionSpec parse_contraction(const std::string& text);
Matrix parse_matrix(const std::string& text);
Halfspaces parse_halfspaces(const std::string& text);
std::vector<std::vector<double>> parse_points(const std::string& text);

struct RegionDoc {
    std::vector<Quader> open;           // open bounded quaders (inner approximations)
    std::optional<Parkettable> closed;  // closed set (outer approximations)
};
RegionDoc parse_region(const std::string& text);

}  // namespace quaderint
