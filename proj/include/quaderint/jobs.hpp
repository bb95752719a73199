#pragma once

// Batch job runner: one call per CLI subcommand, shared by the C API and the
// command-line front end.  Inputs are the structured-text documents from
// io.hpp keyed by slot name; numeric parameters mirror the CLI flags.  The
// result is a CSV table (header row + data rows, '\n' line ends); rationals
// print exactly as p/q and floating-point values as %.17g, so output is
// byte-identical for identical (inputs, params, seed).
//
// Subcommand contracts (slot names in parentheses):
//   integrate   (stepfn, measure)            -> re,im
//   bracket     (oracle w/ domain) depth     -> depth,lower,upper,gap
//   fubini      (stepfn, measure=product)    -> order,re,im
//   jordan      (region) depth               -> depth,inner,outer,gap
//   stieltjes   (oracle w/ domain, measure=stieltjes) depth
//                                            -> depth,value,halfwidth
//   discrete    (oracle, measure=discrete) tol -> value,halfwidth
//   lp-norm     (stepfn, measure) p          -> p,norm
//   ineq-check  (suite) kmax,seed,tol        -> case,p,q,lhs,rhs,slack,pass
//   gram-schmidt(elements)                   -> i,j,re,im
//   fourier     (stepfn) kmax                -> k,re,im
//   project     (elements: target then family) -> i,re,im,defect
//   fixpoint    (contraction) tol,kmax       -> n,value,bound,error
//   neumann     (matrix) kmax                -> i,j,value,bound,norm
//   specrad     (matrix) kmax                -> k,value,running_inf
//   gauge       (halfspaces, points)         -> point,gauge
//   abspoly     depth                        -> n,sup_error,chain_ok
//
// Errors: missing/invalid parameters and precondition violations throw
// ContractError; malformed document text throws ParseError (with position).

#include <cstdint>
#include <map>
#include <string>

namespace quaderint {

struct JobSpec {
    std::string subcommand;
    std::map<std::string, std::string> inputs;  // slot name -> document text
    std::map<std::string, double> params;       // only explicitly-set entries
    std::uint64_t seed = 0;
};

std::string run_job(const JobSpec& job);

}  // namespace quaderint
