// quaderint command-line front end.
//
// Thin wrapper over the C API (quaderint.h): each subcommand reads its input
// documents from files, forwards numeric flags, runs one job, and writes the
// CSV result to stdout or --out. Exit codes: 0 ok, 1 contract violation,
// 2 parse error (including bad command lines).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quaderint.h"

namespace {

struct Options {
    long long depth = 0, kmax = 0;
    bool depth_set = false, kmax_set = false;
    std::string p, q, tol;  // parsed by strtod so "inf" works for --p/--q
    unsigned long long seed = 0;
    std::string out;
};

// (subcommand, input slots taken as positional file paths)
struct SubSpec {
    const char* name;
    const char* description;
    std::vector<const char*> slots;
};

const SubSpec kSubcommands[] = {
    {"integrate", "Exact integral of a step function against a box measure",
     {"stepfn", "measure"}},
    {"bracket", "Riemann bracket table for a bounded oracle on its domain", {"oracle"}},
    {"fubini", "Iterated vs direct product integrals of a step function",
     {"stepfn", "measure"}},
    {"jordan", "Inner/outer Jordan content table for a region", {"region"}},
    {"stieltjes", "Stieltjes integral bracket table over the oracle domain",
     {"oracle", "measure"}},
    {"discrete", "Exact weighted point sum against a discrete measure", {"oracle", "measure"}},
    {"lp-norm", "Lp seminorm of a step function (--p, inf allowed)", {"stepfn", "measure"}},
    {"ineq-check", "Seeded randomized inequality suite (hoelder, minkowski, jensen, "
                   "quasi-triangle, clarkson, reverse-minkowski)",
     {"suite"}},
    {"gram-schmidt", "Gram matrix of the orthonormalized element family", {"elements"}},
    {"fourier", "Fourier coefficients of a step function on [-pi, pi]", {"stepfn"}},
    {"project", "Projection of the first element onto the span of the rest", {"elements"}},
    {"fixpoint", "Banach iteration table with a-priori bounds", {"contraction"}},
    {"neumann", "Neumann partial sum with remainder bound", {"matrix"}},
    {"specrad", "Spectral radius sequence with running infimum", {"matrix"}},
    {"gauge", "Minkowski gauge of points against a halfspace body",
     {"halfspaces", "points"}},
    {"abspoly", "Sup errors of the |t| polynomial recursion on [-1, 1]", {}},
};

bool read_file(const std::string& path, std::string& text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return in.good() || in.eof();
}

// strtod over the full token; accepts "inf". Returns false on junk.
bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaderint: exact box measures, step-function calculus, and "
                 "error-bounded iterative schemes"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> positional;
    const SubSpec* chosen = nullptr;

    std::vector<std::shared_ptr<std::vector<std::string>>> storage;
    for (const SubSpec& spec : kSubcommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        auto values = std::make_shared<std::vector<std::string>>(spec.slots.size());
        storage.push_back(values);
        for (std::size_t i = 0; i < spec.slots.size(); ++i) {
            const bool is_file = std::string(spec.slots[i]) != "suite";
            sub->add_option(spec.slots[i], (*values)[i],
                            is_file ? std::string("path to the ") + spec.slots[i] + " document"
                                    : std::string("inequality suite name"))
                ->required();
        }
        sub->add_option("--depth", opt.depth, "refinement depth");
        sub->add_option("--kmax", opt.kmax, "iteration/case count");
        sub->add_option("--p", opt.p, "exponent p (inf allowed)");
        sub->add_option("--q", opt.q, "exponent q (inf allowed)");
        sub->add_option("--tol", opt.tol, "tolerance (default 1e-9 or QUADERINT_TOL)");
        sub->add_option("--seed", opt.seed, "generator seed (default 0)");
        sub->add_option("--out", opt.out, "write CSV here instead of stdout");
        sub->callback([&chosen, &opt, sub, &spec, &positional, values]() {
            chosen = &spec;
            opt.depth_set = sub->count("--depth") > 0;
            opt.kmax_set = sub->count("--kmax") > 0;
            positional = *values;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (chosen == nullptr) {
        std::fprintf(stderr, "error: no subcommand selected\n");
        return 2;
    }

    qi_job* job = qi_job_new(chosen->name);
    if (job == nullptr) {
        std::fprintf(stderr, "error: %s\n", qi_last_error());
        return 1;
    }

    int rc = QI_OK;
    for (std::size_t i = 0; i < chosen->slots.size() && rc == QI_OK; ++i) {
        const std::string slot = chosen->slots[i];
        if (slot == "suite") {
            rc = qi_job_set_input(job, slot.c_str(), positional[i].c_str());
            continue;
        }
        std::string text;
        if (!read_file(positional[i], text)) {
            std::fprintf(stderr, "error: cannot read input file '%s'\n", positional[i].c_str());
            qi_job_free(job);
            return 1;
        }
        rc = qi_job_set_input(job, slot.c_str(), text.c_str());
    }

    if (rc == QI_OK && opt.depth_set)
        rc = qi_job_set_param(job, "depth", static_cast<double>(opt.depth));
    if (rc == QI_OK && opt.kmax_set)
        rc = qi_job_set_param(job, "kmax", static_cast<double>(opt.kmax));
    for (const auto& [name, raw] : {std::pair<const char*, const std::string&>{"p", opt.p},
                                    {"q", opt.q},
                                    {"tol", opt.tol}}) {
        if (rc != QI_OK || raw.empty()) continue;
        double v = 0;
        if (!parse_number(raw, v)) {
            std::fprintf(stderr, "error: --%s: '%s' is not a number\n", name, raw.c_str());
            qi_job_free(job);
            return 2;
        }
        rc = qi_job_set_param(job, name, v);
    }
    if (rc == QI_OK && opt.tol.empty()) {
        if (const char* env = std::getenv("QUADERINT_TOL"); env != nullptr && env[0] != '\0') {
            double v = 0;
            if (!parse_number(env, v)) {
                std::fprintf(stderr, "error: QUADERINT_TOL: '%s' is not a number\n", env);
                qi_job_free(job);
                return 2;
            }
            rc = qi_job_set_param(job, "tol", v);
        }
    }
    if (rc == QI_OK) rc = qi_job_set_seed(job, opt.seed);

    if (rc == QI_OK) rc = qi_job_run(job);
    if (rc != QI_OK) {
        std::fprintf(stderr, "error: %s\n", qi_last_error());
        qi_job_free(job);
        return rc;
    }

    const char* csv = qi_job_output(job);
    if (!opt.out.empty()) {
        std::ofstream out(opt.out, std::ios::binary);
        out << csv;
        if (!out.good()) {
            std::fprintf(stderr, "error: cannot write output file '%s'\n", opt.out.c_str());
            qi_job_free(job);
            return 1;
        }
    } else {
        std::fputs(csv, stdout);
    }
    qi_job_free(job);
    return 0;
}
