#include "quaderint.h"

#include <exception>
#include <new>
#include <string>

#include "quaderint/errors.hpp"
#include "quaderint/jobs.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const char* m) { g_last_error = m; }

}  // namespace

struct qi_job {
    quaderint::JobSpec spec;
    std::string output;
};

extern "C" {

QI_API const char* qi_version(void) { return "1.0.0"; }

QI_API qi_job* qi_job_new(const char* subcommand) {
    qi_job* job = new (std::nothrow) qi_job;
    if (job == nullptr) {
        set_error("allocation failure");
        return nullptr;
    }
    try {
        job->spec.subcommand = subcommand != nullptr ? subcommand : "";
    } catch (const std::exception&) {
        delete job;
        set_error("allocation failure");
        return nullptr;
    }
    g_last_error.clear();
    return job;
}

QI_API void qi_job_free(qi_job* job) { delete job; }

QI_API int qi_job_set_input(qi_job* job, const char* slot, const char* text) {
    if (job == nullptr || slot == nullptr || text == nullptr) {
        set_error("qi_job_set_input: null argument");
        return QI_ERR_CONTRACT;
    }
    try {
        job->spec.inputs[slot] = text;
    } catch (const std::exception&) {
        set_error("allocation failure");
        return QI_ERR_CONTRACT;
    }
    g_last_error.clear();
    return QI_OK;
}

QI_API int qi_job_set_param(qi_job* job, const char* name, double value) {
    if (job == nullptr || name == nullptr) {
        set_error("qi_job_set_param: null argument");
        return QI_ERR_CONTRACT;
    }
    try {
        job->spec.params[name] = value;
    } catch (const std::exception&) {
        set_error("allocation failure");
        return QI_ERR_CONTRACT;
    }
    g_last_error.clear();
    return QI_OK;
}

QI_API int qi_job_set_seed(qi_job* job, uint64_t seed) {
    if (job == nullptr) {
        set_error("qi_job_set_seed: null argument");
        return QI_ERR_CONTRACT;
    }
    job->spec.seed = seed;
    g_last_error.clear();
    return QI_OK;
}

QI_API int qi_job_run(qi_job* job) {
    if (job == nullptr) {
        set_error("qi_job_run: null argument");
        return QI_ERR_CONTRACT;
    }
    try {
        job->output = quaderint::run_job(job->spec);
        g_last_error.clear();
        return QI_OK;
    } catch (const quaderint::ParseError& e) {
        job->output.clear();
        g_last_error = e.what();
        return QI_ERR_PARSE;
    } catch (const std::exception& e) {
        job->output.clear();
        g_last_error = e.what();
        return QI_ERR_CONTRACT;
    }
}

QI_API const char* qi_job_output(const qi_job* job) {
    return job != nullptr ? job->output.c_str() : "";
}

QI_API const char* qi_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
