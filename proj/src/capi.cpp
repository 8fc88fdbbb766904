#include "recollement/recollement.h"

#include "recollement/builtin.hpp"
#include "recollement/error.hpp"
#include "recollement/parse.hpp"
#include "recollement/report.hpp"
#include "recollement/runner.hpp"

#include <string>

struct rcl_algebra {
    recoll::AlgebraPtr ptr;
    std::string source; // builtin name or path; echoed into report configs
};

struct rcl_options {
    recoll::RunConfig cfg;
};

struct rcl_report {
    recoll::Report report;
    std::string json;
};

namespace {

thread_local std::string g_last_error;

rcl_status status_of(recoll::ErrorCode c) {
    using EC = recoll::ErrorCode;
    switch (c) {
        case EC::BadArgument: return RCL_ERR_BAD_ARGUMENT;
        case EC::NotPrime: return RCL_ERR_NOT_PRIME;
        case EC::NonAssociative: return RCL_ERR_NON_ASSOCIATIVE;
        case EC::BadUnit: return RCL_ERR_BAD_UNIT;
        case EC::NotFiniteDimensional: return RCL_ERR_NOT_FINITE_DIMENSIONAL;
        case EC::CharacteristicTooSmall: return RCL_ERR_CHARACTERISTIC_TOO_SMALL;
        case EC::BudgetExceeded: return RCL_ERR_BUDGET_EXCEEDED;
        case EC::AlgebraMismatch: return RCL_ERR_ALGEBRA_MISMATCH;
        case EC::NotIdempotent: return RCL_ERR_NOT_IDEMPOTENT;
        case EC::NotAnIdeal: return RCL_ERR_NOT_AN_IDEAL;
        case EC::NotIdempotentIdeal: return RCL_ERR_NOT_IDEMPOTENT_IDEAL;
        case EC::WrongCategory: return RCL_ERR_WRONG_CATEGORY;
        case EC::NoSplitSurjection: return RCL_ERR_NO_SPLIT_SURJECTION;
        case EC::InternalInconsistency: return RCL_ERR_INTERNAL_INCONSISTENCY;
        case EC::ParseError: return RCL_ERR_PARSE;
        case EC::NotFound: return RCL_ERR_NOT_FOUND;
        case EC::Io: return RCL_ERR_IO;
    }
    return RCL_ERR_UNKNOWN;
}

template <typename F>
rcl_status guarded(F&& f) {
    try {
        f();
        return RCL_OK;
    } catch (const recoll::Error& e) {
        g_last_error = e.what();
        if (!e.detail().empty()) g_last_error += " | " + e.detail();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RCL_ERR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown error";
        return RCL_ERR_UNKNOWN;
    }
}

} // namespace

extern "C" {

const char* rcl_version(void) { return recoll::kToolVersion; }

const char* rcl_last_error(void) { return g_last_error.c_str(); }

size_t rcl_builtin_count(void) { return recoll::builtin_names().size(); }

const char* rcl_builtin_name(size_t index) {
    const auto& names = recoll::builtin_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

rcl_status rcl_algebra_builtin(const char* name, rcl_algebra** out) {
    if (!name || !out) {
        g_last_error = "null argument";
        return RCL_ERR_BAD_ARGUMENT;
    }
    return guarded([&] {
        *out = new rcl_algebra{recoll::builtin_algebra(name), name};
    });
}

rcl_status rcl_algebra_from_file(const char* path, rcl_algebra** out) {
    if (!path || !out) {
        g_last_error = "null argument";
        return RCL_ERR_BAD_ARGUMENT;
    }
    return guarded([&] {
        *out = new rcl_algebra{recoll::load_algebra_file(path), path};
    });
}

rcl_status rcl_algebra_from_text(const char* document, rcl_algebra** out) {
    if (!document || !out) {
        g_last_error = "null argument";
        return RCL_ERR_BAD_ARGUMENT;
    }
    return guarded([&] {
        *out = new rcl_algebra{recoll::parse_algebra_text(document), "<text>"};
    });
}

void rcl_algebra_free(rcl_algebra* a) { delete a; }

int rcl_algebra_dim(const rcl_algebra* a) {
    return a ? static_cast<int>(a->ptr->dim()) : -1;
}

int rcl_algebra_characteristic(const rcl_algebra* a) {
    return a ? static_cast<int>(a->ptr->p()) : -1;
}

const char* rcl_algebra_basis_label(const rcl_algebra* a, size_t index) {
    if (!a || index >= a->ptr->dim()) return nullptr;
    return a->ptr->labels()[index].c_str();
}

rcl_options* rcl_options_new(void) { return new rcl_options{}; }

void rcl_options_free(rcl_options* o) { delete o; }

rcl_status rcl_options_set_idempotent(rcl_options* o, const char* expr) {
    if (!o || !expr) return RCL_ERR_BAD_ARGUMENT;
    o->cfg.idempotent = expr;
    return RCL_OK;
}

rcl_status rcl_options_set_ideal(rcl_options* o, const char* generator_list) {
    if (!o || !generator_list) return RCL_ERR_BAD_ARGUMENT;
    o->cfg.ideal = generator_list;
    return RCL_OK;
}

rcl_status rcl_options_set_dim_bound(rcl_options* o, int dim_bound) {
    if (!o || dim_bound < 0) return RCL_ERR_BAD_ARGUMENT;
    o->cfg.dim_bound = static_cast<std::size_t>(dim_bound);
    return RCL_OK;
}

rcl_status rcl_options_set_seed(rcl_options* o, uint64_t seed) {
    if (!o) return RCL_ERR_BAD_ARGUMENT;
    o->cfg.seed = seed;
    return RCL_OK;
}

rcl_status rcl_options_set_mode(rcl_options* o, const char* mode) {
    if (!o || !mode) return RCL_ERR_BAD_ARGUMENT;
    std::string m = mode;
    if (m != "brute" && m != "vertex") {
        g_last_error = "mode must be 'brute' or 'vertex'";
        return RCL_ERR_BAD_ARGUMENT;
    }
    o->cfg.mode = m;
    return RCL_OK;
}

rcl_status rcl_run(const rcl_algebra* a, const char* command,
                   const rcl_options* options, rcl_report** out) {
    if (!a || !command || !out) {
        g_last_error = "null argument";
        return RCL_ERR_BAD_ARGUMENT;
    }
    return guarded([&] {
        recoll::RunConfig cfg = options ? options->cfg : recoll::RunConfig{};
        cfg.algebra = a->source;
        recoll::Report rep = recoll::run_command(command, a->ptr, cfg);
        auto* r = new rcl_report{std::move(rep), {}};
        r->json = r->report.to_string();
        *out = r;
    });
}

const char* rcl_report_json(const rcl_report* r) {
    return r ? r->json.c_str() : nullptr;
}

size_t rcl_report_check_count(const rcl_report* r) {
    return r ? r->report.checks.size() : 0;
}

size_t rcl_report_failed_count(const rcl_report* r) {
    return r ? r->report.failed_count() : 0;
}

const char* rcl_report_check_name(const rcl_report* r, size_t index) {
    if (!r || index >= r->report.checks.size()) return nullptr;
    return r->report.checks[index].name.c_str();
}

const char* rcl_report_check_claim(const rcl_report* r, size_t index) {
    if (!r || index >= r->report.checks.size()) return nullptr;
    return r->report.checks[index].claim.c_str();
}

int rcl_report_check_passed(const rcl_report* r, size_t index) {
    if (!r || index >= r->report.checks.size()) return -1;
    return r->report.checks[index].pass ? 1 : 0;
}

void rcl_report_free(rcl_report* r) { delete r; }

} // extern "C"
