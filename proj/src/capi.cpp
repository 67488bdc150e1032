#include "rotlat/rotlat.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "rotlat/constructions.hpp"
#include "rotlat/error.hpp"
#include "rotlat/metrics.hpp"
#include "rotlat/verify.hpp"

#ifndef ROTLAT_VERSION
#define ROTLAT_VERSION "0.0.0"
#endif

struct rotlat_lattice {
    rotlat::RotatedLattice lattice;
    std::string alpha;
    std::string det;
    std::vector<std::string> gram;  // row-major
};

struct rotlat_metrics {
    rotlat::MetricsReport report;
    std::string strings[7];
};

struct rotlat_verify_report {
    rotlat::VerifyReport report;
    std::vector<std::string> lines;
};

namespace {

thread_local std::string last_error;
thread_local std::string scratch;

rotlat_status status_of(rotlat::ErrorCode code) {
    using rotlat::ErrorCode;
    switch (code) {
        case ErrorCode::UnsupportedConductor: return ROTLAT_E_UNSUPPORTED_CONDUCTOR;
        case ErrorCode::BadParam: return ROTLAT_E_BAD_PARAM;
        case ErrorCode::ParamsMismatch: return ROTLAT_E_PARAMS_MISMATCH;
        case ErrorCode::ZeroElement: return ROTLAT_E_ZERO_ELEMENT;
        case ErrorCode::SingularBasis: return ROTLAT_E_SINGULAR_BASIS;
        case ErrorCode::ZeroGenerator: return ROTLAT_E_ZERO_GENERATOR;
        case ErrorCode::NotTotallyPositive: return ROTLAT_E_NOT_TOTALLY_POSITIVE;
        case ErrorCode::NonIntegralGram: return ROTLAT_E_NON_INTEGRAL_GRAM;
        case ErrorCode::UncertifiedMinimum: return ROTLAT_E_UNCERTIFIED_MINIMUM;
        case ErrorCode::InvariantViolation: return ROTLAT_E_INVARIANT_VIOLATION;
        case ErrorCode::InvalidArgument: return ROTLAT_E_INVALID_ARGUMENT;
    }
    return ROTLAT_E_INTERNAL;
}

rotlat_status fail(rotlat_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
rotlat_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return ROTLAT_OK;
    } catch (const rotlat::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(ROTLAT_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ROTLAT_E_INTERNAL, e.what());
    }
}

bool to_family(rotlat_family f, rotlat::Family& out) {
    switch (f) {
        case ROTLAT_FAMILY_D_POW2_A: out = rotlat::Family::DTwoPowerA; return true;
        case ROTLAT_FAMILY_D_POW2_B: out = rotlat::Family::DTwoPowerB; return true;
        case ROTLAT_FAMILY_D_PRIME: out = rotlat::Family::DPrime; return true;
        case ROTLAT_FAMILY_Z_POW2: out = rotlat::Family::ZTwoPower; return true;
        case ROTLAT_FAMILY_Z_PRIME: out = rotlat::Family::ZPrime; return true;
    }
    return false;
}

rotlat_family from_family(rotlat::Family f) {
    switch (f) {
        case rotlat::Family::DTwoPowerA: return ROTLAT_FAMILY_D_POW2_A;
        case rotlat::Family::DTwoPowerB: return ROTLAT_FAMILY_D_POW2_B;
        case rotlat::Family::DPrime: return ROTLAT_FAMILY_D_PRIME;
        case rotlat::Family::ZTwoPower: return ROTLAT_FAMILY_Z_POW2;
        case rotlat::Family::ZPrime: return ROTLAT_FAMILY_Z_PRIME;
        case rotlat::Family::Custom: break;
    }
    return static_cast<rotlat_family>(0);
}

void copy_text(char* dst, std::size_t cap, const std::string& src) {
    if (cap == 0) return;
    const std::size_t len = std::min(cap - 1, src.size());
    std::memcpy(dst, src.data(), len);
    dst[len] = '\0';
}

}  // namespace

extern "C" {

const char* rotlat_version(void) { return ROTLAT_VERSION; }

const char* rotlat_status_string(rotlat_status status) {
    switch (status) {
        case ROTLAT_OK: return "Ok";
        case ROTLAT_E_UNSUPPORTED_CONDUCTOR: return "UnsupportedConductor";
        case ROTLAT_E_BAD_PARAM: return "BadParam";
        case ROTLAT_E_PARAMS_MISMATCH: return "ParamsMismatch";
        case ROTLAT_E_ZERO_ELEMENT: return "ZeroElement";
        case ROTLAT_E_SINGULAR_BASIS: return "SingularBasis";
        case ROTLAT_E_ZERO_GENERATOR: return "ZeroGenerator";
        case ROTLAT_E_NOT_TOTALLY_POSITIVE: return "NotTotallyPositive";
        case ROTLAT_E_NON_INTEGRAL_GRAM: return "NonIntegralGram";
        case ROTLAT_E_UNCERTIFIED_MINIMUM: return "UncertifiedMinimum";
        case ROTLAT_E_INVARIANT_VIOLATION: return "InvariantViolation";
        case ROTLAT_E_INVALID_ARGUMENT: return "InvalidArgument";
        case ROTLAT_E_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* rotlat_last_error(void) { return last_error.c_str(); }

rotlat_status rotlat_family_from_name(const char* name, rotlat_family* out) {
    if (name == nullptr || out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    const auto f = rotlat::family_from_name(name);
    if (!f) return fail(ROTLAT_E_BAD_PARAM, std::string("unknown family '") + name + "'");
    *out = from_family(*f);
    last_error.clear();
    return ROTLAT_OK;
}

const char* rotlat_family_name(rotlat_family family) {
    rotlat::Family f;
    if (!to_family(family, f)) return "";
    return rotlat::family_name(f).data();
}

rotlat_status rotlat_field_degree(int m, int* out) {
    if (out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = rotlat::make_params(m).n; });
}

rotlat_status rotlat_field_discriminant(int m, const char** out) {
    if (out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        scratch = rotlat::discriminant(rotlat::make_params(m)).get_str();
        *out = scratch.c_str();
    });
}

rotlat_status rotlat_lattice_create(rotlat_family family, int param, rotlat_lattice** out) {
    if (out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    rotlat::Family f;
    if (!to_family(family, f)) return fail(ROTLAT_E_BAD_PARAM, "unknown family");
    return guarded([&] {
        auto* h = new rotlat_lattice{rotlat::construct(f, param), {}, {}, {}};
        h->alpha = h->lattice.form().alpha().to_string();
        h->det = rotlat::determinant(h->lattice.gram()).get_str();
        const auto n = static_cast<std::size_t>(h->lattice.dim());
        h->gram.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h->gram.push_back(h->lattice.gram()(i, j).get_str());
        *out = h;
    });
}

void rotlat_lattice_destroy(rotlat_lattice* lattice) { delete lattice; }

int rotlat_lattice_dim(const rotlat_lattice* lattice) { return lattice ? lattice->lattice.dim() : 0; }

int rotlat_lattice_conductor(const rotlat_lattice* lattice) {
    return lattice ? lattice->lattice.params().m : 0;
}

long rotlat_lattice_scale(const rotlat_lattice* lattice) {
    return lattice ? lattice->lattice.form().scale() : 0;
}

const char* rotlat_lattice_alpha(const rotlat_lattice* lattice) {
    return lattice ? lattice->alpha.c_str() : "";
}

rotlat_status rotlat_lattice_generator(const rotlat_lattice* lattice, double* out, size_t len) {
    if (lattice == nullptr || out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    const rotlat::RealMatrix& g = lattice->lattice.generator();
    if (len < g.rows * g.cols) return fail(ROTLAT_E_INVALID_ARGUMENT, "output buffer too small");
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) out[i * g.cols + j] = g(i, j);
    last_error.clear();
    return ROTLAT_OK;
}

rotlat_status rotlat_lattice_gram_entry(const rotlat_lattice* lattice, size_t i, size_t j,
                                        const char** out) {
    if (lattice == nullptr || out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    const auto n = static_cast<std::size_t>(lattice->lattice.dim());
    if (i >= n || j >= n) return fail(ROTLAT_E_INVALID_ARGUMENT, "gram index out of range");
    *out = lattice->gram[i * n + j].c_str();
    last_error.clear();
    return ROTLAT_OK;
}

const char* rotlat_lattice_gram_det(const rotlat_lattice* lattice) {
    return lattice ? lattice->det.c_str() : "";
}

rotlat_status rotlat_metrics_compute(const rotlat_lattice* lattice, int coeff_bound, rotlat_metrics** out) {
    if (lattice == nullptr || out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        const int bound = coeff_bound > 0 ? coeff_bound : rotlat::default_coeff_bound(lattice->lattice.dim());
        auto* h = new rotlat_metrics{rotlat::compute_metrics(lattice->lattice, bound), {}};
        const auto& r = h->report;
        h->strings[ROTLAT_METRIC_DET] = r.det.get_str();
        h->strings[ROTLAT_METRIC_MIN_NORM_SQ] = r.min_norm_sq.get_str();
        h->strings[ROTLAT_METRIC_ALPHA_NORM] = r.alpha_norm.get_str();
        h->strings[ROTLAT_METRIC_MIN_ALGEBRAIC_NORM] = r.min_algebraic_norm.get_str();
        h->strings[ROTLAT_METRIC_D_P_MIN_SQ] = r.d_p_min_sq.get_str();
        h->strings[ROTLAT_METRIC_D_P_REL_SQ] = r.d_p_rel_sq.get_str();
        h->strings[ROTLAT_METRIC_D_P_REL_EXACT] = r.d_p_rel_exact.to_string();
        *out = h;
    });
}

void rotlat_metrics_destroy(rotlat_metrics* metrics) { delete metrics; }

rotlat_status rotlat_metrics_get(const rotlat_metrics* metrics, rotlat_metrics_values* out) {
    if (metrics == nullptr || out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    const auto& r = metrics->report;
    out->family = from_family(r.family);
    out->param = r.param;
    out->n = r.n;
    out->coeff_bound = r.coeff_bound;
    out->d_p_min = r.d_p_min;
    out->d_p_rel = r.d_p_rel;
    out->d_p_rel_log2 = r.d_p_rel_log2;
    out->d_p_rel_nth_root = r.d_p_rel_nth_root;
    out->center_density = r.center_density;
    out->diversity_ok = r.diversity_ok ? 1 : 0;
    out->diversity_min_coordinate = r.diversity_min_coordinate;
    last_error.clear();
    return ROTLAT_OK;
}

const char* rotlat_metrics_string(const rotlat_metrics* metrics, rotlat_metrics_field field) {
    if (metrics == nullptr || field < ROTLAT_METRIC_DET || field > ROTLAT_METRIC_D_P_REL_EXACT) return "";
    return metrics->strings[field].c_str();
}

rotlat_status rotlat_verify_run(rotlat_family family, int param, int coeff_bound, rotlat_verify_report** out) {
    if (out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    rotlat::Family f;
    if (!to_family(family, f)) return fail(ROTLAT_E_BAD_PARAM, "unknown family");
    return guarded([&] {
        rotlat::check_family_param(f, param);
        const int n = rotlat::is_two_power_family(f) ? (1 << (param - 2)) : (param - 1) / 2;
        const int bound = coeff_bound > 0 ? coeff_bound : rotlat::default_coeff_bound(n);
        auto* h = new rotlat_verify_report{rotlat::verify(f, param, bound), {}};
        for (const auto& c : h->report.checks) h->lines.push_back(c.line());
        *out = h;
    });
}

void rotlat_verify_destroy(rotlat_verify_report* report) { delete report; }

size_t rotlat_verify_count(const rotlat_verify_report* report) {
    return report ? report->report.checks.size() : 0;
}

rotlat_status rotlat_verify_check(const rotlat_verify_report* report, size_t i, rotlat_check* out) {
    if (report == nullptr || out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    if (i >= report->report.checks.size()) return fail(ROTLAT_E_INVALID_ARGUMENT, "check index out of range");
    const auto& c = report->report.checks[i];
    out->name = c.name.c_str();
    out->observed = c.observed.c_str();
    out->expected = c.expected.c_str();
    out->line = report->lines[i].c_str();
    out->passed = c.passed ? 1 : 0;
    last_error.clear();
    return ROTLAT_OK;
}

int rotlat_verify_all_passed(const rotlat_verify_report* report) {
    return report && report->report.all_passed() ? 1 : 0;
}

int rotlat_table_param_allowed(int id, int param) { return rotlat::table_param_allowed(id, param) ? 1 : 0; }

size_t rotlat_table_default_params(int id, int* out, size_t cap) {
    if (id < 1 || id > 3) return 0;
    const auto params = rotlat::table_default_params(id);
    for (std::size_t i = 0; i < params.size() && i < cap && out != nullptr; ++i) out[i] = params[i];
    return params.size();
}

rotlat_status rotlat_table_row_compute(int id, int param, rotlat_table_row* out) {
    if (out == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const rotlat::TableRow row = rotlat::table_row(id, param);
        *out = rotlat_table_row{};
        out->param = row.param;
        out->n = row.n;
        for (std::size_t k = 0; k < 4; ++k) out->values[k] = row.values[k];
        copy_text(out->alpha_norm, sizeof out->alpha_norm, id == 1 ? row.alpha_norm.get_str() : "");
        copy_text(out->alpha_text, sizeof out->alpha_text, row.alpha_text);
    });
}

rotlat_status rotlat_format_table_value(double value, char* buf, size_t cap) {
    if (buf == nullptr) return fail(ROTLAT_E_INVALID_ARGUMENT, "null argument");
    const std::string s = rotlat::format_table_value(value);
    if (cap <= s.size()) return fail(ROTLAT_E_INVALID_ARGUMENT, "output buffer too small");
    copy_text(buf, cap, s);
    last_error.clear();
    return ROTLAT_OK;
}

}  // extern "C"
