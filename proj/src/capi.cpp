#include "crystalline.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "crystalline/verify.hpp"
#include "crystalline/workbench.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

crx_status status_of(crystalline::Errc c) {
    using crystalline::Errc;
    switch (c) {
        case Errc::ok: return CRX_OK;
        case Errc::parse_error: return CRX_E_PARSE;
        case Errc::not_a_crystal: return CRX_E_NOT_A_CRYSTAL;
        case Errc::insufficient_precision:
        case Errc::precision_overflow:
        case Errc::precision_increase: return CRX_E_PRECISION;
        case Errc::cap_exceeded: return CRX_E_CAP;
        case Errc::internal: return CRX_E_INTERNAL;
        default: return CRX_E_INVALID;
    }
}

template <typename Fn>
crx_status guarded(Fn fn) {
    try {
        g_last_error.clear();
        fn();
        return CRX_OK;
    } catch (const crystalline::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CRX_E_INTERNAL;
    }
}

}  // namespace

struct crx_options {
    crystalline::WorkbenchOptions v;
};

extern "C" {

crx_options* crx_options_new(void) { return new crx_options{}; }

void crx_options_free(crx_options* opt) { delete opt; }

crx_status crx_options_set_int(crx_options* opt, const char* key, long long value) {
    if (!opt || !key) return CRX_E_INVALID;
    std::string k = key;
    auto& v = opt->v;
    if (k == "degree") v.degree = static_cast<int>(value);
    else if (k == "jobs") v.jobs = static_cast<int>(value);
    else if (k == "precision") v.precision = static_cast<int>(value);
    else if (k == "precision_cap") v.precision_cap = static_cast<int>(value);
    else if (k == "seed") v.seed = static_cast<unsigned long long>(value);
    else if (k == "plot") v.plot = value != 0;
    else if (k == "cross_check") v.cross_check = value != 0;
    else if (k == "step1") v.has_step1 = value != 0;
    else if (k == "step1_a") v.step1_a = value;
    else if (k == "step1_b") v.step1_b = value;
    else {
        g_last_error = "unknown integer option: " + k;
        return CRX_E_INVALID;
    }
    return CRX_OK;
}

crx_status crx_options_set_str(crx_options* opt, const char* key, const char* value) {
    if (!opt || !key || !value) return CRX_E_INVALID;
    if (std::string(key) == "suite") {
        opt->v.suites.emplace_back(value);
        return CRX_OK;
    }
    g_last_error = std::string("unknown string option: ") + key;
    return CRX_E_INVALID;
}

const char* crx_last_error(void) { return g_last_error.c_str(); }

crx_status crx_polygon_report(const char* input_json, const crx_options* opt, char** out_json) {
    if (!input_json || !opt || !out_json) return CRX_E_INVALID;
    return guarded([&] {
        auto in = crystalline::parse_text(input_json);
        *out_json = dup_string(crystalline::run_polygon(in, opt->v).dump(2) + "\n");
    });
}

crx_status crx_strata_report(const char* input_json, const crx_options* opt,
                             char** out_json, char** out_svg) {
    if (!input_json || !opt || !out_json) return CRX_E_INVALID;
    return guarded([&] {
        auto in = crystalline::parse_text(input_json);
        std::string svg;
        auto rep = crystalline::run_strata(in, opt->v, &svg);
        *out_json = dup_string(rep.dump(2) + "\n");
        if (out_svg) *out_svg = svg.empty() ? nullptr : dup_string(svg);
    });
}

crx_status crx_asdim_report(const char* input_json, const crx_options* opt, char** out_json) {
    if (!input_json || !opt || !out_json) return CRX_E_INVALID;
    return guarded([&] {
        auto in = crystalline::parse_text(input_json);
        *out_json = dup_string(crystalline::run_asdim(in, opt->v).dump(2) + "\n");
    });
}

crx_status crx_verify_run(const crx_options* opt, char** out_json, int* out_passed) {
    if (!opt || !out_json) return CRX_E_INVALID;
    return guarded([&] {
        auto rep = crystalline::run_verify(opt->v);
        *out_json = dup_string(rep.dump(2) + "\n");
        if (out_passed) *out_passed = rep["passed"].get<bool>() ? 1 : 0;
    });
}

crx_status crx_suite_list(char** out_json) {
    if (!out_json) return CRX_E_INVALID;
    return guarded([&] {
        crystalline::Json names = crystalline::Json::array();
        for (const auto& n : crystalline::suite_names()) names.push_back(n);
        *out_json = dup_string(names.dump(2) + "\n");
    });
}

void crx_string_free(char* s) { std::free(s); }

const char* crx_version(void) { return "1.0.0"; }

}  // extern "C"
