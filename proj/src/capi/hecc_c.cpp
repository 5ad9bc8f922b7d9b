#include "hecc.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "hecc/cert.hpp"
#include "hecc/curve_spec.hpp"
#include "hecc/reports.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int classify(const std::exception& e) {
    g_last_error = e.what();
    if (dynamic_cast<const hecc::ParseError*>(&e)) return HECC_ERR_PARSE;
    if (dynamic_cast<const hecc::ValidationError*>(&e)) return HECC_ERR_PARSE;
    if (dynamic_cast<const hecc::ContractViolation*>(&e)) return HECC_ERR_PARSE;
    if (dynamic_cast<const hecc::SearchExhausted*>(&e)) return HECC_ERR_SEARCH;
    if (dynamic_cast<const hecc::NoValidSplit*>(&e)) return HECC_ERR_SEARCH;
    if (dynamic_cast<const hecc::NoNonzeroClass*>(&e)) return HECC_ERR_SEARCH;
    return HECC_ERR_INTERNAL;
}

} // namespace

struct hecc_curve {
    hecc::CurveSpec spec;
    hecc::CurvePtr curve;
    std::vector<hecc::Place> hints;
};

extern "C" {

const char* hecc_version(void) { return "1.0.0"; }

int hecc_curve_parse(const char* spec_text, hecc_curve** out) {
    if (!spec_text || !out) {
        g_last_error = "null argument";
        return HECC_ERR_PARSE;
    }
    *out = nullptr;
    try {
        auto handle = std::make_unique<hecc_curve>();
        handle->spec = hecc::CurveSpec::parse(spec_text);
        handle->curve = handle->spec.make_validated_curve();
        handle->hints = handle->spec.hint_places(handle->curve);
        *out = handle.release();
        g_last_error.clear();
        return HECC_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

void hecc_curve_free(hecc_curve* curve) { delete curve; }

int hecc_curve_genus(const hecc_curve* curve) {
    return curve ? curve->curve->genus() : -1;
}

#define HECC_REPORT_BODY(expr)                              \
    if (!curve || !out) {                                   \
        g_last_error = "null argument";                     \
        return HECC_ERR_PARSE;                              \
    }                                                       \
    try {                                                   \
        *out = dup_string(expr);                            \
        g_last_error.clear();                               \
        return *out ? HECC_OK : HECC_ERR_INTERNAL;          \
    } catch (const std::exception& e) {                     \
        *out = nullptr;                                     \
        return classify(e);                                 \
    }

int hecc_genus_report(const hecc_curve* curve, int as_json, char** out) {
    HECC_REPORT_BODY(hecc::genus_report(curve->curve, as_json != 0))
}

int hecc_rr_report(const hecc_curve* curve, const char* divisor, int as_json, char** out) {
    if (!divisor) {
        g_last_error = "null divisor literal";
        return HECC_ERR_PARSE;
    }
    HECC_REPORT_BODY(hecc::rr_report(curve->curve, divisor, as_json != 0))
}

int hecc_h1_report(const hecc_curve* curve, const char* divisor, int as_json, char** out) {
    if (!divisor) {
        g_last_error = "null divisor literal";
        return HECC_ERR_PARSE;
    }
    HECC_REPORT_BODY(hecc::h1_report(curve->curve, divisor, as_json != 0))
}

int hecc_flat_report(const hecc_curve* curve, const char* definitions, int as_json, char** out) {
    if (!definitions) {
        g_last_error = "null definitions";
        return HECC_ERR_PARSE;
    }
    HECC_REPORT_BODY(hecc::flat_report(curve->curve, definitions, as_json != 0))
}

int hecc_construct(const hecc_curve* curve, long long seed, char** cert_json) {
    if (!curve || !cert_json) {
        g_last_error = "null argument";
        return HECC_ERR_PARSE;
    }
    *cert_json = nullptr;
    try {
        const std::uint64_t use_seed =
            seed >= 0 ? static_cast<std::uint64_t>(seed) : curve->spec.seed;
        hecc::ConstructionData data = hecc::build(curve->curve, use_seed, curve->hints);
        hecc::Certificate cert = hecc::verify(data);
        *cert_json = dup_string(hecc::certificate_to_json(cert));
        if (!*cert_json) return HECC_ERR_INTERNAL;
        g_last_error.clear();
        if (!cert.overall_pass) {
            g_last_error = "certificate records failing checks";
            return HECC_ERR_CHECK;
        }
        return HECC_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

int hecc_check(const char* cert_json, char** report) {
    if (report) *report = nullptr;
    if (!cert_json) {
        g_last_error = "null certificate";
        return HECC_ERR_PARSE;
    }
    try {
        hecc::CheckOutcome out = hecc::check_certificate(cert_json);
        std::ostringstream rep;
        for (const hecc::CheckAgreement& c : out.checks) {
            rep << c.id << ": recomputed " << (c.recomputed ? "pass" : "FAIL")
                << (c.recorded == c.recomputed ? "" : " (disagrees with the recorded value)")
                << "\n";
        }
        rep << "omega: " << (out.omega_matches ? "matches push_forward(theta)"
                                               : "DIFFERS from push_forward(theta)")
            << "\n";
        rep << "overall: " << (out.accept() ? "pass" : "FAIL") << "\n";
        if (report) {
            *report = dup_string(rep.str());
            if (!*report) return HECC_ERR_INTERNAL;
        }
        g_last_error.clear();
        if (!out.accept()) {
            g_last_error = "certificate check failed";
            return HECC_ERR_CHECK;
        }
        return HECC_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

const char* hecc_last_error(void) { return g_last_error.c_str(); }

void hecc_free_string(char* s) { std::free(s); }

} // extern "C"
