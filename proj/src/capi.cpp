// extern "C" bridge: opaque handles over the C++ core, exceptions mapped
// to status codes, messages parked in a thread-local slot.

#include "wittkernel.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "wittkernel/commands.hpp"
#include "wittkernel/parse.hpp"
#include "wittkernel/qform.hpp"
#include "wittkernel/report.hpp"

struct wk_form {
    wk::QuadraticForm impl;
};

struct wk_report {
    wk::Report impl;
};

namespace {

thread_local std::string g_last_error;

wk_status fail(wk_status code, const char* what) {
    g_last_error = what;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
wk_status guarded(Fn&& fn) {
    try {
        fn();
        return WK_OK;
    } catch (const wk::ParseError& e) {
        return fail(WK_EPARSE, e.what());
    } catch (const wk::DomainError& e) {
        return fail(WK_EDOMAIN, e.what());
    } catch (const wk::TheoremError& e) {
        return fail(WK_ETHEOREM, e.what());
    } catch (const std::bad_alloc&) {
        return fail(WK_EDOMAIN, "out of memory");
    } catch (const std::exception& e) {
        return fail(WK_EDOMAIN, e.what());
    }
}

wk_status make_report(wk_report** out, wk::Report&& rep) {
    *out = new wk_report{std::move(rep)};
    return WK_OK;
}

} // namespace

extern "C" {

const char* wk_version(void) { return wk::kReportVersion; }

const char* wk_last_error(void) { return g_last_error.c_str(); }

void wk_string_free(char* s) { std::free(s); }

wk_status wk_square_class(const char* r, char** out) {
    if (!r || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        *out = dup_string(wk::SquareClass::of(wk::parse_rational(r)).to_string());
    });
}

wk_status wk_factorize(int64_t n, char** out) {
    if (!out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        std::string s;
        for (int64_t p : wk::factorize(n)) {
            if (!s.empty()) s += ',';
            s += std::to_string(p);
        }
        *out = dup_string(s);
    });
}

wk_status wk_is_local_square(const char* r, const char* place, int* out) {
    if (!r || !place || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        *out = wk::is_local_square(wk::parse_rational(r), wk::parse_place(place)) ? 1 : 0;
    });
}

wk_status wk_hilbert_symbol(const char* a, const char* b, const char* place, int* out) {
    if (!a || !b || !place || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        *out = wk::hilbert_symbol(wk::parse_rational(a), wk::parse_rational(b),
                                  wk::parse_place(place));
    });
}

wk_status wk_hilbert_oracle(const char* a, const char* b, const char* place, int* out) {
    if (!a || !b || !place || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        *out = wk::hilbert_oracle(wk::parse_rational(a), wk::parse_rational(b),
                                  wk::parse_place(place));
    });
}

wk_status wk_reciprocity_check(const char* a, const char* b, int* out) {
    if (!a || !b || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        *out = wk::reciprocity_check(wk::parse_rational(a), wk::parse_rational(b)) ? 1 : 0;
    });
}

wk_status wk_form_parse(const char* text, wk_form** out) {
    if (!text || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { *out = new wk_form{wk::parse_form(text)}; });
}

void wk_form_free(wk_form* f) { delete f; }

wk_status wk_form_rank(const wk_form* f, int* out) {
    if (!f || !out) return fail(WK_EINVAL, "null argument");
    *out = static_cast<int>(f->impl.rank());
    return WK_OK;
}

wk_status wk_form_to_string(const wk_form* f, char** out) {
    if (!f || !out) return fail(WK_EINVAL, "null argument");
    *out = dup_string(f->impl.to_string());
    return WK_OK;
}

wk_status wk_form_discriminant(const wk_form* f, char** out) {
    if (!f || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { *out = dup_string(wk::discriminant(f->impl).to_string()); });
}

wk_status wk_form_is_isotropic(const wk_form* f, int* out) {
    if (!f || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { *out = wk::is_isotropic(f->impl) ? 1 : 0; });
}

wk_status wk_forms_equivalent(const wk_form* f, const wk_form* g, int* out) {
    if (!f || !g || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { *out = wk::equivalent(f->impl, g->impl) ? 1 : 0; });
}

wk_status wk_forms_similar(const wk_form* f, const wk_form* g, int* out) {
    if (!f || !g || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { *out = wk::similar(f->impl, g->impl) ? 1 : 0; });
}

void wk_report_free(wk_report* r) { delete r; }

wk_status wk_report_json(const wk_report* r, char** out) {
    if (!r || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { *out = dup_string(wk::render_json(r->impl)); });
}

wk_status wk_report_text(const wk_report* r, char** out) {
    if (!r || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { *out = dup_string(wk::render_text(r->impl)); });
}

wk_status wk_cmd_hilbert(const char* a, const char* b, const char* place_or_null,
                         wk_report** out) {
    if (!a || !b || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        std::optional<std::string> place;
        if (place_or_null) place = place_or_null;
        make_report(out, wk::cmd_hilbert(a, b, place));
    });
}

wk_status wk_cmd_conic_classify(const char* a, const char* b, wk_report** out) {
    if (!a || !b || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { make_report(out, wk::cmd_conic_classify(a, b)); });
}

wk_status wk_cmd_conic_compare(const char* a, const char* b, const char* a2,
                               const char* b2, wk_report** out) {
    if (!a || !b || !a2 || !b2 || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { make_report(out, wk::cmd_conic_compare(a, b, a2, b2)); });
}

wk_status wk_cmd_quadric_classify(const char* form, wk_report** out) {
    if (!form || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { make_report(out, wk::cmd_quadric_classify(form)); });
}

wk_status wk_cmd_quadric_compare(const char* form1, const char* form2, wk_report** out) {
    if (!form1 || !form2 || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { make_report(out, wk::cmd_quadric_compare(form1, form2)); });
}

wk_status wk_cmd_quadric_kernel(const char* form, const char* ext_or_null,
                                wk_report** out) {
    if (!form || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        std::optional<std::string> ext;
        if (ext_or_null) ext = ext_or_null;
        make_report(out, wk::cmd_quadric_kernel(form, ext));
    });
}

wk_status wk_cmd_sb_compare(const char* cls1, const char* cls2, int64_t dim,
                            wk_report** out) {
    if (!cls1 || !cls2 || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { make_report(out, wk::cmd_sb_compare(cls1, cls2, dim)); });
}

wk_status wk_cmd_sb_vs_quadric(const char* cls, const char* form, wk_report** out) {
    if (!cls || !form || !out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { make_report(out, wk::cmd_sb_vs_quadric(cls, form)); });
}

wk_status wk_cmd_genus1_orbit(int64_t modulus, int64_t residue, wk_report** out) {
    if (!out) return fail(WK_EINVAL, "null argument");
    return guarded([&] { make_report(out, wk::cmd_genus1_orbit(modulus, residue)); });
}

wk_status wk_cmd_genus1_gate(int64_t period, int non_cm, int isolated_or_finite,
                             wk_report** out) {
    if (!out) return fail(WK_EINVAL, "null argument");
    return guarded([&] {
        make_report(out, wk::cmd_genus1_gate(period, non_cm != 0, isolated_or_finite != 0));
    });
}

} // extern "C"
