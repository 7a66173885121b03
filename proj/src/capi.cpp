#include "hbraces/hbraces.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hbraces/braces.hpp"
#include "hbraces/coalgebra.hpp"
#include "hbraces/error.hpp"
#include "hbraces/render.hpp"
#include "hbraces/series.hpp"
#include "hbraces/verify.hpp"

struct hb_expr {
    hbraces::Expr value;
};

struct hb_series {
    hbraces::TruncatedSeries value;
};

struct hb_coeffs {
    hbraces::CoefficientVector value;
};

struct hb_report {
    hbraces::VerificationReport value;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
hb_status guarded(Fn&& fn)
{
    try {
        fn();
        last_error.clear();
        return HB_OK;
    } catch (const hbraces::UsageError& e) {
        last_error = e.what();
        return HB_USAGE_ERROR;
    } catch (const hbraces::ContractViolation& e) {
        last_error = e.what();
        return HB_CONTRACT_VIOLATION;
    } catch (const hbraces::SingularSeries& e) {
        last_error = e.what();
        return HB_SINGULAR_SERIES;
    } catch (const hbraces::InsufficientOrder& e) {
        last_error = e.what();
        return HB_INSUFFICIENT_ORDER;
    } catch (const hbraces::ParseError& e) {
        last_error = e.what();
        return HB_PARSE_ERROR;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HB_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return HB_INTERNAL_ERROR;
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what)
{
    if (!p)
        throw hbraces::ContractViolation(std::string(what) + " is null");
}

hbraces::Convention to_cpp(hb_convention c)
{
    return c == HB_PLAIN ? hbraces::Convention::plain : hbraces::Convention::factorial;
}

hbraces::Flavor to_cpp(hb_flavor f)
{
    return f == HB_NONCOMMUTATIVE ? hbraces::Flavor::noncommutative : hbraces::Flavor::commutative;
}

hbraces::Format to_cpp(hb_format f)
{
    switch (f) {
    case HB_LATEX: return hbraces::Format::latex;
    case HB_JSON: return hbraces::Format::json;
    default: return hbraces::Format::text;
    }
}

std::vector<hbraces::Generator> generators(size_t n, const int* degrees)
{
    if (n == 0)
        throw hbraces::UsageError("n must be at least 1");
    require(degrees, "degrees");
    return hbraces::make_generators(std::span<const int>(degrees, n));
}

std::string parity_string(const hbraces::ParityVector& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

} // namespace

extern "C" {

const char* hb_last_error(void) { return last_error.c_str(); }

void hb_string_free(char* s) { std::free(s); }

hb_status hb_parse_format(const char* name, hb_format* out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        switch (hbraces::parse_format(name)) {
        case hbraces::Format::text: *out = HB_TEXT; break;
        case hbraces::Format::latex: *out = HB_LATEX; break;
        case hbraces::Format::json: *out = HB_JSON; break;
        }
    });
}

hb_status hb_parse_convention(const char* name, hb_convention* out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = hbraces::parse_convention(name) == hbraces::Convention::plain ? HB_PLAIN : HB_FACTORIAL;
    });
}

hb_status hb_series_preset(const char* name, size_t order, hb_convention convention, hb_series** out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = new hb_series{hbraces::preset(hbraces::parse_preset(name), order, to_cpp(convention))};
    });
}

hb_status hb_series_from_strings(const char* const* coeffs, size_t count, size_t order, hb_convention convention,
                                 hb_series** out)
{
    return guarded([&] {
        require(out, "out");
        if (count == 0)
            throw hbraces::UsageError("a series needs at least one coefficient");
        require(coeffs, "coeffs");
        if (order == 0)
            order = count;
        if (order < count)
            throw hbraces::UsageError("more coefficients than the truncation order");
        std::vector<hbraces::Scalar> values(order);
        for (size_t k = 0; k < count; ++k) {
            require(coeffs[k], "coefficient string");
            values[k] = hbraces::Scalar::parse(coeffs[k]);
        }
        *out = new hb_series{hbraces::TruncatedSeries(std::move(values), to_cpp(convention))};
    });
}

hb_status hb_series_invert(const hb_series* f, hb_series** out)
{
    return guarded([&] {
        require(f, "f");
        require(out, "out");
        *out = new hb_series{hbraces::invert(f->value)};
    });
}

hb_status hb_series_compose(const hb_series* outer, const hb_series* inner, hb_series** out)
{
    return guarded([&] {
        require(outer, "outer");
        require(inner, "inner");
        require(out, "out");
        *out = new hb_series{hbraces::compose(outer->value, inner->value)};
    });
}

size_t hb_series_order(const hb_series* s) { return s ? s->value.order() : 0; }

hb_status hb_series_coefficient(const hb_series* s, size_t k, char** out)
{
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = copy_string(s->value[k].to_string());
    });
}

void hb_series_free(hb_series* s) { delete s; }

hb_status hb_coeffs_from_series(const hb_series* f, size_t r_max, hb_coeffs** out)
{
    return guarded([&] {
        require(f, "f");
        require(out, "out");
        *out = new hb_coeffs{hbraces::c_from_series(f->value, hbraces::invert(f->value), r_max)};
    });
}

hb_convention hb_coeffs_convention(const hb_coeffs* c)
{
    return c && c->value.convention() == hbraces::Convention::plain ? HB_PLAIN : HB_FACTORIAL;
}

size_t hb_coeffs_max_index(const hb_coeffs* c) { return c ? c->value.max_index() : 0; }

hb_status hb_coeffs_split(const hb_coeffs* c, size_t p, size_t q, char** out)
{
    return guarded([&] {
        require(c, "coefficients");
        require(out, "out");
        *out = copy_string(c->value.split(p, q).to_string());
    });
}

void hb_coeffs_free(hb_coeffs* c) { delete c; }

hb_status hb_brace(hb_brace_kind kind, size_t n, const int* degrees, const hb_series* f, hb_flavor flavor,
                   hb_expr** out)
{
    return guarded([&] {
        require(out, "out");
        const auto gens = generators(n, degrees);
        switch (kind) {
        case HB_KOSZUL:
            *out = new hb_expr{hbraces::koszul_brace(gens)};
            return;
        case HB_BORJESON:
            *out = new hb_expr{hbraces::borjeson_brace(gens)};
            return;
        case HB_GENERAL: {
            if (!f)
                throw hbraces::UsageError("the general brace needs a series");
            const auto family = hbraces::BraceFamily::pullback_of(f->value, to_cpp(flavor));
            *out = new hb_expr{family.evaluate(gens)};
            return;
        }
        }
        throw hbraces::UsageError("unknown brace kind");
    });
}

hb_status hb_pullback(size_t n, const int* degrees, const hb_series* f, hb_flavor flavor, hb_expr** out)
{
    return guarded([&] {
        require(f, "f");
        require(out, "out");
        const auto gens = generators(n, degrees);
        *out = new hb_expr{hbraces::pullback_brace(gens, f->value, to_cpp(flavor))};
    });
}

hb_status hb_expr_render(const hb_expr* e, hb_format format, char** out)
{
    return guarded([&] {
        require(e, "expression");
        require(out, "out");
        *out = copy_string(hbraces::render(e->value, to_cpp(format)));
    });
}

hb_status hb_expr_parse_json(const char* text, hb_expr** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new hb_expr{hbraces::parse_json(text)};
    });
}

int hb_expr_equal(const hb_expr* a, const hb_expr* b) { return a && b && a->value == b->value; }

size_t hb_expr_term_count(const hb_expr* e) { return e ? e->value.size() : 0; }

void hb_expr_free(hb_expr* e) { delete e; }

void hb_verify_options_init(hb_verify_options* options)
{
    if (!options)
        return;
    const hbraces::SuiteOptions defaults;
    options->n_max = 0;
    options->r_max = 0;
    options->order = defaults.order;
    options->samples = defaults.samples;
    options->seed = defaults.seed;
    options->family = nullptr;
    options->mutation = nullptr;
}

hb_status hb_verify(const char* suite, const hb_verify_options* options, hb_report** out)
{
    return guarded([&] {
        require(suite, "suite");
        require(out, "out");
        hb_verify_options defaults;
        hb_verify_options_init(&defaults);
        const hb_verify_options& o = options ? *options : defaults;
        hbraces::SuiteOptions so;
        if (o.n_max)
            so.n_max = o.n_max;
        if (o.r_max)
            so.r_max = o.r_max;
        so.order = o.order;
        so.samples = o.samples;
        so.seed = o.seed;
        if (o.family)
            so.family = o.family;
        if (o.mutation && *o.mutation)
            so.mutation = hbraces::parse_mutation(o.mutation);
        *out = new hb_report{hbraces::run_suite(hbraces::parse_suite(suite), so)};
    });
}

int hb_report_passed(const hb_report* r) { return r && r->value.passed(); }

size_t hb_report_instances(const hb_report* r) { return r ? r->value.parity_vectors_checked : 0; }

hb_status hb_report_summary(const hb_report* r, char** out)
{
    return guarded([&] {
        require(r, "report");
        require(out, "out");
        const auto& v = r->value;
        std::string s = (v.passed() ? "PASS " : "FAIL ") + v.suite + ": ";
        if (!v.checked_arities.empty()) {
            s += "bounds " + std::to_string(v.checked_arities.front());
            if (v.checked_arities.size() > 1)
                s += ".." + std::to_string(v.checked_arities.back());
            s += ", ";
        }
        s += std::to_string(v.parity_vectors_checked) + " instances checked";
        *out = copy_string(s);
    });
}

hb_status hb_report_failure(const hb_report* r, hb_format format, char** out)
{
    return guarded([&] {
        require(r, "report");
        require(out, "out");
        const auto& v = r->value;
        if (v.passed()) {
            *out = copy_string("");
            return;
        }
        const auto& f = *v.first_failure;
        std::string s = "first counterexample: ";
        if (!f.parities.empty())
            s += "n=" + std::to_string(f.arity) + " parities (" + parity_string(f.parities) + "): ";
        s += f.description;
        if (f.residual)
            s += "\nresidual: " + hbraces::render(*f.residual, to_cpp(format));
        *out = copy_string(s);
    });
}

void hb_report_free(hb_report* r) { delete r; }

} // extern "C"
