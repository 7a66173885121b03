// braces: command-line frontend over the hbraces C API.
//
//   braces brace koszul --n 3 --parities 1,0,0 --format latex
//   braces verify pullback-koszul --n-max 6
//   braces series invert --preset exp-minus-one --order 6
//
// Exit codes: 0 success / pass, 1 verification failure or singular input,
// 2 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hbraces/hbraces.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct CliError {
    int code;
    std::string message;
};

int exit_code_for(hb_status s)
{
    switch (s) {
    case HB_OK: return exit_ok;
    case HB_SINGULAR_SERIES: return exit_failure;
    case HB_INTERNAL_ERROR: return exit_failure;
    default: return exit_usage;
    }
}

void check(hb_status s)
{
    if (s != HB_OK)
        throw CliError{exit_code_for(s), hb_last_error()};
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    hb_string_free(s);
    return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using ExprPtr = std::unique_ptr<hb_expr, Deleter<hb_expr, hb_expr_free>>;
using SeriesPtr = std::unique_ptr<hb_series, Deleter<hb_series, hb_series_free>>;
using CoeffsPtr = std::unique_ptr<hb_coeffs, Deleter<hb_coeffs, hb_coeffs_free>>;
using ReportPtr = std::unique_ptr<hb_report, Deleter<hb_report, hb_report_free>>;

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(item);
    if (!text.empty() && text.back() == ',')
        out.emplace_back();
    return out;
}

std::vector<int> parse_parities(const std::string& text, std::size_t n)
{
    if (text.empty())
        return std::vector<int>(n, 0);
    std::vector<int> out;
    for (const std::string& item : split_list(text)) {
        if (item == "0")
            out.push_back(0);
        else if (item == "1")
            out.push_back(1);
        else
            throw CliError{exit_usage, "parities must be a comma-separated list of 0 and 1"};
    }
    if (out.size() != n)
        throw CliError{exit_usage, "expected " + std::to_string(n) + " parities, got " + std::to_string(out.size())};
    return out;
}

struct SeriesArgs {
    std::string preset;
    std::string coeffs;
    std::string convention = "factorial";
    std::size_t order = 0;

    void add_to(CLI::App* cmd, const std::string& prefix = "")
    {
        cmd->add_option("--" + prefix + "preset", preset,
                        "exp-minus-one | log-one-plus | geometric | alt-geometric | identity");
        cmd->add_option("--" + prefix + "coeffs", coeffs, "comma-separated coefficients f_1,f_2,... (p/q or integers)");
    }

    bool given() const { return !preset.empty() || !coeffs.empty(); }

    SeriesPtr build(const char* what) const
    {
        if (preset.empty() == coeffs.empty())
            throw CliError{exit_usage, std::string("give exactly one of --preset or --coeffs for ") + what};
        hb_convention conv;
        check(hb_parse_convention(convention.c_str(), &conv));
        hb_series* raw = nullptr;
        if (!preset.empty()) {
            check(hb_series_preset(preset.c_str(), order ? order : 16, conv, &raw));
        } else {
            std::vector<std::string> items = split_list(coeffs);
            std::vector<const char*> ptrs;
            for (const std::string& s : items)
                ptrs.push_back(s.c_str());
            check(hb_series_from_strings(ptrs.data(), ptrs.size(), order, conv, &raw));
        }
        return SeriesPtr(raw);
    }
};

std::string series_line(const hb_series* s)
{
    std::string line;
    for (std::size_t k = 1; k <= hb_series_order(s); ++k) {
        char* c = nullptr;
        check(hb_series_coefficient(s, k, &c));
        line += (k > 1 ? ", " : "") + take(c);
    }
    return line;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream file(out_path);
    if (!file)
        throw CliError{exit_usage, "cannot write '" + out_path + "'"};
    file << text << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Koszul and Börjeson braces as pullbacks of a linear homological vector field"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write the result to a file instead of stdout");

    // brace
    auto* brace = app.add_subcommand("brace", "compute a brace on generators a1..an");
    std::string kind;
    std::size_t n = 0;
    std::string parities, format = "text", flavor = "commutative";
    SeriesArgs brace_series;
    brace->add_option("kind", kind, "koszul | borjeson | general")->required();
    brace->add_option("--n", n, "number of generators")->required();
    brace->add_option("--parities", parities, "comma-separated degrees mod 2 (default all even)");
    brace->add_option("--format", format, "text | latex | json");
    brace->add_option("--flavor", flavor, "general only: commutative (symmetric) | noncommutative (tensor)");
    brace->add_option("--convention", brace_series.convention, "general only: factorial | plain");
    brace->add_option("--order", brace_series.order, "general only: series truncation order");
    brace_series.add_to(brace);
    brace->add_option("--out", out_path, "write the result to a file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, family, mutate, residual_format = "text";
    hb_verify_options vopts;
    hb_verify_options_init(&vopts);
    verify->add_option("suite", suite,
                       "pullback-koszul | pullback-borjeson | pullback-general | linf | ainf | c-identity | "
                       "series-inverse")
        ->required();
    verify->add_option("--n-max", vopts.n_max, "largest arity");
    verify->add_option("--r-max", vopts.r_max, "largest coefficient index (c-identity)");
    verify->add_option("--order", vopts.order, "series truncation order");
    verify->add_option("--samples", vopts.samples, "random series per flavor (pullback-general, series-inverse)");
    verify->add_option("--seed", vopts.seed, "seed for random series");
    verify->add_option("--family", family, "linf: koszul | trivial; ainf: borjeson | trivial");
    verify->add_option("--mutate", mutate, "phi2-sign[:k] | b2-sign[:k] | b3-drop-last | flip:<n>:<k> | drop:<n>:<k>");
    verify->add_option("--format", residual_format, "format of a printed residual: text | latex | json");
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");

    // series
    auto* series = app.add_subcommand("series", "manipulate truncated power series");
    std::string action;
    SeriesArgs primary, inner;
    std::optional<std::size_t> r_max;
    series->add_option("action", action, "invert | compose | coeffs-c")->required();
    primary.add_to(series);
    inner.add_to(series, "inner-");
    series->add_option("--convention", primary.convention, "factorial | plain");
    series->add_option("--order", primary.order, "truncation order (default 16, or the coefficient count)");
    series->add_option("--r-max", r_max, "coeffs-c: largest index (default order - 1)");
    series->add_option("--out", out_path, "write the result to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "braces: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*brace) {
            hb_brace_kind k;
            if (kind == "koszul")
                k = HB_KOSZUL;
            else if (kind == "borjeson")
                k = HB_BORJESON;
            else if (kind == "general")
                k = HB_GENERAL;
            else
                throw CliError{exit_usage, "unknown brace kind '" + kind + "'"};
            if (n == 0)
                throw CliError{exit_usage, "--n must be at least 1"};
            hb_format fmt;
            check(hb_parse_format(format.c_str(), &fmt));
            const std::vector<int> degrees = parse_parities(parities, n);

            hb_flavor fl;
            if (flavor == "commutative" || flavor == "symmetric")
                fl = HB_COMMUTATIVE;
            else if (flavor == "noncommutative" || flavor == "tensor")
                fl = HB_NONCOMMUTATIVE;
            else
                throw CliError{exit_usage, "unknown flavor '" + flavor + "'"};

            SeriesPtr f;
            if (k == HB_GENERAL) {
                f = brace_series.build("the general brace");
            } else if (brace_series.given()) {
                throw CliError{exit_usage, "series options apply to the general brace only"};
            }
            hb_expr* raw = nullptr;
            check(hb_brace(k, n, degrees.data(), f.get(), fl, &raw));
            ExprPtr e(raw);
            char* text = nullptr;
            check(hb_expr_render(e.get(), fmt, &text));
            emit(take(text), out_path);
            return exit_ok;
        }

        if (*verify) {
            if (!family.empty())
                vopts.family = family.c_str();
            if (!mutate.empty())
                vopts.mutation = mutate.c_str();
            hb_format fmt;
            check(hb_parse_format(residual_format.c_str(), &fmt));
            const auto start = std::chrono::steady_clock::now();
            hb_report* raw = nullptr;
            check(hb_verify(suite.c_str(), &vopts, &raw));
            ReportPtr report(raw);
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            char* summary = nullptr;
            check(hb_report_summary(report.get(), &summary));
            std::string text = take(summary);
            if (!hb_report_passed(report.get())) {
                char* failure = nullptr;
                check(hb_report_failure(report.get(), fmt, &failure));
                text += "\n" + take(failure);
            }
            emit(text, out_path);
            // timing varies run to run, so it stays off stdout
            std::fprintf(stderr, "wall time %.3f s\n", seconds);
            return hb_report_passed(report.get()) ? exit_ok : exit_failure;
        }

        if (*series) {
            if (action == "invert") {
                SeriesPtr f = primary.build("invert");
                hb_series* raw = nullptr;
                check(hb_series_invert(f.get(), &raw));
                SeriesPtr g(raw);
                emit(series_line(g.get()), out_path);
                return exit_ok;
            }
            if (action == "compose") {
                SeriesPtr outer = primary.build("the outer series");
                inner.convention = primary.convention;
                inner.order = hb_series_order(outer.get());
                SeriesPtr in = inner.build("the inner series (--inner-preset / --inner-coeffs)");
                hb_series* raw = nullptr;
                check(hb_series_compose(outer.get(), in.get(), &raw));
                SeriesPtr result(raw);
                emit(series_line(result.get()), out_path);
                return exit_ok;
            }
            if (action == "coeffs-c") {
                SeriesPtr f = primary.build("coeffs-c");
                const std::size_t order = hb_series_order(f.get());
                const std::size_t rmax = r_max.value_or(order - 1);
                hb_coeffs* raw = nullptr;
                check(hb_coeffs_from_series(f.get(), rmax, &raw));
                CoeffsPtr c(raw);
                std::string text;
                if (hb_coeffs_convention(c.get()) == HB_FACTORIAL) {
                    for (std::size_t r = 0; r <= rmax; ++r) {
                        char* v = nullptr;
                        check(hb_coeffs_split(c.get(), r, 0, &v));
                        text += (r ? ", " : "") + take(v);
                    }
                } else {
                    // one row per number p of leading generators: d(p,0), d(p,1), ...
                    for (std::size_t p = 0; p <= rmax; ++p) {
                        text += (p ? "\n" : "") + std::string("d(") + std::to_string(p) + ",*): ";
                        for (std::size_t q = 0; p + q <= rmax; ++q) {
                            char* v = nullptr;
                            check(hb_coeffs_split(c.get(), p, q, &v));
                            text += (q ? ", " : "") + take(v);
                        }
                    }
                }
                emit(text, out_path);
                return exit_ok;
            }
            throw CliError{exit_usage, "unknown series action '" + action + "'"};
        }
    } catch (const CliError& e) {
        std::cerr << "braces: " << e.message << '\n';
        return e.code;
    }
    return exit_usage;
}
