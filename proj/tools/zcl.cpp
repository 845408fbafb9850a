// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: `zcl eval <function> [flags]` evaluates one special
// function; `zcl verify [--identity <list>|--all] [flags]` runs the identity
// verification suites and emits text/json/csv reports.
//
// Exit codes: 0 value printed / all grid points pass, 1 verification failure,
// 2 usage or domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zcl/report.hpp"
#include "zcl/zcl.hpp"

namespace {

using zcl::Complex;
using zcl::parse_rational;
using zcl::PrecisionContext;
using zcl::Rational;
using zcl::Real;

struct GlobalOpts {
    long digits = 50;
    std::string tolerance;  // empty = derive from digits
    std::string format = "text";
    std::string output;
    long parallelism = static_cast<long>(std::max(1u, std::thread::hardware_concurrency()));
};

void add_global_opts(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--digits", g.digits, "significant decimal digits (default 50)")
        ->envname("ZCL_DIGITS");
    cmd->add_option("--tolerance", g.tolerance,
                    "absolute tolerance (default 1e-40, or 1e-(digits-10) below 50 digits)");
    cmd->add_option("--format", g.format, "report format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", g.output, "write the report to a file instead of stdout");
    cmd->add_option("--parallelism", g.parallelism, "worker threads for verification grids");
}

PrecisionContext make_context(const GlobalOpts& g) {
    std::string tol = g.tolerance;
    if (tol.empty())
        tol = g.digits >= 50 ? "1e-40" : "1e-" + std::to_string(g.digits - 10);
    return PrecisionContext::make(g.digits, 10, tol, tol);
}

std::pair<Rational, Rational> parse_complex_literal(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw zcl::parse_error("empty complex literal");
    if (s.back() != 'i') return {parse_rational(s), Rational(0)};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != 'e') split = i;
    std::string re_part, im_part;
    if (split == std::string::npos) {
        re_part = "0";
        im_part = s;
    } else {
        re_part = s.substr(0, split);
        im_part = s.substr(split);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return {parse_rational(re_part), parse_rational(im_part)};
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// ---------------------------------------------------------------------------
// eval

struct EvalOpts {
    std::string function;
    std::string s, a, b, q_str, which;
    long k = 0, n = 0, m = 0, p = 1, big_n = 0, kp = 1, alpha = 1, beta = 1;
    bool has_s = false, has_a = false, has_k = false, has_n = false, has_q = false;
};

int run_eval(const EvalOpts& e, const GlobalOpts& g) {
    PrecisionContext ctx = make_context(g);
    auto bits = ctx.bits();
    auto digits = static_cast<std::size_t>(g.digits);

    auto need = [&](bool present, const char* flag) {
        if (!present)
            throw zcl::parse_error(std::string("eval ") + e.function + " requires " + flag);
    };
    auto complex_s = [&] {
        need(e.has_s, "--s");
        auto [re, im] = parse_complex_literal(e.s);
        return ctx.complex(re, im);
    };
    auto real_a = [&] {
        need(e.has_a, "--a");
        return Real(parse_rational(e.a), bits);
    };

    std::string printed;
    if (e.function == "hurwitz-zeta") {
        printed = to_string(zcl::hurwitz_zeta(complex_s(), real_a(), ctx), digits);
    } else if (e.function == "hurwitz-zeta-ds") {
        printed = to_string(zcl::hurwitz_zeta_ds(complex_s(), real_a(), ctx), digits);
    } else if (e.function == "riemann-zeta") {
        printed = to_string(zcl::riemann_zeta(complex_s(), ctx), digits);
    } else if (e.function == "stieltjes") {
        need(e.has_k, "--k");
        printed = to_string(zcl::stieltjes_gamma(e.k, parse_rational(e.a.empty() ? "1" : e.a), ctx,
                                                 std::max<long>(e.k, zcl::kStieltjesKMaxDefault)),
                            digits);
    } else if (e.function == "digamma") {
        printed = to_string(zcl::digamma(parse_rational(e.a), ctx), digits);
    } else if (e.function == "polygamma") {
        need(e.has_n, "--n");
        printed = to_string(zcl::polygamma(e.n, parse_rational(e.a), ctx), digits);
    } else if (e.function == "bernoulli-number") {
        need(e.has_n, "--n");
        if (e.n < 0) throw zcl::domain_error("bernoulli-number: n must be >= 0");
        printed = zcl::to_string(zcl::bernoulli_number(static_cast<unsigned long>(e.n)));
    } else if (e.function == "bernoulli-poly") {
        need(e.has_n, "--n");
        need(e.has_a, "--a");
        if (e.n < 0) throw zcl::domain_error("bernoulli-poly: n must be >= 0");
        printed = zcl::to_string(
            zcl::bernoulli_poly_exact(static_cast<unsigned long>(e.n), parse_rational(e.a)));
    } else if (e.function == "a-k") {
        need(e.has_k, "--k");
        need(e.has_q, "--q");
        printed = to_string(zcl::a_k(e.k, Real(parse_rational(e.q_str), bits), ctx), digits);
    } else if (e.function == "zf-hurwitz" || e.function == "zf-mellin") {
        if (e.which.empty())
            throw zcl::parse_error("zf-* require --which {prop1,lemma2,lemma3}");
        zcl::PaperFunctionParams prm;
        prm.p = e.p;
        prm.q = e.has_q ? parse_rational(e.q_str).get_num().get_si() : 1;
        prm.b = e.b.empty() ? Rational(0) : parse_rational(e.b);
        prm.N = e.big_n;
        prm.k_p = e.kp;
        prm.alpha = e.alpha;
        prm.beta = e.beta;
        zcl::PaperFunctionTag tag;
        if (e.which == "prop1") tag = zcl::PaperFunctionTag::prop1;
        else if (e.which == "lemma2") tag = zcl::PaperFunctionTag::lemma2;
        else if (e.which == "lemma3") tag = zcl::PaperFunctionTag::lemma3;
        else throw zcl::parse_error("unknown --which tag: " + e.which);
        auto forms = build_paper_function(tag, prm);
        if (e.function == "zf-hurwitz") {
            printed = to_string(zcl::zf_hurwitz(complex_s(), forms.left, ctx), digits);
        } else {
            need(e.has_s, "--s");
            auto [re, im] = parse_complex_literal(e.s);
            if (im != 0) throw zcl::domain_error("zf-mellin requires real s");
            printed = to_string(zcl::zf_mellin(Real(re, bits), forms.left, ctx), digits);
        }
    } else {
        throw zcl::parse_error("unknown eval function: " + e.function);
    }

    if (!g.output.empty()) {
        std::ofstream out(g.output);
        if (!out) throw zcl::parse_error("cannot open output file: " + g.output);
        out << printed << "\n";
    } else {
        std::cout << printed << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
    std::string identities;
    bool all = false;
    std::string p, q, b, k, m, n, big_n, kp, alpha, beta, s;
};

std::optional<std::vector<long>> parse_long_list(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<long> out;
    for (const auto& item : split_csv(text)) out.push_back(std::stol(item));
    return out;
}

int run_verify(const VerifyOpts& v, const GlobalOpts& g) {
    namespace ids = zcl::identities;
    PrecisionContext ctx = make_context(g);

    std::vector<ids::IdentityId> wanted;
    if (v.all) {
        wanted.assign(std::begin(ids::kAllIdentities), std::end(ids::kAllIdentities));
    } else {
        if (v.identities.empty())
            throw zcl::parse_error("verify requires --identity <list> or --all");
        for (const auto& tag : split_csv(v.identities)) {
            auto id = ids::identity_from_string(tag);
            if (!id) throw zcl::parse_error("unknown identity tag: " + tag);
            wanted.push_back(*id);
        }
    }

    ids::GridOverrides ov;
    try {
        ov.p = parse_long_list(v.p);
        ov.q = parse_long_list(v.q);
        ov.k = parse_long_list(v.k);
        ov.m = parse_long_list(v.m);
        ov.n = parse_long_list(v.n);
        ov.N = parse_long_list(v.big_n);
        ov.k_p = parse_long_list(v.kp);
        ov.alpha = parse_long_list(v.alpha);
        ov.beta = parse_long_list(v.beta);
    } catch (const std::exception&) {
        throw zcl::parse_error("malformed integer list in parameter override");
    }
    if (!v.b.empty()) {
        std::vector<Rational> bs;
        for (const auto& item : split_csv(v.b)) bs.push_back(parse_rational(item));
        ov.b = bs;
    }
    if (!v.s.empty()) {
        std::vector<std::pair<Rational, Rational>> ss;
        for (const auto& item : split_csv(v.s)) ss.push_back(parse_complex_literal(item));
        ov.s = ss;
    }

    std::vector<std::pair<ids::IdentityId, ids::ParamSet>> tasks;
    std::vector<std::string> user_errors;
    for (ids::IdentityId id : ids::kAllIdentities) {
        bool take = false;
        for (auto w : wanted) take = take || w == id;
        if (!take) continue;
        ids::GridResult grid = ids::make_grid(id, ov);
        for (auto& e : grid.user_errors) user_errors.push_back(e);
        for (auto& ps : grid.points) tasks.emplace_back(id, ps);
    }
    for (const auto& e : user_errors) std::cerr << "error: " << e << "\n";
    if (!user_errors.empty()) return 2;
    if (tasks.empty()) {
        std::cerr << "error: no valid parameter combinations for the requested grid\n";
        return 2;
    }

    auto reports = ids::run_points(tasks, ctx, g.parallelism);

    auto fmt = ids::report_format_from_string(g.format);
    if (!g.output.empty()) {
        std::ofstream out(g.output);
        if (!out) throw zcl::parse_error("cannot open output file: " + g.output);
        ids::write_reports(out, reports, *fmt, g.digits);
    } else {
        ids::write_reports(std::cout, reports, *fmt, g.digits);
    }

    bool all_pass = true;
    for (const auto& rep : reports) all_pass = all_pass && rep.pass;
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zcl: extended-precision Hurwitz zeta / Stieltjes constants toolkit"};
    app.require_subcommand(1);

    GlobalOpts g_eval, g_verify;
    EvalOpts e;
    VerifyOpts v;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one special function");
    add_global_opts(eval, g_eval);
    eval->add_option("function", e.function,
                     "hurwitz-zeta|hurwitz-zeta-ds|riemann-zeta|stieltjes|digamma|polygamma|"
                     "bernoulli-number|bernoulli-poly|a-k|zf-hurwitz|zf-mellin")
        ->required();
    eval->add_option("--s", e.s, "complex evaluation point, e.g. 3, 2.5, 2+3i")
        ->each([&](const std::string&) { e.has_s = true; });
    eval->add_option("--a", e.a, "real argument (rational p/q or decimal)")
        ->each([&](const std::string&) { e.has_a = true; });
    eval->add_option("--k", e.k, "order k")->each([&](const std::string&) { e.has_k = true; });
    eval->add_option("--n", e.n, "order n / polynomial degree")
        ->each([&](const std::string&) { e.has_n = true; });
    eval->add_option("--q", e.q_str, "argument q")->each([&](const std::string&) { e.has_q = true; });
    eval->add_option("--m", e.m, "order m");
    eval->add_option("--p", e.p, "parameter p");
    eval->add_option("--N", e.big_n, "parameter N");
    eval->add_option("--b", e.b, "shift b (rational)");
    eval->add_option("--kp", e.kp, "parameter k_p");
    eval->add_option("--alpha", e.alpha, "parameter alpha");
    eval->add_option("--beta", e.beta, "parameter beta");
    eval->add_option("--which", e.which, "paper function for zf-*: prop1|lemma2|lemma3");

    CLI::App* verify = app.add_subcommand("verify", "verify summation identities over grids");
    add_global_opts(verify, g_verify);
    auto* opt_ids = verify->add_option("--identity", v.identities,
                                       "comma-separated identity tags (prop1..prop5, cor1..cor5, "
                                       "lemma1..lemma3)");
    verify->add_flag("--all", v.all, "verify every identity")->excludes(opt_ids);
    verify->add_option("--p", v.p, "override p values (comma-separated)");
    verify->add_option("--q", v.q, "override q values");
    verify->add_option("--b", v.b, "override b values (rationals)");
    verify->add_option("--k", v.k, "override k values");
    verify->add_option("--m", v.m, "override m values");
    verify->add_option("--n", v.n, "override n values");
    verify->add_option("--N", v.big_n, "override N values");
    verify->add_option("--kp", v.kp, "override k_p values");
    verify->add_option("--alpha", v.alpha, "override alpha values");
    verify->add_option("--beta", v.beta, "override beta values");
    verify->add_option("--s", v.s, "override s values (complex literals)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(e, g_eval);
        return run_verify(v, g_verify);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
