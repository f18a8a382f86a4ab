// palsieve CLI: counting, enumeration, lemma checks, experiments, baselines.
// Exit codes: 0 success, 1 failed verification, 2 usage error, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "palsieve.h"

namespace {

// Exact integer parse accepting scientific notation: "1e10", "2.5e3".
// Rejects anything with a fractional part.
bool parse_exact_u64(const std::string& text, uint64_t& out) {
    std::string mantissa;
    long long exp10 = 0;
    size_t epos = text.find_first_of("eE");
    std::string head = epos == std::string::npos ? text : text.substr(0, epos);
    if (epos != std::string::npos) {
        std::string etail = text.substr(epos + 1);
        if (etail.empty()) return false;
        size_t idx = 0;
        if (etail[0] == '+') idx = 1;
        if (idx >= etail.size()) return false;
        for (size_t i = idx; i < etail.size(); ++i)
            if (!isdigit((unsigned char)etail[i])) return false;
        exp10 = std::stoll(etail.substr(idx));
        if (exp10 > 19) return false;
    }
    size_t dot = head.find('.');
    std::string digits = dot == std::string::npos ? head : head.substr(0, dot) + head.substr(dot + 1);
    if (dot != std::string::npos) exp10 -= (long long)(head.size() - dot - 1);
    if (digits.empty()) return false;
    for (char c : digits)
        if (!isdigit((unsigned char)c)) return false;
    if (exp10 < 0) {  // trailing digits must be zeros for an exact integer
        if ((long long)digits.size() <= -exp10) return false;
        for (long long i = 0; i < -exp10; ++i)
            if (digits[digits.size() - 1 - (size_t)i] != '0') return false;
        digits.resize(digits.size() - (size_t)(-exp10));
        exp10 = 0;
    }
    unsigned __int128 v = 0;
    for (char c : digits) {
        v = v * 10 + (unsigned)(c - '0');
        if (v > (unsigned __int128)UINT64_MAX) return false;
    }
    for (long long i = 0; i < exp10; ++i) {
        v *= 10;
        if (v > (unsigned __int128)UINT64_MAX) return false;
    }
    out = (uint64_t)v;
    return true;
}

bool parse_u64_list(const std::string& text, std::vector<uint64_t>& out) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        uint64_t v;
        if (!parse_exact_u64(tok, v)) return false;
        out.push_back(v);
    }
    return !out.empty();
}

int fail_status(ps_status s, const std::string& context) {
    std::cerr << "error (" << ps_status_name(s) << "): " << ps_last_error();
    if (!context.empty()) std::cerr << " [" << context << "]";
    std::cerr << "\n";
    return s == PS_ERR_IO ? 3 : 2;
}

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot open " << output_path << "\n";
        return 3;
    }
    out << text;
    if (!out) {
        std::cerr << "error: write failed for " << output_path << "\n";
        return 3;
    }
    return 0;
}

struct exact_u64_validator : CLI::Validator {
    exact_u64_validator() {
        name_ = "U64";
        func_ = [](const std::string& str) {
            uint64_t v;
            return parse_exact_u64(str, v) ? std::string()
                                           : "not an exact non-negative integer: " + str;
        };
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palsieve: palindrome distribution toolkit"};
    app.require_subcommand(1);
    exact_u64_validator u64v;

    unsigned threads = 0;
    uint64_t seed = 0;
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--seed", seed, "seed for randomized checks / metadata");

    // ---- enumerate ----
    auto* cmd_enum = app.add_subcommand(
        "enumerate", "list Pi_b(L) ascending (columns: value), or quasi-cover triples "
                     "(columns: skeleton,offset,value) with --quasi-level");
    std::string en_base = "10", en_L = "2", en_limit = "0";
    unsigned en_level = 0;
    cmd_enum->add_option("--base", en_base, "base b")->check(u64v);
    cmd_enum->add_option("--block-L", en_L, "block exponent L")->check(u64v);
    cmd_enum->add_option("--quasi-level", en_level, "emit the quasi-palindrome cover at this level");
    cmd_enum->add_option("--limit", en_limit, "stop after this many values (0 = all)")->check(u64v);

    // ---- count ----
    auto* cmd_count = app.add_subcommand("count", "count palindromes up to a bound (prints one integer)");
    std::string ct_base = "10", ct_x = "1000";
    std::string ct_variant = "all";
    cmd_count->add_option("--base", ct_base, "base b")->check(u64v);
    cmd_count->add_option("--max-x", ct_x, "upper bound x")->check(u64v);
    cmd_count->add_option("--variant", ct_variant, "all | star | even")
        ->check(CLI::IsMember({"all", "star", "even"}));

    // ---- ap-count ----
    auto* cmd_ap = app.add_subcommand("ap-count",
                                      "count Pi_b(L, q, a) (prints one integer)");
    std::string ap_base = "10", ap_L = "2", ap_q = "1";
    long long ap_a = 0;
    bool ap_nocoprime = false;
    cmd_ap->add_option("--base", ap_base)->check(u64v);
    cmd_ap->add_option("--block-L", ap_L)->check(u64v);
    cmd_ap->add_option("--modulus", ap_q)->check(u64v);
    cmd_ap->add_option("--residue", ap_a, "residue class a");
    cmd_ap->add_flag("--no-coprime", ap_nocoprime, "drop the (l,b)=1 filter");

    // ---- square-pairs ----
    auto* cmd_sq = app.add_subcommand(
        "square-pairs", "count pairs n ~ N, l in Pi_b(L,q,a) with n^2 | l; --dyadic prints "
                        "CSV rows N,count for dyadic windows");
    std::string sq_base = "10", sq_L = "4", sq_q = "1", sq_N = "8";
    long long sq_a = 0;
    bool sq_dyadic = false;
    cmd_sq->add_option("--base", sq_base)->check(u64v);
    cmd_sq->add_option("--block-L", sq_L)->check(u64v);
    cmd_sq->add_option("--modulus", sq_q)->check(u64v);
    cmd_sq->add_option("--residue", sq_a);
    cmd_sq->add_option("--nmax", sq_N, "window top N")->check(u64v);
    cmd_sq->add_flag("--dyadic", sq_dyadic, "sweep dyadic windows 1,2,4,... up to --nmax");

    // ---- expsum ----
    auto* cmd_exp = app.add_subcommand(
        "expsum", "evaluate modular sums; CSV columns depend on --kind (see --help-all)");
    std::string ex_kind = "k2";
    long long ex_c = 0, ex_d = 0, ex_a = 1;
    std::string ex_q = "5", ex_r = "1", ex_N = "100";
    int ex_k = 1, ex_l = 2;
    double ex_alpha = 0.0;
    cmd_exp->add_option("--kind", ex_kind, "gauss | k2 | kummer | salie | crt | correlation | twisted | ratio")
        ->check(CLI::IsMember({"gauss", "k2", "kummer", "salie", "crt", "correlation", "twisted", "ratio"}));
    cmd_exp->add_option("--c", ex_c);
    cmd_exp->add_option("--d", ex_d);
    cmd_exp->add_option("--a", ex_a, "twist multiplier (twisted kind)");
    cmd_exp->add_option("--modulus", ex_q)->check(u64v);
    cmd_exp->add_option("--modulus2", ex_r, "second modulus (crt kind)")->check(u64v);
    cmd_exp->add_option("--nmax", ex_N, "length of incomplete sums")->check(u64v);
    cmd_exp->add_option("--alpha", ex_alpha, "real twist");
    cmd_exp->add_option("--exp-k", ex_k, "first exponent (ratio kind)");
    cmd_exp->add_option("--exp-l", ex_l, "second exponent (ratio kind)");

    // ---- harmonics ----
    auto* cmd_har = app.add_subcommand("harmonics", "digit-harmonic values and checks");
    std::string ha_kind = "phi";
    std::string ha_base = "10", ha_x = "1000000";
    unsigned ha_N = 2, ha_K = 1, ha_M = 0;
    double ha_alpha = 0.0, ha_beta = 0.0, ha_delta = 1.0;
    std::string ha_q = "7";
    cmd_har->add_option("--kind", ha_kind, "phi | product | moment | sum-to-product | incomplete | shift")
        ->check(CLI::IsMember({"phi", "product", "moment", "sum-to-product", "incomplete", "shift"}));
    cmd_har->add_option("--base", ha_base)->check(u64v);
    cmd_har->add_option("--alpha", ha_alpha);
    cmd_har->add_option("--beta", ha_beta);
    cmd_har->add_option("--bigN", ha_N, "product length N");
    cmd_har->add_option("--bigK", ha_K, "moment exponent half K");
    cmd_har->add_option("--bigM", ha_M, "shift offset M");
    cmd_har->add_option("--delta", ha_delta, "shift exponent delta");
    cmd_har->add_option("--modulus", ha_q)->check(u64v);
    cmd_har->add_option("--max-x", ha_x)->check(u64v);

    // ---- sieve ----
    auto* cmd_sv = app.add_subcommand("sieve", "large-sieve quantities for square moduli");
    std::string sv_kind = "delta";
    std::string sv_D = "5", sv_N = "10", sv_q = "1";
    double sv_eps = 0.1, sv_alpha = 0.0, sv_beta = 0.0;
    unsigned sv_bigN = 2, sv_bigK = 1;
    std::string sv_base = "10";
    cmd_sv->add_option("--kind", sv_kind, "delta | count | sup | quadform | moment")
        ->check(CLI::IsMember({"delta", "count", "sup", "quadform", "moment"}));
    cmd_sv->add_option("--dmax", sv_D)->check(u64v);
    cmd_sv->add_option("--nmax", sv_N)->check(u64v);
    cmd_sv->add_option("--modulus", sv_q)->check(u64v);
    cmd_sv->add_option("--epsilon", sv_eps);
    cmd_sv->add_option("--alpha", sv_alpha);
    cmd_sv->add_option("--beta", sv_beta);
    cmd_sv->add_option("--base", sv_base)->check(u64v);
    cmd_sv->add_option("--bigN", sv_bigN);
    cmd_sv->add_option("--bigK", sv_bigK);

    // ---- equidist ----
    auto* cmd_eq = app.add_subcommand(
        "equidist", "square-free palindromes in progressions vs the density main term; "
                    "CSV columns: x,q,a,count,main_term,abs_err,rel_err,sigma_hat");
    std::string eq_base = "10", eq_xs = "1e4,1e6", eq_moduli = "7,13";
    std::string eq_out = "csv", eq_output, eq_baseline;
    cmd_eq->add_option("--base", eq_base)->check(u64v);
    cmd_eq->add_option("--xs", eq_xs, "comma-separated scales");
    cmd_eq->add_option("--moduli", eq_moduli, "comma-separated moduli (coprime to b^3-b)");
    cmd_eq->add_option("--out", eq_out, "csv | json | tsv")
        ->check(CLI::IsMember({"csv", "json", "tsv"}));
    cmd_eq->add_option("--output", eq_output, "write to this path instead of stdout");
    cmd_eq->add_option("--baseline", eq_baseline, "recorded in metadata");

    // ---- verify ----
    auto* cmd_vf = app.add_subcommand(
        "verify", "run a named check (or 'all' / 'list'); prints PASS/FAIL per check");
    std::string vf_name = "all";
    std::string vf_q = "0", vf_n = "0", vf_x = "0", vf_l = "0", vf_d = "0", vf_trials = "0";
    std::string vf_baseline;
    cmd_vf->add_option("check", vf_name, "check id, 'all', or 'list'");
    cmd_vf->add_option("--qmax", vf_q)->check(u64v);
    cmd_vf->add_option("--nmax", vf_n)->check(u64v);
    cmd_vf->add_option("--max-x", vf_x)->check(u64v);
    cmd_vf->add_option("--lmax", vf_l)->check(u64v);
    cmd_vf->add_option("--dmax", vf_d)->check(u64v);
    cmd_vf->add_option("--trials", vf_trials)->check(u64v);
    cmd_vf->add_option("--baseline", vf_baseline, "baseline JSON path");

    // ---- baseline ----
    auto* cmd_bl = app.add_subcommand("baseline",
                                      "regenerate the frozen-constant file and print a diff");
    std::string bl_path = "data/baselines.json";
    cmd_bl->add_option("--baseline", bl_path, "baseline JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto as_u64 = [](const std::string& s) {
        uint64_t v = 0;
        parse_exact_u64(s, v);
        return v;
    };

    if (cmd_enum->parsed()) {
        uint64_t base = as_u64(en_base), L = as_u64(en_L), limit = as_u64(en_limit);
        std::string out = "# schema=1\n";
        if (en_level == 0) {
            out += "value\n";
            ps_pal_iter* it = nullptr;
            if (ps_status s = ps_pal_iter_new((uint32_t)base, (uint32_t)L, &it); s)
                return fail_status(s, "enumerate");
            uint64_t v;
            int has;
            uint64_t n = 0;
            while (ps_pal_iter_next(it, &v, &has) == PS_OK && has) {
                out += std::to_string(v) + "\n";
                if (limit && ++n >= limit) break;
            }
            ps_pal_iter_free(it);
        } else {
            out += "skeleton,offset,value\n";
            ps_quasi_iter* it = nullptr;
            if (ps_status s = ps_quasi_iter_new((uint32_t)base, (uint32_t)L, en_level, &it); s)
                return fail_status(s, "enumerate");
            uint64_t a, m, v;
            int has;
            uint64_t n = 0;
            while (ps_quasi_iter_next(it, &a, &m, &v, &has) == PS_OK && has) {
                out += std::to_string(a) + "," + std::to_string(m) + "," + std::to_string(v) + "\n";
                if (limit && ++n >= limit) break;
            }
            ps_quasi_iter_free(it);
        }
        return emit(out, "");
    }

    if (cmd_count->parsed()) {
        ps_pal_variant v = ct_variant == "star"   ? PS_PAL_STAR
                           : ct_variant == "even" ? PS_PAL_EVEN_EXP
                                                  : PS_PAL_ALL;
        uint64_t count = 0;
        if (ps_status s = ps_pal_count_upto((uint32_t)as_u64(ct_base), as_u64(ct_x), v, &count); s)
            return fail_status(s, "count");
        std::cout << count << "\n";
        return 0;
    }

    if (cmd_ap->parsed()) {
        uint64_t count = 0;
        if (ps_status s = ps_pal_count_in_ap((uint32_t)as_u64(ap_base), (uint32_t)as_u64(ap_L),
                                             as_u64(ap_q), ap_a, ap_nocoprime ? 0 : 1, &count);
            s)
            return fail_status(s, "ap-count");
        std::cout << count << "\n";
        return 0;
    }

    if (cmd_sq->parsed()) {
        uint32_t base = (uint32_t)as_u64(sq_base), L = (uint32_t)as_u64(sq_L);
        uint64_t q = as_u64(sq_q), N = as_u64(sq_N);
        if (!sq_dyadic) {
            uint64_t count = 0;
            if (ps_status s = ps_pal_count_square_pairs(base, L, q, sq_a, N, &count); s)
                return fail_status(s, "square-pairs");
            std::cout << count << "\n";
            return 0;
        }
        std::string out = "# schema=1\nN,count\n";
        for (uint64_t w = 1; w <= N; w *= 2) {
            uint64_t count = 0;
            if (ps_status s = ps_pal_count_square_pairs(base, L, q, sq_a, w, &count); s)
                return fail_status(s, "square-pairs");
            out += std::to_string(w) + "," + std::to_string(count) + "\n";
        }
        return emit(out, "");
    }

    if (cmd_exp->parsed()) {
        uint64_t q = as_u64(ex_q), r = as_u64(ex_r), N = as_u64(ex_N);
        std::string out = "# schema=1\n";
        char line[256];
        if (ex_kind == "gauss" || ex_kind == "k2" || ex_kind == "kummer") {
            ps_complex z;
            double tol;
            ps_status s = ex_kind == "gauss" ? ps_gauss_star(ex_c, q, &z, &tol)
                          : ex_kind == "k2"  ? ps_k2(ex_c, ex_d, q, &z, &tol)
                                             : ps_kummer2(ex_c, ex_d, q, &z, &tol);
            if (s) return fail_status(s, "expsum");
            out += "kind,c,d,q,re,im,abs,tolerance\n";
            snprintf(line, sizeof line, "%s,%lld,%lld,%llu,%.12g,%.12g,%.12g,%.3g\n",
                     ex_kind.c_str(), (long long)ex_c, (long long)ex_d,
                     (unsigned long long)q, z.re, z.im, std::hypot(z.re, z.im), tol);
            out += line;
        } else if (ex_kind == "salie") {
            ps_complex lhs, rhs;
            int agree;
            if (ps_status s = ps_k2_salie_check(ex_c, ex_d, q, &lhs, &rhs, &agree); s)
                return fail_status(s, "expsum");
            out += "c,d,q,formula_re,formula_im,defn_re,defn_im,agree\n";
            snprintf(line, sizeof line, "%lld,%lld,%llu,%.12g,%.12g,%.12g,%.12g,%d\n",
                     (long long)ex_c, (long long)ex_d, (unsigned long long)q, lhs.re, lhs.im,
                     rhs.re, rhs.im, agree);
            out += line;
        } else if (ex_kind == "crt") {
            ps_complex lhs, rhs;
            int agree;
            if (ps_status s = ps_k2_crt_check(ex_c, ex_d, q, r, &lhs, &rhs, &agree); s)
                return fail_status(s, "expsum");
            out += "c,d,q,r,lhs_re,lhs_im,rhs_re,rhs_im,agree\n";
            snprintf(line, sizeof line, "%lld,%lld,%llu,%llu,%.12g,%.12g,%.12g,%.12g,%d\n",
                     (long long)ex_c, (long long)ex_d, (unsigned long long)q,
                     (unsigned long long)r, lhs.re, lhs.im, rhs.re, rhs.im, agree);
            out += line;
        } else if (ex_kind == "correlation") {
            double sum_form, rama, bound;
            int id_ok, b_ok;
            if (ps_status s =
                    ps_k2_correlation_check(ex_c, ex_d, q, &sum_form, &rama, &bound, &id_ok, &b_ok);
                s)
                return fail_status(s, "expsum");
            out += "c,d,q,sum_form,ramanujan_form,bound,identity_ok,bound_ok\n";
            snprintf(line, sizeof line, "%lld,%lld,%llu,%.12g,%.12g,%.12g,%d,%d\n",
                     (long long)ex_c, (long long)ex_d, (unsigned long long)q, sum_form, rama,
                     bound, id_ok, b_ok);
            out += line;
        } else if (ex_kind == "twisted") {
            double value, b1, b2;
            int ok;
            if (ps_status s = ps_twisted_incomplete_k2(ex_alpha, ex_a, ex_c, q, N, 1e300, 0.1,
                                                       &value, &b1, &b2, &ok);
                s)
                return fail_status(s, "expsum");
            out += "alpha,a,c,q,N,value,bound_n,bound_sqrtq\n";
            snprintf(line, sizeof line, "%.6g,%lld,%lld,%llu,%llu,%.12g,%.12g,%.12g\n", ex_alpha,
                     (long long)ex_a, (long long)ex_c, (unsigned long long)q,
                     (unsigned long long)N, value, b1, b2);
            out += line;
        } else {  // ratio
            double ratio;
            if (ps_status s = ps_shparlinski_ratio(ex_c, ex_d, ex_k, ex_l, q, &ratio); s)
                return fail_status(s, "expsum");
            out += "c,d,k,l,q,ratio\n";
            snprintf(line, sizeof line, "%lld,%lld,%d,%d,%llu,%.12g\n", (long long)ex_c,
                     (long long)ex_d, ex_k, ex_l, (unsigned long long)q, ratio);
            out += line;
        }
        return emit(out, "");
    }

    if (cmd_har->parsed()) {
        uint32_t base = (uint32_t)as_u64(ha_base);
        uint64_t q = as_u64(ha_q);
        std::string out = "# schema=1\n";
        char line[256];
        if (ha_kind == "phi") {
            double v;
            if (ps_status s = ps_phi_little(ha_alpha, base, &v); s) return fail_status(s, "harmonics");
            out += "alpha,base,value\n";
            snprintf(line, sizeof line, "%.10g,%u,%.12g\n", ha_alpha, base, v);
            out += line;
        } else if (ha_kind == "product") {
            double v;
            if (ps_status s = ps_phi_big(ha_alpha, base, ha_N, &v); s)
                return fail_status(s, "harmonics");
            out += "alpha,base,N,value\n";
            snprintf(line, sizeof line, "%.10g,%u,%u,%.12g\n", ha_alpha, base, ha_N, v);
            out += line;
        } else if (ha_kind == "moment") {
            uint64_t v;
            if (ps_status s = ps_phi_moment_exact(base, ha_N, ha_K, &v); s)
                return fail_status(s, "harmonics");
            out += "base,N,K,moment\n";
            snprintf(line, sizeof line, "%u,%u,%u,%llu\n", base, ha_N, ha_K,
                     (unsigned long long)v);
            out += line;
        } else if (ha_kind == "sum-to-product") {
            double lhs, rhs;
            int holds;
            if (ps_status s = ps_pal_exp_sum_check(ha_alpha, base, ha_N, &lhs, &rhs, &holds); s)
                return fail_status(s, "harmonics");
            out += "alpha,base,N,lhs,rhs,holds\n";
            snprintf(line, sizeof line, "%.10g,%u,%u,%.12g,%.12g,%d\n", ha_alpha, base, ha_N, lhs,
                     rhs, holds);
            out += line;
        } else if (ha_kind == "incomplete") {
            double lhs, rhs;
            int holds;
            if (ps_status s = ps_incomplete_sum_check(ha_alpha, base, as_u64(ha_x), &lhs, &rhs, &holds);
                s)
                return fail_status(s, "harmonics");
            out += "alpha,base,x,lhs,rhs,holds\n";
            snprintf(line, sizeof line, "%.10g,%u,%llu,%.12g,%.12g,%d\n", ha_alpha, base,
                     (unsigned long long)as_u64(ha_x), lhs, rhs, holds);
            out += line;
        } else {  // shift
            double lhs, rhs;
            int agree;
            if (ps_status s = ps_algebraic_shift_check(q, base, ha_beta, ha_M, ha_N, ha_delta,
                                                       &lhs, &rhs, &agree);
                s)
                return fail_status(s, "harmonics");
            out += "q,base,beta,M,N,delta,lhs,rhs,agree\n";
            snprintf(line, sizeof line, "%llu,%u,%.10g,%u,%u,%.3g,%.12g,%.12g,%d\n",
                     (unsigned long long)q, base, ha_beta, ha_M, ha_N, ha_delta, lhs, rhs, agree);
            out += line;
        }
        return emit(out, "");
    }

    if (cmd_sv->parsed()) {
        uint64_t D = as_u64(sv_D), N = as_u64(sv_N), q = as_u64(sv_q);
        std::string out = "# schema=1\n";
        char line[256];
        if (sv_kind == "delta") {
            double v;
            if (ps_status s = ps_delta_bound(D, N, q, sv_eps, &v); s) return fail_status(s, "sieve");
            out += "D,N,q,epsilon,delta\n";
            snprintf(line, sizeof line, "%llu,%llu,%llu,%.4g,%.12g\n", (unsigned long long)D,
                     (unsigned long long)N, (unsigned long long)q, sv_eps, v);
            out += line;
        } else if (sv_kind == "count" || sv_kind == "sup") {
            uint64_t v;
            ps_status s = sv_kind == "count" ? ps_spacing_count(D, N, q, sv_alpha, &v)
                                             : ps_spacing_sup(D, N, q, &v);
            if (s) return fail_status(s, "sieve");
            out += sv_kind == "count" ? "D,N,q,alpha,count\n" : "D,N,q,sup\n";
            if (sv_kind == "count")
                snprintf(line, sizeof line, "%llu,%llu,%llu,%.10g,%llu\n", (unsigned long long)D,
                         (unsigned long long)N, (unsigned long long)q, sv_alpha,
                         (unsigned long long)v);
            else
                snprintf(line, sizeof line, "%llu,%llu,%llu,%llu\n", (unsigned long long)D,
                         (unsigned long long)N, (unsigned long long)q, (unsigned long long)v);
            out += line;
        } else if (sv_kind == "quadform") {
            std::vector<ps_complex> gamma(2 * N + 1);
            uint64_t state = seed ? seed : 1;
            for (auto& g : gamma) {  // splitmix64-driven unit coefficients
                state += 0x9e3779b97f4a7c15ull;
                uint64_t z = state;
                z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
                z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
                z ^= z >> 31;
                double ang = 6.283185307179586 * (double)(z >> 11) * 0x1.0p-53;
                g = {std::cos(ang), std::sin(ang)};
            }
            double value, l2;
            if (ps_status s = ps_ls_quadratic_form(gamma.data(), gamma.size(), D, q, &value, &l2);
                s)
                return fail_status(s, "sieve");
            double delta;
            ps_delta_bound(D, N, q, sv_eps, &delta);
            out += "D,N,q,seed,value,gamma_l2,ratio_to_delta\n";
            snprintf(line, sizeof line, "%llu,%llu,%llu,%llu,%.12g,%.12g,%.12g\n",
                     (unsigned long long)D, (unsigned long long)N, (unsigned long long)q,
                     (unsigned long long)seed, value, l2, value / (delta * l2));
            out += line;
        } else {  // moment
            double v;
            if (ps_status s = ps_phi_moment_square_moduli((uint32_t)as_u64(sv_base), sv_bigN,
                                                          sv_bigK, q, D, sv_beta, &v);
                s)
                return fail_status(s, "sieve");
            out += "base,N,K,q,D,beta,value\n";
            snprintf(line, sizeof line, "%llu,%u,%u,%llu,%llu,%.10g,%.12g\n",
                     (unsigned long long)as_u64(sv_base), sv_bigN, sv_bigK,
                     (unsigned long long)q, (unsigned long long)D, sv_beta, v);
            out += line;
        }
        return emit(out, "");
    }

    if (cmd_eq->parsed()) {
        std::vector<uint64_t> xs, moduli;
        if (!parse_u64_list(eq_xs, xs)) {
            std::cerr << "error: bad --xs list\n";
            return 2;
        }
        if (!parse_u64_list(eq_moduli, moduli)) {
            std::cerr << "error: bad --moduli list\n";
            return 2;
        }
        ps_experiment* exp = nullptr;
        if (ps_status s = ps_experiment_new((uint32_t)as_u64(eq_base), &exp); s)
            return fail_status(s, "equidist");
        for (uint64_t x : xs) ps_experiment_add_scale(exp, x);
        for (uint64_t q : moduli) ps_experiment_add_modulus(exp, q);
        ps_experiment_set_threads(exp, threads);
        ps_experiment_set_seed(exp, seed);
        if (ps_status s = ps_experiment_run(exp); s) {
            ps_experiment_free(exp);
            return fail_status(s, "equidist");
        }
        int format = eq_out == "json" ? 1 : eq_out == "tsv" ? 2 : 0;
        size_t needed = 0;
        ps_experiment_render(exp, format, nullptr, 0, &needed);
        std::vector<char> buf(needed);
        if (ps_status s = ps_experiment_render(exp, format, buf.data(), buf.size(), &needed); s) {
            ps_experiment_free(exp);
            return fail_status(s, "equidist");
        }
        ps_experiment_free(exp);
        return emit(std::string(buf.data()), eq_output);
    }

    if (cmd_vf->parsed()) {
        if (vf_name == "list") {
            for (size_t i = 0; i < ps_verify_count(); ++i)
                std::cout << ps_verify_id(i) << (ps_verify_needs_baseline(i) ? " [baseline]" : "")
                          << " - " << ps_verify_summary(i) << "\n";
            return 0;
        }
        ps_verify_options opt{};
        opt.qmax = as_u64(vf_q);
        opt.nmax = as_u64(vf_n);
        opt.xmax = as_u64(vf_x);
        opt.lmax = as_u64(vf_l);
        opt.dmax = as_u64(vf_d);
        opt.trials = as_u64(vf_trials);
        opt.seed = seed;
        opt.threads = threads ? threads : 0;
        opt.baseline_path = vf_baseline.empty() ? nullptr : vf_baseline.c_str();

        std::vector<std::string> ids;
        if (vf_name == "all") {
            for (size_t i = 0; i < ps_verify_count(); ++i) ids.push_back(ps_verify_id(i));
        } else {
            ids.push_back(vf_name);
        }
        int failures = 0;
        for (const std::string& id : ids) {
            int passed = 0;
            char detail[512];
            ps_status s = ps_verify_run(id.c_str(), &opt, &passed, detail, sizeof detail);
            if (s == PS_ERR_INVALID && std::string(ps_last_error()).find("unknown check") == 0) {
                std::cerr << "error: " << ps_last_error() << "\n";
                return 2;
            }
            if (s) {
                std::cout << "[FAIL] " << id << " - " << ps_status_name(s) << ": "
                          << ps_last_error() << "\n";
                ++failures;
                continue;
            }
            std::cout << (passed ? "[PASS] " : "[FAIL] ") << id << " - " << detail << "\n";
            if (!passed) ++failures;
        }
        if (failures) std::cout << failures << " check(s) failed\n";
        return failures ? 1 : 0;
    }

    if (cmd_bl->parsed()) {
        std::string previous;
        {
            std::ifstream in(bl_path);
            if (in) {
                std::stringstream ss;
                ss << in.rdbuf();
                previous = ss.str();
            }
        }
        unsigned t = threads ? threads : 4;
        if (ps_status s = ps_baseline_write(bl_path.c_str(), t, seed); s)
            return fail_status(s, "baseline");
        std::ifstream in(bl_path);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string current = ss.str();
        if (previous.empty()) {
            std::cout << "wrote " << bl_path << " (new file)\n";
        } else if (previous == current) {
            std::cout << "wrote " << bl_path << " (no drift)\n";
        } else {
            std::cout << "wrote " << bl_path << " (drift detected)\n";
            auto jold = nlohmann::json::parse(previous, nullptr, false);
            auto jnew = nlohmann::json::parse(current, nullptr, false);
            if (!jold.is_discarded() && !jnew.is_discarded()) {
                for (auto& [key, val] : jnew["entries"].items()) {
                    if (!jold["entries"].contains(key))
                        std::cout << "  + " << key << " = " << val["constant"] << "\n";
                    else if (jold["entries"][key]["constant"] != val["constant"])
                        std::cout << "  ~ " << key << ": " << jold["entries"][key]["constant"]
                                  << " -> " << val["constant"] << "\n";
                }
                for (auto& [key, val] : jold["entries"].items())
                    if (!jnew["entries"].contains(key))
                        std::cout << "  - " << key << " (" << val["constant"] << ")\n";
            }
        }
        return 0;
    }

    return 2;
}
