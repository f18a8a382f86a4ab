// extern "C" boundary: maps the C++ core onto the opaque-handle/error-code
// API in include/palsieve.h. Exceptions never cross this file.

#include "palsieve.h"

#include <cstring>
#include <fstream>
#include <string>

#include "core/arith.hpp"
#include "core/digits.hpp"
#include "core/equidist.hpp"
#include "core/expsums.hpp"
#include "core/harmonics.hpp"
#include "core/largesieve.hpp"
#include "core/palsets.hpp"
#include "core/verify.hpp"

using namespace palsieve;

namespace {

thread_local std::string g_last_error;

ps_status fail(ps_status code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
ps_status guarded(Fn&& fn) {
    try {
        fn();
        return PS_OK;
    } catch (const std::out_of_range& e) {
        return fail(PS_ERR_RANGE, e.what());
    } catch (const std::domain_error& e) {
        return fail(PS_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PS_ERR_INVALID, e.what());
    } catch (const std::runtime_error& e) {
        // baseline and convergence failures arrive as runtime_error
        std::string msg = e.what();
        if (msg.find("baseline") != std::string::npos) return fail(PS_ERR_BASELINE, e.what());
        if (msg.find("convergence") != std::string::npos) return fail(PS_ERR_NUMERIC, e.what());
        return fail(PS_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(PS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(PS_ERR_INTERNAL, "unknown error");
    }
}

ps_complex to_c(cplx z) { return {z.real(), z.imag()}; }

ps_status require(bool ok, const char* what) {
    return ok ? PS_OK : fail(PS_ERR_INVALID, what);
}

void copy_out(const std::string& s, char* buf, size_t cap, size_t* needed) {
    if (needed) *needed = s.size() + 1;
    if (buf && cap) {
        size_t n = std::min(cap - 1, s.size());
        std::memcpy(buf, s.data(), n);
        buf[n] = '\0';
    }
}

}  // namespace

extern "C" {

const char* ps_status_name(ps_status status) {
    switch (status) {
        case PS_OK: return "ok";
        case PS_ERR_RANGE: return "range";
        case PS_ERR_DOMAIN: return "domain";
        case PS_ERR_INVALID: return "invalid";
        case PS_ERR_IO: return "io";
        case PS_ERR_NUMERIC: return "numeric";
        case PS_ERR_BASELINE: return "baseline";
        default: return "internal";
    }
}

const char* ps_last_error(void) { return g_last_error.c_str(); }

const char* ps_version(void) { return "0.1.0"; }

/* digits ------------------------------------------------------------ */

ps_status ps_digits_of(uint64_t n, uint32_t base, int32_t length, uint32_t* out, size_t cap,
                       size_t* out_len) {
    if (ps_status s = require(out && out_len, "null output"); s) return s;
    return guarded([&] {
        digit_vector dv = length < 0 ? digits_of(n, base)
                                     : digits_of(n, base, (size_t)length);
        if (dv.digits.size() > cap) throw std::out_of_range("digit buffer too small");
        std::copy(dv.digits.begin(), dv.digits.end(), out);
        *out_len = dv.digits.size();
    });
}

ps_status ps_digits_value(const uint32_t* digits, size_t len, uint32_t base, uint64_t* out) {
    if (ps_status s = require(digits && out, "null argument"); s) return s;
    return guarded([&] {
        digit_vector dv;
        dv.base = base;
        dv.digits.assign(digits, digits + len);
        *out = value_of(dv);
    });
}

ps_status ps_reverse_digits(uint64_t n, uint32_t base, uint32_t L, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = reverse_digits(n, base, L); });
}

ps_status ps_is_palindrome(uint64_t n, uint32_t base, int* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] {
        if (n == 0) throw std::domain_error("is_palindrome: n >= 1");
        *out = is_palindrome(n, base) ? 1 : 0;
    });
}

ps_status ps_is_quasi_palindrome(uint64_t n, uint32_t base, uint32_t level, int* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = is_quasi_palindrome(n, base, level) ? 1 : 0; });
}

/* arith -------------------------------------------------------------- */

ps_status ps_factorize(uint64_t n, ps_factor* out, size_t cap, size_t* out_count) {
    if (ps_status s = require(out_count, "null output"); s) return s;
    return guarded([&] {
        factorization f = factorize(n);
        *out_count = f.size();
        if (f.size() > cap) throw std::out_of_range("factor buffer too small");
        for (size_t i = 0; i < f.size(); ++i) out[i] = {f[i].p, f[i].e};
    });
}

ps_status ps_arith_functions(uint64_t n, ps_arith_info* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] {
        arith_info info = arithmetic_functions(n);
        *out = {info.phi, info.mobius, info.tau, info.odd_part};
    });
}

ps_status ps_is_squarefree(uint64_t n, int* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = is_squarefree(n) ? 1 : 0; });
}

ps_status ps_mod_inverse(int64_t a, uint64_t q, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = mod_inverse(a, q); });
}

ps_status ps_crt_combine(int64_t a1, uint64_t q1, int64_t a2, uint64_t q2, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = crt_combine(a1, q1, a2, q2); });
}

ps_status ps_ramanujan_c(uint64_t q, int64_t n, int64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = ramanujan_c(q, n); });
}

ps_status ps_singular_series(uint64_t n, int64_t* num, uint64_t* den) {
    if (ps_status s = require(num && den, "null output"); s) return s;
    return guarded([&] {
        rational r = singular_series(n);
        *num = r.num;
        *den = r.den;
    });
}

/* palindrome families ------------------------------------------------ */

ps_status ps_pal_count_upto(uint32_t base, uint64_t x, ps_pal_variant variant, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    if (variant < PS_PAL_ALL || variant > PS_PAL_EVEN_EXP)
        return fail(PS_ERR_INVALID, "bad variant");
    return guarded([&] {
        pal_variant v = variant == PS_PAL_ALL    ? pal_variant::all
                        : variant == PS_PAL_STAR ? pal_variant::star
                                                 : pal_variant::even_exp;
        *out = count_upto(base, x, v);
    });
}

ps_status ps_pal_block_size(uint32_t base, uint32_t L, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] {
        if (base < 2) throw std::domain_error("base must be >= 2");
        *out = pal_block_size(base, L);
    });
}

ps_status ps_pal_count_in_ap(uint32_t base, uint32_t L, uint64_t q, int64_t a, int coprime,
                             uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = count_in_ap(base, L, q, a, coprime != 0); });
}

ps_status ps_pal_count_divisible(uint32_t base, uint32_t L, uint64_t m, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = count_divisible(base, L, m); });
}

ps_status ps_pal_count_square_pairs(uint32_t base, uint32_t L, uint64_t q, int64_t a,
                                    uint64_t N, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = count_square_pairs(base, L, q, a, N); });
}

ps_status ps_pal_bs_max_ratio(uint32_t base, uint32_t L, uint64_t q, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = bs_max_ratio(base, L, q); });
}

struct ps_pal_iter {
    pal_block_iter iter;
};

ps_status ps_pal_iter_new(uint32_t base, uint32_t L, ps_pal_iter** out) {
    if (ps_status s = require(out, "null output"); s) return s;
    *out = nullptr;
    return guarded([&] { *out = new ps_pal_iter{pal_block_iter(base, L)}; });
}

ps_status ps_pal_iter_next(ps_pal_iter* iter, uint64_t* value, int* has_value) {
    if (ps_status s = require(iter && value && has_value, "null argument"); s) return s;
    return guarded([&] { *has_value = iter->iter.next(*value) ? 1 : 0; });
}

void ps_pal_iter_free(ps_pal_iter* iter) { delete iter; }

struct ps_quasi_iter {
    quasi_cover_iter iter;
};

ps_status ps_quasi_iter_new(uint32_t base, uint32_t L, uint32_t level, ps_quasi_iter** out) {
    if (ps_status s = require(out, "null output"); s) return s;
    *out = nullptr;
    return guarded([&] { *out = new ps_quasi_iter{quasi_cover_iter(base, L, level)}; });
}

ps_status ps_quasi_iter_next(ps_quasi_iter* iter, uint64_t* skeleton, uint64_t* offset,
                             uint64_t* value, int* has_value) {
    if (ps_status s = require(iter && skeleton && offset && value && has_value, "null argument"); s)
        return s;
    return guarded([&] {
        quasi_cover_triple tr;
        if (iter->iter.next(tr)) {
            *skeleton = tr.skeleton;
            *offset = tr.offset;
            *value = tr.value;
            *has_value = 1;
        } else {
            *has_value = 0;
        }
    });
}

void ps_quasi_iter_free(ps_quasi_iter* iter) { delete iter; }

/* exponential sums ---------------------------------------------------- */

ps_status ps_gauss_star(int64_t a, uint64_t q, ps_complex* out, double* tol) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] {
        sum_result r = gauss_star(a, q);
        *out = to_c(r.value);
        if (tol) *tol = r.tolerance;
    });
}

ps_status ps_k2(int64_t c, int64_t d, uint64_t q, ps_complex* out, double* tol) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] {
        sum_result r = k2_sum(c, d, q);
        *out = to_c(r.value);
        if (tol) *tol = r.tolerance;
    });
}

ps_status ps_kummer2(int64_t c, int64_t d, uint64_t s_mod, ps_complex* out, double* tol) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] {
        sum_result r = kummer2_sum(c, d, s_mod);
        *out = to_c(r.value);
        if (tol) *tol = r.tolerance;
    });
}

ps_status ps_k2_salie_check(int64_t c, int64_t d, uint64_t q, ps_complex* formula,
                            ps_complex* definition, int* agree) {
    if (ps_status s = require(agree, "null output"); s) return s;
    return guarded([&] {
        pair_check r = k2_salie_check(c, d, q);
        if (formula) *formula = to_c(r.lhs);
        if (definition) *definition = to_c(r.rhs);
        *agree = r.agree ? 1 : 0;
    });
}

ps_status ps_k2_crt_check(int64_t c, int64_t d, uint64_t q, uint64_t r, ps_complex* lhs,
                          ps_complex* rhs, int* agree) {
    if (ps_status s = require(agree, "null output"); s) return s;
    return guarded([&] {
        pair_check chk = k2_crt_check(c, d, q, r);
        if (lhs) *lhs = to_c(chk.lhs);
        if (rhs) *rhs = to_c(chk.rhs);
        *agree = chk.agree ? 1 : 0;
    });
}

ps_status ps_k2_correlation_check(int64_t c, int64_t d, uint64_t q, double* sum_form,
                                  double* ramanujan_form, double* bound, int* identity_ok,
                                  int* bound_ok) {
    if (ps_status s = require(identity_ok && bound_ok, "null output"); s) return s;
    return guarded([&] {
        correlation_result r = correlation_check(c, d, q);
        if (sum_form) *sum_form = r.sum_form;
        if (ramanujan_form) *ramanujan_form = r.ramanujan_form;
        if (bound) *bound = r.bound;
        *identity_ok = r.identity_ok ? 1 : 0;
        *bound_ok = r.bound_ok ? 1 : 0;
    });
}

ps_status ps_gauss_star_structure(int64_t a, uint64_t q, ps_complex* value,
                                  int* vanish_predicted, int* vanishes, int* bound_ok) {
    if (ps_status s = require(vanishes, "null output"); s) return s;
    return guarded([&] {
        gauss_structure_result r = gauss_star_structure_check(a, q);
        if (value) *value = to_c(r.value);
        if (vanish_predicted) *vanish_predicted = r.vanish_predicted ? 1 : 0;
        *vanishes = r.vanishes_as_predicted ? 1 : 0;
        if (bound_ok) *bound_ok = r.bound_ok ? 1 : 0;
    });
}

ps_status ps_twisted_incomplete_k2(double alpha, int64_t a, int64_t c, uint64_t q, uint64_t N,
                                   double C, double eps, double* value, double* bound1,
                                   double* bound2, int* ok) {
    if (ps_status s = require(value, "null output"); s) return s;
    return guarded([&] {
        twisted_sum_result r = twisted_incomplete_k2(alpha, a, c, q, N, C, eps);
        *value = r.value;
        if (bound1) *bound1 = r.bound1;
        if (bound2) *bound2 = r.bound2;
        if (ok) *ok = r.ok ? 1 : 0;
    });
}

ps_status ps_shparlinski_ratio(int64_t c, int64_t d, int32_t k, int32_t l, uint64_t q,
                               double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = shparlinski_ratio(c, d, k, l, q); });
}

/* digit harmonics ------------------------------------------------------ */

ps_status ps_phi_little(double alpha, uint32_t base, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = phi_little(alpha, base); });
}

ps_status ps_phi_big(double alpha, uint32_t base, uint32_t N, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = phi_big(alpha, base, N); });
}

ps_status ps_phi_moment_exact(uint32_t base, uint32_t N, uint32_t K, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = phi_moment_exact(base, N, K); });
}

ps_status ps_pal_exp_sum_check(double alpha, uint32_t base, uint32_t N, double* lhs,
                               double* rhs, int* holds) {
    if (ps_status s = require(holds, "null output"); s) return s;
    return guarded([&] {
        bound_check r = pal_exp_sum_check(alpha, base, N);
        if (lhs) *lhs = r.lhs;
        if (rhs) *rhs = r.rhs;
        *holds = r.holds ? 1 : 0;
    });
}

ps_status ps_incomplete_sum_check(double alpha, uint32_t base, uint64_t x, double* lhs,
                                  double* rhs, int* holds) {
    if (ps_status s = require(holds, "null output"); s) return s;
    return guarded([&] {
        bound_check r = incomplete_sum_check(alpha, base, x);
        if (lhs) *lhs = r.lhs;
        if (rhs) *rhs = r.rhs;
        *holds = r.holds ? 1 : 0;
    });
}

ps_status ps_algebraic_shift_check(uint64_t q, uint32_t base, double beta, uint32_t M,
                                   uint32_t N, double delta, double* lhs, double* rhs,
                                   int* agree) {
    if (ps_status s = require(agree, "null output"); s) return s;
    return guarded([&] {
        shift_check r = algebraic_shift_check(q, base, beta, M, N, delta);
        if (lhs) *lhs = r.lhs;
        if (rhs) *rhs = r.rhs;
        *agree = r.agree ? 1 : 0;
    });
}

/* large sieve ----------------------------------------------------------- */

ps_status ps_delta_bound(uint64_t D, uint64_t N, uint64_t q, double eps, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = delta_bound(D, N, q, eps); });
}

ps_status ps_spacing_count(uint64_t D, uint64_t N, uint64_t q, double alpha, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = spacing_count(D, N, q, alpha); });
}

ps_status ps_spacing_sup(uint64_t D, uint64_t N, uint64_t q, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = spacing_sup(D, N, q); });
}

ps_status ps_ls_quadratic_form(const ps_complex* gamma, size_t count, uint64_t D, uint64_t q,
                               double* value, double* gamma_l2) {
    if (ps_status s = require(gamma && value, "null argument"); s) return s;
    return guarded([&] {
        std::vector<cplx> g(count);
        for (size_t i = 0; i < count; ++i) g[i] = {gamma[i].re, gamma[i].im};
        quadratic_form_result r = ls_quadratic_form(g, D, q);
        *value = r.value;
        if (gamma_l2) *gamma_l2 = r.gamma_l2;
    });
}

ps_status ps_phi_moment_square_moduli(uint32_t base, uint32_t N, uint32_t K, uint64_t q,
                                      uint64_t D, double beta, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = phi_moment_square_moduli(base, N, K, q, D, beta); });
}

/* equidistribution ------------------------------------------------------ */

ps_status ps_main_term(uint32_t base, uint64_t q, uint64_t y, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = main_term(base, q, y); });
}

ps_status ps_sqfree_pal_count(uint32_t base, uint64_t y, uint64_t q, int64_t a, uint64_t* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = sqfree_pal_count(base, y, q, a); });
}

ps_status ps_discrepancy(uint32_t base, uint64_t x, uint64_t q, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = discrepancy(base, x, q); });
}

ps_status ps_e_of_q(uint32_t base, uint64_t x, uint64_t Q, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = e_of_q(base, x, Q); });
}

ps_status ps_e_of_qd(uint32_t base, uint64_t x, uint64_t Q, uint64_t D, double* out) {
    if (ps_status s = require(out, "null output"); s) return s;
    return guarded([&] { *out = e_of_qd(base, x, Q, D); });
}

struct ps_experiment {
    experiment_config config;
    experiment_report report;
    bool ran = false;
};

ps_status ps_experiment_new(uint32_t base, ps_experiment** out) {
    if (ps_status s = require(out, "null output"); s) return s;
    *out = nullptr;
    return guarded([&] {
        if (base < 2) throw std::invalid_argument("experiment: base >= 2");
        auto* e = new ps_experiment;
        e->config.base = base;
        *out = e;
    });
}

ps_status ps_experiment_add_scale(ps_experiment* exp, uint64_t x) {
    if (ps_status s = require(exp, "null handle"); s) return s;
    exp->config.scales.push_back(x);
    return PS_OK;
}

ps_status ps_experiment_add_modulus(ps_experiment* exp, uint64_t q) {
    if (ps_status s = require(exp, "null handle"); s) return s;
    exp->config.moduli.push_back(q);
    return PS_OK;
}

ps_status ps_experiment_set_threads(ps_experiment* exp, uint32_t threads) {
    if (ps_status s = require(exp, "null handle"); s) return s;
    exp->config.threads = threads ? threads : 1;
    return PS_OK;
}

ps_status ps_experiment_set_seed(ps_experiment* exp, uint64_t seed) {
    if (ps_status s = require(exp, "null handle"); s) return s;
    exp->config.seed = seed;
    return PS_OK;
}

ps_status ps_experiment_run(ps_experiment* exp) {
    if (ps_status s = require(exp, "null handle"); s) return s;
    return guarded([&] {
        exp->report = run_experiment(exp->config);
        exp->ran = true;
    });
}

ps_status ps_experiment_row_count(const ps_experiment* exp, size_t* out) {
    if (ps_status s = require(exp && out, "null argument"); s) return s;
    if (!exp->ran) return fail(PS_ERR_INVALID, "experiment has not run");
    *out = exp->report.rows.size();
    return PS_OK;
}

ps_status ps_experiment_row(const ps_experiment* exp, size_t index, ps_report_row* out) {
    if (ps_status s = require(exp && out, "null argument"); s) return s;
    if (!exp->ran) return fail(PS_ERR_INVALID, "experiment has not run");
    if (index >= exp->report.rows.size()) return fail(PS_ERR_RANGE, "row index out of range");
    const report_row& r = exp->report.rows[index];
    *out = {r.x, r.q, r.a, r.count, r.main, r.abs_err, r.rel_err, r.sigma_hat};
    return PS_OK;
}

static std::string render_report(const experiment_report& rep, int format) {
    switch (format) {
        case 0: return report_to_csv(rep);
        case 1: return report_to_json(rep);
        case 2: return report_to_tsv(rep);
        default: throw std::invalid_argument("bad format (0=csv, 1=json, 2=tsv)");
    }
}

ps_status ps_experiment_render(const ps_experiment* exp, int format, char* buf, size_t cap,
                               size_t* needed) {
    if (ps_status s = require(exp, "null handle"); s) return s;
    if (!exp->ran) return fail(PS_ERR_INVALID, "experiment has not run");
    return guarded([&] {
        std::string s = render_report(exp->report, format);
        copy_out(s, buf, cap, needed);
        if (buf && cap < s.size() + 1) throw std::out_of_range("render buffer too small");
    });
}

ps_status ps_experiment_write(const ps_experiment* exp, int format, const char* path) {
    if (ps_status s = require(exp && path, "null argument"); s) return s;
    if (!exp->ran) return fail(PS_ERR_INVALID, "experiment has not run");
    return guarded([&] {
        std::string s = render_report(exp->report, format);
        std::ofstream out(path);
        if (!out) throw std::runtime_error(std::string("cannot open ") + path);
        out << s;
        if (!out) throw std::runtime_error(std::string("write failed for ") + path);
    });
}

void ps_experiment_free(ps_experiment* exp) { delete exp; }

/* verification ---------------------------------------------------------- */

size_t ps_verify_count(void) { return verify_checks().size(); }

const char* ps_verify_id(size_t index) {
    const auto& checks = verify_checks();
    return index < checks.size() ? checks[index].id.c_str() : nullptr;
}

const char* ps_verify_summary(size_t index) {
    const auto& checks = verify_checks();
    return index < checks.size() ? checks[index].summary.c_str() : nullptr;
}

int ps_verify_needs_baseline(size_t index) {
    const auto& checks = verify_checks();
    return index < checks.size() && checks[index].needs_baseline ? 1 : 0;
}

ps_status ps_verify_run(const char* id, const ps_verify_options* options, int* passed,
                        char* detail, size_t detail_cap) {
    if (ps_status s = require(id && passed, "null argument"); s) return s;
    return guarded([&] {
        verify_options opt;
        if (options) {
            opt.qmax = options->qmax;
            opt.nmax = options->nmax;
            opt.xmax = options->xmax;
            opt.lmax = options->lmax;
            opt.dmax = options->dmax;
            opt.trials = options->trials;
            opt.seed = options->seed;
            opt.threads = options->threads ? options->threads : 1;
            if (options->baseline_path) opt.baseline_path = options->baseline_path;
        }
        check_result r = run_check(id, opt);
        *passed = r.passed ? 1 : 0;
        if (detail && detail_cap) copy_out(r.detail, detail, detail_cap, nullptr);
    });
}

ps_status ps_baseline_write(const char* path, uint32_t threads, uint64_t seed) {
    if (ps_status s = require(path, "null path"); s) return s;
    return guarded([&] {
        baseline_store store = compute_baselines(threads ? threads : 1, seed);
        store.save(path);
    });
}

}  // extern "C"
