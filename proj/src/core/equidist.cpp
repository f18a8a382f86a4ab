#include "core/equidist.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/arith.hpp"
#include "core/palsets.hpp"

#include "json.hpp"

namespace palsieve {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

u64 m_of_base(u32 base) { return (u64)base * base * base - base; }

void check_modulus_coprime(u32 base, u64 q) {
    if (q == 0) throw std::domain_error("equidist: q >= 1");
    if (std::gcd(q, m_of_base(base)) != 1)
        throw std::domain_error("equidist: modulus shares a factor with b^3-b");
}

// Members of P*_b(x) in ascending order with squarefree flags.
struct star_members {
    std::vector<u64> values;
    std::vector<u8> sqfree;
};

star_members collect_star(u32 base, u64 x) {
    if ((u128)4 * isqrt(x) > 400000000ull)
        throw std::out_of_range("equidist: sweep storage cap (x too large)");
    u64 mb = m_of_base(base);
    star_members out;
    for_each_pal_upto(base, x, [&](u64 p) {
        if (std::gcd(p, mb) != 1) return;
        out.values.push_back(p);
        out.sqfree.push_back(is_squarefree(p) ? 1 : 0);
    });
    return out;
}

double main_term_from_size(u32 base, u64 q, u64 star_size) {
    rational s = rat_mul(singular_series(m_of_base(base)), singular_series(q));
    return 6.0 * rat_to_double(s) * (double)star_size / (kPi * kPi * (double)q);
}

}  // namespace

double main_term(u32 base, u64 q, u64 y) {
    check_modulus_coprime(base, q);
    return main_term_from_size(base, q, count_upto(base, y, pal_variant::star));
}

u64 sqfree_pal_count(u32 base, u64 y, u64 q, i64 a) {
    if (q == 0) throw std::domain_error("sqfree_pal_count: q >= 1");
    u64 res = (u64)floor_mod(a, q);
    u64 mb = m_of_base(base);
    u64 count = 0;
    for_each_pal_upto(base, y, [&](u64 p) {
        if (p % q != res) return;
        if (std::gcd(p, mb) != 1) return;
        if (is_squarefree(p)) ++count;
    });
    return count;
}

double discrepancy(u32 base, u64 x, u64 q) {
    check_modulus_coprime(base, q);
    if (x == 0) return 0.0;
    star_members mem = collect_star(base, x);
    // scale factor: main(y) = coef * |P*(y)|
    double coef = main_term_from_size(base, q, 1);

    double sup = 0.0;
    std::vector<u64> class_count(q, 0);
    u64 star_size = 0;
    // the difference is constant between jump points; evaluate after each
    for (size_t i = 0; i < mem.values.size(); ++i) {
        u64 n = mem.values[i];
        ++star_size;
        if (mem.sqfree[i]) ++class_count[n % q];
        double main = coef * (double)star_size;
        for (u64 a = 0; a < q; ++a) {
            if (q > 1 && std::gcd(a, q) != 1) continue;
            sup = std::max(sup, std::abs((double)class_count[a] - main));
        }
    }
    return sup;
}

double e_of_q(u32 base, u64 x, u64 Q) {
    if (Q == 0) throw std::domain_error("e_of_q: Q >= 1");
    u64 mb = m_of_base(base);
    kahan total;
    for (u64 q = Q / 2 + 1; q <= Q; ++q) {
        if (std::gcd(q, mb) != 1) continue;
        total.add(discrepancy(base, x, q));
    }
    return total.sum;
}

double e_of_qd(u32 base, u64 x, u64 Q, u64 D) {
    if (Q == 0 || D == 0) throw std::domain_error("e_of_qd: Q, D >= 1");
    u64 mb = m_of_base(base);
    star_members mem = collect_star(base, x);

    std::vector<u64> dvals;  // d ~ D with (d, m_b) = 1; q-coprimality below
    for (u64 d = D / 2 + 1; d <= D; ++d)
        if (std::gcd(d, mb) == 1) dvals.push_back(d);

    kahan total;
    for (u64 q = Q / 2 + 1; q <= Q; ++q) {
        if (std::gcd(q, mb) != 1) continue;
        std::vector<u64> ds;
        for (u64 d : dvals)
            if (std::gcd(d, q) == 1) ds.push_back(d);
        // counts[a * ds.size() + j] = #{n <= y: d_j^2 | n, n = a (q)}
        std::vector<u64> counts(q * ds.size(), 0);
        u64 star_size = 0;
        double sup = 0.0;
        for (size_t i = 0; i < mem.values.size(); ++i) {
            u64 n = mem.values[i];
            ++star_size;
            u64 res = n % q;
            for (size_t j = 0; j < ds.size(); ++j) {
                u64 d2 = ds[j] * ds[j];
                if (n % d2 == 0) ++counts[res * ds.size() + j];
            }
            for (u64 a = 0; a < q; ++a) {
                if (q > 1 && std::gcd(a, q) != 1) continue;
                kahan inner;
                for (size_t j = 0; j < ds.size(); ++j) {
                    double expected = (double)star_size / ((double)q * (double)ds[j] * (double)ds[j]);
                    inner.add(std::abs((double)counts[a * ds.size() + j] - expected));
                }
                sup = std::max(sup, inner.sum);
            }
        }
        total.add(sup);
    }
    return total.sum;
}

experiment_report run_experiment(const experiment_config& config) {
    auto t0 = std::chrono::steady_clock::now();
    if (config.base < 2) throw std::invalid_argument("experiment: base >= 2");
    u64 mb = m_of_base(config.base);
    for (u64 q : config.moduli) {
        if (q == 0 || std::gcd(q, mb) != 1)
            throw std::invalid_argument("experiment: modulus " + std::to_string(q) +
                                        " not coprime to b^3-b");
    }
    if (!std::is_sorted(config.scales.begin(), config.scales.end()))
        throw std::invalid_argument("experiment: scales must be increasing");

    experiment_report report;
    report.config = config;

    std::string canon = "b=" + std::to_string(config.base) + ";xs=";
    for (u64 x : config.scales) canon += std::to_string(x) + ",";
    canon += ";qs=";
    for (u64 q : config.moduli) canon += std::to_string(q) + ",";
    canon += ";seed=" + std::to_string(config.seed);
    report.config_hash = fnv1a(canon);

    for (u64 x : config.scales) {
        // one parallel pass per scale: per-(q,a) squarefree counts at y = x
        std::vector<size_t> offsets;
        size_t total_classes = 0;
        for (u64 q : config.moduli) {
            offsets.push_back(total_classes);
            total_classes += q;
        }
        // partition by digit length, then by half-counter segments
        struct segment {
            u32 ndigits;
            u64 v0, v1;
        };
        std::vector<segment> segments;
        for (u32 t = 1; pow_at_most(config.base, t - 1, x); ++t) {
            u64 vlo = checked_pow(config.base, (t + 1) / 2 - 1);
            u64 vhi = vlo * config.base;
            u64 span = vhi - vlo;
            u64 parts = std::min<u64>(span, config.threads > 1 ? config.threads * 4 : 1);
            for (u64 s = 0; s < parts; ++s)
                segments.push_back({t, vlo + span * s / parts, vlo + span * (s + 1) / parts});
        }
        std::vector<std::vector<u64>> partial(segments.size());
        std::vector<u64> star_partial(segments.size(), 0);
        parallel_for(segments.size(), config.threads, [&](u64 si) {
            auto [t, v0, v1] = segments[si];
            std::vector<u64> counts(total_classes, 0);
            u64 star = 0;
            for (u64 v = v0; v < v1; ++v) {
                u64 p = pal_from_half(v, config.base, t);
                if (p > x) break;  // half-counters map monotonically
                if (std::gcd(p, mb) != 1) continue;
                ++star;
                if (!is_squarefree(p)) continue;
                for (size_t qi = 0; qi < config.moduli.size(); ++qi)
                    ++counts[offsets[qi] + p % config.moduli[qi]];
            }
            partial[si] = std::move(counts);
            star_partial[si] = star;
        });
        std::vector<u64> counts(total_classes, 0);
        u64 star_size = 0;
        for (size_t si = 0; si < segments.size(); ++si) {
            star_size += star_partial[si];
            for (size_t k = 0; k < total_classes; ++k) counts[k] += partial[si][k];
        }

        double scale_max_rel = 0.0;
        for (size_t qi = 0; qi < config.moduli.size(); ++qi) {
            u64 q = config.moduli[qi];
            double main = main_term_from_size(config.base, q, star_size);
            for (u64 a = 0; a < q; ++a) {
                if (q > 1 && std::gcd(a, q) != 1) continue;
                report_row row;
                row.x = x;
                row.q = q;
                row.a = a;
                row.count = counts[offsets[qi] + a];
                row.main = main;
                row.abs_err = std::abs((double)row.count - main);
                row.rel_err = row.abs_err / std::max(main, 1.0);
                row.sigma_hat = row.abs_err > 0.0
                                    ? -std::log(row.abs_err / std::sqrt((double)x)) /
                                          std::sqrt(std::log((double)x))
                                    : std::numeric_limits<double>::infinity();
                scale_max_rel = std::max(scale_max_rel, row.rel_err);
                report.rows.push_back(row);
            }
        }
        report.max_rel_err_by_scale.emplace_back(x, scale_max_rel);
    }
    std::sort(report.rows.begin(), report.rows.end(), [](const report_row& r1, const report_row& r2) {
        return std::tie(r1.x, r1.q, r1.a) < std::tie(r2.x, r2.q, r2.a);
    });
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

static std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

static std::string rows_with_sep(const experiment_report& report, char sep) {
    std::string out = "# schema=1\n";
    const char* cols[] = {"x", "q", "a", "count", "main_term", "abs_err", "rel_err", "sigma_hat"};
    for (size_t i = 0; i < 8; ++i) {
        out += cols[i];
        out += i + 1 < 8 ? sep : '\n';
    }
    for (const report_row& r : report.rows) {
        out += std::to_string(r.x) + sep + std::to_string(r.q) + sep + std::to_string(r.a) + sep +
               std::to_string(r.count) + sep + format_double(r.main) + sep +
               format_double(r.abs_err) + sep + format_double(r.rel_err) + sep +
               format_double(r.sigma_hat) + "\n";
    }
    return out;
}

std::string report_to_csv(const experiment_report& report) { return rows_with_sep(report, ','); }
std::string report_to_tsv(const experiment_report& report) { return rows_with_sep(report, '\t'); }

std::string report_to_json(const experiment_report& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["metadata"] = {
        {"config_hash", hex64(report.config_hash)},
        {"version", "0.1.0"},
        {"wall_ms", report.wall_ms},
        {"base", report.config.base},
        {"threads", report.config.threads},
        {"seed", report.config.seed},
        {"sup_mode", "per-class sup, maximized over classes"},
    };
    auto rows = nlohmann::json::array();
    for (const report_row& r : report.rows) {
        nlohmann::json row = {{"x", r.x},           {"q", r.q},
                              {"a", r.a},           {"count", r.count},
                              {"main_term", r.main}, {"abs_err", r.abs_err},
                              {"rel_err", r.rel_err}};
        if (std::isinf(r.sigma_hat))
            row["sigma_hat"] = "inf";
        else
            row["sigma_hat"] = r.sigma_hat;
        rows.push_back(row);
    }
    j["rows"] = rows;
    auto scales = nlohmann::json::array();
    for (auto [x, rel] : report.max_rel_err_by_scale)
        scales.push_back({{"x", x}, {"max_rel_err", rel}});
    j["max_rel_err_by_scale"] = scales;
    return j.dump(2) + "\n";
}

}  // namespace palsieve
