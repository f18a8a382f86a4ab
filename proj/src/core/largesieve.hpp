#pragma once

// Large-sieve quantities for square moduli q*d^2: the normalizer
// Delta_eps(D,N,q) = (DN)^eps (1 + q/N)(q D^3 + N sqrt(D)), the Farey spacing
// count N * #{(d,h) : d <= D, (h,qd^2)=1, ||h/(qd^2) - alpha|| <= 1/N}, its
// exact supremum over alpha, the additive-character quadratic form, and
// phi_big moments sampled at square-modulus fractions.

#include "core/common.hpp"

namespace palsieve {

double delta_bound(u64 D, u64 N, u64 q, double eps);

// N times the number of coprime fractions h/(qd^2), d <= D, within circle
// distance 1/N of alpha (closed window). alpha is compared as the exact
// dyadic rational of its double representation. Requires q*D^2 <= 10^6.
u64 spacing_count(u64 D, u64 N, u64 q, double alpha);

// Exact sup over alpha of the spacing count, via a sliding window anchored at
// the fraction positions (the count is piecewise constant). Same caps.
u64 spacing_sup(u64 D, u64 N, u64 q);

struct quadratic_form_result {
    double value;     // sum_{d<=D} sum*_{h(qd^2)} |sum_n gamma_n e(hn/qd^2)|^2
    double gamma_l2;  // sum |gamma_n|^2
};

// gamma holds 2N+1 coefficients for n = -N..N. Evaluated through the
// autocorrelation/Ramanujan-sum expansion (exact rearrangement of the
// definition). Requires q*D^2 <= 10^5 and N <= 10^4.
quadratic_form_result ls_quadratic_form(const std::vector<cplx>& gamma, u64 D, u64 q);

// sum_{d<=D} sum*_{h(qd^2)} phi_big^(2K)(h/(qd^2) + beta). q*D^2 <= 10^4.
double phi_moment_square_moduli(u32 base, u32 N, u32 K, u64 q, u64 D, double beta);

}  // namespace palsieve
