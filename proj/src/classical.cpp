#include "fzeta/classical.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fzeta {

namespace {

long double int_neg_pow(long double inv_n, int k) {
    long double r = 1.0L;
    for (int t = 0; t < k; ++t) r *= inv_n;
    return r;
}

}  // namespace

ApproxValue mzv_truncated(const Index& k, ZetaMode mode, long terms) {
    if (!admissible(k))
        throw std::invalid_argument("mzv_truncated: index not admissible");
    if (terms < 10) throw std::invalid_argument("mzv_truncated: terms < 10");

    const int r = k.depth();
    std::vector<long double> T(static_cast<std::size_t>(r) + 1, 0.0L);
    T[0] = 1.0L;
    // Partial sums of each single layer, for the tail constant.
    std::vector<long double> layer(static_cast<std::size_t>(r), 0.0L);

    for (long n = 1; n <= terms; ++n) {
        const long double inv_n = 1.0L / static_cast<long double>(n);
        if (mode == ZetaMode::Strict) {
            for (int j = r; j >= 1; --j)
                T[static_cast<std::size_t>(j)] +=
                    T[static_cast<std::size_t>(j - 1)] * int_neg_pow(inv_n, k.at(j - 1));
        } else {
            for (int j = 1; j <= r; ++j)
                T[static_cast<std::size_t>(j)] +=
                    T[static_cast<std::size_t>(j - 1)] * int_neg_pow(inv_n, k.at(j - 1));
        }
        for (int j = 0; j < r; ++j)
            layer[static_cast<std::size_t>(j)] += int_neg_pow(inv_n, k.at(j));
    }
    const long double value = T[static_cast<std::size_t>(r)];

    // Tail of the outermost layer. Chains with n_r > terms contribute at
    // most B * (1 + ln n_r)^s * n_r^-k_r, where s counts inner entries
    // equal to 1, and B multiplies upper bounds for the other inner
    // layers' full sums (partial sum + integral tail).
    const long double T_ld = static_cast<long double>(terms);
    const int kr = k.at(r - 1);
    int s = 0;
    long double big = 1.0L;
    for (int j = 0; j + 1 < r; ++j) {
        if (k.at(j) == 1) {
            ++s;
        } else {
            const long double tail_up =
                int_neg_pow(1.0L / T_ld, k.at(j) - 1) / (k.at(j) - 1);
            big *= layer[static_cast<std::size_t>(j)] + tail_up;
        }
    }
    // Need (1+ln x)^s x^-kr decreasing beyond terms: s/(1+ln terms) < kr,
    // comfortably true for terms >= 10.
    const long double L = std::log(T_ld);
    if (static_cast<long double>(s) >= (1.0L + L) * kr)
        throw std::invalid_argument("mzv_truncated: terms too small for tail bound");
    // integral_T^inf (1+ln x)^s x^-kr dx
    //   = T^-(kr-1) * sum_{t=0}^s s!/(s-t)! (1+ln T)^(s-t) / (kr-1)^(t+1)
    const long double c = static_cast<long double>(kr - 1);
    long double factor = 0.0L, fall = 1.0L;
    for (int t = 0; t <= s; ++t) {
        long double pw = 1.0L;
        for (int u = 0; u < s - t; ++u) pw *= (1.0L + L);
        long double cp = 1.0L;
        for (int u = 0; u <= t; ++u) cp *= c;
        factor += fall * pw / cp;
        fall *= static_cast<long double>(s - t);
    }
    long double tail = big * int_neg_pow(1.0L / T_ld, kr - 1) * factor;

    // Floating-point slack: every addition/multiplication is relatively
    // accurate to LDBL_EPSILON and magnitudes stay O(value + B).
    const long double ops =
        static_cast<long double>(terms) * (10.0L * r + 20.0L) + 64.0L;
    const long double rounding = ops * LDBL_EPSILON * (big + value + 1.0L);

    return ApproxValue{value, tail + rounding};
}

OhnoClassicalResult verify_ohno_classical(const Index& k, int m, long terms,
                                          long double tolerance) {
    if (!admissible(k))
        throw std::invalid_argument("verify_ohno_classical: index not admissible");
    if (m < 0) throw std::invalid_argument("verify_ohno_classical: m < 0");

    const Index dual = dual_index(k);
    long double lhs = 0.0L, rhs = 0.0L, bound = 0.0L;
    for (const auto& bump : enumerate_bumps(k.depth(), m)) {
        ApproxValue v = mzv_truncated(oplus(k, bump), ZetaMode::Strict, terms);
        lhs += v.value;
        bound += v.error_bound;
    }
    for (const auto& bump : enumerate_bumps(dual.depth(), m)) {
        ApproxValue v = mzv_truncated(oplus(dual, bump), ZetaMode::Strict, terms);
        rhs += v.value;
        bound += v.error_bound;
    }
    const bool pass = fabsl(lhs - rhs) <= bound + tolerance;
    return OhnoClassicalResult{lhs, rhs, bound, pass};
}

}  // namespace fzeta
