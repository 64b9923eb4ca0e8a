#pragma once

// Independent reference implementations used only by tests. These must not
// share code paths with the library evaluators they check: the zeta oracle
// enumerates chains one by one instead of running the partial-sum pass, and
// the Bernoulli oracle works over exact rationals.

#include <cstdint>
#include <vector>

#include "fzeta/fmzv.hpp"
#include "fzeta/indices.hpp"
#include "fzeta/rational.hpp"

namespace fzeta::testing {

inline std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Chain-by-chain evaluation of the truncated multiple harmonic sum.
inline Residue naive_zeta(const Index& k, ZetaMode mode, Prime prime) {
    const std::uint64_t p = prime.value();
    const int r = k.depth();
    auto rec = [&](auto&& self, int j, std::uint64_t lo) -> std::uint64_t {
        if (j == r) return 1;
        std::uint64_t acc = 0;
        for (std::uint64_t m = lo; m < p; ++m) {
            const std::uint64_t inv = pow_mod_u64(m, p - 2, p);
            const std::uint64_t t =
                pow_mod_u64(inv, static_cast<std::uint64_t>(k.at(j)), p);
            const std::uint64_t sub =
                self(self, j + 1, mode == ZetaMode::Star ? m : m + 1);
            acc = (acc + t * sub) % p;
        }
        return acc;
    };
    return Residue(static_cast<std::int64_t>(rec(rec, 0, 1)), prime);
}

// B_0 .. B_n as exact rationals via the convolution recurrence.
inline std::vector<Rational> bernoulli_exact(int n) {
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) {
            Rational term(binom_exact(m + 1, j));
            term *= b[static_cast<std::size_t>(j)];
            s += term;
        }
        Rational out = -s / Rational(m + 1);
        out.canonicalize();
        b[static_cast<std::size_t>(m)] = out;
    }
    return b;
}

// All nonempty indices of weight exactly w (compositions), lexicographic
// within each depth.
inline std::vector<Index> compositions_of(int w) {
    std::vector<Index> out;
    for (int d = 1; d <= w; ++d)
        for (const auto& bump : enumerate_bumps(d, w - d))
            out.push_back(oplus(all_ones(d), bump));
    return out;
}

}  // namespace fzeta::testing
