#include "fzeta/fmzv.hpp"

#include <algorithm>

namespace fzeta {

EvalContext::EvalContext(Prime p) : p_(p), inv_(batch_inverses(p)) {
    if (p.value() >= 5) bernoulli_.emplace(p);
}

Residue zeta_finite(const Index& k, ZetaMode mode, const EvalContext& ctx) {
    const std::uint64_t p = ctx.prime().value();
    const int r = k.depth();
    if (r == 0) return ctx.residue(1);

    // Distinct exponents so per-m powers are computed once each.
    std::vector<int> exps(k.parts());
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<std::uint64_t> pow_of(static_cast<std::size_t>(exps.back()) + 1);
    std::vector<std::size_t> slot(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
        slot[static_cast<std::size_t>(j)] = static_cast<std::size_t>(k.at(j));

    // T[j] = sum over chains of length j with largest element <= current m.
    std::vector<std::uint64_t> T(static_cast<std::size_t>(r) + 1, 0);
    T[0] = 1;
    for (std::uint64_t m = 1; m < p; ++m) {
        const std::uint64_t im = ctx.inverses()[m];
        for (int e : exps) {
            std::uint64_t b = im, acc = 1;
            int t = e;
            while (t) {
                if (t & 1) acc = acc * b % p;
                b = b * b % p;
                t >>= 1;
            }
            pow_of[static_cast<std::size_t>(e)] = acc;
        }
        if (mode == ZetaMode::Strict) {
            // Descending j: T[j-1] still excludes the current m, so chains
            // stay strictly increasing.
            for (int j = r; j >= 1; --j)
                T[static_cast<std::size_t>(j)] =
                    (T[static_cast<std::size_t>(j)] +
                     T[static_cast<std::size_t>(j - 1)] *
                         pow_of[slot[static_cast<std::size_t>(j - 1)]]) %
                    p;
        } else {
            // Ascending j: T[j-1] already includes m, allowing ties.
            for (int j = 1; j <= r; ++j)
                T[static_cast<std::size_t>(j)] =
                    (T[static_cast<std::size_t>(j)] +
                     T[static_cast<std::size_t>(j - 1)] *
                         pow_of[slot[static_cast<std::size_t>(j - 1)]]) %
                    p;
        }
    }
    return ctx.residue(static_cast<std::int64_t>(T[static_cast<std::size_t>(r)]));
}

Residue zeta_finite(const IndexCombo& c, ZetaMode mode, const EvalContext& ctx) {
    Residue acc = ctx.residue(0);
    for (const auto& [k, q] : c.terms())
        acc += reduce_mod(q, ctx.prime()) * zeta_finite(k, mode, ctx);
    return acc;
}

Residue zeta_finite(const WordPoly& w, ZetaMode mode, const EvalContext& ctx) {
    return zeta_finite(p_map(w), mode, ctx);
}

}  // namespace fzeta
