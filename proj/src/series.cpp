#include "fzeta/series.hpp"

#include <stdexcept>

#include "fzeta/words.hpp"

namespace fzeta {

TruncSeries::TruncSeries(Prime p, int cutoff) : p_(p), cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("series cutoff must be >= 0");
    coeff_.assign(static_cast<std::size_t>(cutoff) + 1, 0);
}

Residue TruncSeries::at(int w) const {
    if (w < 0 || w > cutoff_) throw std::out_of_range("series weight out of range");
    return Residue::from_raw(coeff_[static_cast<std::size_t>(w)], p_);
}

void TruncSeries::set(int w, Residue v) {
    if (w < 0 || w > cutoff_) throw std::out_of_range("series weight out of range");
    if (v.modulus() != p_) throw std::invalid_argument("series prime mismatch");
    coeff_[static_cast<std::size_t>(w)] = v.value();
}

void TruncSeries::add_at(int w, Residue v) { set(w, at(w) + v); }

bool TruncSeries::is_zero() const noexcept {
    for (std::uint32_t c : coeff_)
        if (c != 0) return false;
    return true;
}

void TruncSeries::check(const TruncSeries& o) const {
    if (p_ != o.p_ || cutoff_ != o.cutoff_)
        throw std::invalid_argument("series prime/cutoff mismatch");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check(o);
    for (int w = 0; w <= cutoff_; ++w) set(w, at(w) + o.at(w));
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check(o);
    for (int w = 0; w <= cutoff_; ++w) set(w, at(w) - o.at(w));
    return *this;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(p_, cutoff_);
    for (int w = 0; w <= cutoff_; ++w) r.set(w, -at(w));
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.p_, a.cutoff_);
    for (int i = 0; i <= a.cutoff_; ++i) {
        if (a.coeff_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= a.cutoff_; ++j)
            r.add_at(i + j, a.at(i) * b.at(j));
    }
    return r;
}

namespace {

Residue sign_residue(int exponent, const EvalContext& ctx) {
    return ctx.residue(exponent % 2 == 0 ? 1 : -1);
}

void check_cutoff(const EvalContext& ctx, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("series cutoff must be >= 0");
    if (static_cast<std::uint64_t>(cutoff) + 2 > ctx.prime().value())
        throw std::invalid_argument("series cutoff must stay below p-1");
}

// Star bump sums of k, one weight at a time, optionally sign-alternating
// in the bump size. This is each half of the Ohno generating function.
TruncSeries star_bump_series(const Index& k, bool alternate,
                             const EvalContext& ctx, int cutoff) {
    TruncSeries out(ctx.prime(), cutoff);
    const int base = k.weight();
    for (int w = base; w <= cutoff; ++w) {
        Residue acc = ctx.residue(0);
        for (const auto& bump : enumerate_bumps(k.depth(), w - base))
            acc += zeta_finite(oplus(k, bump), ZetaMode::Star, ctx);
        if (alternate) acc *= sign_residue(w - base, ctx);
        out.set(w, acc);
    }
    return out;
}

}  // namespace

TruncSeries f_series(int k, int i, const EvalContext& ctx, int cutoff) {
    if (k < 1 || i < 1) throw std::invalid_argument("f_series needs k, i >= 1");
    check_cutoff(ctx, cutoff);
    TruncSeries out(ctx.prime(), cutoff);
    for (int n = k + i; n <= cutoff; ++n) {
        Residue bracket = sign_residue(k, ctx) * binom_mod(static_cast<std::uint64_t>(n - 1),
                                                           k - 1, ctx.prime()) -
                          sign_residue(i, ctx) * binom_mod(static_cast<std::uint64_t>(n - 1),
                                                           i - 1, ctx.prime());
        out.set(n, bracket * ctx.bz(n));
    }
    return out;
}

TruncSeries ohno_series(const Index& k, const EvalContext& ctx, int cutoff) {
    if (k.empty()) throw std::invalid_argument("ohno_series needs a nonempty index");
    check_cutoff(ctx, cutoff);
    TruncSeries direct = star_bump_series(k, false, ctx, cutoff);
    TruncSeries dual = star_bump_series(hoffman_dual(k), true, ctx, cutoff);
    return direct + dual;
}

TruncSeries main_rhs_series(int k1, int k2, int k3, const EvalContext& ctx,
                            int cutoff) {
    if (k1 < 1 || k2 < 1 || k3 < 1)
        throw std::invalid_argument("main_rhs_series needs k_i >= 1");
    check_cutoff(ctx, cutoff);
    TruncSeries out(ctx.prime(), cutoff);
    if (k2 == 1) return f_series(k1, 1, ctx, cutoff) * f_series(k3, 1, ctx, cutoff);
    for (int i = 2; i <= k2 - 1; ++i) {
        const int j = k2 + 1 - i;
        if (j < 2) continue;
        out -= f_series(k1, i, ctx, cutoff) * f_series(k3, j, ctx, cutoff);
    }
    return out;
}

SumFormulaSides sum_formula_sides(int i, int j, int n, const EvalContext& ctx) {
    if (i < 0 || j < 0 || n < i + j + 2)
        throw std::invalid_argument("sum_formula_sides needs n >= i+j+2");
    check_cutoff(ctx, n);
    const int d = i + j + 1;
    Residue strict_sum = ctx.residue(0), star_sum = ctx.residue(0);
    const Index base = all_ones(d);
    for (const auto& bump : enumerate_bumps(d, n - d)) {
        const Index idx = oplus(base, bump);
        if (idx.at(i) < 2) continue;
        strict_sum += zeta_finite(idx, ZetaMode::Strict, ctx);
        star_sum += zeta_finite(idx, ZetaMode::Star, ctx);
    }
    Residue bracket =
        sign_residue(i + 1, ctx) * binom_mod(static_cast<std::uint64_t>(n - 1), i,
                                             ctx.prime()) -
        sign_residue(j + 1, ctx) * binom_mod(static_cast<std::uint64_t>(n - 1), j,
                                             ctx.prime());
    return SumFormulaSides{strict_sum, star_sum, bracket * ctx.bz(n)};
}

SeriesPair lemma_sides(LemmaSide which, int k1, int k2, int k3,
                       const EvalContext& ctx, int cutoff) {
    if (k1 < 1 || k2 < 1 || k3 < 1)
        throw std::invalid_argument("lemma_sides needs k_i >= 1");
    check_cutoff(ctx, cutoff);
    const Index k{k1, k2, k3};
    const int base = k.weight();
    const Residue sign_k = sign_residue(base, ctx);

    if (which == LemmaSide::A) {
        TruncSeries lhs = star_bump_series(k, false, ctx, cutoff);

        TruncSeries rhs =
            f_series(k1, 1, ctx, cutoff) * f_series(k3, 1, ctx, cutoff);
        // Double binomial sum over i+j <= k2+1, i,j >= 2 (empty for k2 <= 2).
        for (int i = 2; i + 2 <= k2 + 1; ++i)
            for (int j = 2; i + j <= k2 + 1; ++j) {
                TruncSeries si(ctx.prime(), cutoff), sj(ctx.prime(), cutoff);
                for (int n = k1 + i - 1; n <= cutoff; ++n)
                    si.set(n, sign_residue(i, ctx) *
                                  binom_mod(static_cast<std::uint64_t>(n), i - 1,
                                            ctx.prime()) *
                                  ctx.bz(n));
                for (int n = k3 + j - 1; n <= cutoff; ++n)
                    sj.set(n, sign_residue(j, ctx) *
                                  binom_mod(static_cast<std::uint64_t>(n), j - 1,
                                            ctx.prime()) *
                                  ctx.bz(n));
                rhs -= si * sj;
            }
        // Word-polynomial tail: each bump family sits at one weight.
        for (int m = 0; base + m <= cutoff; ++m) {
            Residue v = zeta_finite(build_p(m, k3, k2, k1), ZetaMode::Strict, ctx);
            rhs.add_at(base + m, sign_k * v);
        }
        return SeriesPair{lhs, rhs};
    }

    TruncSeries lhs = star_bump_series(hoffman_dual(k), true, ctx, cutoff);

    TruncSeries rhs(ctx.prime(), cutoff);
    for (int i = 2; i <= k2; ++i) {
        const int j = k2 + 2 - i;
        if (j < 2) continue;
        rhs -= f_series(k1, i - 1, ctx, cutoff) * f_series(k3, j - 1, ctx, cutoff);
    }
    for (int m = 0; base + m <= cutoff; ++m) {
        Residue v = zeta_finite(build_q(m, k3, k2, k1), ZetaMode::Strict, ctx);
        rhs.add_at(base + m, -(sign_k * v));
    }
    return SeriesPair{lhs, rhs};
}

std::pair<Residue, Residue> u_telescope_sides(int k, int s, const EvalContext& ctx) {
    if (k < 1 || s <= k || static_cast<std::uint64_t>(s) + 2 > ctx.prime().value())
        throw std::invalid_argument("u_telescope needs 1 <= k < s <= p-2");
    if (s < 3) throw std::invalid_argument("u_telescope needs s >= 3");
    const Residue z = ctx.bz(s - 1);
    Residue lhs = sign_residue(k - 1, ctx) *
                  binom_mod(static_cast<std::uint64_t>(s - 2), k - 1, ctx.prime()) * z;
    Residue rhs = sign_residue(s - k - 1, ctx) *
                  binom_mod(static_cast<std::uint64_t>(s - 2), s - k - 1, ctx.prime()) * z;
    return {lhs, rhs};
}

bool u_telescope_check(int k, int s, const EvalContext& ctx) {
    auto [lhs, rhs] = u_telescope_sides(k, s, ctx);
    return lhs == rhs;
}

}  // namespace fzeta
