#include "fzeta/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "fzeta/classical.hpp"
#include "fzeta/fmzv.hpp"
#include "fzeta/series.hpp"
#include "fzeta/words.hpp"

namespace fzeta {

namespace {

struct IdInfo {
    IdentityId id;
    std::string_view name;
    FieldKind field;
};

constexpr std::array<IdInfo, 24> kIdTable = {{
    {IdentityId::dep1_vanish, "dep1_vanish", FieldKind::ModP},
    {IdentityId::symsum, "symsum", FieldKind::ModP},
    {IdentityId::dep2_eval, "dep2_eval", FieldKind::ModP},
    {IdentityId::antipode, "antipode", FieldKind::ModP},
    {IdentityId::hoffman_duality, "hoffman_duality", FieldKind::ModP},
    {IdentityId::reversal, "reversal", FieldKind::ModP},
    {IdentityId::eval_112, "eval_112", FieldKind::ModP},
    {IdentityId::parity_112, "parity_112", FieldKind::ModP},
    {IdentityId::sum_formula, "sum_formula", FieldKind::ModP},
    {IdentityId::oyama, "oyama", FieldKind::ModP},
    {IdentityId::ohno_fs, "ohno_fs", FieldKind::ModP},
    {IdentityId::shF, "shF", FieldKind::ModP},
    {IdentityId::shF2, "shF2", FieldKind::ModP},
    {IdentityId::PQ_exact, "PQ_exact", FieldKind::Exact},
    {IdentityId::PQ2_modp, "PQ2_modp", FieldKind::ModP},
    {IdentityId::lemma_A, "lemma_A", FieldKind::ModP},
    {IdentityId::lemma_B, "lemma_B", FieldKind::ModP},
    {IdentityId::U_telescope, "U_telescope", FieldKind::ModP},
    {IdentityId::O_depth1, "O_depth1", FieldKind::ModP},
    {IdentityId::O_depth2, "O_depth2", FieldKind::ModP},
    {IdentityId::main, "main", FieldKind::ModP},
    {IdentityId::main_k2eq2, "main_k2eq2", FieldKind::ModP},
    {IdentityId::kaneko_conjecture, "kaneko_conjecture", FieldKind::ModP},
    {IdentityId::ohno_classical, "ohno_classical", FieldKind::Real},
}};

std::size_t id_rank(IdentityId id) {
    for (std::size_t i = 0; i < kIdTable.size(); ++i)
        if (kIdTable[i].id == id) return i;
    throw std::logic_error("unknown identity id");
}

const std::set<std::string>& allowed_knobs(IdentityId id) {
    static const std::map<IdentityId, std::set<std::string>> table = {
        {IdentityId::dep1_vanish, {"k"}},
        {IdentityId::symsum, {"weight", "depth"}},
        {IdentityId::dep2_eval, {"k_sum"}},
        {IdentityId::antipode, {"weight", "depth"}},
        {IdentityId::hoffman_duality, {"weight"}},
        {IdentityId::reversal, {"weight"}},
        {IdentityId::eval_112, {"weight"}},
        {IdentityId::parity_112, {"weight"}},
        {IdentityId::sum_formula, {"depth", "n"}},
        {IdentityId::oyama, {"weight", "m"}},
        {IdentityId::ohno_fs, {"weight", "m"}},
        {IdentityId::shF, {}},
        {IdentityId::shF2, {}},
        {IdentityId::PQ_exact, {"l", "m"}},
        {IdentityId::PQ2_modp, {"l", "m"}},
        {IdentityId::lemma_A, {"k_sum"}},
        {IdentityId::lemma_B, {"k_sum"}},
        {IdentityId::U_telescope, {"s"}},
        {IdentityId::O_depth1, {"k"}},
        {IdentityId::O_depth2, {"k_sum"}},
        {IdentityId::main, {"k_sum"}},
        {IdentityId::main_k2eq2, {"k_sum"}},
        {IdentityId::kaneko_conjecture, {}},
        {IdentityId::ohno_classical, {"m", "terms"}},
    };
    return table.at(id);
}

struct Env {
    std::vector<EvalContext> ctxs;  // ascending prime
    int N;
    const GridOptions* opts;

    bool outside(const EvalContext& ctx) const {
        return ctx.prime().value() <= 2 * static_cast<std::uint32_t>(N);
    }

    // Grids may only shrink: a user value above the documented default is
    // outside the grid.
    long cap(const std::string& key, long def, long lo) const {
        auto it = opts->caps.find(key);
        if (it == opts->caps.end()) return def;
        if (it->second > def)
            throw std::invalid_argument("grid knob " + key + "<=" +
                                        std::to_string(it->second) +
                                        " exceeds the documented grid");
        if (it->second < lo)
            throw std::invalid_argument("grid knob " + key + " below its minimum");
        return it->second;
    }
};

std::string res_text(Residue r) { return std::to_string(r.value()); }

std::string real_text(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10Lg", v);
    return buf;
}

std::string capped(std::string s) {
    if (s.size() > 160) {
        s.resize(157);
        s += "...";
    }
    return s;
}

std::string mode_name(ZetaMode mode) {
    return mode == ZetaMode::Strict ? "strict" : "star";
}

Residue sign_res(int exponent, const EvalContext& ctx) {
    return ctx.residue(exponent % 2 == 0 ? 1 : -1);
}

// All nonempty indices of weight <= wmax (and depth <= dmax), ordered by
// weight, then depth, then lexicographically.
std::vector<Index> indices_up_to(int wmax, int dmax = 1 << 20) {
    std::vector<Index> out;
    for (int w = 1; w <= wmax; ++w)
        for (int d = 1; d <= std::min(w, dmax); ++d)
            for (const auto& bump : enumerate_bumps(d, w - d))
                out.push_back(oplus(all_ones(d), bump));
    return out;
}

// Nondecreasing part lists (multisets) with given depth/weight bounds.
std::vector<std::vector<int>> multisets_up_to(int wmax, int dmax) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int minpart, int rest) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == dmax) return;
        for (int v = minpart; v <= rest; ++v) {
            cur.push_back(v);
            self(self, v, rest - v);
            cur.pop_back();
        }
    };
    rec(rec, 1, wmax);
    return out;
}

// Residue-valued cell over every prime. `fn` yields (lhs, rhs); cells at
// primes inside the floor are flagged, and evaluation errors there count
// as "undefined" rather than failures.
template <typename Fn>
void modp_cells(Report& rep, const Env& env, IdentityId id,
                const std::string& params, std::optional<int> weight, Fn&& fn) {
    for (const auto& ctx : env.ctxs) {
        const bool outside = env.outside(ctx);
        ReportEntry e;
        e.identity = id;
        e.params = params;
        e.prime = ctx.prime().value();
        e.weight = weight;
        e.outside_guarantee = outside;
        try {
            auto [l, r] = fn(ctx);
            e.lhs = res_text(l);
            e.rhs = res_text(r);
            e.pass = (l == r);
        } catch (const std::exception&) {
            if (!outside) throw;
            e.lhs = e.rhs = "undefined";
            e.pass = false;
        }
        rep.append(std::move(e));
    }
}

// Series-valued cell family: one entry per weight in [wlo, N].
template <typename Fn>
void series_cells(Report& rep, const Env& env, IdentityId id,
                  const std::string& params, int wlo, Fn&& fn) {
    for (const auto& ctx : env.ctxs) {
        const bool outside = env.outside(ctx);
        try {
            SeriesPair pair = fn(ctx);
            for (int w = wlo; w <= env.N; ++w) {
                ReportEntry e;
                e.identity = id;
                e.params = params;
                e.prime = ctx.prime().value();
                e.weight = w;
                e.lhs = res_text(pair.lhs.at(w));
                e.rhs = res_text(pair.rhs.at(w));
                e.pass = (pair.lhs.at(w) == pair.rhs.at(w));
                e.outside_guarantee = outside;
                rep.append(std::move(e));
            }
        } catch (const std::exception&) {
            if (!outside) throw;
            ReportEntry e;
            e.identity = id;
            e.params = params;
            e.prime = ctx.prime().value();
            e.lhs = e.rhs = "undefined";
            e.pass = false;
            e.outside_guarantee = true;
            rep.append(std::move(e));
        }
    }
}

void run_dep1_vanish(const Env& env, Report& rep) {
    const long kmax = env.cap("k", env.N, 1);
    for (long k = 1; k <= kmax; ++k)
        for (ZetaMode mode : {ZetaMode::Strict, ZetaMode::Star}) {
            const Index idx{static_cast<int>(k)};
            modp_cells(rep, env, IdentityId::dep1_vanish,
                       "k=" + std::to_string(k) + " mode=" + mode_name(mode),
                       static_cast<int>(k), [&](const EvalContext& ctx) {
                           return std::pair(zeta_finite(idx, mode, ctx),
                                            ctx.residue(0));
                       });
        }
}

void run_symsum(const Env& env, Report& rep) {
    const long wmax = env.cap("weight", std::min(8, env.N), 1);
    const long dmax = env.cap("depth", 4, 1);
    for (const auto& parts : multisets_up_to(static_cast<int>(wmax),
                                             static_cast<int>(dmax))) {
        // sum over all r! permutations = (prod of multiplicities!) times
        // the sum over distinct arrangements.
        long factor = 1, runmult = 1;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            runmult = (parts[i] == parts[i - 1]) ? runmult + 1 : 1;
            factor *= runmult;
        }
        std::string ktext = "{";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) ktext += ',';
            ktext += std::to_string(parts[i]);
        }
        ktext += '}';
        int w = 0;
        for (int v : parts) w += v;
        for (ZetaMode mode : {ZetaMode::Strict, ZetaMode::Star}) {
            modp_cells(rep, env, IdentityId::symsum,
                       "k=" + ktext + " mode=" + mode_name(mode), w,
                       [&](const EvalContext& ctx) {
                           Residue acc = ctx.residue(0);
                           std::vector<int> perm = parts;
                           do {
                               acc += zeta_finite(Index(perm), mode, ctx);
                           } while (std::next_permutation(perm.begin(), perm.end()));
                           return std::pair(ctx.residue(factor) * acc,
                                            ctx.residue(0));
                       });
        }
    }
}

void run_dep2_eval(const Env& env, Report& rep) {
    const long smax = env.cap("k_sum", std::min(env.N, 10), 2);
    for (long s = 2; s <= smax; ++s)
        for (long k1 = 1; k1 <= s - 1; ++k1) {
            const long k2 = s - k1;
            const Index idx{static_cast<int>(k1), static_cast<int>(k2)};
            for (ZetaMode mode : {ZetaMode::Strict, ZetaMode::Star}) {
                modp_cells(
                    rep, env, IdentityId::dep2_eval,
                    "k=(" + std::to_string(k1) + "," + std::to_string(k2) +
                        ") mode=" + mode_name(mode),
                    static_cast<int>(s), [&](const EvalContext& ctx) {
                        Residue rhs =
                            sign_res(static_cast<int>(k1) + 1, ctx) *
                            binom_mod(static_cast<std::uint64_t>(s), k1,
                                      ctx.prime()) *
                            ctx.bz(static_cast<int>(s));
                        return std::pair(zeta_finite(idx, mode, ctx), rhs);
                    });
            }
        }
}

void run_antipode(const Env& env, Report& rep) {
    const long wmax = env.cap("weight", std::min(8, env.N), 1);
    const long dmax = env.cap("depth", 4, 1);
    for (const Index& k : indices_up_to(static_cast<int>(wmax),
                                        static_cast<int>(dmax))) {
        modp_cells(rep, env, IdentityId::antipode, "k=" + to_string(k),
                   k.weight(), [&](const EvalContext& ctx) {
                       const int r = k.depth();
                       Residue acc = ctx.residue(0);
                       for (int i = 0; i <= r; ++i) {
                           std::vector<int> head(k.parts().begin(),
                                                 k.parts().begin() + i);
                           std::vector<int> tail(k.parts().rbegin(),
                                                 k.parts().rbegin() + (r - i));
                           acc += sign_res(i, ctx) *
                                  zeta_finite(Index(head), ZetaMode::Star, ctx) *
                                  zeta_finite(Index(tail), ZetaMode::Strict, ctx);
                       }
                       return std::pair(acc, ctx.residue(0));
                   });
    }
}

void run_hoffman_duality(const Env& env, Report& rep) {
    const long wmax = env.cap("weight", std::min(6, env.N), 1);
    for (const Index& k : indices_up_to(static_cast<int>(wmax))) {
        modp_cells(rep, env, IdentityId::hoffman_duality, "k=" + to_string(k),
                   k.weight(), [&](const EvalContext& ctx) {
                       Residue lhs = zeta_finite(k, ZetaMode::Star, ctx);
                       Residue rhs =
                           -zeta_finite(hoffman_dual(k), ZetaMode::Star, ctx);
                       return std::pair(lhs, rhs);
                   });
    }
}

void run_reversal(const Env& env, Report& rep) {
    const long wmax = env.cap("weight", std::min(8, env.N), 1);
    for (const Index& k : indices_up_to(static_cast<int>(wmax))) {
        modp_cells(rep, env, IdentityId::reversal, "k=" + to_string(k),
                   k.weight(), [&](const EvalContext& ctx) {
                       Residue lhs = zeta_finite(k, ZetaMode::Strict, ctx);
                       Residue rhs =
                           sign_res(k.weight(), ctx) *
                           zeta_finite(reversed(k), ZetaMode::Strict, ctx);
                       return std::pair(lhs, rhs);
                   });
    }
}

Index ones_2_ones(int a, int b) {
    std::vector<int> parts(static_cast<std::size_t>(a), 1);
    parts.push_back(2);
    parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
    return Index(std::move(parts));
}

void run_eval_112(const Env& env, Report& rep) {
    const long wmax = env.cap("weight", env.N, 2);
    for (long w = 2; w <= wmax; ++w)
        for (long a = 0; a <= w - 2; ++a) {
            const long b = w - 2 - a;
            const Index idx = ones_2_ones(static_cast<int>(a), static_cast<int>(b));
            for (ZetaMode mode : {ZetaMode::Strict, ZetaMode::Star}) {
                modp_cells(
                    rep, env, IdentityId::eval_112,
                    "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                        " mode=" + mode_name(mode),
                    static_cast<int>(w), [&](const EvalContext& ctx) {
                        Residue rhs = sign_res(static_cast<int>(a) + 1, ctx) *
                                      binom_mod(static_cast<std::uint64_t>(w),
                                                a + 1, ctx.prime()) *
                                      ctx.bz(static_cast<int>(w));
                        return std::pair(zeta_finite(idx, mode, ctx), rhs);
                    });
            }
        }
}

void run_parity_112(const Env& env, Report& rep) {
    const long wmax = env.cap("weight", env.N, 2);
    for (long w = 2; w <= wmax; ++w)
        for (long a = 0; a <= w - 2; ++a) {
            const long b = w - 2 - a;
            const Index idx = ones_2_ones(static_cast<int>(a), static_cast<int>(b));
            modp_cells(rep, env, IdentityId::parity_112,
                       "a=" + std::to_string(a) + " b=" + std::to_string(b),
                       static_cast<int>(w), [&](const EvalContext& ctx) {
                           Residue lhs = zeta_finite(idx, ZetaMode::Star, ctx);
                           Residue rhs =
                               sign_res(static_cast<int>(a + b) + 1, ctx) * lhs;
                           return std::pair(lhs, rhs);
                       });
        }
}

void run_sum_formula(const Env& env, Report& rep) {
    const long dmax = env.cap("depth", 3, 1);
    const long nmax = env.cap("n", std::min(8, env.N), 2);
    for (long i = 0; i + 1 <= dmax; ++i)
        for (long j = 0; i + j + 1 <= dmax; ++j)
            for (long n = i + j + 2; n <= nmax; ++n) {
                const std::string base = "i=" + std::to_string(i) +
                                         " j=" + std::to_string(j) +
                                         " n=" + std::to_string(n);
                modp_cells(rep, env, IdentityId::sum_formula, base + " side=strict",
                           static_cast<int>(n), [&](const EvalContext& ctx) {
                               auto sides = sum_formula_sides(
                                   static_cast<int>(i), static_cast<int>(j),
                                   static_cast<int>(n), ctx);
                               return std::pair(sides.strict_sum, sides.f_coeff);
                           });
                modp_cells(rep, env, IdentityId::sum_formula, base + " side=star",
                           static_cast<int>(n), [&](const EvalContext& ctx) {
                               auto sides = sum_formula_sides(
                                   static_cast<int>(i), static_cast<int>(j),
                                   static_cast<int>(n), ctx);
                               Residue rhs =
                                   sign_res(static_cast<int>(i + j) + 1, ctx) *
                                   sides.f_coeff;
                               return std::pair(sides.star_sum, rhs);
                           });
            }
}

void run_oyama(const Env& env, Report& rep) {
    const long wmax = env.cap("weight", 5, 1);
    const long mmax = env.cap("m", 3, 0);
    for (const Index& k : indices_up_to(static_cast<int>(wmax)))
        for (long m = 0; m <= mmax; ++m) {
            if (k.weight() + m > env.N) continue;
            const Index dual = hoffman_dual(k);
            modp_cells(
                rep, env, IdentityId::oyama,
                "k=" + to_string(k) + " m=" + std::to_string(m),
                k.weight() + static_cast<int>(m), [&](const EvalContext& ctx) {
                    Residue lhs = ctx.residue(0), rhs = ctx.residue(0);
                    for (const auto& e : enumerate_bumps(k.depth(),
                                                         static_cast<int>(m)))
                        lhs += zeta_finite(oplus(k, e), ZetaMode::Strict, ctx);
                    for (const auto& e : enumerate_bumps(dual.depth(),
                                                         static_cast<int>(m)))
                        rhs += zeta_finite(hoffman_dual(oplus(dual, e)),
                                           ZetaMode::Strict, ctx);
                    return std::pair(lhs, rhs);
                });
        }
}

void run_ohno_fs(const Env& env, Report& rep) {
    const long wmax = env.cap("weight", 5, 1);
    const long mmax = env.cap("m", 3, 0);
    for (const Index& k : indices_up_to(static_cast<int>(wmax)))
        for (long m = 0; m <= mmax; ++m) {
            if (k.weight() + m > env.N) continue;
            const IndexCombo sh = index_shuffle(k, all_ones(static_cast<int>(m)));
            modp_cells(
                rep, env, IdentityId::ohno_fs,
                "k=" + to_string(k) + " m=" + std::to_string(m),
                k.weight() + static_cast<int>(m), [&](const EvalContext& ctx) {
                    Residue lhs = zeta_finite(sh, ZetaMode::Star, ctx);
                    Residue rhs = ctx.residue(0);
                    for (const auto& e : enumerate_bumps(k.depth(),
                                                         static_cast<int>(m)))
                        rhs += zeta_finite(oplus(k, e), ZetaMode::Star, ctx);
                    return std::pair(lhs, rhs);
                });
        }
}

const std::vector<std::string>& shf_left_words() {
    static const std::vector<std::string> words = {"y", "yx", "yy", "yxy", "yyx"};
    return words;
}
const std::vector<std::string>& shf_right_words() {
    static const std::vector<std::string> words = {"1", "y", "yx", "yy"};
    return words;
}

void run_shF(const Env& env, Report& rep) {
    const Word y("y");
    for (const auto& ws : shf_left_words())
        for (const auto& vs : shf_right_words()) {
            const Word w(ws);
            const Word v = parse_word(vs);  // "1" is the empty word
            const int vdeg = static_cast<int>(v.degree());
            const WordPoly left = append(shuffle(WordPoly(w), WordPoly(v)), y);
            const Word right = w * y * reversed(v);
            modp_cells(rep, env, IdentityId::shF, "w=" + ws + " w'=" + vs,
                       static_cast<int>(w.degree()) + vdeg,
                       [&](const EvalContext& ctx) {
                           Residue lhs = zeta_finite(left, ZetaMode::Strict, ctx);
                           Residue rhs = sign_res(vdeg, ctx) *
                                         zeta_finite(p_map(right),
                                                     ZetaMode::Strict, ctx);
                           return std::pair(lhs, rhs);
                       });
        }
}

void run_shF2(const Env& env, Report& rep) {
    const Word y("y");
    for (const auto& ws : shf_left_words())
        for (const auto& vs : shf_right_words()) {
            const Word w(ws);
            const Word v = parse_word(vs);
            const WordPoly left = shuffle(w * y, v * y);
            modp_cells(rep, env, IdentityId::shF2, "w=" + ws + " w'=" + vs,
                       static_cast<int>(w.degree() + v.degree()) + 1,
                       [&](const EvalContext& ctx) {
                           Residue lhs = zeta_finite(left, ZetaMode::Strict, ctx);
                           return std::pair(lhs, ctx.residue(0));
                       });
        }
}

void run_pq_exact(const Env& env, Report& rep) {
    const long lmax = env.cap("l", 3, 1);
    const long mmax = env.cap("m", 4, 0);
    for (long l1 = 1; l1 <= lmax; ++l1)
        for (long l2 = 1; l2 <= lmax; ++l2)
            for (long l3 = 1; l3 <= lmax; ++l3)
                for (long m = 0; m <= mmax; ++m) {
                    WordPoly lhs = build_q(static_cast<int>(m), static_cast<int>(l1),
                                           static_cast<int>(l2), static_cast<int>(l3));
                    WordPoly rhs = q_shuffle_expansion(
                        static_cast<int>(m), static_cast<int>(l1),
                        static_cast<int>(l2), static_cast<int>(l3));
                    ReportEntry e;
                    e.identity = IdentityId::PQ_exact;
                    e.params = "l=(" + std::to_string(l1) + "," + std::to_string(l2) +
                               "," + std::to_string(l3) + ") m=" + std::to_string(m);
                    e.weight = static_cast<int>(l1 + l2 + l3 + m + 1);
                    e.lhs = capped(to_string(lhs));
                    e.rhs = capped(to_string(rhs));
                    e.pass = (lhs == rhs);
                    rep.append(std::move(e));
                }
}

void run_pq2_modp(const Env& env, Report& rep) {
    const long lmax = env.cap("l", 3, 1);
    const long mmax = env.cap("m", 3, 0);
    for (long l1 = 1; l1 <= lmax; ++l1)
        for (long l2 = 1; l2 <= lmax; ++l2)
            for (long l3 = 1; l3 <= lmax; ++l3)
                for (long m = 0; m <= mmax; ++m) {
                    WordPoly diff = build_p(static_cast<int>(m), static_cast<int>(l1),
                                            static_cast<int>(l2), static_cast<int>(l3)) -
                                    build_q(static_cast<int>(m), static_cast<int>(l1),
                                            static_cast<int>(l2), static_cast<int>(l3));
                    modp_cells(rep, env, IdentityId::PQ2_modp,
                               "l=(" + std::to_string(l1) + "," +
                                   std::to_string(l2) + "," + std::to_string(l3) +
                                   ") m=" + std::to_string(m),
                               static_cast<int>(l1 + l2 + l3 + m),
                               [&](const EvalContext& ctx) {
                                   Residue lhs =
                                       zeta_finite(diff, ZetaMode::Strict, ctx);
                                   return std::pair(lhs, ctx.residue(0));
                               });
                }
}

void run_lemma(const Env& env, Report& rep, LemmaSide side) {
    const IdentityId id =
        (side == LemmaSide::A) ? IdentityId::lemma_A : IdentityId::lemma_B;
    const long smax = env.cap("k_sum", 6, 3);
    for (long s = 3; s <= smax; ++s)
        for (long k1 = 1; k1 <= s - 2; ++k1)
            for (long k2 = 1; k1 + k2 <= s - 1; ++k2) {
                const long k3 = s - k1 - k2;
                series_cells(rep, env, id,
                             "k=(" + std::to_string(k1) + "," + std::to_string(k2) +
                                 "," + std::to_string(k3) + ")",
                             static_cast<int>(s), [&](const EvalContext& ctx) {
                                 return lemma_sides(side, static_cast<int>(k1),
                                                    static_cast<int>(k2),
                                                    static_cast<int>(k3), ctx,
                                                    env.N);
                             });
            }
}

void run_u_telescope(const Env& env, Report& rep) {
    const long smax = env.cap("s", env.N, 3);
    for (long s = 3; s <= smax; ++s)
        for (long k = 1; k <= s - 1; ++k) {
            modp_cells(rep, env, IdentityId::U_telescope,
                       "k=" + std::to_string(k) + " s=" + std::to_string(s),
                       static_cast<int>(s) - 1, [&](const EvalContext& ctx) {
                           return u_telescope_sides(static_cast<int>(k),
                                                    static_cast<int>(s), ctx);
                       });
        }
}

void run_o_depth1(const Env& env, Report& rep) {
    const long kmax = env.cap("k", 5, 1);
    for (long k = 1; k <= kmax; ++k) {
        const Index idx{static_cast<int>(k)};
        series_cells(rep, env, IdentityId::O_depth1, "k=" + std::to_string(k),
                     static_cast<int>(k), [&](const EvalContext& ctx) {
                         return SeriesPair{ohno_series(idx, ctx, env.N),
                                           TruncSeries(ctx.prime(), env.N)};
                     });
    }
}

void run_o_depth2(const Env& env, Report& rep) {
    const long smax = env.cap("k_sum", 6, 2);
    for (long s = 2; s <= smax; ++s)
        for (long k1 = 1; k1 <= s - 1; ++k1) {
            const long k2 = s - k1;
            const Index idx{static_cast<int>(k1), static_cast<int>(k2)};
            series_cells(rep, env, IdentityId::O_depth2,
                         "k=(" + std::to_string(k1) + "," + std::to_string(k2) + ")",
                         static_cast<int>(s), [&](const EvalContext& ctx) {
                             return SeriesPair{ohno_series(idx, ctx, env.N),
                                               TruncSeries(ctx.prime(), env.N)};
                         });
        }
}

void run_main(const Env& env, Report& rep, bool force_k2_2) {
    const IdentityId id = force_k2_2 ? IdentityId::main_k2eq2 : IdentityId::main;
    const long smax = force_k2_2 ? env.cap("k_sum", 5, 2) : env.cap("k_sum", 7, 3);
    if (force_k2_2) {
        for (long s13 = 2; s13 <= smax; ++s13)
            for (long k1 = 1; k1 <= s13 - 1; ++k1) {
                const long k3 = s13 - k1;
                const Index idx{static_cast<int>(k1), 2, static_cast<int>(k3)};
                series_cells(
                    rep, env, id,
                    "k=(" + std::to_string(k1) + ",2," + std::to_string(k3) + ")",
                    idx.weight(), [&](const EvalContext& ctx) {
                        return SeriesPair{
                            ohno_series(idx, ctx, env.N),
                            main_rhs_series(static_cast<int>(k1), 2,
                                            static_cast<int>(k3), ctx, env.N)};
                    });
            }
        return;
    }
    for (long s = 3; s <= smax; ++s)
        for (long k1 = 1; k1 <= s - 2; ++k1)
            for (long k2 = 1; k1 + k2 <= s - 1; ++k2) {
                const long k3 = s - k1 - k2;
                const Index idx{static_cast<int>(k1), static_cast<int>(k2),
                                static_cast<int>(k3)};
                series_cells(
                    rep, env, id,
                    "k=(" + std::to_string(k1) + "," + std::to_string(k2) + "," +
                        std::to_string(k3) + ")",
                    static_cast<int>(s), [&](const EvalContext& ctx) {
                        return SeriesPair{
                            ohno_series(idx, ctx, env.N),
                            main_rhs_series(static_cast<int>(k1),
                                            static_cast<int>(k2),
                                            static_cast<int>(k3), ctx, env.N)};
                    });
            }
}

void run_kaneko(const Env& env, Report& rep) {
    const Index idx{2, 1, 2};
    series_cells(rep, env, IdentityId::kaneko_conjecture, "k=(2,1,2)",
                 idx.weight(), [&](const EvalContext& ctx) {
                     TruncSeries f21 = f_series(2, 1, ctx, env.N);
                     return SeriesPair{ohno_series(idx, ctx, env.N), f21 * f21};
                 });
}

void run_ohno_classical(const Env& env, Report& rep) {
    const long mmax = env.cap("m", 2, 0);
    const long terms = env.cap("terms", 100000, 10);
    const std::vector<Index> ks = {Index{2}, Index{1, 2}, Index{2, 2},
                                   Index{1, 1, 2}};
    for (const Index& k : ks)
        for (long m = 0; m <= mmax; ++m) {
            OhnoClassicalResult r = verify_ohno_classical(k, static_cast<int>(m),
                                                          terms);
            ReportEntry e;
            e.identity = IdentityId::ohno_classical;
            e.params = "k=" + to_string(k) + " m=" + std::to_string(m);
            e.weight = k.weight() + static_cast<int>(m);
            e.lhs = real_text(r.lhs);
            e.rhs = real_text(r.rhs);
            e.pass = r.pass;
            rep.append(std::move(e));
        }
}

void dispatch(IdentityId id, const Env& env, Report& rep) {
    switch (id) {
        case IdentityId::dep1_vanish: return run_dep1_vanish(env, rep);
        case IdentityId::symsum: return run_symsum(env, rep);
        case IdentityId::dep2_eval: return run_dep2_eval(env, rep);
        case IdentityId::antipode: return run_antipode(env, rep);
        case IdentityId::hoffman_duality: return run_hoffman_duality(env, rep);
        case IdentityId::reversal: return run_reversal(env, rep);
        case IdentityId::eval_112: return run_eval_112(env, rep);
        case IdentityId::parity_112: return run_parity_112(env, rep);
        case IdentityId::sum_formula: return run_sum_formula(env, rep);
        case IdentityId::oyama: return run_oyama(env, rep);
        case IdentityId::ohno_fs: return run_ohno_fs(env, rep);
        case IdentityId::shF: return run_shF(env, rep);
        case IdentityId::shF2: return run_shF2(env, rep);
        case IdentityId::PQ_exact: return run_pq_exact(env, rep);
        case IdentityId::PQ2_modp: return run_pq2_modp(env, rep);
        case IdentityId::lemma_A: return run_lemma(env, rep, LemmaSide::A);
        case IdentityId::lemma_B: return run_lemma(env, rep, LemmaSide::B);
        case IdentityId::U_telescope: return run_u_telescope(env, rep);
        case IdentityId::O_depth1: return run_o_depth1(env, rep);
        case IdentityId::O_depth2: return run_o_depth2(env, rep);
        case IdentityId::main: return run_main(env, rep, false);
        case IdentityId::main_k2eq2: return run_main(env, rep, true);
        case IdentityId::kaneko_conjecture: return run_kaneko(env, rep);
        case IdentityId::ohno_classical: return run_ohno_classical(env, rep);
    }
    throw std::logic_error("unknown identity id");
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += '"';
    return out;
}

std::string prime_text(const ReportEntry& e) {
    if (e.prime) return std::to_string(*e.prime);
    return field_of(e.identity) == FieldKind::Real ? "real" : "exact";
}

std::string entry_params(const ReportEntry& e) {
    return e.outside_guarantee ? e.params + " !outside-guarantee" : e.params;
}

}  // namespace

std::string_view identity_name(IdentityId id) { return kIdTable[id_rank(id)].name; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (const auto& info : kIdTable)
        if (info.name == name) return info.id;
    return std::nullopt;
}

FieldKind field_of(IdentityId id) { return kIdTable[id_rank(id)].field; }

void Report::append(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void Report::sort_entries() {
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const ReportEntry& a, const ReportEntry& b) {
                         return std::tuple(id_rank(a.identity), a.params,
                                           a.prime.value_or(0),
                                           a.weight.value_or(-1)) <
                                std::tuple(id_rank(b.identity), b.params,
                                           b.prime.value_or(0),
                                           b.weight.value_or(-1));
                     });
}

std::size_t Report::passed() const noexcept {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (!e.outside_guarantee && e.pass) ++n;
    return n;
}

std::size_t Report::failed() const noexcept {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (!e.outside_guarantee && !e.pass) ++n;
    return n;
}

std::size_t Report::flagged() const noexcept {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (e.outside_guarantee) ++n;
    return n;
}

std::string Report::summary() const {
    const std::size_t counted = size() - flagged();
    std::string s = (failed() == 0 ? "PASS " : "FAIL ") +
                    std::to_string(passed()) + "/" + std::to_string(counted);
    if (flagged() > 0)
        s += " (" + std::to_string(flagged()) + " outside guarantee)";
    return s;
}

void Report::write_json_lines(std::ostream& os) const {
    for (const auto& e : entries_) {
        os << "{\"identity\":\"" << identity_name(e.identity) << "\""
           << ",\"params\":\"" << json_escape(entry_params(e)) << "\"";
        if (e.prime)
            os << ",\"prime\":" << *e.prime;
        else
            os << ",\"prime\":\"" << prime_text(e) << "\"";
        if (e.weight)
            os << ",\"weight\":" << *e.weight;
        else
            os << ",\"weight\":null";
        os << ",\"lhs\":\"" << json_escape(e.lhs) << "\""
           << ",\"rhs\":\"" << json_escape(e.rhs) << "\""
           << ",\"pass\":" << (e.pass ? "true" : "false") << "}\n";
    }
}

void Report::write_csv(std::ostream& os) const {
    os << "identity,params,prime,weight,lhs,rhs,pass\n";
    for (const auto& e : entries_) {
        os << identity_name(e.identity) << ',' << csv_escape(entry_params(e))
           << ',' << prime_text(e) << ','
           << (e.weight ? std::to_string(*e.weight) : std::string()) << ','
           << csv_escape(e.lhs) << ',' << csv_escape(e.rhs) << ','
           << (e.pass ? "true" : "false") << '\n';
    }
}

Report run_identity(IdentityId id, const std::vector<Prime>& primes, int cutoff,
                    const GridOptions& opts) {
    if (cutoff < 4) throw std::invalid_argument("cutoff must be >= 4");
    const auto& allowed = allowed_knobs(id);
    for (const auto& [key, value] : opts.caps)
        if (!allowed.contains(key))
            throw std::invalid_argument("identity " +
                                        std::string(identity_name(id)) +
                                        " has no grid knob \"" + key + "\"");

    std::vector<Prime> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](Prime a, Prime b) { return a == b; }),
                 sorted.end());

    Env env{{}, cutoff, &opts};
    if (field_of(id) == FieldKind::ModP)
        for (Prime p : sorted) env.ctxs.emplace_back(p);

    Report rep;
    dispatch(id, env, rep);
    if (rep.size() == 0 && field_of(id) != FieldKind::ModP)
        throw std::invalid_argument("parameter grid is empty");
    rep.sort_entries();
    return rep;
}

Report run_all(const std::vector<Prime>& primes, int cutoff) {
    Report rep;
    for (IdentityId id : kAllIdentities)
        rep.append(run_identity(id, primes, cutoff));
    return rep;
}

}  // namespace fzeta
