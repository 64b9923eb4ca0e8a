#pragma once

#include <optional>
#include <vector>

#include "fzeta/indices.hpp"
#include "fzeta/modmath.hpp"
#include "fzeta/words.hpp"

namespace fzeta {

enum class ZetaMode { Strict, Star };

// Everything needed to evaluate at one prime component: the prime, all
// inverses 1..p-1, and (for p >= 5) the Bernoulli table. Immutable after
// construction; safe to share across threads.
class EvalContext {
  public:
    explicit EvalContext(Prime p);

    Prime prime() const noexcept { return p_; }
    const std::vector<std::uint32_t>& inverses() const noexcept { return inv_; }

    const BernoulliTable& bernoulli() const {
        if (!bernoulli_)
            throw std::logic_error("Bernoulli table unavailable for p < 5");
        return *bernoulli_;
    }

    Residue residue(std::int64_t v) const { return Residue(v, p_); }

    // The depth-one value B_{p-n}/n mod p.
    Residue bz(int n) const { return bernoulli_zeta(n, bernoulli()); }

  private:
    Prime p_;
    std::vector<std::uint32_t> inv_;
    std::optional<BernoulliTable> bernoulli_;
};

// Truncated multiple harmonic sum mod p: chains m_1 < ... < m_r < p
// (Strict) or m_1 <= ... <= m_r < p (Star); the empty index gives 1.
// One pass over m with r running partial sums.
Residue zeta_finite(const Index& k, ZetaMode mode, const EvalContext& ctx);

// Q-linear extension; coefficient denominators must be coprime to p.
Residue zeta_finite(const IndexCombo& c, ZetaMode mode, const EvalContext& ctx);

// Composition with the p-map; every term of w must be in its domain.
Residue zeta_finite(const WordPoly& w, ZetaMode mode, const EvalContext& ctx);

}  // namespace fzeta
