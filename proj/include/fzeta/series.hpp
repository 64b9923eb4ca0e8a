#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fzeta/fmzv.hpp"
#include "fzeta/indices.hpp"
#include "fzeta/modmath.hpp"

namespace fzeta {

// A power series in X truncated at weight `cutoff`, coefficients mod one
// prime. Arithmetic requires matching (prime, cutoff).
class TruncSeries {
  public:
    TruncSeries(Prime p, int cutoff);

    Prime prime() const noexcept { return p_; }
    int cutoff() const noexcept { return cutoff_; }

    Residue at(int w) const;
    void set(int w, Residue v);
    void add_at(int w, Residue v);

    bool is_zero() const noexcept;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    TruncSeries operator-() const;

    // Cauchy product, truncated at the common cutoff.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  private:
    void check(const TruncSeries& o) const;

    Prime p_;
    int cutoff_;
    std::vector<std::uint32_t> coeff_;  // index w = coefficient of X^w
};

// sum_{n >= k+i} ((-1)^k C(n-1,k-1) - (-1)^i C(n-1,i-1)) bz(n) X^n,
// truncated at `cutoff` (which must be <= p-2).
TruncSeries f_series(int k, int i, const EvalContext& ctx, int cutoff);

// The Ohno-type generating function of a nonempty index: star bump sums of
// k plus sign-alternating star bump sums of its Hoffman dual, weight by
// weight up to the cutoff.
TruncSeries ohno_series(const Index& k, const EvalContext& ctx, int cutoff);

// The depth-three closed form the identity catalog compares ohno_series
// against: -sum_{i+j=k2+1, i,j>=2} F_{k1,i} F_{k3,j} for k2 >= 2 (an empty
// sum gives the zero series), and F_{k1,1} F_{k3,1} for k2 = 1.
TruncSeries main_rhs_series(int k1, int k2, int k3, const EvalContext& ctx,
                            int cutoff);

// The three quantities tied together by the sum formula at weight n,
// depth i+j+1, entry i+1 (1-based) at least 2.
struct SumFormulaSides {
    Residue strict_sum;  // sum of strict zeta over the index family
    Residue star_sum;    // same with star zeta
    Residue f_coeff;     // coefficient of X^n in F_{i+1, j+1}
};
SumFormulaSides sum_formula_sides(int i, int j, int n, const EvalContext& ctx);

// The two halves of the Ohno generating function and their closed forms
// (catalog ids lemma_A / lemma_B). Side A covers the direct bump sum,
// side B the alternating dual bump sum.
enum class LemmaSide { A, B };
struct SeriesPair {
    TruncSeries lhs;
    TruncSeries rhs;
};
SeriesPair lemma_sides(LemmaSide which, int k1, int k2, int k3,
                       const EvalContext& ctx, int cutoff);

// One step of the telescoping identity behind the depth-three closed form:
// (-1)^(k-1) C(s-2,k-1) bz(s-1) == (-1)^(s-k-1) C(s-2,s-k-1) bz(s-1).
// Requires 3 <= s <= p-2 and 1 <= k < s.
std::pair<Residue, Residue> u_telescope_sides(int k, int s, const EvalContext& ctx);
bool u_telescope_check(int k, int s, const EvalContext& ctx);

}  // namespace fzeta
