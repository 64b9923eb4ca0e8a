#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fzeta/rational.hpp"

namespace fzeta {

// A finite (possibly empty) sequence of positive integers. Weight is the
// sum of the parts, depth their number.
class Index {
  public:
    Index() = default;
    Index(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Index(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int depth() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept {
        int w = 0;
        for (int k : parts_) w += k;
        return w;
    }
    bool empty() const noexcept { return parts_.empty(); }
    int at(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    friend auto operator<=>(const Index&, const Index&) = default;

  private:
    void validate() const;
    std::vector<int> parts_;
};

int weight(const Index& k);
int depth(const Index& k);

// ({1}^m): the all-one index of length m.
Index all_ones(int m);

// Componentwise addition k (+) e; lengths must match.
Index oplus(const Index& k, std::span<const int> bump);

// All length-r sequences of nonnegative integers summing to m, in
// lexicographic order. Count is C(m+r-1, r-1).
std::vector<std::vector<int>> enumerate_bumps(int r, int m);

// Swap the roles of "comma" and "plus" in the composition of the weight.
// Weight-preserving involution; depth(dual) = weight - depth + 1.
Index hoffman_dual(const Index& k);

// Last part >= 2 (the convergent classical indices).
bool admissible(const Index& k);

// The classical duality involution on admissible indices: write
// k = ({1}^{a1-1}, b1+1, ..., {1}^{as-1}, bs+1) with a_i, b_i >= 1 and
// return ({1}^{bs-1}, as+1, ..., {1}^{b1-1}, a1+1).
Index dual_index(const Index& k);

Index reversed(const Index& k);

// Formal Q-linear combination of indices. Zero coefficients are never
// stored; iteration order is deterministic (lexicographic in the index).
class IndexCombo {
  public:
    using Terms = std::map<Index, Rational>;

    IndexCombo() = default;
    IndexCombo(const Index& k, const Rational& c = 1) { add(k, c); }

    void add(const Index& k, const Rational& c);
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    IndexCombo& operator+=(const IndexCombo& o);
    IndexCombo& operator-=(const IndexCombo& o);
    IndexCombo& operator*=(const Rational& c);
    friend IndexCombo operator+(IndexCombo a, const IndexCombo& b) { return a += b; }
    friend IndexCombo operator-(IndexCombo a, const IndexCombo& b) { return a -= b; }
    friend IndexCombo operator*(const Rational& c, IndexCombo a) { return a *= c; }
    friend bool operator==(const IndexCombo&, const IndexCombo&) = default;

  private:
    Terms terms_;
};

// The interleaving product on indices (components are never merged),
// extended bilinearly. Single indices of depths r and s produce C(r+s, r)
// terms counted with multiplicity.
IndexCombo index_shuffle(const Index& k, const Index& l);
IndexCombo index_shuffle(const IndexCombo& a, const IndexCombo& b);

// CLI text forms: "(2,1,2)", "()" and the sugar "ones:m".
std::string to_string(const Index& k);
Index parse_index(std::string_view text);

std::string to_string(const IndexCombo& c);

}  // namespace fzeta
