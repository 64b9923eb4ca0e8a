#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fzeta/rational.hpp"

namespace fzeta {

// A verified prime modulus. Construction runs a deterministic primality
// check (trial division; moduli in this project stay far below 2^32).
class Prime {
  public:
    explicit Prime(std::uint32_t value);

    std::uint32_t value() const noexcept { return value_; }

    friend bool operator==(Prime a, Prime b) noexcept { return a.value_ == b.value_; }
    friend bool operator!=(Prime a, Prime b) noexcept { return a.value_ != b.value_; }
    friend bool operator<(Prime a, Prime b) noexcept { return a.value_ < b.value_; }

  private:
    std::uint32_t value_;
};

// One residue class mod a fixed prime. Mixing moduli is a logic error and
// throws rather than silently reducing.
class Residue {
  public:
    Residue(std::int64_t v, Prime p) : p_(p) {
        std::int64_t m = v % static_cast<std::int64_t>(p.value());
        if (m < 0) m += p.value();
        v_ = static_cast<std::uint32_t>(m);
    }

    static Residue from_raw(std::uint32_t v, Prime p) {
        Residue r(0, p);
        r.v_ = v;
        return r;
    }

    std::uint32_t value() const noexcept { return v_; }
    Prime modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Residue& operator+=(Residue o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_.value()) v_ -= p_.value();
        return *this;
    }
    Residue& operator-=(Residue o) {
        check(o);
        v_ += p_.value() - o.v_;
        if (v_ >= p_.value()) v_ -= p_.value();
        return *this;
    }
    Residue& operator*=(Residue o) {
        check(o);
        v_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(v_) * o.v_) % p_.value());
        return *this;
    }

    friend Residue operator+(Residue a, Residue b) { return a += b; }
    friend Residue operator-(Residue a, Residue b) { return a -= b; }
    friend Residue operator*(Residue a, Residue b) { return a *= b; }
    Residue operator-() const { return Residue(-static_cast<std::int64_t>(v_), p_); }

    friend bool operator==(Residue a, Residue b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(Residue a, Residue b) { return !(a == b); }

    Residue pow(std::uint64_t e) const;
    Residue inv() const;  // throws std::domain_error on zero

  private:
    void check(Residue o) const {
        if (p_ != o.p_) throw std::invalid_argument("residue modulus mismatch");
    }

    std::uint32_t v_;
    Prime p_;
};

// Reduce an exact rational mod p. The denominator must be coprime to p.
Residue reduce_mod(const Rational& q, Prime p);

// All primes in [lo, hi], ascending; empty list allowed.
std::vector<Prime> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// First `count` primes strictly greater than `floor`.
std::vector<Prime> primes_above(std::uint64_t floor, std::size_t count);

Residue mod_inv(Residue a);

// inverses[m] == mod_inv(m) for 1 <= m <= p-1; index 0 unused. Uses the
// prefix-product trick: one inversion plus O(p) multiplications.
std::vector<std::uint32_t> batch_inverses(Prime p);

// C(n, k) mod p, with C(n, k) = 0 for k < 0 or k > n. Valid for all n
// (Lucas reduction when n >= p).
Residue binom_mod(std::uint64_t n, std::int64_t k, Prime p);

// B_0 .. B_{p-3} mod p, convolution recurrence, B_1 = -1/2 convention.
// Every stored entry is the reduction of a p-integral rational.
class BernoulliTable {
  public:
    explicit BernoulliTable(Prime p);  // requires p >= 5

    Prime modulus() const noexcept { return p_; }
    std::size_t size() const noexcept { return values_.size(); }  // p-2 entries

    Residue at(std::size_t m) const {
        if (m >= values_.size()) throw std::out_of_range("Bernoulli index out of table");
        return Residue::from_raw(values_[m], p_);
    }

  private:
    Prime p_;
    std::vector<std::uint32_t> values_;
};

inline BernoulliTable bernoulli_table(Prime p) { return BernoulliTable(p); }

// The depth-one finite zeta value at one prime component:
// B_{p-n} / n mod p, defined for 2 <= n <= p-2. Vanishes for even n.
Residue bernoulli_zeta(int n, const BernoulliTable& table);

}  // namespace fzeta
