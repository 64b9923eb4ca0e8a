#include "fzeta/modmath.hpp"

#include <string>

namespace fzeta {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Prime::Prime(std::uint32_t value) : value_(value) {
    if (!is_prime_u64(value))
        throw std::invalid_argument("not a prime: " + std::to_string(value));
}

Residue Residue::pow(std::uint64_t e) const {
    std::uint64_t base = v_, r = 1, p = modulus().value();
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return Residue::from_raw(static_cast<std::uint32_t>(r), p_);
}

Residue Residue::inv() const {
    if (v_ == 0) throw std::domain_error("non-invertible");
    return pow(p_.value() - 2);
}

Residue mod_inv(Residue a) { return a.inv(); }

Residue reduce_mod(const Rational& q, Prime p) {
    std::uint32_t num = static_cast<std::uint32_t>(
        mpz_fdiv_ui(q.get_num_mpz_t(), p.value()));
    std::uint32_t den = static_cast<std::uint32_t>(
        mpz_fdiv_ui(q.get_den_mpz_t(), p.value()));
    if (den == 0) throw std::domain_error("bad prime for combo");
    return Residue::from_raw(num, p) * Residue::from_raw(den, p).inv();
}

std::vector<Prime> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<Prime> out;
    if (hi < lo || hi < 2) return out;
    if (lo < 2) lo = 2;
    // Plain sieve over [lo, hi]; ranges in this project are tiny.
    std::vector<bool> composite(hi - lo + 1, false);
    for (std::uint64_t d = 2; d * d <= hi; ++d) {
        std::uint64_t first = std::max(d * d, (lo + d - 1) / d * d);
        for (std::uint64_t m = first; m <= hi; m += d) composite[m - lo] = true;
    }
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (!composite[n - lo]) out.emplace_back(static_cast<std::uint32_t>(n));
    return out;
}

std::vector<Prime> primes_above(std::uint64_t floor, std::size_t count) {
    std::vector<Prime> out;
    std::uint64_t n = floor + 1;
    while (out.size() < count) {
        if (is_prime_u64(n)) out.emplace_back(static_cast<std::uint32_t>(n));
        ++n;
    }
    return out;
}

Residue binom_mod(std::uint64_t n, std::int64_t k, Prime p) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return Residue(0, p);
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    std::uint64_t pv = p.value();
    Residue r(1, p);
    // Lucas: split into base-p digits; each digit pair has n_i, k_i < p.
    while (n > 0 || kk > 0) {
        std::uint64_t ni = n % pv, ki = kk % pv;
        if (ki > ni) return Residue(0, p);
        if (ki > ni - ki) ki = ni - ki;
        Residue num(1, p), den(1, p);
        for (std::uint64_t t = 0; t < ki; ++t) {
            num *= Residue(static_cast<std::int64_t>(ni - t), p);
            den *= Residue(static_cast<std::int64_t>(t + 1), p);
        }
        r *= num * den.inv();
        n /= pv;
        kk /= pv;
    }
    return r;
}

std::vector<std::uint32_t> batch_inverses(Prime p) {
    const std::uint64_t pv = p.value();
    std::vector<std::uint32_t> inv(pv, 0);
    if (pv < 2) return inv;
    std::vector<std::uint32_t> prefix(pv, 1);
    std::uint64_t acc = 1;
    for (std::uint64_t m = 1; m < pv; ++m) {
        acc = acc * m % pv;
        prefix[m] = static_cast<std::uint32_t>(acc);
    }
    std::uint64_t run = Residue(static_cast<std::int64_t>(acc), p).inv().value();
    for (std::uint64_t m = pv - 1; m >= 1; --m) {
        inv[m] = static_cast<std::uint32_t>(run * prefix[m - 1] % pv);
        run = run * m % pv;
    }
    return inv;
}

BernoulliTable::BernoulliTable(Prime p) : p_(p) {
    const std::uint64_t pv = p.value();
    if (pv < 5) throw std::invalid_argument("Bernoulli table needs p >= 5");

    // Factorials and inverse factorials mod p for the C(m+1, j) weights.
    std::vector<std::uint64_t> fact(pv), inv_fact(pv);
    fact[0] = 1;
    for (std::uint64_t i = 1; i < pv; ++i) fact[i] = fact[i - 1] * i % pv;
    inv_fact[pv - 1] =
        Residue(static_cast<std::int64_t>(fact[pv - 1]), p).inv().value();
    for (std::uint64_t i = pv - 1; i >= 1; --i)
        inv_fact[i - 1] = inv_fact[i] * i % pv;
    auto binom = [&](std::uint64_t n, std::uint64_t k) {
        return fact[n] * inv_fact[k] % pv * inv_fact[n - k] % pv;
    };

    // sum_{j<=m} C(m+1, j) B_j = 0, solved for B_m. All B_j with j <= p-3
    // are p-integral, so the whole recurrence lives in F_p.
    const std::size_t top = static_cast<std::size_t>(pv - 3);
    values_.assign(top + 1, 0);
    values_[0] = 1;
    for (std::size_t m = 1; m <= top; ++m) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < m; ++j)
            s = (s + binom(m + 1, j) * values_[j]) % pv;
        std::uint64_t inv_m1 =
            Residue(static_cast<std::int64_t>(m + 1), p).inv().value();
        values_[m] = static_cast<std::uint32_t>((pv - s) % pv * inv_m1 % pv);
    }
}

Residue bernoulli_zeta(int n, const BernoulliTable& table) {
    const std::uint32_t pv = table.modulus().value();
    if (n < 2 || static_cast<std::uint32_t>(n) > pv - 2)
        throw std::domain_error("depth-one zeta undefined at this component");
    const std::uint32_t idx = pv - static_cast<std::uint32_t>(n);
    // idx == p-2 happens only for n == 2; p-2 is an odd index >= 3, so the
    // corresponding Bernoulli number is 0 and the table need not store it.
    Residue b = (idx + 2 == pv) ? Residue(0, table.modulus()) : table.at(idx);
    return b * Residue(n, table.modulus()).inv();
}

}  // namespace fzeta
