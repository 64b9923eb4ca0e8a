#include "fzeta/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace fzeta {

void Word::validate() const {
    for (char c : letters_)
        if (c != 'x' && c != 'y')
            throw std::invalid_argument("word letters must be x or y");
}

Word reversed(const Word& w) {
    std::string s(w.str().rbegin(), w.str().rend());
    return Word(s);
}

Word word_power(char letter, int n) {
    if (n < 0) throw std::invalid_argument("word_power: negative exponent");
    return Word(std::string(static_cast<std::size_t>(n), letter));
}

void WordPoly::add(const Word& w, const Rational& c) {
    if (fzeta::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (fzeta::is_zero(it->second)) terms_.erase(it);
    }
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, Rational(-c));
    return *this;
}

WordPoly& WordPoly::operator*=(const Rational& c) {
    if (fzeta::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

namespace {

void shuffle_rec(std::string_view a, std::string_view b, std::string& prefix,
                 WordPoly& out) {
    if (a.empty() && b.empty()) {
        out.add(Word(prefix), 1);
        return;
    }
    if (!a.empty()) {
        prefix.push_back(a.front());
        shuffle_rec(a.substr(1), b, prefix, out);
        prefix.pop_back();
    }
    if (!b.empty()) {
        prefix.push_back(b.front());
        shuffle_rec(a, b.substr(1), prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

WordPoly shuffle(const Word& a, const Word& b) {
    WordPoly out;
    std::string prefix;
    prefix.reserve(a.degree() + b.degree());
    shuffle_rec(a.str(), b.str(), prefix, out);
    return out;
}

WordPoly shuffle(const WordPoly& a, const WordPoly& b) {
    WordPoly out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            WordPoly part = shuffle(wa, wb);
            part *= Rational(ca * cb);
            out += part;
        }
    return out;
}

WordPoly append(const WordPoly& a, const Word& w) {
    WordPoly out;
    for (const auto& [wa, ca] : a.terms()) out.add(wa * w, ca);
    return out;
}

Index p_map(const Word& w) {
    const std::string& s = w.str();
    if (s.size() < 2 || s.front() != 'y' || s.back() != 'y')
        throw std::domain_error("p_map: word not of the form y...y with degree >= 2: \"" +
                                s + "\"");
    // Drop the trailing y; every y left opens one entry 1 + #x until next y.
    std::vector<int> parts;
    std::size_t i = 0;
    const std::size_t end = s.size() - 1;
    while (i < end) {
        // s[i] == 'y' here: position 0 is y, and each loop stops at a y.
        std::size_t j = i + 1;
        while (j < end && s[j] == 'x') ++j;
        parts.push_back(static_cast<int>(j - i));
        i = j;
    }
    return Index(std::move(parts));
}

IndexCombo p_map(const WordPoly& a) {
    IndexCombo out;
    for (const auto& [w, c] : a.terms()) out.add(p_map(w), c);
    return out;
}

namespace {

Word bump_word(int l1, int e1, int l2, int e2, int l3, int e3) {
    return word_power('y', l1 + e1) * word_power('x', 1) *
           word_power('y', l2 + e2 - 1) * word_power('x', 1) *
           word_power('y', l3 + e3);
}

void check_pq_args(int m, int l1, int l2, int l3) {
    if (m < 0 || l1 < 1 || l2 < 1 || l3 < 1)
        throw std::invalid_argument("P/Q polynomials need m >= 0 and l_i >= 1");
}

}  // namespace

WordPoly build_p(int m, int l1, int l2, int l3) {
    check_pq_args(m, l1, l2, l3);
    const Rational sign = (m % 2 == 0) ? 1 : -1;
    WordPoly out;
    for (int e1 = 0; e1 <= m; ++e1)
        for (int e2 = 0; e2 <= m - e1; ++e2) {
            const int e3 = m - e1 - e2;
            out.add(bump_word(l1, e1, l2, e2, l3, e3), sign);
        }
    return out;
}

WordPoly build_q(int m, int l1, int l2, int l3) {
    check_pq_args(m, l1, l2, l3);
    WordPoly out;
    for (int e1 = 0; e1 <= m; ++e1)
        for (int e2 = 0; e2 <= m - e1; ++e2) {
            const int e3 = m - e1 - e2;
            // l2 = 1 edge: the middle weight C(e2-1, e2) means 1 at e2 = 0,
            // 0 otherwise.
            if (l2 == 1 && e2 > 0) continue;
            const BigInt mid =
                (l2 == 1) ? BigInt(1) : binom_exact(l2 + e2 - 2, e2);
            Rational c(binom_exact(l1 + e1 - 1, e1) * mid *
                       binom_exact(l3 + e3 - 1, e3));
            out.add(bump_word(l1, e1, l2, e2, l3, e3), c);
        }
    return out;
}

namespace {

WordPoly bump_shuffle_sum(int i_hi, int m, int l1, int l2, int l3, bool negate) {
    WordPoly out;
    for (int i = 0; i <= i_hi; ++i) {
        Rational sign = (i % 2 == 0) ? 1 : -1;
        if (negate) sign = -sign;
        const Word tail = word_power('y', m - i);
        for (int e1 = 0; e1 <= i; ++e1)
            for (int e2 = 0; e2 <= i - e1; ++e2) {
                const int e3 = i - e1 - e2;
                WordPoly part = shuffle(bump_word(l1, e1, l2, e2, l3, e3), tail);
                part *= sign;
                out += part;
            }
    }
    return out;
}

}  // namespace

WordPoly pq_difference_shuffles(int m, int l1, int l2, int l3) {
    check_pq_args(m, l1, l2, l3);
    return bump_shuffle_sum(m - 1, m, l1, l2, l3, /*negate=*/true);
}

WordPoly q_shuffle_expansion(int m, int l1, int l2, int l3) {
    check_pq_args(m, l1, l2, l3);
    return bump_shuffle_sum(m, m, l1, l2, l3, /*negate=*/false);
}

std::string to_string(const Word& w) { return w.empty() ? "1" : w.str(); }

std::string to_string(const WordPoly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, q] : a.terms()) {
        std::string coeff = fzeta::to_string(q);
        if (first) {
            if (coeff == "1") {
            } else if (coeff == "-1") {
                s += '-';
            } else {
                s += coeff + "*";
            }
        } else if (coeff == "1") {
            s += " + ";
        } else if (coeff == "-1") {
            s += " - ";
        } else if (!coeff.empty() && coeff[0] == '-') {
            s += " - " + coeff.substr(1) + "*";
        } else {
            s += " + " + coeff + "*";
        }
        s += to_string(w);
        first = false;
    }
    return s;
}

Word parse_word(std::string_view text) {
    if (text == "1") return Word();
    return Word(text);  // Word's own validation rejects bad letters
}

}  // namespace fzeta
