#pragma once

#include <map>
#include <string>
#include <string_view>

#include "fzeta/indices.hpp"
#include "fzeta/rational.hpp"

namespace fzeta {

// A word over the alphabet {x, y}; the empty word is the unit.
class Word {
  public:
    Word() = default;
    explicit Word(std::string_view letters) : letters_(letters) { validate(); }

    const std::string& str() const noexcept { return letters_; }
    std::size_t degree() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    // Concatenation (the noncommutative product).
    friend Word operator*(const Word& a, const Word& b) {
        Word w;
        w.letters_ = a.letters_ + b.letters_;
        return w;
    }

    friend auto operator<=>(const Word&, const Word&) = default;

  private:
    void validate() const;
    std::string letters_;
};

Word reversed(const Word& w);

// letter^n, letter in {x, y}, n >= 0.
Word word_power(char letter, int n);

// Q-linear combination of words, no zero coefficients stored.
class WordPoly {
  public:
    using Terms = std::map<Word, Rational>;

    WordPoly() = default;
    WordPoly(const Word& w, const Rational& c = 1) { add(w, c); }
    static WordPoly one() { return WordPoly(Word(), 1); }

    void add(const Word& w, const Rational& c);
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    WordPoly& operator+=(const WordPoly& o);
    WordPoly& operator-=(const WordPoly& o);
    WordPoly& operator*=(const Rational& c);
    friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
    friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
    friend WordPoly operator*(const Rational& c, WordPoly a) { return a *= c; }
    friend bool operator==(const WordPoly&, const WordPoly&) = default;

  private:
    Terms terms_;
};

// The interleaving (shuffle) product, extended bilinearly. Commutative,
// associative, unit = empty word.
WordPoly shuffle(const Word& a, const Word& b);
WordPoly shuffle(const WordPoly& a, const WordPoly& b);

// Right-concatenate every term with w.
WordPoly append(const WordPoly& a, const Word& w);

// The linear map taking (prod_i y x^{k_i - 1}) * y to (k_1, ..., k_r).
// Defined exactly on words that start and end with y and have degree >= 2;
// anything else throws std::domain_error.
Index p_map(const Word& w);
IndexCombo p_map(const WordPoly& a);

// (-1)^m * sum_{e1+e2+e3=m} y^{l1+e1} x y^{l2+e2-1} x y^{l3+e3}.
WordPoly build_p(int m, int l1, int l2, int l3);

// sum_{e1+e2+e3=m} C(l1+e1-1,e1) C(l2+e2-2,e2) C(l3+e3-1,e3)
//                  * y^{l1+e1} x y^{l2+e2-1} x y^{l3+e3},
// where for l2 = 1 the middle binomial is 1 at e2 = 0 and 0 otherwise.
WordPoly build_q(int m, int l1, int l2, int l3);

// -sum_{i=0}^{m-1} sum_{e1+e2+e3=i} (-1)^i
//      (y^{l1+e1} x y^{l2+e2-1} x y^{l3+e3}) sh y^{m-i};
// equals build_p - build_q exactly.
WordPoly pq_difference_shuffles(int m, int l1, int l2, int l3);

// The same double sum with i running all the way to m; equals build_q.
WordPoly q_shuffle_expansion(int m, int l1, int l2, int l3);

std::string to_string(const Word& w);
std::string to_string(const WordPoly& a);
Word parse_word(std::string_view text);  // "yxyxy"; "1" for the empty word

}  // namespace fzeta
