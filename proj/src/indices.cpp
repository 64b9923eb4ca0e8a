#include "fzeta/indices.hpp"

#include <algorithm>
#include <stdexcept>

namespace fzeta {

void Index::validate() const {
    for (int k : parts_)
        if (k < 1) throw std::invalid_argument("index parts must be positive");
}

int weight(const Index& k) { return k.weight(); }
int depth(const Index& k) { return k.depth(); }

Index all_ones(int m) {
    if (m < 0) throw std::invalid_argument("all_ones: negative length");
    return Index(std::vector<int>(static_cast<std::size_t>(m), 1));
}

Index oplus(const Index& k, std::span<const int> bump) {
    if (static_cast<std::size_t>(k.depth()) != bump.size())
        throw std::invalid_argument("oplus: length mismatch");
    std::vector<int> parts = k.parts();
    for (std::size_t i = 0; i < bump.size(); ++i) {
        if (bump[i] < 0) throw std::invalid_argument("oplus: negative bump");
        parts[i] += bump[i];
    }
    return Index(std::move(parts));
}

std::vector<std::vector<int>> enumerate_bumps(int r, int m) {
    if (r < 1 || m < 0) throw std::invalid_argument("enumerate_bumps: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    // Depth-first with the leftmost slot outermost gives lexicographic order.
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == r - 1) {
            cur[static_cast<std::size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

Index hoffman_dual(const Index& k) {
    if (k.empty()) throw std::invalid_argument("hoffman_dual: empty index");
    const int n = k.weight();
    // A composition of n is the set of its partial sums inside {1..n-1};
    // the dual composition uses the complementary set.
    std::vector<bool> cut(static_cast<std::size_t>(n), false);
    int acc = 0;
    for (int i = 0; i + 1 < k.depth(); ++i) {
        acc += k.at(i);
        cut[static_cast<std::size_t>(acc)] = true;
    }
    std::vector<int> parts;
    int run = 0;
    for (int pos = 1; pos <= n; ++pos) {
        ++run;
        const bool boundary = (pos == n) || !cut[static_cast<std::size_t>(pos)];
        if (boundary) {
            parts.push_back(run);
            run = 0;
        }
    }
    return Index(std::move(parts));
}

bool admissible(const Index& k) {
    return !k.empty() && k.parts().back() >= 2;
}

Index dual_index(const Index& k) {
    if (!admissible(k))
        throw std::invalid_argument("dual_index: index not admissible");
    // Run-length form: ({1}^{a-1}, b+1) blocks, scanned left to right.
    std::vector<std::pair<int, int>> blocks;  // (a_i, b_i)
    int i = 0;
    while (i < k.depth()) {
        int ones = 0;
        while (i < k.depth() && k.at(i) == 1) {
            ++ones;
            ++i;
        }
        // Admissibility guarantees a part >= 2 closes every block.
        blocks.emplace_back(ones + 1, k.at(i) - 1);
        ++i;
    }
    std::vector<int> parts;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        parts.insert(parts.end(), static_cast<std::size_t>(it->second - 1), 1);
        parts.push_back(it->first + 1);
    }
    return Index(std::move(parts));
}

Index reversed(const Index& k) {
    std::vector<int> parts(k.parts().rbegin(), k.parts().rend());
    return Index(std::move(parts));
}

void IndexCombo::add(const Index& k, const Rational& c) {
    if (fzeta::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (fzeta::is_zero(it->second)) terms_.erase(it);
    }
}

IndexCombo& IndexCombo::operator+=(const IndexCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

IndexCombo& IndexCombo::operator-=(const IndexCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, Rational(-c));
    return *this;
}

IndexCombo& IndexCombo::operator*=(const Rational& c) {
    if (fzeta::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

namespace {

void shuffle_rec(std::span<const int> a, std::span<const int> b,
                 std::vector<int>& prefix, IndexCombo& out) {
    if (a.empty() && b.empty()) {
        out.add(Index(prefix), 1);
        return;
    }
    if (!a.empty()) {
        prefix.push_back(a.front());
        shuffle_rec(a.subspan(1), b, prefix, out);
        prefix.pop_back();
    }
    if (!b.empty()) {
        prefix.push_back(b.front());
        shuffle_rec(a, b.subspan(1), prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

IndexCombo index_shuffle(const Index& k, const Index& l) {
    IndexCombo out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(k.depth() + l.depth()));
    shuffle_rec(k.parts(), l.parts(), prefix, out);
    return out;
}

IndexCombo index_shuffle(const IndexCombo& a, const IndexCombo& b) {
    IndexCombo out;
    for (const auto& [k, ck] : a.terms())
        for (const auto& [l, cl] : b.terms()) {
            IndexCombo part = index_shuffle(k, l);
            part *= Rational(ck * cl);
            out += part;
        }
    return out;
}

std::string to_string(const Index& k) {
    std::string s = "(";
    for (int i = 0; i < k.depth(); ++i) {
        if (i) s += ',';
        s += std::to_string(k.at(i));
    }
    s += ')';
    return s;
}

Index parse_index(std::string_view text) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("cannot parse index: " + std::string(text));
    };
    // Strip blanks; the grammar has none.
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t += c;

    if (t.rfind("ones:", 0) == 0) {
        std::size_t pos = 0;
        int m = 0;
        try {
            m = std::stoi(t.substr(5), &pos);
        } catch (const std::exception&) {
            fail();
        }
        if (pos != t.size() - 5 || m < 0) fail();
        return all_ones(m);
    }

    if (t.size() < 2 || t.front() != '(' || t.back() != ')') fail();
    std::string body = t.substr(1, t.size() - 2);
    if (body.empty()) return Index();
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string piece = body.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            fail();
        long v = std::stol(piece);
        if (v < 1 || v > 1000000) fail();
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Index(std::move(parts));
}

std::string to_string(const IndexCombo& c) {
    if (c.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, q] : c.terms()) {
        std::string coeff = to_string(q);
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
        s += to_string(k);
        first = false;
    }
    return s;
}

}  // namespace fzeta
