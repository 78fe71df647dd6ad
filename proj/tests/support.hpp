#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "motzkin/class_model.hpp"
#include "motzkin/counting.hpp"
#include "motzkin/kfield.hpp"
#include "motzkin/oracle.hpp"
#include "motzkin/paths.hpp"
#include "motzkin/strategies.hpp"

namespace testing {

using namespace motzkin;

inline Word W(const std::string& s) { return Word::parse(s); }
inline CrossingPattern X(const std::string& s) { return CrossingPattern::parse(s); }

// Every word over {U,H,D} of each length in [lo, hi].
inline std::vector<Word> words_between(std::size_t lo, std::size_t hi) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 0; len <= hi; ++len) {
        if (len >= lo) out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (Step s : {Step::U, Step::H, Step::D}) next.push_back(w + s);
        }
        layer = std::move(next);
    }
    return out;
}

// Subsequence test by dynamic programming over prefixes, independent of the
// library's greedy scan.
inline bool subseq(const Word& w, const Word& q) {
    std::vector<std::vector<bool>> t(q.size() + 1, std::vector<bool>(w.size() + 1, false));
    for (std::size_t j = 0; j <= w.size(); ++j) t[0][j] = true;
    for (std::size_t i = 1; i <= q.size(); ++i) {
        for (std::size_t j = 1; j <= w.size(); ++j) {
            t[i][j] = t[i][j - 1] || (t[i - 1][j - 1] && q[i - 1] == w[j - 1]);
        }
    }
    return t[q.size()][w.size()];
}

// Paths of length n by brute force over all 3^n words.
inline std::vector<Word> brute_paths(std::size_t n) {
    std::vector<Word> out;
    for (const auto& w : words_between(n, n)) {
        int h = 0;
        bool ok = true;
        for (Step s : w) {
            h += s == Step::U ? 1 : s == Step::D ? -1 : 0;
            if (h < 0) ok = false;
        }
        if (ok && h == 0) out.push_back(w);
    }
    return out;
}

// Crossing containment read off the first return by an explicit height scan.
inline bool crossing_member(const Word& p, const CrossingPattern& cp) {
    int h = 0;
    std::size_t ret = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        h += p[i] == Step::U ? 1 : p[i] == Step::D ? -1 : 0;
        if (h == 0) {
            ret = i;
            break;
        }
    }
    return subseq(p.slice(0, ret + 1), cp.left) && subseq(p.slice(ret + 1, p.size()), cp.right);
}

inline bool member(const ClassDescriptor& d, const Word& w) {
    if (d.mode == Mode::HStart && (w.empty() || w[0] != Step::H)) return false;
    if ((d.mode == Mode::UStart || d.mode == Mode::UCross) && (w.empty() || w[0] != Step::U)) return false;
    auto has = [&](const CrossingPattern& cp) {
        return d.mode == Mode::UCross ? crossing_member(w, cp) : subseq(w, cp.left + cp.right);
    };
    for (const auto& a : d.avoid) {
        if (has(a)) return false;
    }
    for (const auto& c : d.contain) {
        bool any = false;
        for (const auto& q : c) any = any || has(q);
        if (!any) return false;
    }
    return true;
}

inline std::set<std::string> brute_set(const ClassDescriptor& d, std::size_t n) {
    std::set<std::string> out;
    for (const auto& w : brute_paths(n)) {
        if (member(d, w)) out.insert(w.str());
    }
    return out;
}

// m_n = m_{n-1} + sum_k m_k m_{n-2-k}.
inline std::vector<BigInt> motzkin_numbers(std::size_t N) {
    std::vector<BigInt> m(N + 1);
    m[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        m[n] = m[n - 1];
        for (std::size_t k = 0; k + 2 <= n; ++k) m[n] += m[k] * m[n - 2 - k];
    }
    return m;
}

inline std::vector<BigInt> ints(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

inline std::vector<BigInt> as_ints(const std::vector<Rational>& s) {
    std::vector<BigInt> out;
    for (const auto& r : s) {
        if (r.get_den() != 1) return {};
        out.push_back(r.get_num());
    }
    return out;
}

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    PolyX poly(std::size_t max_deg) {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, static_cast<long>(max_deg))) + 1);
        for (auto& r : c) r = Rational(integer(-5, 5), integer(1, 3));
        for (auto& r : c) r.canonicalize();
        return PolyX(c);
    }

    RatX ratx(std::size_t max_deg) {
        PolyX d = poly(max_deg);
        while (d.is_zero()) d = poly(max_deg);
        return RatX(poly(max_deg), d);
    }

    KElem kelem(std::size_t max_deg) { return KElem(ratx(max_deg), ratx(max_deg)); }

    // a + b*C with polynomial a, b: always a power series.
    KElem series_kelem(std::size_t max_deg) { return KElem(RatX(poly(max_deg)), RatX(poly(max_deg))); }

    Word word(std::size_t max_len) {
        Word w;
        auto len = static_cast<std::size_t>(integer(0, static_cast<long>(max_len)));
        for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Step>(integer(0, 2)));
        return w;
    }
};

// Brute-force path set of a specification entry at length n.
inline std::set<std::string> entry_set(const Specification& spec, std::size_t index, std::size_t n) {
    const auto& e = spec.at(index);
    if (std::holds_alternative<EpsilonRule>(e.body)) {
        if (n == 0) return {""};
        return {};
    }
    if (!e.descriptor) return {};
    return brute_set(*e.descriptor, n);
}

// Checks every rule of `spec` against brute force at lengths 0..max_n. Returns
// an empty string on success, otherwise a description of the first failure.
inline std::string rule_soundness(const Specification& spec, std::size_t max_n) {
    std::vector<std::vector<std::set<std::string>>> sets(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) {
        for (std::size_t n = 0; n <= max_n; ++n) sets[i].push_back(entry_set(spec, i, n));
    }
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto& e = spec.at(i);
        for (std::size_t n = 0; n <= max_n; ++n) {
            std::set<std::string> rhs;
            std::string where = e.id.str() + " at n=" + std::to_string(n);
            if (std::holds_alternative<UnionRule>(e.body)) {
                std::size_t total = 0;
                for (std::size_t c : e.children) {
                    total += sets[c][n].size();
                    rhs.insert(sets[c][n].begin(), sets[c][n].end());
                }
                if (total != rhs.size()) return "union children overlap: " + where;
            } else if (const auto* p = std::get_if<ProductRule>(&e.body)) {
                if (p->atom == Atom::HStep) {
                    if (e.children.size() != 1) return "HStep arity: " + where;
                    if (n >= 1) {
                        for (const auto& w : sets[e.children[0]][n - 1]) rhs.insert("H" + w);
                    }
                } else {
                    if (e.children.size() != 2) return "UDArch arity: " + where;
                    for (std::size_t k = 0; k + 2 <= n; ++k) {
                        for (const auto& x : sets[e.children[0]][k]) {
                            for (const auto& y : sets[e.children[1]][n - 2 - k]) rhs.insert("U" + x + "D" + y);
                        }
                    }
                }
            } else if (std::holds_alternative<EpsilonRule>(e.body)) {
                if (n == 0) rhs.insert("");
            }
            if (rhs != sets[i][n]) return "rule does not match brute force: " + where;
        }
    }
    for (const auto& e : spec.entries()) {
        for (std::size_t c : e.children) {
            if (c >= spec.size()) return "dangling child in " + e.id.str();
        }
    }
    return {};
}

}  // namespace testing
