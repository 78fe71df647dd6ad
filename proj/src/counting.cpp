#include "motzkin/counting.hpp"

#include <string>

#include "motzkin/errors.hpp"

namespace motzkin {

CountTable::CountTable(const Specification& spec)
    : spec_(&spec), memo_(spec.size()), known_(spec.size()) {}

const BigInt& CountTable::count(std::size_t index, std::size_t n) {
    if (index >= memo_.size()) throw UnknownClass("class index " + std::to_string(index) + " out of range");
    if (memo_[index].size() <= n) {
        memo_[index].resize(n + 1);
        known_[index].resize(n + 1, false);
    }
    if (known_[index][n]) return memo_[index][n];

    const auto& entry = spec_->at(index);
    BigInt value = 0;
    if (std::holds_alternative<EpsilonRule>(entry.body)) {
        value = n == 0 ? 1 : 0;
    } else if (std::holds_alternative<UnionRule>(entry.body)) {
        for (std::size_t c : entry.children) value += count(c, n);
    } else if (const auto* p = std::get_if<ProductRule>(&entry.body)) {
        if (p->atom == Atom::HStep) {
            if (n >= 1) value = count(entry.children[0], n - 1);
        } else if (n >= 2) {
            for (std::size_t i = 0; i + 2 <= n; ++i) {
                // Copy: the next call may grow the memo row holding it.
                BigInt left = count(entry.children[0], i);
                if (left == 0) continue;
                value += left * count(entry.children[1], n - 2 - i);
            }
        }
    }
    // memo_[index] may have been resized by the recursive calls above.
    memo_[index][n] = std::move(value);
    known_[index][n] = true;
    return memo_[index][n];
}

std::vector<BigInt> CountTable::sequence(std::size_t index, std::size_t max_length) {
    std::vector<BigInt> out;
    out.reserve(max_length + 1);
    for (std::size_t n = 0; n <= max_length; ++n) out.push_back(count(index, n));
    return out;
}

namespace {

void generate_into(CountTable& table, std::size_t index, std::size_t n, std::vector<Word>& out) {
    if (table.count(index, n) == 0) return;
    const auto& entry = table.spec().at(index);
    if (std::holds_alternative<EpsilonRule>(entry.body)) {
        out.emplace_back();
        return;
    }
    if (std::holds_alternative<UnionRule>(entry.body)) {
        for (std::size_t c : entry.children) generate_into(table, c, n, out);
        return;
    }
    const auto& p = std::get<ProductRule>(entry.body);
    if (p.atom == Atom::HStep) {
        std::vector<Word> rest;
        generate_into(table, entry.children[0], n - 1, rest);
        for (const auto& w : rest) out.push_back(Word{Step::H} + w);
        return;
    }
    for (std::size_t i = 0; i + 2 <= n; ++i) {
        if (table.count(entry.children[0], i) == 0 || table.count(entry.children[1], n - 2 - i) == 0) continue;
        std::vector<Word> left;
        std::vector<Word> right;
        generate_into(table, entry.children[0], i, left);
        generate_into(table, entry.children[1], n - 2 - i, right);
        for (const auto& x : left) {
            Word arch = Word{Step::U} + x + Step::D;
            for (const auto& y : right) out.push_back(arch + y);
        }
    }
}

// Uniform integer in [0, bound) from the GMP generator.
class BigChooser {
public:
    explicit BigChooser(std::uint64_t seed) : rng_(gmp_randinit_mt) {
        rng_.seed(BigInt(std::to_string(seed)));
    }
    BigInt below(const BigInt& bound) { return rng_.get_z_range(bound); }

private:
    gmp_randclass rng_;
};

void draw(CountTable& table, std::size_t index, std::size_t n, BigChooser& rng, Word& out) {
    const auto& entry = table.spec().at(index);
    if (std::holds_alternative<EpsilonRule>(entry.body)) return;
    if (std::holds_alternative<UnionRule>(entry.body)) {
        BigInt r = rng.below(table.count(index, n));
        for (std::size_t c : entry.children) {
            const BigInt& w = table.count(c, n);
            if (r < w) {
                draw(table, c, n, rng, out);
                return;
            }
            r -= w;
        }
        throw Error("sampler weights inconsistent at " + entry.id.str());
    }
    const auto& p = std::get<ProductRule>(entry.body);
    if (p.atom == Atom::HStep) {
        out.push_back(Step::H);
        draw(table, entry.children[0], n - 1, rng, out);
        return;
    }
    BigInt r = rng.below(table.count(index, n));
    for (std::size_t i = 0; i + 2 <= n; ++i) {
        BigInt w = table.count(entry.children[0], i);
        w *= table.count(entry.children[1], n - 2 - i);
        if (r < w) {
            out.push_back(Step::U);
            draw(table, entry.children[0], i, rng, out);
            out.push_back(Step::D);
            draw(table, entry.children[1], n - 2 - i, rng, out);
            return;
        }
        r -= w;
    }
    throw Error("sampler weights inconsistent at " + entry.id.str());
}

}  // namespace

std::vector<Word> generate_all(CountTable& table, std::size_t index, std::size_t n, std::size_t cap) {
    const BigInt& total = table.count(index, n);
    if (total > cap) {
        throw ResourceLimit("class has " + total.get_str() + " paths at length " + std::to_string(n) +
                            ", above the generation cap " + std::to_string(cap));
    }
    std::vector<Word> out;
    out.reserve(total.get_ui());
    generate_into(table, index, n, out);
    return out;
}

std::vector<Word> sample_many(CountTable& table, std::size_t index, std::size_t n, std::size_t k,
                              std::uint64_t seed) {
    if (table.count(index, n) == 0) {
        throw EmptyAtLength("class " + table.spec().at(index).id.str() + " has no path of length " +
                            std::to_string(n));
    }
    BigChooser rng(seed);
    std::vector<Word> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Word w;
        draw(table, index, n, rng, w);
        out.push_back(std::move(w));
    }
    return out;
}

Word sample(CountTable& table, std::size_t index, std::size_t n, std::uint64_t seed) {
    return std::move(sample_many(table, index, n, 1, seed).front());
}

}  // namespace motzkin
