#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/strategies.hpp"

namespace motzkin {

/// Memoized counts per (class, length) for one specification. Entries are
/// written once; the table grows on demand.
class CountTable {
public:
    explicit CountTable(const Specification& spec);

    const Specification& spec() const { return *spec_; }

    const BigInt& count(std::size_t index, std::size_t n);
    /// Throws UnknownClass.
    const BigInt& count(const ClassId& id, std::size_t n) { return count(spec_->index_of(id), n); }

    /// Counts for lengths 0..max_length.
    std::vector<BigInt> sequence(std::size_t index, std::size_t max_length);

private:
    const Specification* spec_;
    std::vector<std::vector<BigInt>> memo_;
    std::vector<std::vector<bool>> known_;
};

inline constexpr std::size_t kDefaultGenerationCap = 2'000'000;

/// Every path of the class at length n, each once, in rule order (union
/// children in order, arch splits by ascending left length).
/// Throws ResourceLimit when the count exceeds `cap`.
std::vector<Word> generate_all(CountTable& table, std::size_t index, std::size_t n,
                               std::size_t cap = kDefaultGenerationCap);

/// Exactly uniform draw from the class at length n using integer-weighted
/// choices. Throws EmptyAtLength when the class has no path of length n.
Word sample(CountTable& table, std::size_t index, std::size_t n, std::uint64_t seed);

/// Draws `k` paths from one seeded generator.
std::vector<Word> sample_many(CountTable& table, std::size_t index, std::size_t n, std::size_t k,
                              std::uint64_t seed);

}  // namespace motzkin
