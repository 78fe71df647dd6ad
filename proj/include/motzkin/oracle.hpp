#pragma once

// Brute-force ground truth. Everything here enumerates words explicitly and is
// kept independent of the specification and generating-function machinery.

#include <cstddef>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/paths.hpp"

namespace motzkin {

inline constexpr std::size_t kDefaultOracleCap = 18;

/// All Motzkin paths of length n in lexicographic step order (U < H < D).
/// Throws ResourceLimit when n exceeds `cap`.
std::vector<MotzkinPath> enumerate_motzkin(std::size_t n, std::size_t cap = kDefaultOracleCap);

/// All Motzkin prefixes of length n, any final height, lexicographic order.
std::vector<MotzkinPrefix> enumerate_motzkin_prefixes(std::size_t n,
                                                      std::size_t cap = kDefaultOracleCap);

/// Paths of length n avoiding every word in `avoid` and containing at least one
/// member of each clause in `contain`.
BigInt oracle_count(std::size_t n, const std::vector<Word>& avoid,
                    const std::vector<std::vector<Word>>& contain = {},
                    std::size_t cap = kDefaultOracleCap);

/// Prefixes of length n and final height h that contain q while the prefix minus
/// its last step avoids q. For q = epsilon only the empty prefix qualifies.
BigInt oracle_minco(const Word& q, std::size_t n, int h, std::size_t cap = kDefaultOracleCap);

}  // namespace motzkin
