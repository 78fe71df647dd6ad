#include "motzkin/oracle.hpp"

#include <string>

#include "motzkin/errors.hpp"

namespace motzkin {
namespace {

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw ResourceLimit("brute-force enumeration at length " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
    }
}

// Depth-first walk in step order; `closed` requires the word to end on the axis.
template <typename Visit>
void walk(std::size_t n, bool closed, Word& cur, int height, Visit& visit) {
    if (cur.size() == n) {
        if (!closed || height == 0) visit(cur, height);
        return;
    }
    const auto remaining = static_cast<int>(n - cur.size());
    for (Step s : {Step::U, Step::H, Step::D}) {
        int next = height + height_delta(s);
        if (next < 0) continue;
        if (closed && next > remaining - 1) continue;
        cur.push_back(s);
        walk(n, closed, cur, next, visit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MotzkinPath> enumerate_motzkin(std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    std::vector<MotzkinPath> out;
    Word cur;
    auto visit = [&](const Word& w, int) { out.emplace_back(w); };
    walk(n, true, cur, 0, visit);
    return out;
}

std::vector<MotzkinPrefix> enumerate_motzkin_prefixes(std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    std::vector<MotzkinPrefix> out;
    Word cur;
    auto visit = [&](const Word& w, int) { out.emplace_back(w); };
    walk(n, false, cur, 0, visit);
    return out;
}

BigInt oracle_count(std::size_t n, const std::vector<Word>& avoid,
                    const std::vector<std::vector<Word>>& contain, std::size_t cap) {
    check_cap(n, cap);
    BigInt total = 0;
    Word cur;
    auto visit = [&](const Word& w, int) {
        for (const auto& a : avoid) {
            if (contains(w, a)) return;
        }
        for (const auto& clause : contain) {
            bool hit = false;
            for (const auto& q : clause) {
                if (contains(w, q)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return;
        }
        ++total;
    };
    walk(n, true, cur, 0, visit);
    return total;
}

BigInt oracle_minco(const Word& q, std::size_t n, int h, std::size_t cap) {
    check_cap(n, cap);
    if (q.empty()) return (n == 0 && h == 0) ? 1 : 0;
    BigInt total = 0;
    Word cur;
    auto visit = [&](const Word& w, int height) {
        if (height != h || w.empty()) return;
        if (contains(w, q) && !contains(w.slice(0, w.size() - 1), q)) ++total;
    };
    walk(n, false, cur, 0, visit);
    return total;
}

}  // namespace motzkin
