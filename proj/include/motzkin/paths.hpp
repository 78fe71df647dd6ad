#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motzkin {

// Step order U < H < D is global: enumeration and canonical sorting use it.
enum class Step : std::uint8_t { U = 0, H = 1, D = 2 };

constexpr int height_delta(Step s) {
    switch (s) {
        case Step::U: return 1;
        case Step::H: return 0;
        case Step::D: return -1;
    }
    return 0;
}

char to_char(Step s);

/// A finite word over {U, H, D}. Used both for patterns and for candidate paths.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Step> steps) : steps_(steps) {}
    explicit Word(std::vector<Step> steps) : steps_(std::move(steps)) {}

    /// Parses a string matching /[UHD]*/. Throws ParseError on any other character.
    static Word parse(std::string_view text);

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    Step operator[](std::size_t i) const { return steps_[i]; }
    Step front() const { return steps_.front(); }
    Step back() const { return steps_.back(); }

    auto begin() const { return steps_.begin(); }
    auto end() const { return steps_.end(); }

    void push_back(Step s) { steps_.push_back(s); }
    void pop_back() { steps_.pop_back(); }

    Word slice(std::size_t from, std::size_t to) const;
    Word operator+(const Word& other) const;
    Word operator+(Step s) const;

    std::string str() const;

    bool operator==(const Word&) const = default;
    // Shortlex: shorter words first, then lexicographic in step order.
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::vector<Step> steps_;
};

struct HeightProfile {
    int final_height = 0;
    int min_prefix_height = 0;
    bool operator==(const HeightProfile&) const = default;
};

HeightProfile height_profile(const Word& w);
bool is_motzkin_path(const Word& w);
bool is_motzkin_prefix(const Word& w);

/// A word satisfying the Motzkin path invariants (nonnegative prefixes, final height 0).
class MotzkinPath {
public:
    MotzkinPath() = default;
    /// Throws ParseError if `w` is not a Motzkin path.
    explicit MotzkinPath(Word w);

    const Word& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    std::string str() const { return word_.str(); }

    bool operator==(const MotzkinPath&) const = default;
    auto operator<=>(const MotzkinPath&) const = default;

private:
    Word word_;
};

/// A word whose every prefix has nonnegative height.
class MotzkinPrefix {
public:
    explicit MotzkinPrefix(Word w);

    const Word& word() const { return word_; }
    int final_height() const { return final_height_; }

private:
    Word word_;
    int final_height_ = 0;
};

// Subword (not necessarily contiguous) containment, by greedy leftmost matching.
bool contains(const Word& w, const Word& q);

/// Splits a U-start path as U x D y at its first return to the axis.
/// Throws NotUStart if `p` is empty or starts with H or D.
std::pair<Word, Word> first_return_split(const Word& p);

/// Pattern `left-right`: for a U-start path UxDy, `left` must occur in UxD and `right` in y.
struct CrossingPattern {
    Word left;
    Word right;

    /// Parses "l-r" with either side possibly empty, e.g. "-H", "H-", "UH-HD", "-".
    static CrossingPattern parse(std::string_view text);
    /// A plain word is stored as (epsilon, word).
    static CrossingPattern plain(Word w) { return {Word{}, std::move(w)}; }

    bool is_local() const { return left.empty() || right.empty(); }
    std::string str() const;

    bool operator==(const CrossingPattern&) const = default;
    auto operator<=>(const CrossingPattern&) const = default;
};

bool contains_crossing(const Word& p, const CrossingPattern& cp);

std::vector<CrossingPattern> split_pattern(const Word& q);

// Removes one leading U and then one trailing D, when present.
Word strip(const Word& left);

}  // namespace motzkin
