#include "motzkin/paths.hpp"

#include <algorithm>

#include "motzkin/errors.hpp"

namespace motzkin {

char to_char(Step s) {
    switch (s) {
        case Step::U: return 'U';
        case Step::H: return 'H';
        case Step::D: return 'D';
    }
    return '?';
}

Word Word::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'U': steps.push_back(Step::U); break;
            case 'H': steps.push_back(Step::H); break;
            case 'D': steps.push_back(Step::D); break;
            default:
                throw ParseError("invalid step '" + std::string(1, c) + "' in word \"" +
                                 std::string(text) + "\"");
        }
    }
    return Word(std::move(steps));
}

Word Word::slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(from),
                                  steps_.begin() + static_cast<std::ptrdiff_t>(to)));
}

Word Word::operator+(const Word& other) const {
    std::vector<Step> out = steps_;
    out.insert(out.end(), other.steps_.begin(), other.steps_.end());
    return Word(std::move(out));
}

Word Word::operator+(Step s) const {
    std::vector<Step> out = steps_;
    out.push_back(s);
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(to_char(s));
    return out;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = steps_.size() <=> other.steps_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(steps_.begin(), steps_.end(),
                                                  other.steps_.begin(), other.steps_.end());
}

HeightProfile height_profile(const Word& w) {
    HeightProfile hp;
    for (Step s : w) {
        hp.final_height += height_delta(s);
        hp.min_prefix_height = std::min(hp.min_prefix_height, hp.final_height);
    }
    return hp;
}

bool is_motzkin_path(const Word& w) {
    auto hp = height_profile(w);
    return hp.min_prefix_height >= 0 && hp.final_height == 0;
}

bool is_motzkin_prefix(const Word& w) { return height_profile(w).min_prefix_height >= 0; }

MotzkinPath::MotzkinPath(Word w) : word_(std::move(w)) {
    if (!is_motzkin_path(word_)) throw ParseError("not a Motzkin path: \"" + word_.str() + "\"");
}

MotzkinPrefix::MotzkinPrefix(Word w) : word_(std::move(w)) {
    auto hp = height_profile(word_);
    if (hp.min_prefix_height < 0) throw ParseError("not a Motzkin prefix: \"" + word_.str() + "\"");
    final_height_ = hp.final_height;
}

bool contains(const Word& w, const Word& q) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < w.size() && j < q.size(); ++i) {
        if (w[i] == q[j]) ++j;
    }
    return j == q.size();
}

std::pair<Word, Word> first_return_split(const Word& p) {
    if (p.empty() || p.front() != Step::U) {
        throw NotUStart("first-return split needs a path starting with U, got \"" + p.str() + "\"");
    }
    if (!is_motzkin_path(p)) throw ParseError("not a Motzkin path: \"" + p.str() + "\"");
    int h = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        h += height_delta(p[i]);
        if (h == 0) return {p.slice(1, i), p.slice(i + 1, p.size())};
    }
    // unreachable for a valid path
    throw ParseError("path never returns to the axis: \"" + p.str() + "\"");
}

CrossingPattern CrossingPattern::parse(std::string_view text) {
    auto dash = text.find('-');
    if (dash == std::string_view::npos || text.find('-', dash + 1) != std::string_view::npos) {
        throw ParseError("crossing pattern needs exactly one '-': \"" + std::string(text) + "\"");
    }
    return {Word::parse(text.substr(0, dash)), Word::parse(text.substr(dash + 1))};
}

std::string CrossingPattern::str() const { return left.str() + "-" + right.str(); }

bool contains_crossing(const Word& p, const CrossingPattern& cp) {
    auto [x, y] = first_return_split(p);
    Word arch = Word{Step::U} + x + Step::D;
    return contains(arch, cp.left) && contains(y, cp.right);
}

std::vector<CrossingPattern> split_pattern(const Word& q) {
    std::vector<CrossingPattern> out;
    out.reserve(q.size() + 1);
    for (std::size_t k = 0; k <= q.size(); ++k) {
        out.push_back({q.slice(0, k), q.slice(k, q.size())});
    }
    return out;
}

Word strip(const Word& left) {
    std::size_t from = 0;
    std::size_t to = left.size();
    if (from < to && left[from] == Step::U) ++from;
    if (from < to && left[to - 1] == Step::D) --to;
    return left.slice(from, to);
}

}  // namespace motzkin
