#include "motzkin/class_model.hpp"

#include <algorithm>

namespace motzkin {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Full: return "full";
        case Mode::HStart: return "hstart";
        case Mode::UStart: return "ustart";
        case Mode::UCross: return "ucross";
    }
    return "?";
}

ClassDescriptor ClassDescriptor::plain(Mode mode, const std::vector<Word>& avoid,
                                       const std::vector<std::vector<Word>>& contain) {
    ClassDescriptor d;
    d.mode = mode;
    for (const auto& w : avoid) d.avoid.push_back(CrossingPattern::plain(w));
    for (const auto& clause : contain) {
        Clause c;
        for (const auto& w : clause) c.push_back(CrossingPattern::plain(w));
        d.contain.push_back(std::move(c));
    }
    return d;
}

bool ClassDescriptor::is_local() const {
    if (mode != Mode::UCross) return true;
    auto local = [](const CrossingPattern& cp) { return cp.is_local(); };
    if (!std::all_of(avoid.begin(), avoid.end(), local)) return false;
    return std::all_of(contain.begin(), contain.end(), [&](const Clause& c) {
        return c.size() == 1 && local(c.front());
    });
}

ClassId epsilon_class_id() { return {"{eps}"}; }
ClassId empty_class_id() { return {"{empty}"}; }

bool crossing_implies(const CrossingPattern& a, const CrossingPattern& b) {
    return contains(b.left, a.left) && contains(b.right, a.right);
}

bool trivially_contained(const CrossingPattern& cp, Mode mode) {
    if (mode == Mode::UCross) return strip(cp.left).empty() && cp.right.empty();
    return cp.left.empty() && cp.right.empty();
}

namespace {

void sort_unique(std::vector<CrossingPattern>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Drops every b with crossing_implies(a, b) for another member a. In an avoid
// set b is then avoided automatically; in a clause "a or b" reduces to a.
std::vector<CrossingPattern> drop_implied(const std::vector<CrossingPattern>& v) {
    std::vector<CrossingPattern> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < v.size() && !redundant; ++j) {
            if (i != j && crossing_implies(v[j], v[i])) redundant = true;
        }
        if (!redundant) out.push_back(v[i]);
    }
    return out;
}

// Containing some member of `stronger` always yields a member of `weaker`.
bool clause_implies(const Clause& stronger, const Clause& weaker) {
    return std::all_of(stronger.begin(), stronger.end(), [&](const CrossingPattern& s) {
        return std::any_of(weaker.begin(), weaker.end(),
                           [&](const CrossingPattern& w) { return crossing_implies(w, s); });
    });
}

}  // namespace

std::optional<ClassDescriptor> normalize(ClassDescriptor d) {
    for (;;) {
        const ClassDescriptor before = d;

        sort_unique(d.avoid);
        for (const auto& a : d.avoid) {
            if (trivially_contained(a, d.mode)) return std::nullopt;
        }
        // Both sides of a pair implying each other are equal after dedup, so
        // dropping every implied member keeps exactly the minimal ones.
        d.avoid = drop_implied(d.avoid);

        std::vector<Clause> clauses;
        for (auto clause : d.contain) {
            sort_unique(clause);
            std::erase_if(clause, [&](const CrossingPattern& q) {
                return std::any_of(d.avoid.begin(), d.avoid.end(),
                                   [&](const CrossingPattern& a) { return crossing_implies(a, q); });
            });
            if (clause.empty()) return std::nullopt;
            bool satisfied = std::any_of(clause.begin(), clause.end(), [&](const CrossingPattern& q) {
                return trivially_contained(q, d.mode);
            });
            if (satisfied) continue;
            clauses.push_back(drop_implied(clause));
        }
        std::sort(clauses.begin(), clauses.end());
        clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());

        std::vector<bool> dropped(clauses.size(), false);
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            for (std::size_t j = 0; j < clauses.size(); ++j) {
                if (i == j || dropped[j]) continue;
                if (clause_implies(clauses[j], clauses[i])) {
                    dropped[i] = true;
                    break;
                }
            }
        }
        d.contain.clear();
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            if (!dropped[i]) d.contain.push_back(std::move(clauses[i]));
        }

        if (d == before) return d;
    }
}

bool epsilon_member(const ClassDescriptor& d) { return d.mode == Mode::Full && d.contain.empty(); }

namespace {

std::string pattern_text(const CrossingPattern& cp, Mode mode) {
    return mode == Mode::UCross ? cp.str() : cp.right.str();
}

std::string join(const std::vector<CrossingPattern>& v, Mode mode) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += pattern_text(v[i], mode);
    }
    return out;
}

}  // namespace

ClassId class_id(const ClassDescriptor& d) {
    std::string out;
    switch (d.mode) {
        case Mode::Full: out = "Av("; break;
        case Mode::HStart: out = "AvH("; break;
        case Mode::UStart: out = "AvU("; break;
        case Mode::UCross: out = "AvX("; break;
    }
    out += join(d.avoid, d.mode);
    out += ')';
    for (const auto& clause : d.contain) {
        out += "&Co(";
        out += join(clause, d.mode);
        out += ')';
    }
    return {out};
}

bool admits(const ClassDescriptor& d, const Word& w) {
    if (!is_motzkin_path(w)) return false;
    switch (d.mode) {
        case Mode::Full: break;
        case Mode::HStart:
            if (w.empty() || w.front() != Step::H) return false;
            break;
        case Mode::UStart:
        case Mode::UCross:
            if (w.empty() || w.front() != Step::U) return false;
            break;
    }
    auto has = [&](const CrossingPattern& cp) {
        return d.mode == Mode::UCross ? contains_crossing(w, cp) : contains(w, cp.left + cp.right);
    };
    for (const auto& a : d.avoid) {
        if (has(a)) return false;
    }
    for (const auto& clause : d.contain) {
        if (std::none_of(clause.begin(), clause.end(), has)) return false;
    }
    return true;
}

}  // namespace motzkin
