#include <doctest.h>

#include <map>

#include "support.hpp"

using namespace testing;

namespace {

ClassDescriptor full(std::vector<std::string> avoid, std::vector<std::vector<std::string>> contain = {}) {
    std::vector<Word> a;
    for (const auto& s : avoid) a.push_back(W(s));
    std::vector<std::vector<Word>> c;
    for (const auto& clause : contain) {
        c.emplace_back();
        for (const auto& s : clause) c.back().push_back(W(s));
    }
    return ClassDescriptor::plain(Mode::Full, a, c);
}

ClassDescriptor random_descriptor(Gen& g) {
    ClassDescriptor d;
    d.mode = static_cast<Mode>(g.integer(0, 3));
    auto pattern = [&] {
        if (d.mode == Mode::UCross) return CrossingPattern{g.word(2), g.word(2)};
        return CrossingPattern::plain(g.word(3));
    };
    for (long i = g.integer(0, 3); i > 0; --i) d.avoid.push_back(pattern());
    for (long i = g.integer(0, 2); i > 0; --i) {
        Clause c;
        for (long k = g.integer(1, 3); k > 0; --k) c.push_back(pattern());
        d.contain.push_back(std::move(c));
    }
    return d;
}

std::vector<CrossingPattern> crossing_patterns_up_to(std::size_t total) {
    std::vector<CrossingPattern> out;
    for (const auto& l : words_between(0, total)) {
        for (const auto& r : words_between(0, total - l.size())) out.push_back({l, r});
    }
    return out;
}

}  // namespace

TEST_CASE("crossing_implies") {
    CHECK(crossing_implies(X("-HHD"), X("-UHHD")));
    for (const auto& cp : {X("-"), X("UH-HD"), X("-D"), X("H-")}) CHECK(crossing_implies(X("-"), cp));
    CHECK_FALSE(crossing_implies(X("H-"), X("-H")));
    CHECK_FALSE(crossing_implies(X("-UHHD"), X("-HHD")));
}

TEST_CASE("trivially_contained") {
    CHECK(trivially_contained(X("U-"), Mode::UCross));
    CHECK(trivially_contained(X("UD-"), Mode::UCross));
    CHECK(trivially_contained(X("-"), Mode::UCross));
    CHECK_FALSE(trivially_contained(X("UH-"), Mode::UCross));
    CHECK_FALSE(trivially_contained(X("-U"), Mode::UCross));
    CHECK(trivially_contained(X("-"), Mode::Full));
    CHECK_FALSE(trivially_contained(X("-U"), Mode::UStart));
}

TEST_CASE("normalize examples") {
    CHECK_FALSE(normalize(full({"HH"}, {{"HH"}})));
    auto m = normalize(full({}));
    REQUIRE(m);
    CHECK(m->avoid.empty());
    CHECK(m->contain.empty());
    CHECK_FALSE(normalize(full({""})));

    // Left factor of the UHHD- / UHH- branch.
    CHECK_FALSE(normalize(full({"HH"}, {{"HH"}})));

    auto d = normalize(full({"UHHD", "HHD"}));
    REQUIRE(d);
    CHECK(class_id(*d).str() == "Av(HHD)");

    auto e = normalize(full({"HH"}, {{"H", "HHH"}, {"", "D"}}));
    REQUIRE(e);
    CHECK(class_id(*e).str() == "Av(HH)&Co(H)");

    // A clause implied by another is dropped.
    auto f = normalize(full({}, {{"H"}, {"HH"}}));
    REQUIRE(f);
    CHECK(class_id(*f).str() == "Av()&Co(HH)");

    ClassDescriptor u;
    u.mode = Mode::UCross;
    u.avoid = {X("-HHD"), X("UH-")};
    u.contain = {{X("U-")}};
    auto un = normalize(u);
    REQUIRE(un);
    CHECK(class_id(*un).str() == "AvX(-HHD,UH-)");

    u.avoid = {X("UD-")};
    CHECK_FALSE(normalize(u));
}

TEST_CASE("epsilon membership") {
    CHECK(epsilon_member(*normalize(full({"UHHD"}))));
    CHECK_FALSE(epsilon_member(*normalize(full({"HH"}, {{"H"}}))));
    CHECK(epsilon_member(*normalize(full({}))));
}

TEST_CASE("class ids") {
    CHECK(class_id(*normalize(full({"HH", "UD"}))).str() == "Av(UD,HH)");
    CHECK(class_id(*normalize(ClassDescriptor::plain(Mode::HStart, {W("H")}))).str() == "AvH(H)");
    CHECK(class_id(*normalize(ClassDescriptor::plain(Mode::UStart, {W("H")}))).str() == "AvU(H)");
    CHECK(epsilon_class_id() != empty_class_id());
}

TEST_CASE("property: normalization is idempotent and preserves the path set") {
    Gen g(2024);
    for (int trial = 0; trial < 400; ++trial) {
        ClassDescriptor d = random_descriptor(g);
        auto n = normalize(d);
        if (n) {
            auto again = normalize(*n);
            REQUIRE(again);
            CHECK(*again == *n);
        }
        for (std::size_t len = 0; len <= 8; ++len) {
            auto raw = brute_set(d, len);
            if (!n) {
                REQUIRE(raw.empty());
            } else {
                REQUIRE(raw == brute_set(*n, len));
                for (const auto& w : raw) REQUIRE(admits(*n, W(w)));
            }
        }
    }
}

TEST_CASE("property: admits matches the brute-force membership") {
    Gen g(99);
    for (int trial = 0; trial < 200; ++trial) {
        ClassDescriptor d = random_descriptor(g);
        for (std::size_t len = 0; len <= 7; ++len) {
            for (const auto& w : brute_paths(len)) REQUIRE(admits(d, w) == member(d, w));
        }
    }
}

TEST_CASE("property: crossing_implies is a partial order") {
    auto all = crossing_patterns_up_to(4);
    for (const auto& a : all) CHECK(crossing_implies(a, a));
    std::map<std::size_t, std::vector<std::size_t>> succ;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i != j && crossing_implies(all[i], all[j])) {
                REQUIRE_FALSE(crossing_implies(all[j], all[i]));
                succ[i].push_back(j);
            }
        }
    }
    for (const auto& [a, bs] : succ) {
        for (std::size_t b : bs) {
            for (std::size_t c : succ[b]) REQUIRE(crossing_implies(all[a], all[c]));
        }
    }
}

TEST_CASE("property: equal ids iff equal normalized descriptors") {
    Gen g(5);
    std::vector<ClassDescriptor> seen;
    for (int trial = 0; trial < 300; ++trial) {
        if (auto n = normalize(random_descriptor(g))) seen.push_back(*n);
    }
    for (const auto& a : seen) {
        for (const auto& b : seen) REQUIRE((class_id(a) == class_id(b)) == (a == b));
    }
}
