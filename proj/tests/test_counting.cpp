#include <doctest.h>

#include <algorithm>

#include "motzkin/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Specification spec_of(std::vector<std::string> avoid, std::vector<std::vector<std::string>> contain = {}) {
    std::vector<Word> a;
    for (const auto& s : avoid) a.push_back(W(s));
    std::vector<std::vector<Word>> c;
    for (const auto& clause : contain) {
        c.emplace_back();
        for (const auto& s : clause) c.back().push_back(W(s));
    }
    return build_specification({ClassDescriptor::plain(Mode::Full, a, c)});
}

std::vector<std::string> strings(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.str());
    return out;
}

}  // namespace

TEST_CASE("counts of small classes") {
    Specification m = spec_of({});
    CountTable mt(m);
    CHECK(mt.sequence(m.root(), 6) == ints({1, 1, 2, 4, 9, 21, 51}));

    Specification hh = spec_of({"HH"});
    CountTable ht(hh);
    CHECK(ht.sequence(hh.root(), 3) == ints({1, 1, 1, 3}));

    Specification u = spec_of({"UHHD"});
    CountTable ut(u);
    CHECK(ut.sequence(u.root(), 5) == ints({1, 1, 2, 4, 8, 18}));

    Specification h = spec_of({"H"});
    CountTable dt(h);
    CHECK(dt.sequence(h.root(), 12) == ints({1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132}));

    Specification d = spec_of({"D"});
    CountTable dd(d);
    CHECK(dd.sequence(d.root(), 4) == ints({1, 1, 1, 1, 1}));

    Specification e = spec_of({""});
    CountTable et(e);
    CHECK(et.sequence(e.root(), 4) == ints({0, 0, 0, 0, 0}));

    CHECK(mt.count(ClassId{"Av()"}, 10) == 2188);
    CHECK_THROWS_AS(mt.count(ClassId{"Av(H)"}, 3), UnknownClass);
}

TEST_CASE("counts agree with brute force for pattern sets with clauses") {
    Specification s = spec_of({"HHH"}, {{"UD", "HH"}});
    CountTable t(s);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(t.count(s.root(), n) == oracle_count(n, {W("HHH")}, {{W("UD"), W("HH")}}));
    }
    Specification two = spec_of({"UDU", "HDH"}, {{"H"}, {"UU"}});
    CountTable tt(two);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(tt.count(two.root(), n) == oracle_count(n, {W("UDU"), W("HDH")}, {{W("H")}, {W("UU")}}));
    }
}

TEST_CASE("counts grow past machine integers") {
    Specification m = spec_of({});
    CountTable t(m);
    auto ref = motzkin_numbers(60);
    CHECK(t.count(m.root(), 60) == ref[60]);
    CHECK(ref[60] > BigInt("18446744073709551616"));
}

TEST_CASE("exhaustive generation") {
    Specification hh = spec_of({"HH"});
    CountTable t(hh);
    CHECK(strings(generate_all(t, hh.root(), 2)) == std::vector<std::string>{"UD"});
    auto three = strings(generate_all(t, hh.root(), 3));
    std::sort(three.begin(), three.end());
    CHECK(three == std::vector<std::string>{"HUD", "UDH", "UHD"});
    CHECK(strings(generate_all(t, hh.root(), 0)) == std::vector<std::string>{""});
    CHECK_THROWS_AS(generate_all(t, hh.root(), 9, 10), ResourceLimit);

    Specification co = spec_of({"HH"}, {{"H"}});
    CountTable ct(co);
    CHECK(generate_all(ct, co.root(), 0).empty());
}

TEST_CASE("sampling") {
    Specification hh = spec_of({"HH"});
    CountTable t(hh);
    for (std::uint64_t seed : {0u, 7u, 123u}) CHECK(sample(t, hh.root(), 2, seed).str() == "UD");
    CHECK(sample(t, hh.root(), 0, 1).empty());
    CHECK(sample_many(t, hh.root(), 8, 20, 5) == sample_many(t, hh.root(), 8, 20, 5));
    CHECK(sample_many(t, hh.root(), 8, 3, 5).size() == 3);

    Specification hd = spec_of({"HH", "UD"});
    CountTable ht(hd);
    CHECK_THROWS_AS(sample(ht, hd.root(), 4, 1), EmptyAtLength);
}

TEST_CASE("property: generation equals the brute-force class and samples are members") {
    for (const auto& q : words_between(1, 3)) {
        Specification s = spec_of({q.str()});
        CountTable t(s);
        for (std::size_t n = 0; n <= 9; ++n) {
            auto gen = strings(generate_all(t, s.root(), n));
            std::set<std::string> as_set(gen.begin(), gen.end());
            REQUIRE(as_set.size() == gen.size());
            REQUIRE(as_set == brute_set(*s.at(s.root()).descriptor, n));
            REQUIRE(BigInt(gen.size()) == t.count(s.root(), n));
            if (gen.empty()) continue;
            for (const auto& w : sample_many(t, s.root(), n, 5, n)) REQUIRE(as_set.count(w.str()));
        }
    }
}

TEST_CASE("property: union children counts add up") {
    for (const auto& q : words_between(1, 3)) {
        Specification s = spec_of({q.str()});
        CountTable t(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!std::holds_alternative<UnionRule>(s.at(i).body)) continue;
            for (std::size_t n = 0; n <= 10; ++n) {
                BigInt sum = 0;
                std::size_t generated = 0;
                std::set<std::string> all;
                for (std::size_t c : s.at(i).children) {
                    sum += t.count(c, n);
                    for (const auto& w : generate_all(t, c, n)) {
                        all.insert(w.str());
                        ++generated;
                    }
                }
                REQUIRE(sum == t.count(i, n));
                REQUIRE(all.size() == generated);
            }
        }
    }
}
