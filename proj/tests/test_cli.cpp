#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "motzkin/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "motzkin");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    int code = motzkin::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli count") {
    CHECK(run({"count", "--avoid", "HH", "-N", "6"}).out == "1,1,1,3,2,10,5\n");
    CHECK(run({"count", "-N", "6"}).out == "1,1,2,4,9,21,51\n");
    CHECK(run({"count", "--avoid", "UHHD", "-N", "5"}).out == "1,1,2,4,8,18\n");
    CHECK(run({"count", "--avoid", "H", "-N", "4", "--format", "json"}).out == "[1,0,1,0,2]\n");
    CHECK(run({"count", "--contain", "H,UU", "-N", "4"}).out == "0,1,1,4,9\n");
    CHECK(run({"count", "--contain", "H", "--contain", "UU", "-N", "6"}).out == "0,0,0,0,0,10,30\n");
    auto o = run({"count", "--avoid", "HD", "-N", "5", "--oracle"});
    CHECK(o.code == motzkin::cli::kOk);
    CHECK(o.out.find("n=5 spec=") != std::string::npos);
    CHECK(o.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("cli genfun") {
    CHECK(run({"genfun", "--pattern", "H", "--form", "C"}).out == "0 + 1*C\n");
    CHECK(run({"genfun", "--pattern", "H", "--form", "sqrt"}).out == "(1 - sqrt(1 - 4*x^2))/(2*x^2)\n");
    CHECK(run({"genfun", "--pattern", "HH", "--form", "minpoly"}).out ==
          "(4*x^4 - x^2)*D^2 + (4*x^3 - 4*x^2 - x + 1)*D + (5*x^2 - 1) = 0\n");
    CHECK(run({"genfun", "--pattern", "UHHD", "--form", "sqrt"}).out ==
          "(1 - 3*x - 4*x^2 + 12*x^3 - (1 - 3*x - 4*x^2 + 8*x^3)*sqrt(1 - 4*x^2))/"
          "(2*x^2*(1 - 2*x - 3*x^2 + 8*x^3 - 4*x^4))\n");
    CHECK(run({"genfun", "--pattern", "HH", "--form", "series:6"}).out == "1,1,1,3,2,10,5\n");
    CHECK(run({"genfun", "--avoid", "HH", "--form", "minpoly"}).out ==
          run({"genfun", "--pattern", "HH", "--form", "minpoly"}).out);
    auto m = run({"genfun", "--form", "C"});
    CHECK(m.code == motzkin::cli::kNotClosedForm);
    auto ms = run({"genfun", "--form", "series:6"});
    CHECK(ms.code == motzkin::cli::kOk);
    CHECK(ms.out == "1,1,2,4,9,21,51\n");
    CHECK(run({"genfun", "--pattern", "H", "--form", "bogus"}).code == motzkin::cli::kUsage);
    CHECK(run({"genfun", "--pattern", "H", "--avoid", "D"}).code == motzkin::cli::kUsage);
}

TEST_CASE("cli spec") {
    auto t = run({"spec", "--avoid", "HH", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("Av(HH)&Co(H) = AvH(HH)&Co(H) + AvU(HH)&Co(H)") != std::string::npos);
    CHECK(t.out.find("AvX(-H,HH-)&Co(H-) = {UD} x Av(HH)&Co(H) x Av(H)") != std::string::npos);
    auto m = run({"spec"});
    CHECK(m.out.find("classes: 4") != std::string::npos);
    CHECK(m.out.find("AvU() = {UD} x Av() x Av()") != std::string::npos);

    auto j = nlohmann::json::parse(run({"spec", "--avoid", "UHHD", "--format", "json"}).out);
    CHECK(j["schema"] == "motzkin-spec/1");
    CHECK(j["root"] == "Av(UHHD)");
    CHECK(j["classes"].size() == j["equations"]["vars"].size());
    for (const auto& c : j["classes"]) {
        if (!c["rule"].contains("children")) continue;
        for (const auto& child : c["rule"]["children"]) {
            bool found = false;
            for (const auto& d : j["classes"]) found = found || d["id"] == child;
            CHECK(found);
        }
    }
    auto dot = run({"spec", "--avoid", "H", "--format", "dot"});
    CHECK(dot.out.rfind("digraph specification {", 0) == 0);
    CHECK(run({"spec", "--format", "yaml"}).code == motzkin::cli::kUsage);
}

TEST_CASE("cli sample and enumerate") {
    CHECK(run({"enumerate", "--avoid", "HH", "-n", "3"}).out == "HUD\nUDH\nUHD\n");
    CHECK(run({"enumerate", "-n", "0"}).out == "\n");
    CHECK(run({"enumerate", "-n", "0", "--format", "eps"}).out == "ε\n");
    CHECK(run({"sample", "--avoid", "HH", "-n", "2", "--seed", "7"}).out == "UD\n");
    auto a = run({"sample", "-n", "10", "--count", "5", "--seed", "3"});
    CHECK(a.out == run({"sample", "-n", "10", "--count", "5", "--seed", "3"}).out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 5);
    auto e = run({"sample", "--avoid", "HH", "--avoid", "UD", "-n", "4"});
    CHECK(e.code == motzkin::cli::kEmptyClass);
    CHECK(run({"sample", "--avoid", "HH"}).code == motzkin::cli::kUsage);
}

TEST_CASE("cli verify") {
    auto all = run({"verify", "--all-up-to", "2", "--max-len", "8"});
    CHECK(all.code == 0);
    CHECK(all.out.find("12/12 pattern sets passed") != std::string::npos);
    auto set = run({"verify", "--avoid", "HH", "--avoid", "UD", "--max-len", "12"});
    CHECK(set.code == 0);
    CHECK(set.out.find("PASS Av(HH,UD)") != std::string::npos);
    CHECK(set.out.find("delta=") == std::string::npos);
    auto eps = run({"verify", "--avoid", "ε", "--max-len", "4"});
    CHECK(eps.code == 0);
    CHECK(eps.out.find("spec=0,0,0,0,0 oracle=0,0,0,0,0") != std::string::npos);
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == motzkin::cli::kUsage);
    CHECK(run({"frobnicate"}).code == motzkin::cli::kUsage);
    CHECK(run({"count", "--avoid", "UXD"}).code == motzkin::cli::kUsage);
    CHECK(run({"count", "-N", "-3"}).code == motzkin::cli::kUsage);
    CHECK(run({"count", "-N", "30", "--oracle"}).code == motzkin::cli::kUsage);
    CHECK(run({"count", "--help"}).code == motzkin::cli::kOk);
}
