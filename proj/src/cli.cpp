#include "motzkin/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "motzkin/counting.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/gf.hpp"
#include "motzkin/oracle.hpp"

namespace motzkin::cli {
namespace {

struct Patterns {
    std::vector<std::string> avoid;
    std::vector<std::string> contain;
};

Word parse_word(const std::string& text) {
    if (text == "ε" || text == "eps") return {};
    return Word::parse(text);
}

std::vector<Word> avoid_words(const Patterns& p) {
    std::vector<Word> out;
    for (const auto& s : p.avoid) out.push_back(parse_word(s));
    return out;
}

// Members of one --contain flag are comma separated alternatives.
std::vector<std::vector<Word>> contain_clauses(const Patterns& p) {
    std::vector<std::vector<Word>> out;
    for (const auto& flag : p.contain) {
        std::vector<Word> clause;
        std::stringstream ss(flag);
        std::string item;
        while (std::getline(ss, item, ',')) clause.push_back(parse_word(item));
        if (flag.empty() || flag.back() == ',') clause.push_back(Word{});
        out.push_back(std::move(clause));
    }
    return out;
}

ClassDescriptor descriptor_of(const Patterns& p) {
    return ClassDescriptor::plain(Mode::Full, avoid_words(p), contain_clauses(p));
}

void add_pattern_flags(CLI::App* cmd, Patterns& p) {
    cmd->add_option("--avoid", p.avoid, "Pattern to avoid (repeatable)");
    cmd->add_option("--contain", p.contain,
                    "Comma-separated patterns of which at least one must occur (repeatable)");
}

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        if constexpr (std::is_same_v<T, std::string>) out += v[i];
        else out += v[i].get_str();
    }
    return out;
}

std::string set_name(const Patterns& p) {
    std::string out = "Av(";
    for (std::size_t i = 0; i < p.avoid.size(); ++i) out += (i ? "," : "") + p.avoid[i];
    out += ")";
    for (const auto& c : p.contain) out += "&Co(" + c + ")";
    return out;
}

std::vector<BigInt> integer_series(const std::vector<Rational>& s) {
    std::vector<BigInt> out;
    for (const auto& r : s) {
        if (r.get_den() != 1) throw Error("non-integer series coefficient " + r.get_str());
        out.push_back(r.get_num());
    }
    return out;
}

std::string rule_text(const Specification& spec, std::size_t i) {
    const auto& e = spec.at(i);
    std::string rhs;
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, EpsilonRule>) {
                rhs = "{eps}";
            } else if constexpr (std::is_same_v<T, EmptyRule>) {
                rhs = "{}";
            } else if constexpr (std::is_same_v<T, UnionRule>) {
                for (std::size_t k = 0; k < body.children.size(); ++k) {
                    rhs += (k ? " + " : "") + body.children[k].str();
                }
            } else {
                rhs = body.atom == Atom::HStep ? "{H}" : "{UD}";
                for (const auto& c : body.children) rhs += " x " + c.str();
            }
        },
        e.body);
    return e.id.str() + " = " + rhs;
}

nlohmann::json descriptor_json(const ClassDescriptor& d) {
    auto pat = [&](const CrossingPattern& cp) {
        return d.mode == Mode::UCross ? cp.str() : cp.right.str();
    };
    nlohmann::json j;
    j["mode"] = to_string(d.mode);
    j["avoid"] = nlohmann::json::array();
    for (const auto& a : d.avoid) j["avoid"].push_back(pat(a));
    j["contain"] = nlohmann::json::array();
    for (const auto& c : d.contain) {
        nlohmann::json clause = nlohmann::json::array();
        for (const auto& q : c) clause.push_back(pat(q));
        j["contain"].push_back(std::move(clause));
    }
    return j;
}

nlohmann::json rule_json(const RuleBody& body) {
    nlohmann::json j;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, EpsilonRule>) {
                j["type"] = "epsilon";
            } else if constexpr (std::is_same_v<T, EmptyRule>) {
                j["type"] = "empty";
            } else {
                j["type"] = std::is_same_v<T, UnionRule> ? "union" : "product";
                if constexpr (std::is_same_v<T, ProductRule>) j["atom"] = b.atom == Atom::HStep ? "H" : "UD";
                j["children"] = nlohmann::json::array();
                for (const auto& c : b.children) j["children"].push_back(c.str());
            }
        },
        body);
    return j;
}

void print_spec(const Specification& spec, const std::string& format, std::ostream& out) {
    if (format == "json") {
        nlohmann::json j;
        j["schema"] = "motzkin-spec/1";
        j["root"] = spec.at(spec.root()).id.str();
        j["classes"] = nlohmann::json::array();
        for (const auto& e : spec.entries()) {
            nlohmann::json c;
            c["id"] = e.id.str();
            c["descriptor"] = e.descriptor ? descriptor_json(*e.descriptor) : nlohmann::json(nullptr);
            c["rule"] = rule_json(e.body);
            j["classes"].push_back(std::move(c));
        }
        j["equations"] = nlohmann::json::parse(extract_equations(spec).to_json());
        out << j.dump(2) << "\n";
        return;
    }
    if (format == "dot") {
        out << "digraph specification {\n";
        for (std::size_t i = 0; i < spec.size(); ++i) {
            const auto& e = spec.at(i);
            std::string shape = std::holds_alternative<ProductRule>(e.body) ? "box" : "ellipse";
            out << "  n" << i << " [label=\"" << e.id.str() << "\", shape=" << shape << "];\n";
        }
        for (std::size_t i = 0; i < spec.size(); ++i) {
            const auto& e = spec.at(i);
            for (std::size_t k = 0; k < e.children.size(); ++k) {
                out << "  n" << i << " -> n" << e.children[k];
                if (e.children.size() > 1) out << " [label=\"" << k << "\"]";
                out << ";\n";
            }
        }
        out << "}\n";
        return;
    }
    out << "root: " << spec.at(spec.root()).id.str() << "\n";
    out << "classes: " << spec.size() << "\n";
    for (std::size_t i = 0; i < spec.size(); ++i) out << rule_text(spec, i) << "\n";
}

void print_path(const Word& w, const std::string& format, std::ostream& out) {
    if (w.empty() && format == "eps") out << "ε\n";
    else out << w.str() << "\n";
}

struct VerifyOutcome {
    bool pass = true;
    std::string report;
};

VerifyOutcome verify_set(const Patterns& p, std::size_t max_len, std::size_t cap) {
    auto avoid = avoid_words(p);
    auto clauses = contain_clauses(p);
    Specification spec = build_specification({descriptor_of(p)});
    CountTable table(spec);
    auto counts = table.sequence(spec.root(), max_len);
    std::vector<BigInt> oracle;
    for (std::size_t n = 0; n <= max_len; ++n) oracle.push_back(oracle_count(n, avoid, clauses, cap));
    bool pass = counts == oracle;
    std::string detail = " spec=" + join(counts) + " oracle=" + join(oracle);
    if (avoid.size() == 1 && clauses.empty()) {
        auto gf = integer_series(series(delta(avoid.front()), max_len));
        pass = pass && gf == oracle;
        detail += " delta=" + join(gf);
    }
    return {pass, std::string(pass ? "PASS " : "FAIL ") + set_name(p) + detail};
}

std::vector<Word> all_words_up_to(std::size_t k) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= k; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (Step s : {Step::U, Step::H, Step::D}) next.push_back(w + s);
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pattern-avoiding Motzkin paths: specifications, counting, sampling, generating functions",
                 "motzkin"};
    app.require_subcommand(1);

    Patterns pats;
    std::size_t max_length = 10;
    std::size_t length = 0;
    std::size_t how_many = 1;
    std::uint64_t seed = 0;
    bool with_oracle = false;
    std::string format;
    std::string form = "C";
    std::string pattern;
    bool have_pattern = false;
    std::size_t all_up_to = 0;
    std::size_t cap = kDefaultOracleCap;

    auto* count_cmd = app.add_subcommand("count", "Count paths of lengths 0..N");
    add_pattern_flags(count_cmd, pats);
    count_cmd->add_option("-N,--max-length", max_length, "Largest length")->capture_default_str();
    count_cmd->add_flag("--oracle", with_oracle, "Cross-check every length by brute force");
    count_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    count_cmd->add_option("--oracle-cap", cap, "Largest brute-force length")->capture_default_str();

    auto* genfun_cmd = app.add_subcommand("genfun", "Closed-form generating function");
    auto* pattern_opt = genfun_cmd->add_option("--pattern", pattern, "Single pattern to avoid");
    add_pattern_flags(genfun_cmd, pats);
    genfun_cmd->add_option("--form", form, "C, sqrt, minpoly or series:N")->capture_default_str();

    auto* spec_cmd = app.add_subcommand("spec", "Print the combinatorial specification");
    add_pattern_flags(spec_cmd, pats);
    spec_cmd->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

    auto* sample_cmd = app.add_subcommand("sample", "Uniformly random paths of length n");
    add_pattern_flags(sample_cmd, pats);
    sample_cmd->add_option("-n,--length", length, "Path length")->required();
    sample_cmd->add_option("--count", how_many, "Number of draws")->capture_default_str();
    sample_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
    sample_cmd->add_option("--format", format, "plain or eps")->check(CLI::IsMember({"plain", "eps"}));

    auto* enum_cmd = app.add_subcommand("enumerate", "All paths of length n, sorted");
    add_pattern_flags(enum_cmd, pats);
    enum_cmd->add_option("-n,--length", length, "Path length")->required();
    enum_cmd->add_option("--format", format, "plain or eps")->check(CLI::IsMember({"plain", "eps"}));

    auto* verify_cmd = app.add_subcommand("verify", "Specification vs brute force vs generating function");
    add_pattern_flags(verify_cmd, pats);
    verify_cmd->add_option("--all-up-to", all_up_to, "Check every nonempty single pattern up to this length");
    verify_cmd->add_option("--max-len", max_length, "Largest length checked")->capture_default_str();
    verify_cmd->add_option("--oracle-cap", cap, "Largest brute-force length")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    have_pattern = pattern_opt->count() > 0;

    try {
        if (count_cmd->parsed()) {
            Specification spec = build_specification({descriptor_of(pats)});
            CountTable table(spec);
            auto counts = table.sequence(spec.root(), max_length);
            if (format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& c : counts) j.push_back(nlohmann::json::parse(c.get_str()));
                out << j.dump() << "\n";
            } else {
                out << join(counts) << "\n";
            }
            if (!with_oracle) return kOk;
            bool ok = true;
            auto avoid = avoid_words(pats);
            auto clauses = contain_clauses(pats);
            for (std::size_t n = 0; n <= max_length; ++n) {
                BigInt o = oracle_count(n, avoid, clauses, cap);
                bool match = o == counts[n];
                ok = ok && match;
                out << "n=" << n << " spec=" << counts[n].get_str() << " oracle=" << o.get_str() << " "
                    << (match ? "MATCH" : "MISMATCH") << "\n";
            }
            return ok ? kOk : kMismatch;
        }

        if (genfun_cmd->parsed()) {
            KElem value;
            if (have_pattern) {
                if (!pats.avoid.empty() || !pats.contain.empty()) {
                    err << "genfun: use either --pattern or --avoid/--contain\n";
                    return kUsage;
                }
                value = delta(parse_word(pattern));
            } else {
                Specification spec = build_specification({descriptor_of(pats)});
                auto solved = solve_closed_form(spec);
                if (auto* nc = std::get_if<NonClosedForm>(&solved)) {
                    if (form.rfind("series:", 0) == 0) {
                        CountTable table(spec);
                        out << join(table.sequence(spec.root(), std::stoul(form.substr(7)))) << "\n";
                        return kOk;
                    }
                    err << "no closed form in K: " << nc->reason << "\n";
                    return kNotClosedForm;
                }
                value = std::get<ClosedForm>(solved).values.at(spec.at(spec.root()).id);
            }
            if (form == "C") {
                out << value.str() << "\n";
            } else if (form == "sqrt") {
                out << to_sqrt_form(value) << "\n";
            } else if (form == "minpoly") {
                out << minimal_polynomial(value).str() << "\n";
            } else if (form.rfind("series:", 0) == 0) {
                std::size_t n = 0;
                try {
                    n = std::stoul(form.substr(7));
                } catch (const std::exception&) {
                    err << "genfun: bad --form " << form << "\n";
                    return kUsage;
                }
                out << join(integer_series(series(value, n))) << "\n";
            } else {
                err << "genfun: unknown --form " << form << "\n";
                return kUsage;
            }
            return kOk;
        }

        if (spec_cmd->parsed()) {
            Specification spec = build_specification({descriptor_of(pats)});
            print_spec(spec, format.empty() ? "text" : format, out);
            return kOk;
        }

        if (sample_cmd->parsed()) {
            Specification spec = build_specification({descriptor_of(pats)});
            CountTable table(spec);
            try {
                for (const auto& w : sample_many(table, spec.root(), length, how_many, seed)) {
                    print_path(w, format, out);
                }
            } catch (const EmptyAtLength& e) {
                err << e.what() << "\n";
                return kEmptyClass;
            }
            return kOk;
        }

        if (enum_cmd->parsed()) {
            Specification spec = build_specification({descriptor_of(pats)});
            CountTable table(spec);
            auto paths = generate_all(table, spec.root(), length);
            std::sort(paths.begin(), paths.end(),
                      [](const Word& a, const Word& b) { return a.str() < b.str(); });
            for (const auto& w : paths) print_path(w, format, out);
            return kOk;
        }

        if (verify_cmd->parsed()) {
            std::vector<Patterns> sets;
            if (all_up_to > 0) {
                for (const auto& w : all_words_up_to(all_up_to)) sets.push_back({{w.str()}, {}});
            }
            if (!pats.avoid.empty() || !pats.contain.empty() || sets.empty()) sets.push_back(pats);
            bool ok = true;
            std::size_t passed = 0;
            for (const auto& s : sets) {
                auto outcome = verify_set(s, max_length, cap);
                ok = ok && outcome.pass;
                passed += outcome.pass;
                out << outcome.report << "\n";
            }
            out << passed << "/" << sets.size() << " pattern sets passed\n";
            return ok ? kOk : kMismatch;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace motzkin::cli
