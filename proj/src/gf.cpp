#include "motzkin/gf.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <json.hpp>

#include "motzkin/errors.hpp"

namespace motzkin {
namespace {

const KElem& kx() {
    static const KElem value = KElem::x();
    return value;
}

// x/(1-x), where U/H excursions back down are summed.
const KElem& up_point() {
    static const KElem value(RatX(PolyX::x(), PolyX(1) - PolyX::x()));
    return value;
}

const KElem& xc_point() {
    static const KElem value = KElem::x() * KElem::C();
    return value;
}

YRat linear_y(const KElem& c0, const KElem& c1) { return YRat(PolyY(std::vector<KElem>{c0, c1})); }

YRat append_u(const YRat& g) {
    // xy / ((1-x)(x - y(1-x))) * (x G(x/(1-x)) - y(1-x) G(y))
    const KElem one_minus_x = KElem(1) - kx();
    YRat pref = YRat(PolyY::y().scaled(kx())) /
                (YRat(one_minus_x) * linear_y(kx(), -one_minus_x));
    YRat inner = YRat(kx() * g.subst(up_point())) - YRat::y() * YRat(one_minus_x) * g;
    return pref * inner;
}

YRat append_h(const YRat& g) {
    // x / ((1 - xy - x^2 C)(y - xC)) * (y G(y) - xC G(xC)); the Dyck-prefix factor
    // 2/(1 - 2xy + sqrt(1 - 4x^2)) equals 1/(1 - xy - x^2 C).
    const KElem x2c = kx() * kx() * KElem::C();
    YRat dyck = linear_y(KElem(1) - x2c, -kx());
    YRat pref = YRat(kx()) / (dyck * linear_y(-xc_point(), KElem(1)));
    YRat inner = YRat::y() * g - YRat(xc_point() * g.subst(xc_point()));
    return pref * inner;
}

YRat append_d(const YRat& g) {
    // (x/y) (G(y)/(1 - xy - x) - G(0)/(1 - x))
    const KElem one_minus_x = KElem(1) - kx();
    YRat a = g / linear_y(one_minus_x, -kx());
    YRat b = YRat(g.subst(KElem(0)) / one_minus_x);
    return YRat(kx()) / YRat::y() * (a - b);
}

}  // namespace

std::vector<GammaState> gamma_chain(const Word& q) {
    std::vector<GammaState> out;
    out.push_back({Word{}, YRat(1)});
    for (Step s : q) {
        const YRat& g = out.back().gamma;
        YRat next;
        switch (s) {
            case Step::U: next = append_u(g); break;
            case Step::H: next = append_h(g); break;
            case Step::D: next = append_d(g); break;
        }
        out.push_back({out.back().prefix + s, std::move(next)});
    }
    return out;
}

YRat gamma(const Word& q) { return gamma_chain(q).back().gamma; }

KElem delta(const Word& q) {
    auto chain = gamma_chain(q);
    const KElem inv_one_minus_x = (KElem(1) - kx()).inverse();
    KElem total;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const YRat& g = chain[i].gamma;
        switch (q[i]) {
            case Step::D: total += g.subst(KElem(0)) * inv_one_minus_x; break;
            case Step::H: total += KElem::C() * g.subst(xc_point()); break;
            case Step::U: total += g.subst(up_point()) * inv_one_minus_x; break;
        }
    }
    return total;
}

EquationSystem extract_equations(const Specification& spec) {
    EquationSystem sys;
    for (const auto& entry : spec.entries()) {
        sys.vars.push_back(entry.id);
        Equation eq{entry.id, {}};
        std::visit(
            [&](const auto& body) {
                using T = std::decay_t<decltype(body)>;
                if constexpr (std::is_same_v<T, EpsilonRule>) {
                    eq.terms.push_back({0, {}});
                } else if constexpr (std::is_same_v<T, UnionRule>) {
                    for (const auto& c : body.children) eq.terms.push_back({0, {c}});
                } else if constexpr (std::is_same_v<T, ProductRule>) {
                    eq.terms.push_back({body.atom == Atom::HStep ? 1u : 2u, body.children});
                }
            },
            entry.body);
        sys.eqs.push_back(std::move(eq));
    }
    return sys;
}

std::string EquationSystem::to_json() const {
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    for (const auto& v : vars) j["vars"].push_back(v.str());
    j["eqs"] = nlohmann::json::array();
    for (const auto& eq : eqs) {
        nlohmann::json e;
        e["lhs"] = eq.lhs.str();
        e["terms"] = nlohmann::json::array();
        for (const auto& t : eq.terms) {
            nlohmann::json f = nlohmann::json::array();
            for (const auto& id : t.factors) f.push_back(id.str());
            e["terms"].push_back({{"coef_x_power", t.x_power}, {"factors", f}});
        }
        j["eqs"].push_back(std::move(e));
    }
    return j.dump(2);
}

std::string EquationSystem::str() const {
    std::string out;
    for (const auto& eq : eqs) {
        out += eq.lhs.str() + " = ";
        if (eq.terms.empty()) out += "0";
        for (std::size_t i = 0; i < eq.terms.size(); ++i) {
            const auto& t = eq.terms[i];
            if (i) out += " + ";
            std::string term;
            if (t.x_power == 1) term = "x";
            else if (t.x_power > 1) term = "x^" + std::to_string(t.x_power);
            for (const auto& f : t.factors) term += (term.empty() ? "" : "*") + f.str();
            out += term.empty() ? "1" : term;
        }
        out += "\n";
    }
    return out;
}

KElem evaluate_rhs(const Equation& eq, const std::map<ClassId, KElem>& values) {
    KElem total;
    for (const auto& t : eq.terms) {
        KElem term = kx().pow(t.x_power);
        for (const auto& f : t.factors) term *= values.at(f);
        total += term;
    }
    return total;
}

namespace {

// Tarjan; components come out with every dependency before its dependents.
std::vector<std::vector<std::size_t>> components(const Specification& spec, const std::vector<bool>& seeded) {
    const std::size_t n = spec.size();
    std::vector<long> index(n, -1);
    std::vector<long> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> out;
    long counter = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : spec.at(v).children) {
            if (seeded[w]) continue;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (!seeded[v] && index[v] < 0) visit(v);
    }
    return out;
}

}  // namespace

std::variant<ClosedForm, NonClosedForm> solve_closed_form(const Specification& spec) {
    EquationSystem sys = extract_equations(spec);
    const std::size_t n = spec.size();
    std::vector<std::optional<KElem>> value(n);
    std::vector<bool> seeded(n, false);

    const ClassId dyck = class_id(*normalize(ClassDescriptor::plain(Mode::Full, {Word{Step::H}})));
    if (spec.has(dyck)) {
        std::size_t d = spec.index_of(dyck);
        value[d] = KElem::C();
        seeded[d] = true;
    }

    for (const auto& comp : components(spec, seeded)) {
        const std::size_t m = comp.size();
        std::vector<long> local(n, -1);
        for (std::size_t i = 0; i < m; ++i) local[comp[i]] = static_cast<long>(i);

        // Rows of (I - A) | b.
        std::vector<std::vector<KElem>> mat(m, std::vector<KElem>(m + 1));
        for (std::size_t i = 0; i < m; ++i) {
            mat[i][i] = KElem(1);
            for (const auto& t : sys.eqs[comp[i]].terms) {
                KElem coef = kx().pow(t.x_power);
                long unknown = -1;
                for (const auto& f : t.factors) {
                    std::size_t fi = spec.index_of(f);
                    if (local[fi] >= 0) {
                        if (unknown >= 0) {
                            return NonClosedForm{sys, spec.at(comp[i]).id,
                                                 "equation for " + spec.at(comp[i]).id.str() +
                                                     " is not affine in its component"};
                        }
                        unknown = local[fi];
                    } else {
                        coef *= *value[fi];
                    }
                }
                if (unknown < 0) {
                    mat[i][m] += coef;
                } else {
                    mat[i][static_cast<std::size_t>(unknown)] -= coef;
                }
            }
        }

        for (std::size_t col = 0; col < m; ++col) {
            std::size_t pivot = col;
            while (pivot < m && mat[pivot][col].is_zero()) ++pivot;
            if (pivot == m) {
                return NonClosedForm{sys, spec.at(comp[col]).id, "singular linear system"};
            }
            std::swap(mat[col], mat[pivot]);
            KElem inv = mat[col][col].inverse();
            for (std::size_t k = col; k <= m; ++k) mat[col][k] *= inv;
            for (std::size_t r = 0; r < m; ++r) {
                if (r == col || mat[r][col].is_zero()) continue;
                KElem f = mat[r][col];
                for (std::size_t k = col; k <= m; ++k) mat[r][k] -= f * mat[col][k];
            }
        }
        for (std::size_t i = 0; i < m; ++i) value[comp[i]] = mat[i][m];
    }

    ClosedForm out;
    for (std::size_t i = 0; i < n; ++i) out.values.emplace(spec.at(i).id, *value[i]);
    return out;
}

}  // namespace motzkin
