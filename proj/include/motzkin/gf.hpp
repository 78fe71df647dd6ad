#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "motzkin/kfield.hpp"
#include "motzkin/strategies.hpp"
#include "motzkin/yrat.hpp"

namespace motzkin {

/// Bivariate generating function of the smallest Motzkin prefixes containing
/// `prefix`: x marks length, y the final height.
struct GammaState {
    Word prefix;
    YRat gamma;
};

/// Gamma for every prefix of q, from the empty word up to q itself.
std::vector<GammaState> gamma_chain(const Word& q);
YRat gamma(const Word& q);

/// Length generating function of the Motzkin paths avoiding q.
KElem delta(const Word& q);

// One right-hand-side term x^x_power * product(factors). No factors means 1.
struct EquationTerm {
    unsigned x_power = 0;
    std::vector<ClassId> factors;
};

struct Equation {
    ClassId lhs;
    std::vector<EquationTerm> terms;  // empty sum is 0
};

struct EquationSystem {
    std::vector<ClassId> vars;
    std::vector<Equation> eqs;

    /// {"vars": [...], "eqs": [{"lhs", "terms": [{"coef_x_power", "factors"}]}]}
    std::string to_json() const;
    /// One "lhs = rhs" line per class.
    std::string str() const;
};

EquationSystem extract_equations(const Specification& spec);

struct ClosedForm {
    std::map<ClassId, KElem> values;
};

// Returned when some strongly connected component is not affine in its
// unknowns after substituting solved classes, or its linear system is singular.
struct NonClosedForm {
    EquationSystem system;
    ClassId blocking;
    std::string reason;
};

/// Solves the specification's equations over K, seeding the Dyck class Av(H) with C.
std::variant<ClosedForm, NonClosedForm> solve_closed_form(const Specification& spec);

/// Right-hand side of an equation with the given values substituted.
KElem evaluate_rhs(const Equation& eq, const std::map<ClassId, KElem>& values);

}  // namespace motzkin
