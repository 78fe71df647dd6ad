#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "motzkin/poly.hpp"

namespace motzkin {

/// Element a(x) + b(x)*C of K = Q(x)[C]/(x^2 C^2 - C + 1), where C is the
/// length-counted Catalan generating function. The basis {1, C} makes the
/// representation unique.
class KElem {
public:
    KElem() = default;
    KElem(long c) : a_(c) {}  // NOLINT
    KElem(RatX a) : a_(std::move(a)) {}  // NOLINT
    KElem(RatX a, RatX b) : a_(std::move(a)), b_(std::move(b)) {}

    static KElem C() { return KElem(RatX(0), RatX(1)); }
    static KElem x() { return KElem(RatX::x()); }

    const RatX& a() const { return a_; }
    const RatX& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    KElem operator-() const { return {-a_, -b_}; }
    friend KElem operator+(const KElem& u, const KElem& v) { return {u.a_ + v.a_, u.b_ + v.b_}; }
    friend KElem operator-(const KElem& u, const KElem& v) { return {u.a_ - v.a_, u.b_ - v.b_}; }
    friend KElem operator*(const KElem& u, const KElem& v);
    friend KElem operator/(const KElem& u, const KElem& v) { return u * v.inverse(); }
    KElem& operator+=(const KElem& o) { return *this = *this + o; }
    KElem& operator-=(const KElem& o) { return *this = *this - o; }
    KElem& operator*=(const KElem& o) { return *this = *this * o; }
    KElem& operator/=(const KElem& o) { return *this = *this / o; }

    /// The other root: C -> 1/x^2 - C.
    KElem conjugate() const;
    /// Throws DivisionByZero for zero.
    KElem inverse() const;
    KElem pow(unsigned k) const;

    /// `a + (b)*C` with integer-normalized parts, e.g. "0 + 1*C".
    std::string str() const;

    bool operator==(const KElem&) const = default;

private:
    RatX a_;
    RatX b_;
};

KElem k_mul(const KElem& u, const KElem& v);
KElem k_inv(const KElem& u);

/// Coefficients c2, c1, c0 of the primitive integer relation c2 D^2 + c1 D + c0 = 0
/// satisfied by D = u. For rational u the relation is linear (c2 = 0).
struct MinimalPolynomial {
    PolyX c2;
    PolyX c1;
    PolyX c0;

    /// "c2*D^2 + c1*D + c0 = 0".
    std::string str() const;
    bool operator==(const MinimalPolynomial&) const = default;
};

MinimalPolynomial minimal_polynomial(const KElem& u);

/// u = (rational - radical * sqrt(1 - 4x^2)) / den over Z[x].
struct SqrtForm {
    PolyX rational;
    PolyX radical;
    PolyX den;
};

SqrtForm sqrt_form(const KElem& u);
KElem from_sqrt_form(const SqrtForm& f);
/// E.g. "(1 - sqrt(1 - 4*x^2))/(2*x^2)"; ascending powers of x.
std::string to_sqrt_form(const KElem& u);

/// 1, 0, 1, 0, 2, 0, 5, ... up to index N.
std::vector<Rational> catalan_series(std::size_t N);

/// Power series coefficients 0..N of u. Throws NotAPowerSeries on a pole at 0.
std::vector<Rational> series(const KElem& u, std::size_t N);

/// Truncated power series of a polynomial quotient num / den with den(0) != 0.
std::vector<Rational> series_divide(const std::vector<Rational>& num, const std::vector<Rational>& den,
                                    std::size_t N);

}  // namespace motzkin
