#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

/// Dense polynomial in x over Q. No trailing zero coefficients; zero is empty.
class PolyX {
public:
    PolyX() = default;
    explicit PolyX(std::vector<Rational> coeffs);
    PolyX(long c);  // NOLINT: implicit constants read naturally in formulas
    explicit PolyX(Rational c);

    static PolyX monomial(Rational c, std::size_t k);
    static PolyX x() { return monomial(1, 1); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& lead() const { return c_.back(); }
    /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const;

    PolyX operator-() const;
    PolyX& operator+=(const PolyX& o);
    PolyX& operator-=(const PolyX& o);
    PolyX& operator*=(const Rational& s);
    friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
    friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
    friend PolyX operator*(const PolyX& a, const PolyX& b);
    friend PolyX operator*(PolyX a, const Rational& s) { return a *= s; }

    /// Euclidean division; throws DivisionByZero.
    std::pair<PolyX, PolyX> divmod(const PolyX& divisor) const;
    /// Exact quotient; throws if the remainder is nonzero.
    PolyX exact_div(const PolyX& divisor) const;
    PolyX monic() const;
    /// Multiplies by x^-k; requires valuation() >= k.
    PolyX shift_down(std::size_t k) const;

    Rational eval(const Rational& at) const;

    /// Scalar s and integer primitive polynomial p with *this = s * p and lead(p) > 0.
    std::pair<Rational, PolyX> primitive() const;

    /// Descending powers, e.g. "4*x^4 - x^2".
    std::string str(const std::string& var = "x") const;

    bool operator==(const PolyX&) const = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
PolyX gcd(const PolyX& a, const PolyX& b);

/// Reduced fraction num/den in Q(x). den is integer primitive with positive
/// leading coefficient and shares no factor with num.
class RatX {
public:
    RatX() : den_(1) {}
    RatX(long c) : num_(c), den_(1) {}  // NOLINT
    RatX(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT
    RatX(PolyX p) : num_(std::move(p)), den_(1) {}  // NOLINT
    /// Throws DivisionByZero when den is zero.
    RatX(PolyX num, PolyX den);

    static RatX x() { return RatX(PolyX::x()); }

    const PolyX& num() const { return num_; }
    const PolyX& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatX operator-() const;
    friend RatX operator+(const RatX& a, const RatX& b);
    friend RatX operator-(const RatX& a, const RatX& b);
    friend RatX operator*(const RatX& a, const RatX& b);
    friend RatX operator/(const RatX& a, const RatX& b);
    RatX& operator+=(const RatX& o) { return *this = *this + o; }
    RatX& operator-=(const RatX& o) { return *this = *this - o; }
    RatX& operator*=(const RatX& o) { return *this = *this * o; }
    RatX& operator/=(const RatX& o) { return *this = *this / o; }

    RatX inverse() const;
    RatX pow(unsigned k) const;

    /// Integer numerator and denominator with no common content; den lead > 0.
    std::pair<PolyX, PolyX> integer_form() const;

    /// "(num)/(den)", or just the numerator when den is 1.
    std::string str() const;

    bool operator==(const RatX&) const = default;

private:
    void canonicalize();
    PolyX num_;
    PolyX den_;
};

}  // namespace motzkin
