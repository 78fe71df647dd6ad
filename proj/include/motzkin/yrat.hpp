#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/kfield.hpp"

namespace motzkin {

/// Polynomial in y with coefficients in K.
class PolyY {
public:
    PolyY() = default;
    explicit PolyY(std::vector<KElem> coeffs);
    PolyY(KElem c);  // NOLINT

    static PolyY y() { return PolyY(std::vector<KElem>{KElem(0), KElem(1)}); }

    const std::vector<KElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    KElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : KElem(0); }
    const KElem& lead() const { return c_.back(); }

    friend PolyY operator+(const PolyY& a, const PolyY& b);
    friend PolyY operator-(const PolyY& a, const PolyY& b);
    friend PolyY operator*(const PolyY& a, const PolyY& b);
    PolyY operator-() const;
    PolyY scaled(const KElem& s) const;

    std::pair<PolyY, PolyY> divmod(const PolyY& divisor) const;
    PolyY exact_div(const PolyY& divisor) const;
    PolyY monic() const;
    KElem eval(const KElem& at) const;

    bool operator==(const PolyY&) const = default;

private:
    void trim();
    std::vector<KElem> c_;
};

PolyY gcd(const PolyY& a, const PolyY& b);

/// Reduced fraction num/den in K(y) with den monic.
class YRat {
public:
    YRat() : den_(KElem(1)) {}
    YRat(long c) : num_(KElem(c)), den_(KElem(1)) {}  // NOLINT
    YRat(KElem c) : num_(std::move(c)), den_(KElem(1)) {}  // NOLINT
    YRat(PolyY p) : num_(std::move(p)), den_(KElem(1)) {}  // NOLINT
    /// Throws DivisionByZero on a zero denominator.
    YRat(PolyY num, PolyY den);

    static YRat y() { return YRat(PolyY::y()); }

    const PolyY& num() const { return num_; }
    const PolyY& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    YRat operator-() const;
    friend YRat operator+(const YRat& a, const YRat& b);
    friend YRat operator-(const YRat& a, const YRat& b);
    friend YRat operator*(const YRat& a, const YRat& b);
    friend YRat operator/(const YRat& a, const YRat& b);

    /// Value at y = v. Throws PoleAtPoint when the reduced denominator vanishes there.
    KElem subst(const KElem& v) const;

    /// Coefficients in K of y^0..y^H of the expansion around y = 0.
    std::vector<KElem> y_series(std::size_t H) const;

    std::string str() const;

    bool operator==(const YRat&) const = default;

private:
    void canonicalize();
    PolyY num_;
    PolyY den_;
};

KElem y_subst(const YRat& f, const KElem& v);

}  // namespace motzkin
