#include "motzkin/poly.hpp"

#include <algorithm>

#include "motzkin/errors.hpp"

namespace motzkin {

PolyX::PolyX(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyX::PolyX(long c) {
    if (c != 0) c_.emplace_back(c);
}

PolyX::PolyX(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
}

PolyX PolyX::monomial(Rational c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return PolyX(std::move(v));
}

void PolyX::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t PolyX::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) return i;
    }
    return 0;
}

PolyX PolyX::operator-() const {
    PolyX out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

PolyX& PolyX::operator+=(const PolyX& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyX& PolyX::operator-=(const PolyX& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyX& PolyX::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyX(std::move(out));
}

std::pair<PolyX, PolyX> PolyX::divmod(const PolyX& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    PolyX rem = *this;
    if (rem.degree() < divisor.degree()) return {PolyX{}, rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1));
    const Rational inv_lead = 1 / divisor.lead();
    const std::size_t dd = divisor.c_.size() - 1;
    for (long k = rem.degree() - divisor.degree(); k >= 0; --k) {
        const auto uk = static_cast<std::size_t>(k);
        Rational q = rem.coeff(uk + dd) * inv_lead;
        if (q == 0) continue;
        quot[uk] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem.c_[uk + j] -= q * divisor.c_[j];
    }
    rem.trim();
    return {PolyX(std::move(quot)), std::move(rem)};
}

PolyX PolyX::exact_div(const PolyX& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

PolyX PolyX::monic() const {
    if (is_zero()) return {};
    return *this * (1 / lead());
}

PolyX PolyX::shift_down(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    if (valuation() < k) throw Error("shift_down below the valuation");
    return PolyX(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Rational PolyX::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::pair<Rational, PolyX> PolyX::primitive() const {
    if (is_zero()) return {Rational(1), PolyX{}};
    BigInt den_lcm = 1;
    for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    BigInt content = 0;
    for (const auto& c : c_) {
        BigInt scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(content, den_lcm);
    scale.canonicalize();
    if (lead() < 0) scale = -scale;
    PolyX p = *this * (1 / scale);
    return {scale, std::move(p)};
}

std::string PolyX::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += power;
        } else {
            out += mag.get_str() + "*" + power;
        }
    }
    return out;
}

PolyX gcd(const PolyX& a, const PolyX& b) {
    // Integer primitive parts keep the remainders from accumulating denominators.
    PolyX u = a.primitive().second;
    PolyX v = b.primitive().second;
    while (!v.is_zero()) {
        PolyX r = u.divmod(v).second;
        u = std::move(v);
        v = r.primitive().second;
    }
    return u.monic();
}

RatX::RatX(PolyX num, PolyX den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

void RatX::canonicalize() {
    if (num_.is_zero()) {
        den_ = PolyX(1);
        return;
    }
    if (den_.degree() > 0) {
        PolyX g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    auto [scale, prim] = den_.primitive();
    den_ = std::move(prim);
    if (scale != 1) num_ *= 1 / scale;
}

RatX RatX::operator-() const {
    RatX out = *this;
    out.num_ = -out.num_;
    return out;
}

RatX operator+(const RatX& a, const RatX& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatX(a.num_ + b.num_, a.den_);
    return RatX(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatX operator-(const RatX& a, const RatX& b) { return a + (-b); }

RatX operator*(const RatX& a, const RatX& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        RatX out;
        out.num_ = a.num_ * b.num_;
        out.den_ = PolyX(1);
        return out;
    }
    return RatX(a.num_ * b.num_, a.den_ * b.den_);
}

RatX RatX::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(x)");
    return RatX(den_, num_);
}

RatX operator/(const RatX& a, const RatX& b) { return a * b.inverse(); }

RatX RatX::pow(unsigned k) const {
    RatX out(1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

std::pair<PolyX, PolyX> RatX::integer_form() const {
    auto [scale, prim] = num_.primitive();
    PolyX n = prim * Rational(scale.get_num());
    PolyX d = den_ * Rational(scale.get_den());
    return {std::move(n), std::move(d)};
}

std::string RatX::str() const {
    auto [n, d] = integer_form();
    if (d == PolyX(1)) return n.str();
    return "(" + n.str() + ")/(" + d.str() + ")";
}

}  // namespace motzkin
