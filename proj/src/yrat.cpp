#include "motzkin/yrat.hpp"

#include "motzkin/errors.hpp"

namespace motzkin {

PolyY::PolyY(std::vector<KElem> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyY::PolyY(KElem c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

void PolyY::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyY operator+(const PolyY& a, const PolyY& b) {
    std::vector<KElem> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return PolyY(std::move(out));
}

PolyY operator-(const PolyY& a, const PolyY& b) { return a + (-b); }

PolyY PolyY::operator-() const {
    PolyY out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

PolyY operator*(const PolyY& a, const PolyY& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<KElem> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return PolyY(std::move(out));
}

PolyY PolyY::scaled(const KElem& s) const {
    if (s.is_zero()) return {};
    PolyY out = *this;
    for (auto& c : out.c_) c *= s;
    return out;
}

std::pair<PolyY, PolyY> PolyY::divmod(const PolyY& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("division by the zero polynomial in y");
    PolyY rem = *this;
    if (rem.degree() < divisor.degree()) return {PolyY{}, rem};
    const std::size_t dd = divisor.c_.size() - 1;
    std::vector<KElem> quot(rem.c_.size() - dd);
    const KElem inv_lead = divisor.lead().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        KElem q = rem.c_[k + dd] * inv_lead;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem.c_[k + j] -= q * divisor.c_[j];
        quot[k] = std::move(q);
    }
    rem.trim();
    return {PolyY(std::move(quot)), std::move(rem)};
}

PolyY PolyY::exact_div(const PolyY& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("inexact division in K[y]");
    return q;
}

PolyY PolyY::monic() const {
    if (is_zero()) return {};
    return scaled(lead().inverse());
}

KElem PolyY::eval(const KElem& at) const {
    KElem acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

PolyY gcd(const PolyY& a, const PolyY& b) {
    // TODO: subresultant remainders; plain Euclid over K swells badly once both inputs reach degree 3 in y.
    PolyY u = a.monic();
    PolyY v = b.monic();
    while (!v.is_zero()) {
        PolyY r = u.divmod(v).second;
        u = std::move(v);
        v = r.monic();
    }
    return u.monic();
}

YRat::YRat(PolyY num, PolyY den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function in y with zero denominator");
    canonicalize();
}

void YRat::canonicalize() {
    if (num_.is_zero()) {
        den_ = PolyY(KElem(1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() >= 0) {
        PolyY g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    KElem inv = den_.lead().inverse();
    if (!(inv == KElem(1))) {
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

YRat YRat::operator-() const {
    YRat out = *this;
    out.num_ = -out.num_;
    return out;
}

YRat operator+(const YRat& a, const YRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return YRat(a.num_ + b.num_, a.den_);
    return YRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

YRat operator-(const YRat& a, const YRat& b) { return a + (-b); }

YRat operator*(const YRat& a, const YRat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return YRat(a.num_ * b.num_, a.den_ * b.den_);
}

YRat operator/(const YRat& a, const YRat& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero in K(y)");
    return YRat(a.num_ * b.den_, a.den_ * b.num_);
}

KElem YRat::subst(const KElem& v) const {
    KElem d = den_.eval(v);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at y = " + v.str());
    return num_.eval(v) / d;
}

KElem y_subst(const YRat& f, const KElem& v) { return f.subst(v); }

std::vector<KElem> YRat::y_series(std::size_t H) const {
    const KElem d0 = den_.coeff(0);
    if (d0.is_zero()) throw NotAPowerSeries("pole at y = 0");
    const KElem inv0 = d0.inverse();
    std::vector<KElem> out(H + 1);
    for (std::size_t h = 0; h <= H; ++h) {
        KElem acc = num_.coeff(h);
        for (std::size_t j = 1; j <= h && j < den_.coeffs().size(); ++j) acc -= den_.coeffs()[j] * out[h - j];
        out[h] = acc * inv0;
    }
    return out;
}

std::string YRat::str() const {
    auto poly = [](const PolyY& p) {
        if (p.is_zero()) return std::string("0");
        std::string out;
        for (std::size_t k = p.coeffs().size(); k-- > 0;) {
            if (p.coeffs()[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "[" + p.coeffs()[k].str() + "]";
            if (k > 0) out += k == 1 ? "*y" : "*y^" + std::to_string(k);
        }
        return out;
    };
    if (den_ == PolyY(KElem(1))) return poly(num_);
    return "(" + poly(num_) + ")/(" + poly(den_) + ")";
}

}  // namespace motzkin
