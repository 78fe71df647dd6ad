#include "motzkin/kfield.hpp"

#include "motzkin/errors.hpp"

namespace motzkin {
namespace {

const RatX& inv_x2() {
    static const RatX value(PolyX(1), PolyX::monomial(1, 2));
    return value;
}

// Single-term numerator over a unit denominator prints without parentheses.
bool is_simple(const RatX& r) {
    if (r.den() != PolyX(1)) return false;
    std::size_t terms = 0;
    for (const auto& c : r.num().coeffs()) terms += c != 0;
    return terms <= 1;
}

std::string ascending(const PolyX& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string power = k == 1 ? "x" : "x^" + std::to_string(k);
        if (k == 0) out += mag.get_str();
        else if (mag == 1) out += power;
        else out += mag.get_str() + "*" + power;
    }
    return out;
}

std::size_t term_count(const PolyX& p) {
    std::size_t n = 0;
    for (const auto& c : p.coeffs()) n += c != 0;
    return n;
}

std::string wrap(const PolyX& p) {
    return term_count(p) > 1 ? "(" + ascending(p) + ")" : ascending(p);
}

// Printed as content * x^k * (rest) when that is shorter to read.
std::string factored_den(const PolyX& w) {
    std::size_t k = w.valuation();
    if (k == 0) return ascending(w);
    PolyX rest = w.shift_down(k);
    auto [scale, prim] = rest.primitive();
    if (prim.coeff(0) < 0) {
        scale = -scale;
        prim = -prim;
    }
    std::string out;
    if (scale != 1) out += scale.get_str() + "*";
    out += k == 1 ? "x" : "x^" + std::to_string(k);
    if (prim != PolyX(1)) out += "*(" + ascending(prim) + ")";
    return out;
}

}  // namespace

KElem operator*(const KElem& u, const KElem& v) {
    // C^2 = (C - 1)/x^2
    if (u.b_.is_zero()) return {u.a_ * v.a_, u.a_ * v.b_};
    if (v.b_.is_zero()) return {u.a_ * v.a_, u.b_ * v.a_};
    RatX bb = u.b_ * v.b_ * inv_x2();
    return {u.a_ * v.a_ - bb, u.a_ * v.b_ + v.a_ * u.b_ + bb};
}

KElem KElem::conjugate() const { return {a_ + b_ * inv_x2(), -b_}; }

KElem KElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in K");
    if (b_.is_zero()) return KElem(a_.inverse());
    // u * conj(u) = a^2 + ab(C + Cbar) + b^2 C Cbar, with C + Cbar = C Cbar = 1/x^2.
    RatX norm = a_ * a_ + (a_ * b_ + b_ * b_) * inv_x2();
    RatX inv_norm = norm.inverse();
    KElem c = conjugate();
    return {c.a_ * inv_norm, c.b_ * inv_norm};
}

KElem KElem::pow(unsigned k) const {
    KElem out(1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

std::string KElem::str() const {
    std::string b = is_simple(b_) ? b_.str() : "(" + b_.str() + ")";
    return a_.str() + " + " + b + "*C";
}

KElem k_mul(const KElem& u, const KElem& v) { return u * v; }
KElem k_inv(const KElem& u) { return u.inverse(); }

std::string MinimalPolynomial::str() const {
    std::string out;
    if (!c2.is_zero()) out += "(" + c2.str() + ")*D^2 + ";
    out += "(" + c1.str() + ")*D + (" + c0.str() + ") = 0";
    return out;
}

MinimalPolynomial minimal_polynomial(const KElem& u) {
    RatX q2;
    RatX q1;
    RatX q0;
    if (u.is_rational()) {
        q1 = RatX(u.a().den());
        q0 = RatX(-u.a().num());
    } else {
        // Substitute C = (D - a)/b into x^2 C^2 - C + 1 = 0 and multiply by b^2.
        const RatX& a = u.a();
        const RatX& b = u.b();
        RatX x2(PolyX::monomial(1, 2));
        q2 = x2;
        q1 = -(RatX(2) * a * x2) - b;
        q0 = x2 * a * a + a * b + b * b;
    }
    PolyX common = q2.den();
    for (const RatX* r : {&q1, &q0}) {
        if (r->is_zero()) continue;
        common = common.exact_div(gcd(common, r->den())) * r->den();
    }
    auto clear = [&](const RatX& r) { return r.num() * common.exact_div(r.den()); };
    PolyX c2 = q2.is_zero() ? PolyX{} : clear(q2);
    PolyX c1 = clear(q1);
    PolyX c0 = clear(q0);
    PolyX g = gcd(gcd(c2, c1), c0);
    if (g.degree() > 0) {
        if (!c2.is_zero()) c2 = c2.exact_div(g);
        c1 = c1.exact_div(g);
        if (!c0.is_zero()) c0 = c0.exact_div(g);
    }
    // One integer scale making all three primitive, sign fixed by the leading coefficient.
    std::vector<Rational> all;
    for (const PolyX* p : {&c2, &c1, &c0}) all.insert(all.end(), p->coeffs().begin(), p->coeffs().end());
    auto [scale, prim] = PolyX(all).primitive();
    const PolyX& lead_poly = c2.is_zero() ? c1 : c2;
    Rational s = 1 / abs(scale);
    if (lead_poly.lead() < 0) s = -s;
    return {c2 * s, c1 * s, c0 * s};
}

SqrtForm sqrt_form(const KElem& u) {
    // C = (1 - s)/(2x^2) with s = sqrt(1 - 4x^2).
    RatX half_inv_x2 = inv_x2() * RatX(Rational(1, 2));
    RatX e1 = u.a() + u.b() * half_inv_x2;
    RatX e2 = u.b() * half_inv_x2;
    PolyX w = e1.den();
    if (!e2.is_zero()) w = w.exact_div(gcd(w, e2.den())) * e2.den();
    PolyX n1 = e1.num() * w.exact_div(e1.den());
    PolyX n2 = e2.is_zero() ? PolyX{} : e2.num() * w.exact_div(e2.den());

    std::vector<Rational> all;
    for (const PolyX* p : {&n1, &n2, &w}) all.insert(all.end(), p->coeffs().begin(), p->coeffs().end());
    Rational s = 1 / abs(PolyX(all).primitive().first);
    if (w.coeff(w.valuation()) < 0) s = -s;
    return {n1 * s, n2 * s, w * s};
}

KElem from_sqrt_form(const SqrtForm& f) {
    RatX inv_den(PolyX(1), f.den);
    RatX a = RatX(f.rational - f.radical) * inv_den;
    RatX b = RatX(f.radical * PolyX::monomial(2, 2)) * inv_den;
    return {a, b};
}

std::string to_sqrt_form(const KElem& u) {
    SqrtForm f = sqrt_form(u);
    std::string num;
    if (f.radical.is_zero()) {
        num = ascending(f.rational);
    } else {
        const bool flip = f.radical.coeff(f.radical.valuation()) < 0;
        const PolyX r = flip ? -f.radical : f.radical;
        std::string rad = r == PolyX(1) ? "sqrt(1 - 4*x^2)" : wrap(r) + "*sqrt(1 - 4*x^2)";
        if (f.rational.is_zero()) num = flip ? rad : "-" + rad;
        else num = ascending(f.rational) + (flip ? " + " : " - ") + rad;
    }
    if (f.den == PolyX(1)) return num;
    return "(" + num + ")/(" + factored_den(f.den) + ")";
}

std::vector<Rational> catalan_series(std::size_t N) {
    std::vector<Rational> out(N + 1);
    for (std::size_t i = 0; i <= N; i += 2) {
        const unsigned long n = i / 2;
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
        out[i] = Rational(binom, BigInt(n + 1));
        out[i].canonicalize();
    }
    return out;
}

std::vector<Rational> series_divide(const std::vector<Rational>& num, const std::vector<Rational>& den,
                                    std::size_t N) {
    if (den.empty() || den[0] == 0) throw NotAPowerSeries("series division by a series vanishing at 0");
    std::vector<Rational> out(N + 1);
    const Rational inv0 = 1 / den[0];
    for (std::size_t n = 0; n <= N; ++n) {
        Rational acc = n < num.size() ? num[n] : Rational(0);
        for (std::size_t j = 1; j <= n && j < den.size(); ++j) acc -= den[j] * out[n - j];
        out[n] = acc * inv0;
    }
    return out;
}

std::vector<Rational> series(const KElem& u, std::size_t N) {
    const PolyX& d1 = u.a().den();
    const PolyX& d2 = u.b().den();
    PolyX plain = u.a().num() * d2;
    PolyX with_c = u.b().num() * d1;
    PolyX w = d1 * d2;
    const std::size_t k = w.valuation();
    const std::size_t terms = N + k + 1;

    std::vector<Rational> numer(terms);
    for (std::size_t i = 0; i < terms; ++i) numer[i] = plain.coeff(i);
    if (!with_c.is_zero()) {
        auto cat = catalan_series(terms - 1);
        for (std::size_t i = 0; i < with_c.coeffs().size() && i < terms; ++i) {
            const Rational& c = with_c.coeffs()[i];
            if (c == 0) continue;
            for (std::size_t j = 0; i + j < terms; ++j) numer[i + j] += c * cat[j];
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (numer[i] != 0) throw NotAPowerSeries("element has a pole at x = 0: " + u.str());
    }
    std::vector<Rational> shifted(numer.begin() + static_cast<std::ptrdiff_t>(k), numer.end());
    return series_divide(shifted, w.shift_down(k).coeffs(), N);
}

}  // namespace motzkin
