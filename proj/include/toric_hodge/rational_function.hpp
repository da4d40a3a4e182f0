// Exact univariate rational functions over Q and their residues at 0 and
// infinity.
#pragma once

#include "toric_hodge/core.hpp"

#include <map>

namespace toric {

/// Dense polynomial; c[i] is the coefficient of x^i. No trailing zeros.
struct Polynomial {
    std::vector<Rational> c;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& a) { return Polynomial({a}); }
    static Polynomial monomial(std::size_t deg, const Rational& a = 1) {
        std::vector<Rational> v(deg + 1, Rational(0));
        v[deg] = a;
        return Polynomial(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    Rational at(std::size_t i) const { return i < c.size() ? c[i] : Rational(0); }
    const Rational& lead() const { return c.back(); }

    bool operator==(const Polynomial&) const = default;
};

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return Polynomial(std::move(v));
}

inline Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] -= b.c[i];
    return Polynomial(std::move(v));
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    }
    return Polynomial(std::move(v));
}

/// Quotient and remainder of a by b != 0.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> rem = a.c;
    const long db = b.degree();
    std::vector<Rational> quot(std::max<long>(a.degree() - db + 1, 0), Rational(0));
    for (long i = a.degree(); i >= db; --i) {
        Rational f = rem[i] / b.lead();
        if (f == 0) continue;
        quot[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic greatest common divisor (zero only if both inputs are zero).
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational l = a.lead();
    for (auto& x : a.c) x /= l;
    return a;
}

/// num / den in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
        normalize();
    }
    static RationalFunction polynomial(Polynomial p) {
        return RationalFunction(std::move(p), Polynomial::constant(1));
    }
    /// Sum of c * x^e over a Laurent polynomial (negative exponents allowed).
    static RationalFunction laurent(const std::map<std::int64_t, Rational>& terms) {
        std::int64_t low = 0;
        for (const auto& [e, c] : terms) low = std::min(low, e);
        std::vector<Rational> v;
        for (const auto& [e, c] : terms) {
            std::size_t idx = static_cast<std::size_t>(e - low);
            if (v.size() <= idx) v.resize(idx + 1, Rational(0));
            v[idx] += c;
        }
        return RationalFunction(Polynomial(std::move(v)),
                                Polynomial::monomial(static_cast<std::size_t>(-low)));
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool operator==(const RationalFunction&) const = default;

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational l = den_.lead();
        for (auto& x : num_.c) x /= l;
        for (auto& x : den_.c) x /= l;
    }

    Polynomial num_;
    Polynomial den_;
};

/// Coefficient of x^{-1} in the Laurent expansion of f at 0.
inline Rational residue_zero(const RationalFunction& f) {
    const auto& num = f.numerator();
    const auto& den = f.denominator();
    if (num.is_zero()) return 0;
    // f = x^{b-a} g / h with g(0) != 0, h(0) != 0
    std::size_t a = 0, b = 0;
    while (den.c[a] == 0) ++a;
    while (num.c[b] == 0) ++b;
    const long order = static_cast<long>(a) - static_cast<long>(b) - 1;  // needed power of g/h
    if (order < 0) return 0;
    std::vector<Rational> g(num.c.begin() + b, num.c.end());
    std::vector<Rational> h(den.c.begin() + a, den.c.end());
    // power series g / h up to x^order
    std::vector<Rational> q(order + 1, Rational(0));
    for (long i = 0; i <= order; ++i) {
        Rational s = i < static_cast<long>(g.size()) ? g[i] : Rational(0);
        for (long j = 1; j <= i && j < static_cast<long>(h.size()); ++j) s -= h[j] * q[i - j];
        q[i] = s / h[0];
    }
    return q[order];
}

/// Residue at infinity: -res_0(xi^{-2} f(1/xi)).
inline Rational residue_infinity(const RationalFunction& f) {
    const auto& num = f.numerator();
    const auto& den = f.denominator();
    if (num.is_zero()) return 0;
    // f(1/xi) = xi^{deg den - deg num} rev(num) / rev(den)
    std::vector<Rational> rn(num.c.rbegin(), num.c.rend());
    std::vector<Rational> rd(den.c.rbegin(), den.c.rend());
    const long shift = den.degree() - num.degree() - 2;
    Polynomial n(std::move(rn)), d(std::move(rd));
    if (shift >= 0)
        n = n * Polynomial::monomial(static_cast<std::size_t>(shift));
    else
        d = d * Polynomial::monomial(static_cast<std::size_t>(-shift));
    return -residue_zero(RationalFunction(std::move(n), std::move(d)));
}

}  // namespace toric
