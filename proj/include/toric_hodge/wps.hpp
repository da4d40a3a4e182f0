// Weighted projective spaces: fan, residue formulas for lattice counts,
// the Hilbert function and Euler characteristics of forms, and Hodge
// numbers of quasi-smooth complete intersections.
#pragma once

#include "toric_hodge/epq_table.hpp"
#include "toric_hodge/fan.hpp"
#include "toric_hodge/rational_function.hpp"
#include "toric_hodge/series.hpp"

namespace toric {

using Weights = std::vector<Int>;

enum class FormKind { alt, sym, tensor };

inline const char* kind_name(FormKind k) {
    switch (k) {
        case FormKind::alt: return "alt";
        case FormKind::sym: return "sym";
        case FormKind::tensor: return "tensor";
    }
    return "";
}

inline void check_weights(const Weights& w) {
    if (w.size() < 2) throw PreconditionError("weights: need at least two weights");
    Int g = 0;
    for (const auto& x : w) {
        if (x <= 0) throw PreconditionError("weights must be positive");
        g = gcd(g, x);
    }
    if (g != 1) throw PreconditionError("weights must be coprime");
}

/// Fan of P(w_0, ..., w_m): rays p_j with sum w_j p_j = 0 spanning Z^m,
/// p_0 = (-w_1, ..., -w_m) and p_j = e_j when w_0 = 1. Maximal cones omit
/// one ray each.
inline Fan wps_fan(const Weights& w) {
    check_weights(w);
    const std::size_t m = w.size() - 1;
    Fan fan;
    fan.dim = m;
    if (w[0] == 1) {
        IntVector p0(m);
        for (std::size_t j = 0; j < m; ++j) p0[j] = -w[j + 1];
        fan.rays.push_back(std::move(p0));
        for (std::size_t j = 0; j < m; ++j) {
            IntVector e(m, Int(0));
            e[j] = 1;
            fan.rays.push_back(std::move(e));
        }
    } else {
        // a unimodular U with U w = +-e_0; the rays are the remaining rows
        IntMatrix column;
        for (const auto& x : w) column.push_back(IntVector{x});
        auto snf = smith_normal_form(column);
        for (std::size_t j = 0; j <= m; ++j) {
            IntVector p(m);
            for (std::size_t i = 0; i < m; ++i) p[i] = snf.left[i + 1][j];
            fan.rays.push_back(std::move(p));
        }
    }
    for (std::size_t j = 0; j <= m; ++j)
        if (content(fan.rays[j]) != 1)
            throw PreconditionError("weights are not well-formed: ray " + std::to_string(j) +
                                    " is not primitive");
    for (std::size_t skip = 0; skip <= m; ++skip) {
        Cone c;
        for (std::size_t j = 0; j <= m; ++j)
            if (j != skip) c.push_back(j);
        fan.maximal_cones.push_back(std::move(c));
    }
    return fan;
}

namespace detail {

inline std::int64_t small(const Int& x, const char* what) {
    if (x > Int(1) << 40 || x < -(Int(1) << 40))
        throw PreconditionError(std::string(what) + " out of range");
    return static_cast<std::int64_t>(x);
}

/// prod_j (1 - x^{w_j})
inline Polynomial weight_denominator(const Weights& w) {
    Polynomial d = Polynomial::constant(1);
    for (const auto& x : w)
        d = d * (Polynomial::constant(1) - Polynomial::monomial(static_cast<std::size_t>(small(x, "weight"))));
    return d;
}

/// x^{-1} prod_j x^{-w_j s_j} / (1 - x^{w_j})
inline RationalFunction lattice_integrand(const Weights& w, const IntVector& s) {
    if (s.size() != w.size()) throw PreconditionError("s must have one entry per weight");
    Int e = -1;
    for (std::size_t j = 0; j < w.size(); ++j) e -= w[j] * s[j];
    std::map<std::int64_t, Rational> mono{{small(e, "shift"), Rational(1)}};
    return RationalFunction::laurent(mono) *
           RationalFunction(Polynomial::constant(1), weight_denominator(w));
}

inline Int as_integer(const Rational& x, const char* what) {
    if (boost::multiprecision::denominator(x) != 1)
        throw ConsistencyError(std::string(what) + ": residue sum is not an integer");
    return boost::multiprecision::numerator(x);
}

}  // namespace detail

/// Number of q with <p_j, q> >= -s_j for all j, as res_0 of the integrand.
inline Int wps_lattice_count(const Weights& w, const IntVector& s) {
    check_weights(w);
    return detail::as_integer(residue_zero(detail::lattice_integrand(w, s)), "wps_lattice_count");
}

/// H(s) = (res_0 + res_inf) of the same integrand.
inline Int wps_hilbert(const Weights& w, const IntVector& s) {
    check_weights(w);
    auto f = detail::lattice_integrand(w, s);
    return detail::as_integer(residue_zero(f) + residue_infinity(f), "wps_hilbert");
}

/// chi(Y, Omega^p), chi(Y, S^p Omega^1) or chi(Y, tensor^p Omega^1) for a
/// quasi-smooth complete intersection of the given weighted degrees.
inline Int wps_chi(const Weights& w, const std::vector<Int>& degrees, std::size_t p, FormKind kind) {
    check_weights(w);
    for (const auto& d : degrees)
        if (d <= 0) throw PreconditionError("degrees must be positive");
    std::vector<Exponent> wx, dx;
    for (const auto& x : w) wx.push_back({detail::small(x, "weight")});
    for (const auto& x : degrees) dx.push_back({detail::small(x, "degree")});

    SeriesFactorization fac{1, {}};
    switch (kind) {
        case FormKind::alt:
            fac.factors.push_back(scalar_binomial(-1, 1));
            for (const auto& e : wx) fac.factors.push_back(plus_binomial(e));
            for (const auto& e : dx) {
                fac.factors.push_back(minus_binomial(e));
                fac.factors.push_back(geometric_inverse(e, -1));
            }
            break;
        case FormKind::sym:
            for (const auto& e : dx) {
                fac.factors.push_back(minus_binomial(e));
                fac.factors.push_back(minus_y_binomial(e));
            }
            fac.factors.push_back(scalar_binomial(1, -1));
            for (const auto& e : wx) fac.factors.push_back(geometric_inverse(e, 1));
            break;
        case FormKind::tensor: {
            std::vector<std::pair<Exponent, Int>> form;
            for (const auto& e : wx) form.emplace_back(e, 1);
            for (const auto& e : dx) {
                fac.factors.push_back(minus_binomial(e));
                form.emplace_back(e, -1);
            }
            form.emplace_back(Exponent{0}, -1);
            fac.factors.push_back(linear_form_power(std::move(form)));
            break;
        }
    }
    auto poly = y_truncated_expand(fac, p);
    std::map<std::int64_t, Rational> terms;
    for (const auto& [e, c] : poly.by_y[p]) terms[e[0] - 1] += Rational(c);
    auto f = RationalFunction::laurent(terms) *
             RationalFunction(Polynomial::constant(1), detail::weight_denominator(w));
    return detail::as_integer(residue_zero(f) + residue_infinity(f), "wps_chi");
}

/// Hodge numbers of a quasi-smooth complete intersection in P(w): h^{pq} =
/// delta_{pq} off the middle anti-diagonal, and the middle row comes from
/// e^p = (-1)^p chi(Omega^p) = sum_q (-1)^{p+q} h^{pq}.
inline EPQTable wps_hodge(const Weights& w, const std::vector<Int>& degrees) {
    check_weights(w);
    const long m = static_cast<long>(w.size()) - 1;
    const long n = m - static_cast<long>(degrees.size());
    if (n < 0) throw PreconditionError("wps_hodge: more equations than the dimension");
    EPQTable h(static_cast<std::size_t>(n + 1), EPQTable::Tag::hodge);
    for (long p = 0; p <= n; ++p) {
        Int e = Int(sign_pow(p)) * wps_chi(w, degrees, static_cast<std::size_t>(p), FormKind::alt);
        Int off = (2 * p != n) ? 1 : 0;
        if (2 * p != n) h.at(p, p) = 1;
        Int value = Int(sign_pow(n)) * (e - off);
        if (value < 0)
            throw ConsistencyError("wps_hodge: negative Hodge number h^{" + std::to_string(p) + "," +
                                   std::to_string(n - p) + "}");
        h.at(p, n - p) = value;
    }
    return h;
}

}  // namespace toric
