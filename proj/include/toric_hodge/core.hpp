// Exact scalar types, error classes and small vector helpers shared by
// every module of the library.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RationalVector = std::vector<Rational>;

/// A caller violated a documented precondition (bad input, wrong fan class,
/// capacity limit). Maps to exit status 3 in the command-line tool.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction failed. Maps to exit status 4.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Floor of a/b for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(Int(-a), b);
}

inline Int floor(const Rational& x) {
    return floor_div(boost::multiprecision::numerator(x),
                     boost::multiprecision::denominator(x));
}

inline Int ceil(const Rational& x) {
    return ceil_div(boost::multiprecision::numerator(x),
                    boost::multiprecision::denominator(x));
}

inline Int dot(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int content(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

inline bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Divides v by the gcd of its entries. Throws on the zero vector.
inline IntVector primitive(const IntVector& v) {
    Int g = content(v);
    if (g == 0) throw PreconditionError("primitive: zero vector");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline IntVector negate(const IntVector& a) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

inline IntVector to_int_vector(const std::vector<long>& v) {
    return IntVector(v.begin(), v.end());
}

inline std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Generalised binomial coefficient C(e, k) for any integer e and k >= 0.
inline Int binomial_signed(long e, long k) {
    if (k < 0) return 0;
    if (e >= 0) return binomial(e, k);
    // C(-a, k) = (-1)^k C(a + k - 1, k)
    Int b = binomial(-e + k - 1, k);
    return (k % 2) ? Int(-b) : b;
}

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace toric
