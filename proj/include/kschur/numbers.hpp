#pragma once

// Exact arithmetic primitives shared by every module: arbitrary-precision
// rationals/integers and small dense vectors over them.  No floating point
// is used anywhere in the computational core; doubles appear only at the
// very end of SVG rendering.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kschur {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Vector in the orthonormal epsilon-coordinates of the finite coroot space.
using RVec = std::vector<Rational>;

// Thrown for invalid configuration (unsupported family/rank combinations).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& m) : std::runtime_error(m) {}
};

// Thrown when an operation's domain precondition fails (bad word letter,
// non-dominant coweight, incomparable interval endpoints, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

inline RVec rvec_zero(std::size_t dim) { return RVec(dim, Rational(0)); }

inline RVec rvec_add(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw domain_error("vector dimension mismatch");
    RVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RVec rvec_sub(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw domain_error("vector dimension mismatch");
    RVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RVec rvec_neg(const RVec& a) {
    RVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RVec rvec_scale(const Rational& c, const RVec& a) {
    RVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Rational rvec_dot(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw domain_error("vector dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool rvec_is_zero(const RVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

// Floor of an exact rational.
inline Integer rational_floor(const Rational& x) {
    Integer n = boost::multiprecision::numerator(x);
    Integer d = boost::multiprecision::denominator(x);  // always > 0
    Integer q = n / d;                                  // truncates toward zero
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline std::string to_string(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string to_string(const RVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace kschur
