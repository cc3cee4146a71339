#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cozeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Errors shared across the library.  The CLI maps these onto exit codes.
struct incompatible_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct integrality_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rat &r) { return denominator(r) == 1; }

inline Int as_integer(const Rat &r) {
    if (!is_integer(r)) throw integrality_error("expected integer, got " + r.str());
    return numerator(r);
}

inline std::string rat_to_string(const Rat &r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline Int int_pow(const Int &b, long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1, base = b;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    return r;
}

inline Rat rat_pow(const Rat &b, long e) {
    if (e >= 0) return Rat(int_pow(numerator(b), e), int_pow(denominator(b), e));
    if (b == 0) throw std::domain_error("rat_pow: 0 to a negative power");
    return Rat(int_pow(denominator(b), -e), int_pow(numerator(b), -e));
}

inline long mobius(long n) {
    if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

} // namespace cozeta
