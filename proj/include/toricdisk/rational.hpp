#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricdisk {

using Int = long;  // 64-bit on this platform; keeps GMP construction unambiguous
using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data (geometry/brane/series parameters), as opposed to internal bugs.
struct ConfigError : Error {
    using Error::Error;
};

inline Integer factorial(Int n) {
    if (n < 0) throw Error("factorial of negative integer");
    Integer r = 1;
    for (Int m = 2; m <= n; ++m) r *= static_cast<long>(m);
    return r;
}

// 1/n!, with the Gamma-reciprocal convention 1/(-k)! = 0 for k >= 1.
inline Rational inv_factorial(Int n) {
    if (n < 0) return Rational(0);
    return Rational(1) / Rational(factorial(n));
}

inline int sign_pow(Int e) { return (e % 2 == 0) ? 1 : -1; }

// Canonical lowest-terms rendering; integers render without "/1".
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

}  // namespace toricdisk
