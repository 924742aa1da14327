#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace flexcol {

using Rational = mpq_class;
using BigInt = mpz_class;

// k^e for e >= 0.
inline BigInt int_pow(long k, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k), e);
    return r;
}

// k^(-e) as an exact rational, e >= 0.
inline Rational inv_pow(long k, unsigned long e) {
    return Rational(1) / Rational(int_pow(k, e));
}

// Always prints "num/den", even for integers (so mad(K4) prints "3/1").
inline std::string format_ratio(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p/q" or a plain integer.
inline Rational parse_ratio(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    return q;
}

// Thrown when an exact enumeration would exceed its configured budget.
// Callers asked for an exact answer; we refuse to approximate silently.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flexcol
