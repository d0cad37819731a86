#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hurwitz {

// All counts and series coefficients are exact: arbitrary-precision
// integers and rationals in lowest terms with positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// binomial(a, k) for arbitrary integer a, k >= 0; zero for k < 0.
// a(a-1)...(a-k+1)/k! is always integral.
inline Integer binomial(const Integer& a, long k) {
    if (k < 0) return 0;
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= a - i;
    Integer den = factorial(k);
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Integer binomial(long a, long k) { return binomial(Integer(a), k); }

// Rising product a(a+1)...(a+k-1); empty product for k = 0.  For k < 0 the
// reciprocal convention rising(a, k) = 1 / rising(a+k, -k) applies, which
// has poles whenever a factor of the reciprocal product vanishes.
inline Rational rising(const Integer& a, long k) {
    if (k >= 0) {
        Integer p = 1;
        for (long i = 0; i < k; ++i) p *= a + i;
        return Rational(p);
    }
    Integer p = 1;
    for (long i = 0; i < -k; ++i) {
        Integer f = a + k + i;
        if (f == 0) throw std::domain_error("rising: pole in reciprocal rising product");
        p *= f;
    }
    return Rational(1) / Rational(p);
}

inline Rational rising(long a, long k) { return rising(Integer(a), k); }

// Canonicalized num/den; the two-argument mpq_class constructor does not
// reduce on its own.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_decimal(const Integer& n) { return n.get_str(); }

// "num/den", or plain "num" when the denominator is 1.
inline std::string to_fraction(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace hurwitz
