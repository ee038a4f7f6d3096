#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "isoform/errors.hpp"

namespace isoform {

// Exact arbitrary-precision scalars. mpq_class keeps values canonical
// (reduced, positive denominator), which is exactly the contract we need:
// equality is plain comparison.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Integer n(num), d(den);
    if (d == 0) throw division_by_zero("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw consistency_error("rational does not fit a machine integer");
    return q.get_num().get_si();
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational num, den;
    mpz_pow_ui(num.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(num.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    num.canonicalize();
    return num;
}

// Total order on rationals, used for deterministic tie-breaking.
inline int cmp_rational(const Rational& a, const Rational& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

inline std::string rational_str(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace isoform
