#ifndef MOMENTREC_BIG_RATIONAL_HPP
#define MOMENTREC_BIG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace momentrec {

using BigInt = mpz_class;

// GMP keeps mpq_class canonical (gcd 1, positive denominator, 0 == 0/1)
// after every arithmetic operation; only construction from a raw
// numerator/denominator pair needs canonicalize().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

// "num/den" (always with a denominator, "0/1" for zero).
std::string to_fraction_string(const BigRational& q);

// Accepts "num/den", "num", optional sign; throws UsageError otherwise.
BigRational parse_rational(std::string_view text);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

}  // namespace momentrec

#endif  // MOMENTREC_BIG_RATIONAL_HPP
