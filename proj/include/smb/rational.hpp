#ifndef SMB_RATIONAL_HPP
#define SMB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace smb {

using Rational = mpq_class;
using Integer = mpz_class;

// "a/b" with b > 1, or "a" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);

bool is_integer(const Rational& r);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// q^e as an exact integer.
Integer ipow(std::uint64_t q, std::uint64_t e);
Rational rpow(std::uint64_t q, std::int64_t e);

// Smallest prime factor of q (the characteristic when q is a prime power).
unsigned characteristic_of(std::uint64_t q);

// True when p divides the rational r; r must be an integer.
bool divides(unsigned p, const Rational& r);

} // namespace smb

#endif
