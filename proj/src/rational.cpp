#include "smb/rational.hpp"

#include "smb/errors.hpp"

namespace smb {

std::string to_string(const Rational& r) {
    return r.get_str();
}

Rational parse_rational(std::string_view s) {
    std::string str(s);
    while (!str.empty() && str.front() == ' ') str.erase(str.begin());
    while (!str.empty() && str.back() == ' ') str.pop_back();
    if (str.empty()) throw ValidationError("empty rational");
    if (str.front() == '+') str.erase(str.begin());
    Rational r;
    if (r.set_str(str, 10) != 0) throw ValidationError("malformed rational '" + std::string(s) + "'");
    if (r.get_den() == 0) throw ValidationError("zero denominator in '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

Integer floor(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Integer ceil(const Rational& r) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Integer ipow(std::uint64_t q, std::uint64_t e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), q, e);
    return out;
}

Rational rpow(std::uint64_t q, std::int64_t e) {
    if (e >= 0) return Rational(ipow(q, static_cast<std::uint64_t>(e)));
    return Rational(Integer(1), ipow(q, static_cast<std::uint64_t>(-e)));
}

unsigned characteristic_of(std::uint64_t q) {
    if (q < 2) throw ValidationError("q must be at least 2");
    for (std::uint64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) return static_cast<unsigned>(f);
    return static_cast<unsigned>(q);
}

bool divides(unsigned p, const Rational& r) {
    if (!is_integer(r)) throw ValidationError("divisibility test on non-integer " + to_string(r));
    return mpz_divisible_ui_p(r.get_num_mpz_t(), p) != 0;
}

} // namespace smb
