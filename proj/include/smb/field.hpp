#ifndef SMB_FIELD_HPP
#define SMB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace smb {

// F_q = F_p[x]/(modulus) with q <= 256. Elements are encoded as the
// base-p digits of their coordinates in the basis 1, x, ..., x^{k-1}.
class FqField {
public:
    using Elem = std::uint8_t;

    // modulus: coefficients over F_p, low degree first, monic of degree k.
    static std::shared_ptr<const FqField> make(unsigned p, unsigned k, std::vector<unsigned> modulus);
    static std::shared_ptr<const FqField> make(unsigned p, unsigned k);
    static std::shared_ptr<const FqField> make_default(unsigned q);
    // Primitive moduli shipped for q <= 16.
    static std::vector<unsigned> default_modulus(unsigned p, unsigned k);
    static std::vector<unsigned> parse_modulus(unsigned p, std::string_view s);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem from_int(long long v) const;

    // Row of the multiplication table for c, indexed by the other operand.
    const Elem* mul_row(Elem c) const { return &mul_[c * q_]; }
    const Elem* add_table() const { return add_.data(); }

    // Fixed generator g of F_q^*: the root x of the modulus when primitive,
    // otherwise the smallest primitive element.
    Elem generator() const { return exp_[1]; }
    unsigned log(Elem a) const;
    Elem exp(unsigned j) const { return exp_[j % (q_ - 1)]; }

    // Integers for k = 1; "0", "1", "g", "g^j" for k > 1.
    std::string to_string(Elem a) const;
    Elem parse(std::string_view s) const;

    bool operator==(const FqField& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

private:
    FqField() = default;
    void build();

    unsigned p_ = 2, k_ = 1, q_ = 2;
    std::vector<unsigned> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_, exp_;
    std::vector<unsigned> log_;
};

using FieldPtr = std::shared_ptr<const FqField>;

bool is_prime(unsigned n);

} // namespace smb

#endif
