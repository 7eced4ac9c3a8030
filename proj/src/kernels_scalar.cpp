#include "smb/field.hpp"
#include "smb/kernels.hpp"

namespace smb::kernels::scalar {

void axpy(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c) {
    if (c == 0) return;
    const std::uint8_t* row = F.mul_row(c);
    const std::uint8_t* add = F.add_table();
    const unsigned q = F.q();
    for (std::size_t i = 0; i < n; ++i) dst[i] = add[dst[i] * q + row[src[i]]];
}

void add_assign(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    const std::uint8_t* add = F.add_table();
    const unsigned q = F.q();
    for (std::size_t i = 0; i < n; ++i) dst[i] = add[dst[i] * q + src[i]];
}

} // namespace smb::kernels::scalar
