#ifndef SMB_KERNELS_HPP
#define SMB_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace smb {
class FqField;
}

namespace smb::kernels {

// Row operations over F_q on byte-encoded elements. These are the inner
// loops of polynomial multiplication and division.
enum class Backend { Scalar, Avx2 };

// dst[i] += c * src[i]
void axpy(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c);
// dst[i] += src[i]
void add_assign(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n);

Backend active_backend();
// Falls back to Scalar when the CPU lacks the requested extension.
Backend set_backend(Backend b);
bool backend_available(Backend b);
std::string backend_name(Backend b);

namespace scalar {
void axpy(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c);
void add_assign(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
} // namespace scalar

namespace avx2 {
void axpy(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c);
void add_assign(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
} // namespace avx2

} // namespace smb::kernels

#endif
