#include "smb/field.hpp"
#include "smb/kernels.hpp"

#include <immintrin.h>

namespace smb::kernels::avx2 {

namespace {

// Byte-wise addition for the fields with a vector form: XOR in
// characteristic 2, add-then-reduce for prime fields.
inline __m256i add_vec(const FqField& F, __m256i a, __m256i b) {
    if (F.p() == 2) return _mm256_xor_si256(a, b);
    const __m256i s = _mm256_add_epi8(a, b);
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(F.p()));
    return _mm256_min_epu8(s, _mm256_sub_epi8(s, pv));
}

inline bool has_vector_add(const FqField& F) {
    return F.p() == 2 || (F.k() == 1 && F.p() < 128);
}

} // namespace

void add_assign(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    if (!has_vector_add(F)) {
        scalar::add_assign(F, dst, src, n);
        return;
    }
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_vec(F, a, b));
    }
    scalar::add_assign(F, dst + i, src + i, n - i);
}

void axpy(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c) {
    if (c == 0) return;
    if (c == 1) {
        add_assign(F, dst, src, n);
        return;
    }
    if (F.q() > 16 || !has_vector_add(F)) {
        scalar::axpy(F, dst, src, n, c);
        return;
    }
    // Multiplication by c as a 16-entry shuffle table.
    alignas(16) std::uint8_t table[16] = {};
    const std::uint8_t* row = F.mul_row(c);
    for (unsigned v = 0; v < F.q(); ++v) table[v] = row[v];
    const __m256i tab = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(table)));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i cb = _mm256_shuffle_epi8(tab, b);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_vec(F, a, cb));
    }
    scalar::axpy(F, dst + i, src + i, n - i, c);
}

} // namespace smb::kernels::avx2
