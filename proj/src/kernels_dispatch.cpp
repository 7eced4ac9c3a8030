#include "smb/kernels.hpp"

#include <atomic>

namespace smb::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar};
    return b;
}

} // namespace

bool backend_available(Backend b) {
    return b == Backend::Scalar || cpu_has_avx2();
}

Backend active_backend() {
    return current().load(std::memory_order_relaxed);
}

Backend set_backend(Backend b) {
    if (!backend_available(b)) b = Backend::Scalar;
    current().store(b, std::memory_order_relaxed);
    return b;
}

std::string backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

void axpy(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c) {
    if (active_backend() == Backend::Avx2)
        avx2::axpy(F, dst, src, n, c);
    else
        scalar::axpy(F, dst, src, n, c);
}

void add_assign(const FqField& F, std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    if (active_backend() == Backend::Avx2)
        avx2::add_assign(F, dst, src, n);
    else
        scalar::add_assign(F, dst, src, n);
}

} // namespace smb::kernels
