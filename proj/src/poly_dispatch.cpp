#include <cstddef>
#include <cstdint>
#include <string_view>

#include "pqpt/poly_mul.hpp"

namespace pqpt {

bool cpu_has_avx2() {
#if defined(PQPT_HAVE_AVX2_KERNEL)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

std::string_view poly_mul_backend(std::size_t n, std::uint32_t q) {
  if (ntt_available(n, q)) return "ntt";
  if (cpu_has_avx2()) return "avx2";
  return "schoolbook";
}

void poly_mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
              std::size_t n, std::uint32_t q) {
  if (ntt_available(n, q)) {
    mul_negacyclic_ntt(a, b, out, n, q);
    return;
  }
#if defined(PQPT_HAVE_AVX2_KERNEL)
  if (cpu_has_avx2()) {
    mul_negacyclic_avx2(a, b, out, n, q);
    return;
  }
#endif
  mul_negacyclic_schoolbook(a, b, out, n, q);
}

}  // namespace pqpt
