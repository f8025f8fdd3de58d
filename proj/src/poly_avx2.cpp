#include "pqpt/poly_mul.hpp"

#if defined(PQPT_HAVE_AVX2_KERNEL)

#include <immintrin.h>

#include <vector>

namespace pqpt {

// Schoolbook negacyclic convolution with 4-lane 64-bit accumulators.
// The second operand is expanded to bb3[t] = +-b[t mod 2n] over 3n slots so
// every shift of the inner loop reads a contiguous window; accumulators stay
// exact because n * (q-1)^2 < 2^63 for all admissible (n, q).
void mul_negacyclic_avx2(const std::uint32_t* a, const std::uint32_t* b,
                         std::uint32_t* out, std::size_t n, std::uint32_t q) {
  std::vector<std::uint32_t> bb3(3 * n);
  for (std::size_t t = 0; t < n; ++t) {
    bb3[t] = b[t];
    bb3[n + t] = (q - b[t]) % q;
    bb3[2 * n + t] = b[t];
  }
  std::vector<std::uint64_t> acc(n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t ai = a[i];
    if (ai == 0) continue;
    const std::uint32_t* window = bb3.data() + ((2 * n - i) % (2 * n));
    __m256i ai_vec = _mm256_set1_epi64x(static_cast<long long>(ai));
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
      __m128i b32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(window + k));
      __m256i b64 = _mm256_cvtepu32_epi64(b32);
      __m256i prod = _mm256_mul_epu32(ai_vec, b64);
      __m256i accv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc.data() + k));
      accv = _mm256_add_epi64(accv, prod);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc.data() + k), accv);
    }
    for (; k < n; ++k) {
      acc[k] += ai * window[k];
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    out[k] = static_cast<std::uint32_t>(acc[k] % q);
  }
}

}  // namespace pqpt

#endif  // PQPT_HAVE_AVX2_KERNEL
