#include "pqpt/poly_mul.hpp"

namespace pqpt {

// Normative definition: plain double loop with explicit sign handling for
// the x^n = -1 wrap. Every fast kernel is tested against this one.
void mul_negacyclic_schoolbook(const std::uint32_t* a, const std::uint32_t* b,
                               std::uint32_t* out, std::size_t n,
                               std::uint32_t q) {
  for (std::size_t k = 0; k < n; ++k) out[k] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t p = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(a[i]) * b[j]) % q);
      std::size_t k = i + j;
      if (k < n) {
        out[k] = (out[k] + p) % q;
      } else {
        out[k - n] = (out[k - n] + q - p) % q;
      }
    }
  }
}

}  // namespace pqpt
