#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pqpt {

// Negacyclic convolution in Z_q[x]/(x^n + 1): out = a * b with x^n = -1.
// All inputs and outputs hold coefficients in [0, q). out must not alias.
//
// The schoolbook kernel is the normative definition; the other kernels are
// interchangeable fast paths that must agree with it coefficient for
// coefficient. poly_mul dispatches at runtime: the NTT path when the modulus
// admits one, else AVX2 when the CPU has it, else schoolbook.

void mul_negacyclic_schoolbook(const std::uint32_t* a, const std::uint32_t* b,
                               std::uint32_t* out, std::size_t n,
                               std::uint32_t q);

#if defined(PQPT_HAVE_AVX2_KERNEL)
void mul_negacyclic_avx2(const std::uint32_t* a, const std::uint32_t* b,
                         std::uint32_t* out, std::size_t n, std::uint32_t q);
#endif

// Requires ntt_available(n, q).
void mul_negacyclic_ntt(const std::uint32_t* a, const std::uint32_t* b,
                        std::uint32_t* out, std::size_t n, std::uint32_t q);

// True when q is prime and q == 1 (mod 2n), i.e. a 2n-th root of unity exists.
bool ntt_available(std::size_t n, std::uint32_t q);

bool cpu_has_avx2();

// Name of the kernel poly_mul would pick: "ntt", "avx2", or "schoolbook".
std::string_view poly_mul_backend(std::size_t n, std::uint32_t q);

void poly_mul(const std::uint32_t* a, const std::uint32_t* b,
              std::uint32_t* out, std::size_t n, std::uint32_t q);

}  // namespace pqpt
