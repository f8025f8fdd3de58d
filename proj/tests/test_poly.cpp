#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "pqpt/poly_mul.hpp"
#include "pqpt/prng.hpp"
#include "pqpt/rlwe_params.hpp"

namespace pqpt {
namespace {

using Poly = std::vector<std::uint32_t>;

Poly random_poly(Prng& prng, std::size_t n, std::uint32_t q) {
  Poly p(n);
  for (auto& c : p) c = prng.next_below(q);
  return p;
}

Poly schoolbook(const Poly& a, const Poly& b, std::uint32_t q) {
  Poly out(a.size());
  mul_negacyclic_schoolbook(a.data(), b.data(), out.data(), a.size(), q);
  return out;
}

TEST(Poly, SmallKnownProducts) {
  // (1 + x)(1 + x) = 1 + 2x + x^2 in Z_17[x]/(x^4+1)
  Poly a{1, 1, 0, 0}, b{1, 1, 0, 0};
  EXPECT_EQ(schoolbook(a, b, 17), (Poly{1, 2, 1, 0}));
  // x^3 * x = x^4 = -1
  Poly x3{0, 0, 0, 1}, x1{0, 1, 0, 0};
  EXPECT_EQ(schoolbook(x3, x1, 17), (Poly{16, 0, 0, 0}));
  // x^3 * x^3 = x^6 = -x^2
  EXPECT_EQ(schoolbook(x3, x3, 17), (Poly{0, 0, 16, 0}));
  // constant multiplication
  Poly c{5, 0, 0, 0}, d{7, 11, 0, 3};
  EXPECT_EQ(schoolbook(c, d, 17), (Poly{1, 4, 0, 15}));
}

TEST(Poly, RingProperties) {
  Prng prng = derive_stream(77, "poly/ring");
  const std::size_t n = 16;
  const std::uint32_t q = 97;  // 97 % 32 == 1, NTT-capable
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = random_poly(prng, n, q);
    Poly b = random_poly(prng, n, q);
    Poly c = random_poly(prng, n, q);
    EXPECT_EQ(schoolbook(a, b, q), schoolbook(b, a, q));  // commutativity
    // distributivity: a*(b+c) == a*b + a*c
    Poly bc(n), sum(n);
    for (std::size_t i = 0; i < n; ++i) bc[i] = (b[i] + c[i]) % q;
    Poly ab = schoolbook(a, b, q);
    Poly ac = schoolbook(a, c, q);
    for (std::size_t i = 0; i < n; ++i) sum[i] = (ab[i] + ac[i]) % q;
    EXPECT_EQ(schoolbook(a, bc, q), sum);
    // multiplicative identity
    Poly one(n, 0);
    one[0] = 1;
    EXPECT_EQ(schoolbook(a, one, q), a);
  }
}

TEST(Poly, NttAvailability) {
  EXPECT_TRUE(ntt_available(4, 257));     // 257 % 8 == 1
  EXPECT_TRUE(ntt_available(8, 257));     // 257 % 16 == 1
  EXPECT_TRUE(ntt_available(256, 7681));  // 7681 % 512 == 1
  EXPECT_TRUE(ntt_available(512, 12289)); // 12289 % 1024 == 1
  EXPECT_TRUE(ntt_available(8, 17));      // 17 % 16 == 1
  EXPECT_FALSE(ntt_available(8, 13));     // 13 % 16 != 1
  EXPECT_FALSE(ntt_available(6, 13));     // n not a power of two
  EXPECT_FALSE(ntt_available(8, 256));    // q not prime
  EXPECT_FALSE(ntt_available(1, 257));    // degenerate ring
}

// Every registered parameter set and the fast kernels must agree with the
// normative schoolbook kernel coefficient for coefficient.
TEST(Poly, KernelEquivalenceOnRegisteredSets) {
  Prng prng = derive_stream(101, "poly/equiv");
  for (const RlweParams& params : RlweParams::registry()) {
    const std::size_t n = params.n;
    const std::uint32_t q = params.q;
    ASSERT_TRUE(ntt_available(n, q));
    for (int trial = 0; trial < 25; ++trial) {
      Poly a = random_poly(prng, n, q);
      Poly b = random_poly(prng, n, q);
      Poly ref = schoolbook(a, b, q);
      Poly ntt(n);
      mul_negacyclic_ntt(a.data(), b.data(), ntt.data(), n, q);
      EXPECT_EQ(ntt, ref) << "ntt disagrees, n=" << n << " q=" << q;
#if defined(PQPT_HAVE_AVX2_KERNEL)
      if (cpu_has_avx2()) {
        Poly avx(n);
        mul_negacyclic_avx2(a.data(), b.data(), avx.data(), n, q);
        EXPECT_EQ(avx, ref) << "avx2 disagrees, n=" << n << " q=" << q;
      }
#endif
      Poly dispatched(n);
      poly_mul(a.data(), b.data(), dispatched.data(), n, q);
      EXPECT_EQ(dispatched, ref);
    }
  }
}

#if defined(PQPT_HAVE_AVX2_KERNEL)
// AVX2 must also cover moduli with no NTT so the dispatcher's fallback is
// exercised where it actually runs.
TEST(Poly, Avx2EquivalenceOnNonNttModulus) {
  if (!cpu_has_avx2()) GTEST_SKIP() << "no AVX2 on this host";
  Prng prng = derive_stream(102, "poly/avx2");
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{8, 13},
                      {32, 65521},
                      {64, 4093},
                      {100, 9973}}) {
    for (int trial = 0; trial < 10; ++trial) {
      Poly a = random_poly(prng, n, q);
      Poly b = random_poly(prng, n, q);
      Poly avx(n);
      mul_negacyclic_avx2(a.data(), b.data(), avx.data(), n, q);
      EXPECT_EQ(avx, schoolbook(a, b, q)) << "n=" << n << " q=" << q;
    }
  }
}
#endif

// Saturated inputs (all coefficients q-1) stress accumulator widths.
TEST(Poly, MaxCoefficientStress) {
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{512, 12289},
                      {256, 7681},
                      {64, 65521}}) {
    Poly a(n, q - 1), b(n, q - 1);
    Poly ref = schoolbook(a, b, q);
    if (ntt_available(n, q)) {
      Poly ntt(n);
      mul_negacyclic_ntt(a.data(), b.data(), ntt.data(), n, q);
      EXPECT_EQ(ntt, ref);
    }
#if defined(PQPT_HAVE_AVX2_KERNEL)
    if (cpu_has_avx2()) {
      Poly avx(n);
      mul_negacyclic_avx2(a.data(), b.data(), avx.data(), n, q);
      EXPECT_EQ(avx, ref);
    }
#endif
  }
}

TEST(Poly, BackendSelection) {
  EXPECT_EQ(poly_mul_backend(256, 7681), "ntt");
  EXPECT_EQ(poly_mul_backend(512, 12289), "ntt");
  EXPECT_EQ(poly_mul_backend(4, 257), "ntt");
  std::string_view fallback = poly_mul_backend(8, 13);
  if (cpu_has_avx2()) {
    EXPECT_EQ(fallback, "avx2");
  } else {
    EXPECT_EQ(fallback, "schoolbook");
  }
}

}  // namespace
}  // namespace pqpt
