#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pqpt/errors.hpp"
#include "pqpt/poly_mul.hpp"

namespace pqpt {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q);
}

std::uint32_t powmod(std::uint32_t base, std::uint32_t exp, std::uint32_t q) {
  std::uint64_t result = 1;
  std::uint64_t b = base % q;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % q;
    b = (b * b) % q;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_prime_u32(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> factors;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      factors.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) factors.push_back(v);
  return factors;
}

// Smallest generator of Z_q^*, then psi = g^((q-1)/2n), a primitive 2n-th
// root of unity with psi^n = -1.
std::uint32_t find_psi(std::uint32_t n, std::uint32_t q) {
  auto factors = prime_factors(q - 1);
  std::uint32_t g = 2;
  for (;; ++g) {
    bool generator = true;
    for (std::uint32_t f : factors) {
      if (powmod(g, (q - 1) / f, q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) break;
  }
  return powmod(g, (q - 1) / (2 * n), q);
}

struct NttTables {
  std::uint32_t q;
  std::uint32_t n_inv;
  std::vector<std::uint32_t> psi_pow;      // psi^i, i in [0, n)
  std::vector<std::uint32_t> psi_inv_pow;  // psi^-i, i in [0, n)
  std::vector<std::uint32_t> omega_pow;    // omega^i = psi^2i, i in [0, n/2)
  std::vector<std::uint32_t> omega_inv_pow;
  std::vector<std::uint32_t> bitrev;

  NttTables(std::size_t n, std::uint32_t modulus) : q(modulus) {
    std::uint32_t nn = static_cast<std::uint32_t>(n);
    std::uint32_t psi = find_psi(nn, q);
    std::uint32_t psi_inv = powmod(psi, 2 * nn - 1, q);
    n_inv = powmod(nn, q - 2, q);
    psi_pow.resize(n);
    psi_inv_pow.resize(n);
    psi_pow[0] = psi_inv_pow[0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
      psi_pow[i] = mulmod(psi_pow[i - 1], psi, q);
      psi_inv_pow[i] = mulmod(psi_inv_pow[i - 1], psi_inv, q);
    }
    std::uint32_t omega = mulmod(psi, psi, q);
    std::uint32_t omega_inv = mulmod(psi_inv, psi_inv, q);
    omega_pow.resize(n / 2);
    omega_inv_pow.resize(n / 2);
    if (n >= 2) {
      omega_pow[0] = omega_inv_pow[0] = 1;
      for (std::size_t i = 1; i < n / 2; ++i) {
        omega_pow[i] = mulmod(omega_pow[i - 1], omega, q);
        omega_inv_pow[i] = mulmod(omega_inv_pow[i - 1], omega_inv, q);
      }
    }
    bitrev.resize(n);
    std::size_t log_n = 0;
    while ((1u << log_n) < n) ++log_n;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t bit = 0; bit < log_n; ++bit) {
        if (i & (1u << bit)) r |= 1u << (log_n - 1 - bit);
      }
      bitrev[i] = static_cast<std::uint32_t>(r);
    }
  }
};

const NttTables& tables_for(std::size_t n, std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::uint32_t>, std::unique_ptr<NttTables>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, q);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<NttTables>(n, q)).first;
  }
  return *it->second;
}

// In-place iterative radix-2 transform over omega powers.
void transform(std::vector<std::uint32_t>& x, const NttTables& t,
               const std::vector<std::uint32_t>& omega) {
  std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t r = t.bitrev[i];
    if (i < r) std::swap(x[i], x[r]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::uint32_t w = omega[j * stride];
        std::uint32_t even = x[start + j];
        std::uint32_t odd = mulmod(x[start + j + len / 2], w, t.q);
        x[start + j] = (even + odd) % t.q;
        x[start + j + len / 2] = (even + t.q - odd) % t.q;
      }
    }
  }
}

}  // namespace

bool ntt_available(std::size_t n, std::uint32_t q) {
  if (n < 2 || (n & (n - 1)) != 0) return false;
  if (!is_prime_u32(q)) return false;
  return (q - 1) % (2 * n) == 0;
}

void mul_negacyclic_ntt(const std::uint32_t* a, const std::uint32_t* b,
                        std::uint32_t* out, std::size_t n, std::uint32_t q) {
  if (!ntt_available(n, q)) {
    throw InvalidArgumentError("modulus does not admit a negacyclic NTT");
  }
  const NttTables& t = tables_for(n, q);
  std::vector<std::uint32_t> fa(n), fb(n);
  // Pre-twist by psi^i folds the negacyclic wrap into a plain cyclic NTT.
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = mulmod(a[i], t.psi_pow[i], q);
    fb[i] = mulmod(b[i], t.psi_pow[i], q);
  }
  transform(fa, t, t.omega_pow);
  transform(fb, t, t.omega_pow);
  for (std::size_t i = 0; i < n; ++i) fa[i] = mulmod(fa[i], fb[i], q);
  transform(fa, t, t.omega_inv_pow);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = mulmod(mulmod(fa[i], t.n_inv, q), t.psi_inv_pow[i], q);
  }
}

}  // namespace pqpt
