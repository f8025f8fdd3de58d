#include "pqpt/attack.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pqpt/poly_mul.hpp"

namespace pqpt {

namespace {

BigInt pow_bigint(std::uint64_t base, std::uint32_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

}  // namespace

AttackReport simulate_quantum_attack(const RlweParams& params,
                                     const RlwePublicKey& pub,
                                     const RlweCiphertext& ct,
                                     const std::vector<std::uint8_t>& known_plaintext,
                                     const BigInt& budget) {
  const std::uint32_t n = params.n;
  const std::uint32_t q = params.q;
  const std::int32_t eta = static_cast<std::int32_t>(params.eta);

  AttackReport report;
  report.keyspace_size = pow_bigint(2 * static_cast<std::uint64_t>(eta) + 1, n);
  report.keys_tried = 0;
  report.outcome = AttackOutcome::BudgetExceeded;

  const BigInt limit = budget < report.keyspace_size ? budget : report.keyspace_size;
  if (limit == 0) {
    report.wall_notes = "no candidates tried: budget exhausted before enumeration";
    return report;
  }

  // rows[j][k] = coefficient k of a(x)*x^j in the negacyclic ring; bumping
  // candidate coordinate j by d shifts the residual b - a*s' by -d*rows[j].
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t j = 0; j < n; ++j) {
    for (std::uint32_t k = 0; k < n; ++k) {
      rows[j][k] = k >= j ? pub.a.c[k - j] : (q - pub.a.c[n - j + k]) % q;
    }
  }

  // Lexicographic odometer over [-eta, eta]^n with coordinate 0 most
  // significant; start at all -eta.
  std::vector<std::int32_t> cand(n, -eta);
  Poly cand_poly;
  cand_poly.c.resize(n);
  auto encode = [&](std::int32_t v) {
    return v >= 0 ? static_cast<std::uint32_t>(v) : q - static_cast<std::uint32_t>(-v);
  };
  for (std::uint32_t i = 0; i < n; ++i) cand_poly.c[i] = encode(cand[i]);

  std::vector<std::uint32_t> as(n);
  poly_mul(pub.a.c.data(), cand_poly.c.data(), as.data(), n, q);
  std::vector<std::uint32_t> residual(n);
  for (std::uint32_t k = 0; k < n; ++k) residual[k] = (pub.b.c[k] + q - as[k]) % q;

  const std::uint32_t bound = params.eta;
  const std::uint32_t wrap_delta = 2 * bound % q;  // reset eta -> -eta
  BigInt tried = 0;
  bool exhausted = false;
  while (true) {
    ++tried;
    bool small = true;
    for (std::uint32_t k = 0; k < n; ++k) {
      std::uint32_t r = residual[k];
      if (r > bound && r < q - bound) {
        small = false;
        break;
      }
    }
    if (small) {
      for (std::uint32_t i = 0; i < n; ++i) cand_poly.c[i] = encode(cand[i]);
      if (decrypt(cand_poly, params, ct) == known_plaintext) {
        report.keys_tried = tried;
        report.outcome = AttackOutcome::Recovered;
        report.secret = cand_poly;
        report.wall_notes = "secret recovered after " + tried.str() + " of " +
                            report.keyspace_size.str() + " candidates";
        return report;
      }
    }
    if (tried >= limit) break;
    // Advance the odometer, updating the residual only where coordinates move.
    std::uint32_t pos = n;
    while (pos > 0) {
      --pos;
      if (cand[pos] < eta) {
        cand[pos] += 1;
        for (std::uint32_t k = 0; k < n; ++k) {
          residual[k] = (residual[k] + q - rows[pos][k]) % q;
        }
        break;
      }
      cand[pos] = -eta;
      for (std::uint32_t k = 0; k < n; ++k) {
        residual[k] = (residual[k] + static_cast<std::uint64_t>(wrap_delta) * rows[pos][k]) % q;
      }
      if (pos == 0) exhausted = true;
    }
    if (exhausted) break;
  }

  report.keys_tried = tried;
  if (tried == report.keyspace_size) {
    report.outcome = AttackOutcome::Exhausted;
    report.wall_notes = "keyspace of " + report.keyspace_size.str() +
                        " candidates exhausted without a match";
  } else {
    report.outcome = AttackOutcome::BudgetExceeded;
    report.wall_notes = "budget spent after " + tried.str() + " of " +
                        report.keyspace_size.str() + " candidates";
  }
  return report;
}

}  // namespace pqpt
