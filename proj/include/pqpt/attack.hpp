#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pqpt/rlwe.hpp"
#include "pqpt/rlwe_params.hpp"

namespace pqpt {

using BigInt = boost::multiprecision::cpp_int;

enum class AttackOutcome : std::uint8_t { Recovered, Exhausted, BudgetExceeded };

struct AttackReport {
  BigInt keyspace_size;  // exact (2*eta + 1)^n
  BigInt keys_tried;     // <= min(keyspace_size, budget)
  AttackOutcome outcome;
  std::optional<Poly> secret;  // set iff Recovered
  std::string wall_notes;
};

// Classical exhaustive key search standing in for a quantum decryption
// attempt: candidate secrets with coefficients in [-eta, eta] are enumerated
// lexicographically; s' is accepted iff decrypting the ciphertext with s'
// reproduces known_plaintext and b - a*s' has all centered coefficients
// bounded by eta. Enumeration stops once budget candidates were tried.
AttackReport simulate_quantum_attack(const RlweParams& params,
                                     const RlwePublicKey& pub,
                                     const RlweCiphertext& ct,
                                     const std::vector<std::uint8_t>& known_plaintext,
                                     const BigInt& budget);

}  // namespace pqpt
