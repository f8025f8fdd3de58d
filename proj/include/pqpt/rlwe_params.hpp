#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pqpt {

// Ring R_q = Z_q[x]/(x^n + 1); secrets and noise are centered binomial with
// parameter eta, so coefficients lie in [-eta, eta].
//
// Two correctness grades are tracked. worst_case_correct means the absolute
// noise bound 2*n*eta^2 + eta stays below q/4, so decryption can never fail.
// correct means the failure probability is negligible (q/4 clears 20 standard
// deviations of the accumulated noise); that grade gates payload encryption.
struct RlweParams {
  std::string id;        // registry name, empty for ad hoc sets
  std::uint8_t wire_id;  // 1-based registry position, 0 for ad hoc sets
  std::uint32_t n;       // ring degree, power of two
  std::uint32_t q;       // odd prime modulus, < 2^16
  std::uint32_t eta;     // noise bound; 0 permitted for noiseless test sets
  bool worst_case_correct;
  bool correct;

  // Validated ad hoc construction; InvalidArgumentError on structural breach.
  static RlweParams custom(std::uint32_t n, std::uint32_t q, std::uint32_t eta);

  // The named sets: TOY-4, TOY-8, STD-256, STD-512.
  static const std::vector<RlweParams>& registry();
  static const RlweParams& by_id(std::string_view id);         // UnregisteredParamsError
  static const RlweParams& by_wire_id(std::uint8_t wire_id);   // UnregisteredParamsError
};

}  // namespace pqpt
