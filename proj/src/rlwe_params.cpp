#include "pqpt/rlwe_params.hpp"

#include "pqpt/errors.hpp"

namespace pqpt {

namespace {

bool is_power_of_two(std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

RlweParams build(std::string id, std::uint8_t wire_id, std::uint32_t n,
                 std::uint32_t q, std::uint32_t eta) {
  RlweParams p;
  p.id = std::move(id);
  p.wire_id = wire_id;
  p.n = n;
  p.q = q;
  p.eta = eta;
  // Absolute bound: 2*n*eta^2 + eta < q/4.
  std::uint64_t worst = 2ULL * n * eta * eta + eta;
  p.worst_case_correct = 4ULL * worst < q;
  // Negligible-failure bound: q/4 >= 20 sigma with
  // sigma^2 = 2n*(eta/2)^2 + eta/2, i.e. q^2 > 3200*(n*eta^2 + eta).
  std::uint64_t var_x2 = static_cast<std::uint64_t>(n) * eta * eta + eta;
  p.correct = p.worst_case_correct ||
              static_cast<std::uint64_t>(q) * q > 3200ULL * var_x2;
  return p;
}

}  // namespace

RlweParams RlweParams::custom(std::uint32_t n, std::uint32_t q, std::uint32_t eta) {
  if (!is_power_of_two(n) || n < 2 || n > 4096) {
    throw InvalidArgumentError("ring degree must be a power of two in [2, 4096]");
  }
  if (q < 3 || q >= (1u << 16) || q % 2 == 0 || !is_prime(q)) {
    throw InvalidArgumentError("modulus must be an odd prime below 2^16");
  }
  if (eta > 8) {
    throw InvalidArgumentError("noise parameter out of range");
  }
  return build("", 0, n, q, eta);
}

const std::vector<RlweParams>& RlweParams::registry() {
  static const std::vector<RlweParams> sets = {
      build("TOY-4", 1, 4, 257, 1),
      build("TOY-8", 2, 8, 257, 1),
      build("STD-256", 3, 256, 7681, 2),
      build("STD-512", 4, 512, 12289, 2),
  };
  return sets;
}

const RlweParams& RlweParams::by_id(std::string_view id) {
  for (const auto& p : registry()) {
    if (p.id == id) return p;
  }
  throw UnregisteredParamsError("unknown parameter set: " + std::string(id));
}

const RlweParams& RlweParams::by_wire_id(std::uint8_t wire_id) {
  for (const auto& p : registry()) {
    if (p.wire_id == wire_id) return p;
  }
  throw UnregisteredParamsError("unknown parameter set wire id");
}

}  // namespace pqpt
