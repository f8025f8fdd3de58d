#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pqpt {

// Deterministic, platform-stable random stream. The state is seeded from
// SHA-256(master_seed as 8-byte big-endian || stream_label) and advanced with
// splitmix64, so equal (master_seed, stream_label) pairs replay the same
// sequence everywhere and distinct labels give independent streams.
class Prng {
 public:
  Prng(std::uint64_t master_seed, std::string stream_label);

  std::uint64_t next_u64();

  // Unbiased uniform draw in [0, bound); bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  // Uniform in [0, 1) with 53 random bits.
  double next_double();

  // Independent child stream labeled "<label>/<suffix>", derived from the
  // master seed, not from current state: splitting never perturbs the parent.
  Prng split(std::string_view suffix) const;

  std::uint64_t master_seed() const { return master_seed_; }
  const std::string& stream_label() const { return label_; }

 private:
  std::uint64_t master_seed_;
  std::string label_;
  std::uint64_t state_;
};

Prng derive_stream(std::uint64_t master_seed, std::string_view stream_label);

}  // namespace pqpt
