#include "pqpt/prng.hpp"

#include "pqpt/errors.hpp"
#include "pqpt/hash.hpp"

namespace pqpt {

namespace {

std::string be8(std::uint64_t v) {
  std::string out(8, '\0');
  for (int i = 0; i < 8; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<char>((v >> (56 - 8 * i)) & 0xFF);
  }
  return out;
}

std::uint64_t load_be8(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

Prng::Prng(std::uint64_t master_seed, std::string stream_label)
    : master_seed_(master_seed), label_(std::move(stream_label)) {
  Hash256 h = sha256(be8(master_seed_) + label_);
  state_ = load_be8(h.data());
}

std::uint64_t Prng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Prng::next_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgumentError("next_below bound must be >= 1");
  // Rejection below 2^64 mod bound keeps the draw exactly uniform.
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t u = next_u64();
    if (u >= threshold) return u % bound;
  }
}

double Prng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Prng Prng::split(std::string_view suffix) const {
  std::string child = label_;
  child += '/';
  child += suffix;
  return Prng(master_seed_, std::move(child));
}

Prng derive_stream(std::uint64_t master_seed, std::string_view stream_label) {
  return Prng(master_seed, std::string(stream_label));
}

}  // namespace pqpt
