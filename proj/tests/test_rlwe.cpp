#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "pqpt/errors.hpp"
#include "pqpt/prng.hpp"
#include "pqpt/rlwe.hpp"
#include "pqpt/rlwe_params.hpp"

namespace pqpt {
namespace {

TEST(RlweParams, Registry) {
  const auto& sets = RlweParams::registry();
  ASSERT_EQ(sets.size(), 4u);
  EXPECT_EQ(sets[0].id, "TOY-4");
  EXPECT_EQ(sets[1].id, "TOY-8");
  EXPECT_EQ(sets[2].id, "STD-256");
  EXPECT_EQ(sets[3].id, "STD-512");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    EXPECT_EQ(sets[i].wire_id, i + 1);
    EXPECT_EQ(&RlweParams::by_id(sets[i].id), &sets[i]);
    EXPECT_EQ(&RlweParams::by_wire_id(sets[i].wire_id), &sets[i]);
  }

  const auto& toy4 = RlweParams::by_id("TOY-4");
  EXPECT_EQ(toy4.n, 4u);
  EXPECT_EQ(toy4.q, 257u);
  EXPECT_EQ(toy4.eta, 1u);
  EXPECT_TRUE(toy4.worst_case_correct);  // 2*4*1 + 1 = 9 < 64
  EXPECT_TRUE(toy4.correct);

  const auto& toy8 = RlweParams::by_id("TOY-8");
  EXPECT_EQ(toy8.n, 8u);
  EXPECT_EQ(toy8.q, 257u);
  EXPECT_TRUE(toy8.worst_case_correct);  // 2*8*1 + 1 = 17 < 64
  EXPECT_TRUE(toy8.correct);

  const auto& std256 = RlweParams::by_id("STD-256");
  EXPECT_EQ(std256.n, 256u);
  EXPECT_EQ(std256.q, 7681u);
  EXPECT_EQ(std256.eta, 2u);
  EXPECT_FALSE(std256.worst_case_correct);  // 2*256*4 + 2 = 2050 >= 1920
  EXPECT_TRUE(std256.correct);              // 7681^2 > 3200*2050

  const auto& std512 = RlweParams::by_id("STD-512");
  EXPECT_EQ(std512.n, 512u);
  EXPECT_EQ(std512.q, 12289u);
  EXPECT_EQ(std512.eta, 2u);
  EXPECT_FALSE(std512.worst_case_correct);
  EXPECT_TRUE(std512.correct);  // 12289^2 > 3200*4098

  EXPECT_THROW(RlweParams::by_id("TOY-16"), UnregisteredParamsError);
  EXPECT_THROW(RlweParams::by_wire_id(0), UnregisteredParamsError);
  EXPECT_THROW(RlweParams::by_wire_id(5), UnregisteredParamsError);
}

TEST(RlweParams, CustomValidation) {
  RlweParams p = RlweParams::custom(16, 97, 1);
  EXPECT_EQ(p.wire_id, 0);
  EXPECT_TRUE(p.id.empty());
  EXPECT_FALSE(p.worst_case_correct);  // 2*16*1 + 1 = 33 >= 97/4
  EXPECT_FALSE(p.correct);             // 97^2 < 3200*17

  RlweParams like_toy4 = RlweParams::custom(4, 257, 1);
  EXPECT_TRUE(like_toy4.worst_case_correct);  // 9 < 257/4
  EXPECT_TRUE(like_toy4.correct);
  EXPECT_EQ(like_toy4.wire_id, 0);  // still ad hoc despite matching TOY-4

  EXPECT_THROW(RlweParams::custom(6, 257, 1), InvalidArgumentError);   // n not pow2
  EXPECT_THROW(RlweParams::custom(1, 257, 1), InvalidArgumentError);   // n < 2
  EXPECT_THROW(RlweParams::custom(8, 256, 1), InvalidArgumentError);   // q even
  EXPECT_THROW(RlweParams::custom(8, 9, 1), InvalidArgumentError);     // q composite
  EXPECT_THROW(RlweParams::custom(8, 70001, 1), InvalidArgumentError); // q >= 2^16
  EXPECT_THROW(RlweParams::custom(8, 257, 200), InvalidArgumentError); // eta vs q/4
}

// Keygen KAT frozen from the independent reference implementation:
// stream (1, "kat/keygen"), TOY-4.
TEST(Rlwe, KeygenGolden) {
  Prng prng = derive_stream(1, "kat/keygen");
  RlweKeyPair kp = keygen(RlweParams::by_id("TOY-4"), prng);
  EXPECT_EQ(kp.pub.a.c, (std::vector<std::uint32_t>{24, 163, 131, 19}));
  EXPECT_EQ(kp.pub.b.c, (std::vector<std::uint32_t>{233, 94, 127, 238}));
  EXPECT_EQ(kp.s.c, (std::vector<std::uint32_t>{256, 0, 0, 0}));
}

// Encrypt KAT: keys from (1, "kat/keygen"), encryption randomness from
// (3, "kat/encrypt"), message bits 1010.
TEST(Rlwe, EncryptGolden) {
  Prng kg = derive_stream(1, "kat/keygen");
  RlweKeyPair kp = keygen(RlweParams::by_id("TOY-4"), kg);
  Prng enc = derive_stream(3, "kat/encrypt");
  RlweCiphertext ct =
      encrypt(kp.pub, RlweParams::by_id("TOY-4"), {1, 0, 1, 0}, enc);
  EXPECT_EQ(ct.u.c, (std::vector<std::uint32_t>{256, 0, 1, 1}));
  EXPECT_EQ(ct.v.c, (std::vector<std::uint32_t>{128, 256, 128, 256}));
  EXPECT_EQ(decrypt(kp.s, RlweParams::by_id("TOY-4"), ct),
            (std::vector<std::uint8_t>{1, 0, 1, 0}));
}

TEST(Rlwe, RoundTripAllRegisteredSets) {
  for (const RlweParams& params : RlweParams::registry()) {
    Prng kg = derive_stream(11, "rt/keygen");
    RlweKeyPair kp = keygen(params, kg);
    ASSERT_EQ(kp.pub.a.c.size(), params.n);
    for (std::uint32_t c : kp.s.c) {
      std::uint32_t centered = c <= params.eta ? c : params.q - c;
      EXPECT_LE(centered, params.eta);
    }
    Prng ms = derive_stream(12, "rt/message");
    std::vector<std::uint8_t> message(params.n);
    for (auto& bit : message) bit = static_cast<std::uint8_t>(ms.next_below(2));
    Prng enc = derive_stream(13, "rt/encrypt");
    RlweCiphertext ct = encrypt(kp.pub, params, message, enc);
    EXPECT_EQ(decrypt(kp.s, params, ct), message) << params.id;
  }
}

TEST(Rlwe, DeterministicUnderSameStream) {
  const auto& params = RlweParams::by_id("STD-256");
  Prng a = derive_stream(5, "det");
  Prng b = derive_stream(5, "det");
  RlweKeyPair ka = keygen(params, a);
  RlweKeyPair kb = keygen(params, b);
  EXPECT_EQ(ka.pub.a, kb.pub.a);
  EXPECT_EQ(ka.pub.b, kb.pub.b);
  EXPECT_EQ(ka.s, kb.s);
  Prng c = derive_stream(6, "det");
  EXPECT_NE(keygen(params, c).pub.a, ka.pub.a);
}

TEST(Rlwe, NoiselessEtaZero) {
  RlweParams params = RlweParams::custom(8, 257, 0);
  Prng kg = derive_stream(7, "noiseless");
  RlweKeyPair kp = keygen(params, kg);
  EXPECT_EQ(kp.s.c, std::vector<std::uint32_t>(8, 0));
  EXPECT_EQ(kp.pub.b.c, std::vector<std::uint32_t>(8, 0));  // b = a*0 + 0
  std::vector<std::uint8_t> message{1, 1, 0, 0, 1, 0, 1, 0};
  Prng enc = derive_stream(8, "noiseless");
  RlweCiphertext ct = encrypt(kp.pub, params, message, enc);
  EXPECT_EQ(decrypt(kp.s, params, ct), message);
}

TEST(Rlwe, MessageLengthMismatch) {
  const auto& params = RlweParams::by_id("TOY-4");
  Prng kg = derive_stream(9, "len");
  RlweKeyPair kp = keygen(params, kg);
  Prng enc = derive_stream(9, "len/enc");
  EXPECT_THROW(encrypt(kp.pub, params, {1, 0, 1}, enc), MessageLengthMismatchError);
  EXPECT_THROW(encrypt(kp.pub, params, {1, 0, 1, 0, 1}, enc),
               MessageLengthMismatchError);
}

TEST(Rlwe, DecryptRejectsMismatchedShapes) {
  const auto& toy4 = RlweParams::by_id("TOY-4");
  const auto& toy8 = RlweParams::by_id("TOY-8");
  Prng kg = derive_stream(10, "shape");
  RlweKeyPair kp = keygen(toy4, kg);
  Prng enc = derive_stream(10, "shape/enc");
  RlweCiphertext ct = encrypt(kp.pub, toy4, {0, 0, 0, 0}, enc);
  EXPECT_THROW(decrypt(kp.s, toy8, ct), ParamMismatchError);  // wrong n
  RlweCiphertext bad = ct;
  bad.v.c[0] = toy4.q;  // out of range
  EXPECT_THROW(decrypt(kp.s, toy4, bad), ParamMismatchError);
}

// Worst-case-correct sets guarantee exactness, so a decrypt after a noise-span
// corruption must actually flip the bit (the decision boundary is sharp).
TEST(Rlwe, CorruptionFlipsBits) {
  const auto& params = RlweParams::by_id("TOY-8");
  Prng kg = derive_stream(20, "corrupt");
  RlweKeyPair kp = keygen(params, kg);
  std::vector<std::uint8_t> message(params.n, 0);
  Prng enc = derive_stream(21, "corrupt");
  RlweCiphertext ct = encrypt(kp.pub, params, message, enc);
  RlweCiphertext tampered = ct;
  tampered.v.c[3] = (tampered.v.c[3] + params.q / 2) % params.q;
  auto bits = decrypt(kp.s, params, tampered);
  EXPECT_EQ(bits[3], 1);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i != 3) {
      EXPECT_EQ(bits[i], 0);
    }
  }
}

TEST(RlwePayload, EmptyPayload) {
  const auto& params = RlweParams::by_id("TOY-8");
  Prng kg = derive_stream(30, "payload");
  RlweKeyPair kp = keygen(params, kg);
  Prng enc = derive_stream(31, "payload");
  std::string blob = encrypt_payload(kp.pub, params, "", enc);
  EXPECT_EQ(blob.size(), 17u);  // magic 4 + wire 1 + len 8 + count 4
  EXPECT_EQ(blob.substr(0, 4), "RLWE");
  EXPECT_EQ(decrypt_payload(kp.s, params, blob), "");
}

TEST(RlwePayload, RoundTripVariousSizes) {
  const auto& params = RlweParams::by_id("STD-256");
  Prng kg = derive_stream(32, "payload");
  RlweKeyPair kp = keygen(params, kg);
  Prng enc = derive_stream(33, "payload");
  Prng data = derive_stream(34, "payload");
  for (std::size_t len : {1u, 2u, 23u, 32u, 255u, 256u, 1000u}) {
    std::string payload;
    payload.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      payload += static_cast<char>(data.next_below(256));
    }
    std::string blob = encrypt_payload(kp.pub, params, payload, enc);
    EXPECT_EQ(decrypt_payload(kp.s, params, blob), payload) << "len=" << len;
  }
}

TEST(RlwePayload, OneByteUsesOneBlock) {
  // 64 + 8 bits = 72 bits <= 256 -> a single block on STD-256.
  const auto& params = RlweParams::by_id("STD-256");
  Prng kg = derive_stream(35, "payload");
  RlweKeyPair kp = keygen(params, kg);
  Prng enc = derive_stream(36, "payload");
  std::string blob = encrypt_payload(kp.pub, params, "x", enc);
  EXPECT_EQ(blob.size(), 17u + 2u * 2u * params.n);  // one block = u and v
  EXPECT_EQ(decrypt_payload(kp.s, params, blob), "x");
}

TEST(RlwePayload, RequiresRegisteredCorrectSet) {
  RlweParams adhoc = RlweParams::custom(8, 257, 1);  // valid but unregistered
  Prng kg = derive_stream(37, "payload");
  RlweKeyPair kp = keygen(adhoc, kg);
  Prng enc = derive_stream(38, "payload");
  EXPECT_THROW(encrypt_payload(kp.pub, adhoc, "hello", enc),
               UnregisteredParamsError);
}

TEST(RlwePayload, MalformedBlobs) {
  const auto& params = RlweParams::by_id("TOY-8");
  Prng kg = derive_stream(39, "payload");
  RlweKeyPair kp = keygen(params, kg);
  Prng enc = derive_stream(40, "payload");
  std::string blob = encrypt_payload(kp.pub, params, "hi", enc);

  EXPECT_THROW(decrypt_payload(kp.s, params, ""), MalformedBlobError);
  EXPECT_THROW(decrypt_payload(kp.s, params, "RLW"), MalformedBlobError);
  std::string wrong_magic = blob;
  wrong_magic[0] = 'X';
  EXPECT_THROW(decrypt_payload(kp.s, params, wrong_magic), MalformedBlobError);

  std::string truncated = blob.substr(0, blob.size() - 1);
  EXPECT_THROW(decrypt_payload(kp.s, params, truncated), MalformedBlobError);
  EXPECT_THROW(decrypt_payload(kp.s, params, blob + std::string(1, '\0')),
               MalformedBlobError);

  // Wire id of a different registered set: parameter mismatch, not schema.
  std::string wrong_wire = blob;
  wrong_wire[4] = static_cast<char>(RlweParams::by_id("STD-256").wire_id);
  EXPECT_THROW(decrypt_payload(kp.s, params, wrong_wire), ParamMismatchError);

  // Block count inconsistent with the declared length.
  std::string bad_count = blob;
  bad_count[16] = static_cast<char>(bad_count[16] + 1);
  EXPECT_THROW(decrypt_payload(kp.s, params, bad_count), MalformedBlobError);

  // Coefficient outside [0, q).
  std::string bad_coeff = blob;
  bad_coeff[17] = '\x7f';
  bad_coeff[18] = '\xff';  // 0x7fff = 32767 >= 257
  EXPECT_THROW(decrypt_payload(kp.s, params, bad_coeff), MalformedBlobError);
}

}  // namespace
}  // namespace pqpt
