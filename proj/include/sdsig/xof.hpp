#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sdsig/bitvec.hpp"
#include "sdsig/bytes.hpp"
#include "sdsig/perm.hpp"

namespace sdsig {

inline constexpr unsigned kLambda = 128;
inline constexpr size_t kSeedBytes = kLambda / 8;
inline constexpr size_t kComBytes = 2 * kLambda / 8;

using Seed = std::array<uint8_t, kSeedBytes>;
using Commitment = std::array<uint8_t, kComBytes>;

// Purpose of a derivation. Values are part of the wire format; append only.
enum class Ctx : uint8_t {
  kPerm = 1,
  kVecK = 2,
  kVecN = 3,
  kFixedW = 4,
  kCommitRand = 5,
  kChildLeft = 6,
  kChildRight = 7,
  kFsChallenge1 = 8,
  kFsChallenge2 = 9,
  kCommit = 10,
  kMerkleLeaf = 11,
  kMerkleNode = 12,
  kPairParent = 13,
  kChildSeed = 14,
  kSeedPhi = 15,
  kSeedPsi = 16,
  kKeyRho1 = 17,
  kKeyRho2 = 18,
  kKeyX = 19,
  kKeyE = 20,
  kMatrix = 21,
  kSignMaster = 22,
  kSignXi = 23,
  kSignTreeRoot = 24,
  kMsgDigest = 25,
  kSetupSeed = 26,
  kProverRand = 27,
  kSimRand = 28,
};

// (context, a, b) serialized as 9 bytes: u8 context, u32be a, u32be b.
struct DomainTag {
  Ctx ctx;
  uint32_t a = 0;
  uint32_t b = 0;

  std::array<uint8_t, 9> bytes() const;
  bool operator==(const DomainTag&) const = default;
};

// Incremental SHAKE-256.
class Shake256 {
 public:
  Shake256();
  ~Shake256();
  Shake256(const Shake256&) = delete;
  Shake256& operator=(const Shake256&) = delete;

  Shake256& update(ByteSpan b);
  Shake256& update(const DomainTag& t);
  void finish(uint8_t* out, size_t len);

 private:
  void* ctx_;
};

Bytes shake256(ByteSpan in, size_t out_len);

// Reads a SHAKE-256 output stream of a fixed input, bit by bit (LSB-first
// within each byte). `hint` sizes the first squeeze; reading past it re-runs
// the XOF with a longer output, which yields the same stream.
class XofStream {
 public:
  XofStream(Bytes input, size_t hint);
  XofStream(const DomainTag& tag, ByteSpan seed, size_t hint);

  uint64_t bits(unsigned k);  // k <= 56
  // Uniform in [0, m): read ceil(log2 m) bits, reject values >= m.
  uint64_t uniform(uint64_t m);
  void read(uint8_t* out, size_t len);

 private:
  uint8_t next_byte();

  Bytes input_;
  Bytes buf_;
  size_t pos_ = 0;
  uint64_t acc_ = 0;
  unsigned have_ = 0;
};

// First out_bits bits of SHAKE256(tag || seed); unused bits of the last byte are zero.
Bytes xof_expand(const Seed& seed, const DomainTag& tag, size_t out_bits);
Seed derive_seed(const Seed& parent, const DomainTag& tag);

Permutation sample_perm(const Seed& seed, const DomainTag& tag, size_t n);
BitVec sample_vec(const Seed& seed, const DomainTag& tag, size_t n);
BitVec sample_fixed_weight(const Seed& seed, const DomainTag& tag, size_t n, size_t w);

// SHAKE256(tag(kCommit) || r || u64be(|msg|) || msg), first 2λ bits.
Commitment commit(const Seed& r, ByteSpan msg);
bool open_verify(const Commitment& c, const Seed& r, ByteSpan msg);

// Describes what fs_challenge derives, in this order: a sorted subset of
// subset_size distinct indices from [0, subset_m), then sym_count symbols
// uniform in [sym_lo, sym_hi]. Either part may be empty.
struct ChallengeSpace {
  uint32_t subset_m = 0;
  uint32_t subset_size = 0;
  uint32_t sym_lo = 0;
  uint32_t sym_hi = 0;
  uint32_t sym_count = 0;
};

struct Challenge {
  std::vector<uint32_t> subset;
  std::vector<uint32_t> symbols;
  bool operator==(const Challenge&) const = default;
};

Challenge fs_challenge(const DomainTag& tag, ByteSpan transcript, const ChallengeSpace& space);

}  // namespace sdsig
