#pragma once

#include <initializer_list>
#include <utility>

#include "sdsig/xof.hpp"

namespace sdsig::detail {

inline constexpr uint32_t kAllIndex = 0xffffffff;

// Com(r, field(f_1) || ... || field(f_m)).
inline Commitment com_fields(const Seed& r, std::initializer_list<ByteSpan> fields) {
  ByteWriter w;
  for (ByteSpan f : fields) w.field(f);
  return commit(r, w.bytes());
}

// (xi, tree root) from H(SignMaster || rho1 || rand_seed || H(m)).
std::pair<Seed, Seed> signing_seeds(const Seed& rho1, const Seed& rand_seed, ByteSpan msg);

// Commitment randomness drawn from xi: r^(k) and the per-party values of
// repetition k use (k, i); the signature-level ones use (kAllIndex, j).
inline Seed rep_rand(const Seed& xi, uint32_t k, uint32_t i = 0) { return derive_seed(xi, {Ctx::kCommitRand, k, i}); }
inline Seed global_rand(const Seed& xi, uint32_t j) { return derive_seed(xi, {Ctx::kCommitRand, kAllIndex, j}); }

inline Seed read_seed(ByteReader& r) {
  Seed s;
  auto b = r.raw(kSeedBytes);
  std::copy(b.begin(), b.end(), s.begin());
  return s;
}

inline Commitment read_com(ByteReader& r) {
  Commitment c;
  auto b = r.raw(kComBytes);
  std::copy(b.begin(), b.end(), c.begin());
  return c;
}

}  // namespace sdsig::detail
