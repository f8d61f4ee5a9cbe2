#pragma once

#include <optional>
#include <vector>

#include "sdsig/bitmat.hpp"
#include "sdsig/params.hpp"
#include "sdsig/pok.hpp"
#include "sdsig/trees.hpp"
#include "sdsig/xof.hpp"

namespace sdsig {

enum class Verdict { kAccept, kReject, kMalformed };
const char* verdict_name(Verdict v);

// pk = (rho2, y). y has n - k bits for SD variants and n bits for GSD ones.
struct PublicKey {
  Scheme scheme = Scheme::kSig1_3r;
  ParamSet params;
  Seed rho2{};
  BitVec y;

  Bytes to_bytes() const;  // rho2 || y
  static PublicKey from_bytes(Scheme s, const ParamSet& p, ByteSpan b);
  bool operator==(const PublicKey& o) const {
    return scheme == o.scheme && params.id == o.params.id && rho2 == o.rho2 && y == o.y;
  }
};

// The secret part is rho1 alone; the public key rides along so signing needs
// a single file.
struct SecretKey {
  Seed rho1{};
  PublicKey pk;

  Bytes to_bytes() const;  // rho1 || pk
  static SecretKey from_bytes(Scheme s, const ParamSet& p, ByteSpan b);
};

struct KeyPair {
  SecretKey sk;
  PublicKey pk;
};

size_t public_key_bytes(Scheme s, const ParamSet& p);
size_t secret_key_bytes(Scheme s, const ParamSet& p);

// Deterministic in master_seed. ParamError if p cannot be used with s.
KeyPair keygen(Scheme s, const ParamSet& p, const Seed& master_seed);

// Public matrix from rho2: H = [I | B] (QCSD) or random (SD) in parity form,
// G = [I | A] (QCGSD) or random (GSD) in generator form.
CodeMatrix expand_matrix(Scheme s, const ParamSet& p, const Seed& rho2);
SdInstance sd_instance(const PublicKey& pk);
GsdInstance gsd_instance(const PublicKey& pk);
SdWitness sd_witness(const SecretKey& sk);
GsdWitness gsd_witness(const SecretKey& sk);

// ---- Fiat-Shamir challenges ----

struct SigChallenge {
  IndexSet K;                // sorted, 0-based
  std::vector<uint32_t> A;   // A[j] belongs to K[j]; {0,1} for Sig1, [1,N] otherwise
  bool operator==(const SigChallenge&) const = default;
};

std::array<uint8_t, 32> message_digest(ByteSpan msg);
// Three-round schemes: (K, A) from H(m || pk || h).
SigChallenge challenge_3r(const PublicKey& pk, ByteSpan msg, const Commitment& h);
// Five-round: K from H(m || pk || h), A from H(m || pk || h || h').
IndexSet challenge_5r_k(const PublicKey& pk, ByteSpan msg, const Commitment& h);
std::vector<uint32_t> challenge_5r_a(const PublicKey& pk, ByteSpan msg, const Commitment& h, const Commitment& h2);

// ---- Typed signatures ----

// One executed repetition of Sig1. alpha = 0: seed = phi, z = u + x,
// other = com1. alpha = 1: seed = psi, z = pi[x] (fixed-weight coded on the
// wire), other = com0.
struct Sig1Response {
  uint32_t alpha = 0;
  Seed seed{};
  BitVec z;
  Commitment other{};
  bool operator==(const Sig1Response&) const = default;
};

struct SignatureSig1 {
  Commitment h{};
  std::optional<Commitment> h2;  // five-round only
  Seed xi{};
  // Seeds of the pair-tree reveal for the audited setups, in canonical order.
  std::vector<Seed> reveal;
  // Three-round only: per commitment pair, the pair digest when both setups
  // are audited, the audited partner's commitment when one is.
  std::vector<Commitment> com_material;
  std::vector<Sig1Response> rsp;  // sorted K order
  bool operator==(const SignatureSig1&) const = default;
};

struct SigNResponse {
  BitVec z1;  // k bits
  BitVec z2;  // weight w, fixed-weight coded on the wire
  BitVec z3;  // n bits
  std::vector<Seed> z4;  // N-leaf tree reveal hiding leaf alpha
  // Sig2: Merkle nodes authenticating com_alpha within aux. Sig3: empty.
  std::vector<Commitment> aux_path;
  Commitment com1_alpha{};  // Sig3 only
  bool operator==(const SigNResponse&) const = default;
};

struct SignatureSigN {
  Commitment h{};
  Seed xi{};
  std::vector<Seed> reveal;            // M-leaf tree reveal hiding K
  std::vector<Commitment> com_nodes;   // Merkle nodes over (com^(k)) for the audited k
  std::vector<SigNResponse> rsp;       // sorted K order
  bool operator==(const SignatureSigN&) const = default;
};

Bytes serialize(const SignatureSig1& s, const ParamSet& p);
Bytes serialize(const SignatureSigN& s, Scheme scheme, const ParamSet& p);
// Parsing needs the challenge to know the shape. Throws ParseError.
Commitment parse_sig_h(ByteSpan b);
SignatureSig1 parse_sig1(ByteSpan b, Scheme scheme, const ParamSet& p, const IndexSet& K,
                         const std::vector<uint32_t>& A);
SignatureSigN parse_sign(ByteSpan b, Scheme scheme, const ParamSet& p, const IndexSet& K,
                         const std::vector<uint32_t>& A);
// Exact encoded length of a signature with challenge (K, A).
size_t sig1_bytes(Scheme scheme, const ParamSet& p, const IndexSet& K, const std::vector<uint32_t>& A);
size_t sign_bytes(Scheme scheme, const ParamSet& p, const IndexSet& K, const std::vector<uint32_t>& A);

SignatureSig1 sign_sig1(const SecretKey& sk, ByteSpan msg, const Seed& rand_seed);
SignatureSigN sign_sign(const SecretKey& sk, ByteSpan msg, const Seed& rand_seed);
Verdict verify_sig1(const PublicKey& pk, ByteSpan msg, const SignatureSig1& s);
Verdict verify_sign(const PublicKey& pk, ByteSpan msg, const SignatureSigN& s);

// Byte-level entry points, dispatching on sk.pk.scheme / pk.scheme.
Bytes sign(const SecretKey& sk, ByteSpan msg, const Seed& rand_seed);
// kMalformed when the leading commitments that fix the challenge are missing.
// The body layout depends on the challenge, so a body that does not fit or
// decode under it is kReject.
Verdict verify(const PublicKey& pk, ByteSpan msg, ByteSpan sig);

}  // namespace sdsig
