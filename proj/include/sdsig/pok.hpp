#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sdsig/bitmat.hpp"
#include "sdsig/perm.hpp"
#include "sdsig/xof.hpp"

namespace sdsig {

struct SdInstance {
  CodeMatrix H;  // (n-k) x n
  BitVec y;      // n-k
  uint32_t w = 0;
};

struct SdWitness {
  BitVec x;
};

struct GsdInstance {
  CodeMatrix G;  // k x n
  BitVec y;      // n
  uint32_t w = 0;
};

struct GsdWitness {
  BitVec x;  // k
  BitVec e;  // n, weight w
};

bool is_witness(const SdInstance& inst, const SdWitness& wit);
bool is_witness(const GsdInstance& inst, const GsdWitness& wit);

struct HelperOutput {
  std::vector<Commitment> aux;
  Seed prover_seed;
};

// ---- PoK 1 (SD, challenge in {0, 1}) ----

struct Pok1State {
  Permutation pi;
  BitVec u, x;
  Seed r0, r1, r;
};

// alpha = 0: (r_aux = r0, r, z1 = pi, z2 = u + x).
// alpha = 1: (r_aux = r1, r, z3 = pi[u], z4 = pi[x]).
struct Pok1Response {
  uint32_t alpha = 0;
  Seed r_aux{}, r{};
  Permutation z1;
  BitVec z2, z3, z4;
};

struct Transcript1 {
  std::vector<Commitment> aux;
  Commitment com{};
  uint32_t alpha = 0;
  Pok1Response rsp;
};

HelperOutput pok1_setup(const Seed& theta, const SdInstance& inst);
// `coins` drives the prover's own randomness r.
std::pair<Commitment, Pok1State> pok1_p1(const SdWitness& wit, const SdInstance& inst, const Seed& theta,
                                         const Seed& coins);
Pok1Response pok1_p2(const Pok1State& st, uint32_t alpha);
bool pok1_verify(const SdInstance& inst, const std::vector<Commitment>& aux, const Commitment& com, uint32_t alpha,
                 const Pok1Response& rsp);
SdWitness pok1_extract(const SdInstance& inst, const Transcript1& t, const Transcript1& t2);
Transcript1 pok1_simulate(const SdInstance& inst, const Seed& theta, uint32_t alpha, const Seed& coins);

// ---- PoK 2 and PoK 3 (GSD, challenge in [1, N]) ----

struct PartyMaterial {
  Seed theta;
  Permutation pi;
  BitVec u, v;
  Seed r;
};

struct PokNState {
  std::vector<PartyMaterial> parties;
  BitVec u, x, e;
  std::vector<BitVec> s;
  Seed r;
};

// (r_alpha, r, z1, z2, z3, z4), z4 = the N-1 seeds theta_j, j != alpha, in index order.
struct PokNResponse {
  uint32_t alpha = 0;
  Seed r_alpha{}, r{};
  BitVec z1, z2, z3;
  std::vector<Seed> z4;
};

struct TranscriptN {
  std::vector<Commitment> aux;
  Commitment com{};
  uint32_t alpha = 0;
  PokNResponse rsp;
};
using Transcript2 = TranscriptN;
using Transcript3 = TranscriptN;

// theta_i are the leaves of an N-leaf seed tree rooted at theta.
std::vector<PartyMaterial> derive_parties(const Seed& theta, uint32_t N, size_t n, size_t k);
// Material of one party from its leaf seed.
PartyMaterial derive_party(const Seed& theta_i, size_t n, size_t k);

HelperOutput pok2_setup(const Seed& theta, const GsdInstance& inst, uint32_t N);
std::pair<Commitment, PokNState> pok2_p1(const GsdWitness& wit, const GsdInstance& inst, const Seed& theta,
                                         uint32_t N, const Seed& coins);
PokNResponse pok2_p2(const PokNState& st, uint32_t alpha);
bool pok2_verify(const GsdInstance& inst, const std::vector<Commitment>& aux, const Commitment& com, uint32_t alpha,
                 const PokNResponse& rsp, uint32_t N);
GsdWitness pok2_extract(const GsdInstance& inst, const TranscriptN& t, const TranscriptN& t2, uint32_t N);
TranscriptN pok2_simulate(const GsdInstance& inst, const Seed& theta, uint32_t alpha, uint32_t N, const Seed& coins);

HelperOutput pok3_setup(const Seed& theta, const GsdInstance& inst, uint32_t N);
std::pair<Commitment, PokNState> pok3_p1(const GsdWitness& wit, const GsdInstance& inst, const Seed& theta,
                                         uint32_t N, const Seed& coins);
PokNResponse pok3_p2(const PokNState& st, uint32_t alpha);
bool pok3_verify(const GsdInstance& inst, const std::vector<Commitment>& aux, const Commitment& com, uint32_t alpha,
                 const PokNResponse& rsp, uint32_t N);
GsdWitness pok3_extract(const GsdInstance& inst, const TranscriptN& t, const TranscriptN& t2, uint32_t N);
TranscriptN pok3_simulate(const GsdInstance& inst, const Seed& theta, uint32_t alpha, uint32_t N, const Seed& coins);

// Aggregate (pi, v) of a PoK 3 chain: pi = pi_N o ... o pi_1 and
// v = v_N + sum_{i<N} pi_N o ... o pi_{i+1}[v_i].
std::pair<Permutation, BitVec> pok3_aggregate(const std::vector<PartyMaterial>& parties);

// ---- Serialization (length-prefixed fields in a fixed order) ----

void write_commitments(ByteWriter& w, const std::vector<Commitment>& c);
std::vector<Commitment> read_commitments(ByteReader& r);
Bytes serialize(const Pok1Response& r);
Pok1Response parse_pok1_response(ByteSpan b, size_t n);
Bytes serialize(const PokNResponse& r);
PokNResponse parse_pokn_response(ByteSpan b, size_t n, size_t k);
Bytes serialize(const Transcript1& t);
Transcript1 parse_transcript1(ByteSpan b, size_t n);
Bytes serialize(const TranscriptN& t);
TranscriptN parse_transcript_n(ByteSpan b, size_t n, size_t k);

}  // namespace sdsig
