#include "sdsig/pok.hpp"

#include "sdsig/trees.hpp"

namespace sdsig {

namespace {

struct Pok1Material {
  Permutation pi;
  BitVec u;
  Seed r0, r1;
};

Pok1Material pok1_material(const Seed& theta, size_t n) {
  return {sample_perm(theta, {Ctx::kPerm}, n), sample_vec(theta, {Ctx::kVecN}, n),
          derive_seed(theta, {Ctx::kCommitRand, 0}), derive_seed(theta, {Ctx::kCommitRand, 1})};
}

Commitment com_perm_vec(const Seed& r, const Permutation& p, const BitVec& v) {
  ByteWriter w;
  w.field(p.to_bytes());
  w.field(v.to_bytes());
  return commit(r, w.bytes());
}

Commitment com_vec(const Seed& r, const BitVec& v) { return commit(r, v.to_bytes()); }

Seed prover_rand(const Seed& coins) { return derive_seed(coins, {Ctx::kProverRand}); }

void check_n(uint32_t N) {
  if (N < 2) throw ParamError("N must be at least 2");
}

// Com(r_i, t || theta_{i*}).
Commitment com_party(const Seed& r, const BitVec& t, const std::vector<Seed>& others) {
  ByteWriter w;
  w.field(t.to_bytes());
  ByteWriter s;
  for (const Seed& o : others) s.raw(o);
  w.field(s.bytes());
  return commit(r, w.bytes());
}

std::vector<Seed> seeds_except(const std::vector<PartyMaterial>& parties, size_t skip) {
  std::vector<Seed> out;
  out.reserve(parties.size() - 1);
  for (size_t j = 0; j < parties.size(); ++j)
    if (j != skip) out.push_back(parties[j].theta);
  return out;
}

// Com(r, u + x || s_1 || ... || s_N).
Commitment com_masked(const Seed& r, const BitVec& ux, const std::vector<BitVec>& s) {
  ByteWriter w;
  w.field(ux.to_bytes());
  for (const BitVec& si : s) w.field(si.to_bytes());
  return commit(r, w.bytes());
}

BitVec sum_u(const std::vector<PartyMaterial>& parties, size_t k) {
  BitVec u(k);
  for (const auto& p : parties) u += p.u;
  return u;
}

std::vector<Commitment> helper_aux(const std::vector<PartyMaterial>& parties, const BitVec& t) {
  std::vector<Commitment> aux;
  aux.reserve(parties.size());
  for (size_t i = 0; i < parties.size(); ++i) aux.push_back(com_party(parties[i].r, t, seeds_except(parties, i)));
  return aux;
}

// Parties rebuilt from z4 = theta_{alpha*}; entry alpha - 1 is left empty.
std::vector<std::optional<PartyMaterial>> parties_from_z4(const std::vector<Seed>& z4, uint32_t alpha, size_t n,
                                                          size_t k) {
  std::vector<std::optional<PartyMaterial>> out(z4.size() + 1);
  size_t j = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    if (i + 1 == alpha) continue;
    const Seed& t = z4[j++];
    out[i] = PartyMaterial{t, sample_perm(t, {Ctx::kPerm}, n), sample_vec(t, {Ctx::kVecK}, k),
                           sample_vec(t, {Ctx::kVecN}, n), derive_seed(t, {Ctx::kCommitRand})};
  }
  return out;
}

bool gsd_shapes_ok(const GsdInstance& inst, const PokNResponse& rsp, uint32_t alpha, uint32_t N) {
  const size_t n = inst.G.cols(), k = inst.G.rows();
  return rsp.alpha == alpha && alpha >= 1 && alpha <= N && rsp.z1.size() == k && rsp.z2.size() == n &&
         rsp.z3.size() == n && rsp.z4.size() == N - 1;
}

// Shared verifier of PoK 2 and PoK 3.
bool pokn_verify(const GsdInstance& inst, const std::vector<Commitment>& aux, const Commitment& com, uint32_t alpha,
                 const PokNResponse& rsp, uint32_t N, bool chained) {
  if (aux.size() != N || !gsd_shapes_ok(inst, rsp, alpha, N)) return false;
  const size_t n = inst.G.cols(), k = inst.G.rows();
  const auto parties = parties_from_z4(rsp.z4, alpha, n, k);
  BitVec z1 = rsp.z1;
  for (const auto& p : parties)
    if (p) z1 += p->u;
  const BitVec z1g = inst.G.vec_mul(z1);
  std::vector<BitVec> s(N);
  for (uint32_t i = 0; i < N; ++i) {
    if (i + 1 == alpha) {
      s[i] = rsp.z3;
      continue;
    }
    const BitVec& prev = chained ? (i == 0 ? z1g : s[i - 1]) : z1g;
    s[i] = apply_perm(parties[i]->pi, prev) + parties[i]->v;
  }
  const bool b1 = com_masked(rsp.r, z1, s) == com;
  const BitVec t = (chained ? s[N - 1] : rsp.z3) + rsp.z2;
  const bool b2 = com_party(rsp.r_alpha, t, rsp.z4) == aux[alpha - 1];
  const bool b3 = rsp.z2.weight() == inst.w;
  return b1 && b2 && b3;
}

// All N seeds from two transcripts with distinct challenges.
std::vector<Seed> all_seeds(const TranscriptN& t, const TranscriptN& t2, uint32_t N) {
  std::vector<Seed> seeds(N);
  size_t j = 0;
  for (uint32_t i = 1; i <= N; ++i)
    if (i != t.alpha) seeds[i - 1] = t.rsp.z4[j++];
  // theta_alpha sits in t2's list at its rank among indices != t2.alpha.
  const uint32_t a = t.alpha;
  seeds[a - 1] = t2.rsp.z4[a < t2.alpha ? a - 1 : a - 2];
  return seeds;
}

PartyMaterial party_from_seed(const Seed& t, size_t n, size_t k) {
  return {t, sample_perm(t, {Ctx::kPerm}, n), sample_vec(t, {Ctx::kVecK}, k), sample_vec(t, {Ctx::kVecN}, n),
          derive_seed(t, {Ctx::kCommitRand})};
}

void check_extract_pair(const TranscriptN& t, const TranscriptN& t2) {
  if (t.aux != t2.aux || t.com != t2.com) throw ExtractError("transcripts do not share (aux, com)");
  if (t.alpha == t2.alpha) throw ExtractError("transcripts share the same challenge");
}

void write_seeds(ByteWriter& w, const std::vector<Seed>& s) {
  w.u32(static_cast<uint32_t>(s.size()));
  for (const Seed& x : s) w.raw(x);
}

std::vector<Seed> read_seeds(ByteReader& r) {
  const uint32_t count = r.u32();
  if (count > r.remaining() / kSeedBytes) throw ParseError("seed list longer than input");
  std::vector<Seed> out(count);
  for (Seed& s : out) {
    auto b = r.raw(kSeedBytes);
    std::copy(b.begin(), b.end(), s.begin());
  }
  return out;
}

template <class A>
A read_array(ByteReader& r) {
  A a;
  auto b = r.raw(a.size());
  std::copy(b.begin(), b.end(), a.begin());
  return a;
}

}  // namespace

bool is_witness(const SdInstance& inst, const SdWitness& wit) {
  return wit.x.size() == inst.H.cols() && wit.x.weight() == inst.w && inst.H.mul_vec(wit.x) == inst.y;
}

bool is_witness(const GsdInstance& inst, const GsdWitness& wit) {
  return wit.x.size() == inst.G.rows() && wit.e.size() == inst.G.cols() && wit.e.weight() == inst.w &&
         inst.G.vec_mul(wit.x) + wit.e == inst.y;
}

// ---- PoK 1 ----

HelperOutput pok1_setup(const Seed& theta, const SdInstance& inst) {
  const auto m = pok1_material(theta, inst.H.cols());
  return {{com_perm_vec(m.r0, m.pi, inst.H.mul_vec(m.u)), com_vec(m.r1, apply_perm(m.pi, m.u))}, theta};
}

std::pair<Commitment, Pok1State> pok1_p1(const SdWitness& wit, const SdInstance& inst, const Seed& theta,
                                         const Seed& coins) {
  if (wit.x.size() != inst.H.cols()) throw DimensionError("witness length does not match H");
  auto m = pok1_material(theta, inst.H.cols());
  Pok1State st{std::move(m.pi), std::move(m.u), wit.x, m.r0, m.r1, prover_rand(coins)};
  const Commitment com = com_vec(st.r, apply_perm(st.pi, st.u + st.x));
  return {com, std::move(st)};
}

Pok1Response pok1_p2(const Pok1State& st, uint32_t alpha) {
  Pok1Response rsp;
  rsp.alpha = alpha;
  rsp.r = st.r;
  if (alpha == 0) {
    rsp.r_aux = st.r0;
    rsp.z1 = st.pi;
    rsp.z2 = st.u + st.x;
  } else if (alpha == 1) {
    rsp.r_aux = st.r1;
    rsp.z3 = apply_perm(st.pi, st.u);
    rsp.z4 = apply_perm(st.pi, st.x);
  } else {
    throw ParamError("PoK 1 challenge must be 0 or 1");
  }
  return rsp;
}

bool pok1_verify(const SdInstance& inst, const std::vector<Commitment>& aux, const Commitment& com, uint32_t alpha,
                 const Pok1Response& rsp) {
  const size_t n = inst.H.cols();
  if (aux.size() != 2 || rsp.alpha != alpha) return false;
  if (alpha == 0) {
    if (rsp.z1.size() != n || rsp.z2.size() != n) return false;
    const bool b1 = com_perm_vec(rsp.r_aux, rsp.z1, inst.H.mul_vec(rsp.z2) + inst.y) == aux[0];
    const bool b2 = com_vec(rsp.r, apply_perm(rsp.z1, rsp.z2)) == com;
    return b1 && b2;
  }
  if (alpha == 1) {
    if (rsp.z3.size() != n || rsp.z4.size() != n) return false;
    const bool b1 = com_vec(rsp.r_aux, rsp.z3) == aux[1];
    const bool b2 = com_vec(rsp.r, rsp.z3 + rsp.z4) == com;
    const bool b3 = rsp.z4.weight() == inst.w;
    return b1 && b2 && b3;
  }
  return false;
}

SdWitness pok1_extract(const SdInstance& inst, const Transcript1& t, const Transcript1& t2) {
  if (t.aux != t2.aux || t.com != t2.com) throw ExtractError("transcripts do not share (aux, com)");
  if (t.alpha == t2.alpha) throw ExtractError("transcripts share the same challenge");
  if (!pok1_verify(inst, t.aux, t.com, t.alpha, t.rsp) || !pok1_verify(inst, t2.aux, t2.com, t2.alpha, t2.rsp))
    throw ExtractError("transcript does not verify");
  const Pok1Response& r0 = t.alpha == 0 ? t.rsp : t2.rsp;
  const Pok1Response& r1 = t.alpha == 0 ? t2.rsp : t.rsp;
  SdWitness out{apply_perm(invert_perm(r0.z1), r1.z4)};
  if (!is_witness(inst, out)) throw ExtractError("extracted vector is not a witness; commitment binding broken");
  return out;
}

Transcript1 pok1_simulate(const SdInstance& inst, const Seed& theta, uint32_t alpha, const Seed& coins) {
  const size_t n = inst.H.cols();
  const auto m = pok1_material(theta, n);
  Transcript1 t;
  t.aux = pok1_setup(theta, inst).aux;
  t.alpha = alpha;
  t.rsp.alpha = alpha;
  t.rsp.r = prover_rand(coins);
  if (alpha == 0) {
    const BitVec xt = solve_linear(inst.H.dense(), inst.y);
    t.rsp.r_aux = m.r0;
    t.rsp.z1 = m.pi;
    t.rsp.z2 = m.u + xt;
    t.com = com_vec(t.rsp.r, apply_perm(m.pi, t.rsp.z2));
  } else if (alpha == 1) {
    const BitVec xt = sample_fixed_weight(coins, {Ctx::kSimRand}, n, inst.w);
    t.rsp.r_aux = m.r1;
    t.rsp.z3 = apply_perm(m.pi, m.u);
    t.rsp.z4 = apply_perm(m.pi, xt);
    t.com = com_vec(t.rsp.r, t.rsp.z3 + t.rsp.z4);
  } else {
    throw ParamError("PoK 1 challenge must be 0 or 1");
  }
  return t;
}

// ---- PoK 2 / PoK 3 ----

std::vector<PartyMaterial> derive_parties(const Seed& theta, uint32_t N, size_t n, size_t k) {
  check_n(N);
  const SeedTree tree(theta, N);
  std::vector<PartyMaterial> out;
  out.reserve(N);
  for (const Seed& t : tree.leaves()) out.push_back(party_from_seed(t, n, k));
  return out;
}

PartyMaterial derive_party(const Seed& theta_i, size_t n, size_t k) { return party_from_seed(theta_i, n, k); }

std::pair<Permutation, BitVec> pok3_aggregate(const std::vector<PartyMaterial>& parties) {
  Permutation pi = parties.at(0).pi;
  BitVec v = parties[0].v;
  for (size_t i = 1; i < parties.size(); ++i) {
    pi = compose_perms(parties[i].pi, pi);
    v = apply_perm(parties[i].pi, v) + parties[i].v;
  }
  return {std::move(pi), std::move(v)};
}

HelperOutput pok2_setup(const Seed& theta, const GsdInstance& inst, uint32_t N) {
  const auto parties = derive_parties(theta, N, inst.G.cols(), inst.G.rows());
  const BitVec base = inst.y + inst.G.vec_mul(sum_u(parties, inst.G.rows()));
  HelperOutput out{{}, theta};
  for (size_t i = 0; i < N; ++i)
    out.aux.push_back(com_party(parties[i].r, apply_perm(parties[i].pi, base) + parties[i].v, seeds_except(parties, i)));
  return out;
}

HelperOutput pok3_setup(const Seed& theta, const GsdInstance& inst, uint32_t N) {
  const auto parties = derive_parties(theta, N, inst.G.cols(), inst.G.rows());
  const auto [pi, v] = pok3_aggregate(parties);
  const BitVec t = apply_perm(pi, inst.y + inst.G.vec_mul(sum_u(parties, inst.G.rows()))) + v;
  return {helper_aux(parties, t), theta};
}

namespace {

std::pair<Commitment, PokNState> pokn_p1(const GsdWitness& wit, const GsdInstance& inst, const Seed& theta,
                                         uint32_t N, const Seed& coins, bool chained) {
  const size_t n = inst.G.cols(), k = inst.G.rows();
  if (wit.x.size() != k || wit.e.size() != n) throw DimensionError("witness shape does not match G");
  PokNState st;
  st.parties = derive_parties(theta, N, n, k);
  st.u = sum_u(st.parties, k);
  st.x = wit.x;
  st.e = wit.e;
  st.r = prover_rand(coins);
  const BitVec ux = st.u + st.x;
  const BitVec s0 = inst.G.vec_mul(ux);
  st.s.resize(N);
  for (size_t i = 0; i < N; ++i) {
    const BitVec& prev = chained && i > 0 ? st.s[i - 1] : s0;
    st.s[i] = apply_perm(st.parties[i].pi, prev) + st.parties[i].v;
  }
  const Commitment com = com_masked(st.r, ux, st.s);
  return {com, std::move(st)};
}

PokNResponse pokn_p2(const PokNState& st, uint32_t alpha, const BitVec& z2) {
  const uint32_t N = static_cast<uint32_t>(st.parties.size());
  if (alpha < 1 || alpha > N) throw ParamError("challenge must lie in [1, N]");
  const PartyMaterial& pa = st.parties[alpha - 1];
  return {alpha, pa.r, st.r, pa.u + st.x, z2, st.s[alpha - 1], seeds_except(st.parties, alpha - 1)};
}

}  // namespace

std::pair<Commitment, PokNState> pok2_p1(const GsdWitness& wit, const GsdInstance& inst, const Seed& theta,
                                         uint32_t N, const Seed& coins) {
  return pokn_p1(wit, inst, theta, N, coins, false);
}

std::pair<Commitment, PokNState> pok3_p1(const GsdWitness& wit, const GsdInstance& inst, const Seed& theta,
                                         uint32_t N, const Seed& coins) {
  return pokn_p1(wit, inst, theta, N, coins, true);
}

PokNResponse pok2_p2(const PokNState& st, uint32_t alpha) {
  if (alpha < 1 || alpha > st.parties.size()) throw ParamError("challenge must lie in [1, N]");
  return pokn_p2(st, alpha, apply_perm(st.parties[alpha - 1].pi, st.e));
}

PokNResponse pok3_p2(const PokNState& st, uint32_t alpha) {
  return pokn_p2(st, alpha, apply_perm(pok3_aggregate(st.parties).first, st.e));
}

bool pok2_verify(const GsdInstance& inst, const std::vector<Commitment>& aux, const Commitment& com, uint32_t alpha,
                 const PokNResponse& rsp, uint32_t N) {
  return pokn_verify(inst, aux, com, alpha, rsp, N, false);
}

bool pok3_verify(const GsdInstance& inst, const std::vector<Commitment>& aux, const Commitment& com, uint32_t alpha,
                 const PokNResponse& rsp, uint32_t N) {
  return pokn_verify(inst, aux, com, alpha, rsp, N, true);
}

GsdWitness pok2_extract(const GsdInstance& inst, const TranscriptN& t, const TranscriptN& t2, uint32_t N) {
  check_extract_pair(t, t2);
  if (!pok2_verify(inst, t.aux, t.com, t.alpha, t.rsp, N) || !pok2_verify(inst, t2.aux, t2.com, t2.alpha, t2.rsp, N))
    throw ExtractError("transcript does not verify");
  const auto seeds = all_seeds(t, t2, N);
  const PartyMaterial pa = party_from_seed(seeds[t.alpha - 1], inst.G.cols(), inst.G.rows());
  GsdWitness out{t.rsp.z1 + pa.u, apply_perm(invert_perm(pa.pi), t.rsp.z2)};
  if (!is_witness(inst, out)) throw ExtractError("extracted pair is not a witness; commitment binding broken");
  return out;
}

GsdWitness pok3_extract(const GsdInstance& inst, const TranscriptN& t, const TranscriptN& t2, uint32_t N) {
  check_extract_pair(t, t2);
  if (!pok3_verify(inst, t.aux, t.com, t.alpha, t.rsp, N) || !pok3_verify(inst, t2.aux, t2.com, t2.alpha, t2.rsp, N))
    throw ExtractError("transcript does not verify");
  const auto seeds = all_seeds(t, t2, N);
  std::vector<PartyMaterial> parties;
  for (const Seed& s : seeds) parties.push_back(party_from_seed(s, inst.G.cols(), inst.G.rows()));
  const Permutation pi = pok3_aggregate(parties).first;
  GsdWitness out{t.rsp.z1 + parties[t.alpha - 1].u, apply_perm(invert_perm(pi), t.rsp.z2)};
  if (!is_witness(inst, out)) throw ExtractError("extracted pair is not a witness; commitment binding broken");
  return out;
}

namespace {

struct SimBase {
  std::vector<PartyMaterial> parties;
  BitVec u, xt, et, ydiff;  // ydiff = y + (xt G + et)
};

SimBase sim_base(const GsdInstance& inst, const Seed& theta, uint32_t alpha, uint32_t N, const Seed& coins) {
  const size_t n = inst.G.cols(), k = inst.G.rows();
  SimBase b;
  b.parties = derive_parties(theta, N, n, k);
  if (alpha < 1 || alpha > N) throw ParamError("challenge must lie in [1, N]");
  b.u = sum_u(b.parties, k);
  b.xt = sample_vec(coins, {Ctx::kSimRand, 0}, k);
  b.et = sample_fixed_weight(coins, {Ctx::kSimRand, 1}, n, inst.w);
  b.ydiff = inst.y + inst.G.vec_mul(b.xt) + b.et;
  return b;
}

TranscriptN sim_finish(std::vector<Commitment> aux, const SimBase& b, uint32_t alpha, std::vector<BitVec> s,
                       BitVec z2, const Seed& coins) {
  TranscriptN t;
  t.aux = std::move(aux);
  t.alpha = alpha;
  const PartyMaterial& pa = b.parties[alpha - 1];
  t.rsp = {alpha, pa.r, prover_rand(coins), pa.u + b.xt, std::move(z2), s[alpha - 1], seeds_except(b.parties, alpha - 1)};
  t.com = com_masked(t.rsp.r, b.u + b.xt, s);
  return t;
}

}  // namespace

TranscriptN pok2_simulate(const GsdInstance& inst, const Seed& theta, uint32_t alpha, uint32_t N, const Seed& coins) {
  const SimBase b = sim_base(inst, theta, alpha, N, coins);
  const BitVec s0 = inst.G.vec_mul(b.u + b.xt);
  std::vector<BitVec> s(N);
  for (uint32_t i = 0; i < N; ++i) s[i] = apply_perm(b.parties[i].pi, s0) + b.parties[i].v;
  const Permutation& pa = b.parties[alpha - 1].pi;
  s[alpha - 1] += apply_perm(pa, b.ydiff);
  return sim_finish(pok2_setup(theta, inst, N).aux, b, alpha, std::move(s), apply_perm(pa, b.et), coins);
}

TranscriptN pok3_simulate(const GsdInstance& inst, const Seed& theta, uint32_t alpha, uint32_t N, const Seed& coins) {
  const SimBase b = sim_base(inst, theta, alpha, N, coins);
  const Permutation pi = pok3_aggregate(b.parties).first;
  // The correction at step alpha is (pi_N o ... o pi_{alpha+1})^-1 [pi[y - y~]],
  // i.e. pi_alpha o ... o pi_1 [y - y~], so that it surfaces at s_N as pi[y - y~].
  BitVec corr = b.ydiff;
  for (uint32_t i = 0; i < alpha; ++i) corr = apply_perm(b.parties[i].pi, corr);
  std::vector<BitVec> s(N);
  BitVec prev = inst.G.vec_mul(b.u + b.xt);
  for (uint32_t i = 0; i < N; ++i) {
    s[i] = apply_perm(b.parties[i].pi, prev) + b.parties[i].v;
    if (i + 1 == alpha) s[i] += corr;
    prev = s[i];
  }
  return sim_finish(pok3_setup(theta, inst, N).aux, b, alpha, std::move(s), apply_perm(pi, b.et), coins);
}

// ---- Serialization ----

void write_commitments(ByteWriter& w, const std::vector<Commitment>& c) {
  w.u32(static_cast<uint32_t>(c.size()));
  for (const auto& x : c) w.raw(x);
}

std::vector<Commitment> read_commitments(ByteReader& r) {
  const uint32_t count = r.u32();
  if (count > r.remaining() / kComBytes) throw ParseError("commitment list longer than input");
  std::vector<Commitment> out(count);
  for (auto& c : out) c = read_array<Commitment>(r);
  return out;
}

Bytes serialize(const Pok1Response& rsp) {
  ByteWriter w;
  w.u32(rsp.alpha);
  w.raw(rsp.r_aux);
  w.raw(rsp.r);
  if (rsp.alpha == 0) {
    w.field(rsp.z1.to_bytes());
    w.field(rsp.z2.to_bytes());
  } else {
    w.field(rsp.z3.to_bytes());
    w.field(rsp.z4.to_bytes());
  }
  return w.take();
}

namespace {

Pok1Response read_pok1_response(ByteReader& r, size_t n) {
  Pok1Response rsp;
  rsp.alpha = r.u32();
  if (rsp.alpha > 1) throw ParseError("PoK 1 challenge out of range");
  rsp.r_aux = read_array<Seed>(r);
  rsp.r = read_array<Seed>(r);
  if (rsp.alpha == 0) {
    rsp.z1 = Permutation::from_bytes(r.field(), n);
    rsp.z2 = BitVec::from_bytes(r.field(), n);
  } else {
    rsp.z3 = BitVec::from_bytes(r.field(), n);
    rsp.z4 = BitVec::from_bytes(r.field(), n);
  }
  return rsp;
}

PokNResponse read_pokn_response(ByteReader& r, size_t n, size_t k) {
  PokNResponse rsp;
  rsp.alpha = r.u32();
  rsp.r_alpha = read_array<Seed>(r);
  rsp.r = read_array<Seed>(r);
  rsp.z1 = BitVec::from_bytes(r.field(), k);
  rsp.z2 = BitVec::from_bytes(r.field(), n);
  rsp.z3 = BitVec::from_bytes(r.field(), n);
  rsp.z4 = read_seeds(r);
  return rsp;
}

}  // namespace

Pok1Response parse_pok1_response(ByteSpan b, size_t n) {
  ByteReader r(b);
  auto rsp = read_pok1_response(r, n);
  r.expect_end();
  return rsp;
}

Bytes serialize(const PokNResponse& rsp) {
  ByteWriter w;
  w.u32(rsp.alpha);
  w.raw(rsp.r_alpha);
  w.raw(rsp.r);
  w.field(rsp.z1.to_bytes());
  w.field(rsp.z2.to_bytes());
  w.field(rsp.z3.to_bytes());
  write_seeds(w, rsp.z4);
  return w.take();
}

PokNResponse parse_pokn_response(ByteSpan b, size_t n, size_t k) {
  ByteReader r(b);
  auto rsp = read_pokn_response(r, n, k);
  r.expect_end();
  return rsp;
}

Bytes serialize(const Transcript1& t) {
  ByteWriter w;
  write_commitments(w, t.aux);
  w.raw(t.com);
  w.u32(t.alpha);
  w.field(serialize(t.rsp));
  return w.take();
}

Transcript1 parse_transcript1(ByteSpan b, size_t n) {
  ByteReader r(b);
  Transcript1 t;
  t.aux = read_commitments(r);
  t.com = read_array<Commitment>(r);
  t.alpha = r.u32();
  t.rsp = parse_pok1_response(r.field(), n);
  r.expect_end();
  return t;
}

Bytes serialize(const TranscriptN& t) {
  ByteWriter w;
  write_commitments(w, t.aux);
  w.raw(t.com);
  w.u32(t.alpha);
  w.field(serialize(t.rsp));
  return w.take();
}

TranscriptN parse_transcript_n(ByteSpan b, size_t n, size_t k) {
  ByteReader r(b);
  TranscriptN t;
  t.aux = read_commitments(r);
  t.com = read_array<Commitment>(r);
  t.alpha = r.u32();
  t.rsp = parse_pokn_response(r.field(), n, k);
  r.expect_end();
  return t;
}

}  // namespace sdsig
