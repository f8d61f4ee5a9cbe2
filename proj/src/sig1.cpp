#include "sdsig/fixed_weight.hpp"
#include "sdsig/sig.hpp"
#include "sig_common.hpp"

namespace sdsig {

namespace {

struct Setup1 {
  Seed phi, psi;
  Permutation pi;
  BitVec v;
  Commitment com0, com1;
};

// Everything a setup fixes, from theta alone: pi and r0 from phi, v and r1
// from psi, u = pi^-1[v].
Setup1 setup_from_theta(const Seed& theta, const CodeMatrix& H, size_t n) {
  Setup1 s;
  s.phi = derive_seed(theta, {Ctx::kSeedPhi});
  s.psi = derive_seed(theta, {Ctx::kSeedPsi});
  s.pi = sample_perm(s.phi, {Ctx::kPerm}, n);
  s.v = sample_vec(s.psi, {Ctx::kVecN}, n);
  const BitVec u = apply_perm(invert_perm(s.pi), s.v);
  s.com0 = detail::com_fields(derive_seed(s.phi, {Ctx::kCommitRand}), {s.pi.to_bytes(), H.mul_vec(u).to_bytes()});
  s.com1 = detail::com_fields(derive_seed(s.psi, {Ctx::kCommitRand}), {s.v.to_bytes()});
  return s;
}

Commitment pair_digest(uint32_t j, const Commitment& a, const Commitment* b) {
  Shake256 h;
  h.update(DomainTag{Ctx::kMerkleNode, j, detail::kAllIndex}).update(a);
  if (b) h.update(*b);
  Commitment out;
  h.finish(out.data(), out.size());
  return out;
}

bool in_set(const IndexSet& s, uint32_t i) { return std::binary_search(s.begin(), s.end(), i); }

// Number of commitment-pair items a 3-round signature carries for K.
size_t material_count(uint32_t M, const IndexSet& K) {
  size_t c = 0;
  for (uint32_t a = 0; a < M; a += 2) {
    const bool has_b = a + 1 < M;
    const int known = in_set(K, a) + (has_b && in_set(K, a + 1));
    if (known == 0 || (has_b && known == 1)) ++c;
  }
  return c;
}

Bytes concat_coms(const std::vector<Commitment>& cs) {
  Bytes b;
  b.reserve(cs.size() * kComBytes);
  for (const auto& c : cs) b.insert(b.end(), c.begin(), c.end());
  return b;
}

bool is_five_round(Scheme s) { return s == Scheme::kSig1_5r; }

void check_sig1(Scheme s) {
  if (s != Scheme::kSig1_3r && s != Scheme::kSig1_5r) throw ParamError("not a Sig1 scheme");
}

}  // namespace

SignatureSig1 sign_sig1(const SecretKey& sk, ByteSpan msg, const Seed& rand_seed) {
  const PublicKey& pk = sk.pk;
  check_sig1(pk.scheme);
  const ParamSet& p = pk.params;
  const bool five = is_five_round(pk.scheme);
  const CodeMatrix H = expand_matrix(pk.scheme, p, pk.rho2);
  const BitVec x = sd_witness(sk).x;
  const auto [xi, root] = detail::signing_seeds(sk.rho1, rand_seed, msg);
  const PairTrees trees(root, p.M);

  std::vector<Setup1> setups;
  setups.reserve(p.M);
  std::vector<Commitment> aux, coms(p.M);
  std::vector<BitVec> pix(p.M);
  for (uint32_t k = 0; k < p.M; ++k) {
    setups.push_back(setup_from_theta(trees.leaf(k), H, p.n));
    aux.push_back(setups[k].com0);
    aux.push_back(setups[k].com1);
    pix[k] = apply_perm(setups[k].pi, x);
    if (!five) coms[k] = detail::com_fields(detail::rep_rand(xi, k), {(setups[k].v + pix[k]).to_bytes()});
  }

  SignatureSig1 sig;
  sig.xi = xi;
  IndexSet K;
  std::vector<uint32_t> A;
  if (!five) {
    std::vector<Commitment> digests;
    for (uint32_t a = 0; a < p.M; a += 2)
      digests.push_back(pair_digest(a / 2, coms[a], a + 1 < p.M ? &coms[a + 1] : nullptr));
    sig.h = detail::com_fields(detail::global_rand(xi, 0), {concat_coms(aux), concat_coms(digests)});
    auto c = challenge_3r(pk, msg, sig.h);
    K = std::move(c.K);
    A = std::move(c.A);
    for (uint32_t a = 0; a < p.M; a += 2) {
      const bool has_b = a + 1 < p.M;
      const bool ka = in_set(K, a), kb = has_b && in_set(K, a + 1);
      if (!ka && !kb) sig.com_material.push_back(digests[a / 2]);
      else if (has_b && ka != kb) sig.com_material.push_back(ka ? coms[a + 1] : coms[a]);
    }
  } else {
    sig.h = detail::com_fields(detail::global_rand(xi, 0), {concat_coms(aux)});
    K = challenge_5r_k(pk, msg, sig.h);
    std::vector<Commitment> exec;
    for (uint32_t kappa : K)
      exec.push_back(detail::com_fields(detail::rep_rand(xi, kappa), {(setups[kappa].v + pix[kappa]).to_bytes()}));
    sig.h2 = detail::com_fields(detail::global_rand(xi, 1), {concat_coms(exec)});
    A = challenge_5r_a(pk, msg, sig.h, *sig.h2);
  }

  for (const auto& node : trees.open(K).nodes) sig.reveal.push_back(node.seed);
  for (size_t j = 0; j < K.size(); ++j) {
    const Setup1& s = setups[K[j]];
    Sig1Response r;
    r.alpha = A[j];
    if (r.alpha == 0) {
      r.seed = s.phi;
      r.z = apply_perm(invert_perm(s.pi), s.v) + x;
      r.other = s.com1;
    } else {
      r.seed = s.psi;
      r.z = pix[K[j]];
      r.other = s.com0;
    }
    sig.rsp.push_back(std::move(r));
  }
  return sig;
}

Verdict verify_sig1(const PublicKey& pk, ByteSpan msg, const SignatureSig1& sig) {
  check_sig1(pk.scheme);
  const ParamSet& p = pk.params;
  const bool five = is_five_round(pk.scheme);
  if (five != sig.h2.has_value()) return Verdict::kMalformed;
  try {
    IndexSet K;
    std::vector<uint32_t> A;
    if (five) {
      K = challenge_5r_k(pk, msg, sig.h);
      A = challenge_5r_a(pk, msg, sig.h, *sig.h2);
    } else {
      auto c = challenge_3r(pk, msg, sig.h);
      K = std::move(c.K);
      A = std::move(c.A);
    }
    if (sig.rsp.size() != K.size()) return Verdict::kMalformed;
    for (size_t j = 0; j < K.size(); ++j) {
      const auto& r = sig.rsp[j];
      if (r.alpha != A[j]) return Verdict::kReject;
      if (r.z.size() != p.n) return Verdict::kMalformed;
    }

    const auto positions = PairTrees::canonical_positions(p.M, K);
    if (positions.size() != sig.reveal.size()) return Verdict::kMalformed;
    PunctureProof proof;
    for (size_t i = 0; i < positions.size(); ++i) proof.nodes.push_back({positions[i], sig.reveal[i]});
    const auto thetas = PairTrees::recover(proof, p.M, K);

    const CodeMatrix H = expand_matrix(pk.scheme, p, pk.rho2);
    std::vector<Commitment> aux(2 * p.M);
    std::vector<std::optional<Commitment>> coms(p.M);
    bool b1 = true;
    for (uint32_t k = 0; k < p.M; ++k) {
      if (!thetas[k]) continue;
      const Setup1 s = setup_from_theta(*thetas[k], H, p.n);
      aux[2 * k] = s.com0;
      aux[2 * k + 1] = s.com1;
    }
    for (size_t j = 0; j < K.size(); ++j) {
      const uint32_t kappa = K[j];
      const Sig1Response& r = sig.rsp[j];
      const Seed rk = detail::rep_rand(sig.xi, kappa);
      if (r.alpha == 0) {
        const Permutation pi = sample_perm(r.seed, {Ctx::kPerm}, p.n);
        aux[2 * kappa] = detail::com_fields(derive_seed(r.seed, {Ctx::kCommitRand}),
                                            {pi.to_bytes(), (H.mul_vec(r.z) + pk.y).to_bytes()});
        aux[2 * kappa + 1] = r.other;
        coms[kappa] = detail::com_fields(rk, {apply_perm(pi, r.z).to_bytes()});
      } else {
        const BitVec v = sample_vec(r.seed, {Ctx::kVecN}, p.n);
        aux[2 * kappa] = r.other;
        aux[2 * kappa + 1] = detail::com_fields(derive_seed(r.seed, {Ctx::kCommitRand}), {v.to_bytes()});
        coms[kappa] = detail::com_fields(rk, {(v + r.z).to_bytes()});
        b1 = b1 && r.z.weight() == p.w;
      }
    }

    bool b2;
    if (five) {
      std::vector<Commitment> exec;
      for (uint32_t kappa : K) exec.push_back(*coms[kappa]);
      b2 = sig.h == detail::com_fields(detail::global_rand(sig.xi, 0), {concat_coms(aux)}) &&
           *sig.h2 == detail::com_fields(detail::global_rand(sig.xi, 1), {concat_coms(exec)});
    } else {
      if (sig.com_material.size() != material_count(p.M, K)) return Verdict::kMalformed;
      std::vector<Commitment> digests;
      size_t next = 0;
      for (uint32_t a = 0; a < p.M; a += 2) {
        const bool has_b = a + 1 < p.M;
        const bool ka = in_set(K, a), kb = has_b && in_set(K, a + 1);
        if (!ka && !kb) {
          digests.push_back(sig.com_material[next++]);
        } else if (has_b && ka != kb) {
          const Commitment& other = sig.com_material[next++];
          digests.push_back(ka ? pair_digest(a / 2, *coms[a], &other) : pair_digest(a / 2, other, &*coms[a + 1]));
        } else {
          digests.push_back(pair_digest(a / 2, *coms[a], has_b ? &*coms[a + 1] : nullptr));
        }
      }
      b2 = sig.h == detail::com_fields(detail::global_rand(sig.xi, 0), {concat_coms(aux), concat_coms(digests)});
    }
    return b1 && b2 ? Verdict::kAccept : Verdict::kReject;
  } catch (const ProofError&) {
    return Verdict::kMalformed;
  } catch (const ParseError&) {
    return Verdict::kMalformed;
  } catch (const DimensionError&) {
    return Verdict::kMalformed;
  }
}

Bytes serialize(const SignatureSig1& s, const ParamSet& p) {
  ByteWriter w;
  w.raw(s.h);
  if (s.h2) w.raw(*s.h2);
  w.raw(s.xi);
  for (const Seed& r : s.reveal) w.raw(r);
  for (const Commitment& c : s.com_material) w.raw(c);
  for (const auto& r : s.rsp) {
    w.raw(r.seed);
    w.raw(r.alpha == 0 ? r.z.to_bytes() : encode_fixed_weight(r.z, p.w));
    w.raw(r.other);
  }
  return w.take();
}

Commitment parse_sig_h(ByteSpan b) {
  ByteReader r(b);
  return detail::read_com(r);
}

size_t sig1_bytes(Scheme scheme, const ParamSet& p, const IndexSet& K, const std::vector<uint32_t>& A) {
  check_sig1(scheme);
  size_t len = kComBytes * (is_five_round(scheme) ? 2 : 1) + kSeedBytes;
  len += kSeedBytes * PairTrees::canonical_positions(p.M, K).size();
  if (!is_five_round(scheme)) len += kComBytes * material_count(p.M, K);
  const size_t zbytes = (p.n + 7) / 8, cbytes = (fixed_weight_code_bits(p.n, p.w) + 7) / 8;
  for (uint32_t a : A) len += kSeedBytes + (a == 0 ? zbytes : cbytes) + kComBytes;
  return len;
}

SignatureSig1 parse_sig1(ByteSpan b, Scheme scheme, const ParamSet& p, const IndexSet& K,
                         const std::vector<uint32_t>& A) {
  check_sig1(scheme);
  if (K.size() != A.size()) throw ParseError("challenge shape mismatch");
  ByteReader r(b);
  SignatureSig1 s;
  s.h = detail::read_com(r);
  if (is_five_round(scheme)) s.h2 = detail::read_com(r);
  s.xi = detail::read_seed(r);
  const size_t nreveal = PairTrees::canonical_positions(p.M, K).size();
  for (size_t i = 0; i < nreveal; ++i) s.reveal.push_back(detail::read_seed(r));
  if (!is_five_round(scheme)) {
    const size_t nmat = material_count(p.M, K);
    for (size_t i = 0; i < nmat; ++i) s.com_material.push_back(detail::read_com(r));
  }
  const size_t zbytes = (p.n + 7) / 8, cbytes = (fixed_weight_code_bits(p.n, p.w) + 7) / 8;
  for (uint32_t a : A) {
    Sig1Response x;
    x.alpha = a;
    x.seed = detail::read_seed(r);
    x.z = a == 0 ? BitVec::from_bytes(r.raw(zbytes), p.n) : decode_fixed_weight(r.raw(cbytes), p.n, p.w);
    x.other = detail::read_com(r);
    s.rsp.push_back(std::move(x));
  }
  r.expect_end();
  return s;
}

}  // namespace sdsig
