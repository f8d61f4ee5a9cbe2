#include "sdsig/fixed_weight.hpp"
#include "sdsig/sig.hpp"
#include "sig_common.hpp"

namespace sdsig {

namespace {

void check_sign(Scheme s) {
  if (!scheme_uses_gsd(s)) throw ParamError("not a Sig2/Sig3 scheme");
}

Bytes concat_seeds(const std::vector<Seed>& seeds, size_t skip) {
  Bytes b;
  b.reserve(seeds.size() * kSeedBytes);
  for (size_t j = 0; j < seeds.size(); ++j)
    if (j != skip) b.insert(b.end(), seeds[j].begin(), seeds[j].end());
  return b;
}

// Sig2 party commitment com_i = Com(r_i, field(t_i) || field(theta_{i*})).
Commitment party_com(const Seed& r, const BitVec& t, const std::vector<Seed>& seeds, size_t i) {
  return detail::com_fields(r, {t.to_bytes(), concat_seeds(seeds, i)});
}

Commitment rep_com(const Seed& r, const BitVec& z1, const std::vector<BitVec>& s) {
  ByteWriter w;
  w.field(z1.to_bytes());
  for (const auto& si : s) w.field(si.to_bytes());
  return commit(r, w.bytes());
}

void append(Bytes& b, const Commitment& c) { b.insert(b.end(), c.begin(), c.end()); }

struct Context {
  Scheme scheme;
  const ParamSet& p;
  const CodeMatrix& G;
  const BitVec& y;
  const Seed& xi;
  bool chained() const { return scheme == Scheme::kSig3; }
};

// Every aux commitment of setup k; base = y + uG.
std::vector<Commitment> setup_aux(const Context& c, uint32_t k, const std::vector<PartyMaterial>& parties,
                                  const BitVec& base) {
  const uint32_t N = c.p.N;
  std::vector<Seed> seeds;
  for (const auto& pm : parties) seeds.push_back(pm.theta);
  std::vector<Commitment> aux;
  if (!c.chained()) {
    for (uint32_t i = 0; i < N; ++i)
      aux.push_back(party_com(detail::rep_rand(c.xi, k, i + 1), apply_perm(parties[i].pi, base) + parties[i].v,
                              seeds, i));
    return aux;
  }
  BitVec t = base;
  for (uint32_t i = 0; i < N; ++i) {
    aux.push_back(commit(detail::rep_rand(c.xi, k, i + 1), parties[i].theta));
    t = apply_perm(parties[i].pi, t) + parties[i].v;
  }
  aux.push_back(detail::com_fields(detail::rep_rand(c.xi, k, N + 1), {t.to_bytes()}));
  return aux;
}

BitVec sum_u(const std::vector<PartyMaterial>& parties, size_t k) {
  BitVec u(k);
  for (const auto& pm : parties) u += pm.u;
  return u;
}

// Sig2 puts the Merkle root over its N commitments into h, Sig3 all N + 1.
void add_aux_to_h(Bytes& out, Scheme scheme, const std::vector<Commitment>& aux) {
  if (scheme == Scheme::kSig2) {
    append(out, merkle_root(aux));
  } else {
    for (const auto& a : aux) append(out, a);
  }
}

Commitment compute_h(const Seed& xi, const Bytes& aux_part, const Commitment& com_root) {
  return detail::com_fields(detail::global_rand(xi, 0), {aux_part, com_root});
}

std::vector<NodePos> reveal_positions(uint32_t M, const IndexSet& K) {
  return cover_positions(M, SeedTree::depth_for(M), K);
}

std::vector<NodePos> com_positions(uint32_t M, const IndexSet& K) {
  return cover_positions(M, MerkleTree::depth_for(M), K);
}

PunctureProof with_positions(const std::vector<NodePos>& pos, const std::vector<Seed>& seeds) {
  if (pos.size() != seeds.size()) throw ParseError("reveal has the wrong size");
  PunctureProof p;
  for (size_t i = 0; i < pos.size(); ++i) p.nodes.push_back({pos[i], seeds[i]});
  return p;
}

MerkleProof with_positions(const std::vector<NodePos>& pos, const std::vector<Commitment>& hashes) {
  if (pos.size() != hashes.size()) throw ParseError("Merkle proof has the wrong size");
  MerkleProof p;
  for (size_t i = 0; i < pos.size(); ++i) p.nodes.push_back({pos[i], hashes[i]});
  return p;
}

}  // namespace

SignatureSigN sign_sign(const SecretKey& sk, ByteSpan msg, const Seed& rand_seed) {
  const PublicKey& pk = sk.pk;
  check_sign(pk.scheme);
  const ParamSet& p = pk.params;
  const CodeMatrix G = expand_matrix(pk.scheme, p, pk.rho2);
  const GsdWitness wit = gsd_witness(sk);
  const BitVec xG = G.vec_mul(wit.x);
  const auto [xi, root] = detail::signing_seeds(sk.rho1, rand_seed, msg);
  const Context c{pk.scheme, p, G, pk.y, xi};
  const SeedTree tree(root, p.M);

  Bytes aux_part;
  std::vector<Commitment> coms(p.M);
  std::vector<std::vector<Commitment>> auxes(p.M);
  for (uint32_t k = 0; k < p.M; ++k) {
    const auto parties = derive_parties(tree.leaf(k), p.N, p.n, p.k);
    const BitVec u = sum_u(parties, p.k);
    const BitVec uG = G.vec_mul(u);
    auxes[k] = setup_aux(c, k, parties, pk.y + uG);
    add_aux_to_h(aux_part, pk.scheme, auxes[k]);
    std::vector<BitVec> s;
    BitVec cur = uG + xG;
    for (const auto& pm : parties) {
      if (c.chained()) {
        cur = apply_perm(pm.pi, cur) + pm.v;
        s.push_back(cur);
      } else {
        s.push_back(apply_perm(pm.pi, uG + xG) + pm.v);
      }
    }
    coms[k] = rep_com(detail::rep_rand(xi, k), u + wit.x, s);
  }
  const MerkleTree com_tree(coms);

  SignatureSigN sig;
  sig.xi = xi;
  sig.h = compute_h(xi, aux_part, com_tree.root());
  const auto ch = challenge_3r(pk, msg, sig.h);
  for (const auto& node : tree.open(ch.K).nodes) sig.reveal.push_back(node.seed);
  for (const auto& node : com_tree.open(ch.K).nodes) sig.com_nodes.push_back(node.hash);

  for (size_t j = 0; j < ch.K.size(); ++j) {
    const uint32_t kappa = ch.K[j], alpha = ch.A[j];
    const Seed& theta = tree.leaf(kappa);
    const auto parties = derive_parties(theta, p.N, p.n, p.k);
    const BitVec s0 = G.vec_mul(sum_u(parties, p.k) + wit.x);
    SigNResponse r;
    r.z1 = parties[alpha - 1].u + wit.x;
    if (c.chained()) {
      BitVec e = wit.e, cur = s0;
      for (uint32_t i = 0; i < p.N; ++i) {
        e = apply_perm(parties[i].pi, e);
        cur = apply_perm(parties[i].pi, cur) + parties[i].v;
        if (i + 1 == alpha) r.z3 = cur;
      }
      r.z2 = e;
      r.com1_alpha = auxes[kappa][alpha - 1];
    } else {
      r.z2 = apply_perm(parties[alpha - 1].pi, wit.e);
      r.z3 = apply_perm(parties[alpha - 1].pi, s0) + parties[alpha - 1].v;
      for (const auto& node : MerkleTree(auxes[kappa]).open({alpha - 1}).nodes) r.aux_path.push_back(node.hash);
    }
    for (const auto& node : SeedTree(theta, p.N).open({alpha - 1}).nodes) r.z4.push_back(node.seed);
    sig.rsp.push_back(std::move(r));
  }
  return sig;
}

Verdict verify_sign(const PublicKey& pk, ByteSpan msg, const SignatureSigN& sig) {
  check_sign(pk.scheme);
  const ParamSet& p = pk.params;
  try {
    const auto ch = challenge_3r(pk, msg, sig.h);
    if (sig.rsp.size() != ch.K.size()) return Verdict::kMalformed;
    for (const auto& r : sig.rsp)
      if (r.z1.size() != p.k || r.z2.size() != p.n || r.z3.size() != p.n) return Verdict::kMalformed;

    const auto thetas = SeedTree::recover(with_positions(reveal_positions(p.M, ch.K), sig.reveal), p.M, ch.K);
    const CodeMatrix G = expand_matrix(pk.scheme, p, pk.rho2);
    const Context c{pk.scheme, p, G, pk.y, sig.xi};

    std::vector<std::vector<Commitment>> auxes(p.M);
    for (uint32_t k = 0; k < p.M; ++k) {
      if (!thetas[k]) continue;
      const auto parties = derive_parties(*thetas[k], p.N, p.n, p.k);
      auxes[k] = setup_aux(c, k, parties, pk.y + G.vec_mul(sum_u(parties, p.k)));
    }

    bool b1 = true;
    std::vector<std::pair<uint32_t, Commitment>> known;
    std::vector<Commitment> digests(p.M);
    for (size_t j = 0; j < ch.K.size(); ++j) {
      const uint32_t kappa = ch.K[j], alpha = ch.A[j];
      const SigNResponse& r = sig.rsp[j];
      const auto leaves = SeedTree::recover(with_positions(reveal_positions(p.N, {alpha - 1}), r.z4), p.N, {alpha - 1});
      std::vector<std::optional<PartyMaterial>> parties(p.N);
      std::vector<Seed> seeds(p.N);
      BitVec z1 = r.z1;
      for (uint32_t i = 0; i < p.N; ++i) {
        if (!leaves[i]) continue;
        parties[i] = derive_party(*leaves[i], p.n, p.k);
        seeds[i] = *leaves[i];
        z1 += parties[i]->u;
      }
      const BitVec s0 = G.vec_mul(z1);
      std::vector<BitVec> s(p.N);
      BitVec cur = s0;
      for (uint32_t i = 0; i < p.N; ++i) {
        if (i + 1 == alpha) cur = r.z3;
        else if (c.chained()) cur = apply_perm(parties[i]->pi, cur) + parties[i]->v;
        else cur = apply_perm(parties[i]->pi, s0) + parties[i]->v;
        s[i] = cur;
      }
      known.push_back({kappa, rep_com(detail::rep_rand(sig.xi, kappa), z1, s)});
      b1 = b1 && r.z2.weight() == p.w;

      if (c.chained()) {
        std::vector<Commitment>& aux = auxes[kappa];
        for (uint32_t i = 0; i < p.N; ++i)
          aux.push_back(i + 1 == alpha ? r.com1_alpha : commit(detail::rep_rand(sig.xi, kappa, i + 1), seeds[i]));
        aux.push_back(detail::com_fields(detail::rep_rand(sig.xi, kappa, p.N + 1), {(s.back() + r.z2).to_bytes()}));
      } else {
        const Commitment com_alpha =
            party_com(detail::rep_rand(sig.xi, kappa, alpha), r.z3 + r.z2, seeds, alpha - 1);
        digests[kappa] = merkle_root_from(
            p.N, {{alpha - 1, com_alpha}},
            with_positions(com_positions(p.N, {alpha - 1}), r.aux_path));
      }
    }

    Bytes aux_part;
    for (uint32_t k = 0; k < p.M; ++k) {
      if (pk.scheme == Scheme::kSig3) {
        for (const auto& a : auxes[k]) append(aux_part, a);
      } else {
        append(aux_part, thetas[k] ? merkle_root(auxes[k]) : digests[k]);
      }
    }
    const Commitment com_root = merkle_root_from(p.M, known, with_positions(com_positions(p.M, ch.K), sig.com_nodes));
    const bool b2 = sig.h == compute_h(sig.xi, aux_part, com_root);
    return b1 && b2 ? Verdict::kAccept : Verdict::kReject;
  } catch (const ProofError&) {
    return Verdict::kMalformed;
  } catch (const ParseError&) {
    return Verdict::kMalformed;
  } catch (const DimensionError&) {
    return Verdict::kMalformed;
  }
}

Bytes serialize(const SignatureSigN& s, Scheme scheme, const ParamSet& p) {
  check_sign(scheme);
  ByteWriter w;
  w.raw(s.h);
  w.raw(s.xi);
  for (const Seed& r : s.reveal) w.raw(r);
  for (const Commitment& c : s.com_nodes) w.raw(c);
  for (const auto& r : s.rsp) {
    w.raw(r.z1.to_bytes());
    w.raw(encode_fixed_weight(r.z2, p.w));
    w.raw(r.z3.to_bytes());
    for (const Seed& z : r.z4) w.raw(z);
    if (scheme == Scheme::kSig2) {
      for (const Commitment& c : r.aux_path) w.raw(c);
    } else {
      w.raw(r.com1_alpha);
    }
  }
  return w.take();
}

size_t sign_bytes(Scheme scheme, const ParamSet& p, const IndexSet& K, const std::vector<uint32_t>& A) {
  check_sign(scheme);
  size_t len = kComBytes + kSeedBytes;
  len += kSeedBytes * reveal_positions(p.M, K).size() + kComBytes * com_positions(p.M, K).size();
  const size_t fixed = (p.k + 7) / 8 + (fixed_weight_code_bits(p.n, p.w) + 7) / 8 + (p.n + 7) / 8;
  for (uint32_t alpha : A) {
    if (alpha < 1 || alpha > p.N) throw ParseError("challenge out of range");
    len += fixed + kSeedBytes * reveal_positions(p.N, {alpha - 1}).size();
    len += scheme == Scheme::kSig2 ? kComBytes * com_positions(p.N, {alpha - 1}).size() : kComBytes;
  }
  return len;
}

SignatureSigN parse_sign(ByteSpan b, Scheme scheme, const ParamSet& p, const IndexSet& K,
                         const std::vector<uint32_t>& A) {
  check_sign(scheme);
  if (K.size() != A.size()) throw ParseError("challenge shape mismatch");
  ByteReader r(b);
  SignatureSigN s;
  s.h = detail::read_com(r);
  s.xi = detail::read_seed(r);
  const size_t nreveal = reveal_positions(p.M, K).size(), ncom = com_positions(p.M, K).size();
  for (size_t i = 0; i < nreveal; ++i) s.reveal.push_back(detail::read_seed(r));
  for (size_t i = 0; i < ncom; ++i) s.com_nodes.push_back(detail::read_com(r));
  const size_t kbytes = (p.k + 7) / 8, nbytes = (p.n + 7) / 8, cbytes = (fixed_weight_code_bits(p.n, p.w) + 7) / 8;
  for (uint32_t alpha : A) {
    if (alpha < 1 || alpha > p.N) throw ParseError("challenge out of range");
    SigNResponse x;
    x.z1 = BitVec::from_bytes(r.raw(kbytes), p.k);
    x.z2 = decode_fixed_weight(r.raw(cbytes), p.n, p.w);
    x.z3 = BitVec::from_bytes(r.raw(nbytes), p.n);
    const size_t nz4 = reveal_positions(p.N, {alpha - 1}).size();
    for (size_t i = 0; i < nz4; ++i) x.z4.push_back(detail::read_seed(r));
    if (scheme == Scheme::kSig2) {
      const size_t npath = com_positions(p.N, {alpha - 1}).size();
      for (size_t i = 0; i < npath; ++i) x.aux_path.push_back(detail::read_com(r));
    } else {
      x.com1_alpha = detail::read_com(r);
    }
    s.rsp.push_back(std::move(x));
  }
  r.expect_end();
  return s;
}

}  // namespace sdsig
