#include "sdsig/errors.hpp"
#include "sdsig/sig.hpp"
#include "sig_common.hpp"

namespace sdsig {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kAccept: return "accept";
    case Verdict::kReject: return "reject";
    case Verdict::kMalformed: return "malformed";
  }
  return "?";
}

namespace {

void check_usable(Scheme s, const ParamSet& p) {
  p.validate();
  p.variant_for(s);
  if (p.lambda != kLambda) throw ParamError(p.name + ": only lambda = 128 is supported for signing");
}

size_t y_bits(Scheme s, const ParamSet& p) { return scheme_uses_gsd(s) ? p.n : p.n - p.k; }

}  // namespace

size_t public_key_bytes(Scheme s, const ParamSet& p) { return kSeedBytes + (y_bits(s, p) + 7) / 8; }
size_t secret_key_bytes(Scheme s, const ParamSet& p) { return kSeedBytes + public_key_bytes(s, p); }

Bytes PublicKey::to_bytes() const {
  ByteWriter w;
  w.raw(rho2);
  w.raw(y.to_bytes());
  return w.take();
}

PublicKey PublicKey::from_bytes(Scheme s, const ParamSet& p, ByteSpan b) {
  check_usable(s, p);
  if (b.size() != public_key_bytes(s, p)) throw ParseError("public key has the wrong length");
  ByteReader r(b);
  PublicKey pk;
  pk.scheme = s;
  pk.params = p;
  pk.rho2 = detail::read_seed(r);
  pk.y = BitVec::from_bytes(r.raw(r.remaining()), y_bits(s, p));
  return pk;
}

Bytes SecretKey::to_bytes() const {
  ByteWriter w;
  w.raw(rho1);
  w.raw(pk.to_bytes());
  return w.take();
}

SecretKey SecretKey::from_bytes(Scheme s, const ParamSet& p, ByteSpan b) {
  check_usable(s, p);
  if (b.size() != secret_key_bytes(s, p)) throw ParseError("secret key has the wrong length");
  ByteReader r(b);
  SecretKey sk;
  sk.rho1 = detail::read_seed(r);
  sk.pk = PublicKey::from_bytes(s, p, r.raw(r.remaining()));
  return sk;
}

CodeMatrix expand_matrix(Scheme s, const ParamSet& p, const Seed& rho2) {
  check_usable(s, p);
  const Variant v = p.variant_for(s);
  if (variant_is_qc(v)) {
    QcMat q;
    q.form = scheme_uses_gsd(s) ? QcMat::Form::kGenerator : QcMat::Form::kParity;
    q.k = p.k;
    q.blocks.push_back({sample_vec(rho2, {Ctx::kMatrix, 0}, p.k)});
    return CodeMatrix(std::move(q));
  }
  const size_t rows = scheme_uses_gsd(s) ? p.k : p.n - p.k;
  BitMat m(rows, p.n);
  for (size_t i = 0; i < rows; ++i) m.row(i) = sample_vec(rho2, {Ctx::kMatrix, static_cast<uint32_t>(i)}, p.n);
  return CodeMatrix(std::move(m));
}

SdInstance sd_instance(const PublicKey& pk) {
  if (scheme_uses_gsd(pk.scheme)) throw ParamError("sd_instance: GSD key");
  return {expand_matrix(pk.scheme, pk.params, pk.rho2), pk.y, pk.params.w};
}

GsdInstance gsd_instance(const PublicKey& pk) {
  if (!scheme_uses_gsd(pk.scheme)) throw ParamError("gsd_instance: SD key");
  return {expand_matrix(pk.scheme, pk.params, pk.rho2), pk.y, pk.params.w};
}

SdWitness sd_witness(const SecretKey& sk) {
  const auto& p = sk.pk.params;
  return {sample_fixed_weight(sk.rho1, {Ctx::kKeyX}, p.n, p.w)};
}

GsdWitness gsd_witness(const SecretKey& sk) {
  const auto& p = sk.pk.params;
  return {sample_vec(sk.rho1, {Ctx::kKeyX}, p.k), sample_fixed_weight(sk.rho1, {Ctx::kKeyE}, p.n, p.w)};
}

KeyPair keygen(Scheme s, const ParamSet& p, const Seed& master_seed) {
  check_usable(s, p);
  SecretKey sk;
  sk.rho1 = derive_seed(master_seed, {Ctx::kKeyRho1});
  sk.pk.scheme = s;
  sk.pk.params = p;
  sk.pk.rho2 = derive_seed(master_seed, {Ctx::kKeyRho2});
  const CodeMatrix m = expand_matrix(s, p, sk.pk.rho2);
  if (scheme_uses_gsd(s)) {
    const auto wit = gsd_witness(sk);
    sk.pk.y = m.vec_mul(wit.x) + wit.e;
  } else {
    sk.pk.y = m.mul_vec(sd_witness(sk).x);
  }
  return {sk, sk.pk};
}

std::array<uint8_t, 32> message_digest(ByteSpan msg) {
  std::array<uint8_t, 32> d;
  Shake256 h;
  h.update(DomainTag{Ctx::kMsgDigest}).update(msg).finish(d.data(), d.size());
  return d;
}

namespace detail {

std::pair<Seed, Seed> signing_seeds(const Seed& rho1, const Seed& rand_seed, ByteSpan msg) {
  Seed master;
  Shake256 h;
  h.update(DomainTag{Ctx::kSignMaster}).update(rho1).update(rand_seed).update(message_digest(msg));
  h.finish(master.data(), master.size());
  return {derive_seed(master, {Ctx::kSignXi}), derive_seed(master, {Ctx::kSignTreeRoot})};
}

}  // namespace detail

namespace {

// scheme || parameters || H(m) || pk || commitments.
Bytes fs_input(const PublicKey& pk, ByteSpan msg, std::initializer_list<const Commitment*> coms) {
  const auto& p = pk.params;
  ByteWriter w;
  w.u8(static_cast<uint8_t>(pk.scheme));
  w.u8(p.id);
  for (uint32_t v : {p.n, p.k, p.w, p.M, p.N, p.tau}) w.u32(v);
  w.raw(message_digest(msg));
  w.field(pk.to_bytes());
  for (const Commitment* c : coms) w.raw(*c);
  return w.take();
}

std::pair<uint32_t, uint32_t> symbol_range(Scheme s, const ParamSet& p) {
  if (scheme_uses_gsd(s)) return {1, p.N};
  return {0, 1};
}

}  // namespace

SigChallenge challenge_3r(const PublicKey& pk, ByteSpan msg, const Commitment& h) {
  const auto& p = pk.params;
  const auto [lo, hi] = symbol_range(pk.scheme, p);
  const auto c = fs_challenge({Ctx::kFsChallenge1}, fs_input(pk, msg, {&h}), {p.M, p.tau, lo, hi, p.tau});
  return {c.subset, c.symbols};
}

IndexSet challenge_5r_k(const PublicKey& pk, ByteSpan msg, const Commitment& h) {
  const auto& p = pk.params;
  return fs_challenge({Ctx::kFsChallenge1}, fs_input(pk, msg, {&h}), {p.M, p.tau, 0, 0, 0}).subset;
}

std::vector<uint32_t> challenge_5r_a(const PublicKey& pk, ByteSpan msg, const Commitment& h, const Commitment& h2) {
  const auto& p = pk.params;
  return fs_challenge({Ctx::kFsChallenge2}, fs_input(pk, msg, {&h, &h2}), {0, 0, 0, 1, p.tau}).symbols;
}

Bytes sign(const SecretKey& sk, ByteSpan msg, const Seed& rand_seed) {
  const auto& pk = sk.pk;
  if (scheme_uses_gsd(pk.scheme)) return serialize(sign_sign(sk, msg, rand_seed), pk.scheme, pk.params);
  return serialize(sign_sig1(sk, msg, rand_seed), pk.params);
}

namespace {

// The body layout is a function of the challenge, so once the challenge is
// known a body that does not fit or decode is a rejection.
template <class F>
Verdict judge_body(F&& f) {
  try {
    const Verdict v = f();
    return v == Verdict::kAccept ? v : Verdict::kReject;
  } catch (const ParseError&) {
    return Verdict::kReject;
  } catch (const ProofError&) {
    return Verdict::kReject;
  } catch (const WeightError&) {
    return Verdict::kReject;
  }
}

}  // namespace

Verdict verify(const PublicKey& pk, ByteSpan msg, ByteSpan sig) {
  const auto& p = pk.params;
  const size_t header = kComBytes * (pk.scheme == Scheme::kSig1_5r ? 2 : 1);
  if (sig.size() < header) return Verdict::kMalformed;
  ByteReader r(sig);
  const Commitment h = detail::read_com(r);
  switch (pk.scheme) {
    case Scheme::kSig1_3r: {
      const auto c = challenge_3r(pk, msg, h);
      return judge_body([&] {
        if (sig.size() != sig1_bytes(pk.scheme, p, c.K, c.A)) return Verdict::kReject;
        return verify_sig1(pk, msg, parse_sig1(sig, pk.scheme, p, c.K, c.A));
      });
    }
    case Scheme::kSig1_5r: {
      const Commitment h2 = detail::read_com(r);
      const IndexSet K = challenge_5r_k(pk, msg, h);
      const auto A = challenge_5r_a(pk, msg, h, h2);
      return judge_body([&] {
        if (sig.size() != sig1_bytes(pk.scheme, p, K, A)) return Verdict::kReject;
        return verify_sig1(pk, msg, parse_sig1(sig, pk.scheme, p, K, A));
      });
    }
    case Scheme::kSig2:
    case Scheme::kSig3: {
      const auto c = challenge_3r(pk, msg, h);
      return judge_body([&] {
        if (sig.size() != sign_bytes(pk.scheme, p, c.K, c.A)) return Verdict::kReject;
        return verify_sign(pk, msg, parse_sign(sig, pk.scheme, p, c.K, c.A));
      });
    }
  }
  return Verdict::kMalformed;
}

}  // namespace sdsig
