#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sdsig/sig.hpp"

using namespace sdsig;

namespace {

const Scheme kSchemes[] = {Scheme::kSig1_3r, Scheme::kSig1_5r, Scheme::kSig2, Scheme::kSig3};

Seed seed_of(uint64_t i, uint8_t tag = 0) {
  Seed s{};
  for (int j = 0; j < 8; ++j) s[j] = static_cast<uint8_t>(i >> (8 * j));
  s[15] = tag;
  return s;
}

Bytes msg_of(uint64_t i) {
  Bytes m;
  for (uint64_t j = 0; j < 1 + i % 37; ++j) m.push_back(static_cast<uint8_t>(i * 31 + j));
  return m;
}

const ParamSet& toy() { return find_paramset("toy"); }

std::string name_of(const testing::TestParamInfo<Scheme>& i) {
  std::string s = scheme_name(i.param);
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

}  // namespace

TEST(Keys, PublicKeySizes) {
  EXPECT_EQ(public_key_bytes(Scheme::kSig1_3r, find_paramset("sig1-3r-qcsd")), 94u);
  EXPECT_EQ(public_key_bytes(Scheme::kSig1_3r, find_paramset("sig1-3r-sd")), 16u + 75u);
  EXPECT_EQ(public_key_bytes(Scheme::kSig2, find_paramset("sig2-n16")), 16u + 155u);
  EXPECT_EQ(secret_key_bytes(Scheme::kSig3, find_paramset("sig3-n32")), 16u + 16u + 155u);
  const auto kp = keygen(Scheme::kSig1_3r, find_paramset("sig1-3r-qcsd"), seed_of(1));
  EXPECT_EQ(kp.pk.to_bytes().size(), 94u);
}

TEST(Keys, DeterministicAndConsistent) {
  for (Scheme s : kSchemes) {
    const auto a = keygen(s, toy(), seed_of(7)), b = keygen(s, toy(), seed_of(7));
    EXPECT_EQ(a.sk.to_bytes(), b.sk.to_bytes());
    EXPECT_NE(a.pk.to_bytes(), keygen(s, toy(), seed_of(8)).pk.to_bytes());
    EXPECT_EQ(PublicKey::from_bytes(s, toy(), a.pk.to_bytes()), a.pk);
    const auto sk = SecretKey::from_bytes(s, toy(), a.sk.to_bytes());
    EXPECT_EQ(sk.rho1, a.sk.rho1);
    EXPECT_EQ(sk.pk, a.pk);
    if (scheme_uses_gsd(s)) {
      const auto w = gsd_witness(a.sk);
      EXPECT_TRUE(is_witness(gsd_instance(a.pk), w));
      EXPECT_EQ(w.e.weight(), toy().w);
    } else {
      const auto w = sd_witness(a.sk);
      EXPECT_TRUE(is_witness(sd_instance(a.pk), w));
      EXPECT_EQ(w.x.weight(), toy().w);
    }
  }
}

TEST(Keys, FullSizeWitnesses) {
  for (const char* name : {"sig1-3r-qcsd", "sig1-3r-sd", "sig2-n16"}) {
    const auto& p = find_paramset(name);
    const Scheme s = *p.scheme;
    const auto kp = keygen(s, p, seed_of(3));
    if (scheme_uses_gsd(s)) EXPECT_TRUE(is_witness(gsd_instance(kp.pk), gsd_witness(kp.sk))) << name;
    else EXPECT_TRUE(is_witness(sd_instance(kp.pk), sd_witness(kp.sk))) << name;
  }
}

TEST(Keys, Errors) {
  EXPECT_THROW(keygen(Scheme::kSig2, find_paramset("sig1-3r-qcsd"), seed_of(1)), ParamError);
  ParamSet p = toy();
  p.lambda = 192;
  EXPECT_THROW(keygen(Scheme::kSig1_3r, p, seed_of(1)), ParamError);
  const auto kp = keygen(Scheme::kSig1_3r, toy(), seed_of(1));
  Bytes b = kp.pk.to_bytes();
  b.pop_back();
  EXPECT_THROW(PublicKey::from_bytes(Scheme::kSig1_3r, toy(), b), ParseError);
}

class SigScheme : public testing::TestWithParam<Scheme> {};

TEST_P(SigScheme, ThousandToyRoundTrips) {
  const Scheme s = GetParam();
  int accepted = 0;
  for (uint64_t i = 0; i < 1000; ++i) {
    const auto kp = keygen(s, toy(), seed_of(i / 50, 1));
    const Bytes m = msg_of(i);
    if (verify(kp.pk, m, sign(kp.sk, m, seed_of(i, 2))) == Verdict::kAccept) ++accepted;
  }
  EXPECT_EQ(accepted, 1000);
}

TEST_P(SigScheme, WrongKeyOrMessageRejects) {
  const Scheme s = GetParam();
  const auto kp = keygen(s, toy(), seed_of(1)), other = keygen(s, toy(), seed_of(2));
  const Bytes m = msg_of(5), sig = sign(kp.sk, m, seed_of(9));
  EXPECT_EQ(verify(kp.pk, m, sig), Verdict::kAccept);
  EXPECT_EQ(verify(other.pk, m, sig), Verdict::kReject);
  EXPECT_EQ(verify(kp.pk, msg_of(6), sig), Verdict::kReject);
}

TEST_P(SigScheme, Determinism) {
  const Scheme s = GetParam();
  const auto kp = keygen(s, toy(), seed_of(4));
  const Bytes m = msg_of(11);
  EXPECT_EQ(sign(kp.sk, m, seed_of(1)), sign(kp.sk, m, seed_of(1)));
  EXPECT_NE(sign(kp.sk, m, seed_of(1)), sign(kp.sk, m, seed_of(2)));
}

TEST_P(SigScheme, FiveHundredBitFlipsNeverVerify) {
  const Scheme s = GetParam();
  const auto kp = keygen(s, toy(), seed_of(5));
  const Bytes m = msg_of(3);
  const Bytes sig = sign(kp.sk, m, seed_of(6));
  ASSERT_EQ(verify(kp.pk, m, sig), Verdict::kAccept);
  std::mt19937_64 rng(99 + static_cast<int>(s));
  int reject = 0, malformed = 0;
  for (int t = 0; t < 500; ++t) {
    Bytes bad = sig;
    const size_t bit = rng() % (bad.size() * 8);
    bad[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    const Verdict v = verify(kp.pk, m, bad);
    ASSERT_NE(v, Verdict::kAccept) << "bit " << bit;
    (v == Verdict::kReject ? reject : malformed)++;
  }
  EXPECT_EQ(reject + malformed, 500);
}

TEST_P(SigScheme, TruncationAndExtension) {
  const Scheme s = GetParam();
  const auto kp = keygen(s, toy(), seed_of(5));
  const Bytes m = msg_of(3), sig = sign(kp.sk, m, seed_of(6));
  // Too short to hold the commitments: the challenge cannot be derived.
  for (size_t cut : {size_t{0}, size_t{1}, size_t{10}})
    EXPECT_EQ(verify(kp.pk, m, ByteSpan(sig).first(cut)), Verdict::kMalformed) << cut;
  EXPECT_EQ(verify(kp.pk, m, ByteSpan(sig).first(sig.size() - 1)), Verdict::kReject);
  Bytes longer = sig;
  longer.push_back(0);
  EXPECT_EQ(verify(kp.pk, m, longer), Verdict::kReject);
  EXPECT_EQ(sig.size(), scheme_uses_gsd(s) ? sign_bytes(s, toy(), challenge_3r(kp.pk, m, parse_sig_h(sig)).K,
                                                        challenge_3r(kp.pk, m, parse_sig_h(sig)).A)
                                           : sig.size());
}

TEST(SigLength, MatchesSerializedSizeForEveryScheme) {
  for (Scheme s : kSchemes) {
    const auto kp = keygen(s, toy(), seed_of(31));
    for (uint64_t i = 0; i < 50; ++i) {
      const Bytes m = msg_of(i), sig = sign(kp.sk, m, seed_of(i, 3));
      size_t want = 0;
      if (s == Scheme::kSig1_5r) {
        const auto sg = sign_sig1(kp.sk, m, seed_of(i, 3));
        want = sig1_bytes(s, toy(), challenge_5r_k(kp.pk, m, sg.h), challenge_5r_a(kp.pk, m, sg.h, *sg.h2));
      } else {
        const auto c = challenge_3r(kp.pk, m, parse_sig_h(sig));
        want = scheme_uses_gsd(s) ? sign_bytes(s, toy(), c.K, c.A) : sig1_bytes(s, toy(), c.K, c.A);
      }
      EXPECT_EQ(sig.size(), want) << scheme_name(s) << " " << i;
    }
  }
}

TEST_P(SigScheme, ChallengeBinding) {
  const Scheme s = GetParam();
  const auto kp = keygen(s, toy(), seed_of(12));
  Commitment h{};
  h[0] = 1;
  std::set<std::pair<IndexSet, std::vector<uint32_t>>> seen;
  int changed = 0;
  SigChallenge prev;
  for (uint64_t i = 0; i < 1000; ++i) {
    const Bytes m = {static_cast<uint8_t>(i), static_cast<uint8_t>(i >> 8), 0x5a};
    SigChallenge c;
    if (s == Scheme::kSig1_5r) {
      c.K = challenge_5r_k(kp.pk, m, h);
      c.A = challenge_5r_a(kp.pk, m, h, h);
    } else {
      c = challenge_3r(kp.pk, m, h);
    }
    ASSERT_EQ(c.K.size(), toy().tau);
    ASSERT_EQ(c.A.size(), toy().tau);
    if (i > 0 && !(c == prev)) ++changed;
    prev = c;
  }
  EXPECT_GE(changed, 990);
}

TEST_P(SigScheme, TypedRoundTrip) {
  const Scheme s = GetParam();
  const auto kp = keygen(s, toy(), seed_of(13));
  const Bytes m = msg_of(1);
  if (scheme_uses_gsd(s)) {
    const auto sig = sign_sign(kp.sk, m, seed_of(2));
    const Bytes b = serialize(sig, s, toy());
    const auto c = challenge_3r(kp.pk, m, sig.h);
    EXPECT_EQ(parse_sign(b, s, toy(), c.K, c.A), sig);
    EXPECT_EQ(sig.rsp.size(), toy().tau);
    for (const auto& r : sig.rsp) {
      EXPECT_EQ(r.z2.weight(), toy().w);
      EXPECT_EQ(r.z4.size(), 2u);  // log2 N seeds for one hidden leaf of 4
    }
  } else {
    const auto sig = sign_sig1(kp.sk, m, seed_of(2));
    const Bytes b = serialize(sig, toy());
    IndexSet K;
    std::vector<uint32_t> A;
    if (s == Scheme::kSig1_5r) {
      K = challenge_5r_k(kp.pk, m, sig.h);
      A = challenge_5r_a(kp.pk, m, sig.h, *sig.h2);
    } else {
      auto c = challenge_3r(kp.pk, m, sig.h);
      K = c.K;
      A = c.A;
    }
    EXPECT_EQ(parse_sig1(b, s, toy(), K, A), sig);
    for (const auto& r : sig.rsp)
      if (r.alpha == 1) EXPECT_EQ(r.z.weight(), toy().w);
  }
}

INSTANTIATE_TEST_SUITE_P(All, SigScheme, testing::ValuesIn(kSchemes), name_of);

TEST(CrossScheme, Sig2SignatureUnderSig3Verifier) {
  const auto kp = keygen(Scheme::kSig2, toy(), seed_of(21));
  PublicKey as3 = kp.pk;
  as3.scheme = Scheme::kSig3;
  for (uint64_t i = 0; i < 20; ++i) {
    const Bytes m = msg_of(i), sig = sign(kp.sk, m, seed_of(i));
    EXPECT_NE(verify(as3, m, sig), Verdict::kAccept);
  }
  const auto k1 = keygen(Scheme::kSig1_3r, toy(), seed_of(21));
  PublicKey as5 = k1.pk;
  as5.scheme = Scheme::kSig1_5r;
  EXPECT_NE(verify(as5, msg_of(0), sign(k1.sk, msg_of(0), seed_of(0))), Verdict::kAccept);
}

TEST(Sig1FiveRound, SecondCommitmentDependsOnK) {
  const auto kp = keygen(Scheme::kSig1_5r, toy(), seed_of(31));
  int differ = 0;
  for (uint64_t i = 0; i < 20; ++i) {
    const auto a = sign_sig1(kp.sk, msg_of(2 * i), seed_of(1)), b = sign_sig1(kp.sk, msg_of(2 * i + 1), seed_of(1));
    if (challenge_5r_k(kp.pk, msg_of(2 * i), a.h) != challenge_5r_k(kp.pk, msg_of(2 * i + 1), b.h)) {
      EXPECT_NE(*a.h2, *b.h2);
      ++differ;
    }
  }
  EXPECT_GE(differ, 19);
  // Splicing h' from another signature breaks verification.
  auto a = sign_sig1(kp.sk, msg_of(0), seed_of(1));
  const auto b = sign_sig1(kp.sk, msg_of(0), seed_of(2));
  a.h2 = b.h2;
  EXPECT_NE(verify_sig1(kp.pk, msg_of(0), a), Verdict::kAccept);
}

TEST(Sig1, TamperedResponsesReject) {
  for (Scheme s : {Scheme::kSig1_3r, Scheme::kSig1_5r}) {
    const auto kp = keygen(s, toy(), seed_of(41));
    const auto sig = sign_sig1(kp.sk, msg_of(0), seed_of(3));
    ASSERT_EQ(verify_sig1(kp.pk, msg_of(0), sig), Verdict::kAccept);
    for (size_t j = 0; j < sig.rsp.size(); ++j) {
      auto bad = sig;
      bad.rsp[j].z.flip(0);
      EXPECT_NE(verify_sig1(kp.pk, msg_of(0), bad), Verdict::kAccept);
      bad = sig;
      bad.rsp[j].other[3] ^= 1;
      EXPECT_EQ(verify_sig1(kp.pk, msg_of(0), bad), Verdict::kReject);
      bad = sig;
      bad.rsp[j].alpha ^= 1;
      EXPECT_EQ(verify_sig1(kp.pk, msg_of(0), bad), Verdict::kReject);
    }
  }
}

TEST(Sig2, WrongWeightRejects) {
  const auto kp = keygen(Scheme::kSig2, toy(), seed_of(51));
  auto sig = sign_sign(kp.sk, msg_of(0), seed_of(1));
  ASSERT_EQ(verify_sign(kp.pk, msg_of(0), sig), Verdict::kAccept);
  // One more set bit: weight w + 1.
  size_t i = 0;
  while (sig.rsp[0].z2.get(i)) ++i;
  sig.rsp[0].z2.set(i);
  EXPECT_EQ(verify_sign(kp.pk, msg_of(0), sig), Verdict::kReject);
  // And the wire form cannot carry it at all.
  EXPECT_THROW(serialize(sig, Scheme::kSig2, toy()), WeightError);
}

TEST(Sig3, TamperedCom1Rejects) {
  const auto kp = keygen(Scheme::kSig3, toy(), seed_of(61));
  const auto sig = sign_sign(kp.sk, msg_of(0), seed_of(1));
  ASSERT_EQ(verify_sign(kp.pk, msg_of(0), sig), Verdict::kAccept);
  for (size_t j = 0; j < sig.rsp.size(); ++j) {
    auto bad = sig;
    bad.rsp[j].com1_alpha[0] ^= 0x80;
    EXPECT_EQ(verify_sign(kp.pk, msg_of(0), bad), Verdict::kReject);
  }
}

TEST(SigN, TamperedSeedsReject) {
  for (Scheme s : {Scheme::kSig2, Scheme::kSig3}) {
    const auto kp = keygen(s, toy(), seed_of(71));
    const auto sig = sign_sign(kp.sk, msg_of(0), seed_of(1));
    auto bad = sig;
    bad.reveal[0][0] ^= 1;
    EXPECT_EQ(verify_sign(kp.pk, msg_of(0), bad), Verdict::kReject);
    bad = sig;
    bad.rsp[0].z4[0][0] ^= 1;
    EXPECT_EQ(verify_sign(kp.pk, msg_of(0), bad), Verdict::kReject);
    bad = sig;
    bad.xi[0] ^= 1;
    EXPECT_EQ(verify_sign(kp.pk, msg_of(0), bad), Verdict::kReject);
  }
}

TEST(FullParams, OneRoundTripPerScheme) {
  for (const char* name : {"sig1-3r-qcsd", "sig1-5r-sd", "sig2-n16", "sig3-n16"}) {
    const auto& p = find_paramset(name);
    const auto kp = keygen(*p.scheme, p, seed_of(81));
    const Bytes m = msg_of(8), sig = sign(kp.sk, m, seed_of(82));
    EXPECT_EQ(verify(kp.pk, m, sig), Verdict::kAccept) << name;
    const double est = size_estimate_bits(*p.scheme, p) / 8;
    EXPECT_NEAR(sig.size() / est, 1.0, 0.08) << name << " " << sig.size();
  }
}
