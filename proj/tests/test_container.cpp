#include <gtest/gtest.h>

#include <fstream>

#include "sdsig/container.hpp"

using namespace sdsig;

namespace {

const Scheme kSchemes[] = {Scheme::kSig1_3r, Scheme::kSig1_5r, Scheme::kSig2, Scheme::kSig3};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

Seed vector_rand_seed() {
  Seed s;
  s.fill(0x5a);
  return s;
}

}  // namespace

TEST(Container, HeaderLayout) {
  const auto& p = find_paramset("sig2-n16");
  const Bytes payload = {1, 2, 3};
  const Bytes c = wrap(Scheme::kSig2, p, payload);
  const Bytes want = {'S', 'D', 'S', '1', 0x01, 0x03, 0x05, 0, 0, 0, 3, 1, 2, 3};
  EXPECT_EQ(c, want);
  EXPECT_EQ(c.size(), kContainerHeaderBytes + payload.size());
  const Container u = unwrap(c);
  EXPECT_EQ(u.scheme, Scheme::kSig2);
  EXPECT_EQ(u.param_id, 5);
  EXPECT_EQ(u.payload, payload);
}

TEST(Container, KeysRoundTripAndKinds) {
  for (Scheme s : kSchemes) {
    const auto& p = find_paramset("toy");
    const KeyPair kp = keygen(s, p, Seed{});
    EXPECT_EQ(unwrap(wrap(kp.pk)).kind(), ObjectKind::kPublicKey);
    EXPECT_EQ(unwrap(wrap(kp.sk)).kind(), ObjectKind::kSecretKey);
    EXPECT_EQ(unwrap_public_key(wrap(kp.pk)), kp.pk);
    EXPECT_EQ(unwrap_secret_key(wrap(kp.sk)).to_bytes(), kp.sk.to_bytes());
    EXPECT_THROW(unwrap_public_key(wrap(kp.sk)), ParseError);
    EXPECT_THROW(unwrap_secret_key(wrap(kp.pk)), ParseError);
    const Bytes sig = sign(kp.sk, Bytes{1}, Seed{});
    EXPECT_EQ(unwrap(wrap(s, p, sig)).kind(), ObjectKind::kSignature);
  }
}

TEST(Container, RejectsBadHeaders) {
  const auto& p = find_paramset("sig3-n16");
  const Bytes good = wrap(Scheme::kSig3, p, Bytes(10, 7));
  auto with = [&](size_t i, uint8_t v) {
    Bytes b = good;
    b[i] = v;
    return b;
  };
  EXPECT_THROW(unwrap(with(0, 'X')), ParseError);
  EXPECT_THROW(unwrap(with(4, 2)), ParseError);          // version
  EXPECT_THROW(unwrap(with(5, 9)), ParseError);          // scheme id
  EXPECT_THROW(unwrap(with(5, 3)), ParseError);          // sig2 with a sig3 preset
  EXPECT_THROW(unwrap(with(6, 99)), ParamError);         // param id
  EXPECT_THROW(unwrap(with(10, 11)), ParseError);        // length too long
  EXPECT_THROW(unwrap(with(10, 9)), ParseError);         // trailing bytes
  EXPECT_THROW(unwrap(Bytes(good.begin(), good.begin() + 8)), ParseError);
  EXPECT_NO_THROW(unwrap(good));
}

TEST(Container, TextEncodingsAreRecognised) {
  const auto& p = find_paramset("toy");
  const Bytes c = wrap(Scheme::kSig1_5r, p, Bytes{9, 8, 7, 6, 5});
  for (auto f : {TextFormat::kBinary, TextFormat::kHex, TextFormat::kBase64})
    EXPECT_EQ(decode_container_text(encode_text(c, f)), c);
  EXPECT_EQ(text_format_from_name("b64"), TextFormat::kBase64);
  EXPECT_FALSE(text_format_from_name("pem"));
  const std::string junk = "hello";
  EXPECT_THROW(decode_container_text(Bytes(junk.begin(), junk.end())), ParseError);
}

// Frozen vectors written by `sdsig vectors --out tests/vectors --format hex`.
TEST(GoldenVectors, ReproduceBitForBit) {
  const std::string dir = SDSIG_VECTOR_DIR;
  const Bytes msg = read_file(dir + "/msg.bin");
  for (Scheme s : kSchemes) {
    const std::string base = dir + "/" + scheme_name(s) + "-toy";
    const auto& p = find_paramset("toy");
    const KeyPair kp = keygen(s, p, Seed{});
    EXPECT_EQ(decode_container_text(read_file(base + ".pk")), wrap(kp.pk)) << base;
    EXPECT_EQ(decode_container_text(read_file(base + ".sk")), wrap(kp.sk)) << base;
    const Bytes sig = decode_container_text(read_file(base + ".sig"));
    EXPECT_EQ(sig, wrap(s, p, sign(kp.sk, msg, vector_rand_seed()))) << base;
    EXPECT_EQ(verify(kp.pk, msg, unwrap(sig).payload), Verdict::kAccept);
  }
}
