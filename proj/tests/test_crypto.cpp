#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "sdsig/fixed_weight.hpp"
#include "sdsig/params.hpp"
#include "sdsig/xof.hpp"

using namespace sdsig;

namespace {

Seed counting_seed() {
  Seed s{};
  for (int i = 0; i < 16; ++i) s[i] = static_cast<uint8_t>(i);
  return s;
}

Seed seed_of(uint64_t i) {
  Seed s{};
  for (int j = 0; j < 8; ++j) s[j] = static_cast<uint8_t>(i >> (8 * j));
  return s;
}

}  // namespace

// Pinned vectors below agree with tests/oracles/sampling.py and hashlib.

TEST(Xof, ExpandIsDeterministicAndTagSeparated) {
  const Seed s = counting_seed();
  EXPECT_EQ(xof_expand(s, {Ctx::kVecN}, 128), xof_expand(s, {Ctx::kVecN}, 128));
  EXPECT_EQ(to_hex(xof_expand(s, {Ctx::kVecN}, 128)), "bbcee0cdc95fbe7ad7bb74e4412f23e3");
  EXPECT_EQ(to_hex(xof_expand(s, {Ctx::kVecK}, 128)), "a8d056c3e9b0f9bbe6efdebe43bdb27d");
  EXPECT_TRUE(xof_expand(s, {Ctx::kVecN}, 0).empty());
  const Bytes odd = xof_expand(s, {Ctx::kVecN}, 13);
  ASSERT_EQ(odd.size(), 2u);
  EXPECT_EQ(odd[1] >> 5, 0);
}

TEST(Xof, DeriveSeed) {
  EXPECT_EQ(to_hex(derive_seed(counting_seed(), {Ctx::kChildSeed, 3, 4})), "d2c5b307bab863924b9bfa32eae2ba38");
}

TEST(Xof, StreamRegrowthKeepsPrefix) {
  // A stream with a tiny first squeeze must yield the same bytes as a large one.
  const Bytes in = {1, 2, 3};
  XofStream a(in, 1), b(in, 4096);
  Bytes x(500), y(500);
  a.read(x.data(), x.size());
  b.read(y.data(), y.size());
  EXPECT_EQ(x, y);
  EXPECT_EQ(x, shake256(in, 500));
}

TEST(DomainTag, SerializationIsInjective) {
  std::set<std::array<uint8_t, 9>> seen;
  size_t count = 0;
  for (int c = 1; c <= 28; ++c)
    for (uint32_t a : {0u, 1u, 2u, 255u, 256u, 4095u, 4096u})
      for (uint32_t b : {0u, 1u, 255u, 256u, 4096u}) {
        seen.insert(DomainTag{static_cast<Ctx>(c), a, b}.bytes());
        ++count;
      }
  EXPECT_EQ(seen.size(), count);
  // Positions up to max(M, N) = 4096 in the first slot, exhaustively.
  std::set<std::array<uint8_t, 9>> s2;
  for (uint32_t a = 0; a <= 4096; ++a) s2.insert(DomainTag{Ctx::kChildLeft, a, 0}.bytes());
  EXPECT_EQ(s2.size(), 4097u);
}

TEST(SamplePerm, Examples) {
  const Seed s = counting_seed();
  EXPECT_EQ(sample_perm(s, {Ctx::kPerm}, 1), Permutation::identity(1));
  EXPECT_EQ(sample_perm(s, {Ctx::kPerm}, 8).map(), (std::vector<uint32_t>{6, 3, 7, 4, 0, 2, 1, 5}));
  // The constructor validates bijectivity.
  EXPECT_EQ(sample_perm(s, {Ctx::kPerm}, 1238).size(), 1238u);
  EXPECT_THROW(sample_perm(s, {Ctx::kPerm}, 0), ParamError);
}

TEST(SamplePerm, UniformOnS4) {
  std::map<std::vector<uint32_t>, int> counts;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) ++counts[sample_perm(seed_of(t), {Ctx::kPerm}, 4).map()];
  ASSERT_EQ(counts.size(), 24u);
  const double p = 1.0 / 24, mean = trials * p, sigma = std::sqrt(trials * p * (1 - p));
  double chi2 = 0;
  for (const auto& [perm, c] : counts) {
    EXPECT_LT(std::abs(c - mean), 5 * sigma);
    chi2 += (c - mean) * (c - mean) / mean;
  }
  // 23 degrees of freedom; the 0.999 quantile is 49.7.
  EXPECT_LT(chi2, 49.7);
}

TEST(SampleVec, DeterministicTaggedUnbiased) {
  const Seed s = counting_seed();
  EXPECT_EQ(sample_vec(s, {Ctx::kVecN, 1, 2}, 20), sample_vec(s, {Ctx::kVecN, 1, 2}, 20));
  EXPECT_EQ(sample_vec(s, {Ctx::kVecN, 1, 2}, 20).to_string(), "11011000101110101101");
  EXPECT_EQ(sample_vec(s, {Ctx::kVecK, 1, 2}, 20).to_string(), "00000001010110000000");
  const BitVec big = sample_vec(s, {Ctx::kVecN, 9}, 100000);
  const double bias = static_cast<double>(big.weight()) / 100000;
  EXPECT_GE(bias, 0.49);
  EXPECT_LE(bias, 0.51);
}

TEST(SampleFixedWeight, Examples) {
  const Seed s = counting_seed();
  EXPECT_TRUE(sample_fixed_weight(s, {Ctx::kFixedW}, 20, 0).is_zero());
  EXPECT_EQ(sample_fixed_weight(s, {Ctx::kFixedW}, 20, 20).weight(), 20u);
  EXPECT_EQ(sample_fixed_weight(s, {Ctx::kFixedW}, 1190, 132).weight(), 132u);
  EXPECT_EQ(sample_fixed_weight(s, {Ctx::kFixedW}, 16, 3).to_string(), "0000000101100000");
  EXPECT_THROW(sample_fixed_weight(s, {Ctx::kFixedW}, 5, 6), ParamError);
}

TEST(Commit, CorrectnessAndRegression) {
  const Seed r = counting_seed();
  const Bytes m = {'a', 'b', 'c'};
  EXPECT_EQ(commit(r, m), commit(r, m));
  EXPECT_EQ(to_hex(commit(r, m)), "b49d49737edb9b2769093aa5490d829c24f2dcced3ddc3a7dea8ad5aa7440ba0");
  Bytes m2 = m;
  m2[0] ^= 1;
  EXPECT_EQ(to_hex(commit(r, m2)), "727bdba9a218812b82d664aff6e20e6150aa4ade2c2d32dedc5eab159295c983");
  EXPECT_TRUE(open_verify(commit(r, m), r, m));
  Seed r2 = r;
  r2[0] ^= 1;
  EXPECT_FALSE(open_verify(commit(r, m), r2, m));
  EXPECT_FALSE(open_verify(commit(r, m), r, m2));
  for (uint64_t i = 0; i < 200; ++i) {
    const Bytes msg = xof_expand(seed_of(i), {Ctx::kVecN}, 8 * (i % 40));
    EXPECT_TRUE(open_verify(commit(seed_of(i + 1), msg), seed_of(i + 1), msg));
  }
}

TEST(FsChallenge, PinnedAndWellFormed) {
  const Bytes t = {'`', 'b', 'c'};
  const Challenge ch = fs_challenge({Ctx::kFsChallenge1}, t, {16, 4, 1, 8, 3});
  EXPECT_EQ(ch.subset, (std::vector<uint32_t>{2, 3, 12, 14}));
  EXPECT_EQ(ch.symbols, (std::vector<uint32_t>{2, 6, 2}));
  EXPECT_EQ(ch, fs_challenge({Ctx::kFsChallenge1}, t, {16, 4, 1, 8, 3}));

  for (uint64_t i = 0; i < 50; ++i) {
    const Bytes tr = xof_expand(seed_of(i), {Ctx::kMsgDigest}, 256);
    const Challenge c = fs_challenge({Ctx::kFsChallenge1}, tr, {256, 128, 1, 16, 128});
    ASSERT_EQ(c.subset.size(), 128u);
    EXPECT_TRUE(std::adjacent_find(c.subset.begin(), c.subset.end(), std::greater_equal<>()) == c.subset.end());
    EXPECT_LT(c.subset.back(), 256u);
    for (uint32_t a : c.symbols) {
      EXPECT_GE(a, 1u);
      EXPECT_LE(a, 16u);
    }
  }
  EXPECT_THROW(fs_challenge({Ctx::kFsChallenge1}, t, {4, 5, 0, 0, 0}), ParamError);
}

TEST(FixedWeightCodec, SmallExamples) {
  const auto v = BitVec::from_string("1100");
  EXPECT_EQ(fixed_weight_code_bits(4, 2), 3u);
  const Bytes code = encode_fixed_weight(v, 2);
  EXPECT_EQ(code.size(), 1u);
  EXPECT_EQ(decode_fixed_weight(code, 4, 2), v);
  EXPECT_THROW(encode_fixed_weight(v, 3), WeightError);
}

TEST(FixedWeightCodec, ExhaustiveOracle) {
  // For every n <= 12 and w <= n: all C(n, w) weight-w vectors get distinct
  // codes in [0, C(n, w)) and round-trip. The rank oracle is the position of
  // the vector in colex order of supports.
  for (size_t n = 1; n <= 12; ++n) {
    for (size_t w = 0; w <= n; ++w) {
      std::set<Bytes> codes;
      uint64_t colex = 0;
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<size_t>(std::popcount(mask)) != w) continue;
        BitVec v(n);
        for (size_t i = 0; i < n; ++i) v.set(i, (mask >> i) & 1);
        const Bytes c = encode_fixed_weight(v, w);
        ASSERT_EQ(decode_fixed_weight(c, n, w), v);
        uint64_t rank = 0;
        for (size_t i = 0; i < c.size(); ++i) rank |= uint64_t{c[i]} << (8 * i);
        // Increasing masks with equal popcount are in colex order.
        ASSERT_EQ(rank, colex);
        ++colex;
        codes.insert(c);
      }
      ASSERT_EQ(codes.size(), static_cast<size_t>(binomial(n, w)));
    }
  }
  // C(8, 3) = 56 distinct 6-bit codes.
  EXPECT_EQ(fixed_weight_code_bits(8, 3), 6u);
}

TEST(FixedWeightCodec, LargeParameters) {
  // ceil(log2 C(1238, 137)) from the big-integer binomial.
  const BigInt c = binomial(1238, 137);
  const size_t bits = msb(c - 1) + 1;
  EXPECT_EQ(fixed_weight_code_bits(1238, 137), bits);
  EXPECT_LE(bits, 1238u / 2 + 64);
  const BitVec v = sample_fixed_weight(counting_seed(), {Ctx::kFixedW}, 1238, 137);
  EXPECT_EQ(decode_fixed_weight(encode_fixed_weight(v, 137), 1238, 137), v);
}

TEST(FixedWeightCodec, DecodeRejectsBadInput) {
  // C(4, 2) = 6, 3-bit code: ranks 6 and 7 are out of range.
  EXPECT_THROW(decode_fixed_weight(Bytes{6}, 4, 2), ParseError);
  EXPECT_THROW(decode_fixed_weight(Bytes{0x08}, 4, 2), ParseError);
  EXPECT_THROW(decode_fixed_weight(Bytes{0, 0}, 4, 2), ParseError);
}

TEST(Encoding, HexBase64) {
  const Bytes b = {0, 1, 0xfe, 0xff, 0x10};
  EXPECT_EQ(to_hex(b), "0001feff10");
  EXPECT_EQ(from_hex("0001FEFF10"), b);
  EXPECT_THROW(from_hex("abc"), ParseError);
  EXPECT_THROW(from_hex("zz"), ParseError);
  for (size_t n = 0; n < 10; ++n) {
    const Bytes x(b.begin(), b.begin() + std::min(n, b.size()));
    EXPECT_EQ(from_base64(to_base64(x)), x);
  }
  EXPECT_EQ(to_base64(Bytes{'f', 'o', 'o', 'b'}), "Zm9vYg==");
  EXPECT_THROW(from_base64("abc"), ParseError);
}
