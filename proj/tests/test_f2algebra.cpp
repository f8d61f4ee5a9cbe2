#include <gtest/gtest.h>

#include <random>

#include "sdsig/bitmat.hpp"
#include "sdsig/errors.hpp"
#include "sdsig/perm.hpp"

using namespace sdsig;

namespace {

std::mt19937_64 rng(12345);

BitVec random_vec(size_t n) {
  BitVec v(n);
  for (size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
  return v;
}

BitMat random_mat(size_t r, size_t c) {
  BitMat m(r, c);
  for (size_t i = 0; i < r; ++i) m.row(i) = random_vec(c);
  return m;
}

Permutation random_perm(size_t n) {
  std::vector<uint32_t> m(n);
  for (size_t i = 0; i < n; ++i) m[i] = static_cast<uint32_t>(i);
  std::shuffle(m.begin(), m.end(), rng);
  return Permutation(m);
}

// Reference products, bit by bit.
BitVec naive_mat_vec(const BitMat& h, const BitVec& x) {
  BitVec out(h.rows());
  for (size_t i = 0; i < h.rows(); ++i) {
    bool acc = false;
    for (size_t j = 0; j < h.cols(); ++j) acc ^= h.get(i, j) && x.get(j);
    out.set(i, acc);
  }
  return out;
}

BitMat naive_circulant(const BitVec& f) {
  const size_t k = f.size();
  BitMat m(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) m.set(i, (j + i) % k, f.get(j));
  return m;
}

}  // namespace

TEST(BitVec, StringRoundTripAndPadding) {
  const auto v = BitVec::from_string("1011000");
  EXPECT_EQ(v.to_string(), "1011000");
  EXPECT_EQ(weight(v), 3u);
  EXPECT_EQ(weight(BitVec(100)), 0u);
  EXPECT_EQ(weight(BitVec::from_string("1111111")), 7u);
  const Bytes b = v.to_bytes();
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], 0x0d);
  EXPECT_EQ(BitVec::from_bytes(b, 7), v);
  EXPECT_THROW(BitVec::from_bytes(Bytes{0x8d}, 7), ParseError);
  EXPECT_THROW(BitVec::from_bytes(Bytes{0x0d, 0}, 7), ParseError);
}

TEST(BitVec, XorIsInvolution) {
  for (size_t n : {1u, 63u, 64u, 65u, 619u}) {
    const auto a = random_vec(n), b = random_vec(n);
    EXPECT_TRUE((a + a).is_zero());
    EXPECT_EQ(a + b + b, a);
  }
  EXPECT_THROW(BitVec(3) += BitVec(4), DimensionError);
}

TEST(BitVec, SliceAssignConcat) {
  for (int t = 0; t < 200; ++t) {
    const size_t n = 1 + rng() % 300;
    const auto v = random_vec(n);
    const size_t off = rng() % n, len = rng() % (n - off + 1);
    const auto s = v.slice(off, len);
    for (size_t i = 0; i < len; ++i) ASSERT_EQ(s.get(i), v.get(off + i));
    auto w = random_vec(n);
    const auto before = w;
    w.assign(off, s);
    for (size_t i = 0; i < n; ++i) ASSERT_EQ(w.get(i), (i >= off && i < off + len) ? v.get(i) : before.get(i));
    auto x = before;
    x.xor_at(off, s);
    for (size_t i = 0; i < n; ++i)
      ASSERT_EQ(x.get(i), before.get(i) ^ ((i >= off && i < off + len) ? v.get(i) : false));
  }
  const auto c = BitVec::concat(BitVec::from_string("101"), BitVec::from_string("0011"));
  EXPECT_EQ(c.to_string(), "1010011");
}

TEST(MatVec, Examples) {
  EXPECT_EQ(mat_vec_mul(BitMat::identity(4), BitVec::from_string("1010")).to_string(), "1010");
  EXPECT_EQ(mat_vec_mul(BitMat(2, 4), random_vec(4)).to_string(), "00");
  for (int t = 0; t < 50; ++t) {
    const auto h = random_mat(8, 16);
    const auto x = random_vec(16);
    EXPECT_EQ(mat_vec_mul(h, x), naive_mat_vec(h, x));
  }
  EXPECT_THROW(mat_vec_mul(BitMat(2, 4), BitVec(5)), DimensionError);
  EXPECT_THROW(BitMat(0, 3), DimensionError);
}

TEST(MatVec, DistributesOverXor) {
  for (int t = 0; t < 50; ++t) {
    const auto h = random_mat(37, 131);
    const auto u = random_vec(131), x = random_vec(131);
    EXPECT_EQ(mat_vec_mul(h, u + x), mat_vec_mul(h, u) + mat_vec_mul(h, x));
  }
}

TEST(VecMat, Examples) {
  const auto g = random_mat(8, 16);
  BitVec e0(8);
  e0.set(0);
  EXPECT_EQ(vec_mat_mul(e0, g), g.row(0));
  EXPECT_TRUE(vec_mat_mul(BitVec(8), g).is_zero());
  EXPECT_EQ(vec_mat_mul(BitVec(8), g).size(), 16u);
  for (int t = 0; t < 50; ++t) {
    const auto gr = random_mat(8, 16);
    const auto x = random_vec(8);
    EXPECT_EQ(vec_mat_mul(x, gr), mat_vec_mul(gr.transpose(), x));
  }
  EXPECT_THROW(vec_mat_mul(BitVec(7), g), DimensionError);
}

TEST(SolveLinear, FindsSolutionOrThrows) {
  for (int t = 0; t < 30; ++t) {
    const auto h = random_mat(20, 40);
    const auto x = random_vec(40);
    const auto y = mat_vec_mul(h, x);
    EXPECT_EQ(mat_vec_mul(h, solve_linear(h, y)), y);
  }
  BitMat z(2, 3);
  BitVec y(2);
  y.set(0);
  EXPECT_THROW(solve_linear(z, y), SimError);
}

TEST(Circulant, Examples) {
  const size_t k = 13;
  BitVec id(k);
  id.set(0);
  const auto b = random_vec(k);
  EXPECT_EQ(qc_mul({id}, b), b);
  // Rotation by one: row i has its single 1 at column (i + k - 1) mod k, so
  // the product maps e0 to e1.
  BitVec rot(k), e0(k), e1(k);
  rot.set(k - 1);
  e0.set(0);
  e1.set(1);
  EXPECT_EQ(qc_mul({rot}, e0), e1);
  EXPECT_THROW(qc_mul({id}, BitVec(k + 1)), DimensionError);
}

TEST(Circulant, MatchesDenseOracle) {
  for (size_t k : {1u, 5u, 32u, 63u, 64u, 65u, 130u}) {
    for (int t = 0; t < 20; ++t) {
      const CirculantBlock a{random_vec(k)};
      const auto b = random_vec(k);
      const BitMat dense = naive_circulant(a.first_row);
      ASSERT_EQ(a.densify(), dense);
      EXPECT_EQ(qc_mul(a, b), naive_mat_vec(dense, b));
      EXPECT_EQ(qc_vec_mul(b, a), vec_mat_mul(b, dense));
    }
  }
}

TEST(QcMat, DenseAndBlockwiseAgree) {
  // At least 1000 random (matrix, vector) pairs with k <= 64, both forms.
  int pairs = 0;
  for (int t = 0; t < 250; ++t) {
    const size_t k = 1 + rng() % 64;
    const size_t l = 2 + rng() % 2;
    QcMat g{QcMat::Form::kGenerator, k, {}}, h{QcMat::Form::kParity, k, {}};
    for (size_t j = 0; j + 1 < l; ++j) {
      g.blocks.push_back({random_vec(k)});
      h.blocks.push_back({random_vec(k)});
    }
    const BitMat gd = g.densify(), hd = h.densify();
    ASSERT_EQ(gd.rows(), k);
    ASSERT_EQ(gd.cols(), l * k);
    ASSERT_EQ(hd.rows(), (l - 1) * k);
    for (size_t i = 0; i < k; ++i) ASSERT_TRUE(gd.get(i, i));
    for (int r = 0; r < 4; ++r, ++pairs) {
      const auto x = random_vec(k);
      EXPECT_EQ(qc_vec_mat_mul(x, g), vec_mat_mul(x, gd));
      const auto z = random_vec(l * k);
      EXPECT_EQ(qc_mat_vec_mul(h, z), mat_vec_mul(hd, z));
    }
    const CodeMatrix cg(g);
    const auto x = random_vec(k);
    EXPECT_EQ(cg.vec_mul(x), vec_mat_mul(x, gd));
  }
  EXPECT_GE(pairs, 1000);
}

TEST(Permutation, Basics) {
  EXPECT_THROW(Permutation({0, 0, 1}), DimensionError);
  EXPECT_THROW(Permutation({0, 3, 1}), DimensionError);
  const auto v = BitVec::from_string("1100101");
  EXPECT_EQ(apply_perm(Permutation::identity(7), v), v);
  const Permutation p({2, 0, 1});
  // out[map[i]] = v[i]
  EXPECT_EQ(apply_perm(p, BitVec::from_string("100")).to_string(), "001");
  EXPECT_THROW(apply_perm(p, BitVec(4)), DimensionError);
  EXPECT_THROW(compose_perms(p, Permutation::identity(4)), DimensionError);
}

TEST(Permutation, AlgebraicLaws) {
  for (int t = 0; t < 100; ++t) {
    const size_t n = 1 + rng() % 200;
    const auto p = random_perm(n), s = random_perm(n);
    const auto v = random_vec(n);
    EXPECT_EQ(weight(apply_perm(p, v)), weight(v));
    EXPECT_EQ(apply_perm(invert_perm(p), apply_perm(p, v)), v);
    EXPECT_EQ(apply_perm(compose_perms(s, p), v), apply_perm(s, apply_perm(p, v)));
    EXPECT_EQ(compose_perms(p, Permutation::identity(n)), p);
    EXPECT_EQ(compose_perms(invert_perm(p), p), Permutation::identity(n));
    EXPECT_EQ(Permutation::from_bytes(p.to_bytes(), n), p);
  }
}

TEST(Permutation, AssociativityOnS16) {
  for (int t = 0; t < 20; ++t) {
    const auto a = random_perm(16), b = random_perm(16), c = random_perm(16);
    const auto l = compose_perms(compose_perms(a, b), c), r = compose_perms(a, compose_perms(b, c));
    // Direct table check: (a o b o c)(i) = a[b[c[i]]].
    for (uint32_t i = 0; i < 16; ++i) {
      EXPECT_EQ(l[i], a[b[c[i]]]);
      EXPECT_EQ(r[i], a[b[c[i]]]);
    }
  }
}

TEST(Permutation, ParseRejectsGarbage) {
  const auto p = random_perm(10);
  Bytes b = p.to_bytes();
  EXPECT_THROW(Permutation::from_bytes(Bytes(b.begin(), b.end() - 1), 10), ParseError);
  b[0] = 0xff;  // entry 0 becomes 15, outside [0, 10)
  EXPECT_THROW(Permutation::from_bytes(b, 10), ParseError);
}
