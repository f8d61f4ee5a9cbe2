#include "sdsig/fixed_weight.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sdsig {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binom(size_t n, size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Walks C(a, i) downward in a, and from C(a, i) to C(a - 1, i - 1), with exact
// divisions only. Start is C(n - 1, w).
class BinomWalker {
 public:
  BinomWalker(size_t a, size_t i) : a_(a), i_(i), v_(binom(a, i)) {}
  size_t a() const { return a_; }
  const cpp_int& value() const { return v_; }
  // C(a - 1, i) = C(a, i) (a - i) / a
  void dec_a() {
    v_ = a_ >= i_ ? v_ * (a_ - i_) / a_ : cpp_int(0);
    --a_;
  }
  // C(a - 1, i - 1) = C(a, i) i / a; requires a >= i >= 1.
  void dec_both() {
    v_ = v_ * i_ / a_;
    --a_;
    --i_;
  }

 private:
  size_t a_, i_;
  cpp_int v_;
};

}  // namespace

size_t fixed_weight_code_bits(size_t n, size_t w) {
  if (w > n) throw ParamError("fixed-weight code: w > n");
  cpp_int c = binom(n, w);
  if (c <= 1) return 0;
  return boost::multiprecision::msb(cpp_int(c - 1)) + 1;
}

Bytes encode_fixed_weight(const BitVec& v, size_t w) {
  const size_t n = v.size();
  if (v.weight() != w) throw WeightError("encode_fixed_weight: weight mismatch");
  const size_t bits = fixed_weight_code_bits(n, w);
  cpp_int rank = 0;
  if (w > 0 && w < n) {
    auto supp = v.support();
    // c_w down to c_1; the walker stays on C(a, i) with a >= i - 1.
    BinomWalker wk(n - 1, w);
    for (size_t i = w; i >= 1; --i) {
      const size_t c = supp[i - 1];
      while (wk.a() > c) wk.dec_a();
      rank += wk.value();
      if (i == 1) break;
      if (c < i) break;  // the remaining c_j = j - 1 contribute zero
      wk.dec_both();
    }
  }
  Bytes out((bits + 7) / 8, 0);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<uint8_t>(static_cast<unsigned>(rank & 0xff));
    rank >>= 8;
  }
  return out;
}

BitVec decode_fixed_weight(ByteSpan code, size_t n, size_t w) {
  const size_t bits = fixed_weight_code_bits(n, w);
  if (code.size() != (bits + 7) / 8) throw ParseError("fixed-weight code length mismatch");
  if ((bits & 7) && (code.back() >> (bits & 7))) throw ParseError("fixed-weight code padding bits set");
  cpp_int rank = 0;
  for (size_t i = code.size(); i-- > 0;) rank = (rank << 8) | code[i];
  if (rank >= binom(n, w)) throw ParseError("fixed-weight rank out of range");
  BitVec v(n);
  if (w == 0) return v;
  if (w == n) {
    for (size_t i = 0; i < n; ++i) v.set(i);
    return v;
  }
  BinomWalker wk(n - 1, w);
  for (size_t i = w; i >= 1; --i) {
    // Largest a with C(a, i) <= rank.
    while (wk.value() > rank) wk.dec_a();
    const size_t c = wk.a();
    v.set(c);
    rank -= wk.value();
    if (i == 1) break;
    if (c < i) {  // c = i - 1 forces the rest
      for (size_t j = 0; j + 1 < i; ++j) v.set(j);
      break;
    }
    wk.dec_both();
  }
  return v;
}

}  // namespace sdsig
