#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdsig/bytes.hpp"

namespace sdsig {

// Packed vector over F2. Bit i lives in word i/64 at position i%64; padding
// bits past size() are kept at zero so word-wise equality is exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec from_string(std::string_view bits);
  // Little-endian bit order, ceil(n/8) bytes; nonzero padding is a ParseError.
  static BitVec from_bytes(ByteSpan b, size_t n);

  size_t size() const { return n_; }
  size_t num_words() const { return w_.size(); }

  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v = true) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  // Addition over F2 is XOR.
  BitVec& operator+=(const BitVec& o) { return *this ^= o; }
  friend BitVec operator+(BitVec a, const BitVec& b) { return a ^= b; }
  bool operator==(const BitVec& o) const = default;

  size_t weight() const {
    size_t c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool is_zero() const;
  // Parity of the AND with o.
  bool dot(const BitVec& o) const;
  std::vector<uint32_t> support() const;

  // Returns bits [off, off+len).
  BitVec slice(size_t off, size_t len) const;
  // Writes v into bits [off, off+v.size()).
  void assign(size_t off, const BitVec& v);
  // XORs v into bits [off, off+v.size()).
  void xor_at(size_t off, const BitVec& v);
  static BitVec concat(const BitVec& a, const BitVec& b);

  Bytes to_bytes() const;
  void append_to(ByteWriter& w) const;
  std::string to_string() const;

  std::span<const uint64_t> words() const { return w_; }
  std::span<uint64_t> words_mut() { return w_; }
  void clear_padding() {
    if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

inline size_t weight(const BitVec& v) { return v.weight(); }

}  // namespace sdsig
