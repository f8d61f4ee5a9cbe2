#include "sdsig/bitvec.hpp"

namespace sdsig {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v.set(i);
    else if (bits[i] != '0') throw ParseError("bit string must contain only 0/1");
  }
  return v;
}

BitVec BitVec::from_bytes(ByteSpan b, size_t n) {
  if (b.size() != (n + 7) / 8) throw ParseError("bit vector byte length mismatch");
  BitVec v(n);
  for (size_t i = 0; i < b.size(); ++i) v.w_[i >> 3] |= uint64_t{b[i]} << (8 * (i & 7));
  if (n & 7) {
    if (b.back() >> (n & 7)) throw ParseError("nonzero padding bits");
  }
  return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.n_ != n_) throw DimensionError("BitVec length mismatch in addition");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVec::is_zero() const {
  for (uint64_t x : w_)
    if (x) return false;
  return true;
}

bool BitVec::dot(const BitVec& o) const {
  if (o.n_ != n_) throw DimensionError("BitVec length mismatch in dot product");
  uint64_t acc = 0;
  for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
  return std::popcount(acc) & 1;
}

std::vector<uint32_t> BitVec::support() const {
  std::vector<uint32_t> s;
  s.reserve(weight());
  for (size_t i = 0; i < w_.size(); ++i) {
    uint64_t x = w_[i];
    while (x) {
      s.push_back(static_cast<uint32_t>(64 * i + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return s;
}

BitVec BitVec::slice(size_t off, size_t len) const {
  if (off + len > n_) throw DimensionError("slice out of range");
  BitVec r(len);
  const size_t sh = off & 63, base = off >> 6;
  for (size_t i = 0; i < r.w_.size(); ++i) {
    uint64_t lo = w_[base + i] >> sh;
    uint64_t hi = 0;
    if (sh && base + i + 1 < w_.size()) hi = w_[base + i + 1] << (64 - sh);
    r.w_[i] = lo | hi;
  }
  r.clear_padding();
  return r;
}

void BitVec::assign(size_t off, const BitVec& v) {
  if (off + v.n_ > n_) throw DimensionError("assign out of range");
  if ((off & 63) == 0) {
    const size_t base = off >> 6;
    size_t full = v.n_ >> 6;
    for (size_t i = 0; i < full; ++i) w_[base + i] = v.w_[i];
    if (v.n_ & 63) {
      uint64_t m = (uint64_t{1} << (v.n_ & 63)) - 1;
      w_[base + full] = (w_[base + full] & ~m) | v.w_[full];
    }
    return;
  }
  BitVec cleared = slice(off, v.n_);
  xor_at(off, cleared);
  xor_at(off, v);
}

void BitVec::xor_at(size_t off, const BitVec& v) {
  if (off + v.n_ > n_) throw DimensionError("xor_at out of range");
  const size_t sh = off & 63, base = off >> 6;
  for (size_t i = 0; i < v.w_.size(); ++i) {
    w_[base + i] ^= v.w_[i] << sh;
    if (sh && base + i + 1 < w_.size()) w_[base + i + 1] ^= v.w_[i] >> (64 - sh);
  }
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
  BitVec r(a.n_ + b.n_);
  r.assign(0, a);
  r.assign(a.n_, b);
  return r;
}

Bytes BitVec::to_bytes() const {
  Bytes out((n_ + 7) / 8);
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint8_t>(w_[i >> 3] >> (8 * (i & 7)));
  return out;
}

void BitVec::append_to(ByteWriter& w) const { w.raw(to_bytes()); }

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

}  // namespace sdsig
