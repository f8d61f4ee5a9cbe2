#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdsig/errors.hpp"

namespace sdsig {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

class ByteWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v) {
    buf_.push_back(static_cast<uint8_t>(v >> 8));
    buf_.push_back(static_cast<uint8_t>(v));
  }
  void u32(uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<uint8_t>(v >> s));
  }
  void u64(uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<uint8_t>(v >> s));
  }
  void raw(ByteSpan b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  // u32be length prefix followed by the bytes.
  void field(ByteSpan b) {
    u32(static_cast<uint32_t>(b.size()));
    raw(b);
  }

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }
  size_t size() const { return buf_.size(); }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(ByteSpan b) : b_(b) {}

  uint8_t u8() { return need(1)[0]; }
  uint16_t u16() {
    auto p = need(2);
    return static_cast<uint16_t>((p[0] << 8) | p[1]);
  }
  uint32_t u32() {
    auto p = need(4);
    return (uint32_t{p[0]} << 24) | (uint32_t{p[1]} << 16) | (uint32_t{p[2]} << 8) | p[3];
  }
  ByteSpan raw(size_t n) { return need(n); }
  ByteSpan field() { return raw(u32()); }

  size_t remaining() const { return b_.size() - pos_; }
  void expect_end() const {
    if (remaining() != 0) throw ParseError("trailing bytes");
  }

 private:
  ByteSpan need(size_t n) {
    if (remaining() < n) throw ParseError("truncated input");
    auto s = b_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  ByteSpan b_;
  size_t pos_ = 0;
};

std::string to_hex(ByteSpan b);
Bytes from_hex(std::string_view s);
std::string to_base64(ByteSpan b);
Bytes from_base64(std::string_view s);

}  // namespace sdsig
