#include "sdsig/xof.hpp"

#include <openssl/evp.h>
#include <openssl/opensslv.h>

#include <algorithm>
#include <numeric>

namespace sdsig {

namespace {

const EVP_MD* shake_md() {
  static EVP_MD* md = EVP_MD_fetch(nullptr, "SHAKE256", nullptr);
  if (!md) throw Error("SHAKE256 unavailable in OpenSSL");
  return md;
}

EVP_MD_CTX* ctx_of(void* p) { return static_cast<EVP_MD_CTX*>(p); }

}  // namespace

std::array<uint8_t, 9> DomainTag::bytes() const {
  return {static_cast<uint8_t>(ctx),
          static_cast<uint8_t>(a >> 24), static_cast<uint8_t>(a >> 16),
          static_cast<uint8_t>(a >> 8), static_cast<uint8_t>(a),
          static_cast<uint8_t>(b >> 24), static_cast<uint8_t>(b >> 16),
          static_cast<uint8_t>(b >> 8), static_cast<uint8_t>(b)};
}

Shake256::Shake256() : ctx_(EVP_MD_CTX_new()) {
  if (!ctx_ || EVP_DigestInit_ex(ctx_of(ctx_), shake_md(), nullptr) != 1) throw Error("SHAKE256 init failed");
}

Shake256::~Shake256() { EVP_MD_CTX_free(ctx_of(ctx_)); }

Shake256& Shake256::update(ByteSpan b) {
  if (!b.empty()) EVP_DigestUpdate(ctx_of(ctx_), b.data(), b.size());
  return *this;
}

Shake256& Shake256::update(const DomainTag& t) {
  auto b = t.bytes();
  return update(b);
}

void Shake256::finish(uint8_t* out, size_t len) {
  if (len == 0) return;
  if (EVP_DigestFinalXOF(ctx_of(ctx_), out, len) != 1) throw Error("SHAKE256 squeeze failed");
}

Bytes shake256(ByteSpan in, size_t out_len) {
  Bytes out(out_len);
  Shake256 h;
  h.update(in);
  h.finish(out.data(), out_len);
  return out;
}

XofStream::XofStream(Bytes input, size_t hint) : input_(std::move(input)) {
  buf_ = shake256(input_, std::max<size_t>(hint, 32));
}

XofStream::XofStream(const DomainTag& tag, ByteSpan seed, size_t hint) {
  auto t = tag.bytes();
  input_.assign(t.begin(), t.end());
  input_.insert(input_.end(), seed.begin(), seed.end());
  buf_ = shake256(input_, std::max<size_t>(hint, 32));
}

uint8_t XofStream::next_byte() {
  if (pos_ == buf_.size()) buf_ = shake256(input_, 2 * buf_.size());
  return buf_[pos_++];
}

uint64_t XofStream::bits(unsigned k) {
  while (have_ < k) {
    acc_ |= uint64_t{next_byte()} << have_;
    have_ += 8;
  }
  uint64_t v = k == 64 ? acc_ : acc_ & ((uint64_t{1} << k) - 1);
  acc_ = k == 64 ? 0 : acc_ >> k;
  have_ -= k;
  return v;
}

uint64_t XofStream::uniform(uint64_t m) {
  if (m <= 1) return 0;
  const unsigned k = index_bits(m);
  for (;;) {
    uint64_t v = bits(k);
    if (v < m) return v;
  }
}

void XofStream::read(uint8_t* out, size_t len) {
  for (size_t i = 0; i < len; ++i) out[i] = static_cast<uint8_t>(bits(8));
}

Bytes xof_expand(const Seed& seed, const DomainTag& tag, size_t out_bits) {
  Bytes out((out_bits + 7) / 8);
  Shake256 h;
  h.update(tag).update(seed);
  h.finish(out.data(), out.size());
  if (out_bits & 7) out.back() &= static_cast<uint8_t>((1u << (out_bits & 7)) - 1);
  return out;
}

Seed derive_seed(const Seed& parent, const DomainTag& tag) {
  Seed s;
  Shake256 h;
  h.update(tag).update(parent);
  h.finish(s.data(), s.size());
  return s;
}

Permutation sample_perm(const Seed& seed, const DomainTag& tag, size_t n) {
  if (n == 0) throw ParamError("sample_perm: n must be positive");
  // Fisher-Yates from the top: swap a[i] with a uniform a[j], j <= i.
  XofStream xs(tag, seed, n * index_bits(n) / 8 * 3 / 2 + 16);
  std::vector<uint32_t> a(n);
  std::iota(a.begin(), a.end(), 0u);
  for (size_t i = n - 1; i > 0; --i) std::swap(a[i], a[xs.uniform(i + 1)]);
  return Permutation(std::move(a));
}

BitVec sample_vec(const Seed& seed, const DomainTag& tag, size_t n) {
  return BitVec::from_bytes(xof_expand(seed, tag, n), n);
}

BitVec sample_fixed_weight(const Seed& seed, const DomainTag& tag, size_t n, size_t w) {
  if (w > n) throw ParamError("sample_fixed_weight: w > n");
  XofStream xs(tag, seed, w * index_bits(n) / 8 * 3 / 2 + 16);
  std::vector<uint32_t> a(n);
  std::iota(a.begin(), a.end(), 0u);
  BitVec v(n);
  for (size_t i = 0; i < w; ++i) {
    std::swap(a[i], a[i + xs.uniform(n - i)]);
    v.set(a[i]);
  }
  return v;
}

Commitment commit(const Seed& r, ByteSpan msg) {
  uint8_t len[8];
  for (int i = 0; i < 8; ++i) len[i] = static_cast<uint8_t>(uint64_t{msg.size()} >> (56 - 8 * i));
  Commitment c;
  Shake256 h;
  h.update(DomainTag{Ctx::kCommit}).update(r).update(ByteSpan(len, 8)).update(msg);
  h.finish(c.data(), c.size());
  return c;
}

bool open_verify(const Commitment& c, const Seed& r, ByteSpan msg) { return commit(r, msg) == c; }

Challenge fs_challenge(const DomainTag& tag, ByteSpan transcript, const ChallengeSpace& space) {
  if (space.subset_size > space.subset_m) throw ParamError("fs_challenge: subset larger than range");
  if (space.sym_count && space.sym_hi < space.sym_lo) throw ParamError("fs_challenge: empty symbol range");
  auto t = tag.bytes();
  Bytes input(t.begin(), t.end());
  input.insert(input.end(), transcript.begin(), transcript.end());
  XofStream xs(std::move(input), 8 * (space.subset_size + space.sym_count) + 32);

  Challenge ch;
  if (space.subset_size) {
    std::vector<uint32_t> a(space.subset_m);
    std::iota(a.begin(), a.end(), 0u);
    for (uint32_t i = 0; i < space.subset_size; ++i)
      std::swap(a[i], a[i + xs.uniform(space.subset_m - i)]);
    ch.subset.assign(a.begin(), a.begin() + space.subset_size);
    std::sort(ch.subset.begin(), ch.subset.end());
  }
  const uint64_t width = uint64_t{space.sym_hi} - space.sym_lo + 1;
  for (uint32_t i = 0; i < space.sym_count; ++i)
    ch.symbols.push_back(static_cast<uint32_t>(space.sym_lo + xs.uniform(width)));
  return ch;
}

}  // namespace sdsig
