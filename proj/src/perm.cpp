#include "sdsig/perm.hpp"

#include <bit>
#include <numeric>

namespace sdsig {

unsigned index_bits(uint64_t m) { return m <= 1 ? 0 : static_cast<unsigned>(std::bit_width(m - 1)); }

Permutation::Permutation(std::vector<uint32_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (uint32_t v : map_) {
    if (v >= map_.size() || seen[v]) throw DimensionError("map is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(size_t n) {
  Permutation p;
  p.map_.resize(n);
  std::iota(p.map_.begin(), p.map_.end(), 0u);
  return p;
}

Bytes Permutation::to_bytes() const {
  const unsigned b = index_bits(map_.size());
  Bytes out((map_.size() * b + 7) / 8, 0);
  size_t pos = 0;
  for (uint32_t v : map_) {
    for (unsigned j = 0; j < b; ++j, ++pos)
      if ((v >> j) & 1) out[pos >> 3] |= static_cast<uint8_t>(1u << (pos & 7));
  }
  return out;
}

Permutation Permutation::from_bytes(ByteSpan b, size_t n) {
  const unsigned bits = index_bits(n);
  if (b.size() != (n * bits + 7) / 8) throw ParseError("permutation: wrong length");
  std::vector<uint32_t> m(n, 0);
  size_t pos = 0;
  for (auto& v : m)
    for (unsigned j = 0; j < bits; ++j, ++pos)
      if ((b[pos >> 3] >> (pos & 7)) & 1) v |= 1u << j;
  for (; pos < 8 * b.size(); ++pos)
    if ((b[pos >> 3] >> (pos & 7)) & 1) throw ParseError("permutation: nonzero padding");
  try {
    return Permutation(std::move(m));
  } catch (const DimensionError&) {
    throw ParseError("permutation: not a bijection");
  }
}

BitVec apply_perm(const Permutation& p, const BitVec& v) {
  if (p.size() != v.size()) throw DimensionError("apply_perm: length mismatch");
  BitVec out(v.size());
  for (uint32_t i : v.support()) out.set(p[i]);
  return out;
}

Permutation compose_perms(const Permutation& s, const Permutation& p) {
  if (s.size() != p.size()) throw DimensionError("compose_perms: size mismatch");
  std::vector<uint32_t> m(p.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = s[p[i]];
  return Permutation(std::move(m));
}

Permutation invert_perm(const Permutation& p) {
  std::vector<uint32_t> m(p.size());
  for (size_t i = 0; i < m.size(); ++i) m[p[i]] = static_cast<uint32_t>(i);
  return Permutation(std::move(m));
}

}  // namespace sdsig
