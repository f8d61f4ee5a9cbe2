#pragma once

#include <cstdint>
#include <vector>

#include "sdsig/bitvec.hpp"

namespace sdsig {

// Element of S_n. apply() places coordinate i of v at position map[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<uint32_t> map);  // validates bijectivity

  static Permutation identity(size_t n);

  size_t size() const { return map_.size(); }
  const std::vector<uint32_t>& map() const { return map_; }
  uint32_t operator[](size_t i) const { return map_[i]; }
  bool operator==(const Permutation&) const = default;

  // Entries packed LSB-first at ceil(log2 n) bits each.
  Bytes to_bytes() const;
  // Inverse of to_bytes; ParseError on a wrong length, nonzero padding or a non-bijection.
  static Permutation from_bytes(ByteSpan b, size_t n);

 private:
  std::vector<uint32_t> map_;
};

BitVec apply_perm(const Permutation& p, const BitVec& v);
// apply(compose(s, p), v) = apply(s, apply(p, v)).
Permutation compose_perms(const Permutation& s, const Permutation& p);
Permutation invert_perm(const Permutation& p);

// Bits per entry used by Permutation::to_bytes.
unsigned index_bits(uint64_t m);

}  // namespace sdsig
