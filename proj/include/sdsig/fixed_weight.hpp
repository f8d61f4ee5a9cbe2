#pragma once

#include "sdsig/bitvec.hpp"

namespace sdsig {

// Bit length of the combinadic code: ceil(log2 C(n, w)).
size_t fixed_weight_code_bits(size_t n, size_t w);

// Rank of supp(v) = {c_1 < ... < c_w} as sum C(c_i, i), written little-endian
// into ceil(bits/8) bytes. Throws WeightError if weight(v) != w.
Bytes encode_fixed_weight(const BitVec& v, size_t w);
// Inverse of encode. Throws ParseError on a wrong length, nonzero padding bits
// or a rank >= C(n, w).
BitVec decode_fixed_weight(ByteSpan code, size_t n, size_t w);

}  // namespace sdsig
