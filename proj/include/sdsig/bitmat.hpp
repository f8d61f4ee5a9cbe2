#pragma once

#include <optional>
#include <vector>

#include "sdsig/bitvec.hpp"

namespace sdsig {

// Dense row-major matrix over F2.
class BitMat {
 public:
  BitMat() = default;
  BitMat(size_t rows, size_t cols);

  static BitMat identity(size_t n);

  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const BitVec& row(size_t i) const { return rows_[i]; }
  BitVec& row(size_t i) { return rows_[i]; }
  bool get(size_t i, size_t j) const { return rows_[i].get(j); }
  void set(size_t i, size_t j, bool v = true) { rows_[i].set(j, v); }

  BitMat transpose() const;
  // [this | o], same row count.
  BitMat hconcat(const BitMat& o) const;
  bool operator==(const BitMat& o) const = default;

 private:
  size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// H x^T: bit i is the parity of row i AND x.
BitVec mat_vec_mul(const BitMat& h, const BitVec& x);
// x G: XOR of the rows selected by x.
BitVec vec_mat_mul(const BitVec& x, const BitMat& g);

// Any x with H x^T = y^T, ignoring weight. Throws SimError if inconsistent.
BitVec solve_linear(const BitMat& h, const BitVec& y);

// k x k circulant; row i is first_row rotated right by i.
struct CirculantBlock {
  BitVec first_row;

  size_t k() const { return first_row.size(); }
  BitMat densify() const;
  bool operator==(const CirculantBlock&) const = default;
};

// Matrix-times-column product densify(a) * b, as a carry-less product mod x^k - 1.
BitVec qc_mul(const CirculantBlock& a, const BitVec& b);
// Row-vector product b * densify(a).
BitVec qc_vec_mul(const BitVec& b, const CirculantBlock& a);

// Cyclic rotation: out[(i + s) mod n] = v[i].
BitVec rotate(const BitVec& v, size_t s);

struct QcMat {
  enum class Form { kGenerator, kParity };

  Form form = Form::kGenerator;
  size_t k = 0;
  // Generator: [I_k | A_0 | ... | A_{l-2}].  Parity: [I_{(l-1)k} | B] with B the
  // column of blocks B_0; ...; B_{l-2}.
  std::vector<CirculantBlock> blocks;

  size_t rows() const { return form == Form::kGenerator ? k : k * blocks.size(); }
  size_t cols() const { return k * (blocks.size() + 1); }
  BitMat densify() const;
};

// x G for a generator-form QcMat, blockwise.
BitVec qc_vec_mat_mul(const BitVec& x, const QcMat& g);
// H x^T for a parity-form QcMat, blockwise.
BitVec qc_mat_vec_mul(const QcMat& h, const BitVec& x);

// Public code matrix. The dense form is always present; the QC form is kept
// alongside when the matrix was derived from circulant blocks, and products
// take the blockwise path in that case.
class CodeMatrix {
 public:
  CodeMatrix() = default;
  explicit CodeMatrix(BitMat dense) : dense_(std::move(dense)) {}
  explicit CodeMatrix(QcMat qc) : dense_(qc.densify()), qc_(std::move(qc)) {}

  const BitMat& dense() const { return dense_; }
  const std::optional<QcMat>& qc() const { return qc_; }
  bool is_qc() const { return qc_.has_value(); }
  size_t rows() const { return dense_.rows(); }
  size_t cols() const { return dense_.cols(); }

  BitVec mul_vec(const BitVec& x) const;  // H x^T
  BitVec vec_mul(const BitVec& x) const;  // x G

 private:
  BitMat dense_;
  std::optional<QcMat> qc_;
};

}  // namespace sdsig
