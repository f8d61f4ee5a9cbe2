#include "sdsig/bitmat.hpp"

#include <utility>

namespace sdsig {

BitMat::BitMat(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
  if (rows == 0 || cols == 0) throw DimensionError("BitMat needs at least one row and column");
}

BitMat BitMat::identity(size_t n) {
  BitMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMat BitMat::transpose() const {
  BitMat t(cols_, rows());
  for (size_t i = 0; i < rows(); ++i)
    for (uint32_t j : rows_[i].support()) t.set(j, i);
  return t;
}

BitMat BitMat::hconcat(const BitMat& o) const {
  if (o.rows() != rows()) throw DimensionError("hconcat row mismatch");
  BitMat m(rows(), cols_ + o.cols_);
  for (size_t i = 0; i < rows(); ++i) m.rows_[i] = BitVec::concat(rows_[i], o.rows_[i]);
  return m;
}

BitVec mat_vec_mul(const BitMat& h, const BitVec& x) {
  if (x.size() != h.cols()) throw DimensionError("mat_vec_mul: x.len != H.cols");
  BitVec out(h.rows());
  for (size_t i = 0; i < h.rows(); ++i)
    if (h.row(i).dot(x)) out.set(i);
  return out;
}

BitVec vec_mat_mul(const BitVec& x, const BitMat& g) {
  if (x.size() != g.rows()) throw DimensionError("vec_mat_mul: x.len != G.rows");
  BitVec out(g.cols());
  for (uint32_t i : x.support()) out ^= g.row(i);
  return out;
}

BitVec solve_linear(const BitMat& h, const BitVec& y) {
  if (y.size() != h.rows()) throw DimensionError("solve_linear: y.len != H.rows");
  const size_t r = h.rows(), n = h.cols();
  // Augmented rows [H_i | y_i].
  std::vector<BitVec> a(r);
  for (size_t i = 0; i < r; ++i) {
    a[i] = BitVec(n + 1);
    a[i].assign(0, h.row(i));
    a[i].set(n, y.get(i));
  }
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < r; ++c) {
    size_t p = rank;
    while (p < r && !a[p].get(c)) ++p;
    if (p == r) continue;
    std::swap(a[p], a[rank]);
    for (size_t i = 0; i < r; ++i)
      if (i != rank && a[i].get(c)) a[i] ^= a[rank];
    pivot_col.push_back(c);
    ++rank;
  }
  for (size_t i = rank; i < r; ++i)
    if (a[i].get(n)) throw SimError("inconsistent linear system");
  BitVec x(n);
  for (size_t i = 0; i < rank; ++i) x.set(pivot_col[i], a[i].get(n));
  return x;
}

BitMat CirculantBlock::densify() const {
  const size_t n = k();
  BitMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.row(i) = rotate(first_row, i);
  return m;
}

BitVec rotate(const BitVec& v, size_t s) {
  const size_t n = v.size();
  s %= n;
  if (s == 0) return v;
  BitVec out(n);
  out.xor_at(0, v.slice(n - s, s));
  out.xor_at(s, v.slice(0, n - s));
  return out;
}

BitVec qc_mul(const CirculantBlock& a, const BitVec& b) {
  const size_t k = a.k();
  if (b.size() != k) throw DimensionError("qc_mul: length mismatch");
  // out_i = sum_t f_t b_{(i+t) mod k}: each set bit t of f adds b rotated down by t.
  BitVec bb = BitVec::concat(b, b);
  BitVec out(k);
  for (uint32_t t : a.first_row.support()) out ^= bb.slice(t, k);
  return out;
}

BitVec qc_vec_mul(const BitVec& b, const CirculantBlock& a) {
  const size_t k = a.k();
  if (b.size() != k) throw DimensionError("qc_vec_mul: length mismatch");
  // Row i is f rotated right by i, i.e. the window of f||f starting at k - i.
  BitVec ff = BitVec::concat(a.first_row, a.first_row);
  BitVec out(k);
  for (uint32_t i : b.support()) out ^= ff.slice(i == 0 ? 0 : k - i, k);
  return out;
}

BitMat QcMat::densify() const {
  if (blocks.empty()) throw DimensionError("QcMat without blocks");
  BitMat m(rows(), cols());
  if (form == Form::kGenerator) {
    for (size_t i = 0; i < k; ++i) m.set(i, i);
    for (size_t b = 0; b < blocks.size(); ++b) {
      BitMat d = blocks[b].densify();
      for (size_t i = 0; i < k; ++i) m.row(i).assign(k * (b + 1), d.row(i));
    }
  } else {
    const size_t r = rows();
    for (size_t i = 0; i < r; ++i) m.set(i, i);
    for (size_t b = 0; b < blocks.size(); ++b) {
      BitMat d = blocks[b].densify();
      for (size_t i = 0; i < k; ++i) m.row(b * k + i).assign(r, d.row(i));
    }
  }
  return m;
}

BitVec qc_vec_mat_mul(const BitVec& x, const QcMat& g) {
  if (g.form != QcMat::Form::kGenerator) throw DimensionError("qc_vec_mat_mul needs generator form");
  if (x.size() != g.k) throw DimensionError("qc_vec_mat_mul: x.len != k");
  BitVec out(g.cols());
  out.xor_at(0, x);
  for (size_t b = 0; b < g.blocks.size(); ++b) out.xor_at(g.k * (b + 1), qc_vec_mul(x, g.blocks[b]));
  return out;
}

BitVec qc_mat_vec_mul(const QcMat& h, const BitVec& x) {
  if (h.form != QcMat::Form::kParity) throw DimensionError("qc_mat_vec_mul needs parity form");
  if (x.size() != h.cols()) throw DimensionError("qc_mat_vec_mul: x.len != cols");
  const size_t r = h.rows();
  BitVec out = x.slice(0, r);
  BitVec tail = x.slice(r, h.k);
  for (size_t b = 0; b < h.blocks.size(); ++b) out.xor_at(b * h.k, qc_mul(h.blocks[b], tail));
  return out;
}

BitVec CodeMatrix::mul_vec(const BitVec& x) const {
  if (qc_ && qc_->form == QcMat::Form::kParity) return qc_mat_vec_mul(*qc_, x);
  return mat_vec_mul(dense_, x);
}

BitVec CodeMatrix::vec_mul(const BitVec& x) const {
  if (qc_ && qc_->form == QcMat::Form::kGenerator) return qc_vec_mat_mul(x, *qc_);
  return vec_mat_mul(x, dense_);
}

}  // namespace sdsig
