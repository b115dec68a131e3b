#pragma once
#include <vector>

#include "psheaf/ring.hpp"

namespace psheaf {

class Matrix {
 public:
  Matrix(const Ring& r, size_t rows, size_t cols)
      : ring_(r), rows_(rows), cols_(cols), a_(rows * cols, RingElem::zero(r)) {}
  static Matrix identity(const Ring& r, size_t n);
  static Matrix from_rows(const Ring& r, const std::vector<std::vector<RingElem>>& rows);

  const Ring& ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const RingElem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, const RingElem& v) { a_[i * cols_ + j] = v; }

  std::vector<RingElem> row(size_t i) const;
  void swap_rows(size_t i, size_t j);
  void add_row_multiple(size_t i, size_t j, const RingElem& c);  // row i += c * row j
  void scale_row(size_t i, const RingElem& u);
  void swap_cols(size_t i, size_t j);
  void add_col_multiple(size_t i, size_t j, const RingElem& c);  // col i += c * col j
  void scale_col(size_t i, const RingElem& u);

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  Matrix vstack(const Matrix& below) const;
  Matrix transpose() const;
  RingElem determinant() const;  // Bareiss, square only

  std::string str() const;

 private:
  Ring ring_;
  size_t rows_, cols_;
  std::vector<RingElem> a_;
};

// Canonical row Hermite form of the row lattice of a: pivots canonical
// (positive / monic), entries above each pivot reduced to the canonical
// residue, zero rows dropped, pivot columns strictly increasing. Unique per
// lattice. With track, transform satisfies h = transform * a.
struct HnfResult {
  Matrix h;
  Matrix transform;
  std::vector<size_t> pivots;
  bool tracked = false;
};
HnfResult hermite_form(const Matrix& a, bool track = false);

// canonical residue of x modulo the row lattice; when coeffs is non-null it
// receives q (one entry per row of h) with x = residue + q * h
std::vector<RingElem> reduce_row(const HnfResult& hnf, std::vector<RingElem> x,
                                 std::vector<RingElem>* coeffs = nullptr);

// u * a * v = d with d diagonal, diagonal entries canonical and forming a
// divisibility chain (units first, zeros last); u, v unimodular, v * vinv = 1
struct SnfResult {
  Matrix d, u, v, vinv;
};
SnfResult smith_form(const Matrix& a);

// basis (canonical HNF) of the intersection of two row lattices in R^g
Matrix lattice_intersection(const Matrix& b1, const Matrix& b2);

// basis of {u in R^s : u * b lies in the row lattice of l}, s = rows of b
Matrix lattice_kernel(const Matrix& b, const Matrix& l);

}  // namespace psheaf
