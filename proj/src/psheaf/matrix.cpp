#include "psheaf/matrix.hpp"

#include <optional>
#include <sstream>

namespace psheaf {

Matrix Matrix::identity(const Ring& r, size_t n) {
  Matrix m(r, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, RingElem::one(r));
  return m;
}

Matrix Matrix::from_rows(const Ring& r, const std::vector<std::vector<RingElem>>& rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(r, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw value_error("from_rows: ragged rows");
    for (size_t j = 0; j < cols; ++j) {
      require_same_ring(rows[i][j], RingElem::zero(r), "from_rows");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

std::vector<RingElem> Matrix::row(size_t i) const {
  std::vector<RingElem> out;
  out.reserve(cols_);
  for (size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

void Matrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

void Matrix::add_row_multiple(size_t i, size_t j, const RingElem& c) {
  for (size_t k = 0; k < cols_; ++k) set(i, k, add(at(i, k), mul(c, at(j, k))));
}

void Matrix::scale_row(size_t i, const RingElem& u) {
  for (size_t k = 0; k < cols_; ++k) set(i, k, mul(u, at(i, k)));
}

void Matrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < rows_; ++r) std::swap(a_[r * cols_ + i], a_[r * cols_ + j]);
}

void Matrix::add_col_multiple(size_t i, size_t j, const RingElem& c) {
  for (size_t r = 0; r < rows_; ++r) set(r, i, add(at(r, i), mul(c, at(r, j))));
}

void Matrix::scale_col(size_t i, const RingElem& u) {
  for (size_t r = 0; r < rows_; ++r) set(r, i, mul(u, at(r, i)));
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw value_error("matrix product: dimension mismatch");
  Matrix out(ring_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        out.set(i, j, add(out.at(i, j), mul(at(i, k), o.at(k, j))));
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_ || !(ring_ == below.ring_))
    throw value_error("vstack: shape mismatch");
  Matrix out(ring_, rows_ + below.rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
  for (size_t i = 0; i < below.rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.set(rows_ + i, j, below.at(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

RingElem Matrix::determinant() const {
  if (rows_ != cols_) throw value_error("determinant: square matrix required");
  size_t n = rows_;
  if (n == 0) return RingElem::one(ring_);
  Matrix m = *this;
  RingElem prev = RingElem::one(ring_);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      size_t piv = k;
      while (piv < n && m.at(piv, k).is_zero()) ++piv;
      if (piv == n) return RingElem::zero(ring_);
      m.swap_rows(k, piv);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        RingElem t = sub(mul(m.at(k, k), m.at(i, j)), mul(m.at(i, k), m.at(k, j)));
        m.set(i, j, div_exact(t, prev));
      }
      m.set(i, k, RingElem::zero(ring_));
    }
    prev = m.at(k, k);
  }
  RingElem det = m.at(n - 1, n - 1);
  return negate ? neg(det) : det;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? ";" : "") << "(";
    for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    os << ")";
  }
  os << "]";
  return os.str();
}

HnfResult hermite_form(const Matrix& a, bool track) {
  const Ring& R = a.ring();
  Matrix w = a;
  Matrix t = Matrix::identity(R, a.rows());
  size_t r = 0;
  std::vector<size_t> pivots;
  for (size_t j = 0; j < a.cols() && r < w.rows(); ++j) {
    // Euclidean elimination below row r in column j
    while (true) {
      std::optional<size_t> best;
      for (size_t i = r; i < w.rows(); ++i) {
        if (w.at(i, j).is_zero()) continue;
        if (!best || cmp_size(w.at(i, j), w.at(*best, j)) < 0) best = i;
      }
      if (!best) break;
      w.swap_rows(r, *best);
      if (track) t.swap_rows(r, *best);
      bool clean = true;
      for (size_t i = r + 1; i < w.rows(); ++i) {
        if (w.at(i, j).is_zero()) continue;
        auto [q, rem] = divmod(w.at(i, j), w.at(r, j));
        w.add_row_multiple(i, r, neg(q));
        if (track) t.add_row_multiple(i, r, neg(q));
        if (!rem.is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (w.at(r, j).is_zero()) continue;
    RingElem u = canonical_unit(w.at(r, j));
    w.scale_row(r, u);
    if (track) t.scale_row(r, u);
    for (size_t i = 0; i < r; ++i) {
      auto [q, rem] = divmod(w.at(i, j), w.at(r, j));
      (void)rem;
      if (q.is_zero()) continue;
      w.add_row_multiple(i, r, neg(q));
      if (track) t.add_row_multiple(i, r, neg(q));
    }
    pivots.push_back(j);
    ++r;
  }
  HnfResult out{Matrix(R, r, a.cols()), Matrix(R, r, a.rows()), pivots, track};
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.h.set(i, j, w.at(i, j));
  if (track)
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < a.rows(); ++j) out.transform.set(i, j, t.at(i, j));
  return out;
}

std::vector<RingElem> reduce_row(const HnfResult& hnf, std::vector<RingElem> x,
                                 std::vector<RingElem>* coeffs) {
  if (x.size() != hnf.h.cols()) throw value_error("reduce_row: length mismatch");
  const Ring& R = hnf.h.ring();
  if (coeffs) coeffs->assign(hnf.h.rows(), RingElem::zero(R));
  for (size_t i = 0; i < hnf.h.rows(); ++i) {
    size_t j = hnf.pivots[i];
    if (x[j].is_zero()) continue;
    auto [q, rem] = divmod(x[j], hnf.h.at(i, j));
    (void)rem;
    if (q.is_zero()) continue;
    for (size_t k = 0; k < x.size(); ++k) x[k] = sub(x[k], mul(q, hnf.h.at(i, k)));
    if (coeffs) (*coeffs)[i] = q;
  }
  return x;
}

namespace {

struct SnfWork {
  Matrix d, u, v, vinv;

  void row_add(size_t i, size_t j, const RingElem& c) {
    d.add_row_multiple(i, j, c);
    u.add_row_multiple(i, j, c);
  }
  void row_swap(size_t i, size_t j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void col_add(size_t i, size_t j, const RingElem& c) {
    d.add_col_multiple(i, j, c);
    v.add_col_multiple(i, j, c);
    vinv.add_row_multiple(j, i, neg(c));
  }
  void col_swap(size_t i, size_t j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  }
  void col_scale(size_t i, const RingElem& unit) {
    d.scale_col(i, unit);
    v.scale_col(i, unit);
    vinv.scale_row(i, unit_inverse(unit));
  }
};

}  // namespace

SnfResult smith_form(const Matrix& a) {
  const Ring& R = a.ring();
  SnfWork w{a, Matrix::identity(R, a.rows()), Matrix::identity(R, a.cols()),
            Matrix::identity(R, a.cols())};
  size_t n = std::min(a.rows(), a.cols());
  for (size_t t = 0; t < n; ++t) {
    // move a minimal nonzero entry of the trailing block to (t, t)
    std::optional<std::pair<size_t, size_t>> piv;
    for (size_t i = t; i < a.rows(); ++i)
      for (size_t j = t; j < a.cols(); ++j) {
        if (w.d.at(i, j).is_zero()) continue;
        if (!piv || cmp_size(w.d.at(i, j), w.d.at(piv->first, piv->second)) < 0)
          piv = {i, j};
      }
    if (!piv) break;
    w.row_swap(t, piv->first);
    w.col_swap(t, piv->second);
    while (true) {
      bool restart = false;
      for (size_t i = t + 1; i < a.rows(); ++i) {
        if (w.d.at(i, t).is_zero()) continue;
        auto [q, rem] = divmod(w.d.at(i, t), w.d.at(t, t));
        w.row_add(i, t, neg(q));
        if (!rem.is_zero()) {
          w.row_swap(t, i);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      for (size_t j = t + 1; j < a.cols(); ++j) {
        if (w.d.at(t, j).is_zero()) continue;
        auto [q, rem] = divmod(w.d.at(t, j), w.d.at(t, t));
        w.col_add(j, t, neg(q));
        if (!rem.is_zero()) {
          w.col_swap(t, j);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      // divisibility of the trailing block by d[t][t]
      bool chain = true;
      for (size_t i = t + 1; i < a.rows() && chain; ++i)
        for (size_t j = t + 1; j < a.cols() && chain; ++j)
          if (!divides(w.d.at(t, t), w.d.at(i, j))) {
            w.row_add(t, i, RingElem::one(R));
            chain = false;
          }
      if (chain) break;
    }
  }
  for (size_t t = 0; t < n; ++t) {
    if (w.d.at(t, t).is_zero()) continue;
    RingElem u = canonical_unit(w.d.at(t, t));
    if (!u.is_one()) w.col_scale(t, u);
  }
  return {w.d, w.u, w.v, w.vinv};
}

Matrix lattice_intersection(const Matrix& b1, const Matrix& b2) {
  if (b1.cols() != b2.cols() || !(b1.ring() == b2.ring()))
    throw value_error("lattice_intersection: shape mismatch");
  const Ring& R = b1.ring();
  size_t g = b1.cols();
  Matrix stacked(R, b1.rows() + b2.rows(), 2 * g);
  for (size_t i = 0; i < b1.rows(); ++i)
    for (size_t j = 0; j < g; ++j) {
      stacked.set(i, j, b1.at(i, j));
      stacked.set(i, g + j, b1.at(i, j));
    }
  for (size_t i = 0; i < b2.rows(); ++i)
    for (size_t j = 0; j < g; ++j) stacked.set(b1.rows() + i, j, b2.at(i, j));
  HnfResult h = hermite_form(stacked);
  std::vector<std::vector<RingElem>> rows;
  for (size_t i = 0; i < h.h.rows(); ++i) {
    if (h.pivots[i] < g) continue;  // left block nonzero
    std::vector<RingElem> r;
    for (size_t j = 0; j < g; ++j) r.push_back(h.h.at(i, g + j));
    rows.push_back(std::move(r));
  }
  Matrix basis = rows.empty() ? Matrix(R, 0, g) : Matrix::from_rows(R, rows);
  return hermite_form(basis).h;
}

Matrix lattice_kernel(const Matrix& b, const Matrix& l) {
  if (b.cols() != l.cols() || !(b.ring() == l.ring()))
    throw value_error("lattice_kernel: shape mismatch");
  const Ring& R = b.ring();
  size_t g = b.cols(), s = b.rows();
  Matrix stacked(R, s + l.rows(), g + s);
  for (size_t i = 0; i < s; ++i) {
    for (size_t j = 0; j < g; ++j) stacked.set(i, j, b.at(i, j));
    stacked.set(i, g + i, RingElem::one(R));
  }
  for (size_t i = 0; i < l.rows(); ++i)
    for (size_t j = 0; j < g; ++j) stacked.set(s + i, j, l.at(i, j));
  HnfResult h = hermite_form(stacked);
  std::vector<std::vector<RingElem>> rows;
  for (size_t i = 0; i < h.h.rows(); ++i) {
    if (h.pivots[i] < g) continue;
    std::vector<RingElem> r;
    for (size_t j = 0; j < s; ++j) r.push_back(h.h.at(i, g + j));
    rows.push_back(std::move(r));
  }
  Matrix basis = rows.empty() ? Matrix(R, 0, s) : Matrix::from_rows(R, rows);
  return hermite_form(basis).h;
}

}  // namespace psheaf
