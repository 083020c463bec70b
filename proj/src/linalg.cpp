#include "ncalc/linalg.hpp"

#include <algorithm>

#include "ncalc/errors.hpp"

namespace ncalc {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<RVec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::ShapeMismatch, "row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RVec Matrix::col(std::size_t c) const {
  RVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

RVec Matrix::row(std::size_t r) const {
  RVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, const RVec& v) {
  if (v.size() != rows_) throw Error(ErrorKind::ShapeMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

RVec Matrix::apply(const RVec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector size mismatch");
  RVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) acc.add_mul(at(r, c), v[c]);
    }
    out[r] = std::move(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product size mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (!o.at(k, c).is_zero()) out.at(r, c).add_mul(a, o.at(k, c));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum size mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference size mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // First nonzero entry below r serves as pivot; exact arithmetic needs no
    // magnitude-based pivoting.
    std::size_t p = r;
    while (p < rows && a.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    const Rational inv = Rational(1) / a.at(r, c);
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Rational f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j) a.at(i, j).sub_mul(f, a.at(r, j));
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

Subspace Subspace::from_generators(std::size_t ambient, const std::vector<RVec>& gens) {
  Subspace s(ambient);
  if (gens.empty()) return s;
  RrefResult rr = rref(Matrix::from_rows(ambient, gens));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) s.rows_.push_back(rr.m.row(i));
  s.pivots_ = rr.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    RVec v(ambient);
    v[i] = 1;
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

RVec Subspace::reduce(const RVec& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector has wrong ambient dimension");
  RVec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) r[j].sub_mul(f, rows_[i][j]);
  }
  return r;
}

bool Subspace::contains(const RVec& v) const {
  RVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<RVec> Subspace::coordinates(const RVec& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector has wrong ambient dimension");
  RVec coords(rows_.size());
  RVec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    coords[i] = r[pivots_[i]];
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) r[j].sub_mul(coords[i], rows_[i][j]);
  }
  for (const Rational& x : r)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspace sum: ambient dimensions differ");
  std::vector<RVec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::from_generators(a.ambient(), gens);
}

// Zassenhaus: RREF of [A|A; B|0]; rows whose left half vanished span the
// intersection in the right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspace intersection: ambient dimensions differ");
  const std::size_t d = a.ambient();
  std::vector<RVec> rows;
  for (const RVec& v : a.basis()) {
    RVec w(2 * d);
    for (std::size_t j = 0; j < d; ++j) w[j] = w[d + j] = v[j];
    rows.push_back(std::move(w));
  }
  for (const RVec& v : b.basis()) {
    RVec w(2 * d);
    for (std::size_t j = 0; j < d; ++j) w[j] = v[j];
    rows.push_back(std::move(w));
  }
  if (rows.empty()) return Subspace(d);
  RrefResult rr = rref(Matrix::from_rows(2 * d, rows));
  std::vector<RVec> inter;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] < d) continue;  // left half nonzero
    RVec w(d);
    for (std::size_t j = 0; j < d; ++j) w[j] = rr.m.at(i, d + j);
    inter.push_back(std::move(w));
  }
  return Subspace::from_generators(d, inter);
}

Subspace nullspace(const Matrix& m) {
  const std::size_t cols = m.cols();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<RVec> gens;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.m.at(i, f);
    gens.push_back(std::move(v));
  }
  // Re-reduce: the free-column vectors need not be in RREF themselves.
  return Subspace::from_generators(cols, gens);
}

std::optional<SolveResult> solve(const Matrix& m, const RVec& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "solve: right-hand side length mismatch");
  const std::size_t cols = m.cols();
  Matrix aug(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, cols) = b[r];
  }
  RrefResult rr = rref(aug);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    if (rr.pivots[i] == cols) return std::nullopt;  // pivot in the augmented column
  RVec particular(cols);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) particular[rr.pivots[i]] = rr.m.at(i, cols);
  return SolveResult{std::move(particular), nullspace(m)};
}

bool EchelonBasis::insert(const RVec& v) {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector has wrong ambient dimension");
  RVec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) r[j].sub_mul(f, rows_[i][j]);
  }
  std::size_t lead = 0;
  while (lead < ambient_ && r[lead].is_zero()) ++lead;
  if (lead == ambient_) return false;
  const Rational inv = Rational(1) / r[lead];
  for (std::size_t j = lead; j < ambient_; ++j) r[j] *= inv;
  // Back-eliminate the new pivot column from existing rows to stay in RREF.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = rows_[i][lead];
    if (f.is_zero()) continue;
    for (std::size_t j = lead; j < ambient_; ++j)
      if (!r[j].is_zero()) rows_[i][j].sub_mul(f, r[j]);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  const std::size_t k = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(r));
  return true;
}

RVec EchelonBasis::reduce(const RVec& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector has wrong ambient dimension");
  RVec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) r[j].sub_mul(f, rows_[i][j]);
  }
  return r;
}

bool EchelonBasis::contains(const RVec& v) const {
  RVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

Subspace EchelonBasis::to_subspace() const {
  Subspace s(ambient_);
  s.rows_ = rows_;
  s.pivots_ = pivots_;
  return s;
}

KernelRefiner::KernelRefiner(std::size_t ambient) : ambient_(ambient) {
  rows_.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    RVec v(ambient);
    v[i] = 1;
    rows_.push_back(std::move(v));
  }
}

void KernelRefiner::constrain(const SparseRow& row) {
  if (rows_.empty()) return;
  RVec y(rows_.size());
  bool any = false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational acc;
    for (const auto& [idx, val] : row) {
      const Rational& x = rows_[i][idx];
      if (!x.is_zero()) acc.add_mul(val, x);
    }
    any = any || !acc.is_zero();
    y[i] = std::move(acc);
  }
  if (!any) return;
  std::size_t p = 0;
  while (y[p].is_zero()) ++p;
  const RVec pivot_row = std::move(rows_[p]);
  const Rational yp = y[p];
  std::vector<RVec> next;
  next.reserve(rows_.size() - 1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i == p) continue;
    RVec r = std::move(rows_[i]);
    if (!y[i].is_zero()) {
      const Rational f = y[i] / yp;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!pivot_row[j].is_zero()) r[j].sub_mul(f, pivot_row[j]);
    }
    next.push_back(std::move(r));
  }
  rows_ = std::move(next);
}

Subspace KernelRefiner::subspace() const { return Subspace::from_generators(ambient_, rows_); }

}  // namespace ncalc
