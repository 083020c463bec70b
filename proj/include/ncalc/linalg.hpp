#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncalc/rational.hpp"

namespace ncalc {

using RVec = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<RVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  RVec col(std::size_t c) const;
  RVec row(std::size_t r) const;
  void set_col(std::size_t c, const RVec& v);

  /// Matrix-vector product (v indexed by columns).
  RVec apply(const RVec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& s) const;
  Matrix transpose() const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

struct RrefResult {
  Matrix m;
  std::vector<std::size_t> pivots;  // pivot columns, strictly increasing
};

/// Reduced row echelon form with unit pivots; unique for a given row space.
RrefResult rref(const Matrix& m);

/// Canonical subspace of Q^ambient: basis rows in RREF, pivots increasing.
/// Equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace from_generators(std::size_t ambient, const std::vector<RVec>& gens);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<RVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RVec& v) const;
  /// Coefficients of v over the basis, or nullopt if v is outside the span.
  std::optional<RVec> coordinates(const RVec& v) const;
  /// Residual of v after eliminating all pivot positions.
  RVec reduce(const RVec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_;
  std::vector<RVec> rows_;
  std::vector<std::size_t> pivots_;
  friend class EchelonBasis;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Kernel {x : m x = 0} in canonical form.
Subspace nullspace(const Matrix& m);

struct SolveResult {
  RVec particular;
  Subspace kernel;
};

/// Exact solution of m x = b. nullopt iff b is outside the column space.
/// The particular solution is canonical (free variables set to zero).
std::optional<SolveResult> solve(const Matrix& m, const RVec& b);

/// Incrementally maintained RREF basis; supports span growth one vector at a
/// time while staying canonical.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<RVec>& rows() const { return rows_; }

  /// Adds v to the span. Returns true iff the dimension grew.
  bool insert(const RVec& v);
  bool contains(const RVec& v) const;
  RVec reduce(const RVec& v) const;
  Subspace to_subspace() const;

 private:
  std::size_t ambient_;
  std::vector<RVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// One sparse linear constraint: sum of coeff * x[index] = 0.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Streaming kernel computation: starts from the full space and intersects
/// with the kernel of each constraint row as it arrives. Intended for large
/// constraint sets whose solution space is small; cost per constraint is
/// proportional to the current dimension rather than to the number of rows
/// already processed.
class KernelRefiner {
 public:
  explicit KernelRefiner(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  void constrain(const SparseRow& row);
  /// Canonical result (RREF of the surviving basis).
  Subspace subspace() const;

 private:
  std::size_t ambient_;
  std::vector<RVec> rows_;  // basis of the current solution space
};

}  // namespace ncalc
