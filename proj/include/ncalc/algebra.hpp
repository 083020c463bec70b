#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncalc/linalg.hpp"

namespace ncalc {

class Element;

/// Finite-dimensional unital associative algebra over Q, given by structure
/// constants. Immutable after construction; cheap to copy (shared state).
/// Associativity and the unit laws are validated exhaustively on basis
/// triples at construction time.
class Algebra {
 public:
  std::size_t dim() const { return d_->n; }
  const std::string& label(std::size_t i) const { return d_->labels[i]; }
  const std::vector<std::string>& labels() const { return d_->labels; }

  /// Coefficient vector of e_i * e_j.
  const RVec& structure(std::size_t i, std::size_t j) const { return d_->table[i * d_->n + j]; }
  const RVec& unit_coeffs() const { return d_->unit; }

  Element unit() const;
  Element zero() const;
  Element basis_element(std::size_t i) const;
  Element element(RVec coeffs) const;

  /// Identity of the underlying shared state; elements of distinct instances
  /// never mix even if structurally equal.
  bool same(const Algebra& o) const { return d_ == o.d_; }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<RVec> table;  // table[i*n+j] = coefficients of e_i * e_j
    RVec unit;
  };
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend Algebra make_algebra(const std::vector<std::vector<RVec>>& table, const RVec& unit,
                              const std::vector<std::string>& labels);
};

/// Validates shape, associativity over all basis triples, and both unit laws.
/// Throws ShapeMismatch / NotAssociative (first failing triple) / BadUnit
/// (first failing basis element).
Algebra make_algebra(const std::vector<std::vector<RVec>>& table, const RVec& unit,
                     const std::vector<std::string>& labels);

class Element {
 public:
  Element(Algebra alg, RVec coeffs);

  const Algebra& algebra() const { return alg_; }
  const RVec& coeffs() const { return c_; }
  const Rational& coeff(std::size_t i) const { return c_[i]; }
  bool is_zero() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const Rational& s) const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  Algebra alg_;
  RVec c_;
};

/// Bilinear product through the structure table.
Element mul(const Element& x, const Element& y);
/// [x, y] = xy - yx.
Element commutator(const Element& x, const Element& y);

/// Matrix of left multiplication y -> x*y over the basis.
Matrix left_mult_matrix(const Element& x);
/// Matrix of right multiplication y -> y*x over the basis.
Matrix right_mult_matrix(const Element& x);

/// The center Z = {z : z e_i = e_i z for all i}, canonical basis. Always
/// contains the unit line.
class Center {
 public:
  Center(Algebra alg, Subspace space);

  const Algebra& algebra() const { return alg_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<Element>& basis() const { return basis_; }
  bool contains(const Element& x) const { return space_.contains(x.coeffs()); }

 private:
  Algebra alg_;
  Subspace space_;
  std::vector<Element> basis_;
};

Center center(const Algebra& a);

/// Built-in algebra catalogue:
///   matrix n              n^2-dim full matrix algebra, basis Eij row-major
///   dual-numbers          Q[x]/(x^2), basis {1, x}
///   triangular n          upper-triangular n x n matrices, basis Eij (i<=j) row-major
///   group-algebra-cyclic n rational group algebra of Z/n, basis {1, g, ..., g^(n-1)}
///   quaternions           i^2 = j^2 = -1, ij = k = -ji, basis {1, i, j, k}
/// Throws UnknownPreset / BadParams.
Algebra preset(const std::string& name, std::optional<long> param = std::nullopt);

/// Names accepted by preset(), in catalogue order.
const std::vector<std::string>& preset_names();

}  // namespace ncalc
