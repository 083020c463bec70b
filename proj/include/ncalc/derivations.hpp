#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncalc/algebra.hpp"

namespace ncalc {

/// Failure of the Leibniz rule for a linear map m, cell (i,j) holding
/// m(e_i e_j) - m(e_i) e_j - e_i m(e_j). Zero everywhere iff m is a
/// derivation.
class DefectTensor {
 public:
  DefectTensor(Algebra alg, std::vector<RVec> cells);

  const Algebra& algebra() const { return alg_; }
  const RVec& at(std::size_t i, std::size_t j) const { return cells_[i * alg_.dim() + j]; }
  bool is_zero() const;
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

 private:
  Algebra alg_;
  std::vector<RVec> cells_;
};

DefectTensor leibniz_defect(const Algebra& a, const Matrix& m);

/// A derivation of the algebra: v(ab) = v(a) b + a v(b). Column j of the
/// matrix holds the coefficients of v(e_j). Construction validates the
/// Leibniz rule on all basis pairs and throws NotADerivation with the first
/// failing pair otherwise.
class Derivation {
 public:
  Derivation(Algebra alg, Matrix mat);

  const Algebra& algebra() const { return alg_; }
  const Matrix& matrix() const { return mat_; }
  Element operator()(const Element& x) const;
  bool is_zero() const { return mat_.is_zero(); }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.alg_.same(b.alg_) && a.mat_ == b.mat_;
  }

 private:
  Algebra alg_;
  Matrix mat_;
};

/// ad_a : x -> a x - x a. Always a derivation.
Derivation inner_derivation(const Element& a);

/// Maps with domain the algebra basis are identified with vectors in
/// Q^(n*dim) by concatenating image columns; derivations use dim = n.
RVec flatten_columns(const Matrix& m);
Matrix unflatten_columns(std::size_t rows, std::size_t cols, const RVec& v);

/// A Z-submodule of Der(A) in canonical basis. Every basis element is a
/// valid Derivation and the span is closed under the action of the center.
/// Cheap to copy (shared immutable state).
class VModule {
 public:
  VModule(Algebra alg, Subspace space);

  const Algebra& algebra() const { return d_->alg; }
  const Subspace& space() const { return d_->space; }
  std::size_t dim() const { return d_->space.dim(); }
  const std::vector<Derivation>& basis() const { return d_->basis; }
  bool contains(const Derivation& v) const { return d_->space.contains(flatten_columns(v.matrix())); }
  /// Coefficients of v over the canonical basis; nullopt if v is outside.
  std::optional<RVec> coordinates(const Derivation& v) const {
    return d_->space.coordinates(flatten_columns(v.matrix()));
  }
  bool same(const VModule& o) const { return d_ == o.d_; }

 private:
  struct Data {
    Algebra alg;
    Subspace space;
    std::vector<Derivation> basis;
    Data(Algebra a, Subspace s) : alg(std::move(a)), space(std::move(s)) {}
  };
  std::shared_ptr<const Data> d_;
};

/// Full Der(A): the solution space of the Leibniz constraints in the n^2
/// matrix entries, canonical basis. Automatically closed under the center
/// action.
VModule derivations(const Algebra& a);

/// The map a -> z * v(a) for central z. Throws NotCentral otherwise.
Derivation z_action(const Element& z, const Derivation& v);
Derivation z_action(const Center& zc, const Element& z, const Derivation& v);

/// Smallest center-closed subspace containing the generators: spans are
/// grown by the center action until the dimension stabilizes.
VModule z_closure(const Algebra& a, const std::vector<Derivation>& generators);

}  // namespace ncalc
