#pragma once

#include <optional>
#include <vector>

#include "ncalc/duality.hpp"

namespace ncalc {

/// An element of the second dual: an A-bimodule homomorphism V+ -> A.
/// Column l of the value matrix holds the coefficients of the value on the
/// l-th canonical basis covector.
class BidualElement {
 public:
  BidualElement(CovectorSpace cspace, Matrix values);

  const Algebra& algebra() const { return cspace_.algebra(); }
  const CovectorSpace& covector_space() const { return cspace_; }
  const Matrix& values() const { return values_; }
  bool is_zero() const { return values_.is_zero(); }

  /// Value at a covector (expanded over the canonical basis of V+).
  Element evaluate(const Covector& w) const;

  BidualElement operator+(const BidualElement& o) const;
  BidualElement scaled(const Rational& s) const;
  friend bool operator==(const BidualElement& a, const BidualElement& b) {
    return a.cspace_.same(b.cspace_) && a.values_ == b.values_;
  }

 private:
  CovectorSpace cspace_;
  Matrix values_;
};

/// V++ = hom over A-bimodules from V+ to A, canonical basis. A Z-module under
/// (z w)(omega) = z * w(omega).
class BidualSpace {
 public:
  BidualSpace(Algebra alg, CovectorSpace cspace, Subspace space);

  const Algebra& algebra() const { return d_->alg; }
  const CovectorSpace& covector_space() const { return d_->cspace; }
  const Subspace& space() const { return d_->space; }
  std::size_t dim() const { return d_->space.dim(); }
  const std::vector<BidualElement>& basis() const { return d_->basis; }
  bool contains(const BidualElement& w) const { return d_->space.contains(flatten_columns(w.values())); }

 private:
  struct Data {
    Algebra alg;
    CovectorSpace cspace;
    Subspace space;
    std::vector<BidualElement> basis;
    Data(Algebra a, CovectorSpace c, Subspace s) : alg(std::move(a)), cspace(std::move(c)), space(std::move(s)) {}
  };
  std::shared_ptr<const Data> d_;
};

/// Solution space of the bimodule-homomorphism constraints
/// w(e_i . phi . e_k) = e_i * w(phi) * e_k over all basis triples. The
/// constraints are generated from the one-sided actions (b = 1, then a = 1),
/// which is equivalent: a Q-linear w commuting with all left and right basis
/// actions commutes with their compositions, and the general triple follows
/// by linearity.
BidualSpace second_dual(const Algebra& a, const CovectorSpace& c);

/// The canonical map v -> v^ with v^(omega) = omega(v). Throws NotInModule.
BidualElement embed(const CovectorSpace& c, const Derivation& v);

/// Matrix of the canonical embedding over the canonical bases: row j is the
/// flattened image of the j-th V basis element.
Matrix embedding_matrix(const CovectorSpace& c);
std::size_t embedding_rank(const CovectorSpace& c);

/// Witness for projectivity of V over Z: generators (the canonical V basis)
/// and Z-valued cogenerators with v = sum_i omega^i(v) . v_i for all v.
struct DualBasisCertificate {
  VModule vmod;
  std::vector<Covector> cogenerators;  // values lie in the center

  const std::vector<Derivation>& generators() const { return vmod.basis(); }
};

/// Exact re-check of the certificate identity on the V basis plus the
/// values-in-Z requirement on the cogenerators.
bool certificate_valid(const DualBasisCertificate& cert);

/// Solves the dual-basis system for the canonical generating set. A solution
/// decides finitely-generated projectivity of V over Z; "no certificate" is a
/// valid outcome (inconsistent system), not an error.
std::optional<DualBasisCertificate> dual_basis_certificate(const Algebra& a, const VModule& v);

/// Constructive inverse of the canonical embedding given a certificate:
/// v = sum_i (w(omega^i)) . v_i. Verifies that every coefficient w(omega^i)
/// is central (CoefficientNotCentral otherwise) and that embed(v) == w
/// (LiftMismatch otherwise).
Derivation lift(const BidualElement& w, const DualBasisCertificate& cert);

/// Covectors outside the sub-bimodule generated by the differentials.
struct GhostAnalysis {
  std::size_t ghost_dim = 0;                // dim V+ - dim closure
  std::vector<Covector> representatives;    // canonical coset representatives
  Subspace closure;                         // bimodule closure of {d e_1, ..., d e_n}
};

GhostAnalysis ghost_covectors(const CovectorSpace& c);
GhostAnalysis ghost_covectors(const Algebra& a, const VModule& v);

/// Full diagnostic record for the pair (A, V).
struct ReflexivityReport {
  Algebra alg;
  Center zcenter;
  VModule v;
  StarCovectorSpace vstar;
  CovectorSpace vdagger;
  BidualSpace vddagger;
  std::size_t embedding_rank = 0;
  bool injective = false;      // embedding_rank == dim V (always holds; hard-checked)
  bool reflexive = false;      // embedding bijective, decided from dimensions
  bool nondegenerate = false;  // right kernel is zero (left side holds by representation)
  std::optional<DualBasisCertificate> certificate;
  GhostAnalysis ghosts;
  std::size_t ghost_bidual_dim = 0;  // dim V++ - embedding_rank
  Subspace kernel_right;             // coordinates over the V basis
};

/// Runs the whole pipeline and enforces the internal implications
/// (injectivity; certificate => reflexivity with exact round trips) as
/// hard checks.
ReflexivityReport reflexivity_report(const Algebra& a, const VModule& v);
ReflexivityReport reflexivity_report(const Algebra& a);

}  // namespace ncalc
