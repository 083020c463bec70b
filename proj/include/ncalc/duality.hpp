#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncalc/derivations.hpp"

namespace ncalc {

/// A covector: Z-linear map V -> A. Column j of the value matrix holds the
/// coefficients of the value on the j-th canonical basis element of V.
/// Z-linearity is an invariant of every producer in this module, not
/// re-checked per instance; is_z_linear() makes it testable.
class Covector {
 public:
  Covector(VModule vmod, Matrix values);

  const Algebra& algebra() const { return vmod_.algebra(); }
  const VModule& vmodule() const { return vmod_; }
  const Matrix& values() const { return values_; }
  bool is_zero() const { return values_.is_zero(); }

  /// Value at the module element with the given coordinates over the V basis.
  Element evaluate(const RVec& coords) const;

  Covector operator+(const Covector& o) const;
  Covector operator-(const Covector& o) const;
  Covector scaled(const Rational& s) const;
  friend bool operator==(const Covector& a, const Covector& b) {
    return a.vmod_.same(b.vmod_) && a.values_ == b.values_;
  }

 private:
  VModule vmod_;
  Matrix values_;
};

bool is_z_linear(const Covector& w, const Center& zc);

/// The covector bimodule V+ = hom_Z(V, A), canonical basis. Closed under the
/// bimodule action. Cheap to copy.
class CovectorSpace {
 public:
  CovectorSpace(Algebra alg, VModule vmod, Subspace space);

  const Algebra& algebra() const { return d_->alg; }
  const VModule& vmodule() const { return d_->vmod; }
  const Subspace& space() const { return d_->space; }
  std::size_t dim() const { return d_->space.dim(); }
  const std::vector<Covector>& basis() const { return d_->basis; }
  bool contains(const Covector& w) const { return d_->space.contains(flatten_columns(w.values())); }
  std::optional<RVec> coordinates(const Covector& w) const {
    return d_->space.coordinates(flatten_columns(w.values()));
  }
  bool same(const CovectorSpace& o) const { return d_ == o.d_; }

 private:
  struct Data {
    Algebra alg;
    VModule vmod;
    Subspace space;
    std::vector<Covector> basis;
    Data(Algebra a, VModule v, Subspace s) : alg(std::move(a)), vmod(std::move(v)), space(std::move(s)) {}
  };
  std::shared_ptr<const Data> d_;
};

/// The Z-valued dual V* = hom_Z(V, Z): covectors whose values lie in the
/// center. A subspace of V+.
class StarCovectorSpace {
 public:
  StarCovectorSpace(Algebra alg, VModule vmod, Subspace space);

  const Algebra& algebra() const { return base_.algebra(); }
  const VModule& vmodule() const { return base_.vmodule(); }
  const Subspace& space() const { return base_.space(); }
  std::size_t dim() const { return base_.dim(); }
  const std::vector<Covector>& basis() const { return base_.basis(); }
  const CovectorSpace& as_covector_space() const { return base_; }

 private:
  CovectorSpace base_;
};

/// All Q-linear maps V -> A subject to the Z-linearity constraints
/// w(z.v) = z*w(v), solved exactly; canonical basis.
CovectorSpace dual(const Algebra& a, const VModule& v);

/// The value-constrained refinement of dual(): values confined to the center.
StarCovectorSpace star_dual(const Algebra& a, const VModule& v);

/// Evaluation pairing <w, v> = w(v). Throws NotInModule if v is outside V.
Element couple(const Covector& w, const Derivation& v);

/// (a w b)(v) = a * w(v) * b; the bimodule action on covectors.
Covector bimodule_act(const Element& a, const Covector& w, const Element& b);

/// da: v -> v(a).
Covector differential(const VModule& v, const Element& a);

/// {v in V : w(v) = 0 for all w in V+}, in coordinates over the canonical V
/// basis. Computed twice (full pairing and differentials-only pairing) and
/// cross-compared; a mismatch is an internal-consistency failure.
Subspace right_kernel(const Algebra& a, const VModule& v);

struct LeibnizDifferentialCheck {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  std::vector<std::string> log;
  explicit operator bool() const { return holds; }
};

/// Verifies d(ab) = da*b + a*db as an identity of covectors over all basis
/// pairs (a, b).
LeibnizDifferentialCheck leibniz_for_differentials(const Algebra& a, const VModule& v);

}  // namespace ncalc
