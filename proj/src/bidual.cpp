#include "ncalc/bidual.hpp"

#include <algorithm>
#include <string>

#include "ncalc/errors.hpp"

namespace ncalc {

BidualElement::BidualElement(CovectorSpace cspace, Matrix values)
    : cspace_(std::move(cspace)), values_(std::move(values)) {
  if (values_.rows() != cspace_.algebra().dim() || values_.cols() != cspace_.dim())
    throw Error(ErrorKind::ShapeMismatch, "bidual value matrix must be n x dim(V+)");
}

Element BidualElement::evaluate(const Covector& w) const {
  auto coords = cspace_.coordinates(w);
  if (!coords) throw Error(ErrorKind::NotInModule, "covector is not in the covector space");
  return algebra().element(values_.apply(*coords));
}

BidualElement BidualElement::operator+(const BidualElement& o) const {
  if (!cspace_.same(o.cspace_)) throw Error(ErrorKind::AlgebraMismatch, "bidual elements over different spaces");
  return BidualElement(cspace_, values_ + o.values_);
}

BidualElement BidualElement::scaled(const Rational& s) const { return BidualElement(cspace_, values_.scaled(s)); }

BidualSpace::BidualSpace(Algebra alg, CovectorSpace cspace, Subspace space) {
  const std::size_t n = alg.dim(), p = cspace.dim();
  if (space.ambient() != n * p) throw Error(ErrorKind::ShapeMismatch, "bidual ambient must be n*dim(V+)");
  auto data = std::make_shared<Data>(std::move(alg), std::move(cspace), std::move(space));
  for (const RVec& row : data->space.basis()) data->basis.emplace_back(data->cspace, unflatten_columns(n, p, row));
  d_ = std::move(data);
}

namespace {

// Expansion coefficients of an acted covector over the canonical V+ basis;
// existence is guaranteed by closure of V+ under the action.
RVec expand_in(const CovectorSpace& c, const Matrix& values) {
  auto coords = c.space().coordinates(flatten_columns(values));
  if (!coords) internal_check_failed("covector space is not closed under the bimodule action");
  return std::move(*coords);
}

}  // namespace

BidualSpace second_dual(const Algebra& a, const CovectorSpace& c) {
  const std::size_t n = a.dim(), p = c.dim();
  if (p == 0) return BidualSpace(a, c, Subspace(0));

  KernelRefiner ref(n * p);
  RVec dense(n * p);
  std::vector<std::size_t> touched;
  SparseRow sparse;

  // One-sided action constraints; `mult` is L_{e_i} or R_{e_i}. For each basis
  // covector phi_j and component q:
  //   sum_l coeff_l * x[l][q] - sum_t mult[q][t] * x[j][t] = 0
  // where coeff expands the acted covector over the V+ basis and x[l] is the
  // unknown value of w on the l-th basis covector (index l*n+t).
  auto constrain_action = [&](const Matrix& mult) {
    for (std::size_t j = 0; j < p; ++j) {
      const RVec coeff = expand_in(c, mult * c.basis()[j].values());
      for (std::size_t q = 0; q < n; ++q) {
        auto bump = [&](std::size_t idx, const Rational& val) {
          if (val.is_zero()) return;
          if (dense[idx].is_zero()) touched.push_back(idx);
          dense[idx] += val;
        };
        for (std::size_t l = 0; l < p; ++l) bump(l * n + q, coeff[l]);
        for (std::size_t t = 0; t < n; ++t) bump(j * n + t, -mult.at(q, t));
        sparse.clear();
        for (std::size_t idx : touched) {
          if (!dense[idx].is_zero()) sparse.emplace_back(idx, dense[idx]);
          dense[idx] = Rational();
        }
        touched.clear();
        if (!sparse.empty()) ref.constrain(sparse);
      }
    }
  };

  for (std::size_t i = 0; i < n; ++i) constrain_action(left_mult_matrix(a.basis_element(i)));
  for (std::size_t i = 0; i < n; ++i) constrain_action(right_mult_matrix(a.basis_element(i)));

  return BidualSpace(a, c, ref.subspace());
}

BidualElement embed(const CovectorSpace& c, const Derivation& v) {
  auto coords = c.vmodule().coordinates(v);
  if (!coords) throw Error(ErrorKind::NotInModule, "derivation is not in the module");
  const std::size_t n = c.algebra().dim(), p = c.dim();
  Matrix values(n, p);
  for (std::size_t l = 0; l < p; ++l) values.set_col(l, c.basis()[l].values().apply(*coords));
  return BidualElement(c, values);
}

Matrix embedding_matrix(const CovectorSpace& c) {
  const std::size_t m = c.vmodule().dim(), n = c.algebra().dim(), p = c.dim();
  Matrix e(m, n * p);
  for (std::size_t j = 0; j < m; ++j) {
    const RVec img = flatten_columns(embed(c, c.vmodule().basis()[j]).values());
    for (std::size_t t = 0; t < n * p; ++t) e.at(j, t) = img[t];
  }
  return e;
}

std::size_t embedding_rank(const CovectorSpace& c) { return rref(embedding_matrix(c)).pivots.size(); }

bool certificate_valid(const DualBasisCertificate& cert) {
  const Algebra& a = cert.vmod.algebra();
  const Center zc = center(a);
  const std::size_t m = cert.vmod.dim();
  if (cert.cogenerators.size() != m) return false;
  for (const Covector& w : cert.cogenerators) {
    for (std::size_t j = 0; j < m; ++j)
      if (!zc.space().contains(w.values().col(j))) return false;
  }
  // v_j = sum_i (omega^i(v_j)) . v_i on the whole basis.
  for (std::size_t j = 0; j < m; ++j) {
    Matrix acc(a.dim(), a.dim());
    for (std::size_t i = 0; i < m; ++i) {
      const Element coeff = a.element(cert.cogenerators[i].values().col(j));
      acc = acc + left_mult_matrix(coeff) * cert.vmod.basis()[i].matrix();
    }
    if (!(acc == cert.vmod.basis()[j].matrix())) return false;
  }
  return true;
}

std::optional<DualBasisCertificate> dual_basis_certificate(const Algebra& a, const VModule& v) {
  const std::size_t n = a.dim(), m = v.dim();
  const StarCovectorSpace vs = star_dual(a, v);
  const std::size_t q = vs.dim();

  // Unknowns mu[i][s]: cogenerator omega^i = sum_s mu[i][s] Phi_s over the
  // canonical V* basis. The identity v_j = sum_i (omega^i(v_j)) . v_i becomes
  // linear in mu once the left-multiplication matrices of the values
  // Phi_s(v_j) are expanded.
  std::vector<Matrix> generator(m);
  for (std::size_t i = 0; i < m; ++i) generator[i] = v.basis()[i].matrix();

  Matrix sys(m * n * n, m * q);
  RVec rhs(m * n * n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t s = 0; s < q; ++s) {
      const Element val = a.element(vs.basis()[s].values().col(j));
      const Matrix prodbase = left_mult_matrix(val);
      for (std::size_t i = 0; i < m; ++i) {
        const Matrix contrib = prodbase * generator[i];
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t cidx = 0; cidx < n; ++cidx)
            sys.at(j * n * n + cidx * n + r, i * q + s) = contrib.at(r, cidx);
      }
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t cidx = 0; cidx < n; ++cidx) rhs[j * n * n + cidx * n + r] = generator[j].at(r, cidx);
  }

  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;

  std::vector<Covector> cogens;
  cogens.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix values(n, m);
    for (std::size_t s = 0; s < q; ++s) {
      const Rational& mu = sol->particular[i * q + s];
      if (mu.is_zero()) continue;
      values = values + vs.basis()[s].values().scaled(mu);
    }
    cogens.emplace_back(v, std::move(values));
  }
  DualBasisCertificate cert{v, std::move(cogens)};
  if (!certificate_valid(cert)) internal_check_failed("solved dual-basis system produced an invalid certificate");
  return cert;
}

Derivation lift(const BidualElement& w, const DualBasisCertificate& cert) {
  const CovectorSpace& c = w.covector_space();
  if (!c.vmodule().same(cert.vmod))
    throw Error(ErrorKind::AlgebraMismatch, "certificate and bidual element use different modules");
  const Algebra& a = c.algebra();
  const Center zc = center(a);
  const std::size_t m = cert.vmod.dim(), n = a.dim();

  Matrix acc(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    const Element coeff = w.evaluate(cert.cogenerators[i]);  // w(omega^i)
    if (!zc.contains(coeff))
      throw Error(ErrorKind::CoefficientNotCentral,
                  "coefficient w(omega^" + std::to_string(i + 1) + ") lies outside the center");
    acc = acc + left_mult_matrix(coeff) * cert.vmod.basis()[i].matrix();
  }
  Derivation v(a, std::move(acc));
  if (!cert.vmod.contains(v)) throw Error(ErrorKind::LiftMismatch, "lifted derivation left the module");
  if (!(embed(c, v) == w)) throw Error(ErrorKind::LiftMismatch, "embed(lift(w)) differs from w");
  return v;
}

GhostAnalysis ghost_covectors(const CovectorSpace& c) {
  const Algebra& a = c.algebra();
  const VModule& v = c.vmodule();
  const std::size_t n = a.dim(), m = v.dim(), p = c.dim();

  EchelonBasis closure(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const Covector d = differential(v, a.basis_element(i));
    if (!c.contains(d)) internal_check_failed("differential lies outside the covector space");
    closure.insert(flatten_columns(d.values()));
  }

  std::vector<Matrix> ops;
  ops.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) ops.push_back(left_mult_matrix(a.basis_element(i)));
  for (std::size_t i = 0; i < n; ++i) ops.push_back(right_mult_matrix(a.basis_element(i)));

  // Closure under left and right actions separately equals the closure under
  // the full two-sided action: the generated operator monoid contains every
  // composite L_a R_b.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Matrix& op : ops) {
      const std::size_t count = closure.dim();
      for (std::size_t r = 0; r < count; ++r) {
        const Matrix values = unflatten_columns(n, m, closure.rows()[r]);
        if (closure.insert(flatten_columns(op * values))) grew = true;
      }
    }
  }
  for (const RVec& row : closure.rows())
    if (!c.space().contains(row)) internal_check_failed("differential closure escaped the covector space");

  GhostAnalysis out{p - closure.dim(), {}, closure.to_subspace()};

  // Canonical coset representatives: residuals of the canonical V+ basis
  // against the closure, re-reduced among themselves.
  EchelonBasis seen(n * m);
  for (const RVec& row : closure.rows()) seen.insert(row);
  std::vector<RVec> resid;
  for (const Covector& w : c.basis()) {
    RVec r = seen.reduce(flatten_columns(w.values()));
    if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return !x.is_zero(); })) {
      seen.insert(r);
      resid.push_back(std::move(r));
    }
  }
  const Subspace canon = Subspace::from_generators(n * m, resid);
  for (const RVec& row : canon.basis()) out.representatives.emplace_back(v, unflatten_columns(n, m, row));
  return out;
}

GhostAnalysis ghost_covectors(const Algebra& a, const VModule& v) { return ghost_covectors(dual(a, v)); }

ReflexivityReport reflexivity_report(const Algebra& a, const VModule& v) {
  Center zc = center(a);
  StarCovectorSpace vstar = star_dual(a, v);
  CovectorSpace vdagger = dual(a, v);
  BidualSpace vddagger = second_dual(a, vdagger);

  const std::size_t m = v.dim();
  const std::size_t rank = embedding_rank(vdagger);
  const bool injective = rank == m;
  if (!injective) internal_check_failed("canonical embedding is not injective");

  std::optional<DualBasisCertificate> cert = dual_basis_certificate(a, v);
  const bool reflexive = injective && vddagger.dim() == m;
  if (cert) {
    // A certificate promises reflexivity; verify it constructively with exact
    // round trips in both directions.
    if (!reflexive) internal_check_failed("certificate present but embedding is not bijective");
    for (std::size_t j = 0; j < m; ++j) {
      const Derivation& u = v.basis()[j];
      if (!(lift(embed(vdagger, u), *cert) == u)) internal_check_failed("lift(embed(v)) differs from v");
    }
    for (const BidualElement& w : vddagger.basis()) lift(w, *cert);  // throws LiftMismatch on failure
  }

  GhostAnalysis ghosts = ghost_covectors(vdagger);
  const std::size_t ghost_bidual = vddagger.dim() - rank;
  Subspace kr = right_kernel(a, v);
  const bool nondegenerate = kr.is_zero();

  return ReflexivityReport{a,
                           std::move(zc),
                           v,
                           std::move(vstar),
                           std::move(vdagger),
                           std::move(vddagger),
                           rank,
                           injective,
                           reflexive,
                           nondegenerate,
                           std::move(cert),
                           std::move(ghosts),
                           ghost_bidual,
                           std::move(kr)};
}

ReflexivityReport reflexivity_report(const Algebra& a) { return reflexivity_report(a, derivations(a)); }

}  // namespace ncalc
