#include "ncalc/duality.hpp"

#include <sstream>

#include "ncalc/errors.hpp"

namespace ncalc {

Covector::Covector(VModule vmod, Matrix values) : vmod_(std::move(vmod)), values_(std::move(values)) {
  if (values_.rows() != vmod_.algebra().dim() || values_.cols() != vmod_.dim())
    throw Error(ErrorKind::ShapeMismatch, "covector value matrix must be n x dim(V)");
}

Element Covector::evaluate(const RVec& coords) const {
  if (coords.size() != vmod_.dim()) throw Error(ErrorKind::ShapeMismatch, "coordinate vector has wrong length");
  return algebra().element(values_.apply(coords));
}

Covector Covector::operator+(const Covector& o) const {
  if (!vmod_.same(o.vmod_)) throw Error(ErrorKind::AlgebraMismatch, "covectors over different modules");
  return Covector(vmod_, values_ + o.values_);
}

Covector Covector::operator-(const Covector& o) const {
  if (!vmod_.same(o.vmod_)) throw Error(ErrorKind::AlgebraMismatch, "covectors over different modules");
  return Covector(vmod_, values_ - o.values_);
}

Covector Covector::scaled(const Rational& s) const { return Covector(vmod_, values_.scaled(s)); }

bool is_z_linear(const Covector& w, const Center& zc) {
  const VModule& v = w.vmodule();
  for (const Element& z : zc.basis()) {
    const Matrix lz = left_mult_matrix(z);
    for (std::size_t j = 0; j < v.dim(); ++j) {
      const Derivation zv = z_action(zc, z, v.basis()[j]);
      auto coords = v.coordinates(zv);
      if (!coords) internal_check_failed("module is not closed under the center action");
      RVec lhs = w.values().apply(*coords);          // w(z.v_j)
      RVec rhs = lz.apply(w.values().col(j));        // z * w(v_j)
      if (lhs != rhs) return false;
    }
  }
  return true;
}

CovectorSpace::CovectorSpace(Algebra alg, VModule vmod, Subspace space) {
  const std::size_t n = alg.dim(), m = vmod.dim();
  if (space.ambient() != n * m) throw Error(ErrorKind::ShapeMismatch, "covector space ambient must be n*dim(V)");
  auto data = std::make_shared<Data>(std::move(alg), std::move(vmod), std::move(space));
  for (const RVec& row : data->space.basis()) data->basis.emplace_back(data->vmod, unflatten_columns(n, m, row));
  d_ = std::move(data);
}

StarCovectorSpace::StarCovectorSpace(Algebra alg, VModule vmod, Subspace space)
    : base_(std::move(alg), std::move(vmod), std::move(space)) {}

namespace {

// Z-linearity constraints on the flattened value matrix (unknown (j,t) at
// index j*n+t): for each center basis element z and V basis index j,
//   w(z.u_j) = z * w(u_j).
// The left side expands z.u_j over the V basis (possible exactly: V is
// Z-closed); the right side is left multiplication by z on the value column.
std::vector<RVec> z_linearity_rows(const Algebra& a, const VModule& v, const Center& zc) {
  const std::size_t n = a.dim(), m = v.dim();
  std::vector<RVec> rows;
  for (const Element& z : zc.basis()) {
    const Matrix lz = left_mult_matrix(z);
    for (std::size_t j = 0; j < m; ++j) {
      const Derivation zv = z_action(zc, z, v.basis()[j]);
      auto lam = v.coordinates(zv);
      if (!lam) internal_check_failed("module is not closed under the center action");
      for (std::size_t q = 0; q < n; ++q) {
        RVec row(n * m);
        for (std::size_t l = 0; l < m; ++l)
          if (!(*lam)[l].is_zero()) row[l * n + q] += (*lam)[l];
        for (std::size_t t = 0; t < n; ++t)
          if (!lz.at(q, t).is_zero()) row[j * n + t] -= lz.at(q, t);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

Subspace solve_constraints(std::size_t ambient, const std::vector<RVec>& rows) {
  if (rows.empty()) return Subspace::full(ambient);
  return nullspace(Matrix::from_rows(ambient, rows));
}

}  // namespace

CovectorSpace dual(const Algebra& a, const VModule& v) {
  const std::size_t n = a.dim(), m = v.dim();
  const Center zc = center(a);
  return CovectorSpace(a, v, solve_constraints(n * m, z_linearity_rows(a, v, zc)));
}

StarCovectorSpace star_dual(const Algebra& a, const VModule& v) {
  const std::size_t n = a.dim(), m = v.dim();
  const Center zc = center(a);
  std::vector<RVec> rows = z_linearity_rows(a, v, zc);
  // Values confined to the center: x in Z iff N x = 0 where the rows of N
  // span the orthogonal complement of Z under the standard pairing.
  const Subspace normals = nullspace(Matrix::from_rows(n, zc.space().basis()).transpose());
  for (std::size_t j = 0; j < m; ++j)
    for (const RVec& nu : normals.basis()) {
      RVec row(n * m);
      for (std::size_t t = 0; t < n; ++t) row[j * n + t] = nu[t];
      rows.push_back(std::move(row));
    }
  return StarCovectorSpace(a, v, solve_constraints(n * m, rows));
}

Element couple(const Covector& w, const Derivation& v) {
  auto coords = w.vmodule().coordinates(v);
  if (!coords) throw Error(ErrorKind::NotInModule, "derivation is not in the module");
  return w.evaluate(*coords);
}

Covector bimodule_act(const Element& a, const Covector& w, const Element& b) {
  if (!a.algebra().same(w.algebra()) || !b.algebra().same(w.algebra()))
    throw Error(ErrorKind::AlgebraMismatch, "bimodule action with elements of a different algebra");
  // Each value column x becomes a*x*b, i.e. R_b (L_a x); the two multiplication
  // matrices commute, so the order is immaterial.
  return Covector(w.vmodule(), right_mult_matrix(b) * (left_mult_matrix(a) * w.values()));
}

Covector differential(const VModule& v, const Element& a) {
  if (!a.algebra().same(v.algebra())) throw Error(ErrorKind::AlgebraMismatch, "element of a different algebra");
  const std::size_t n = v.algebra().dim(), m = v.dim();
  Matrix values(n, m);
  for (std::size_t j = 0; j < m; ++j) values.set_col(j, v.basis()[j].matrix().apply(a.coeffs()));
  return Covector(v, values);
}

Subspace right_kernel(const Algebra& a, const VModule& v) {
  const std::size_t n = a.dim(), m = v.dim();
  const CovectorSpace vd = dual(a, v);
  // Full pairing: lambda such that w(sum_j lambda_j u_j) = 0 for every basis
  // covector w.
  std::vector<RVec> rows;
  for (const Covector& w : vd.basis())
    for (std::size_t q = 0; q < n; ++q) rows.push_back(w.values().row(q));
  const Subspace full = solve_constraints(m, rows);

  // Differentials-only pairing; with da(v) = v(a) the same kernel must come
  // out of the images of the basis elements alone.
  std::vector<RVec> drows;
  for (std::size_t i = 0; i < n; ++i) {
    Covector da = differential(v, a.basis_element(i));
    for (std::size_t q = 0; q < n; ++q) drows.push_back(da.values().row(q));
  }
  const Subspace via_differentials = solve_constraints(m, drows);

  if (!(full == via_differentials))
    internal_check_failed("right kernel differs between the full pairing and the differentials-only pairing");
  return full;
}

LeibnizDifferentialCheck leibniz_for_differentials(const Algebra& a, const VModule& v) {
  const std::size_t n = a.dim();
  LeibnizDifferentialCheck out;
  for (std::size_t i = 0; i < n && out.holds; ++i) {
    const Element ei = a.basis_element(i);
    const Covector dei = differential(v, ei);
    for (std::size_t j = 0; j < n; ++j) {
      const Element ej = a.basis_element(j);
      const Covector lhs = differential(v, mul(ei, ej));
      const Covector rhs = bimodule_act(a.unit(), dei, ej) + bimodule_act(ei, differential(v, ej), a.unit());
      ++out.pairs_checked;
      std::ostringstream line;
      line << "d(" << a.label(i) << "*" << a.label(j) << ") vs d(" << a.label(i) << ")*" << a.label(j) << " + "
           << a.label(i) << "*d(" << a.label(j) << "): ";
      if (lhs == rhs) {
        line << "equal";
        out.log.push_back(line.str());
      } else {
        line << "DIFFER";
        out.log.push_back(line.str());
        out.holds = false;
        out.counterexample = std::make_pair(i, j);
        break;
      }
    }
  }
  return out;
}

}  // namespace ncalc
