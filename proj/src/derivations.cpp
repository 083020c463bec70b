#include "ncalc/derivations.hpp"

#include <algorithm>
#include <string>

#include "ncalc/errors.hpp"

namespace ncalc {

RVec flatten_columns(const Matrix& m) {
  RVec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m.at(r, c));
  return v;
}

Matrix unflatten_columns(std::size_t rows, std::size_t cols, const RVec& v) {
  if (v.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "flattened vector has wrong length");
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = v[c * rows + r];
  return m;
}

DefectTensor::DefectTensor(Algebra alg, std::vector<RVec> cells) : alg_(std::move(alg)), cells_(std::move(cells)) {}

bool DefectTensor::is_zero() const { return !first_nonzero().has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> DefectTensor::first_nonzero() const {
  const std::size_t n = alg_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RVec& c = cells_[i * n + j];
      if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); }))
        return std::make_pair(i, j);
    }
  return std::nullopt;
}

DefectTensor leibniz_defect(const Algebra& a, const Matrix& m) {
  const std::size_t n = a.dim();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::ShapeMismatch, "map matrix must be n x n");
  std::vector<RVec> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element mi = a.element(m.col(i));
    for (std::size_t j = 0; j < n; ++j) {
      const Element mj = a.element(m.col(j));
      RVec lhs = m.apply(a.structure(i, j));
      Element rhs = mul(mi, a.basis_element(j)) + mul(a.basis_element(i), mj);
      RVec cell(n);
      for (std::size_t q = 0; q < n; ++q) cell[q] = lhs[q] - rhs.coeff(q);
      cells.push_back(std::move(cell));
    }
  }
  return DefectTensor(a, std::move(cells));
}

Derivation::Derivation(Algebra alg, Matrix mat) : alg_(std::move(alg)), mat_(std::move(mat)) {
  DefectTensor d = leibniz_defect(alg_, mat_);
  if (auto bad = d.first_nonzero()) {
    throw Error(ErrorKind::NotADerivation, "Leibniz rule fails",
                "defect at basis pair (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ") = (" +
                    alg_.label(bad->first) + "," + alg_.label(bad->second) + ")");
  }
}

Element Derivation::operator()(const Element& x) const {
  if (!alg_.same(x.algebra())) throw Error(ErrorKind::AlgebraMismatch, "element of a different algebra");
  return alg_.element(mat_.apply(x.coeffs()));
}

Derivation inner_derivation(const Element& a) {
  return Derivation(a.algebra(), left_mult_matrix(a) - right_mult_matrix(a));
}

VModule::VModule(Algebra alg, Subspace space) {
  const std::size_t n = alg.dim();
  if (space.ambient() != n * n) throw Error(ErrorKind::ShapeMismatch, "module ambient dimension must be n^2");
  auto data = std::make_shared<Data>(std::move(alg), std::move(space));
  for (const RVec& row : data->space.basis()) data->basis.emplace_back(data->alg, unflatten_columns(n, n, row));
  d_ = std::move(data);
}

VModule derivations(const Algebra& a) {
  const std::size_t n = a.dim();
  // Leibniz constraints on the unknown matrix D, flattened column-major
  // (unknown (c,r) at index c*n+r): for every basis pair (i,j) and component q
  //   sum_t c[i][j][t] D[q][t] - sum_s D[s][i] c[s][j][q] - sum_s D[s][j] c[i][s][q] = 0.
  Matrix sys(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RVec& cij = a.structure(i, j);
      for (std::size_t q = 0; q < n; ++q) {
        const std::size_t row = (i * n + j) * n + q;
        for (std::size_t t = 0; t < n; ++t)
          if (!cij[t].is_zero()) sys.at(row, t * n + q) += cij[t];
        for (std::size_t s = 0; s < n; ++s) {
          const Rational& c1 = a.structure(s, j)[q];
          if (!c1.is_zero()) sys.at(row, i * n + s) -= c1;
          const Rational& c2 = a.structure(i, s)[q];
          if (!c2.is_zero()) sys.at(row, j * n + s) -= c2;
        }
      }
    }
  return VModule(a, nullspace(sys));
}

Derivation z_action(const Center& zc, const Element& z, const Derivation& v) {
  if (!zc.algebra().same(z.algebra()) || !z.algebra().same(v.algebra()))
    throw Error(ErrorKind::AlgebraMismatch, "center, element and derivation must share an algebra");
  if (!zc.contains(z)) throw Error(ErrorKind::NotCentral, "element is not in the center");
  return Derivation(v.algebra(), left_mult_matrix(z) * v.matrix());
}

Derivation z_action(const Element& z, const Derivation& v) { return z_action(center(z.algebra()), z, v); }

VModule z_closure(const Algebra& a, const std::vector<Derivation>& generators) {
  const std::size_t n = a.dim();
  EchelonBasis acc(n * n);
  for (const Derivation& g : generators) {
    if (!g.algebra().same(a)) throw Error(ErrorKind::AlgebraMismatch, "generator from a different algebra");
    acc.insert(flatten_columns(g.matrix()));
  }
  const Center zc = center(a);
  std::vector<Matrix> lz;
  lz.reserve(zc.dim());
  for (const Element& z : zc.basis()) lz.push_back(left_mult_matrix(z));

  bool grew = true;
  while (grew) {
    grew = false;
    for (const Matrix& l : lz) {
      const std::size_t count = acc.dim();  // rows appended during this pass are handled next pass
      for (std::size_t r = 0; r < count; ++r) {
        Matrix d = unflatten_columns(n, n, acc.rows()[r]);
        if (acc.insert(flatten_columns(l * d))) grew = true;
      }
    }
  }
  return VModule(a, acc.to_subspace());
}

}  // namespace ncalc
