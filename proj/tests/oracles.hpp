#pragma once

// Test-only oracles. Each one recomputes a quantity along a different route
// than the library (different constraint assembly, different solver path, or
// reversed iteration order) so that agreement is evidence, not tautology.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ncalc/bidual.hpp"

namespace oracles {

using namespace ncalc;

// Commutant solve assembled from element commutators.
inline Subspace center_space(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix sys(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t) {
      Element c = commutator(a.basis_element(t), a.basis_element(i));
      for (std::size_t q = 0; q < n; ++q) sys.at(i * n + q, t) = c.coeff(q);
    }
  return nullspace(sys);
}

// Span of the inner derivations ad_{e_i}; for the semisimple presets this is
// all of Der(A).
inline Subspace inner_derivation_span(const Algebra& a) {
  std::vector<RVec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    rows.push_back(flatten_columns(inner_derivation(a.basis_element(i)).matrix()));
  return Subspace::from_generators(a.dim() * a.dim(), rows);
}

// Brute-force nullspace of the Leibniz system, assembled column-by-column
// from the defect tensors of elementary matrices (the defect is linear in
// the map).
inline Subspace leibniz_solution_space(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix sys(n * n * n, n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      Matrix unitmat(n, n);
      unitmat.at(r, c) = 1;
      DefectTensor d = leibniz_defect(a, unitmat);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t q = 0; q < n; ++q) sys.at((i * n + j) * n + q, c * n + r) = d.at(i, j)[q];
    }
  return nullspace(sys);
}

// Second dual solved from the fully expanded triple constraints
// w(e_i . phi_j . e_k) = e_i w(phi_j) e_k, one assembled dense system, plain
// nullspace. Exponential in nothing but still cubic in the basis sizes; meant
// for the small presets.
inline Subspace second_dual_space_full_triples(const Algebra& a, const CovectorSpace& c) {
  const std::size_t n = a.dim(), p = c.dim();
  if (p == 0) return Subspace(0);
  std::vector<RVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Element ei = a.basis_element(i);
    for (std::size_t k = 0; k < n; ++k) {
      const Element ek = a.basis_element(k);
      const Matrix lr = right_mult_matrix(ek) * left_mult_matrix(ei);
      for (std::size_t j = 0; j < p; ++j) {
        const Covector acted = bimodule_act(ei, c.basis()[j], ek);
        auto coords = c.coordinates(acted);
        if (!coords) throw std::logic_error("oracle: covector space is not closed under the action");
        for (std::size_t q = 0; q < n; ++q) {
          RVec row(n * p);
          for (std::size_t l = 0; l < p; ++l)
            if (!(*coords)[l].is_zero()) row[l * n + q] += (*coords)[l];
          for (std::size_t t = 0; t < n; ++t)
            if (!lr.at(q, t).is_zero()) row[j * n + t] -= lr.at(q, t);
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows.empty() ? Subspace::full(n * p) : nullspace(Matrix::from_rows(n * p, rows));
}

// Ghost closure via the combined two-sided operators phi -> e_i phi e_k over
// all pairs, iterated in reversed order.
inline Subspace ghost_closure_pairwise(const CovectorSpace& c) {
  const Algebra& a = c.algebra();
  const VModule& v = c.vmodule();
  const std::size_t n = a.dim(), m = v.dim();
  EchelonBasis closure(n * m);
  for (std::size_t i = n; i-- > 0;)
    closure.insert(flatten_columns(differential(v, a.basis_element(i)).values()));
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = n; i-- > 0;)
      for (std::size_t k = n; k-- > 0;) {
        const Matrix lr = right_mult_matrix(a.basis_element(k)) * left_mult_matrix(a.basis_element(i));
        const std::size_t count = closure.dim();
        for (std::size_t r = 0; r < count; ++r) {
          const Matrix values = unflatten_columns(n, m, closure.rows()[r]);
          if (closure.insert(flatten_columns(lr * values))) grew = true;
        }
      }
  }
  return closure.to_subspace();
}

// Rank of the canonical embedding from a transposed assembly that reads the
// covector value matrices directly.
inline std::size_t embedding_rank_transposed(const CovectorSpace& c) {
  const std::size_t n = c.algebra().dim(), m = c.vmodule().dim(), p = c.dim();
  Matrix e(n * p, m);
  for (std::size_t l = 0; l < p; ++l)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t j = 0; j < m; ++j) e.at(l * n + t, j) = c.basis()[l].values().at(t, j);
  return rref(e).pivots.size();
}

}  // namespace oracles
