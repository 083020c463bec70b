#include "ncalc/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "ncalc/errors.hpp"

namespace ncalc {

namespace {

// Expand x * e_j through the table, x given by coefficients.
RVec mul_basis_right(const std::vector<RVec>& table, std::size_t n, const RVec& x, std::size_t j) {
  RVec out(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (x[t].is_zero()) continue;
    const RVec& row = table[t * n + j];
    for (std::size_t q = 0; q < n; ++q)
      if (!row[q].is_zero()) out[q].add_mul(x[t], row[q]);
  }
  return out;
}

RVec mul_basis_left(const std::vector<RVec>& table, std::size_t n, std::size_t i, const RVec& x) {
  RVec out(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (x[t].is_zero()) continue;
    const RVec& row = table[i * n + t];
    for (std::size_t q = 0; q < n; ++q)
      if (!row[q].is_zero()) out[q].add_mul(x[t], row[q]);
  }
  return out;
}

std::string triple_loc(const std::vector<std::string>& labels, std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ") = (" << labels[i] << "," << labels[j] << "," << labels[k] << ")";
  return os.str();
}

}  // namespace

Algebra make_algebra(const std::vector<std::vector<RVec>>& table, const RVec& unit,
                     const std::vector<std::string>& labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "algebra dimension must be positive");
  auto data = std::make_shared<Algebra::Data>();
  data->n = n;
  data->table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorKind::ShapeMismatch, "structure table is not n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j].size() != n)
        throw Error(ErrorKind::ShapeMismatch, "structure constant vector has wrong length",
                    "table[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      data->table.push_back(table[i][j]);
    }
  }
  if (unit.size() != n) throw Error(ErrorKind::ShapeMismatch, "unit vector has wrong length");
  data->unit = unit;
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) data->labels.push_back("e" + std::to_string(i));
  } else {
    if (labels.size() != n) throw Error(ErrorKind::ShapeMismatch, "label count does not match dimension");
    data->labels = labels;
  }

  // Associativity on all basis triples: (e_i e_j) e_k = e_i (e_j e_k).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RVec& ij = data->table[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        RVec lhs = mul_basis_right(data->table, n, ij, k);
        RVec rhs = mul_basis_left(data->table, n, i, data->table[j * n + k]);
        if (lhs != rhs)
          throw Error(ErrorKind::NotAssociative, "associativity fails on basis triple",
                      triple_loc(data->labels, i, j, k));
      }
    }

  // Unit laws on all basis elements.
  for (std::size_t i = 0; i < n; ++i) {
    RVec e(n);
    e[i] = 1;
    RVec left = mul_basis_right(data->table, n, data->unit, i);
    if (left != e)
      throw Error(ErrorKind::BadUnit, "1 * e_i != e_i", "i=" + std::to_string(i) + " (" + data->labels[i] + ")");
    RVec right = mul_basis_left(data->table, n, i, data->unit);
    if (right != e)
      throw Error(ErrorKind::BadUnit, "e_i * 1 != e_i", "i=" + std::to_string(i) + " (" + data->labels[i] + ")");
  }

  return Algebra(std::move(data));
}

Element Algebra::unit() const { return Element(*this, d_->unit); }

Element Algebra::zero() const { return Element(*this, RVec(d_->n)); }

Element Algebra::basis_element(std::size_t i) const {
  RVec c(d_->n);
  c[i] = 1;
  return Element(*this, std::move(c));
}

Element Algebra::element(RVec coeffs) const { return Element(*this, std::move(coeffs)); }

Element::Element(Algebra alg, RVec coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) {
  if (c_.size() != alg_.dim()) throw Error(ErrorKind::ShapeMismatch, "element coefficient vector has wrong length");
}

bool Element::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

Element Element::operator+(const Element& o) const {
  if (!alg_.same(o.alg_)) throw Error(ErrorKind::AlgebraMismatch, "elements of different algebras");
  RVec c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return Element(alg_, std::move(c));
}

Element Element::operator-(const Element& o) const {
  if (!alg_.same(o.alg_)) throw Error(ErrorKind::AlgebraMismatch, "elements of different algebras");
  RVec c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
  return Element(alg_, std::move(c));
}

Element Element::operator-() const {
  RVec c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Element(alg_, std::move(c));
}

Element Element::scaled(const Rational& s) const {
  RVec c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return Element(alg_, std::move(c));
}

bool operator==(const Element& a, const Element& b) { return a.alg_.same(b.alg_) && a.c_ == b.c_; }

Element mul(const Element& x, const Element& y) {
  if (!x.algebra().same(y.algebra())) throw Error(ErrorKind::AlgebraMismatch, "elements of different algebras");
  const Algebra& a = x.algebra();
  const std::size_t n = a.dim();
  RVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coeff(j).is_zero()) continue;
      const Rational xy = x.coeff(i) * y.coeff(j);
      const RVec& row = a.structure(i, j);
      for (std::size_t q = 0; q < n; ++q)
        if (!row[q].is_zero()) out[q].add_mul(xy, row[q]);
    }
  }
  return a.element(std::move(out));
}

Element commutator(const Element& x, const Element& y) { return mul(x, y) - mul(y, x); }

Matrix left_mult_matrix(const Element& x) {
  const Algebra& a = x.algebra();
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // column j = coefficients of x * e_j
    for (std::size_t t = 0; t < n; ++t) {
      if (x.coeff(t).is_zero()) continue;
      const RVec& row = a.structure(t, j);
      for (std::size_t q = 0; q < n; ++q)
        if (!row[q].is_zero()) m.at(q, j).add_mul(x.coeff(t), row[q]);
    }
  }
  return m;
}

Matrix right_mult_matrix(const Element& x) {
  const Algebra& a = x.algebra();
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // column j = coefficients of e_j * x
    for (std::size_t t = 0; t < n; ++t) {
      if (x.coeff(t).is_zero()) continue;
      const RVec& row = a.structure(j, t);
      for (std::size_t q = 0; q < n; ++q)
        if (!row[q].is_zero()) m.at(q, j).add_mul(x.coeff(t), row[q]);
    }
  }
  return m;
}

Center::Center(Algebra alg, Subspace space) : alg_(std::move(alg)), space_(std::move(space)) {
  for (const RVec& row : space_.basis()) basis_.push_back(alg_.element(row));
}

Center center(const Algebra& a) {
  const std::size_t n = a.dim();
  // z e_i = e_i z for all i, as a linear system in the coefficients of z.
  Matrix sys(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t t = 0; t < n; ++t)
        sys.at(i * n + q, t) = a.structure(t, i)[q] - a.structure(i, t)[q];
  Subspace z = nullspace(sys);
  if (!z.contains(a.unit_coeffs())) internal_check_failed("center does not contain the unit");
  return Center(a, std::move(z));
}

namespace {

Algebra make_matrix_algebra(long size) {
  if (size < 1) throw Error(ErrorKind::BadParams, "matrix preset needs size >= 1");
  const std::size_t k = static_cast<std::size_t>(size);
  const std::size_t n = k * k;
  auto idx = [k](std::size_t r, std::size_t c) { return r * k + c; };
  std::vector<std::vector<RVec>> table(n, std::vector<RVec>(n, RVec(n)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d)
          if (b == c) table[idx(a, b)][idx(c, d)][idx(a, d)] = 1;  // Eab * Ecd = delta_bc Ead
  RVec unit(n);
  for (std::size_t a = 0; a < k; ++a) unit[idx(a, a)] = 1;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  return make_algebra(table, unit, labels);
}

Algebra make_dual_numbers() {
  // basis {1, x}, x^2 = 0
  std::vector<std::vector<RVec>> table(2, std::vector<RVec>(2, RVec(2)));
  table[0][0][0] = 1;
  table[0][1][1] = 1;
  table[1][0][1] = 1;
  return make_algebra(table, {Rational(1), Rational(0)}, {"1", "x"});
}

Algebra make_triangular(long size) {
  if (size < 1) throw Error(ErrorKind::BadParams, "triangular preset needs size >= 1");
  const std::size_t k = static_cast<std::size_t>(size);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = r; c < k; ++c) cells.emplace_back(r, c);
  const std::size_t n = cells.size();
  auto find = [&cells](std::size_t r, std::size_t c) {
    for (std::size_t t = 0; t < cells.size(); ++t)
      if (cells[t] == std::make_pair(r, c)) return t;
    return cells.size();
  };
  std::vector<std::vector<RVec>> table(n, std::vector<RVec>(n, RVec(n)));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (cells[s].second == cells[t].first)
        table[s][t][find(cells[s].first, cells[t].second)] = 1;
  RVec unit(n);
  for (std::size_t r = 0; r < k; ++r) unit[find(r, r)] = 1;
  std::vector<std::string> labels;
  for (auto [r, c] : cells) labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
  return make_algebra(table, unit, labels);
}

Algebra make_cyclic_group_algebra(long order) {
  if (order < 1) throw Error(ErrorKind::BadParams, "group-algebra-cyclic preset needs order >= 1");
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<std::vector<RVec>> table(n, std::vector<RVec>(n, RVec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j][(i + j) % n] = 1;
  RVec unit(n);
  unit[0] = 1;
  std::vector<std::string> labels{"1"};
  if (n > 1) labels.push_back("g");
  for (std::size_t i = 2; i < n; ++i) labels.push_back("g^" + std::to_string(i));
  return make_algebra(table, unit, labels);
}

Algebra make_quaternions() {
  // basis {1, i, j, k}; i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
  const std::size_t n = 4;
  std::vector<std::vector<RVec>> table(n, std::vector<RVec>(n, RVec(n)));
  auto set = [&table](std::size_t a, std::size_t b, std::size_t c, long s) { table[a][b][c] = Rational(s); };
  for (std::size_t a = 0; a < 4; ++a) {
    set(0, a, a, 1);
    if (a != 0) set(a, 0, a, 1);
  }
  set(1, 1, 0, -1); set(2, 2, 0, -1); set(3, 3, 0, -1);
  set(1, 2, 3, 1); set(2, 1, 3, -1);
  set(2, 3, 1, 1); set(3, 2, 1, -1);
  set(3, 1, 2, 1); set(1, 3, 2, -1);
  return make_algebra(table, {Rational(1), Rational(0), Rational(0), Rational(0)}, {"1", "i", "j", "k"});
}

}  // namespace

Algebra preset(const std::string& name, std::optional<long> param) {
  auto needs_param = [&](const char* what) {
    if (!param) throw Error(ErrorKind::BadParams, std::string(what) + " preset requires --param");
    return *param;
  };
  auto no_param = [&](const char* what) {
    if (param) throw Error(ErrorKind::BadParams, std::string(what) + " preset takes no parameter");
  };
  if (name == "matrix") return make_matrix_algebra(needs_param("matrix"));
  if (name == "dual-numbers") { no_param("dual-numbers"); return make_dual_numbers(); }
  if (name == "triangular") return make_triangular(needs_param("triangular"));
  if (name == "group-algebra-cyclic") return make_cyclic_group_algebra(needs_param("group-algebra-cyclic"));
  if (name == "quaternions") { no_param("quaternions"); return make_quaternions(); }
  throw Error(ErrorKind::UnknownPreset, "unknown preset '" + name + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"matrix", "dual-numbers", "triangular", "group-algebra-cyclic",
                                              "quaternions"};
  return names;
}

}  // namespace ncalc
