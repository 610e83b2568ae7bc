#pragma once

// Exact linear algebra over a field. Everything here is templated on the
// scalar and only needs +, -, *, / and == to be exact; the library
// instantiates it with tvb::Rational.

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tvb/errors.hpp"
#include "tvb/rational.hpp"

namespace tvb {

using Index = Eigen::Index;

template <class Scalar>
struct Echelon {
  Matrix<Scalar> reduced;     // RREF with zero rows dropped
  std::vector<Index> pivots;  // pivot column of each row, strictly increasing
};

template <class Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Scalar zero(0);
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == zero) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(row).swap(m.row(pivot));
    const Scalar lead = m(row, col);
    m.row(row) /= lead;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == zero) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return {m.topRows(row), std::move(pivots)};
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

/// Columns of the result span the right null space of m.
template <class Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis(n, n - static_cast<Index>(ech.pivots.size()));
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(n);
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      v(ech.pivots[r]) = -ech.reduced(static_cast<Index>(r), free);
    basis.col(k++) = v;
  }
  return basis;
}

/// A particular solution of a x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
template <class DerivedA, class DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (b.rows() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = rref(aug);
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;
    x(ech.pivots[r]) = ech.reduced(static_cast<Index>(r), a.cols());
  }
  return x;
}

/// Exact inverse; throws PreconditionError when singular.
template <class Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const Index n = a.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << a, Matrix<Scalar>::Identity(n, n);
  const auto ech = rref(aug);
  if (static_cast<Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[n - 1] >= n))
    throw PreconditionError("inverse: matrix is singular");
  return ech.reduced.rightCols(n);
}

/// Kronecker product of vectors with the row-major index (i, j) -> i * s + j.
template <class DerivedA, class DerivedB>
Vector<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Vector<Scalar> out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
  return out;
}

/// Whether a x = b has a solution with x >= 0. Phase-one simplex with
/// Bland's rule, so it terminates and is exact for exact scalars.
template <class DerivedA, class DerivedB>
bool has_nonnegative_solution(const Eigen::MatrixBase<DerivedA>& a_in,
                              const Eigen::MatrixBase<DerivedB>& b_in) {
  using Scalar = typename DerivedA::Scalar;
  const Scalar zero(0);
  const Index m = a_in.rows();
  const Index n = a_in.cols();
  // Tableau columns: n structural, m artificial, 1 right-hand side.
  Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, n + m + 1);
  for (Index r = 0; r < m; ++r) {
    const bool flip = b_in(r) < zero;
    for (Index c = 0; c < n; ++c) t(r, c) = flip ? Scalar(-a_in(r, c)) : Scalar(a_in(r, c));
    t(r, n + r) = Scalar(1);
    t(r, n + m) = flip ? Scalar(-b_in(r)) : Scalar(b_in(r));
  }
  // Objective row holds reduced costs of minimising the artificial sum.
  for (Index r = 0; r < m; ++r) t.row(m) -= t.row(r);
  for (Index r = 0; r < m; ++r) t(m, n + r) = zero;
  std::vector<Index> basic(static_cast<std::size_t>(m));
  for (Index r = 0; r < m; ++r) basic[static_cast<std::size_t>(r)] = n + r;

  for (;;) {
    Index enter = -1;
    for (Index c = 0; c < n + m; ++c)
      if (t(m, c) < zero) {
        enter = c;
        break;
      }
    if (enter < 0) break;
    Index leave = -1;
    Scalar best(0);
    for (Index r = 0; r < m; ++r) {
      if (!(t(r, enter) > zero)) continue;
      const Scalar ratio = t(r, n + m) / t(r, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basic[static_cast<std::size_t>(r)] < basic[static_cast<std::size_t>(leave)])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded cannot happen in phase one
    const Scalar pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (Index r = 0; r <= m; ++r) {
      if (r == leave || t(r, enter) == zero) continue;
      const Scalar f = t(r, enter);
      t.row(r) -= f * t.row(leave);
    }
    basic[static_cast<std::size_t>(leave)] = enter;
  }
  return t(m, n + m) == zero;
}

/// A linear subspace of Scalar^n held in canonical reduced row-echelon form,
/// so that equal subspaces have identical bases.
template <class Scalar>
class BasicSubspace {
 public:
  using VectorType = Vector<Scalar>;
  using MatrixType = Matrix<Scalar>;

  BasicSubspace() = default;

  static BasicSubspace zero(Index ambient) {
    BasicSubspace s;
    s.ambient_ = ambient;
    s.basis_ = MatrixType(0, ambient);
    return s;
  }

  static BasicSubspace full(Index ambient) {
    return span_of_rows(MatrixType::Identity(ambient, ambient));
  }

  /// Span of the rows of `generators`; the ambient dimension is its column count.
  template <class Derived>
  static BasicSubspace span_of_rows(const Eigen::MatrixBase<Derived>& generators) {
    BasicSubspace s;
    s.ambient_ = generators.cols();
    auto ech = rref(MatrixType(generators));
    s.basis_ = std::move(ech.reduced);
    s.pivots_ = std::move(ech.pivots);
    return s;
  }

  static BasicSubspace span(const std::vector<VectorType>& vectors, Index ambient) {
    MatrixType rows(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw DimensionMismatch("span: vector length differs from ambient dimension");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return span_of_rows(rows);
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Rows form the canonical basis.
  const MatrixType& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  std::vector<VectorType> basis_vectors() const {
    std::vector<VectorType> out;
    for (Index r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r).transpose());
    return out;
  }

  /// Canonical representative of v modulo this subspace (pivot coordinates cleared).
  /// The map is linear, so it realises the quotient by this subspace.
  VectorType reduce(const VectorType& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("reduce: vector length differs from ambient dimension");
    VectorType out = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Scalar c = out(pivots_[r]);
      if (c != Scalar(0)) out -= c * basis_.row(static_cast<Index>(r)).transpose();
    }
    return out;
  }

  bool contains(const VectorType& v) const {
    const VectorType rest = reduce(v);
    for (Index i = 0; i < rest.size(); ++i)
      if (rest(i) != Scalar(0)) return false;
    return true;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_ = 0;
  MatrixType basis_;
  std::vector<Index> pivots_;
};

using Subspace = BasicSubspace<Rational>;

template <class Scalar>
BasicSubspace<Scalar> canonicalize(const std::vector<Vector<Scalar>>& vectors, Index ambient) {
  return BasicSubspace<Scalar>::span(vectors, ambient);
}

namespace detail {
template <class Scalar>
void require_same_ambient(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": subspaces live in different ambient spaces");
}
}  // namespace detail

template <class Scalar>
BasicSubspace<Scalar> sum(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  detail::require_same_ambient(a, b, "sum");
  Matrix<Scalar> rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return BasicSubspace<Scalar>::span_of_rows(rows);
}

/// Linear forms vanishing on a, returned as a subspace of the dual (standard pairing).
template <class Scalar>
BasicSubspace<Scalar> annihilator(const BasicSubspace<Scalar>& a) {
  if (a.dim() == 0) return BasicSubspace<Scalar>::full(a.ambient_dim());
  return BasicSubspace<Scalar>::span_of_rows(kernel_basis(a.basis()).transpose());
}

template <class Scalar>
BasicSubspace<Scalar> intersect(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  detail::require_same_ambient(a, b, "intersect");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

/// Whether b is a subspace of a.
template <class Scalar>
bool contains(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  detail::require_same_ambient(a, b, "contains");
  for (Index r = 0; r < b.dim(); ++r)
    if (!a.contains(b.basis().row(r).transpose())) return false;
  return true;
}

/// Vectors extending a basis of a to a basis of b (a must lie in b). Picks
/// from b's canonical basis in order, which keeps the result deterministic.
template <class Scalar>
std::vector<Vector<Scalar>> complement_basis(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  if (!contains(b, a)) throw PreconditionError("complement_basis: first subspace is not contained in the second");
  std::vector<Vector<Scalar>> out;
  BasicSubspace<Scalar> acc = a;
  for (Index r = 0; r < b.dim() && acc.dim() < b.dim(); ++r) {
    Vector<Scalar> v = b.basis().row(r).transpose();
    if (acc.contains(v)) continue;
    out.push_back(v);
    acc = sum(acc, BasicSubspace<Scalar>::span({v}, a.ambient_dim()));
  }
  return out;
}

/// Randomised variant: each candidate is a random small-integer combination of
/// b's basis, kept when it is independent of what has been chosen so far.
template <class Scalar, class Rng>
std::vector<Vector<Scalar>> random_complement_basis(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b,
                                                    Rng& rng) {
  if (!contains(b, a)) throw PreconditionError("complement_basis: first subspace is not contained in the second");
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Vector<Scalar>> out;
  BasicSubspace<Scalar> acc = a;
  while (acc.dim() < b.dim()) {
    Vector<Scalar> v = Vector<Scalar>::Zero(a.ambient_dim());
    for (Index r = 0; r < b.dim(); ++r) v += Scalar(coeff(rng)) * b.basis().row(r).transpose();
    if (acc.contains(v)) continue;
    out.push_back(v);
    acc = sum(acc, BasicSubspace<Scalar>::span({v}, a.ambient_dim()));
  }
  return out;
}

/// Span of a_i (x) b_j over basis pairs, inside Scalar^{r*s} with index i*s+j.
template <class Scalar>
BasicSubspace<Scalar> tensor_subspace(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  const Index ambient = a.ambient_dim() * b.ambient_dim();
  Matrix<Scalar> rows(a.dim() * b.dim(), ambient);
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      rows.row(i * b.dim() + j) = kron(a.basis().row(i).transpose(), b.basis().row(j).transpose()).transpose();
  return BasicSubspace<Scalar>::span_of_rows(rows);
}

}  // namespace tvb
