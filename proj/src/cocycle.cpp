#include "tvb/cocycle.hpp"

#include <functional>

namespace tvb {

LaurentMatrix::LaurentMatrix(Index rows, Index cols, Index nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(static_cast<std::size_t>(rows * cols)) {}

LaurentMatrix LaurentMatrix::identity(Index r, Index nvars) {
  LaurentMatrix m(r, r, nvars);
  for (Index i = 0; i < r; ++i) m.add(i, i, LaurentExponent(static_cast<std::size_t>(nvars), 0), 1);
  return m;
}

void LaurentMatrix::add(Index i, Index j, const LaurentExponent& m, const Rational& c) {
  if (static_cast<Index>(m.size()) != nvars_) throw DimensionMismatch("Laurent matrix: exponent length");
  if (c == 0) return;
  auto& entry = entries_[static_cast<std::size_t>(i * cols_ + j)];
  auto [it, inserted] = entry.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) entry.erase(it);
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_) throw DimensionMismatch("Laurent matrix product: shapes");
  LaurentMatrix out(a.rows_, b.cols_, a.nvars_);
  for (Index i = 0; i < a.rows_; ++i)
    for (Index k = 0; k < b.cols_; ++k)
      for (Index j = 0; j < a.cols_; ++j)
        for (const auto& [ma, ca] : a.at(i, j))
          for (const auto& [mb, cb] : b.at(j, k)) {
            LaurentExponent m = ma;
            for (std::size_t v = 0; v < m.size(); ++v) m[v] += mb[v];
            out.add(i, k, m, ca * cb);
          }
  return out;
}

MonomialMatrix::MonomialMatrix(QMatrix coeff, std::vector<IntVector> exponents)
    : coeff_(std::move(coeff)), exps_(std::move(exponents)) {
  if (coeff_.rows() != coeff_.cols()) throw DimensionMismatch("monomial matrix: not square");
  if (static_cast<Index>(exps_.size()) != coeff_.size()) throw DimensionMismatch("monomial matrix: one exponent per entry");
  for (const auto& e : exps_)
    if (e.size() != exps_.front().size()) throw DimensionMismatch("monomial matrix: exponents of different lengths");
  if (rank(coeff_) < coeff_.rows()) throw PreconditionError("monomial matrix: coefficient matrix is singular");
}

IntVector MonomialMatrix::det_exponent() const {
  // Augmenting-path matching of rows to columns through nonzero entries.
  const Index r = size();
  std::vector<Index> row_of(static_cast<std::size_t>(r), -1);
  std::function<bool(Index, std::vector<bool>&)> augment = [&](Index i, std::vector<bool>& seen) {
    for (Index j = 0; j < r; ++j) {
      if (is_zero(i, j) || seen[static_cast<std::size_t>(j)]) continue;
      seen[static_cast<std::size_t>(j)] = true;
      if (row_of[static_cast<std::size_t>(j)] < 0 || augment(row_of[static_cast<std::size_t>(j)], seen)) {
        row_of[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    return false;
  };
  for (Index i = 0; i < r; ++i) {
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    augment(i, seen);
  }
  IntVector out = IntVector::Zero(exps_.empty() ? 0 : exps_.front().size());
  for (Index j = 0; j < r; ++j) out += exponent(row_of[static_cast<std::size_t>(j)], j);
  return out;
}

LaurentMatrix MonomialMatrix::laurent() const {
  const Index n = exps_.empty() ? 0 : exps_.front().size();
  LaurentMatrix out(size(), size(), n);
  for (Index i = 0; i < size(); ++i)
    for (Index j = 0; j < size(); ++j)
      if (!is_zero(i, j)) {
        const IntVector& e = exponent(i, j);
        out.add(i, j, LaurentExponent(e.begin(), e.end()), coeff_(i, j));
      }
  return out;
}

namespace {

IntVector integer_weight(const QVector& u) {
  IntVector out(u.size());
  for (Index k = 0; k < u.size(); ++k) {
    if (!is_integer(u(k))) throw PreconditionError("transition: weights must be integer covectors");
    out(k) = to_int64(u(k));
  }
  return out;
}

}  // namespace

MonomialMatrix transition(const PLMap& phi, std::size_t sigma, std::size_t sigma_prime) {
  const ConePiece& p = phi.piece(sigma);
  const ConePiece& q = phi.piece(sigma_prime);
  const Index r = phi.rank();
  const QMatrix c = inverse(q.frame.matrix()) * p.frame.matrix();
  std::vector<IntVector> exps;
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      exps.push_back(integer_weight(q.weights[static_cast<std::size_t>(i)] - p.weights[static_cast<std::size_t>(j)]));
  return MonomialMatrix(c, std::move(exps));
}

bool is_regular(const MonomialMatrix& psi, const Fan& fan, const RayIndices& tau) {
  for (Index i = 0; i < psi.size(); ++i)
    for (Index j = 0; j < psi.size(); ++j) {
      if (psi.is_zero(i, j)) continue;
      for (std::size_t r : tau)
        if (fan.ray(r).dot(psi.exponent(i, j)) < 0) return false;
    }
  const IntVector det = psi.det_exponent();
  for (std::size_t r : tau)
    if (fan.ray(r).dot(det) != 0) return false;
  return true;
}

bool is_regular(const PLMap& phi, std::size_t sigma, std::size_t sigma_prime) {
  const RayIndices tau = common_rays(phi.fan().cone(sigma), phi.fan().cone(sigma_prime));
  return is_regular(transition(phi, sigma, sigma_prime), phi.fan(), tau);
}

bool cocycle_check(const PLMap& phi, std::size_t a, std::size_t b, std::size_t c) {
  return transition(phi, b, c).laurent() * transition(phi, a, b).laurent() == transition(phi, a, c).laurent();
}

}  // namespace tvb
