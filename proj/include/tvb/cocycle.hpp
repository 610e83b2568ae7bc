#pragma once

// Transition functions psi_{sigma,sigma'} between the trivialisations of two
// cone charts, written in frame coordinates: entry (i, j) is
// C_ij * chi^{u'_i - u_j} with C the change of basis from L_sigma to L_sigma'.

#include <map>
#include <vector>

#include "tvb/plmap.hpp"

namespace tvb {

using LaurentExponent = std::vector<std::int64_t>;
/// Finite sum of c * chi^m; zero coefficients never stored.
using LaurentPolynomial = std::map<LaurentExponent, Rational>;

class LaurentMatrix {
 public:
  LaurentMatrix(Index rows, Index cols, Index nvars);
  static LaurentMatrix identity(Index r, Index nvars);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index nvars() const { return nvars_; }
  const LaurentPolynomial& at(Index i, Index j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
  void add(Index i, Index j, const LaurentExponent& m, const Rational& c);

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  Index nvars_ = 0;
  std::vector<LaurentPolynomial> entries_;
};

/// Square matrix whose entries are zero or a single term c * chi^m, with an
/// invertible coefficient matrix.
class MonomialMatrix {
 public:
  /// exponents row-major, one per entry; ignored where the coefficient is 0.
  MonomialMatrix(QMatrix coeff, std::vector<IntVector> exponents);

  Index size() const { return coeff_.rows(); }
  const QMatrix& coefficients() const { return coeff_; }
  const IntVector& exponent(Index i, Index j) const { return exps_[static_cast<std::size_t>(i * size() + j)]; }
  bool is_zero(Index i, Index j) const { return coeff_(i, j) == 0; }

  /// Exponent of the determinant, read off a permutation with nonzero coefficients.
  IntVector det_exponent() const;
  LaurentMatrix laurent() const;

 private:
  QMatrix coeff_;
  std::vector<IntVector> exps_;
};

/// Requires integer weights on both cones.
MonomialMatrix transition(const PLMap& phi, std::size_t sigma, std::size_t sigma_prime);

/// Nonzero entries have exponents in tau-dual (nonnegative on tau's rays) and
/// the determinant exponent lies in tau-perp, so psi and its inverse extend
/// over the chart of tau.
bool is_regular(const MonomialMatrix& psi, const Fan& fan, const RayIndices& tau);
/// tau = the common face of the two cones.
bool is_regular(const PLMap& phi, std::size_t sigma, std::size_t sigma_prime);

/// psi_{b,c} * psi_{a,b} == psi_{a,c} as Laurent matrices.
bool cocycle_check(const PLMap& phi, std::size_t a, std::size_t b, std::size_t c);

}  // namespace tvb
