#pragma once

// Elementary symmetric functions on the building and equivariant Chern
// classes as piecewise polynomial functions on the fan.

#include <map>
#include <optional>
#include <vector>

#include "tvb/plmap.hpp"

namespace tvb {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial over Q in a fixed number of variables; zero terms never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GradedLex>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  /// x -> <x, u>.
  static Polynomial linear(const QVector& u);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  Rational operator()(const QVector& x) const;
  /// p(m * t) as a polynomial in t, for an nvars x k matrix m.
  Polynomial substitute(const QMatrix& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int nvars_ = 0;
  Terms terms_;
};

/// p_i(values): sum of products over i-element subsets. p_0 = 1.
template <class T>
T elementary_symmetric(const std::vector<T>& values, int i, T one) {
  std::vector<T> e(static_cast<std::size_t>(i) + 1, one - one);
  e[0] = one;
  for (const auto& v : values)
    for (int k = i; k >= 1; --k) e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k) - 1] * v;
  return e[static_cast<std::size_t>(i)];
}

/// epsilon_i(v): p_i of the value multiset of v. Requires 1 <= i <= r.
Rational elementary_symmetric_value(const Prevaluation& v, int i);

struct PiecewisePolynomial {
  Fan fan;
  std::vector<Polynomial> pieces;  // one per maximal cone

  friend bool operator==(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;
};

PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
PiecewisePolynomial operator-(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
PiecewisePolynomial operator*(const Rational& c, const PiecewisePolynomial& f);

/// Value at x using the first maximal cone containing it.
Rational evaluate(const PiecewisePolynomial& f, const QVector& x);

/// First pair of maximal cones whose polynomials differ on the span of
/// their common face, found by substituting x = sum_k t_k v_k.
std::optional<std::pair<std::size_t, std::size_t>> face_incompatibility(const PiecewisePolynomial& f);

/// Per cone p_i(<x, u_{sigma,1}>, ..., <x, u_{sigma,r}>). Throws
/// MalformedMapError when the result is not face compatible.
PiecewisePolynomial chern_class(const PLMap& phi, int i);

/// f - g is one linear form x -> <x, m> on every cone. Both inputs must have
/// degree at most 1 on every cone.
bool equivalent_mod_linear(const PiecewisePolynomial& f, const PiecewisePolynomial& g);

}  // namespace tvb
