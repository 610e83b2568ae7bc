#include "tvb/chern.hpp"

#include <algorithm>
#include <numeric>

namespace tvb {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::linear(const QVector& u) {
  const int n = static_cast<int>(u.size());
  Polynomial p(n);
  for (int k = 0; k < n; ++k) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = 1;
    p.add_term(e, u(k));
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  const auto& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), 0);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("polynomial: exponent vector length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational Polynomial::operator()(const QVector& x) const {
  if (x.size() != nvars_) throw DimensionMismatch("polynomial: point has the wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < nvars_; ++k)
      for (int p = 0; p < e[static_cast<std::size_t>(k)]; ++p) t *= x(k);
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const QMatrix& m) const {
  if (m.rows() != nvars_) throw DimensionMismatch("substitute: matrix rows must match the variables");
  const int k = static_cast<int>(m.cols());
  std::vector<Polynomial> images;
  for (int v = 0; v < nvars_; ++v) images.push_back(linear(m.row(v).transpose()));
  Polynomial out(k);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(k, c);
    for (int v = 0; v < nvars_; ++v)
      for (int p = 0; p < e[static_cast<std::size_t>(v)]; ++p) t = t * images[static_cast<std::size_t>(v)];
    out = out + t;
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial sum: different variable counts");
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial product: different variable counts");
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.nvars_);
  for (const auto& [e, v] : p.terms_) out.add_term(e, c * v);
  return out;
}

Rational elementary_symmetric_value(const Prevaluation& v, int i) {
  if (i < 1 || i > v.ambient_dim()) throw PreconditionError("elementary symmetric function index out of range");
  return elementary_symmetric(value_multiset(v), i, Rational(1));
}

namespace {

PiecewisePolynomial combine(const PiecewisePolynomial& a, const PiecewisePolynomial& b, const Rational& sign) {
  if (!(a.fan == b.fan)) throw PreconditionError("piecewise polynomials live on different fans");
  PiecewisePolynomial out{a.fan, {}};
  for (std::size_t c = 0; c < a.pieces.size(); ++c) out.pieces.push_back(a.pieces[c] + sign * b.pieces[c]);
  return out;
}

}  // namespace

PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return combine(a, b, 1);
}

PiecewisePolynomial operator-(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return combine(a, b, -1);
}

PiecewisePolynomial operator*(const Rational& c, const PiecewisePolynomial& f) {
  PiecewisePolynomial out{f.fan, {}};
  for (const auto& p : f.pieces) out.pieces.push_back(c * p);
  return out;
}

Rational evaluate(const PiecewisePolynomial& f, const QVector& x) {
  const auto cone = locate(f.fan, x);
  if (!cone) throw PreconditionError("evaluate: point lies outside the support of the fan");
  return f.pieces[*cone](x);
}

std::optional<std::pair<std::size_t, std::size_t>> face_incompatibility(const PiecewisePolynomial& f) {
  for (std::size_t a = 0; a < f.pieces.size(); ++a)
    for (std::size_t b = a + 1; b < f.pieces.size(); ++b) {
      const RayIndices face = common_rays(f.fan.cone(a), f.fan.cone(b));
      const QMatrix param = face.empty() ? QMatrix::Zero(f.fan.rank(), 1) : QMatrix(f.fan.generators(face).transpose());
      if (!(f.pieces[a].substitute(param) == f.pieces[b].substitute(param))) return std::make_pair(a, b);
    }
  return std::nullopt;
}

PiecewisePolynomial chern_class(const PLMap& phi, int i) {
  if (i < 1 || i > phi.rank()) throw PreconditionError("chern_class: index out of range");
  const int n = phi.fan().rank();
  PiecewisePolynomial out{phi.fan(), {}};
  for (const auto& piece : phi.pieces()) {
    std::vector<Polynomial> forms;
    for (const auto& u : piece.weights) forms.push_back(Polynomial::linear(u));
    out.pieces.push_back(elementary_symmetric(forms, i, Polynomial::constant(n, 1)));
  }
  if (auto bad = face_incompatibility(out))
    throw MalformedMapError("chern_class: cones " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                            " disagree on their common face");
  return out;
}

bool equivalent_mod_linear(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
  for (const auto* h : {&f, &g})
    for (const auto& p : h->pieces)
      if (p.degree() > 1) throw PreconditionError("equivalent_mod_linear: inputs must have degree at most 1");
  const PiecewisePolynomial d = f - g;
  for (const auto& p : d.pieces) {
    if (!(p == d.pieces.front())) return false;
    if (p.degree() == 0) return false;
  }
  return true;
}

}  // namespace tvb
