#include "tvb/classical.hpp"

#include <algorithm>
#include <numeric>

namespace tvb {

std::string to_string(FormKind kind) {
  return kind == FormKind::symmetric ? "symmetric" : "skew";
}

BilinearForm::BilinearForm(QMatrix gram, FormKind kind) : gram_(std::move(gram)), kind_(kind) {
  if (gram_.rows() != gram_.cols() || gram_.rows() % 2 != 0)
    throw PreconditionError("bilinear form: Gram matrix must be square of even size");
  const QMatrix t = gram_.transpose();
  if (kind_ == FormKind::symmetric ? t != gram_ : QMatrix(-t) != gram_)
    throw PreconditionError("bilinear form: Gram matrix is not " + to_string(kind_));
  if (rank(gram_) < gram_.rows()) throw PreconditionError("bilinear form: degenerate");
}

BilinearForm BilinearForm::standard(FormKind kind, Index r) {
  QMatrix g = QMatrix::Zero(2 * r, 2 * r);
  for (Index i = 0; i < r; ++i) {
    g(i, r + i) = 1;
    g(r + i, i) = kind == FormKind::symmetric ? 1 : -1;
  }
  return BilinearForm(std::move(g), kind);
}

Subspace perp(const Subspace& w, const BilinearForm& form) {
  if (w.ambient_dim() != form.dim()) throw DimensionMismatch("perp: subspace and form differ in dimension");
  if (w.is_zero()) return Subspace::full(form.dim());
  const QMatrix k = kernel_basis(QMatrix(w.basis() * form.gram()));
  return Subspace::span_of_rows(k.transpose());
}

NormalFrame NormalFrame::standard(Index r) {
  NormalFrame out;
  for (Index i = 0; i < r; ++i) {
    out.e.push_back(QVector::Unit(2 * r, i));
    out.f.push_back(QVector::Unit(2 * r, r + i));
  }
  return out;
}

bool is_normal_basis(const NormalFrame& frame, const BilinearForm& form) {
  const Index r = frame.size();
  if (static_cast<Index>(frame.f.size()) != r || 2 * r != form.dim()) return false;
  for (const auto* side : {&frame.e, &frame.f})
    for (const auto& v : *side)
      if (v.size() != form.dim()) return false;
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      const auto a = static_cast<std::size_t>(i);
      const auto b = static_cast<std::size_t>(j);
      if (form(frame.e[a], frame.e[b]) != 0 || form(frame.f[a], frame.f[b]) != 0) return false;
      if (form(frame.e[a], frame.f[b]) != (i == j ? 1 : 0)) return false;
    }
  return true;
}

bool is_isotropic_flag(const std::vector<Subspace>& flag, const BilinearForm& form) {
  if (flag.empty() || !flag.back().is_full() || flag.back().ambient_dim() != form.dim()) return false;
  const std::size_t k = flag.size();
  for (std::size_t i = 1; i <= k; ++i) {
    const Subspace expected = i == k ? Subspace::zero(form.dim()) : flag[k - i - 1];
    if (!(perp(flag[i - 1], form) == expected)) return false;
  }
  return true;
}

Prevaluation flag_of_one_ps(const NormalFrame& frame, const std::vector<std::int64_t>& exponents) {
  const Index r = frame.size();
  if (static_cast<Index>(exponents.size()) != r) throw DimensionMismatch("flag_of_one_ps: one exponent per pair");
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] < 0 || (i > 0 && exponents[i] > exponents[i - 1]))
      throw PreconditionError("flag_of_one_ps: exponents must be nonnegative and nonincreasing");
  std::vector<QVector> basis(frame.e.begin(), frame.e.end());
  basis.insert(basis.end(), frame.f.rbegin(), frame.f.rend());
  std::vector<std::int64_t> values(exponents.begin(), exponents.end());
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) values.push_back(-*it);

  std::vector<std::int64_t> distinct = values;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Rational> labels;
  std::vector<Subspace> flag;
  for (auto c : distinct) {
    std::vector<QVector> lines;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] >= c) lines.push_back(basis[i]);
    labels.emplace_back(c);
    flag.push_back(Subspace::span(lines, 2 * r));
  }
  return Prevaluation(std::move(labels), std::move(flag));
}

ConeCertificate weyl_permute(const ConeCertificate& c, Index i, Index j) {
  ConeCertificate out = c;
  std::swap(out.frame.e[static_cast<std::size_t>(i)], out.frame.e[static_cast<std::size_t>(j)]);
  std::swap(out.frame.f[static_cast<std::size_t>(i)], out.frame.f[static_cast<std::size_t>(j)]);
  out.phi.row(i) = c.phi.row(j);
  out.phi.row(j) = c.phi.row(i);
  return out;
}

ConeCertificate weyl_flip(const ConeCertificate& c, Index i, FormKind kind) {
  ConeCertificate out = c;
  const auto k = static_cast<std::size_t>(i);
  out.frame.e[k] = c.frame.f[k];
  out.frame.f[k] = kind == FormKind::symmetric ? c.frame.e[k] : QVector(-c.frame.e[k]);
  out.phi.row(i) = -c.phi.row(i);
  return out;
}

namespace {

std::string describe(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

CertificateVerdict verify_certificate(const Fan& fan, const Certificate& cert) {
  const BilinearForm& form = cert.form;
  const Index r = form.half_dim();
  auto reject = [](std::optional<std::size_t> cone, std::optional<std::size_t> ray, std::string reason) {
    return CertificateVerdict{false, CertificateWitness{cone, ray, std::move(reason)}};
  };
  if (cert.ray_flags.size() != fan.num_rays()) throw DimensionMismatch("certificate: one flag per ray");
  if (cert.cones.size() != fan.num_cones()) throw DimensionMismatch("certificate: one entry per maximal cone");
  for (std::size_t rho = 0; rho < fan.num_rays(); ++rho)
    if (!is_isotropic_flag(cert.ray_flags[rho], form)) return reject(std::nullopt, rho, "ray flag is not isotropic");

  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const ConeCertificate& cc = cert.cones[c];
    if (!is_normal_basis(cc.frame, form)) return reject(c, std::nullopt, "frame is not a normal basis");
    if (cc.phi.rows() != r || cc.phi.cols() != fan.rank())
      throw DimensionMismatch("certificate: phi of cone " + std::to_string(c) + " must be r x n");
    for (std::size_t rho : fan.cone(c)) {
      const IntVector x = cc.phi * fan.ray(rho);
      ConeCertificate moved = cc;
      std::vector<std::int64_t> ex(x.begin(), x.end());
      for (Index i = 0; i < r; ++i)
        if (ex[static_cast<std::size_t>(i)] < 0) {
          moved = weyl_flip(moved, i, form.kind());
          ex[static_cast<std::size_t>(i)] = -ex[static_cast<std::size_t>(i)];
        }
      std::vector<std::size_t> order(static_cast<std::size_t>(r));
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return ex[a] > ex[b]; });
      NormalFrame sorted;
      std::vector<std::int64_t> sorted_ex;
      for (auto k : order) {
        sorted.e.push_back(moved.frame.e[k]);
        sorted.f.push_back(moved.frame.f[k]);
        sorted_ex.push_back(ex[k]);
      }
      const Prevaluation expected = flag_of_one_ps(sorted, sorted_ex);
      const Prevaluation& given = cert.ray_flags[rho];
      if (expected.labels() != given.labels())
        return reject(c, rho, "labels differ: exponents " + describe(sorted_ex) + " give " +
                                  std::to_string(expected.labels().size()) + " labels starting at " +
                                  to_string(expected.labels().front()) + ", ray flag starts at " +
                                  to_string(given.labels().front()));
      if (!(expected == given)) return reject(c, rho, "flag subspaces differ for exponents " + describe(sorted_ex));
    }
  }
  return {};
}

SymplecticDemo symplectic_demo(Index r) {
  if (r < 1) throw PreconditionError("symplectic_demo: r must be positive");
  Fan fan = projective_space_fan(1);
  const NormalFrame frame = NormalFrame::standard(r);
  Certificate cert{BilinearForm::standard(FormKind::skew, r), {}, {}};
  for (std::size_t rho = 0; rho < fan.num_rays(); ++rho) {
    const auto& side = fan.ray(rho)(0) > 0 ? frame.e : frame.f;
    cert.ray_flags.emplace_back(std::vector<Rational>{1, -1},
                                std::vector<Subspace>{Subspace::span(side, 2 * r), Subspace::full(2 * r)});
  }
  for (std::size_t c = 0; c < fan.num_cones(); ++c) cert.cones.push_back({frame, IntMatrix::Ones(r, 1)});
  return {std::move(fan), std::move(cert)};
}

}  // namespace tvb
