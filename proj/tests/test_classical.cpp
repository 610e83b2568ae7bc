#include "doctest.h"
#include "support.hpp"

using namespace tvb;
using support::qvec;

namespace {

// Flag of the one-parameter subgroup read straight off the frame: e_i has
// value x_i and f_i has value -x_i.
Prevaluation oracle_flag(const NormalFrame& frame, const IntVector& x) {
  std::vector<QVector> lines;
  std::vector<Rational> values;
  for (Index i = 0; i < frame.size(); ++i) {
    lines.push_back(frame.e[static_cast<std::size_t>(i)]);
    values.emplace_back(x(i));
  }
  for (Index i = 0; i < frame.size(); ++i) {
    lines.push_back(frame.f[static_cast<std::size_t>(i)]);
    values.emplace_back(-x(i));
  }
  return Prevaluation::from_frame(Frame(lines), values);
}

IntMatrix random_int_matrix(Index rows, Index cols, Rng& rng, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// One normal frame and one lattice map shared by all cones, then scrambled
// per cone by random Weyl moves; ray flags come from the oracle.
Certificate random_certificate(const Fan& fan, FormKind kind, Index r, Rng& rng) {
  const NormalFrame frame = support::random_normal_frame(r, kind, rng);
  const IntMatrix phi = random_int_matrix(r, fan.rank(), rng);
  Certificate cert{BilinearForm::standard(kind, r), {}, {}};
  for (std::size_t rho = 0; rho < fan.num_rays(); ++rho) cert.ray_flags.push_back(oracle_flag(frame, phi * fan.ray(rho)));
  std::uniform_int_distribution<Index> pick(0, r - 1);
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    ConeCertificate cc{frame, phi};
    for (int k = 0; k < 4; ++k) {
      cc = weyl_permute(cc, pick(rng), pick(rng));
      cc = weyl_flip(cc, pick(rng), kind);
    }
    cert.cones.push_back(cc);
  }
  return cert;
}

}  // namespace

TEST_CASE("bilinear forms validate their Gram matrix") {
  for (FormKind kind : {FormKind::symmetric, FormKind::skew})
    for (Index r = 1; r <= 3; ++r) {
      const auto form = BilinearForm::standard(kind, r);
      CHECK(form.dim() == 2 * r);
      CHECK(is_normal_basis(NormalFrame::standard(r), form));
    }
  CHECK_THROWS_AS(BilinearForm(QMatrix::Identity(3, 3), FormKind::symmetric), PreconditionError);
  CHECK_THROWS_AS(BilinearForm(QMatrix::Identity(2, 2), FormKind::skew), PreconditionError);
  CHECK_THROWS_AS(BilinearForm(QMatrix::Zero(2, 2), FormKind::symmetric), PreconditionError);
  QMatrix j(2, 2);
  j << 0, 1, 1, 0;
  CHECK_THROWS_AS(BilinearForm(j, FormKind::skew), PreconditionError);
  CHECK_NOTHROW(BilinearForm(j, FormKind::symmetric));
  CHECK(to_string(FormKind::skew) == "skew");
}

TEST_CASE("perpendicular subspaces") {
  support::Rng rng(3);
  for (FormKind kind : {FormKind::symmetric, FormKind::skew})
    for (int t = 0; t < 40; ++t) {
      const Index r = 1 + t % 3;
      const auto form = BilinearForm::standard(kind, r);
      const Subspace w = support::random_subspace(2 * r, rng);
      const Subspace p = perp(w, form);
      CHECK(p.dim() == 2 * r - w.dim());
      CHECK(perp(p, form) == w);
      for (const auto& x : w.basis_vectors())
        for (const auto& y : p.basis_vectors()) CHECK(form(x, y) == 0);
    }
}

TEST_CASE("isotropic flags") {
  const auto skew = BilinearForm::standard(FormKind::skew, 1);
  const auto sym = BilinearForm::standard(FormKind::symmetric, 1);
  const std::vector<Subspace> diagonal{Subspace::span({qvec({1, 1})}, 2), Subspace::full(2)};
  CHECK(is_isotropic_flag(diagonal, skew));
  CHECK_FALSE(is_isotropic_flag(diagonal, sym));
  const std::vector<Subspace> e_line{Subspace::span({qvec({1, 0})}, 2), Subspace::full(2)};
  CHECK(is_isotropic_flag(e_line, sym));
  CHECK(is_isotropic_flag({Subspace::full(2)}, sym));
  const auto form2 = BilinearForm::standard(FormKind::symmetric, 2);
  // span(e1, e2) is Lagrangian, span(e1, f1) is not
  CHECK(is_isotropic_flag({Subspace::span({QVector::Unit(4, 0), QVector::Unit(4, 1)}, 4), Subspace::full(4)}, form2));
  CHECK_FALSE(
      is_isotropic_flag({Subspace::span({QVector::Unit(4, 0), QVector::Unit(4, 2)}, 4), Subspace::full(4)}, form2));
}

TEST_CASE("random isometries keep frames normal and flags isotropic") {
  support::Rng rng(4);
  for (FormKind kind : {FormKind::symmetric, FormKind::skew})
    for (int t = 0; t < 30; ++t) {
      const Index r = 1 + t % 3;
      const auto form = BilinearForm::standard(kind, r);
      const NormalFrame frame = support::random_normal_frame(r, kind, rng);
      REQUIRE(is_normal_basis(frame, form));
      std::uniform_int_distribution<int> d(0, 4);
      std::vector<std::int64_t> v;
      for (Index i = 0; i < r; ++i) v.push_back(d(rng));
      std::sort(v.begin(), v.end(), std::greater<>());
      const Prevaluation flag = flag_of_one_ps(frame, v);
      CHECK(is_isotropic_flag(flag, form));
      CHECK(flag == oracle_flag(frame, Eigen::Map<const IntVector>(v.data(), r)));
      const ConeCertificate cc{frame, IntMatrix::Zero(r, 1)};
      CHECK(is_normal_basis(weyl_flip(cc, 0, kind).frame, form));
      CHECK(is_normal_basis(weyl_permute(cc, 0, r - 1).frame, form));
    }
}

TEST_CASE("flag of a one-parameter subgroup") {
  const NormalFrame frame = NormalFrame::standard(2);
  const Prevaluation v = flag_of_one_ps(frame, {2, 0});
  CHECK(v.labels() == std::vector<Rational>{2, 0, -2});
  CHECK(v.flag()[0] == Subspace::span({QVector::Unit(4, 0)}, 4));
  CHECK(v.flag()[1] == Subspace::span({QVector::Unit(4, 0), QVector::Unit(4, 1), QVector::Unit(4, 3)}, 4));
  CHECK(flag_of_one_ps(frame, {0, 0}) == Prevaluation::constant(4, 0));
  CHECK_THROWS_AS(flag_of_one_ps(frame, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(flag_of_one_ps(frame, {1, -1}), PreconditionError);
  CHECK_THROWS_AS(flag_of_one_ps(frame, {1}), DimensionMismatch);
}

TEST_CASE("the symplectic demo certificate is accepted") {
  for (Index r = 1; r <= 3; ++r) {
    const auto demo = symplectic_demo(r);
    CHECK(verify_certificate(demo.fan, demo.certificate).accepted);
    for (std::size_t rho = 0; rho < 2; ++rho)
      CHECK(demo.certificate.ray_flags[rho] ==
            oracle_flag(NormalFrame::standard(r), demo.certificate.cones[0].phi * demo.fan.ray(rho)));
  }
}

TEST_CASE("Weyl moves never change the verdict") {
  support::Rng rng(5);
  for (FormKind kind : {FormKind::symmetric, FormKind::skew})
    for (const Fan& fan : {projective_space_fan(1), projective_space_fan(2), p1_times_p1_fan()})
      for (int t = 0; t < 8; ++t) {
        const Certificate cert = random_certificate(fan, kind, 1 + t % 3, rng);
        CHECK(verify_certificate(fan, cert).accepted);
      }
}

TEST_CASE("tampered certificates are rejected with a witness") {
  support::Rng rng(6);
  const Fan fan = projective_space_fan(2);
  int rejected = 0;
  for (int t = 0; t < 20; ++t) {
    const FormKind kind = t % 2 ? FormKind::skew : FormKind::symmetric;
    Certificate cert = random_certificate(fan, kind, 2, rng);
    const std::size_t c = static_cast<std::size_t>(t) % fan.num_cones();
    cert.cones[c].phi(0, 0) += 1;
    bool changed = false;
    for (std::size_t rho : fan.cone(c)) {
      const Prevaluation now = oracle_flag(cert.cones[c].frame, cert.cones[c].phi * fan.ray(rho));
      changed = changed || !(now == cert.ray_flags[rho]);
    }
    const auto verdict = verify_certificate(fan, cert);
    CHECK(verdict.accepted == !changed);
    if (!verdict.accepted) {
      ++rejected;
      REQUIRE(verdict.witness);
      CHECK(verdict.witness->cone == c);
      CHECK(verdict.witness->ray);
    }
  }
  CHECK(rejected > 0);

  auto demo = symplectic_demo(2);
  demo.certificate.cones[1].frame.e[0] = 2 * demo.certificate.cones[1].frame.e[0];
  const auto v = verify_certificate(demo.fan, demo.certificate);
  CHECK_FALSE(v.accepted);
  CHECK(v.witness->cone == std::optional<std::size_t>(1));
  CHECK_FALSE(v.witness->ray);

  auto bad_flag = symplectic_demo(1);
  bad_flag.certificate.ray_flags[0] =
      Prevaluation({1, -1}, {Subspace::span({qvec({1, 1})}, 2), Subspace::full(2)});
  CHECK(verify_certificate(bad_flag.fan, bad_flag.certificate).accepted == false);
  bad_flag.certificate.form = BilinearForm::standard(FormKind::symmetric, 1);
  const auto w = verify_certificate(bad_flag.fan, bad_flag.certificate);
  CHECK_FALSE(w.accepted);
  CHECK(w.witness->ray == std::optional<std::size_t>(0));
}
