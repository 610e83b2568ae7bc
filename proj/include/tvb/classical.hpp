#pragma once

// Even orthogonal and symplectic groups: nondegenerate forms on E = Q^{2r},
// isotropic flags, normal frames, the labeled flag of a one-parameter
// subgroup, and verification of per-cone certificates for toric principal
// O(2r) / Sp(2r) bundles.

#include <optional>
#include <string>
#include <vector>

#include "tvb/building.hpp"
#include "tvb/fan.hpp"

namespace tvb {

enum class FormKind { symmetric, skew };

std::string to_string(FormKind kind);

class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws PreconditionError unless the Gram matrix is square of even size,
  /// (skew-)symmetric as declared and nondegenerate.
  BilinearForm(QMatrix gram, FormKind kind);

  /// Gram matrix in the basis e_1..e_r, f_1..f_r with <e_i, f_i> = 1.
  static BilinearForm standard(FormKind kind, Index r);

  Index dim() const { return gram_.rows(); }
  Index half_dim() const { return gram_.rows() / 2; }
  FormKind kind() const { return kind_; }
  const QMatrix& gram() const { return gram_; }
  Rational operator()(const QVector& x, const QVector& y) const { return x.dot(gram_ * y); }

 private:
  QMatrix gram_;
  FormKind kind_ = FormKind::symmetric;
};

/// {y : <x, y> = 0 for all x in w}.
Subspace perp(const Subspace& w, const BilinearForm& form);

struct NormalFrame {
  std::vector<QVector> e;
  std::vector<QVector> f;

  Index size() const { return static_cast<Index>(e.size()); }
  static NormalFrame standard(Index r);

  friend bool operator==(const NormalFrame&, const NormalFrame&) = default;
};

/// <e_i, e_j> = <f_i, f_j> = 0 and <e_i, f_j> = delta_ij.
bool is_normal_basis(const NormalFrame& frame, const BilinearForm& form);

/// F_i^perp = F_{k-i} for the flag F_1 c ... c F_k = E, with F_0 = 0.
bool is_isotropic_flag(const std::vector<Subspace>& flag, const BilinearForm& form);
inline bool is_isotropic_flag(const Prevaluation& v, const BilinearForm& form) {
  return is_isotropic_flag(v.flag(), form);
}

/// Labeled flag of the one-parameter subgroup acting by t^{v_i} on e_i and
/// t^{-v_i} on f_i: basis e_1..e_r, f_r..f_1 carries values
/// v_1..v_r, -v_r..-v_1, and each distinct value c gets the span of the
/// basis vectors with value >= c. Exponents must satisfy v_1 >= ... >= v_r >= 0.
Prevaluation flag_of_one_ps(const NormalFrame& frame, const std::vector<std::int64_t>& exponents);

struct ConeCertificate {
  NormalFrame frame;
  IntMatrix phi;  // r x n: the cocharacter lattice map of the cone

  friend bool operator==(const ConeCertificate&, const ConeCertificate&) = default;
};

struct Certificate {
  BilinearForm form;
  std::vector<Prevaluation> ray_flags;  // indexed like the fan's rays
  std::vector<ConeCertificate> cones;   // indexed like the fan's maximal cones
};

struct CertificateWitness {
  std::optional<std::size_t> cone;
  std::optional<std::size_t> ray;
  std::string reason;
};

struct CertificateVerdict {
  bool accepted = true;
  std::optional<CertificateWitness> witness;
};

/// Weyl moves on a cone certificate. Both leave the flags of every ray unchanged.
/// Swaps the pairs i and j, together with rows i and j of phi.
ConeCertificate weyl_permute(const ConeCertificate& c, Index i, Index j);
/// Exchanges the roles of e_i and f_i (f_i, -+e_i keeps the frame normal) and negates row i of phi.
ConeCertificate weyl_flip(const ConeCertificate& c, Index i, FormKind kind);

/// For every cone and each of its rays: normalise phi * v_rho by Weyl moves
/// into v_1 >= ... >= v_r >= 0, build flag_of_one_ps and compare exactly with
/// the given ray flag.
CertificateVerdict verify_certificate(const Fan& fan, const Certificate& cert);

struct SymplecticDemo {
  Fan fan;
  Certificate certificate;
};

/// P^1 with the standard skew form on Q^{2r}: both cones use the standard
/// normal frame and phi = (1, ..., 1)^T. Ray +1 carries span(e_1..e_r) and
/// ray -1 carries span(f_1..f_r), each labeled (1, -1).
SymplecticDemo symplectic_demo(Index r);

}  // namespace tvb
