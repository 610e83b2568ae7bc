#pragma once

// Points of the building of GL(E), E = Q^r, as prevaluations: labeled flags
// with strictly decreasing rational labels whose top subspace is all of E.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tvb/linear.hpp"
#include "tvb/rational.hpp"

namespace tvb {

/// A decomposition of E into r lines. Each line is stored by a generator
/// whose first nonzero coordinate is 1.
class Frame {
 public:
  Frame() = default;
  /// Throws PreconditionError unless the vectors form a basis of Q^r.
  explicit Frame(std::vector<QVector> generators);

  static Frame standard(Index r);

  Index size() const { return static_cast<Index>(lines_.size()); }
  Index ambient_dim() const { return lines_.empty() ? 0 : lines_.front().size(); }
  const QVector& line(Index i) const { return lines_.at(static_cast<std::size_t>(i)); }
  const std::vector<QVector>& lines() const { return lines_; }

  /// Columns are the line generators.
  QMatrix matrix() const;
  /// c with e = sum_i c_i line(i).
  QVector coordinates(const QVector& e) const;

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  std::vector<QVector> lines_;
  QMatrix inverse_;
};

/// Scales v so its first nonzero coordinate is 1.
QVector normalize_line(const QVector& v);

/// Integer-indexed jump of a decreasing filtration: (level, subspace).
using FiltrationJump = std::pair<std::int64_t, Subspace>;

class Prevaluation {
 public:
  Prevaluation() = default;
  /// labels strictly decreasing, flag strictly increasing, flag.back() == E,
  /// equal lengths. Throws PreconditionError otherwise.
  Prevaluation(std::vector<Rational> labels, std::vector<Subspace> flag);

  static Prevaluation constant(Index dim, const Rational& c);
  /// The prevaluation adapted to `frame` taking value values[i] on line i.
  static Prevaluation from_frame(const Frame& frame, std::span<const Rational> values);

  Index ambient_dim() const { return flag_.empty() ? 0 : flag_.back().ambient_dim(); }
  const std::vector<Rational>& labels() const { return labels_; }
  const std::vector<Subspace>& flag() const { return flag_; }

  /// v(e); nullopt stands for +infinity, the value at e = 0.
  std::optional<Rational> operator()(const QVector& e) const;

  /// F_{v >= a}.
  Subspace at_least(const Rational& a) const;

  friend bool operator==(const Prevaluation&, const Prevaluation&) = default;

 private:
  std::vector<Rational> labels_;
  std::vector<Subspace> flag_;
};

inline std::optional<Rational> evaluate(const Prevaluation& v, const QVector& e) {
  return v(e);
}

/// jumps: levels strictly decreasing, subspaces strictly increasing, last one E.
Prevaluation from_filtration(const std::vector<FiltrationJump>& jumps);
/// Inverse of from_filtration; requires integer labels.
std::vector<FiltrationJump> to_filtration(const Prevaluation& v);

/// Distinct values, decreasing.
inline const std::vector<Rational>& value_set(const Prevaluation& v) {
  return v.labels();
}

/// Values on an adapted frame: label c_j repeated dim(F_j / F_{j-1}) times, decreasing.
std::vector<Rational> value_multiset(const Prevaluation& v);

/// v <= w pointwise on E \ {0}.
bool leq(const Prevaluation& v, const Prevaluation& w);

bool is_adapted(const Frame& frame, const Prevaluation& v);

/// Tensor product on E (x) E' via (F (x) F')_a = sum_{i+j=a} F_i (x) F'_j,
/// Kronecker index (i, j) -> i * dim E' + j.
Prevaluation tensor(const Prevaluation& v, const Prevaluation& w);

}  // namespace tvb
