#include "tvb/building.hpp"

#include <algorithm>
#include <map>

namespace tvb {

QVector normalize_line(const QVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return v / v(i);
  throw PreconditionError("a frame line needs a nonzero generator");
}

Frame::Frame(std::vector<QVector> generators) {
  if (generators.empty()) throw PreconditionError("frame: no lines");
  const Index r = generators.front().size();
  if (static_cast<Index>(generators.size()) != r)
    throw DimensionMismatch("frame: number of lines differs from the dimension");
  for (auto& g : generators) {
    if (g.size() != r) throw DimensionMismatch("frame: line generator has the wrong length");
    lines_.push_back(normalize_line(g));
  }
  inverse_ = tvb::inverse(matrix());
}

Frame Frame::standard(Index r) {
  std::vector<QVector> lines;
  for (Index i = 0; i < r; ++i) lines.push_back(QVector::Unit(r, i));
  return Frame(std::move(lines));
}

QMatrix Frame::matrix() const {
  QMatrix m(ambient_dim(), size());
  for (Index i = 0; i < size(); ++i) m.col(i) = lines_[static_cast<std::size_t>(i)];
  return m;
}

QVector Frame::coordinates(const QVector& e) const {
  if (e.size() != ambient_dim()) throw DimensionMismatch("frame coordinates: vector length");
  return inverse_ * e;
}

bool operator==(const Frame& a, const Frame& b) {
  if (a.lines_.size() != b.lines_.size()) return false;
  for (std::size_t i = 0; i < a.lines_.size(); ++i)
    if (a.lines_[i].size() != b.lines_[i].size() || a.lines_[i] != b.lines_[i]) return false;
  return true;
}

Prevaluation::Prevaluation(std::vector<Rational> labels, std::vector<Subspace> flag)
    : labels_(std::move(labels)), flag_(std::move(flag)) {
  if (labels_.size() != flag_.size()) throw PreconditionError("prevaluation: labels and flag differ in length");
  if (flag_.empty()) throw PreconditionError("prevaluation: empty flag");
  if (!flag_.back().is_full()) throw PreconditionError("prevaluation: top subspace must be the whole space");
  for (std::size_t j = 1; j < flag_.size(); ++j) {
    if (!(labels_[j] < labels_[j - 1])) throw PreconditionError("prevaluation: labels must strictly decrease");
    if (flag_[j].ambient_dim() != flag_[0].ambient_dim()) throw DimensionMismatch("prevaluation: mixed ambient dimensions");
    if (flag_[j].dim() <= flag_[j - 1].dim() || !contains(flag_[j], flag_[j - 1]))
      throw PreconditionError("prevaluation: flag must be strictly nested");
  }
  if (flag_.front().is_zero()) throw PreconditionError("prevaluation: flag starts with the zero subspace");
}

Prevaluation Prevaluation::constant(Index dim, const Rational& c) {
  return Prevaluation({c}, {Subspace::full(dim)});
}

Prevaluation Prevaluation::from_frame(const Frame& frame, std::span<const Rational> values) {
  if (static_cast<Index>(values.size()) != frame.size()) throw DimensionMismatch("from_frame: one value per line");
  std::vector<Rational> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Subspace> flag;
  for (const auto& c : distinct) {
    std::vector<QVector> lines;
    for (Index i = 0; i < frame.size(); ++i)
      if (values[static_cast<std::size_t>(i)] >= c) lines.push_back(frame.line(i));
    flag.push_back(Subspace::span(lines, frame.ambient_dim()));
  }
  return Prevaluation(std::move(distinct), std::move(flag));
}

std::optional<Rational> Prevaluation::operator()(const QVector& e) const {
  if (e.size() != ambient_dim()) throw DimensionMismatch("evaluate: vector length differs from ambient dimension");
  if (e.isZero()) return std::nullopt;
  for (std::size_t j = 0; j < flag_.size(); ++j)
    if (flag_[j].contains(e)) return labels_[j];
  return labels_.back();  // unreachable: the top subspace is E
}

Subspace Prevaluation::at_least(const Rational& a) const {
  Subspace out = Subspace::zero(ambient_dim());
  for (std::size_t j = 0; j < flag_.size() && labels_[j] >= a; ++j) out = flag_[j];
  return out;
}

Prevaluation from_filtration(const std::vector<FiltrationJump>& jumps) {
  std::vector<Rational> labels;
  std::vector<Subspace> flag;
  for (std::size_t j = 0; j < jumps.size(); ++j) {
    if (j > 0 && !(jumps[j].first < jumps[j - 1].first))
      throw PreconditionError("from_filtration: levels must strictly decrease");
    labels.emplace_back(jumps[j].first);
    flag.push_back(jumps[j].second);
  }
  return Prevaluation(std::move(labels), std::move(flag));
}

std::vector<FiltrationJump> to_filtration(const Prevaluation& v) {
  std::vector<FiltrationJump> out;
  for (std::size_t j = 0; j < v.labels().size(); ++j) {
    if (!is_integer(v.labels()[j])) throw PreconditionError("to_filtration: prevaluation is not integral");
    out.emplace_back(to_int64(v.labels()[j]), v.flag()[j]);
  }
  return out;
}

std::vector<Rational> value_multiset(const Prevaluation& v) {
  std::vector<Rational> out;
  Index prev = 0;
  for (std::size_t j = 0; j < v.labels().size(); ++j) {
    for (Index k = prev; k < v.flag()[j].dim(); ++k) out.push_back(v.labels()[j]);
    prev = v.flag()[j].dim();
  }
  return out;
}

bool leq(const Prevaluation& v, const Prevaluation& w) {
  if (v.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("leq: different ambient spaces");
  std::vector<Rational> thresholds = v.labels();
  thresholds.insert(thresholds.end(), w.labels().begin(), w.labels().end());
  for (const auto& a : thresholds)
    if (!contains(w.at_least(a), v.at_least(a))) return false;
  return true;
}

bool is_adapted(const Frame& frame, const Prevaluation& v) {
  if (frame.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("is_adapted: different ambient spaces");
  for (const auto& f : v.flag()) {
    std::vector<QVector> inside;
    for (const auto& line : frame.lines())
      if (f.contains(line)) inside.push_back(line);
    if (!(Subspace::span(inside, frame.ambient_dim()) == f)) return false;
  }
  return true;
}

Prevaluation tensor(const Prevaluation& v, const Prevaluation& w) {
  const Index ambient = v.ambient_dim() * w.ambient_dim();
  std::vector<Rational> sums;
  for (const auto& a : v.labels())
    for (const auto& b : w.labels()) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end(), std::greater<>());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

  std::vector<Rational> labels;
  std::vector<Subspace> flag;
  for (const auto& a : sums) {
    Subspace level = Subspace::zero(ambient);
    for (std::size_t i = 0; i < v.labels().size(); ++i)
      for (std::size_t j = 0; j < w.labels().size(); ++j)
        if (v.labels()[i] + w.labels()[j] >= a) level = sum(level, tensor_subspace(v.flag()[i], w.flag()[j]));
    if (!flag.empty() && level.dim() == flag.back().dim()) continue;
    labels.push_back(a);
    flag.push_back(std::move(level));
  }
  return Prevaluation(std::move(labels), std::move(flag));
}

}  // namespace tvb
