#include "tvb/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tvb {

namespace {

std::string at(const std::string& where, const std::string& key) {
  return where + "/" + key;
}
std::string at(const std::string& where, std::size_t i) {
  return where + "/" + std::to_string(i);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where, "missing field \"" + key + "\"");
  return *it;
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array");
  return j;
}

Rational rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(where, e.what());
    }
  }
  throw InputError(where, "expected an integer or a \"p/q\" string");
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  const Rational q = rational(j, where);
  if (!is_integer(q)) throw InputError(where, "expected an integer");
  return to_int64(q);
}

std::size_t index(const Json& j, const std::string& where, std::size_t bound) {
  const auto v = integer(j, where);
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw InputError(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

QVector qvector(const Json& j, const std::string& where, Index length) {
  array(j, where);
  if (length >= 0 && static_cast<Index>(j.size()) != length)
    throw InputError(where, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  QVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational(j[i], at(where, i));
  return v;
}

IntVector ivector(const Json& j, const std::string& where, Index length) {
  array(j, where);
  if (length >= 0 && static_cast<Index>(j.size()) != length)
    throw InputError(where, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = integer(j[i], at(where, i));
  return v;
}

std::vector<QVector> qrows(const Json& j, const std::string& where, Index length) {
  array(j, where);
  std::vector<QVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(qvector(j[i], at(where, i), length));
  return out;
}

QMatrix qmatrix(const Json& j, const std::string& where) {
  array(j, where);
  if (j.empty()) throw InputError(where, "empty matrix");
  const auto rows = qrows(j, where, static_cast<Index>(array(j[0], at(where, 0)).size()));
  QMatrix m(static_cast<Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

Subspace subspace(const Json& j, const std::string& where, Index ambient) {
  return Subspace::span(qrows(j, where, ambient), ambient);
}

// Library errors raised while assembling a parsed object are input errors.
template <class F>
auto wrap(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(where, e.what());
  }
}

Json ivector_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

template <class C>
Json index_list(const C& c) {
  Json out = Json::array();
  for (auto i : c) out.push_back(i);
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ":" + std::to_string(e.byte), e.what());
  }
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json to_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis_vectors()) out.push_back(to_json(v));
  return out;
}

Fan fan_from_json(const Json& j) {
  const auto rank = integer(field(j, "rank", ""), "/rank");
  if (rank < 1) throw InputError("/rank", "rank must be positive");
  const Json& rays = array(field(j, "rays", ""), "/rays");
  std::vector<IntVector> rv;
  for (std::size_t i = 0; i < rays.size(); ++i) rv.push_back(ivector(rays[i], at("/rays", i), rank));
  const Json& cones = array(field(j, "max_cones", ""), "/max_cones");
  std::vector<RayIndices> cv;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string w = at("/max_cones", c);
    RayIndices idx;
    for (std::size_t k = 0; k < array(cones[c], w).size(); ++k) idx.push_back(index(cones[c][k], at(w, k), rv.size()));
    cv.push_back(std::move(idx));
  }
  return wrap("", [&] { return Fan(static_cast<int>(rank), std::move(rv), std::move(cv)); });
}

Json to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back(ivector_json(r));
  Json cones = Json::array();
  for (const auto& c : fan.cones()) cones.push_back(index_list(c));
  return Json{{"rank", fan.rank()}, {"rays", rays}, {"max_cones", cones}};
}

RayFiltrationData bundle_from_json(const Json& j, std::size_t num_rays) {
  const auto rank = integer(field(j, "rank", ""), "/rank");
  if (rank < 1) throw InputError("/rank", "rank must be positive");
  const Json& filts = field(j, "filtrations", "");
  if (!filts.is_object()) throw InputError("/filtrations", "expected an object keyed by ray index");
  RayFiltrationData data{rank, std::vector<RayFiltration>(num_rays, RayFiltration::trivial(rank))};
  for (const auto& [key, value] : filts.items()) {
    const std::string w = "/filtrations/" + key;
    std::size_t ray = 0;
    try {
      std::size_t used = 0;
      ray = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError(w, "ray key must be a nonnegative integer");
    }
    if (ray >= num_rays) throw InputError(w, "ray index out of range");
    std::vector<FiltrationJump> jumps;
    for (std::size_t k = 0; k < array(value, w).size(); ++k) {
      const std::string wk = at(w, k);
      const Json& entry = array(value[k], wk);
      if (entry.size() != 2) throw InputError(wk, "expected [level, rows]");
      jumps.emplace_back(integer(entry[0], at(wk, 0)), subspace(entry[1], at(wk, 1), rank));
    }
    data.rays[ray] = wrap(w, [&] { return RayFiltration(rank, std::move(jumps)); });
  }
  return data;
}

Json to_json(const RayFiltrationData& data) {
  Json filts = Json::object();
  for (std::size_t r = 0; r < data.rays.size(); ++r) {
    Json jumps = Json::array();
    for (const auto& [level, space] : data.rays[r].jumps()) jumps.push_back(Json::array({level, to_json(space)}));
    filts[std::to_string(r)] = jumps;
  }
  return Json{{"rank", data.rank}, {"filtrations", filts}};
}

PLMap plmap_from_json(const Json& j, const Fan& fan) {
  const auto rank = integer(field(j, "rank", ""), "/rank");
  const Json& cones = array(field(j, "cones", ""), "/cones");
  if (cones.size() != fan.num_cones()) throw InputError("/cones", "expected one entry per maximal cone");
  std::vector<ConePiece> pieces(fan.num_cones());
  std::vector<bool> seen(fan.num_cones(), false);
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const std::string w = at("/cones", k);
    const std::size_t c = index(field(cones[k], "cone", w), at(w, "cone"), fan.num_cones());
    if (seen[c]) throw InputError(w, "cone listed twice");
    seen[c] = true;
    auto lines = qrows(field(cones[k], "frame", w), at(w, "frame"), rank);
    pieces[c].frame = wrap(at(w, "frame"), [&] { return Frame(std::move(lines)); });
    pieces[c].weights = qrows(field(cones[k], "weights", w), at(w, "weights"), fan.rank());
  }
  return wrap("", [&] { return PLMap(fan, rank, std::move(pieces)); });
}

Json to_json(const PLMap& phi) {
  Json cones = Json::array();
  for (std::size_t c = 0; c < phi.fan().num_cones(); ++c) {
    const auto& p = phi.piece(c);
    Json frame = Json::array();
    for (const auto& l : p.frame.lines()) frame.push_back(to_json(l));
    Json weights = Json::array();
    for (const auto& u : p.weights) weights.push_back(to_json(u));
    cones.push_back(Json{{"cone", c}, {"rays", index_list(phi.fan().cone(c))}, {"frame", frame}, {"weights", weights}});
  }
  return Json{{"rank", phi.rank()}, {"integral", phi.integral()}, {"cones", cones}};
}

Prevaluation prevaluation_from_json(const Json& j, Index ambient, const std::string& where) {
  const Json& labels = array(field(j, "labels", where), at(where, "labels"));
  const Json& flag = array(field(j, "flag", where), at(where, "flag"));
  std::vector<Rational> lv;
  for (std::size_t i = 0; i < labels.size(); ++i) lv.push_back(rational(labels[i], at(at(where, "labels"), i)));
  std::vector<Subspace> fv;
  for (std::size_t i = 0; i < flag.size(); ++i) fv.push_back(subspace(flag[i], at(at(where, "flag"), i), ambient));
  return wrap(where, [&] { return Prevaluation(std::move(lv), std::move(fv)); });
}

Json to_json(const Prevaluation& v) {
  Json labels = Json::array();
  for (const auto& c : v.labels()) labels.push_back(to_string(c));
  Json flag = Json::array();
  for (const auto& s : v.flag()) flag.push_back(to_json(s));
  return Json{{"labels", labels}, {"flag", flag}};
}

Certificate certificate_from_json(const Json& j) {
  const Json& form = field(j, "form", "");
  const Json& kind_j = field(form, "kind", "/form");
  if (!kind_j.is_string() || (kind_j != "symmetric" && kind_j != "skew"))
    throw InputError("/form/kind", "expected \"symmetric\" or \"skew\"");
  const FormKind kind = kind_j == "symmetric" ? FormKind::symmetric : FormKind::skew;
  QMatrix gram = qmatrix(field(form, "gram", "/form"), "/form/gram");
  Certificate cert{wrap("/form", [&] { return BilinearForm(std::move(gram), kind); }), {}, {}};
  const Index dim = cert.form.dim();
  const Json& flags = array(field(j, "ray_flags", ""), "/ray_flags");
  for (std::size_t i = 0; i < flags.size(); ++i)
    cert.ray_flags.push_back(prevaluation_from_json(flags[i], dim, at("/ray_flags", i)));
  const Json& cones = array(field(j, "cones", ""), "/cones");
  cert.cones.resize(cones.size());
  std::vector<bool> seen(cones.size(), false);
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const std::string w = at("/cones", k);
    const std::size_t c = index(field(cones[k], "cone", w), at(w, "cone"), cones.size());
    if (seen[c]) throw InputError(w, "cone listed twice");
    seen[c] = true;
    const Json& frame = field(cones[k], "frame", w);
    cert.cones[c].frame.e = qrows(field(frame, "e", at(w, "frame")), at(w, "frame/e"), dim);
    cert.cones[c].frame.f = qrows(field(frame, "f", at(w, "frame")), at(w, "frame/f"), dim);
    const Json& phi = array(field(cones[k], "phi", w), at(w, "phi"));
    if (phi.empty()) throw InputError(at(w, "phi"), "empty matrix");
    const Index cols = static_cast<Index>(array(phi[0], at(w, "phi/0")).size());
    IntMatrix m(static_cast<Index>(phi.size()), cols);
    for (std::size_t r = 0; r < phi.size(); ++r) m.row(static_cast<Index>(r)) = ivector(phi[r], at(at(w, "phi"), r), cols);
    cert.cones[c].phi = std::move(m);
  }
  return cert;
}

Json to_json(const Certificate& cert) {
  Json gram = Json::array();
  for (Index i = 0; i < cert.form.dim(); ++i) gram.push_back(to_json(QVector(cert.form.gram().row(i).transpose())));
  Json flags = Json::array();
  for (const auto& f : cert.ray_flags) flags.push_back(to_json(f));
  Json cones = Json::array();
  for (std::size_t c = 0; c < cert.cones.size(); ++c) {
    const auto& cc = cert.cones[c];
    Json e = Json::array(), f = Json::array(), phi = Json::array();
    for (const auto& v : cc.frame.e) e.push_back(to_json(v));
    for (const auto& v : cc.frame.f) f.push_back(to_json(v));
    for (Index r = 0; r < cc.phi.rows(); ++r) phi.push_back(ivector_json(cc.phi.row(r).transpose()));
    cones.push_back(Json{{"cone", c}, {"frame", Json{{"e", e}, {"f", f}}}, {"phi", phi}});
  }
  return Json{{"form", Json{{"kind", to_string(cert.form.kind())}, {"gram", gram}}}, {"ray_flags", flags}, {"cones", cones}};
}

Json to_json(const Incompatible& inc) {
  return Json{{"kind", to_string(inc.kind)}, {"cone", inc.cone}, {"tuple", index_list(inc.tuple)}, {"detail", inc.detail}};
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({index_list(e), to_string(c)}));
  return out;
}

Json to_json(const PiecewisePolynomial& f) {
  Json out = Json::array();
  for (std::size_t c = 0; c < f.pieces.size(); ++c) out.push_back(Json{{"cone", c}, {"poly", to_json(f.pieces[c])}});
  return out;
}

Json to_json(const MonomialMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.size(); ++j)
      row.push_back(m.is_zero(i, j) ? Json(nullptr)
                                    : Json{{"coeff", to_string(m.coefficients()(i, j))}, {"exp", ivector_json(m.exponent(i, j))}});
    rows.push_back(row);
  }
  return rows;
}

namespace {

Json wall_json(const Wall& w) {
  return Json{{"tau", index_list(w.tau)}, {"sigma", w.sigma}, {"sigma_prime", w.sigma_prime}};
}

}  // namespace

Json to_json(const PositivityReport& report) {
  Json walls = Json::array();
  for (const auto& s : report.walls) {
    Json degrees = Json::array();
    for (const auto& d : s.degrees) degrees.push_back(to_string(d));
    Json w = wall_json(s.wall);
    w["degrees"] = degrees;
    walls.push_back(w);
  }
  Json witnesses = Json::array();
  if (report.nef.witness) {
    Json w = wall_json(report.nef.witness->wall);
    w["property"] = "nef";
    w["degree"] = to_string(report.nef.witness->degree);
    witnesses.push_back(w);
  }
  if (report.ample.witness) {
    Json w = wall_json(report.ample.witness->wall);
    w["property"] = "ample";
    w["degree"] = to_string(report.ample.witness->degree);
    witnesses.push_back(w);
  }
  if (const auto& g = report.globally_generated.witness)
    witnesses.push_back(Json{{"property", "globally_generated"},
                             {"cone", g->cone},
                             {"line", g->line},
                             {"ray", g->ray},
                             {"pairing", to_string(g->pairing)},
                             {"value", to_string(g->value)}});
  return Json{{"nef", report.nef.holds},
              {"ample", report.ample.holds},
              {"globally_generated", report.globally_generated.holds},
              {"walls", walls},
              {"witnesses", witnesses}};
}

Json to_json(const CertificateVerdict& verdict) {
  Json out{{"accepted", verdict.accepted}};
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    out["witness"] = Json{{"cone", w.cone ? Json(*w.cone) : Json(nullptr)},
                          {"ray", w.ray ? Json(*w.ray) : Json(nullptr)},
                          {"reason", w.reason}};
  }
  return out;
}

}  // namespace tvb
