#pragma once

// JSON schemas for fans, bundles, maps, certificates and reports. Rationals
// are written as "p/q" strings; readers also accept JSON integers. Readers
// throw InputError carrying a JSON-pointer location.

#include <string>

#include "json.hpp"
#include "tvb/chern.hpp"
#include "tvb/classical.hpp"
#include "tvb/cocycle.hpp"
#include "tvb/positivity.hpp"

namespace tvb {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become InputError located at file:byte.
Json read_json_file(const std::string& path);

// { "rank": n, "rays": [[int...]...], "max_cones": [[ray index...]...] }
Fan fan_from_json(const Json& j);
Json to_json(const Fan& fan);

// { "rank": r, "filtrations": { "<ray>": [[level, [[row]...]]...] } }
// Rays missing from "filtrations" get the trivial filtration E at level 0.
RayFiltrationData bundle_from_json(const Json& j, std::size_t num_rays);
Json to_json(const RayFiltrationData& data);

// { "rank": r, "integral": bool, "cones": [{ "cone", "rays", "frame": [[row]...], "weights": [[q...]...] }] }
PLMap plmap_from_json(const Json& j, const Fan& fan);
Json to_json(const PLMap& phi);

// { "labels": [q...], "flag": [[[row]...]...] }  (flag subspaces as row lists)
Prevaluation prevaluation_from_json(const Json& j, Index ambient, const std::string& where = "");
Json to_json(const Prevaluation& v);

// { "form": { "kind": "symmetric"|"skew", "gram": [[q...]...] },
//   "ray_flags": [prevaluation...],
//   "cones": [{ "cone": c, "frame": { "e": [[q...]...], "f": [[q...]...] }, "phi": [[int...]...] }] }
Certificate certificate_from_json(const Json& j);
Json to_json(const Certificate& cert);

Json to_json(const Incompatible& inc);
Json to_json(const Polynomial& p);
// [{ "cone": c, "poly": [[[exps], "coeff"]...] }...]
Json to_json(const PiecewisePolynomial& f);
// [[{ "coeff": "p/q", "exp": [ints] } | null ...] ...]
Json to_json(const MonomialMatrix& m);
// { "nef", "ample", "globally_generated", "walls": [{ "tau", "sigma", "sigma_prime", "degrees" }], "witnesses": [...] }
Json to_json(const PositivityReport& report);
Json to_json(const CertificateVerdict& verdict);

Json to_json(const QVector& v);
Json to_json(const Subspace& s);

}  // namespace tvb
