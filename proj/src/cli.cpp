#include "tvb/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tvb/fixtures.hpp"
#include "tvb/generators.hpp"
#include "tvb/json_io.hpp"

namespace tvb::cli {

namespace {

struct Options {
  std::string fan;
  std::vector<std::string> bundles;
  std::string cert;
  std::string out;
  std::uint64_t seed = 0;
  int chern_index = 1;
  std::vector<std::size_t> cones;
  std::string example;
  int n = 2;
  Index rank = 2;
  std::vector<std::int64_t> divisor;
  int trials = 200;
  Index search_rank = 2;
  int frame_range = 3;
};

Fan load_fan(const Options& o) {
  if (o.fan.empty()) throw InputError("--fan", "required");
  const Json j = read_json_file(o.fan);
  try {
    return fan_from_json(j);
  } catch (const InputError& e) {
    throw InputError(o.fan + "#" + e.location, e.detail);
  }
}

RayFiltrationData load_bundle(const std::string& path, const Fan& fan) {
  const Json j = read_json_file(path);
  try {
    return bundle_from_json(j, fan.num_rays());
  } catch (const InputError& e) {
    throw InputError(path + "#" + e.location, e.detail);
  }
}

const std::string& single_bundle(const Options& o) {
  if (o.bundles.size() != 1) throw InputError("--bundle", "exactly one bundle expected");
  return o.bundles.front();
}

struct Solved {
  std::optional<PLMap> phi;
  Json witness;
};

Solved classify(const Fan& fan, const RayFiltrationData& data, std::uint64_t seed) {
  require_valid(fan);
  auto result = compatibility_solve(fan, data, {8, seed});
  if (auto* phi = std::get_if<PLMap>(&result)) return {std::move(*phi), nullptr};
  return {std::nullopt, to_json(std::get<Incompatible>(result))};
}

Json report(const std::string& command, const Options& o) {
  return Json{{"command", command}, {"seed", o.seed}};
}

Json integrality_json(const PLMap& phi) {
  const auto rep = is_integral(phi);
  Json unverified = Json::array();
  for (auto c : rep.unverified_cones) unverified.push_back(c);
  return Json{{"integral", rep.integral}, {"verified", rep.verified}, {"unverified_lattice_cones", unverified}};
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw InputError(path.string(), "cannot write file");
  f << j.dump(2) << "\n";
}

int cmd_validate(const Options& o, Json& rep) {
  const Fan fan = load_fan(o);
  const auto d = validate(fan);
  Json issues = Json::array();
  for (const auto& s : d.issues) issues.push_back(s);
  rep["valid"] = d.valid();
  rep["complete"] = d.complete;
  rep["primitive"] = d.primitive;
  rep["distinct_rays"] = d.distinct_rays;
  rep["simplicial"] = d.simplicial;
  rep["proper_intersections"] = d.proper_intersections;
  rep["issues"] = issues;
  return d.valid() ? ok : rejected;
}

int cmd_classify(const Options& o, Json& rep) {
  const Fan fan = load_fan(o);
  auto s = classify(fan, load_bundle(single_bundle(o), fan), o.seed);
  if (!s.phi) {
    rep["status"] = "incompatible";
    rep["witness"] = s.witness;
    return rejected;
  }
  rep["status"] = "compatible";
  rep["integrality"] = integrality_json(*s.phi);
  rep["plmap"] = to_json(*s.phi);
  return ok;
}

int cmd_positivity(const Options& o, Json& rep) {
  const Fan fan = load_fan(o);
  auto s = classify(fan, load_bundle(single_bundle(o), fan), o.seed);
  if (!s.phi) {
    rep["status"] = "incompatible";
    rep["witness"] = s.witness;
    return rejected;
  }
  const auto p = positivity(*s.phi);
  rep.update(to_json(p));
  return p.nef.holds ? ok : rejected;
}

int cmd_chern(const Options& o, Json& rep) {
  const Fan fan = load_fan(o);
  auto s = classify(fan, load_bundle(single_bundle(o), fan), o.seed);
  if (!s.phi) {
    rep["status"] = "incompatible";
    rep["witness"] = s.witness;
    return rejected;
  }
  if (o.chern_index < 1 || o.chern_index > s.phi->rank())
    throw InputError("--i", "Chern class index must lie in [1, " + std::to_string(s.phi->rank()) + "]");
  rep["index"] = o.chern_index;
  rep["pieces"] = to_json(chern_class(*s.phi, o.chern_index));
  return ok;
}

int cmd_tensor(const Options& o, Json& rep) {
  if (o.bundles.size() != 2) throw InputError("--bundle", "tensor needs exactly two bundles");
  const Fan fan = load_fan(o);
  std::vector<PLMap> maps;
  for (const auto& b : o.bundles) {
    auto s = classify(fan, load_bundle(b, fan), o.seed);
    if (!s.phi) {
      rep["status"] = "incompatible";
      rep["bundle"] = b;
      rep["witness"] = s.witness;
      return rejected;
    }
    maps.push_back(std::move(*s.phi));
  }
  const PLMap t = tensor(maps[0], maps[1]);
  rep["status"] = "compatible";
  rep["plmap"] = to_json(t);
  rep["bundle"] = to_json(ray_filtrations(t));
  return ok;
}

int cmd_cocycle(const Options& o, Json& rep) {
  if (o.cones.size() < 2 || o.cones.size() > 3) throw InputError("--cones", "expected A,B or A,B,C");
  const Fan fan = load_fan(o);
  for (auto c : o.cones)
    if (c >= fan.num_cones()) throw InputError("--cones", "cone index " + std::to_string(c) + " out of range");
  auto s = classify(fan, load_bundle(single_bundle(o), fan), o.seed);
  if (!s.phi) {
    rep["status"] = "incompatible";
    rep["witness"] = s.witness;
    return rejected;
  }
  const std::size_t a = o.cones[0], b = o.cones[1];
  const MonomialMatrix psi = transition(*s.phi, a, b);
  const RayIndices tau = common_rays(fan.cone(a), fan.cone(b));
  const bool regular = is_regular(psi, fan, tau);
  Json tau_j = Json::array();
  for (auto r : tau) tau_j.push_back(r);
  rep["sigma"] = a;
  rep["sigma_prime"] = b;
  rep["tau"] = tau_j;
  rep["transition"] = to_json(psi);
  rep["regular"] = regular;
  bool holds = true;
  if (o.cones.size() == 3) {
    holds = cocycle_check(*s.phi, a, b, o.cones[2]);
    rep["cocycle"] = holds;
  }
  return regular && holds ? ok : rejected;
}

int cmd_sp_check(const Options& o, Json& rep) {
  const Fan fan = load_fan(o);
  if (o.cert.empty()) throw InputError("--cert", "required");
  const Json j = read_json_file(o.cert);
  Certificate cert;
  try {
    cert = certificate_from_json(j);
  } catch (const InputError& e) {
    throw InputError(o.cert + "#" + e.location, e.detail);
  }
  if (cert.ray_flags.size() != fan.num_rays()) throw InputError(o.cert + "#/ray_flags", "one flag per ray expected");
  if (cert.cones.size() != fan.num_cones()) throw InputError(o.cert + "#/cones", "one entry per maximal cone expected");
  const auto verdict = verify_certificate(fan, cert);
  rep.update(to_json(verdict));
  return verdict.accepted ? ok : rejected;
}

int cmd_example(const Options& o, Json& rep) {
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  Json files = Json::array();
  auto emit = [&](const std::string& name, const Json& j) {
    write_file(dir / name, j);
    files.push_back((dir / name).string());
  };
  if (o.example == "tangent-pn") {
    if (o.n < 1) throw InputError("--n", "must be at least 1");
    const auto fx = tangent_pn(o.n);
    emit("fan.json", to_json(fx.fan));
    emit("bundle.json", to_json(fx.data));
  } else if (o.example == "line-bundle") {
    if (o.n < 1) throw InputError("--n", "must be at least 1");
    const Fan fan = projective_space_fan(o.n);
    std::vector<std::int64_t> a = o.divisor;
    if (a.empty()) a.assign(fan.num_rays(), 0), a[0] = 1;
    if (a.size() != fan.num_rays()) throw InputError("--a", "one coefficient per ray expected");
    const auto fx = line_bundle(fan, a);
    emit("fan.json", to_json(fx.fan));
    emit("bundle.json", to_json(fx.data));
  } else if (o.example == "trivial") {
    if (o.n < 1 || o.rank < 1) throw InputError("--n/--rank", "must be at least 1");
    const auto fx = trivial_bundle(projective_space_fan(o.n), o.rank);
    emit("fan.json", to_json(fx.fan));
    emit("bundle.json", to_json(fx.data));
  } else if (o.example == "symplectic-demo") {
    if (o.rank < 1) throw InputError("--rank", "must be at least 1");
    const auto demo = symplectic_demo(o.rank);
    emit("fan.json", to_json(demo.fan));
    emit("cert.json", to_json(demo.certificate));
  } else {
    throw InputError("example", "unknown example \"" + o.example + "\"");
  }
  rep["example"] = o.example;
  rep["files"] = files;
  return ok;
}

int cmd_search(const Options& o, Json& rep) {
  const Fan fan = projective_space_fan(2);
  Rng rng(o.seed);
  if (o.search_rank < 1) throw InputError("--rank", "must be at least 1");
  if (o.frame_range < 1) throw InputError("--frame-range", "must be at least 1");
  rep["trials"] = o.trials;
  rep["rank"] = o.search_rank;
  rep["frame_range"] = o.frame_range;
  for (int t = 0; t < o.trials; ++t) {
    const PLMap phi = random_bundle(fan, o.search_rank, rng, -2, 2, o.frame_range);
    const bool nef = is_nef(phi).holds;
    const bool gg = is_globally_generated(phi).holds;
    if (nef != gg) {
      rep["found"] = true;
      rep["trial"] = t;
      rep["nef"] = nef;
      rep["globally_generated"] = gg;
      rep["fan"] = to_json(fan);
      rep["bundle"] = to_json(ray_filtrations(phi));
      rep["plmap"] = to_json(phi);
      return ok;
    }
  }
  rep["found"] = false;
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric vector bundles: classification, positivity, Chern classes, cocycles"};
  app.name("tvb");
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report here instead of stdout");
    sub->add_option("--seed", o.seed, "Seed for randomised steps; recorded in the report");
  };
  auto with_fan = [&](CLI::App* sub) { sub->add_option("--fan", o.fan, "Fan JSON")->required(); };
  auto with_bundle = [&](CLI::App* sub) { sub->add_option("--bundle", o.bundles, "Bundle JSON")->required(); };

  auto* validate_cmd = app.add_subcommand("validate-fan", "Check a fan for validity and completeness");
  with_fan(validate_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "Solve the compatibility problem for ray filtrations");
  with_fan(classify_cmd);
  with_bundle(classify_cmd);
  auto* positivity_cmd = app.add_subcommand("positivity", "Nef, ample and globally generated verdicts");
  with_fan(positivity_cmd);
  with_bundle(positivity_cmd);
  auto* chern_cmd = app.add_subcommand("chern", "Equivariant Chern class as a piecewise polynomial");
  with_fan(chern_cmd);
  with_bundle(chern_cmd);
  chern_cmd->add_option("--i", o.chern_index, "Chern class index")->required();
  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two bundles");
  with_fan(tensor_cmd);
  with_bundle(tensor_cmd);
  auto* cocycle_cmd = app.add_subcommand("cocycle", "Transition matrix between cones, regularity and cocycle check");
  with_fan(cocycle_cmd);
  with_bundle(cocycle_cmd);
  cocycle_cmd->add_option("--cones", o.cones, "A,B or A,B,C")->required()->delimiter(',');
  auto* sp_cmd = app.add_subcommand("sp-check", "Verify an orthogonal or symplectic certificate");
  with_fan(sp_cmd);
  sp_cmd->add_option("--cert", o.cert, "Certificate JSON")->required();
  auto* example_cmd = app.add_subcommand("example", "Write fixture files");
  example_cmd->add_option("name", o.example, "tangent-pn | line-bundle | trivial | symplectic-demo")->required();
  example_cmd->add_option("--n", o.n, "Dimension of projective space");
  example_cmd->add_option("--a", o.divisor, "Divisor coefficients, one per ray")->delimiter(',');
  example_cmd->add_option("--rank", o.rank, "Rank (trivial) or r (symplectic-demo)");
  auto* search_cmd = app.add_subcommand("search-gg-nef", "Random search on P^2 for bundles whose nef and globally generated verdicts differ");
  search_cmd->add_option("--trials", o.trials, "Number of random bundles");
  search_cmd->add_option("--rank", o.search_rank, "Rank of the random bundles");
  search_cmd->add_option("--frame-range", o.frame_range, "Entries of the random frames lie in [-R, R]");
  for (auto* sub : app.get_subcommands({})) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json rep = report(name, o);
  int code = ok;
  try {
    if (name == "validate-fan") code = cmd_validate(o, rep);
    else if (name == "classify") code = cmd_classify(o, rep);
    else if (name == "positivity") code = cmd_positivity(o, rep);
    else if (name == "chern") code = cmd_chern(o, rep);
    else if (name == "tensor") code = cmd_tensor(o, rep);
    else if (name == "cocycle") code = cmd_cocycle(o, rep);
    else if (name == "sp-check") code = cmd_sp_check(o, rep);
    else if (name == "example") code = cmd_example(o, rep);
    else code = cmd_search(o, rep);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  if (!o.out.empty() && name != "example") {
    std::ofstream f(o.out);
    if (!f) {
      err << "input error: cannot write " << o.out << "\n";
      return input_error;
    }
    f << rep.dump(2) << "\n";
  } else {
    out << rep.dump(2) << "\n";
  }
  return code;
}

}  // namespace tvb::cli
