#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lieball/acceptance.hpp"
#include "lieball/classify.hpp"
#include "lieball/error.hpp"
#include "lieball/hforms.hpp"
#include "lieball/jets.hpp"
#include "lieball/json_io.hpp"
#include "lieball/metrics.hpp"
#include "lieball/version.hpp"

using namespace lieball;

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  int samples = 200;
  double tol = 1e-9;
  double radius = 0.9;
  int order = 8;
  std::string out;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& c) {
  if (c.samples < 1) throw InputError("--samples must be >= 1");
  if (!(c.radius > 0.0 && c.radius < 1.0)) throw InputError("--radius must lie in (0, 1)");
  if (!(c.tol > 0.0)) throw InputError("--tol must be positive");
  if (c.order < 0) throw InputError("--order must be nonnegative");
}

Json config_json(const RunConfig& c) {
  return Json{{"seed", c.seed}, {"samples", c.samples}, {"tol", c.tol}, {"radius", c.radius}, {"order", c.order}};
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ParameterOutOfRange:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::DomainMismatch:
    case ErrorCode::InvalidElement:
    case ErrorCode::NotSymmetric:
      return true;
    default:
      return false;
  }
}

HoloMap load_map(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return map_from_json(read_json_file(arg));
  if (arg.rfind("heis-", 0) == 0) return jet_catalog_build(arg);
  return catalog_build(arg);
}

Point parse_point(const std::string& text) {
  try {
    return point_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("point: ") + e.what());
  }
}

double parse_theta(const std::string& text) {
  try {
    return parse_angle(text);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "angle '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type IV domains, generalized balls and their isometries"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for all sampling");
  app.add_option("--samples", cfg.samples, "Sample count");
  app.add_option("--tol", cfg.tol, "Pass tolerance");
  app.add_option("--radius", cfg.radius, "Interior sampling radius");
  app.add_option("--order", cfg.order, "Weighted jet order");
  app.add_option("--out", cfg.out, "Write the JSON report here instead of standard output");

  std::string command;
  Json result;
  bool pass = true;
  std::function<void()> action;

  auto* catalog = app.add_subcommand("catalog", "List or evaluate catalog maps");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog families")->callback([&] {
    command = "catalog list";
    action = [&] {
      Json fam = catalog_families();
      fam.push_back("heis-linear:n,N");
      fam.push_back("heis-psi:n,N,psi");
      fam.push_back("heis-cayley:n,N");
      result = Json{{"families", fam}};
    };
  });
  std::string eval_map, eval_at;
  auto* ceval = catalog->add_subcommand("eval", "Evaluate a map at a point");
  ceval->add_option("map", eval_map, "Catalog key or map JSON file")->required();
  ceval->add_option("--at", eval_at, "Point as JSON: [x, ...] or {\"re\": [...], \"im\": [...]}")->required();
  ceval->callback([&] {
    command = "catalog eval";
    action = [&] {
      const HoloMap f = load_map(eval_map);
      const Point z = parse_point(eval_at);
      result = Json{{"map", f.name}, {"point", point_to_json(z)}, {"value", point_to_json(eval(f, z))}};
    };
  });

  auto* verify = app.add_subcommand("verify", "Isometry and properness checks");
  verify->require_subcommand(1);
  std::string iso_map, lambda_text = "auto";
  auto* viso = verify->add_subcommand("isometry", "Check f^* g = lambda g at seeded samples");
  viso->add_option("map", iso_map, "Catalog key or map JSON file")->required();
  viso->add_option("--lambda", lambda_text, "Isometry constant or 'auto'");
  viso->callback([&] {
    command = "verify isometry";
    action = [&] {
      const HoloMap f = load_map(iso_map);
      std::vector<double> lambdas;
      if (lambda_text == "auto") {
        if (f.source.kind != DomainKind::UnitBall || f.target.kind != DomainKind::TypeIV)
          throw Error(ErrorCode::ParameterOutOfRange, "--lambda auto needs a UnitBall -> TypeIV map");
        lambdas = expected_lambda(f.source.n, f.target.m);
      } else {
        try {
          lambdas = {std::stod(lambda_text)};
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, "--lambda must be a number or 'auto'");
        }
      }
      IsometryOptions opt{cfg.samples, cfg.seed, cfg.tol, cfg.radius};
      Json verdicts = Json::array();
      pass = false;
      for (double l : lambdas) {
        const auto v = isometry_check(f, l, opt);
        verdicts.push_back(to_json(v));
        pass = pass || v.pass;
      }
      result = Json{{"map", f.name}, {"verdicts", verdicts}};
    };
  });
  std::string proper_map;
  auto* vproper = verify->add_subcommand("proper", "Boundary-to-boundary check on sphere samples");
  vproper->add_option("map", proper_map, "Catalog key or map JSON file")->required();
  vproper->callback([&] {
    command = "verify proper";
    action = [&] {
      const HoloMap f = load_map(proper_map);
      const auto v = proper_check(f, ProperOptions{cfg.samples, cfg.seed, cfg.tol});
      pass = v.pass;
      result = Json{{"map", f.name}, {"verdict", to_json(v)}};
    };
  });

  std::string classify_arg;
  auto* cls = app.add_subcommand("classify", "Classify an isometry UnitBall(n) -> TypeIV(n+1) or a unitary");
  cls->add_option("input", classify_arg, "Catalog key, map JSON file or unitary JSON file")->required();
  cls->callback([&] {
    command = "classify";
    action = [&] {
      if (std::filesystem::is_regular_file(classify_arg)) {
        const Json j = read_json_file(classify_arg);
        if (j.is_object() && j.contains("rows")) {
          const CanonicalForm c = normalize_unitary(matrix_from_json(j), std::max(cfg.tol, 1e-8));
          result = to_json(c);
          if (c.tag == CaseTag::Irrational) result["witness"] = to_json(equivalence_witness(c.n, c.beta));
          return;
        }
      }
      const HoloMap f = load_map(classify_arg);
      ExtractOptions opt;
      opt.seed = cfg.seed;
      result = to_json(classify_map(f, opt));
      result["map"] = f.name;
    };
  });

  int wit_n = 2;
  std::string wit_theta;
  auto* wit = app.add_subcommand("witness", "Equivalence witness (B, T) for I_{n,theta} ~ I_{n,0}");
  wit->add_option("--n", wit_n, "Source dimension")->required();
  wit->add_option("--theta", wit_theta, "Angle in [0, pi/4): decimal or pi/k")->required();
  wit->callback([&] {
    command = "witness";
    action = [&] {
      const double theta = parse_theta(wit_theta);
      const WitnessPair w = equivalence_witness(wit_n, theta);
      const auto mb = check_group_membership(w.b, GroupTag::ball(wit_n));
      const auto mt = check_group_membership(w.t.cast<Complex>(), GroupTag::type_iv(wit_n + 1));
      const double inter = witness_intertwining_residual(w, wit_n, theta, cfg.samples, cfg.seed);
      pass = mb.defect <= 1e-12 && mt.member && mt.defect <= 1e-12 && inter <= 1e-9;
      result = to_json(w);
      result["theta"] = theta;
      result["b_defect"] = mb.defect;
      result["t_defect"] = mt.defect;
      result["t_det_d"] = mt.det_d;
      result["intertwining_residual"] = inter;
    };
  });

  std::vector<int> power;
  std::string form_file;
  auto* sig = app.add_subcommand("signature", "Signature of (1 - |z|^2)^p or of a form JSON");
  auto* power_opt = sig->add_option("--power", power, "n p")->expected(2);
  auto* form_opt = sig->add_option("--form", form_file, "Form JSON file");
  power_opt->excludes(form_opt);
  sig->callback([&] {
    command = "signature";
    action = [&] {
      if (!power.empty()) {
        result = to_json(power_signature(power.at(0), power.at(1)));
        result["n"] = power.at(0);
        result["p"] = power.at(1);
      } else if (!form_file.empty()) {
        result = to_json(signature(form_from_json(read_json_file(form_file))));
      } else {
        throw InputError("signature needs --power n p or --form file");
      }
    };
  });

  auto* aut = app.add_subcommand("aut", "Validate or apply an automorphism JSON");
  aut->require_subcommand(1);
  std::string aut_file, aut_at;
  auto* acheck = aut->add_subcommand("check", "Group membership of an automorphism JSON");
  acheck->add_option("file", aut_file, "Automorphism JSON")->required();
  acheck->callback([&] {
    command = "aut check";
    action = [&] {
      const Json j = read_json_file(aut_file);
      const Json& g = j.at("group");
      const DomainSpec d = domain_from_json(g.contains("domain") ? g.at("domain") : g);
      const ComplexMatrix m = matrix_from_json(j.at("matrix"));
      const GroupTag tag = d.kind == DomainKind::UnitBall          ? GroupTag::ball(d.n)
                           : d.kind == DomainKind::GeneralizedBall ? GroupTag::generalized_ball(d.n, d.l)
                                                                   : GroupTag::type_iv(d.m);
      if (m.rows() != static_cast<Eigen::Index>(tag.dim()) || m.cols() != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "matrix size does not match the group");
      const auto r = check_group_membership(m, tag, Automorphism::kValidationTol);
      pass = r.member;
      result = Json{{"domain", domain_to_json(d)}, {"member", r.member}, {"defect", r.defect}};
      if (d.kind == DomainKind::TypeIV) result["det_d"] = r.det_d;
    };
  });
  auto* aapply = aut->add_subcommand("apply", "Apply an automorphism JSON to a point");
  aapply->add_option("file", aut_file, "Automorphism JSON")->required();
  aapply->add_option("--at", aut_at, "Point as JSON")->required();
  aapply->callback([&] {
    command = "aut apply";
    action = [&] {
      const Automorphism a = automorphism_from_json(read_json_file(aut_file));
      const Point z = parse_point(aut_at);
      result = Json{{"point", point_to_json(z)}, {"image", point_to_json(apply_automorphism(a, z))}};
    };
  });

  auto* jet = app.add_subcommand("jet", "Weighted jets of Heisenberg-model maps");
  jet->require_subcommand(1);
  std::string jet_map;
  auto* jres = jet->add_subcommand("residual", "Order-by-order residual of the mapping equation");
  jres->add_option("map", jet_map, "heis-* key or map JSON file")->required();
  jres->callback([&] {
    command = "jet residual";
    action = [&] {
      const HoloMap f = load_map(jet_map);
      const auto r = mapping_residual(f, cfg.order);
      pass = r.vanishes();
      result = to_json(r, f.source.n);
      result["map"] = f.name;
      try {
        result["normal_form"] = to_json(normal_form_check(f, cfg.order), f.source.n);
      } catch (const Error& e) {
        result["normal_form"] = Json{{"error", e.what()}};
      }
    };
  });

  auto* suite = app.add_subcommand("suite", "Run every acceptance criterion");
  suite->callback([&] {
    command = "suite";
    action = [&] {
      Json crit = Json::array();
      for (const auto& r : run_acceptance(AcceptanceConfig{cfg.seed})) {
        std::cerr << format_line(r) << "\n";
        crit.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        pass = pass && r.pass;
      }
      result = Json{{"criteria", crit}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int exit_code = 0;
  Json report{{"version", kVersion}, {"command", command}, {"config", config_json(cfg)}};
  try {
    validate(cfg);
    action();
    report["result"] = result;
    report["pass"] = pass;
    exit_code = pass ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    report["error"] = Json{{"code", to_string(e.code())}, {"message", e.what()}};
    report["pass"] = false;
    exit_code = 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = report.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    out << text;
  }
  return exit_code;
}
