// homcart: curvature, holonomy and infinitesimal automorphisms of invariant
// principal/Cartan connections given as Lie-algebra data, plus a generator
// for the conformal geometry of a product of two spheres.
//
// Exit codes: 0 success, 1 validation failure, 2 input error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "homcart/automorphisms.hpp"
#include "homcart/connection.hpp"
#include "homcart/errors.hpp"
#include "homcart/json_io.hpp"
#include "homcart/spheres.hpp"

using namespace homcart;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

// reports print floats at 12 significant digits for cross-platform stability
double round12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

struct Options {
  std::string input;
  double tol = kDefaultTol;
  std::string format = "text";
  bool simply_connected = false;
};

struct LoadedGeometry {
  ConnectionData connection;
  std::optional<SphereModel> sphere;  // grading info, when generated
};

std::string label_of(const LieAlgebra& L, int i) {
  if (!L.labels().empty()) return L.labels()[static_cast<std::size_t>(i)];
  return "e" + std::to_string(i + 1);
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(round12(v[i]));
  return arr;
}

void collect_rank_warnings(const LoadedGeometry& geo, std::vector<std::string>& warnings) {
  if (geo.connection.k_basis.rank_ambiguous() || geo.connection.p_basis.rank_ambiguous())
    warnings.push_back("rank decision within 10x of the pivot tolerance; results may be sensitive");
}

void emit(const json& report, const Options& opt, const std::string& text) {
  if (opt.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

std::string signature_str(const std::array<int, 3>& s) {
  return "(" + std::to_string(s[0]) + ", " + std::to_string(s[1]) + ", " + std::to_string(s[2]) +
         ")";
}

int run_check(const LoadedGeometry& geo, const Options& opt) {
  const ConnectionData& c = geo.connection;
  const ValidationReport rep = validate(c, opt.tol);

  std::vector<std::string> warnings;
  collect_rank_warnings(geo, warnings);

  json j;
  j["command"] = "check";
  j["dims"] = {{"h", c.h.dim()},
               {"k", c.k_basis.dim()},
               {"g", c.g.dim()},
               {"p", c.p_basis.dim()}};
  j["residuals"] = {{"c1", round12(rep.c1_residual)}, {"c2", round12(rep.c2_residual)}};
  j["conditions"] = {{"c1_ok", rep.c1_ok},
                     {"c2_ok", rep.c2_ok},
                     {"c3_checked", rep.c3_checked},
                     {"c3_rank", rep.c3_rank},
                     {"c3_expected", rep.c3_expected},
                     {"c3_ok", rep.c3_ok}};
  j["ok"] = rep.ok;
  j["warnings"] = warnings;

  std::string text;
  text += "connection: " + std::string(c.kind == ConnectionKind::Cartan ? "cartan" : "principal") +
          ", dim h = " + std::to_string(c.h.dim()) + ", dim k = " + std::to_string(c.k_basis.dim()) +
          ", dim g = " + std::to_string(c.g.dim()) + ", dim p = " +
          std::to_string(c.p_basis.dim()) + "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "(C.1) residual %.3e  %s\n", rep.c1_residual,
                rep.c1_ok ? "ok" : "FAIL");
  text += line;
  std::snprintf(line, sizeof(line), "(C.2) residual %.3e  %s\n", rep.c2_residual,
                rep.c2_ok ? "ok" : "FAIL");
  text += line;
  if (rep.c3_checked) {
    std::snprintf(line, sizeof(line), "(C.3) rank %d (expected %d)  %s\n", rep.c3_rank,
                  rep.c3_expected, rep.c3_ok ? "ok" : "FAIL");
    text += line;
  }
  for (const auto& w : warnings) text += "warning: " + w + "\n";
  text += std::string("result: ") + (rep.ok ? "VALID" : "INVALID") + "\n";
  emit(j, opt, text);
  return rep.ok ? kExitOk : kExitValidation;
}

int run_curvature(const LoadedGeometry& geo, const Options& opt) {
  const ConnectionData& c = geo.connection;
  const CurvatureForm f = curvature(c, opt.tol);
  const Subspace image = curvature_image(f, opt.tol);
  const double max_abs = f.max_abs();
  const bool flat = max_abs < opt.tol;

  std::vector<std::string> warnings;
  collect_rank_warnings(geo, warnings);
  if (image.rank_ambiguous())
    warnings.push_back("curvature image rank within 10x of the pivot tolerance");

  json j;
  j["command"] = "curvature";
  j["dims"] = {{"complement", f.size()}, {"image", image.dim()}, {"g", c.g.dim()}};
  j["residuals"] = {{"max_abs_kappa", round12(max_abs)}};
  j["flat"] = flat;
  json values = json::array();
  for (int i = 0; i < f.size(); ++i)
    for (int k = i + 1; k < f.size(); ++k)
      values.push_back({{"i", i}, {"j", k}, {"value", vector_to_json(f.value(i, k))}});
  j["values"] = values;
  j["warnings"] = warnings;

  std::string text;
  text += "curvature on a complement of dim " + std::to_string(f.size()) + " (" +
          std::to_string(f.values.size()) + " pairs)\n";
  char line[160];
  std::snprintf(line, sizeof(line), "max |kappa| = %.3e%s\n", max_abs, flat ? "  (flat)" : "");
  text += line;
  for (int i = 0; i < f.size(); ++i)
    for (int k = i + 1; k < f.size(); ++k) {
      const Vector v = f.value(i, k);
      if (v.size() == 0 || v.cwiseAbs().maxCoeff() < opt.tol) continue;
      std::string row = "  rho(n" + std::to_string(i + 1) + ",n" + std::to_string(k + 1) + ") =";
      for (int idx = 0; idx < v.size(); ++idx)
        if (std::abs(v[idx]) >= opt.tol) {
          std::snprintf(line, sizeof(line), " %+.6g*%s", v[idx], label_of(c.g, idx).c_str());
          row += line;
        }
      text += row + "\n";
    }
  text += "curvature image dimension: " + std::to_string(image.dim()) + "\n";

  if (geo.sphere) {
    const ConformalResiduals res = conformal_residuals(*geo.sphere, c, f, opt.tol);
    j["residuals"]["conf1"] = round12(res.conf1);
    j["residuals"]["conf2"] = round12(res.conf2);
    std::snprintf(line, sizeof(line), "(Conf.1) residual %.3e\n(Conf.2) residual %.3e\n", res.conf1,
                  res.conf2);
    text += line;
  }
  for (const auto& w : warnings) text += "warning: " + w + "\n";
  emit(j, opt, text);
  return kExitOk;
}

int run_holonomy(const LoadedGeometry& geo, const Options& opt) {
  const ConnectionData& c = geo.connection;
  const HolonomyReport rep = holonomy_report(c, opt.tol);

  std::vector<std::string> warnings;
  collect_rank_warnings(geo, warnings);
  if (rep.algebra.rank_ambiguous())
    warnings.push_back("holonomy rank within 10x of the pivot tolerance");

  json j;
  j["command"] = "holonomy";
  j["dims"] = {{"holonomy", rep.dim}, {"g", c.g.dim()}};
  j["killing_signature"] = {rep.killing_signature[0], rep.killing_signature[1],
                            rep.killing_signature[2]};
  j["is_subalgebra"] = rep.is_subalgebra;
  j["equals_g"] = rep.equals_g;
  j["warnings"] = warnings;

  std::string text;
  text += "holonomy dimension: " + std::to_string(rep.dim) + " (dim g = " +
          std::to_string(c.g.dim()) + ")\n";
  text += "killing signature: " + signature_str(rep.killing_signature) + "\n";
  text += std::string("bracket closed: ") + (rep.is_subalgebra ? "yes" : "NO") + "\n";
  text += std::string("equals g: ") + (rep.equals_g ? "yes" : "no") + "\n";
  for (const auto& w : warnings) text += "warning: " + w + "\n";
  emit(j, opt, text);
  return kExitOk;
}

int run_infaut(const LoadedGeometry& geo, const Options& opt) {
  ConnectionData c = geo.connection;
  if (opt.simply_connected) c.simply_connected = true;
  const InfAutResult res = infinitesimal_automorphisms(c, opt.tol);

  std::vector<std::string> warnings = res.warnings;
  collect_rank_warnings(geo, warnings);

  json j;
  j["command"] = "infaut";
  j["dims"] = {{"inf", res.algebra.dim()},
               {"hat_holonomy", res.hat_holonomy_dim},
               {"h", c.h.dim()},
               {"g", c.g.dim()}};
  j["residuals"] = {{"alpha_containment", round12(res.alpha_image_residual)}};
  json basis = json::array();
  for (int r = 0; r < res.algebra.dim(); ++r)
    basis.push_back(vector_to_json(Vector(res.algebra.basis().row(r).transpose())));
  j["basis"] = basis;
  j["warnings"] = warnings;

  std::string text;
  text += "hat holonomy dimension: " + std::to_string(res.hat_holonomy_dim) + "\n";
  text += "inf dimension: " + std::to_string(res.algebra.dim()) + " (dim h = " +
          std::to_string(c.h.dim()) + ", dim g = " + std::to_string(c.g.dim()) + ")\n";
  char line[160];
  std::snprintf(line, sizeof(line), "alpha(h) containment residual: %.3e\n",
                res.alpha_image_residual);
  text += line;
  for (const auto& w : warnings) text += "warning: " + w + "\n";
  emit(j, opt, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "homcart: curvature, holonomy and infinitesimal automorphisms of invariant connections on "
      "homogeneous bundles"};
  app.require_subcommand(1);

  Options opt;
  SphereParams params;
  bool unnormalized = false;
  std::string emit_path;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    cmd->add_option("--tol", opt.tol, "pivot/membership tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (needs_input) cmd->add_option("--input", opt.input, "geometry JSON file")->required();
  };

  CLI::App* cmd_check = app.add_subcommand("check", "validate connection data");
  add_common(cmd_check, true);
  CLI::App* cmd_curv = app.add_subcommand("curvature", "curvature form and its image");
  add_common(cmd_curv, true);
  CLI::App* cmd_hol = app.add_subcommand("holonomy", "holonomy algebra report");
  add_common(cmd_hol, true);
  CLI::App* cmd_inf = app.add_subcommand("infaut", "infinitesimal automorphism algebra");
  add_common(cmd_inf, true);
  cmd_inf->add_flag("--simply-connected", opt.simply_connected,
                    "assert that the model space is simply connected");

  CLI::App* cmd_sph = app.add_subcommand("spheres", "generate the conformal geometry of S^p x S^q");
  cmd_sph->add_option("--p", params.p, "dimension of the first sphere")->required();
  cmd_sph->add_option("--q", params.q, "dimension of the second sphere")->required();
  cmd_sph->add_option("--s", params.s, "metric weight of the first factor")->required();
  cmd_sph->add_option("--sprime", params.s_prime, "metric weight of the second factor")->required();
  cmd_sph->add_flag("--unnormalized", unnormalized,
                    "use the uncorrected connection (no rho term)");
  cmd_sph->add_option("--emit", emit_path, "write the generated geometry JSON ('-' for stdout)");
  add_common(cmd_sph, false);
  CLI::App* sph_check = cmd_sph->add_subcommand("check", "validate the generated geometry");
  CLI::App* sph_curv = cmd_sph->add_subcommand("curvature", "curvature of the generated geometry");
  CLI::App* sph_hol = cmd_sph->add_subcommand("holonomy", "holonomy of the generated geometry");
  CLI::App* sph_inf = cmd_sph->add_subcommand("infaut", "automorphisms of the generated geometry");
  sph_inf->add_flag("--simply-connected", opt.simply_connected,
                    "assert simple connectivity (the generator already sets it for p,q >= 2)");
  for (CLI::App* sub : {sph_check, sph_curv, sph_hol, sph_inf}) sub->fallthrough();
  cmd_sph->require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    LoadedGeometry geo;
    int (*runner)(const LoadedGeometry&, const Options&) = nullptr;

    if (cmd_sph->parsed()) {
      validate_params(params);
      const SphereModel model = build_sphere_model(params);
      geo.connection = model.connection(unnormalized);
      geo.sphere = model;

      if (!emit_path.empty()) {
        const json out = connection_to_json(geo.connection);
        if (emit_path == "-")
          std::cout << out.dump(2) << "\n";
        else {
          std::ofstream file(emit_path);
          if (!file) throw input_error("cannot open file for writing: " + emit_path);
          file << out.dump(2) << "\n";
        }
      }

      if (sph_check->parsed())
        runner = run_check;
      else if (sph_curv->parsed())
        runner = run_curvature;
      else if (sph_hol->parsed())
        runner = run_holonomy;
      else if (sph_inf->parsed())
        runner = run_infaut;
      else if (emit_path.empty())
        runner = run_check;  // bare `spheres`: report validation
    } else {
      geo.connection = load_connection(opt.input, opt.tol);
      if (cmd_check->parsed())
        runner = run_check;
      else if (cmd_curv->parsed())
        runner = run_curvature;
      else if (cmd_hol->parsed())
        runner = run_holonomy;
      else
        runner = run_infaut;
    }

    return runner ? runner(geo, opt) : kExitOk;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const precondition_error& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const construction_error& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
