// curvotex: batch front end for the vortex-ring analysis library.
// Every command writes its artifacts plus a <stem>.manifest.json and is
// byte-identical across reruns with the same inputs.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <curvotex/bifurcation.hpp>
#include <curvotex/errors.hpp>
#include <curvotex/ring.hpp>
#include <curvotex/spectral.hpp>
#include <curvotex/stability.hpp>
#include <curvotex/vortex.hpp>

namespace {

using curvotex::Complex;
using curvotex::GreensChoice;
using curvotex::RingSpec;
using curvotex::VortexConfig;
using ojson = nlohmann::ordered_json;

#ifndef CURVOTEX_VERSION
#define CURVOTEX_VERSION "0.0.0"
#endif
constexpr char kVersion[] = CURVOTEX_VERSION;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitStrict = 4;

// Locale-independent 9-significant-digit float formatting.
std::string fmt9(double v) {
  if (v == 0.0) return "0";  // collapse -0 for stable output
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

// Round to the double nearest the 9-digit decimal, so JSON dumps stay short.
double round9(double v) {
  const std::string s = fmt9(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

ojson num9(double v) { return ojson(round9(v)); }

std::string greens_name(GreensChoice g) {
  switch (g) {
    case GreensChoice::PoleAtInfinity: return "pole";
    case GreensChoice::Antipodal: return "antipodal";
    case GreensChoice::Background: return "background";
  }
  return "background";
}

std::optional<GreensChoice> parse_greens(const std::string& s) {
  if (s == "background") return GreensChoice::Background;
  if (s == "pole") return GreensChoice::PoleAtInfinity;
  if (s == "antipodal") return GreensChoice::Antipodal;
  return std::nullopt;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << body;
}

void write_manifest(const std::string& stem, const std::string& command,
                    const ojson& parameters,
                    const std::vector<std::string>& outputs) {
  ojson m;
  m["command"] = command;
  m["parameters"] = parameters;
  m["tool_version"] = kVersion;
  m["outputs"] = outputs;
  write_file(stem + ".manifest.json", m.dump(2) + "\n");
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int finish(const std::vector<std::string>& warnings, bool strict) {
  print_warnings(warnings);
  return (strict && !warnings.empty()) ? kExitStrict : kExitOk;
}

// ---------------------------------------------------------------- stability

int cmd_stability(int n_min, int n_max, const std::string& format,
                  const std::string& stem, bool strict) {
  if (n_min < 3 || n_max < n_min) {
    std::cerr << "stability: need 3 <= n-min <= n-max\n";
    return kExitUsage;
  }
  std::vector<curvotex::StabilityRange> rows;
  for (int n = n_min; n <= n_max; ++n) rows.push_back(curvotex::stability_range(n));

  std::vector<std::string> outputs;
  if (format == "csv") {
    std::string body = "n,b_n,log_sigma_stable_up_to,log_sigma_second_from,always_stable\n";
    for (const auto& r : rows) {
      body += std::to_string(r.n) + ",";
      body += (r.n >= 4 ? fmt9(curvotex::b_n(r.n)) : "") + std::string(",");
      body += (r.stable_up_to ? fmt9(*r.stable_up_to) : "") + std::string(",");
      body += (r.second_from ? fmt9(*r.second_from) : "") + std::string(",");
      body += r.always_stable ? "1" : "0";
      body += "\n";
    }
    write_file(stem + ".csv", body);
    outputs.push_back(stem + ".csv");
  } else {
    ojson arr = ojson::array();
    for (const auto& r : rows) {
      ojson row;
      row["n"] = r.n;
      row["b_n"] = r.n >= 4 ? num9(curvotex::b_n(r.n)) : ojson(nullptr);
      row["log_sigma_stable_up_to"] =
          r.stable_up_to ? num9(*r.stable_up_to) : ojson(nullptr);
      row["log_sigma_second_from"] =
          r.second_from ? num9(*r.second_from) : ojson(nullptr);
      row["always_stable"] = r.always_stable;
      arr.push_back(row);
    }
    write_file(stem + ".json", arr.dump(2) + "\n");
    outputs.push_back(stem + ".json");
  }

  ojson params;
  params["n_min"] = n_min;
  params["n_max"] = n_max;
  params["format"] = format;
  write_manifest(stem, "stability", params, outputs);
  return finish({}, strict);
}

// ------------------------------------------------------------- bifurcations

int cmd_bifurcations(int n, const std::string& format, const std::string& stem,
                     bool strict) {
  if (n < 4) {
    std::cerr << "bifurcations: need n >= 4\n";
    return kExitUsage;
  }
  std::vector<curvotex::BifurcationPoint> rows;
  for (int ell = 2; ell <= n / 2; ++ell) {
    if (auto bp = curvotex::bifurcation_value(n, ell)) rows.push_back(*bp);
  }

  std::vector<std::string> outputs;
  if (format == "csv") {
    std::string body = "ell,x,partner,crossing_speed\n";
    for (const auto& r : rows) {
      body += std::to_string(r.ell) + "," + fmt9(r.x) + ",";
      body += (r.partner ? fmt9(*r.partner) : "") + std::string(",");
      body += fmt9(r.crossing_speed) + "\n";
    }
    write_file(stem + ".csv", body);
    outputs.push_back(stem + ".csv");
  } else {
    ojson arr = ojson::array();
    for (const auto& r : rows) {
      ojson row;
      row["ell"] = r.ell;
      row["x"] = num9(r.x);
      row["partner"] = r.partner ? num9(*r.partner) : ojson(nullptr);
      row["crossing_speed"] = num9(r.crossing_speed);
      arr.push_back(row);
    }
    write_file(stem + ".json", arr.dump(2) + "\n");
    outputs.push_back(stem + ".json");
  }

  ojson params;
  params["n"] = n;
  params["format"] = format;
  write_manifest(stem, "bifurcations", params, outputs);
  return finish({}, strict);
}

// ----------------------------------------------------------------- spectrum

int cmd_spectrum(int n, double x, const std::string& greens,
                 const std::string& stem, bool strict) {
  if (n < 2) {
    std::cerr << "spectrum: need n >= 2\n";
    return kExitUsage;
  }
  const auto choice = parse_greens(greens);
  if (!choice) {
    std::cerr << "spectrum: unknown greens choice '" << greens << "'\n";
    return kExitUsage;
  }

  if (std::abs(x - 1.0) < 1e-12) {
    throw curvotex::equator_error("spectrum undefined on the equator x = 1");
  }

  RingSpec s;
  s.n = n;
  s.lambda = x;  // kappa = r0 = 1, so x = lambda r0^2
  const auto spec = (*choice == GreensChoice::PoleAtInfinity)
                        ? curvotex::mode_eigenvalues_alt(s)
                        : curvotex::mode_eigenvalues(s);

  // Same sign scan as classify(), applied to the requested spectrum.
  constexpr double tol = 1e-9;
  std::vector<int> failing, degenerate;
  for (int ell = 2; ell <= n / 2; ++ell) {
    const double e = spec.eps_r[static_cast<std::size_t>(ell)];
    if (e < -tol) failing.push_back(ell);
    else if (e <= tol) degenerate.push_back(ell);
  }
  const char* verdict = !failing.empty() ? "linearly_unstable"
                        : !degenerate.empty() ? "degenerate"
                                              : "stable";

  ojson out;
  out["n"] = n;
  out["x"] = num9(x);
  out["greens"] = greens_name(*choice);
  out["omega0"] = num9(curvotex::omega0(s, *choice));
  ojson er = ojson::array(), et = ojson::array();
  for (double v : spec.eps_r) er.push_back(num9(v));
  for (double v : spec.eps_theta) et.push_back(num9(v));
  out["eps_r"] = er;
  out["eps_theta"] = et;
  out["eps1prime"] = num9(spec.eps1prime_value);
  out["classification"] = verdict;
  out["failing_modes"] = failing;
  out["degenerate_modes"] = degenerate;
  write_file(stem + ".json", out.dump(2) + "\n");

  ojson params;
  params["n"] = n;
  params["x"] = num9(x);
  params["greens"] = greens_name(*choice);
  write_manifest(stem, "spectrum", params, {stem + ".json"});
  return finish({}, strict);
}

// -------------------------------------------------------------------- probe

ojson probe_json(const curvotex::DegeneracyReport& rep) {
  ojson out;
  out["n"] = rep.n;
  out["x_star"] = num9(rep.x_star);
  out["parity"] = rep.parity == curvotex::ProbeParity::Even ? "even" : "odd";
  if (rep.even_data) {
    ojson d;
    d["t2_coeff"] = num9(rep.even_data->t2_coeff);
    d["t4_coeff"] = num9(rep.even_data->t4_coeff);
    d["T_value"] = num9(rep.even_data->T_value);
    out["even_data"] = d;
  } else {
    out["even_data"] = nullptr;
  }
  if (rep.odd_data) {
    ojson d;
    d["beta"] = num9(rep.odd_data->beta);
    d["gamma"] = num9(rep.odd_data->gamma);
    d["delta"] = num9(rep.odd_data->delta);
    d["discriminant"] = num9(rep.odd_data->discriminant);
    out["odd_data"] = d;
  } else {
    out["odd_data"] = nullptr;
  }
  out["verdict"] = rep.verdict == curvotex::ProbeVerdict::StableDegenerate
                       ? "stable_degenerate"
                       : "inconclusive";
  out["warnings"] = rep.warnings;
  return out;
}

int cmd_probe(int n, bool reciprocal, int sweep, int restricted_ell,
              const std::string& stem, bool strict) {
  std::vector<std::string> warnings;
  ojson out;
  ojson params;

  if (sweep > 0) {
    if (sweep < 4) {
      std::cerr << "probe: need --sweep >= 4\n";
      return kExitUsage;
    }
    const auto reports = curvotex::conjecture_sweep(sweep);
    ojson arr = ojson::array();
    for (const auto& rep : reports) {
      arr.push_back(probe_json(rep));
      warnings.insert(warnings.end(), rep.warnings.begin(), rep.warnings.end());
    }
    out = arr;
    params["sweep"] = sweep;
  } else {
    if (n < 4) {
      std::cerr << "probe: need --n >= 4 (or --sweep)\n";
      return kExitUsage;
    }
    const auto rep = n % 2 == 0 ? curvotex::even_probe(n)
                                : curvotex::odd_probe(n, reciprocal);
    out = probe_json(rep);
    warnings = rep.warnings;
    params["n"] = n;
    params["reciprocal"] = reciprocal;
    if (restricted_ell > 0) {
      // Raw restricted quartic data for the subharmonic mode plane; no
      // reduction of coupled modes, so labelled as an extension.
      std::vector<std::string> rq_warnings;
      const auto [alpha, beta] =
          curvotex::restricted_quartic(n, restricted_ell, &rq_warnings);
      ojson rq;
      rq["ell"] = restricted_ell;
      rq["alpha"] = num9(alpha);
      rq["beta"] = num9(beta);
      rq["label"] = "beyond_published_analysis";
      rq["warnings"] = rq_warnings;
      out["restricted_quartic"] = rq;
      warnings.insert(warnings.end(), rq_warnings.begin(), rq_warnings.end());
      params["restricted_ell"] = restricted_ell;
    }
  }

  write_file(stem + ".json", out.dump(2) + "\n");
  write_manifest(stem, "probe", params, {stem + ".json"});
  return finish(warnings, strict);
}

// ----------------------------------------------------------------- simulate

VortexConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  ojson j = ojson::parse(in);

  VortexConfig c;
  c.lambda = j.at("lambda").get<double>();
  const std::string g = j.value("greens", "background");
  const auto choice = parse_greens(g);
  if (!choice) throw std::runtime_error("unknown greens choice '" + g + "'");
  c.greens = *choice;
  for (const auto& v : j.at("vortices")) {
    c.positions.emplace_back(v.at("re").get<double>(), v.at("im").get<double>());
    c.vorticities.push_back(v.at("kappa").get<double>());
  }
  if (c.positions.empty()) throw std::runtime_error("config has no vortices");
  return c;
}

ojson config_json(const VortexConfig& c) {
  ojson j;
  j["lambda"] = num9(c.lambda);
  j["greens"] = greens_name(c.greens);
  ojson vs = ojson::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    ojson v;
    v["re"] = num9(c.positions[i].real());
    v["im"] = num9(c.positions[i].imag());
    v["kappa"] = num9(c.vorticities[i]);
    vs.push_back(v);
  }
  j["vortices"] = vs;
  return j;
}

int cmd_simulate(const std::string& config_path, double t_end, double dt,
                 const std::vector<double>& perturb, const std::string& stem,
                 bool strict) {
  if (t_end <= 0.0 || dt <= 0.0) {
    std::cerr << "simulate: need positive --t-end and --dt\n";
    return kExitUsage;
  }
  VortexConfig c = load_config(config_path);

  ojson params;
  params["config"] = config_path;
  params["t_end"] = num9(t_end);
  params["dt"] = num9(dt);

  if (!perturb.empty()) {
    // Radial mode-l cosine perturbation, applied in listed order. Meaningful
    // for configurations listed in ring order.
    const int ell = static_cast<int>(perturb[0]);
    const double eps = perturb[1];
    const int n = static_cast<int>(c.size());
    if (ell < 0 || ell > n) {
      std::cerr << "simulate: perturbation mode out of range\n";
      return kExitUsage;
    }
    for (int j = 0; j < n; ++j) {
      const double r = std::abs(c.positions[j]);
      const double t = std::arg(c.positions[j]);
      const double rp = r + eps * std::cos(2.0 * M_PI * ell * j / n);
      c.positions[j] = std::polar(rp, t);
    }
    params["perturb_ell"] = ell;
    params["perturb_eps"] = num9(eps);
  }

  const auto traj = curvotex::integrate(c, t_end, dt);

  const std::size_t n = c.size();
  std::string body = "t";
  for (std::size_t j = 1; j <= n; ++j) {
    body += ",re_" + std::to_string(j) + ",im_" + std::to_string(j);
  }
  body += ",H,J_re,J_im,J_u\n";
  std::string inv = "t,H,J_re,J_im,J_u\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    std::string row = fmt9(traj.times[i]);
    for (std::size_t j = 0; j < n; ++j) {
      row += "," + fmt9(traj.states[i][j].real());
      row += "," + fmt9(traj.states[i][j].imag());
    }
    std::string tail = "," + fmt9(traj.energy[i]) + "," +
                       fmt9(traj.momentum_c[i].real()) + "," +
                       fmt9(traj.momentum_c[i].imag()) + "," +
                       fmt9(traj.momentum_u[i]);
    body += row + tail + "\n";
    inv += fmt9(traj.times[i]) + tail + "\n";
  }
  write_file(stem + ".csv", body);
  write_file(stem + ".invariants.csv", inv);

  std::vector<std::string> warnings;
  if (traj.aborted) warnings.push_back("integration aborted: " + traj.abort_reason);
  write_manifest(stem, "simulate", params,
                 {stem + ".csv", stem + ".invariants.csv"});
  return finish(warnings, strict);
}

// -------------------------------------------------------------- normal-form

int cmd_normal_form(int k, double alpha, double beta, double u, int grid,
                    double extent, const std::string& stem, bool strict) {
  if (k < 2 || grid < 2 || extent <= 0.0) {
    std::cerr << "normal-form: need k >= 2, grid >= 2, extent > 0\n";
    return kExitUsage;
  }
  curvotex::NormalFormSpec spec;
  spec.k = k;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.u = u;
  const auto field = curvotex::normal_form_contours(spec, grid, extent);

  std::string body = "x,y,f\n";
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const double x = -extent + 2.0 * extent * ix / (grid - 1);
      const double y = -extent + 2.0 * extent * iy / (grid - 1);
      body += fmt9(x) + "," + fmt9(y) + "," +
              fmt9(field.values[static_cast<std::size_t>(iy) * grid + ix]) + "\n";
    }
  }
  write_file(stem + ".csv", body);

  const auto type_name = [](curvotex::CriticalPointType t) {
    switch (t) {
      case curvotex::CriticalPointType::Minimum: return "minimum";
      case curvotex::CriticalPointType::Maximum: return "maximum";
      case curvotex::CriticalPointType::Saddle: return "saddle";
      case curvotex::CriticalPointType::Degenerate: return "degenerate";
    }
    return "degenerate";
  };
  std::string crit = "x,y,type\n";
  for (const auto& cp : field.critical_points) {
    crit += fmt9(cp.x) + "," + fmt9(cp.y) + "," + type_name(cp.type) + "\n";
  }
  write_file(stem + ".critical.csv", crit);

  const char* structure =
      field.structure == curvotex::BranchStructure::Transcritical
          ? "transcritical"
          : "dihedral_pitchfork";
  std::cout << "structure: " << structure
            << "; critical points: " << field.critical_points.size() << "\n";

  ojson params;
  params["k"] = k;
  params["alpha"] = num9(alpha);
  params["beta"] = num9(beta);
  params["u"] = num9(u);
  params["grid"] = grid;
  params["extent"] = num9(extent);
  params["structure"] = structure;
  write_manifest(stem, "normal-form", params,
                 {stem + ".csv", stem + ".critical.csv"});
  return finish({}, strict);
}

// ------------------------------------------------------------------ gallery

int cmd_gallery(int n, int ell, double eps, const std::string& branch,
                double r0, double lambda, const std::string& stem,
                bool strict) {
  if (n < 3 || ell < 1 || ell > n / 2) {
    std::cerr << "gallery: need n >= 3 and 1 <= ell <= n/2\n";
    return kExitUsage;
  }
  curvotex::GalleryBranch b;
  if (branch == "m") b = curvotex::GalleryBranch::M;
  else if (branch == "mprime") b = curvotex::GalleryBranch::MPrime;
  else {
    std::cerr << "gallery: branch must be 'm' or 'mprime'\n";
    return kExitUsage;
  }

  const auto config = curvotex::perturbation_gallery(n, ell, eps, b, r0, lambda);
  const double phase = curvotex::gallery_phase(n, ell, b);

  // Symmetry report: enumerate the stabilizer of the perturbed configuration
  // (rotations by n/gcd steps composed with the branch reflection) and check
  // invariance of the position set and of the energy.
  const int g = std::gcd(n, ell);
  const int step = n / g;
  const int refl_power = b == curvotex::GalleryBranch::M ? 0 : 1;
  double max_set_dev = 0.0;
  double max_energy_dev = 0.0;
  const double h0 = curvotex::hamiltonian(config);
  ojson elements = ojson::array();
  for (int j = 0; j < g; ++j) {
    for (int refl = 0; refl < 2; ++refl) {
      curvotex::DihedralElement el;
      el.rotation_power = (j * step + refl * refl_power) % n;
      el.reflected = refl != 0;
      const auto moved = curvotex::act(el, config);
      double dev = 0.0;
      for (const auto& p : moved.positions) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : config.positions) best = std::min(best, std::abs(p - q));
        dev = std::max(dev, best);
      }
      max_set_dev = std::max(max_set_dev, dev);
      max_energy_dev =
          std::max(max_energy_dev, std::abs(curvotex::hamiltonian(moved) - h0));
      ojson e;
      e["rotation_power"] = el.rotation_power;
      e["reflected"] = el.reflected;
      elements.push_back(e);
    }
  }

  ojson out;
  out["n"] = n;
  out["ell"] = ell;
  out["eps"] = num9(eps);
  out["branch"] = branch;
  out["phase"] = num9(phase);
  out["config"] = config_json(config);
  ojson sym;
  sym["group_order"] = 2 * g;
  sym["elements"] = elements;
  sym["position_set_residual"] = num9(max_set_dev);
  sym["energy_residual"] = num9(max_energy_dev);
  out["symmetry"] = sym;
  write_file(stem + ".json", out.dump(2) + "\n");

  ojson params;
  params["n"] = n;
  params["ell"] = ell;
  params["eps"] = num9(eps);
  params["branch"] = branch;
  params["r0"] = num9(r0);
  params["lambda"] = num9(lambda);
  write_manifest(stem, "gallery", params, {stem + ".json"});
  return finish({}, strict);
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const curvotex::equator_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const curvotex::anisotropy_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-vortex rings on the curvature family of surfaces"};
  app.set_version_flag("--version", std::string("curvotex ") + kVersion);
  app.require_subcommand(1);

  bool strict = false;

  // stability
  auto* stab = app.add_subcommand("stability", "stable-range table");
  int s_min = 4, s_max = 13;
  bool s_table = false;
  std::string s_format = "csv", s_stem = "stability";
  stab->add_flag("--table", s_table, "default table, n = 4..13");
  stab->add_option("--n-min", s_min, "first ring size");
  stab->add_option("--n-max", s_max, "last ring size");
  stab->add_option("--format", s_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  stab->add_option("--out", s_stem, "output stem");

  // bifurcations
  auto* bif = app.add_subcommand("bifurcations", "per-mode degeneracy table");
  int b_n_arg = 0;
  std::string b_format = "csv", b_stem = "bifurcations";
  bif->add_option("--n", b_n_arg, "ring size")->required();
  bif->add_option("--format", b_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  bif->add_option("--out", b_stem, "output stem");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "mode eigenvalues at (n, x)");
  int p_n = 0;
  double p_x = 0.0;
  std::string p_greens = "background", p_stem = "spectrum";
  spec->add_option("--n", p_n, "ring size")->required();
  spec->add_option("--x", p_x, "lambda r0^2")->required();
  spec->add_option("--greens", p_greens, "background, pole, or antipodal")
      ->check(CLI::IsMember({"background", "pole", "antipodal"}));
  spec->add_option("--out", p_stem, "output stem");

  // probe
  auto* prb = app.add_subcommand("probe", "degenerate-point probe at the bifurcation");
  int q_n = 0, q_sweep = 0, q_rell = 0;
  bool q_reciprocal = false;
  std::string q_stem = "probe";
  prb->add_option("--n", q_n, "ring size");
  prb->add_flag("--reciprocal", q_reciprocal, "probe the reciprocal root (odd n)");
  prb->add_option("--sweep", q_sweep, "probe every n in 4..N");
  prb->add_option("--restricted-ell", q_rell,
                  "also emit raw restricted quartic data for this mode");
  prb->add_option("--out", q_stem, "output stem");

  // simulate
  auto* sim = app.add_subcommand("simulate", "integrate a configuration");
  std::string m_config, m_stem = "simulate";
  double m_tend = 0.0, m_dt = 0.0;
  std::vector<double> m_perturb;
  sim->add_option("--config", m_config, "configuration JSON")->required();
  sim->add_option("--t-end", m_tend, "final time")->required();
  sim->add_option("--dt", m_dt, "step size")->required();
  sim->add_option("--perturb", m_perturb, "mode and size: L EPS")->expected(2);
  sim->add_option("--out", m_stem, "output stem");

  // normal-form
  auto* nf = app.add_subcommand("normal-form", "sample a symmetric normal form");
  int f_k = 2, f_grid = 101;
  double f_alpha = 0.0, f_beta = 0.0, f_u = 0.0, f_extent = 1.0;
  std::string f_stem = "normal_form";
  nf->add_option("--k", f_k, "symmetry order")->required();
  nf->add_option("--alpha", f_alpha, "quartic coefficient")->required();
  nf->add_option("--beta", f_beta, "anisotropy coefficient")->required();
  nf->add_option("--u", f_u, "unfolding parameter")->required();
  nf->add_option("--grid", f_grid, "samples per axis");
  nf->add_option("--extent", f_extent, "half-width of the window");
  nf->add_option("--out", f_stem, "output stem");

  // gallery
  auto* gal = app.add_subcommand("gallery", "symmetric mode perturbation");
  int g_n = 0, g_ell = 0;
  double g_eps = 0.05, g_r0 = 1.0, g_lambda = 0.0;
  std::string g_branch = "m", g_stem = "gallery";
  gal->add_option("--n", g_n, "ring size")->required();
  gal->add_option("--ell", g_ell, "perturbation mode")->required();
  gal->add_option("--eps", g_eps, "perturbation size");
  gal->add_option("--branch", g_branch, "reflection branch: m or mprime");
  gal->add_option("--r0", g_r0, "ring radius");
  gal->add_option("--lambda", g_lambda, "surface parameter");
  gal->add_option("--out", g_stem, "output stem");

  for (auto* sc : {stab, bif, spec, prb, sim, nf, gal}) {
    sc->add_flag("--strict", strict, "escalate numerical warnings to exit 4");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (stab->parsed()) {
    return guarded([&] { return cmd_stability(s_min, s_max, s_format, s_stem, strict); });
  }
  if (bif->parsed()) {
    return guarded([&] { return cmd_bifurcations(b_n_arg, b_format, b_stem, strict); });
  }
  if (spec->parsed()) {
    return guarded([&] { return cmd_spectrum(p_n, p_x, p_greens, p_stem, strict); });
  }
  if (prb->parsed()) {
    return guarded([&] {
      return cmd_probe(q_n, q_reciprocal, q_sweep, q_rell, q_stem, strict);
    });
  }
  if (sim->parsed()) {
    return guarded([&] {
      return cmd_simulate(m_config, m_tend, m_dt, m_perturb, m_stem, strict);
    });
  }
  if (nf->parsed()) {
    return guarded([&] {
      return cmd_normal_form(f_k, f_alpha, f_beta, f_u, f_grid, f_extent, f_stem,
                             strict);
    });
  }
  if (gal->parsed()) {
    return guarded([&] {
      return cmd_gallery(g_n, g_ell, g_eps, g_branch, g_r0, g_lambda, g_stem,
                         strict);
    });
  }
  return kExitUsage;
}
