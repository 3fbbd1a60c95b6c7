#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <curvotex/bifurcation.hpp>
#include <curvotex/errors.hpp>
#include <curvotex/ring.hpp>
#include <curvotex/spectral.hpp>
#include <curvotex/stability.hpp>
#include <curvotex/surface.hpp>
#include <curvotex/vortex.hpp>

namespace py = pybind11;
using namespace curvotex;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Point-vortex rings on the curvature family of surfaces";

  py::register_exception<chart_domain_error>(m, "ChartDomainError");
  py::register_exception<equator_error>(m, "EquatorError");
  py::register_exception<anisotropy_error>(m, "AnisotropyError");

  // surface
  py::enum_<GreensChoice>(m, "GreensChoice")
      .value("PoleAtInfinity", GreensChoice::PoleAtInfinity)
      .value("Antipodal", GreensChoice::Antipodal)
      .value("Background", GreensChoice::Background);

  py::class_<SurfaceParam>(m, "SurfaceParam")
      .def(py::init<double>(), py::arg("lambda_") = 0.0)
      .def_readwrite("lambda_", &SurfaceParam::lambda);

  m.def(
      "sigma", [](Complex z, double lam) { return sigma(z, {lam}); },
      py::arg("z"), py::arg("lambda_"), "Conformal factor 1 + lambda |z|^2.");
  m.def(
      "antipode", [](Complex z, double lam) { return antipode(z, {lam}); },
      py::arg("z"), py::arg("lambda_"));
  m.def(
      "greens",
      [](GreensChoice choice, Complex z, Complex w, double lam) {
        return greens(choice, z, w, {lam});
      },
      py::arg("choice"), py::arg("z"), py::arg("w"), py::arg("lambda_"));

  // vortex systems
  py::class_<VortexConfig>(m, "VortexConfig")
      .def(py::init<>())
      .def_readwrite("lambda_", &VortexConfig::lambda)
      .def_readwrite("positions", &VortexConfig::positions)
      .def_readwrite("vorticities", &VortexConfig::vorticities)
      .def_readwrite("greens", &VortexConfig::greens)
      .def("__len__", &VortexConfig::size);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("states", &Trajectory::states)
      .def_readonly("energy", &Trajectory::energy)
      .def_readonly("momentum_c", &Trajectory::momentum_c)
      .def_readonly("momentum_u", &Trajectory::momentum_u)
      .def_readonly("aborted", &Trajectory::aborted)
      .def_readonly("abort_reason", &Trajectory::abort_reason);

  py::class_<LinearizedSpectrum>(m, "LinearizedSpectrum")
      .def_readonly("eigenvalues", &LinearizedSpectrum::eigenvalues)
      .def_readonly("omega", &LinearizedSpectrum::omega)
      .def_readonly("residual", &LinearizedSpectrum::residual)
      .def_readonly("equilibrium", &LinearizedSpectrum::equilibrium);

  m.def("hamiltonian", &hamiltonian, py::arg("config"));
  m.def("momentum", &momentum, py::arg("config"));
  m.def("augmented_hamiltonian", &augmented_hamiltonian, py::arg("config"),
        py::arg("omega"));
  m.def("velocities", &velocities, py::arg("config"));
  m.def("integrate", &integrate, py::arg("config"), py::arg("t_end"),
        py::arg("dt"));
  m.def("linearized_spectrum", &linearized_spectrum, py::arg("config"));

  // rings
  py::class_<RingSpec>(m, "RingSpec")
      .def(py::init<>())
      .def_readwrite("n", &RingSpec::n)
      .def_readwrite("kappa", &RingSpec::kappa)
      .def_readwrite("r0", &RingSpec::r0)
      .def_readwrite("lambda_", &RingSpec::lambda)
      .def_readwrite("phase", &RingSpec::phase);

  m.def("make_ring", &make_ring, py::arg("spec"),
        py::arg("greens") = GreensChoice::Background);
  m.def("ring_energy", &ring_energy, py::arg("spec"));
  m.def("omega0", &omega0, py::arg("spec"),
        py::arg("greens") = GreensChoice::Background);

  // spectral data
  py::enum_<ModeKind>(m, "ModeKind")
      .value("Radial", ModeKind::Radial)
      .value("Angular", ModeKind::Angular);

  py::class_<ModeSpectrum>(m, "ModeSpectrum")
      .def_readonly("eps_r", &ModeSpectrum::eps_r)
      .def_readonly("eps_theta", &ModeSpectrum::eps_theta)
      .def_readonly("eps1prime", &ModeSpectrum::eps1prime_value);

  m.def("mode_eigenvalues", &mode_eigenvalues, py::arg("spec"));
  m.def("mode_eigenvalues_alt", &mode_eigenvalues_alt, py::arg("spec"));
  m.def("eps1prime", &eps1prime, py::arg("spec"));
  m.def("trig_identity", &trig_identity, py::arg("n"), py::arg("ell"));
  m.def("hessian_closed_form", &hessian_closed_form, py::arg("spec"),
        py::arg("greens") = GreensChoice::Background);
  m.def("hessian_numerical", &hessian_numerical, py::arg("spec"),
        py::arg("greens") = GreensChoice::Background);

  // stability
  py::enum_<StabilityClass>(m, "StabilityClass")
      .value("Stable", StabilityClass::Stable)
      .value("LinearlyUnstable", StabilityClass::LinearlyUnstable)
      .value("Degenerate", StabilityClass::Degenerate);

  py::class_<StabilityVerdict>(m, "StabilityVerdict")
      .def_readonly("classification", &StabilityVerdict::classification)
      .def_readonly("failing_modes", &StabilityVerdict::failing_modes)
      .def_readonly("degenerate_modes", &StabilityVerdict::degenerate_modes);

  py::class_<BifurcationPoint>(m, "BifurcationPoint")
      .def_readonly("n", &BifurcationPoint::n)
      .def_readonly("ell", &BifurcationPoint::ell)
      .def_readonly("x", &BifurcationPoint::x)
      .def_readonly("partner", &BifurcationPoint::partner)
      .def_readonly("crossing_speed", &BifurcationPoint::crossing_speed);

  py::class_<StabilityRange>(m, "StabilityRange")
      .def_readonly("n", &StabilityRange::n)
      .def_readonly("always_stable", &StabilityRange::always_stable)
      .def_readonly("stable_up_to", &StabilityRange::stable_up_to)
      .def_readonly("second_from", &StabilityRange::second_from);

  m.def("is_stable", &is_stable, py::arg("n"), py::arg("x"));
  m.def("is_stable_alt", &is_stable_alt, py::arg("n"), py::arg("x"));
  m.def("b_n", &b_n, py::arg("n"));
  m.def("bifurcation_value", &bifurcation_value, py::arg("n"), py::arg("ell"));
  m.def("classify", &classify, py::arg("n"), py::arg("x"),
        py::arg("tol") = 1e-9);
  m.def("stability_range", &stability_range, py::arg("n"));

  // probes and galleries
  py::enum_<ProbeParity>(m, "ProbeParity")
      .value("Even", ProbeParity::Even)
      .value("Odd", ProbeParity::Odd);

  py::enum_<ProbeVerdict>(m, "ProbeVerdict")
      .value("StableDegenerate", ProbeVerdict::StableDegenerate)
      .value("Inconclusive", ProbeVerdict::Inconclusive);

  py::class_<EvenProbeData>(m, "EvenProbeData")
      .def_readonly("t2_coeff", &EvenProbeData::t2_coeff)
      .def_readonly("t4_coeff", &EvenProbeData::t4_coeff)
      .def_readonly("T_value", &EvenProbeData::T_value);

  py::class_<OddProbeData>(m, "OddProbeData")
      .def_readonly("beta", &OddProbeData::beta)
      .def_readonly("gamma", &OddProbeData::gamma)
      .def_readonly("delta", &OddProbeData::delta)
      .def_readonly("discriminant", &OddProbeData::discriminant);

  py::class_<DegeneracyReport>(m, "DegeneracyReport")
      .def_readonly("n", &DegeneracyReport::n)
      .def_readonly("x_star", &DegeneracyReport::x_star)
      .def_readonly("parity", &DegeneracyReport::parity)
      .def_readonly("even_data", &DegeneracyReport::even_data)
      .def_readonly("odd_data", &DegeneracyReport::odd_data)
      .def_readonly("verdict", &DegeneracyReport::verdict)
      .def_readonly("warnings", &DegeneracyReport::warnings);

  m.def("even_probe", &even_probe, py::arg("n"));
  m.def("odd_probe", &odd_probe, py::arg("n"),
        py::arg("at_reciprocal_root") = false);
  m.def("conjecture_sweep", &conjecture_sweep, py::arg("n_max"));
  m.def("eigenvalue_crossing_speed", &eigenvalue_crossing_speed, py::arg("n"),
        py::arg("ell"));
  m.def("even_probe_sum", &even_probe_sum, py::arg("m"));
  m.def("even_probe_product", &even_probe_product, py::arg("m"));

  py::enum_<GalleryBranch>(m, "GalleryBranch")
      .value("M", GalleryBranch::M)
      .value("MPrime", GalleryBranch::MPrime);

  m.def("gallery_phase", &gallery_phase, py::arg("n"), py::arg("ell"),
        py::arg("branch"));
  m.def("perturbation_gallery", &perturbation_gallery, py::arg("n"),
        py::arg("ell"), py::arg("eps"), py::arg("branch"), py::arg("r0") = 1.0,
        py::arg("lambda_") = 0.0);

  // normal forms
  py::enum_<BranchStructure>(m, "BranchStructure")
      .value("Transcritical", BranchStructure::Transcritical)
      .value("DihedralPitchfork", BranchStructure::DihedralPitchfork);

  py::enum_<CriticalPointType>(m, "CriticalPointType")
      .value("Minimum", CriticalPointType::Minimum)
      .value("Maximum", CriticalPointType::Maximum)
      .value("Saddle", CriticalPointType::Saddle)
      .value("Degenerate", CriticalPointType::Degenerate);

  py::class_<NormalFormSpec>(m, "NormalFormSpec")
      .def(py::init<>())
      .def_readwrite("k", &NormalFormSpec::k)
      .def_readwrite("alpha", &NormalFormSpec::alpha)
      .def_readwrite("beta", &NormalFormSpec::beta)
      .def_readwrite("u", &NormalFormSpec::u);

  py::class_<CriticalPoint>(m, "CriticalPoint")
      .def_readonly("x", &CriticalPoint::x)
      .def_readonly("y", &CriticalPoint::y)
      .def_readonly("type", &CriticalPoint::type);

  py::class_<NormalFormField>(m, "NormalFormField")
      .def_readonly("grid", &NormalFormField::grid)
      .def_readonly("extent", &NormalFormField::extent)
      .def_readonly("values", &NormalFormField::values)
      .def_readonly("critical_points", &NormalFormField::critical_points)
      .def_readonly("structure", &NormalFormField::structure);

  m.def("normal_form_contours", &normal_form_contours, py::arg("spec"),
        py::arg("grid"), py::arg("extent") = 1.0);
  m.def("restricted_quartic",
        [](int n, int ell) {
          std::vector<std::string> warnings;
          auto ab = restricted_quartic(n, ell, &warnings);
          return py::make_tuple(ab.first, ab.second, warnings);
        },
        py::arg("n"), py::arg("ell"),
        "Raw restricted quartic data (alpha, beta, warnings).");
}
