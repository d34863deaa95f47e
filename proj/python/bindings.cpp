#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibrefilter/model.hpp"
#include "fibrefilter/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace fibrefilter;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Efficiency and penetration of fibrous filter media";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    // Inputs
    py::class_<FilterMedium>(m, "FilterMedium")
        .def(py::init([](double thickness_L, double fiber_diameter_df, double solidity_alpha,
                         std::optional<double> element_diameter_dF) {
                 return FilterMedium{thickness_L, fiber_diameter_df, solidity_alpha,
                                     element_diameter_dF};
             }),
             "thickness_L"_a, "fiber_diameter_df"_a, "solidity_alpha"_a,
             "element_diameter_dF"_a = py::none())
        .def_readwrite("thickness_L", &FilterMedium::thickness_L, "Thickness [mm]")
        .def_readwrite("fiber_diameter_df", &FilterMedium::fiber_diameter_df, "Fiber diameter [um]")
        .def_readwrite("solidity_alpha", &FilterMedium::solidity_alpha)
        .def_readwrite("element_diameter_dF", &FilterMedium::element_diameter_dF,
                       "Element diameter for Reynolds [m]");

    py::class_<FluidState>(m, "FluidState")
        .def(py::init([](double viscosity_mu, double temperature_T, double velocity_u,
                         double fluid_density_rho_f) {
                 return FluidState{viscosity_mu, temperature_T, velocity_u, fluid_density_rho_f};
             }),
             "viscosity_mu"_a, "temperature_T"_a, "velocity_u"_a, "fluid_density_rho_f"_a)
        .def_readwrite("viscosity_mu", &FluidState::viscosity_mu)
        .def_readwrite("temperature_T", &FluidState::temperature_T)
        .def_readwrite("velocity_u", &FluidState::velocity_u)
        .def_readwrite("fluid_density_rho_f", &FluidState::fluid_density_rho_f);

    py::class_<Particle>(m, "Particle")
        .def(py::init([](double diameter_dp, double density_rho_p) {
                 return Particle{diameter_dp, density_rho_p};
             }),
             "diameter_dp"_a, "density_rho_p"_a)
        .def_readwrite("diameter_dp", &Particle::diameter_dp)
        .def_readwrite("density_rho_p", &Particle::density_rho_p);

    py::class_<ModelConstants>(m, "ModelConstants")
        .def(py::init<>())
        .def_readwrite("boltzmann_k", &ModelConstants::boltzmann_k)
        .def_readwrite("slip_A1", &ModelConstants::slip_A1)
        .def_readwrite("slip_A2", &ModelConstants::slip_A2)
        .def_readwrite("slip_A3", &ModelConstants::slip_A3)
        .def_readwrite("slip_lambda", &ModelConstants::slip_lambda)
        .def_readwrite("drag_CD", &ModelConstants::drag_CD)
        .def_readwrite("nr_threshold", &ModelConstants::nr_threshold)
        .def_readwrite("diffusion_coeff", &ModelConstants::diffusion_coeff);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init([](FilterMedium medium, FluidState fluid, Particle particle,
                         std::optional<ModelConstants> constants) {
                 return Scenario{medium, fluid, particle, constants.value_or(ModelConstants{})};
             }),
             "medium"_a, "fluid"_a, "particle"_a, "constants"_a = py::none())
        .def_readwrite("medium", &Scenario::medium)
        .def_readwrite("fluid", &Scenario::fluid)
        .def_readwrite("particle", &Scenario::particle)
        .def_readwrite("constants", &Scenario::constants);

    // Outputs
    py::class_<DimensionlessGroups>(m, "DimensionlessGroups")
        .def_readonly("kuwabara_Ku", &DimensionlessGroups::kuwabara_Ku)
        .def_readonly("peclet_Pe", &DimensionlessGroups::peclet_Pe)
        .def_readonly("stokes_Stk", &DimensionlessGroups::stokes_Stk)
        .def_readonly("interception_NR", &DimensionlessGroups::interception_NR)
        .def_readonly("reynolds_Re", &DimensionlessGroups::reynolds_Re)
        .def_readonly("slip_Cc", &DimensionlessGroups::slip_Cc)
        .def_readonly("impaction_J", &DimensionlessGroups::impaction_J);

    py::class_<MechanismFactors>(m, "MechanismFactors")
        .def_readonly("eta_diffusion_nD", &MechanismFactors::eta_diffusion_nD)
        .def_readonly("eta_interception_nR", &MechanismFactors::eta_interception_nR)
        .def_readonly("eta_impaction_nI", &MechanismFactors::eta_impaction_nI)
        .def_readonly("sum_n", &MechanismFactors::sum_n);

    py::class_<FiltrationResult>(m, "FiltrationResult")
        .def_readonly("penetration_P", &FiltrationResult::penetration_P)
        .def_readonly("efficiency_E", &FiltrationResult::efficiency_E)
        .def_readonly("log_penetration", &FiltrationResult::log_penetration)
        .def_readonly("groups", &FiltrationResult::groups)
        .def_readonly("factors", &FiltrationResult::factors)
        .def_readonly("warnings", &FiltrationResult::warnings);

    py::enum_<SweepParameter>(m, "SweepParameter")
        .value("dp", SweepParameter::dp)
        .value("L", SweepParameter::L)
        .value("df", SweepParameter::df)
        .value("alpha", SweepParameter::alpha)
        .value("u", SweepParameter::u)
        .value("T", SweepParameter::T)
        .value("mu", SweepParameter::mu)
        .value("rho_p", SweepParameter::rho_p);

    py::enum_<SweepScale>(m, "SweepScale")
        .value("linear", SweepScale::linear)
        .value("logarithmic", SweepScale::logarithmic);

    py::enum_<MppsBoundary>(m, "MppsBoundary")
        .value("none", MppsBoundary::none)
        .value("lower", MppsBoundary::lower)
        .value("upper", MppsBoundary::upper);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init([](SweepParameter parameter, double start, double stop, std::size_t points,
                         SweepScale scale) {
                 return SweepSpec{parameter, start, stop, points, scale};
             }),
             "parameter"_a, "start"_a, "stop"_a, "points"_a, "scale"_a = SweepScale::linear)
        .def_readwrite("parameter", &SweepSpec::parameter)
        .def_readwrite("start", &SweepSpec::start)
        .def_readwrite("stop", &SweepSpec::stop)
        .def_readwrite("points", &SweepSpec::points)
        .def_readwrite("scale", &SweepSpec::scale);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("parameter_value", &CurvePoint::parameter_value)
        .def_readonly("result", &CurvePoint::result);

    py::class_<MppsResult>(m, "MppsResult")
        .def_readonly("dp_star", &MppsResult::dp_star)
        .def_readonly("p_max", &MppsResult::p_max)
        .def_readonly("log_p_max", &MppsResult::log_p_max)
        .def_readonly("bracket_lo", &MppsResult::bracket_lo)
        .def_readonly("bracket_hi", &MppsResult::bracket_hi)
        .def_readonly("boundary", &MppsResult::boundary)
        .def_readonly("interior_maxima", &MppsResult::interior_maxima);

    // Model operations
    m.def("kuwabara", &kuwabara, "alpha"_a, "Kuwabara hydrodynamic factor.");
    m.def("slip_correction", &slip_correction, "dp"_a, "constants"_a = ModelConstants{},
          "Slip correction factor for a particle diameter in um.");
    m.def("peclet", &peclet, "fluid"_a, "df"_a, "dp"_a, "constants"_a = ModelConstants{});
    m.def("eta_diffusion", &eta_diffusion, "alpha"_a, "ku"_a, "pe"_a,
          "constants"_a = ModelConstants{});
    m.def("interception_ratio", &interception_ratio, "dp"_a, "df"_a);
    m.def("eta_interception", &eta_interception, "alpha"_a, "ku"_a, "nr"_a);
    m.def("stokes", &stokes, "particle"_a, "fluid"_a, "df"_a, "constants"_a = ModelConstants{});
    m.def("inertial_j", &inertial_j, "nr"_a, "alpha"_a, "constants"_a = ModelConstants{});
    m.def("eta_impaction", &eta_impaction, "stk"_a, "j"_a, "ku"_a);
    m.def("penetration", &penetration, "medium"_a, "sum_n"_a);
    m.def("log_penetration", &log_penetration, "medium"_a, "sum_n"_a);
    m.def("efficiency", &efficiency, "p"_a);
    m.def("reynolds", &reynolds, "fluid"_a, "dF"_a);
    m.def("equivalent_diameter", &equivalent_diameter, "area"_a, "perimeter"_a);

    m.def("evaluate", py::overload_cast<const Scenario&>(&evaluate), "scenario"_a,
          "Full model chain for one operating point.");
    m.def("evaluate",
          py::overload_cast<const FilterMedium&, const FluidState&, const Particle&,
                            const ModelConstants&>(&evaluate),
          "medium"_a, "fluid"_a, "particle"_a, "constants"_a = ModelConstants{});

    // Sweeps
    m.def("grid", &grid, "spec"_a);
    m.def("with_parameter", &with_parameter, "base"_a, "parameter"_a, "value"_a);
    m.def("sweep", &sweep, "base"_a, "spec"_a);
    m.def(
        "find_mpps",
        [](const Scenario& base, double dp_lo, double dp_hi, double tol,
           std::size_t coarse_points) {
            return find_mpps(base, dp_lo, dp_hi, tol, MppsOptions{coarse_points});
        },
        "base"_a, "dp_lo"_a, "dp_hi"_a, "tol"_a = 1e-4, "coarse_points"_a = 64,
        "Most-penetrating particle size on [dp_lo, dp_hi] (um).");
}
