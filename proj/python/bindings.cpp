// Python module _levylab: models, European and American pricing, regime and stopping tools.

#include "levylab/american_pide.hpp"
#include "levylab/asymptotics.hpp"
#include "levylab/config.hpp"
#include "levylab/errors.hpp"
#include "levylab/european.hpp"
#include "levylab/harness.hpp"
#include "levylab/levy_model.hpp"
#include "levylab/simulation.hpp"
#include "levylab/stopping_value.hpp"
#include "levylab/version.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace levylab;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
    return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<double> to_matrix(const std::vector<std::vector<double>>& m) {
    const py::ssize_t rows = static_cast<py::ssize_t>(m.size());
    const py::ssize_t cols = rows > 0 ? static_cast<py::ssize_t>(m[0].size()) : 0;
    py::array_t<double> out({rows, cols});
    auto a = out.mutable_unchecked<2>();
    for (py::ssize_t j = 0; j < rows; ++j) {
        for (py::ssize_t i = 0; i < cols; ++i) a(j, i) = m[j][i];
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_levylab, m) {
    m.doc() = "Near-maturity American puts under exponential Levy models";
    m.attr("__version__") = kVersion;

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidModel>(m, "InvalidModel", base.ptr());
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<RegimeMismatch>(m, "RegimeMismatch", base.ptr());
    py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());

    py::class_<Atom>(m, "Atom")
        .def(py::init<double, double>(), py::arg("location"), py::arg("weight"))
        .def_readwrite("location", &Atom::location)
        .def_readwrite("weight", &Atom::weight);

    py::class_<jumps::Kou>(m, "Kou")
        .def(py::init<double, double, double, double>(), py::arg("lambda_up"), py::arg("eta_up"),
             py::arg("lambda_down"), py::arg("eta_down"));
    py::class_<jumps::Merton>(m, "Merton")
        .def(py::init<double, double, double>(), py::arg("intensity"), py::arg("mean"),
             py::arg("stdev"));
    py::class_<jumps::VarianceGamma>(m, "VarianceGamma")
        .def(py::init<double, double, double>(), py::arg("c"), py::arg("g"), py::arg("m"));
    py::class_<jumps::TemperedStable>(m, "TemperedStable")
        .def(py::init<double, double, double, double, double, double>(), py::arg("c_pos"),
             py::arg("c_neg"), py::arg("g"), py::arg("m"), py::arg("alpha_pos"),
             py::arg("alpha_neg"));
    py::class_<jumps::FiniteActivity>(m, "FiniteActivity")
        .def(py::init<double, std::vector<Atom>>(), py::arg("intensity"), py::arg("sizes"));

    py::class_<LevyModel>(m, "LevyModel")
        .def(py::init([](double r, double delta, double sigma, std::optional<JumpLaw> law,
                         std::vector<Atom> atoms) {
                 return LevyModel(r, delta, sigma,
                                  {law.value_or(jumps::None{}), std::move(atoms)});
             }),
             py::arg("r"), py::arg("delta") = 0.0, py::arg("sigma") = 0.0,
             py::arg("law") = py::none(), py::arg("atoms") = std::vector<Atom>{})
        .def_property_readonly("r", &LevyModel::r)
        .def_property_readonly("delta", &LevyModel::delta)
        .def_property_readonly("sigma", &LevyModel::sigma)
        .def_property_readonly("kind", &LevyModel::kind)
        .def("psi", [](const LevyModel& self, cplx u) { return characteristic_exponent(self, u); })
        .def("d", [](const LevyModel& self) { return compute_d(self); })
        .def("__repr__", [](const LevyModel& self) {
            std::ostringstream s;
            s << "LevyModel(kind=" << self.kind() << ", r=" << self.r()
              << ", delta=" << self.delta() << ", sigma=" << self.sigma() << ")";
            return s.str();
        });

    py::enum_<BoundaryLimit>(m, "BoundaryLimit")
        .value("Strike", BoundaryLimit::Strike)
        .value("Xi", BoundaryLimit::Xi);

    py::class_<RegimeReport>(m, "RegimeReport")
        .def_readonly("d", &RegimeReport::d)
        .def_readonly("brownian", &RegimeReport::brownian)
        .def_readonly("boundary_limit", &RegimeReport::boundary_limit)
        .def_readonly("limit_value", &RegimeReport::limit_value)
        .def_property_readonly("rate", [](const RegimeReport& r) { return to_string(r.applicable_rate); })
        .def("__str__", [](const RegimeReport& r) { return describe(r); });

    m.def("classify_regime", &classify_regime, py::arg("model"), py::arg("strike"));
    m.def("xi_limit", &xi_limit, py::arg("model"), py::arg("strike"));
    m.def(
        "european_put",
        [](const LevyModel& model, double theta, double spot, double strike) {
            return price_european_put(model, theta, spot, strike).value;
        },
        py::arg("model"), py::arg("theta"), py::arg("spot"), py::arg("strike"));
    m.def("critical_price_european", &critical_price_european, py::arg("model"), py::arg("theta"),
          py::arg("strike"));

    m.def(
        "simulate_increments",
        [](const LevyModel& model, double t, std::size_t n, std::uint64_t seed) {
            return to_array(simulate_increments(model, t, n, seed));
        },
        py::arg("model"), py::arg("t"), py::arg("n"), py::arg("seed"));

    py::class_<PriceSurface>(m, "PriceSurface")
        .def_property_readonly("x", [](const PriceSurface& s) { return to_array(s.x); })
        .def_property_readonly("tau", [](const PriceSurface& s) { return to_array(s.tau); })
        .def_property_readonly("values", [](const PriceSurface& s) { return to_matrix(s.values); })
        .def_readonly("strike", &PriceSurface::strike)
        .def_readonly("max_complementarity_residual", &PriceSurface::max_complementarity_residual)
        .def("value_at", &PriceSurface::value_at, py::arg("slice"), py::arg("spot"))
        .def("price", [](const PriceSurface& s, double spot) {
            return s.value_at(s.tau.size() - 1, spot);
        })
        .def("boundary", [](const PriceSurface& s) {
            const BoundaryCurve c = extract_boundary(s);
            return py::make_tuple(to_array(c.tau), to_array(c.b));
        })
        .def("violations", [](const PriceSurface& s) { return diagnose_surface(s).total(); });

    m.def(
        "solve_american",
        [](const LevyModel& model, double strike, double maturity, int n_x, int n_t,
           double width, bool european) {
            GridConfig gc;
            gc.n_x = n_x;
            gc.n_t = n_t;
            gc.width = width;
            SolverOptions opts;
            if (european) opts.style = ExerciseStyle::European;
            py::gil_scoped_release release;
            return solve(model, strike, full_grid(gc, strike, maturity), opts);
        },
        py::arg("model"), py::arg("strike"), py::arg("maturity"), py::arg("n_x") = 2001,
        py::arg("n_t") = 400, py::arg("width") = 2.0, py::arg("european") = false);

    m.def(
        "y_star_pde", [](double dx) {
            StoppingGrid g;
            g.dx = dx;
            return v_zero(g).y_star;
        },
        py::arg("dx") = 2e-3);
    m.def(
        "y_star_lattice",
        [](double lambda, double beta, double dx) {
            StoppingGrid g;
            g.dx = dx;
            return y_star(StoppingProblem{lambda, beta, PhaseOneGrowth::Growing, g});
        },
        py::arg("lambda_") = 0.0, py::arg("beta") = 0.0, py::arg("dx") = 2e-3);
    m.def("lattice_local_time_mean", &lattice_local_time_mean, py::arg("dx"));

    m.def(
        "load_model",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_config(in).model;
        },
        py::arg("ini_text"), "LevyModel from INI text with a [model] section");

    m.def(
        "rate_experiment",
        [](const LevyModel& model, std::vector<double> thetas) {
            Experiment e(model);
            e.thetas = std::move(thetas);
            RateReport r;
            {
                py::gil_scoped_release release;
                r = run_rate_experiment(e);
            }
            py::dict out;
            out["rate"] = to_string(r.tag);
            out["intercept"] = r.intercept;
            out["tolerance"] = r.tolerance;
            out["pass"] = r.pass;
            std::vector<double> th, ratio;
            for (const auto& row : r.rows) {
                if (!row.ok()) continue;
                th.push_back(row.theta);
                ratio.push_back(row.ratio);
            }
            out["theta"] = to_array(th);
            out["ratio"] = to_array(ratio);
            return out;
        },
        py::arg("model"), py::arg("thetas"));
    m.def("theta_ladder", &theta_ladder, py::arg("theta_max"), py::arg("theta_min"), py::arg("n"));
}
