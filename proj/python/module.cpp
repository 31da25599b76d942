#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ginv/cli.hpp"
#include "ginv/errors.hpp"
#include "ginv/hemisphere.hpp"
#include "ginv/invariants.hpp"
#include "ginv/json_io.hpp"
#include "ginv/strata.hpp"

namespace py = pybind11;
using namespace ginv;

namespace {

// nlohmann -> Python objects through the json module; keeps big integers exact.
py::object to_py(const Json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ to_py(const BigInt &b) { return py::int_(py::module_::import("builtins").attr("int")(b.str())); }

GroupSpec resolve(const py::object &group, int n)
{
    if (py::isinstance<py::str>(group)) {
        const auto name = group.cast<std::string>();
        const auto [h1, h2] = isospectral_pair(n);
        if (name == "h1") return h1;
        if (name == "h2") return h2;
        throw InvalidParameter("unknown group '" + name + "' (expected h1, h2 or a spec dict)");
    }
    const std::string text = py::module_::import("json").attr("dumps")(group).cast<std::string>();
    return group_spec_from_json(Json::parse(text));
}

py::list spectrum_rows(const HarmonicSpectrum &s)
{
    py::list rows;
    for (const auto &e : s.entries) {
        py::dict d;
        d["k"] = e.degree;
        d["lambda"] = e.eigenvalue;
        d["m"] = to_py(e.multiplicity);
        rows.append(d);
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(ginvspec, m)
{
    m.doc() = "Invariant Laplace spectra of spheres and numeric orbit-space geometry";

    py::register_exception<ginv::InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<ginv::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<ginv::InvalidSpec>(m, "InvalidSpec", PyExc_ValueError);
    py::register_exception<ginv::IndeterminateRank>(m, "IndeterminateRank", PyExc_RuntimeError);
    py::register_exception<ginv::StencilDegeneracy>(m, "StencilDegeneracy", PyExc_RuntimeError);

    m.def("isospectral_pair", [](int n) {
        const auto [h1, h2] = isospectral_pair(n);
        return py::make_tuple(to_py(group_spec_to_json(h1)), to_py(group_spec_to_json(h2)));
    }, py::arg("n") = 3, "Group specs (dicts) of the isospectral pair on S^{4n-1}.");

    m.def("molien_series", [](const py::object &group, std::size_t degree, int n) {
        const GroupSpec g = resolve(group, n);
        std::vector<BigInt> c;
        {
            py::gil_scoped_release release;
            c = molien_series(g, degree);
        }
        py::list out;
        for (const auto &x : c) out.append(to_py(x));
        return out;
    }, py::arg("group"), py::arg("degree") = 12, py::arg("n") = 3,
       "Dimensions c_0..c_D of invariant polynomials. group is 'h1', 'h2' or a spec dict.");

    m.def("harmonic_spectrum", [](const py::object &group, std::size_t degree, int n) {
        const GroupSpec g = resolve(group, n);
        HarmonicSpectrum s;
        {
            py::gil_scoped_release release;
            s = harmonic_spectrum(g, degree);
        }
        py::dict d;
        d["sphere_dim"] = s.sphere_dim;
        d["rows"] = spectrum_rows(s);
        return d;
    }, py::arg("group"), py::arg("degree") = 12, py::arg("n") = 3,
       "Invariant spectrum rows {k, lambda, m} with lambda = k(k+d-1).");

    m.def("invariant_dim_in_irrep", [](const std::vector<int> &partition, const py::object &group, int n) {
        return to_py(invariant_dim_in_irrep(Partition(partition), resolve(group, n)));
    }, py::arg("partition"), py::arg("group"), py::arg("n") = 3);

    m.def("neumann_spectrum", [](std::size_t max_degree) {
        py::list rows;
        for (const auto &e : neumann_spectrum(max_degree).entries) {
            py::dict d;
            d["j"] = e.degree;
            d["lambda"] = e.eigenvalue;
            d["mult"] = e.multiplicity;
            d["dirichlet"] = e.dirichlet_multiplicity;
            rows.append(d);
        }
        return rows;
    }, py::arg("max_degree"));

    m.def("quotient_coords", [](const std::vector<double> &point) {
        const strata::QuotientCoords q =
            strata::quotient_coords(Eigen::Map<const geom::Vec>(point.data(), static_cast<Eigen::Index>(point.size())));
        return py::make_tuple(q.r1, q.r2, q.alpha);
    }, py::arg("point"), "(r1, r2, alpha) of a point of S^7; alpha = -1 where undefined.");

    // Every CLI report, returned as (exit code, stdout, stderr).
    m.def("run", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run a CLI subcommand, e.g. run(['polar', '--space', 'o2', '--row', 'D']).");
}
