#include "ghsub/catalog.hpp"
#include "ghsub/error.hpp"
#include "ghsub/iop.hpp"
#include "ghsub/problem.hpp"
#include "ghsub/subgrad.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ghsub;

namespace {

Box make_box(const std::vector<std::pair<double, double>>& axes)
{
    std::vector<Interval> v;
    for (const auto& [lo, hi] : axes)
        v.emplace_back(lo, hi);
    return Box(std::move(v));
}

IVector make_ivector(const std::vector<Interval>& comps) { return IVector(comps); }

Grid grid_for(const Ivf& f, std::size_t points) { return Grid(f.domain(), points); }

py::object witness_of(const SubgradientResult& r)
{
    return r.witness ? py::cast(*r.witness) : py::none();
}

} // namespace

PYBIND11_MODULE(_ghsub, m)
{
    m.doc() = "Interval arithmetic, gH-calculus and gH-subgradients of interval-valued functions";

    static PyObject* error = PyErr_NewException("ghsub.GhsubError", PyExc_RuntimeError, nullptr);
    m.attr("GhsubError") = py::handle(error);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error)(py::str(e.what()));
            inst.attr("code") = py::str(std::string(to_string(e.code())));
            if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
                inst.attr("line") = pe->line();
                inst.attr("column") = pe->column();
            }
            PyErr_SetObject(error, inst.ptr());
        }
    });

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def(py::init<double>(), py::arg("value"))
        .def_property_readonly("lo", &Interval::lo)
        .def_property_readonly("hi", &Interval::hi)
        .def("__eq__", [](const Interval& a, const Interval& b) { return a == b; })
        .def("__repr__", [](const Interval& a) { return format(a); })
        .def("__add__", [](const Interval& a, const Interval& b) { return add(a, b); })
        .def("__sub__", [](const Interval& a, const Interval& b) { return sub(a, b); })
        .def("__mul__", [](const Interval& a, const Interval& b) { return mul(a, b); })
        .def("__truediv__", [](const Interval& a, const Interval& b) { return div(a, b); })
        .def("__rmul__", [](const Interval& a, double l) { return scalar_mul(l, a); })
        .def("__mul__", [](const Interval& a, double l) { return scalar_mul(l, a); })
        .def("__iter__", [](const Interval& a) { return py::iter(py::make_tuple(a.lo(), a.hi())); });

    using BinOp = Interval (*)(const Interval&, const Interval&);
    m.def("add", static_cast<BinOp>(&ghsub::add));
    m.def("sub", static_cast<BinOp>(&ghsub::sub));
    m.def("mul", static_cast<BinOp>(&ghsub::mul));
    m.def("div", static_cast<BinOp>(&ghsub::div));
    m.def("gh_diff", &gh_diff);
    m.def("scalar_mul", &scalar_mul, py::arg("lam"), py::arg("a"));
    m.def("norm", py::overload_cast<const Interval&>(&norm));
    m.def("compare", [](const Interval& a, const Interval& b, double tol) { return std::string(to_string(compare(a, b, tol))); },
          py::arg("a"), py::arg("b"), py::arg("tol") = 0.0);
    m.def("precedes", &precedes, py::arg("a"), py::arg("b"), py::arg("tol") = 0.0);
    m.def("strictly_precedes", &strictly_precedes);
    m.def("parse_interval", &parse_interval);

    py::class_<IVector>(m, "IVector")
        .def(py::init(&make_ivector))
        .def("__len__", &IVector::size)
        .def("__getitem__", [](const IVector& v, std::size_t i) {
            if (i >= v.size())
                throw py::index_error();
            return v[i];
        })
        .def("__eq__", [](const IVector& a, const IVector& b) { return a == b; })
        .def("__repr__", [](const IVector& a) { return format(a); });
    m.def("vec_norm", &vec_norm);
    m.def("dot", [](const RealVector& d, const IVector& a) { return dot(d, a); });
    m.def("w_map", [](const IVector& a, double w) { return w_map(a, WMapConfig::from_w(w)); }, py::arg("a"),
          py::arg("w") = 0.5);

    py::class_<Ivf>(m, "Ivf")
        .def_static(
            "parse",
            [](const std::string& text, const std::vector<std::pair<double, double>>& domain, std::size_t arity) {
                return Ivf::parse(arity == 0 ? domain.size() : arity, text, make_box(domain));
            },
            py::arg("text"), py::arg("domain"), py::arg("arity") = 0)
        .def_property_readonly("arity", &Ivf::arity)
        .def_property_readonly("domain", [](const Ivf& f) {
            std::vector<std::pair<double, double>> out;
            for (const auto& a : f.domain().axes())
                out.emplace_back(a.lo(), a.hi());
            return out;
        })
        .def("__call__", [](const Ivf& f, double x) { return f(x); })
        .def("__call__", [](const Ivf& f, const RealVector& x) { return f.eval(x); })
        .def("__repr__", [](const Ivf& f) { return "Ivf(" + f.body().to_string() + " on " + format(f.domain()) + ")"; });

    m.def("gh_gradient", [](const Ivf& f, const RealVector& x) { return gh_gradient(f, x); });
    m.def("directional_gh_derivative",
          [](const Ivf& f, const RealVector& x, const RealVector& h) { return directional_gh_derivative(f, x, h); });
    m.def("is_convex_sampled", [](const Ivf& f, std::size_t points) { return is_convex_sampled(f, grid_for(f, points)).convex; },
          py::arg("f"), py::arg("points") = 41);
    m.def("lipschitz_estimate", [](const Ivf& f, std::size_t points) { return lipschitz_estimate(f, grid_for(f, points)); },
          py::arg("f"), py::arg("points") = 201);

    m.def(
        "is_subgradient",
        [](const Ivf& f, const IVector& g, const RealVector& x_bar, std::size_t points, bool strict) {
            const SubgradientCandidate c{g, x_bar};
            const SubgradientResult r = strict ? is_subgradient_strict_variant(f, c, grid_for(f, points))
                                               : is_subgradient(f, c, grid_for(f, points));
            return py::make_tuple(r.holds, witness_of(r));
        },
        py::arg("f"), py::arg("g"), py::arg("x_bar"), py::arg("points") = 201, py::arg("strict") = false,
        "Returns (holds, witness); witness is the grid point of largest violation, or None.");

    py::class_<SubdiffRegion>(m, "SubdiffRegion")
        .def_property_readonly("marked_count", &SubdiffRegion::marked_count)
        .def_property_readonly("cell_count", &SubdiffRegion::cell_count)
        .def("marked_candidates", &SubdiffRegion::marked_candidates)
        .def("to_csv", &SubdiffRegion::to_csv);
    m.def(
        "subdiff_scan_1d",
        [](const Ivf& f, double x_bar, std::tuple<double, double, std::size_t> g_lo,
           std::tuple<double, double, std::size_t> g_hi, std::size_t points) {
            const auto [a, b, n] = g_lo;
            const auto [c, d, k] = g_hi;
            return subdiff_scan_1d(f, x_bar, {a, b, n}, {c, d, k}, grid_for(f, points));
        },
        py::arg("f"), py::arg("x_bar"), py::arg("g_lo"), py::arg("g_hi"), py::arg("points") = 201);
    m.def(
        "directional_max",
        [](const Ivf& f, const RealVector& x_bar, const RealVector& h, const SubdiffRegion& r) {
            const DirectionalMax d = directional_max_check(f, x_bar, h, r);
            return py::make_tuple(d.maximum, d.directional, d.matches);
        },
        "Returns (maximum, directional derivative, matches).");
    m.def("operator_norm", [](const IVector& coeffs) { return operator_norm(LinearIvf{coeffs}); });
    m.def("chain_rule_transport", &chain_rule_transport);
    m.def("sum_rule", &sum_rule);

    m.def(
        "efficient_on_grid",
        [](const Ivf& f, std::size_t points) {
            const EfficiencyReport r = efficient_on_grid(Iop(f), grid_for(f, points));
            py::list out;
            for (std::size_t k = 0; k < r.points.size(); ++k)
                out.append(py::make_tuple(r.points[k], r.values[k], static_cast<bool>(r.efficient[k])));
            return out;
        },
        py::arg("f"), py::arg("points") = 201, "List of (x, F(x), efficient) over the grid.");
    m.def(
        "optimality_zero_condition",
        [](const Ivf& f, const RealVector& x_bar, std::size_t points) {
            return optimality_zero_condition(Iop(f), x_bar, grid_for(f, points));
        },
        py::arg("f"), py::arg("x_bar"), py::arg("points") = 201);
    m.def(
        "scalarized_descent",
        [](const Ivf& f, const RealVector& x0, double step, std::size_t iters, double w) {
            DescentConfig cfg;
            cfg.schedule.scale = step;
            cfg.max_iters = iters;
            cfg.weights = WMapConfig::from_w(w);
            const DescentResult r = scalarized_descent(Iop(f), x0, cfg);
            py::dict d;
            d["best_x"] = r.best_x;
            d["best_value"] = r.best_value;
            d["iterations"] = r.iterations;
            d["stopped_at_zero"] = r.stopped_at_zero;
            d["efficient"] = r.efficient_flag;
            std::vector<double> sv;
            for (const auto& row : r.trace)
                sv.push_back(row.scalarized);
            d["scalarized"] = sv;
            return d;
        },
        py::arg("f"), py::arg("x0"), py::arg("step") = 0.1, py::arg("iters") = 200, py::arg("w") = 0.5);
    m.def("smoothed_nonincreasing", &smoothed_nonincreasing, py::arg("values"), py::arg("window") = 10,
          py::arg("tol") = 1e-12);

    m.def("load_problem", [](const std::string& path) { return load_problem(path).objective(); });
    py::module_ cat = m.def_submodule("catalog", "Worked example objectives");
    cat.def("quartic", &catalog::quartic);
    cat.def("parabolas", &catalog::parabolas);
    cat.def("kink", &catalog::kink);
    cat.def("abs13", &catalog::abs13);
}
