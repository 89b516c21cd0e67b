#include "camina/error.hpp"
#include "camina/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace camina;

namespace {

ClosureMode parse_closure(const std::string& s)
{
    if (s == "auto")
        return ClosureMode::Auto;
    if (s == "always")
        return ClosureMode::Always;
    if (s == "never")
        return ClosureMode::Never;
    throw py::value_error("closure must be auto, always or never");
}

py::tuple run_command(const std::string& command, const std::string& input, bool include_matrices,
                      std::uint64_t seed, const std::string& closure, unsigned p, unsigned n, unsigned k,
                      bool twisted)
{
    RunConfig c;
    c.command = command;
    c.input = input;
    c.include_matrices = include_matrices;
    c.seed = seed;
    c.closure = parse_closure(closure);
    c.synth_p = p;
    c.synth_n = n;
    c.synth_k = k;
    c.synth_twisted = twisted;
    RunResult r;
    {
        py::gil_scoped_release release;
        r = run(c);
    }
    return py::make_tuple(r.exit_code, r.report.dump(), r.summary);
}

template <class F>
auto with_group(const std::string& input, F f)
{
    FiniteGroup g = load_input(input);
    return f(g);
}

} // namespace

PYBIND11_MODULE(_camina, m)
{
    m.doc() = "Camina groups, group association schemes and Terwilliger algebras";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ScopeError>(m, "ScopeError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.attr("SCHEMA") = kSchemaVersion;
    m.def("command_names", &command_names);
    m.def("run", &run_command, py::arg("command"), py::arg("input") = "", py::arg("include_matrices") = false,
          py::arg("seed") = kDefaultSeed, py::arg("closure") = "auto", py::arg("p") = 2, py::arg("n") = 2,
          py::arg("k") = 1, py::arg("twisted") = false,
          "Run a pipeline command; returns (exit_code, report_json, summary).");

    m.def("order", [](const std::string& input) { return with_group(input, [](auto& g) { return g.order(); }); });
    m.def("class_sizes", [](const std::string& input) {
        return with_group(input, [](auto& g) {
            std::vector<std::size_t> out;
            for (const auto& c : conjugacy_classes(g).classes)
                out.push_back(c.size());
            return out;
        });
    });
    m.def("is_camina", [](const std::string& input) { return with_group(input, [](auto& g) { return is_camina(g); }); });
    m.def("camina_profile",
          [](const std::string& input) { return with_group(input, [](auto& g) { return to_json(camina_profile(g)).dump(); }); });
    m.def("classification_family", [](const std::string& input) {
        return with_group(input, [](auto& g) { return to_string(classification_family(g)); });
    });
    m.def("almost_commutative", [](const std::string& input) {
        return with_group(input, [](auto& g) {
            return is_almost_commutative(intersection_numbers(build_scheme(g))).almost_commutative;
        });
    });
    m.def("intersection_numbers", [](const std::string& input) {
        return with_group(input, [](auto& g) {
            auto t = intersection_numbers(build_scheme(g));
            const std::size_t m = t.classes();
            std::vector<std::vector<std::vector<std::uint64_t>>> out(
                m, std::vector<std::vector<std::uint64_t>>(m, std::vector<std::uint64_t>(m)));
            for (std::size_t h = 0; h < m; ++h)
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j)
                        out[h][i][j] = t.at(i, j, h);
            return out;
        });
    }, "p[h][i][j] = p_{ij}^h");
    m.def("terwilliger_dimension", [](const std::string& input, bool closure) {
        return with_group(input, [&](auto& g) {
            auto ctx = TerwilligerContext::build(build_scheme(g));
            return closure ? dim_by_closure(ctx) : dim_by_triples(ctx);
        });
    }, py::arg("input"), py::arg("closure") = false);
    m.def("dimension_formula", [](unsigned p, unsigned n, unsigned k, unsigned nil_class) {
        if (nil_class == 2)
            return class2_dimension_formula(p, n, k);
        if (nil_class == 3)
            return class3_dimension_formula(p, n, k);
        throw py::value_error("nilpotency class must be 2 or 3");
    }, py::arg("p"), py::arg("n"), py::arg("k"), py::arg("nil_class") = 2);
}
