// Python bindings: command execution and a few algebra/module primitives,
// all exchanging text forms and JSON strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramond/report.hpp"
#include "ramond/run.hpp"

namespace py = pybind11;

namespace {

ramond::RunConfig config_from(const std::string& command, const std::string& config_json)
{
    ramond::RunConfig cfg;
    cfg.command = command;
    ramond::apply_config_json(cfg, nlohmann::json::parse(config_json.empty() ? "{}" : config_json));
    return cfg;
}

} // namespace

PYBIND11_MODULE(pyramond, m)
{
    m.doc() = "Exact verification engine for the N=1 and N=2 Ramond algebras";
    m.attr("schema_version") = ramond::kReportSchemaVersion;

    py::register_exception<ramond::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ramond::DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<ramond::InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("commands", &ramond::command_names);
    m.def(
        "run",
        [](const std::string& command, const std::string& config_json) {
            auto out = ramond::run(config_from(command, config_json));
            return py::make_tuple(out.exit_code, out.report.dump());
        },
        py::arg("command"), py::arg("config_json") = "{}",
        "Runs a CLI command with config-file keys; returns (exit_code, report_json).");
    m.def(
        "bracket",
        [](const std::string& algebra, const std::string& x, const std::string& y) {
            auto a = ramond::parse_algebra(algebra);
            return ramond::to_string(ramond::bracket(ramond::parse_generator(x, a), ramond::parse_generator(y, a)));
        },
        py::arg("algebra"), py::arg("x"), py::arg("y"));
    m.def(
        "act",
        [](const std::string& generator, const std::string& vector, const std::string& config_json) {
            auto ac = ramond::action_config(config_from("act", config_json));
            auto v = ramond::parse_vector(vector, ac.family);
            return ramond::to_string(ramond::act(ramond::parse_generator(generator, ac.algebra), v, ac), *ac.family);
        },
        py::arg("generator"), py::arg("vector"), py::arg("config_json") = "{}",
        "Generic-route action on a vector in the carrier text grammar.");
}
