#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>
#include <sstream>

#include "inca/attribution/attribution.h"
#include "inca/errors.h"
#include "inca/io/assemble.h"
#include "inca/io/cli.h"
#include "inca/io/json_output.h"
#include "inca/io/parser.h"

namespace py = pybind11;
using namespace inca;
using nlohmann::json;

namespace {

bridge::FrameworkOptions frameworkOptions(const std::string& poss, std::size_t max_atoms) {
  bridge::FrameworkOptions options;
  options.entailment.max_atoms = max_atoms;
  if (poss == "derivable") {
    options.poss = bridge::PossSemantics::kDerivable;
  } else if (poss == "complement") {
    options.poss = bridge::PossSemantics::kComplement;
  } else {
    throw std::invalid_argument("poss must be 'derivable' or 'complement', got '" + poss + "'");
  }
  return options;
}

World worldOf(const std::vector<std::string>& atoms) {
  std::string spec;
  for (std::size_t i = 0; i < atoms.size(); ++i) spec += (i ? "," : "") + atoms[i];
  return io::parseWorldSpec(spec);
}

json worldsJson(const std::vector<World>& worlds) {
  json out = json::array();
  for (const auto& w : worlds) out.push_back(io::worldJson(w));
  return out;
}

// Results cross the boundary as JSON text; the Python package decodes them
// and turns rational strings into Fractions.
class PyFramework {
 public:
  explicit PyFramework(bridge::InCAFramework fw) : fw_(std::move(fw)) {}

  static PyFramework fromText(const std::string& text, const std::string& poss,
                              std::size_t max_atoms) {
    return PyFramework(io::assemble(io::parseKB(text), frameworkOptions(poss, max_atoms)));
  }
  static PyFramework load(const std::string& path, const std::string& poss,
                          std::size_t max_atoms) {
    return PyFramework(io::assemble(io::loadKB(path), frameworkOptions(poss, max_atoms)));
  }

  bool consistent() const { return fw_.engine().isConsistent(); }

  std::string worlds() const { return worldsJson(fw_.worlds().worlds()).dump(); }

  std::string entail(const std::string& formula) const {
    return io::intervalJson(fw_.engine().bounds(io::parseFormula(formula))).dump();
  }

  std::string bounds(const std::string& literal) const {
    return io::intervalJson(bridge::probBounds(io::parseLiteral(literal), fw_)).dump();
  }

  std::string nec(const std::string& literal) const {
    return worldsJson(bridge::necSet(fw_, io::parseLiteral(literal))).dump();
  }

  std::string poss(const std::string& literal) const {
    return worldsJson(bridge::possSet(fw_, io::parseLiteral(literal))).dump();
  }

  std::string warrant(const std::string& literal) const {
    return am::warrantStatusName(am::warrantStatus(fw_.reasoner(), io::parseLiteral(literal)));
  }

  bool warrantsIn(const std::string& literal, const std::vector<std::string>& world) const {
    return fw_.warrantsIn(worldOf(world), io::parseLiteral(literal));
  }

  std::string arguments(const std::optional<std::string>& literal) const {
    const auto& r = fw_.reasoner();
    json out = json::array();
    if (literal) {
      for (auto a : r.argumentsFor(io::parseLiteral(*literal))) out.push_back(io::argumentJson(r, a));
    } else {
      for (am::ArgumentId a = 0; a < r.arguments().size(); ++a) out.push_back(io::argumentJson(r, a));
    }
    return out.dump();
  }

  std::string explain(const std::string& literal, const std::vector<std::string>& world) const {
    auto forest = fw_.forestIn(io::parseLiteral(literal), worldOf(world));
    return io::forestJson(fw_.reasoner(), *forest).dump();
  }

  std::string attribute(const std::string& operation, const std::vector<std::string>& suspects,
                        const std::vector<std::string>& evidence, const std::string& order) const {
    attribution::AttributionQuery q;
    q.operation = operation;
    q.suspects = suspects;
    std::string text;
    for (const auto& e : evidence) text += e + "\n";
    q.evidence = io::parseEvidence(text);
    if (order == "midpoint") {
      q.order = attribution::IntervalOrder::kMidpoint;
    } else if (order == "dominance") {
      q.order = attribution::IntervalOrder::kLowerBoundDominance;
    } else {
      throw std::invalid_argument("order must be 'midpoint' or 'dominance', got '" + order + "'");
    }
    auto answer = attribution::mostProbableSuspects(fw_, q);
    return io::attributionJson(fw_.reasoner(), answer).dump();
  }

 private:
  bridge::InCAFramework fw_;
};

}  // namespace

PYBIND11_MODULE(_inca, m) {
  m.doc() = "Native core of the inca package";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<GroundednessError> groundedness(m, "GroundednessError", error.ptr());
  static py::exception<CapacityError> capacity(m, "CapacityError", error.ptr());
  static py::exception<InconsistentKBError> inconsistent(m, "InconsistentKBError", error.ptr());
  static py::exception<InconsistentEvidenceError> evidence(m, "InconsistentEvidenceError",
                                                           error.ptr());
  static py::exception<DistributionError> distribution(m, "DistributionError", error.ptr());
  static py::exception<SortError> sort(m, "SortError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](py::handle type, const std::exception& e, const py::dict& attrs) {
      py::object instance = type(e.what());
      for (auto item : attrs) instance.attr(item.first) = item.second;
      PyErr_SetObject(type.ptr(), instance.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::dict attrs;
      attrs["line"] = e.line();
      attrs["column"] = e.column();
      attrs["message"] = e.message();
      attrs["snippet"] = e.snippet();
      raise(parse_error, e, attrs);
    } catch (const InconsistentEvidenceError& e) {
      py::dict attrs;
      attrs["conflict"] = e.conflict();
      raise(evidence, e, attrs);
    } catch (const GroundednessError& e) {
      py::set_error(groundedness, e.what());
    } catch (const CapacityError& e) {
      py::set_error(capacity, e.what());
    } catch (const InconsistentKBError& e) {
      py::set_error(inconsistent, e.what());
    } catch (const DistributionError& e) {
      py::set_error(distribution, e.what());
    } catch (const SortError& e) {
      py::set_error(sort, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<PyFramework>(m, "Framework")
      .def_static("from_text", &PyFramework::fromText, py::arg("text"),
                  py::arg("poss") = "derivable", py::arg("max_atoms") = 20)
      .def_static("load", &PyFramework::load, py::arg("path"), py::arg("poss") = "derivable",
                  py::arg("max_atoms") = 20)
      .def("consistent", &PyFramework::consistent)
      .def("worlds", &PyFramework::worlds)
      .def("entail", &PyFramework::entail, py::arg("formula"))
      .def("bounds", &PyFramework::bounds, py::arg("literal"))
      .def("nec", &PyFramework::nec, py::arg("literal"))
      .def("poss", &PyFramework::poss, py::arg("literal"))
      .def("warrant", &PyFramework::warrant, py::arg("literal"))
      .def("warrants_in", &PyFramework::warrantsIn, py::arg("literal"), py::arg("world"))
      .def("arguments", &PyFramework::arguments, py::arg("literal") = py::none())
      .def("explain", &PyFramework::explain, py::arg("literal"), py::arg("world"))
      .def("attribute", &PyFramework::attribute, py::arg("operation"), py::arg("suspects"),
           py::arg("evidence") = std::vector<std::string>{}, py::arg("order") = "midpoint",
           py::call_guard<py::gil_scoped_release>());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = io::runCli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
