#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/json_io.hpp"

namespace py = pybind11;
using namespace pfaffcubic;

namespace {

std::string classify_json(const std::string& text, const std::string& field, std::uint64_t seed, int d_max) {
  const auto x = CubicThreefold::parse(text, FieldSpec::parse(field));
  py::gil_scoped_release release;
  return dump(to_json(classify(x, seed, d_max)));
}

std::string pfaffianize_json(const std::string& text, const std::string& field, std::uint64_t seed, int retries,
                             int d_max, int jobs) {
  const FieldSpec f = FieldSpec::parse(field);
  py::gil_scoped_release release;
  return dump(to_json(pfaffianize_text(text, f, {seed, retries, d_max, jobs})));
}

std::string curve_json(const std::string& text, const std::string& field, std::uint64_t seed, int retries) {
  const auto x = CubicThreefold::parse(text, FieldSpec::parse(field));
  py::gil_scoped_release release;
  return dump(to_json(forge_quintic(x, seed, retries), seed));
}

std::string verdict(const FieldSpec& f, const SkewLinearMatrix& m, const MultiPoly& cubic) {
  if (m.size() % 2) throw DomainError("a Pfaffian needs an even-sized matrix, got " + std::to_string(m.size()));
  const VerifyResult v = verify(m, cubic);
  Json j;
  j["field"] = f.name();
  j["ok"] = v.ok;
  if (v.ok) j["lambda"] = v.lambda.to_string();
  j["pfaffian"] = v.pfaffian.to_string();
  return dump(j);
}

std::string verify_json(const std::string& matrix, const std::string& cubic, const std::string& field) {
  const FieldSpec f = FieldSpec::parse(field);
  return verdict(f, SkewLinearMatrix(parse_matrix(matrix, 5, f)), parse_polynomial(cubic, 5, f));
}

std::string verify_certificate_json(const std::string& certificate) {
  const CertificateCore core = certificate_from_json(Json::parse(certificate));
  return verdict(core.field, core.matrix, core.cubic);
}

std::vector<std::array<int, 7>> tuples(const std::vector<LatticeClass>& cs) {
  std::vector<std::array<int, 7>> out;
  for (const auto& c : cs) out.push_back(c.c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Segre classification and Pfaffian representations of cubic threefolds";

  // Plain pointers: the module keeps the types alive, and static py::objects
  // would be released after the interpreter is gone.
  static PyObject* base = py::exception<Error>(m, "PfaffcubicError", PyExc_ValueError).ptr();
  static PyObject* parse = py::exception<ParseError>(m, "ParseError", base).ptr();
  static PyObject* domain = py::exception<DomainError>(m, "DomainError", base).ptr();
  static PyObject* exhausted = py::exception<SearchExhausted>(m, "SearchExhausted", base).ptr();
  static PyObject* field = py::exception<FieldLimitation>(m, "FieldLimitation", base).ptr();
  static PyObject* undetermined = py::exception<Undetermined>(m, "Undetermined", base).ptr();
  static PyObject* verification = py::exception<VerificationFailure>(m, "VerificationFailure", base).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(domain, e.what());
    } catch (const SearchExhausted& e) {
      PyErr_SetString(exhausted, e.what());
    } catch (const FieldLimitation& e) {
      PyErr_SetString(field, e.what());
    } catch (const Undetermined& e) {
      PyErr_SetString(undetermined, e.what());
    } catch (const VerificationFailure& e) {
      PyErr_SetString(verification, e.what());
    } catch (const Error& e) {
      PyErr_SetString(base, e.what());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(parse, e.what());
    }
  });

  m.def("classify", &classify_json, py::arg("text"), py::arg("field") = "p:13", py::arg("seed") = 0,
        py::arg("d_max") = kDefaultHilbertDegree, "SegreReport as JSON text");
  m.def("pfaffianize", &pfaffianize_json, py::arg("text"), py::arg("field") = "p:13", py::arg("seed") = 0,
        py::arg("retries") = 8, py::arg("d_max") = kDefaultHilbertDegree, py::arg("jobs") = 1,
        "verified PfaffianCertificate as JSON text");
  m.def("curve", &curve_json, py::arg("text"), py::arg("field") = "p:13", py::arg("seed") = 0, py::arg("retries") = 8,
        "residual elliptic quintic witnesses as JSON text");
  m.def("verify", &verify_json, py::arg("matrix"), py::arg("cubic"), py::arg("field") = "p:13");
  m.def("verify_certificate", &verify_certificate_json, py::arg("certificate"));
  m.def("pfaffian", [](const std::string& matrix, const std::string& field) {
    return pfaffian(parse_matrix(matrix, 5, FieldSpec::parse(field))).to_string();
  }, py::arg("matrix"), py::arg("field") = "p:13");
  m.def("minus_one_classes", [] { return tuples(minus_one_classes()); });
  m.def("roots", [] { return tuples(roots()); });
}
