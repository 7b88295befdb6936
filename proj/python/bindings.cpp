#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curlie/catalog.hpp"
#include "curlie/cli.hpp"
#include "curlie/current.hpp"
#include "curlie/errors.hpp"
#include "curlie/io.hpp"
#include "curlie/subspace.hpp"
#include "curlie/suites.hpp"

namespace py = pybind11;
using namespace curlie;

namespace {

using Grid = std::vector<std::vector<std::string>>;

Matrix matrix_from_grid(const Grid& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LengthMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, parse_rational(rows[r][c]));
  }
  return m;
}

std::size_t column_count(const Grid& rows, std::optional<std::size_t> cols) {
  if (cols) return *cols;
  if (rows.empty()) throw LengthMismatch("empty matrix needs an explicit column count");
  return rows.front().size();
}

Grid subspace_basis(const Subspace& s) {
  Grid out;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    std::vector<std::string> v;
    for (const auto& q : s.basis_vector(k)) v.push_back(to_string(q));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_curlie, m) {
  m.doc() = "Exact cohomology of current Lie algebras";

  // later registrations are tried first, so subclasses come after Error
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<HypothesisFailed>(m, "HypothesisFailed", base.ptr());

  m.def(
      "rank",
      [](const Grid& rows, std::optional<std::size_t> cols) { return rank(matrix_from_grid(rows, column_count(rows, cols))); },
      py::arg("rows"), py::arg("cols") = py::none(), "Exact rank of a matrix given as rational strings.");
  m.def(
      "kernel",
      [](const Grid& rows, std::optional<std::size_t> cols) {
        return subspace_basis(kernel_basis(matrix_from_grid(rows, column_count(rows, cols))));
      },
      py::arg("rows"), py::arg("cols") = py::none(), "Canonical basis of the null space.");
  m.def(
      "image",
      [](const Grid& rows, std::optional<std::size_t> cols) {
        return subspace_basis(image_basis(matrix_from_grid(rows, column_count(rows, cols))));
      },
      py::arg("rows"), py::arg("cols") = py::none(), "Canonical basis of the column space.");

  m.def(
      "export_lie", [](const std::string& spec) { return to_json(load_lie(spec)).dump(); }, py::arg("g"));
  m.def(
      "export_assoc", [](const std::string& spec) { return to_json(load_assoc(spec)).dump(); }, py::arg("s"));
  m.def(
      "export_representation",
      [](const std::string& g, const std::string& rep) { return to_json(load_representation(rep, load_lie(g))).dump(); },
      py::arg("g"), py::arg("rep"));
  m.def(
      "current_algebra",
      [](const std::string& g, const std::string& s) { return to_json(current_algebra(load_lie(g), load_assoc(s))).dump(); },
      py::arg("g"), py::arg("s"));
  m.def(
      "validate_lie_json",
      [](const std::string& text) {
        auto raw = parse_algebra(Json::parse(text));
        std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
        for (const auto& v : validate_lie(raw.table).violations) out.emplace_back(v.kind, v.indices);
        return out;
      },
      py::arg("text"), "Violations (kind, indices) of a Lie algebra file; empty when valid.");

  m.def(
      "cohomology_table",
      [](const std::string& g, const std::string& rep, std::optional<std::string> s, std::optional<std::size_t> max_degree) {
        LieAlgebra lie = load_lie(g);
        Representation r = load_representation(rep, lie);
        if (!s) return cohomology_table(r, nullptr, max_degree).dump();
        CommAssocAlgebra assoc = load_assoc(*s);
        return cohomology_table(r, &assoc, max_degree).dump();
      },
      py::arg("g"), py::arg("rep"), py::arg("s") = py::none(), py::arg("max_degree") = py::none());

  m.def(
      "verify",
      [](const std::string& g, const std::string& s, const std::string& rep, const std::string& suite,
         std::uint64_t seed, std::optional<std::size_t> trials) {
        LieAlgebra lie = load_lie(g);
        CommAssocAlgebra assoc = load_assoc(s);
        Representation r = load_representation(rep, lie);
        VerifyOutcome outcome;
        {
          py::gil_scoped_release release;
          outcome = run_verify(lie, assoc, r, {suite, seed, trials});
        }
        return std::make_pair(outcome.status, outcome.report.dump());
      },
      py::arg("g"), py::arg("s"), py::arg("rep"), py::arg("suite") = "all", py::arg("seed") = 42,
      py::arg("trials") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
