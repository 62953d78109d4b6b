#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "hlya/certify.hpp"
#include "hlya/fixtures.hpp"

namespace py = pybind11;

namespace {

/* Every operation returns (exit_code, certificate_json) with the same
   semantics as the command-line tool; hard errors raise the exception types
   registered below. */
py::tuple wrap(const hlya::CommandResult& r) {
  return py::make_tuple(r.exit_code, r.certificate.dump(2));
}

hlya::FactorSetMode parse_mode(const std::string& mode) {
  if (mode == "extract") return hlya::FactorSetMode::Extract;
  if (mode == "extend") return hlya::FactorSetMode::Extend;
  if (mode == "roundtrip") return hlya::FactorSetMode::Roundtrip;
  throw hlya::ParseError("unknown factor-set mode: " + mode);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact arithmetic toolkit for algebras with a twisted binary and ternary "
      "bracket. Inputs are document paths or fixture:<name>; operations return "
      "(exit_code, certificate_json).";

  py::register_exception<hlya::Error>(m, "Error");
  py::register_exception<hlya::ParseError>(m, "ParseError");
  py::register_exception<hlya::MathError>(m, "MathError");
  py::register_exception<hlya::ConstructionError>(m, "ConstructionError");
  py::register_exception<hlya::InconclusiveError>(m, "InconclusiveError");

  m.def("version", [] { return std::string(hlya::tool_version); });
  m.def("fixture_names", &hlya::fixture_names,
        "Names usable as fixture:<name> input specs.");

  m.def(
      "check",
      [](const std::string& input, unsigned threads) {
        hlya::CheckCmd c;
        c.input = input;
        c.threads = threads;
        return wrap(hlya::cmd_check(c));
      },
      py::arg("input"), py::arg("threads") = 0,
      "Verify all defining identities and report center/derived structure.");

  m.def(
      "quotient",
      [](const std::string& input, const std::string& ideal, const std::string& output) {
        hlya::QuotientCmd c;
        c.input = input;
        c.ideal = ideal;
        c.output = output;
        return wrap(hlya::cmd_quotient(c));
      },
      py::arg("input"), py::arg("ideal") = "center", py::arg("output") = "",
      "Quotient by a hom-ideal (center, derived, a named or inline subspace).");

  m.def(
      "direct_sum",
      [](const std::string& left, const std::string& right, const std::string& output) {
        hlya::DirectSumCmd c;
        c.left = left;
        c.right = right;
        c.output = output;
        return wrap(hlya::cmd_direct_sum(c));
      },
      py::arg("left"), py::arg("right"), py::arg("output") = "");

  m.def(
      "factor_set",
      [](const std::string& input, const std::string& mode, const std::string& factor_set,
         const std::string& center_twist, const std::string& output, unsigned threads) {
        hlya::FactorSetCmd c;
        c.input = input;
        c.mode = parse_mode(mode);
        c.factor_set = factor_set;
        c.center_twist = center_twist;
        c.output = output;
        c.threads = threads;
        return wrap(hlya::cmd_factor_set(c));
      },
      py::arg("input"), py::arg("mode") = "roundtrip", py::arg("factor_set") = "",
      py::arg("center_twist") = "", py::arg("output") = "", py::arg("threads") = 0,
      "Extract a factor set, build a central extension, or run the roundtrip.");

  m.def(
      "isoclinic_verify",
      [](const std::string& left, const std::string& right, const std::string& witness,
         unsigned threads) {
        hlya::IsoclinicCmd c;
        c.left = left;
        c.right = right;
        c.witness = witness;
        c.threads = threads;
        return wrap(hlya::cmd_isoclinic(c));
      },
      py::arg("left"), py::arg("right"), py::arg("witness"), py::arg("threads") = 0);

  m.def(
      "isoclinic_search",
      [](const std::string& left, const std::string& right, std::size_t budget, long bound,
         unsigned threads, const std::string& output) {
        hlya::IsoclinicCmd c;
        c.left = left;
        c.right = right;
        c.search = true;
        c.budget = budget;
        c.bound = bound;
        c.threads = threads;
        c.output = output;
        return wrap(hlya::cmd_isoclinic(c));
      },
      py::arg("left"), py::arg("right"), py::arg("budget") = 2'000'000,
      py::arg("bound") = 2, py::arg("threads") = 0, py::arg("output") = "");

  m.def(
      "decompose",
      [](const std::string& input, const std::string& out_stem,
         const std::string& out_abelian, const std::string& out_witness, unsigned threads) {
        hlya::DecomposeCmd c;
        c.input = input;
        c.out_stem = out_stem;
        c.out_abelian = out_abelian;
        c.out_witness = out_witness;
        c.threads = threads;
        return wrap(hlya::cmd_decompose(c));
      },
      py::arg("input"), py::arg("out_stem") = "", py::arg("out_abelian") = "",
      py::arg("out_witness") = "", py::arg("threads") = 0,
      "Split into a stem part and an abelian direct summand.");

  m.def(
      "corpus",
      [](const std::string& out_dir, std::uint32_t p, std::size_t dim, std::size_t count,
         std::uint64_t seed, bool exhaustive) {
        hlya::CorpusCmd c;
        c.out_dir = out_dir;
        c.p = p;
        c.dim = dim;
        c.count = count;
        c.seed = seed;
        c.exhaustive = exhaustive;
        return wrap(hlya::cmd_corpus(c));
      },
      py::arg("out_dir"), py::arg("p") = 2, py::arg("dim") = 2, py::arg("count") = 10,
      py::arg("seed") = 0, py::arg("exhaustive") = false,
      "Generate a directory of verified sample algebras.");
}
