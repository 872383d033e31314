#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kms/checks.hpp"
#include "kms/dl_algebra.hpp"
#include "kms/io.hpp"
#include "kms/version.hpp"

namespace py = pybind11;
using kms::io::Json;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

kms::BaseCoweight coweight(const std::vector<std::int64_t>& n) { return kms::BaseCoweight{n, ""}; }

std::optional<kms::Rational> q_arg(const std::optional<std::string>& q) {
  if (!q) return std::nullopt;
  return kms::io::parse_q(*q);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kac-Moody spherical functions, Demazure-Lusztig operators and an SL2 coset oracle";
  m.attr("__version__") = kms::kVersion;

  static py::exception<kms::Error> error(m, "KmsError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const kms::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("classify", [](const Rows& gcm) { return to_py(kms::io::to_json(kms::RootDatum::from_matrix(gcm).classification)); },
        py::arg("gcm"));

  m.def("positive_roots",
        [](const Rows& gcm, std::int64_t height) {
          return to_py(kms::io::to_json(kms::roots_up_to_height(kms::CartanMatrix::validate(gcm), height)));
        },
        py::arg("gcm"), py::arg("height"));

  m.def("weyl_ball",
        [](const Rows& gcm, std::size_t length) {
          const kms::WeylGroup w(kms::CartanMatrix::validate(gcm));
          Json rows = Json::array();
          for (const auto& e : w.ball(length)) rows.push_back(kms::io::to_json(e));
          return to_py(rows);
        },
        py::arg("gcm"), py::arg("length"));

  m.def("poincare",
        [](const Rows& gcm, const std::vector<std::int64_t>& lam) {
          return to_py(kms::io::to_json(kms::WeylGroup(kms::CartanMatrix::validate(gcm)).stabilizer_poincare(coweight(lam))));
        },
        py::arg("gcm"), py::arg("lam"));

  m.def("dl_apply",
        [](const Rows& gcm, const std::vector<std::size_t>& word, const std::vector<std::int64_t>& lam) {
          const kms::DemazureLusztig dl(kms::CartanMatrix::validate(gcm));
          const auto e = kms::AlgebraElement::monomial(coweight(lam), kms::CorootVector(lam.size()));
          return to_py(kms::io::to_json(dl.apply_T_w(word, e)));
        },
        py::arg("gcm"), py::arg("word"), py::arg("lam"));

  m.def("satake",
        [](const Rows& gcm, const std::vector<std::int64_t>& lam, std::optional<std::int64_t> depth,
           std::optional<std::string> q) {
          kms::SatakeOptions opts;
          opts.depth = depth;
          return to_py(kms::io::to_json(kms::satake_normalized(kms::RootDatum::from_matrix(gcm), coweight(lam), opts), q_arg(q)));
        },
        py::arg("gcm"), py::arg("lam"), py::arg("depth") = py::none(), py::arg("q") = py::none());

  m.def("upsilon",
        [](const Rows& gcm, std::int64_t depth, std::optional<std::string> q) {
          return to_py(kms::io::to_json(kms::upsilon(kms::RootDatum::from_matrix(gcm), depth), q_arg(q)));
        },
        py::arg("gcm"), py::arg("depth"), py::arg("q") = py::none());

  m.def("approximation_check",
        [](const Rows& gcm, const std::vector<std::vector<std::int64_t>>& chain, std::int64_t depth) {
          std::vector<kms::BaseCoweight> c;
          for (const auto& n : chain) c.push_back(coweight(n));
          return to_py(kms::io::to_json(kms::approximation_check(kms::RootDatum::from_matrix(gcm), c, depth)));
        },
        py::arg("gcm"), py::arg("chain"), py::arg("depth"));

  m.def("cfunction",
        [](const Rows& gcm, const std::string& q, std::int64_t v) {
          const auto value = kms::finite_cfunction(
              kms::RootDatum::from_matrix(gcm), [v](const kms::CorootVector&) { return kms::Rational(v); }, kms::parse_rational(q));
          return kms::to_string(value);
        },
        py::arg("gcm"), py::arg("q"), py::arg("v") = 1);

  m.def("spherical_census",
        [](int lam, int precision, int q) { return to_py(kms::io::to_json(kms::padic::spherical_census(lam, precision, q))); },
        py::arg("lam"), py::arg("precision"), py::arg("q"));
  m.def("gk_census",
        [](int k_max, int precision, int q) { return to_py(kms::io::to_json(kms::padic::gk_census(k_max, precision, q))); },
        py::arg("k_max"), py::arg("precision"), py::arg("q"));
  m.def("iwahori_census",
        [](int lam, int precision, int q) { return to_py(kms::io::to_json(kms::padic::iwahori_census(lam, precision, q))); },
        py::arg("lam"), py::arg("precision"), py::arg("q"));

  m.def("verify_all", [] {
    py::list out;
    for (const auto& r : kms::checks::run_suite()) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["passed"] = r.passed;
      out.append(d);
    }
    return out;
  });
}
