#include "blockdim/blockcalc.hpp"
#include "blockdim/errors.hpp"
#include "blockdim/report_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace blockdim;

namespace {

OrderVariant order_variant(const std::string& name) {
  if (name == "root") return OrderVariant::RootLattice;
  if (name == "pplus") return OrderVariant::DominantWeights;
  throw InputError("order must be 'root' or 'pplus', got '" + name + "'");
}

Weight weight_of(const RootSystem& rs, const std::string& text) {
  Weight w = Weight::parse(text);
  if (w.rank() != static_cast<std::size_t>(rs.rank()))
    throw InputError("weight " + text + " has " + std::to_string(w.rank()) + " coordinates, expected " +
                     std::to_string(rs.rank()));
  return w;
}

std::vector<std::string> strings(const Weight& w) { return w.to_strings(); }

py::dict integral_summary(const std::string& type, int rank, const std::string& lambda) {
  const RootSystem rs(type.at(0), rank);
  const auto d = integral_data(rs, weight_of(rs, lambda));
  auto simple = [&](std::size_t i) { return rs.positive_roots()[i].simple; };
  std::vector<IntVec> roots, simples;
  for (auto i : d.integral_roots) roots.push_back(simple(i));
  for (auto i : d.integral_simples) simples.push_back(simple(i));
  py::dict out;
  out["integral_roots"] = roots;
  out["integral_simples"] = simples;
  out["w_lambda_order"] = d.w_lambda->size();
  out["stabilizer_order"] = d.stabilizer.size();
  out["regular"] = is_regular(d);
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact block combinatorics of category O for simple Lie algebras";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<InconsistencyError> inconsistency_error(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const InconsistencyError& e) {
      py::set_error(inconsistency_error, e.what());
    }
  });

  m.def("cartan_matrix", [](const std::string& type, int rank) { return RootSystem(type.at(0), rank).cartan(); },
        py::arg("type"), py::arg("rank"));
  m.def(
      "positive_roots",
      [](const std::string& type, int rank) {
        const RootSystem rs(type.at(0), rank);
        std::vector<IntVec> out;
        for (const auto& r : rs.positive_roots()) out.push_back(r.simple);
        return out;
      },
      py::arg("type"), py::arg("rank"), "Positive roots in simple-root coordinates, simple roots first.");
  m.def(
      "weyl_group_order", [](const std::string& type, int rank) { return enumerate_weyl_group(RootSystem(type.at(0), rank)).size(); },
      py::arg("type"), py::arg("rank"));
  m.def(
      "weyl_dim",
      [](const std::string& type, int rank, const IntVec& nu) {
        return weyl_dim(RootSystem(type.at(0), rank), nu).get_str();
      },
      py::arg("type"), py::arg("rank"), py::arg("nu"), "Dimension of V(nu) as a decimal string.");
  m.def(
      "character",
      [](const std::string& type, int rank, const IntVec& nu) {
        const Character ch = character(RootSystem(type.at(0), rank), nu);
        py::dict out;
        for (const auto& [mu, mult] : ch.mults())
          out[py::tuple(py::cast(mu))] = mult;
        return out;
      },
      py::arg("type"), py::arg("rank"), py::arg("nu"));
  m.def("integral_data", &integral_summary, py::arg("type"), py::arg("rank"), py::arg("lambda_"));
  m.def(
      "is_dominant",
      [](const std::string& type, int rank, const std::string& lambda) {
        const RootSystem rs(type.at(0), rank);
        return is_dominant(rs, weight_of(rs, lambda));
      },
      py::arg("type"), py::arg("rank"), py::arg("lambda_"));
  m.def(
      "is_general_position",
      [](const std::string& type, int rank, const std::string& lambda) {
        const RootSystem rs(type.at(0), rank);
        return is_general_position(rs, weight_of(rs, lambda));
      },
      py::arg("type"), py::arg("rank"), py::arg("lambda_"));
  m.def(
      "is_minimal",
      [](const std::string& type, int rank, const std::string& lambda, const std::string& mu,
         const std::string& order) {
        const RootSystem rs(type.at(0), rank);
        return is_minimal(rs, weight_of(rs, lambda), weight_of(rs, mu), order_variant(order));
      },
      py::arg("type"), py::arg("rank"), py::arg("lambda_"), py::arg("mu"), py::arg("order") = "root");
  m.def(
      "kl_polynomial",
      [](const std::string& type, int rank, const std::string& x, const std::string& y) {
        const RootSystem rs(type.at(0), rank);
        const auto g = std::make_shared<const CoxeterGroup>(enumerate_weyl_group(rs));
        const KLTable kl(g);
        return kl.polynomial(g->parse_word(x), g->parse_word(y)).coeffs;
      },
      py::arg("type"), py::arg("rank"), py::arg("x"), py::arg("y"),
      "Coefficients of P_{x,y} for the Weyl group; words are 1-based digit strings, 'e' for the identity.");
  m.def(
      "ext_dimensions",
      [](const std::string& type, int rank, const std::string& lambda, const std::string& x, const std::string& y) {
        const RootSystem rs(type.at(0), rank);
        const BlockContext ctx(rs, weight_of(rs, lambda));
        const auto& g = ctx.kl().group();
        return ext_dimensions(rs, ctx.data(), ctx.kl(), g.parse_word(x), g.parse_word(y));
      },
      py::arg("type"), py::arg("rank"), py::arg("lambda_"), py::arg("x"), py::arg("y"));
  m.def(
      "block_report_json",
      [](const std::string& type, int rank, const std::string& lambda, const IntVec& v, const std::string& order,
         bool fast_path) {
        const RootSystem rs(type.at(0), rank);
        const Weight l = weight_of(rs, lambda);
        const BlockReport r =
            fast_path && is_general_position(rs, l) ? generic_fast_path(rs, l, v) : block_report(rs, l, v);
        return report_to_json(rs, r, order_variant(order)).dump();
      },
      py::arg("type"), py::arg("rank"), py::arg("lambda_"), py::arg("v"), py::arg("order") = "root",
      py::arg("fast_path") = false);
  m.def(
      "dot_orbit",
      [](const std::string& type, int rank, const std::string& lambda) {
        const RootSystem rs(type.at(0), rank);
        const Weight l = weight_of(rs, lambda);
        std::vector<std::vector<std::string>> out;
        for (const auto& w : dot_orbit(rs, integral_data(rs, l), l)) out.push_back(strings(w));
        return out;
      },
      py::arg("type"), py::arg("rank"), py::arg("lambda_"));
}
