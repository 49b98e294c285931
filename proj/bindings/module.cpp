#include "itdual/catalog.hpp"
#include "itdual/distribution.hpp"
#include "itdual/expr.hpp"
#include "itdual/json_io.hpp"
#include "itdual/parse.hpp"
#include "itdual/shannon.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace itdual;

namespace {

GroundSet ground_from(const std::vector<std::string>& labels)
{
    return GroundSet(labels);
}

InfExpr parse_with_ground(const std::string& text,
                          const std::vector<std::string>& ground)
{
    if (ground.empty())
        return parse_expr(text);
    return parse_expr(text, GroundSet(ground));
}

std::map<std::string, std::string> coeff_map(const InfExpr& c)
{
    std::map<std::string, std::string> out;
    for (const auto& [mask, coef] : c.coeffs())
        out[c.ground().subset_name(mask)] = rat_to_string(coef);
    return out;
}

std::map<std::string, std::string> residual_map(const InfExpr& c)
{
    std::map<std::string, std::string> out;
    const auto r = residuals(c);
    for (int i = 0; i < c.ground().size(); ++i)
        out[c.ground().label(i)] = rat_to_string(r[i]);
    return out;
}

JointDistribution distribution_from(const std::vector<std::string>& labels,
                                    const std::vector<std::pair<std::vector<std::string>,
                                                                std::string>>& atoms)
{
    std::vector<Atom> out;
    out.reserve(atoms.size());
    for (const auto& [tuple, mass] : atoms)
        out.push_back(Atom{tuple, parse_rational(mass)});
    return JointDistribution(GroundSet(labels), std::move(out));
}

}

PYBIND11_MODULE(_itdual, m)
{
    m.doc() = "exact algebra for linear information inequalities: formal duals, "
              "balancing, Shannon-type certificates, entropies";

    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);

    py::class_<GroundSet>(m, "GroundSet")
        .def(py::init(&ground_from), py::arg("labels"))
        .def_property_readonly("labels", &GroundSet::labels)
        .def("__len__", &GroundSet::size)
        .def("__repr__", [](const GroundSet& g) {
            return "GroundSet(" + g.subset_name(g.full_mask()) + ")";
        });

    py::class_<InfExpr>(m, "InfExpr")
        .def_property_readonly("ground", &InfExpr::ground)
        .def_property_readonly("coefficients", &coeff_map,
                               "subset name -> rational string")
        .def("__str__",
             [](const InfExpr& c) { return print_expr(c, ExprStyle::IFormGreedy); })
        .def("__repr__",
             [](const InfExpr& c) {
                 return "InfExpr(" + print_expr(c, ExprStyle::HForm) + ")";
             })
        .def("__eq__", &expr_equal)
        .def("__add__", [](const InfExpr& a, const InfExpr& b) { return a + b; })
        .def("__sub__", [](const InfExpr& a, const InfExpr& b) { return a - b; });

    m.def("parse", &parse_with_ground, py::arg("text"),
          py::arg("ground") = std::vector<std::string>{},
          "parse an expression like 'I(A;B|C) + 2/3 H(A,B)'");
    m.def("h_form",
          [](const InfExpr& c) { return print_expr(c, ExprStyle::HForm); });
    m.def("i_form",
          [](const InfExpr& c) { return print_expr(c, ExprStyle::IFormGreedy); });

    m.def("dual", &dual_expr, py::arg("expr"),
          "formal dual; the result depends on the expression's ground set");
    m.def("balance", &balance, py::arg("expr"));
    m.def("is_balanced", &is_balanced, py::arg("expr"));
    m.def("residuals", &residual_map, py::arg("expr"),
          "per-variable coefficient sums as rational strings");
    m.def("conditional_version", &conditional_version, py::arg("expr"),
          py::arg("fresh"));

    py::class_<JointDistribution>(m, "JointDistribution")
        .def(py::init(&distribution_from), py::arg("labels"), py::arg("atoms"),
             "atoms: list of (tuple of symbols, mass as 'p/q')")
        .def_property_readonly("ground", &JointDistribution::ground)
        .def("__len__",
             [](const JointDistribution& d) { return d.atoms().size(); });

    m.def("entropy",
          [](const JointDistribution& d, const std::vector<std::string>& subset) {
              return entropy(d, d.ground().mask_of(subset));
          },
          py::arg("dist"), py::arg("subset"));
    m.def("entropic_vector",
          [](const JointDistribution& d) {
              std::map<std::string, double> out;
              const RealPoint h = entropic_vector(d);
              for (Mask mm = 1; mm <= h.ground.full_mask(); ++mm)
                  out[h.ground.subset_name(mm)] = h.value(mm);
              return out;
          },
          py::arg("dist"));
    m.def("evaluate",
          [](const InfExpr& c, const JointDistribution& d) {
              return evaluate(c, d).value;
          },
          py::arg("expr"), py::arg("dist"), "sum of c_J * H(X_J), in bits");
    m.def("mutual_information",
          [](const JointDistribution& d, const std::vector<std::string>& a,
             const std::vector<std::string>& b, const std::vector<std::string>& cond) {
              return cond_mutual_info(d, d.ground().mask_of(a), d.ground().mask_of(b),
                                      d.ground().mask_of(cond));
          },
          py::arg("dist"), py::arg("a"), py::arg("b"),
          py::arg("cond") = std::vector<std::string>{});

    m.def("is_shannon_type",
          [](const InfExpr& c) {
              const ShannonCertificate cert = is_shannon_type(c);
              return certificate_to_json(cert, c.ground()).dump();
          },
          py::arg("expr"), "certificate as a JSON string");
    m.def("is_self_dual",
          [](const InfExpr& c, int max_image) {
              SelfDualConfig config;
              config.max_image = max_image;
              return selfdual_to_json(is_self_dual(c, config)).dump();
          },
          py::arg("expr"), py::arg("max_image") = 1,
          "self-duality certificate as a JSON string");

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& entry : catalog())
            names.push_back(entry.name);
        return names;
    });
    m.def("catalog_entry",
          [](const std::string& name) { return catalog_entry(name).expr; },
          py::arg("name"));
    m.def("counterexample_distribution",
          [](const std::string& eps) {
              return counterexample_distribution(parse_rational(eps));
          },
          py::arg("eps") = "1/100");
    m.def("verify_main_theorem",
          [](const std::string& eps, bool high_precision) {
              const Rat e = parse_rational(eps);
              return theorem_report_to_json(
                         verify_main_theorem(e, e / 2, high_precision))
                  .dump();
          },
          py::arg("eps") = "1/100", py::arg("high_precision") = false,
          "full duality-failure report as a JSON string");
}
