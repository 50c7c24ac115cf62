#include "subsums/cli.hpp"
#include "subsums/claims.hpp"
#include "subsums/search.hpp"
#include "subsums/structure.hpp"
#include "subsums/sumset.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace subsums;

namespace {

std::string element_literal(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::tuple>(h) || py::isinstance<py::list>(h)) {
        std::string s = "(";
        bool first = true;
        for (auto c : h) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(c.cast<std::int64_t>());
        }
        return s + ")";
    }
    return std::to_string(h.cast<std::int64_t>());
}

/// A literal string, or an iterable of ints (negatives allowed), strings or coordinate tuples.
GroupSubset to_set(const GroupSpec& g, const py::object& items) {
    if (py::isinstance<py::str>(items)) return parse_subset(g, items.cast<std::string>());
    GroupSubset s(g);
    for (auto h : items) s.insert(parse_element(g, element_literal(h)));
    return s;
}

py::object optional_rational(const std::optional<Rational>& r) {
    return r ? py::object(py::str(format_rational(*r))) : py::object(py::none());
}

py::dict report_dict(const ClaimReport& r) {
    py::dict d;
    d["claim"] = std::string(to_string(r.claim));
    d["group"] = r.set.group().to_string();
    d["set"] = r.set.elements();
    d["hypotheses_met"] = r.hypotheses_met;
    d["holds"] = r.holds;
    d["lhs"] = r.lhs;
    d["rhs"] = optional_rational(r.rhs);
    d["slack"] = optional_rational(r.slack);
    d["branch"] = r.branch;
    d["witness"] = r.witness ? py::object(py::cast(r.witness->elements())) : py::object(py::none());
    d["witness_element"] = r.witness_element ? py::object(py::int_(*r.witness_element)) : py::object(py::none());
    d["note"] = r.note;
    return d;
}

SubsetConstraints constraints(bool zero_free, bool asymmetric, bool symmetric, bool generating,
                              bool sigma_aperiodic, std::uint32_t size_min, std::uint32_t size_max) {
    SubsetConstraints c{zero_free, asymmetric, symmetric, generating, sigma_aperiodic, size_min, size_max};
    c.validate();
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Subset sums in finite abelian groups";
    m.attr("__version__") = kToolVersion;

    py::class_<GroupSpec>(m, "Group")
        .def(py::init([](const std::string& text) { return parse_group(text); }), py::arg("spec"))
        .def_property_readonly("order", &GroupSpec::order)
        .def_property_readonly("factors",
                               [](const GroupSpec& g) {
                                   return std::vector<std::uint32_t>(g.factors().begin(), g.factors().end());
                               })
        .def_property_readonly("canonical_form", &GroupSpec::canonical_form)
        .def("coordinates", &GroupSpec::coordinates, py::arg("element"))
        .def("neg", &GroupSpec::neg, py::arg("element"))
        .def("add", &GroupSpec::add, py::arg("a"), py::arg("b"))
        .def("__eq__", [](const GroupSpec& a, const GroupSpec& b) { return a == b; })
        .def("__str__", &GroupSpec::to_string)
        .def("__repr__", [](const GroupSpec& g) { return "Group('" + g.to_string() + "')"; });
    py::implicitly_convertible<std::string, GroupSpec>();

    m.def("abelian_groups", [](std::uint32_t n) {
        std::vector<GroupSpec> out;
        for (const auto& f : abelian_groups_of_order(n)) out.push_back(make_group(f));
        return out;
    }, py::arg("order"));

    m.def("subset", [](const GroupSpec& g, const py::object& s) { return to_set(g, s).elements(); },
          py::arg("group"), py::arg("set"));
    m.def("sigma", [](const GroupSpec& g, const py::object& s) { return sigma(to_set(g, s)).elements(); },
          py::arg("group"), py::arg("set"));
    m.def("sigma_star", [](const GroupSpec& g, const py::object& s) { return sigma_star(to_set(g, s)).elements(); },
          py::arg("group"), py::arg("set"));
    m.def("sumset", [](const GroupSpec& g, const py::object& x, const py::object& y) {
        return sumset(to_set(g, x), to_set(g, y)).elements();
    }, py::arg("group"), py::arg("x"), py::arg("y"));
    m.def("k_wedge", [](const GroupSpec& g, std::uint32_t k, const py::object& a) {
        return k_wedge(k, to_set(g, a)).elements();
    }, py::arg("group"), py::arg("k"), py::arg("set"));
    m.def("period", [](const GroupSpec& g, const py::object& x) {
        return period(to_set(g, x)).carrier().elements();
    }, py::arg("group"), py::arg("set"));
    m.def("is_aperiodic", [](const GroupSpec& g, const py::object& x) { return is_aperiodic(to_set(g, x)); },
          py::arg("group"), py::arg("set"));
    m.def("lam", [](const GroupSpec& g, const py::object& b, const py::object& x) {
        return lambda(to_set(g, b), parse_element(g, element_literal(x)));
    }, py::arg("group"), py::arg("b"), py::arg("x"));
    m.def("arithmetic_progression", [](const GroupSpec& g, const py::object& x) -> py::object {
        const auto ap = arithmetic_progression(to_set(g, x));
        if (!ap) return py::none();
        return py::make_tuple(ap->start, ap->difference);
    }, py::arg("group"), py::arg("set"));
    m.def("is_vosper", [](const GroupSpec& g, const py::object& x) { return is_vosper(to_set(g, x)); },
          py::arg("group"), py::arg("set"));
    m.def("hp_representation", [](const GroupSpec& g, const py::object& s) {
        const auto set = to_set(g, s);
        const auto hp = hp_representation(set);
        py::dict d;
        d["hypotheses_met"] = hp.hypotheses_met;
        d["vosper_capped"] = hp.vosper_capped;
        std::vector<std::string> certs;
        for (const auto& r : hp.representations) certs.push_back(format_certificate(set, r));
        d["certificates"] = certs;
        return d;
    }, py::arg("group"), py::arg("set"));
    m.def("is_faithful", [](const GroupSpec& g, const py::object& s) { return is_faithful(to_set(g, s)); },
          py::arg("group"), py::arg("set"));
    m.def("is_super_faithful", [](const GroupSpec& g, const py::object& s) { return is_super_faithful(to_set(g, s)); },
          py::arg("group"), py::arg("set"));
    m.def("critical_number", [](const GroupSpec& g) { return critical_number(g).value; }, py::arg("group"));

    m.def("claims", [] {
        std::vector<std::string> out;
        for (auto c : kAllClaims) out.emplace_back(to_string(c));
        return out;
    });
    m.def("bound_value", [](const std::string& claim, const GroupSpec& g, const py::object& s) {
        return format_rational(bound_value(parse_claim(claim), to_set(g, s)));
    }, py::arg("claim"), py::arg("group"), py::arg("set"));
    m.def("check", [](const std::string& claim, const GroupSpec& g, const py::object& s, const py::object& b,
                      const py::object& x, const py::object& y, std::optional<std::uint32_t> k,
                      const py::object& subgroup, std::optional<std::int64_t> t) {
        ClaimAux aux;
        if (!b.is_none()) aux.set_b = to_set(g, b);
        if (!x.is_none()) aux.x = parse_element(g, element_literal(x));
        if (!y.is_none()) aux.y = parse_element(g, element_literal(y));
        aux.k = k;
        if (!subgroup.is_none()) aux.subgroup = span(to_set(g, subgroup));
        aux.t = t;
        return report_dict(check(parse_claim(claim), to_set(g, s), aux));
    }, py::arg("claim"), py::arg("group"), py::arg("set"), py::kw_only(), py::arg("b") = py::none(),
          py::arg("x") = py::none(), py::arg("y") = py::none(), py::arg("k") = py::none(),
          py::arg("subgroup") = py::none(), py::arg("t") = py::none());

    m.def("enumerate_subsets", [](const GroupSpec& g, bool zero_free, bool asymmetric, bool symmetric,
                                  bool generating, bool sigma_aperiodic, std::uint32_t size_min,
                                  std::uint32_t size_max) {
        std::vector<std::vector<Element>> out;
        for (const auto& s : enumerate_subsets(g, constraints(zero_free, asymmetric, symmetric, generating,
                                                              sigma_aperiodic, size_min, size_max))) {
            out.push_back(s.elements());
        }
        return out;
    }, py::arg("group"), py::kw_only(), py::arg("zero_free") = false, py::arg("asymmetric") = false,
          py::arg("symmetric") = false, py::arg("generating") = false, py::arg("sigma_aperiodic") = false,
          py::arg("size_min") = 0, py::arg("size_max") = std::numeric_limits<std::uint32_t>::max());

    m.def("fuzz_conjecture", [](const std::vector<GroupSpec>& groups, unsigned threads) {
        SubsetConstraints c;
        c.zero_free = true;
        c.sigma_aperiodic = true;
        FuzzVerdict v;
        {
            py::gil_scoped_release release;
            v = fuzz_conjecture(dedupe_groups(groups), c, threads);
        }
        py::dict d;
        d["exhausted"] = v.exhausted;
        d["instances"] = v.instances;
        d["min_slack"] = optional_rational(v.min_slack);
        py::dict by_size;
        for (const auto& [size, s] : v.min_slack_by_size) by_size[py::int_(size)] = format_rational(s);
        d["min_slack_by_size"] = by_size;
        std::vector<std::string> ce;
        for (const auto& r : v.counterexamples) ce.push_back(to_jsonl(r));
        d["counterexamples"] = ce;
        d["rejected"] = v.rejected;
        return d;
    }, py::arg("groups"), py::arg("threads") = 1);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
