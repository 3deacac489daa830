// Python bindings: the main operations of the kit with strings for the
// heavyweight objects (multipartitions, polynomials, shapes) and a small
// GroupSpec class. std::domain_error / std::invalid_argument surface as
// ValueError, std::logic_error as RuntimeError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spets/group.hpp"
#include "spets/induction.hpp"
#include "spets/invariants.hpp"
#include "spets/multipartition.hpp"
#include "spets/oracle.hpp"
#include "spets/springer.hpp"
#include "spets/symbol.hpp"

namespace py = pybind11;
using namespace spets;

namespace {

Multipartition mp_for(const std::string& text, const GroupSpec& g) {
    Multipartition mp = Multipartition::parse(text);
    if (mp.count() != g.q() || mp.total() != g.n)
        throw std::domain_error("multipartition '" + text + "' does not label a representation of " +
                                g.str());
    return mp;
}

Weight weight_named(const std::string& name, const GroupSpec& g) {
    if (name == "spetsial") return Weight::spetsial(g.d, g.e);
    if (name == "basic") return Weight::basic(g.q());
    if (name == "zero") return Weight::zero(g.q());
    throw std::domain_error("weight must be 'spetsial', 'basic' or 'zero'");
}

}  // namespace

PYBIND11_MODULE(spetskit, m) {
    m.doc() = "Combinatorics of symbols, fake degrees, truncated induction and Springer sets "
              "for the imprimitive complex reflection groups G(de,e,n)";

    py::class_<GroupSpec>(m, "GroupSpec")
        .def(py::init([](long long q, long long e, long long n) {
                 return GroupSpec::from_qen(q, e, n);
             }),
             py::arg("q"), py::arg("e"), py::arg("n"))
        .def_readonly("d", &GroupSpec::d)
        .def_readonly("e", &GroupSpec::e)
        .def_readonly("n", &GroupSpec::n)
        .def("q", &GroupSpec::q)
        .def("order", &GroupSpec::order)
        .def("degrees", &GroupSpec::degrees)
        .def("reflection_count", &GroupSpec::reflection_count)
        .def("__str__", &GroupSpec::str)
        .def("__repr__", &GroupSpec::str)
        .def("__eq__", [](const GroupSpec& a, const GroupSpec& b) { return a == b; });

    m.def(
        "multipartitions",
        [](long long q, long long n) {
            std::vector<std::string> out;
            for (const auto& mp : enumerate_multipartitions(q, n)) out.push_back(mp.str());
            return out;
        },
        py::arg("q"), py::arg("n"), "All q-multipartitions of n as strings");

    m.def(
        "orbits",
        [](const GroupSpec& g) {
            std::vector<std::pair<std::string, long long>> out;
            for (const auto& orbit : enumerate_orbits(g))
                out.emplace_back(orbit.rep.str(), orbit.stabilizer);
            return out;
        },
        py::arg("group"), "Rotation orbits as (representative, stabilizer order) pairs");

    m.def(
        "irreps",
        [](const GroupSpec& g) {
            std::vector<std::string> out;
            for (const auto& label : irreps(g)) out.push_back(label.str());
            return out;
        },
        py::arg("group"), "Labels of the irreducible representations");

    m.def(
        "symbol",
        [](const std::string& mp, const GroupSpec& g, long long r, long long s,
           const std::string& weight, long long depth) {
            Symbol sym(mp_for(mp, g), g, SymbolType{r, s}, weight_named(weight, g), depth);
            py::dict out;
            out["rows"] = sym.canonical().rows();
            out["text"] = sym.str();
            out["distinguished"] = sym.distinguished();
            out["a"] = sym.a_stat();
            out["b"] = sym.b_stat();
            return out;
        },
        py::arg("mp"), py::arg("group"), py::arg("r"), py::arg("s"),
        py::arg("weight") = "spetsial", py::arg("depth") = 0,
        "Symbol of a multipartition at a type and named weight");

    m.def(
        "fake_degree",
        [](const std::string& mp, const GroupSpec& g) { return fake_degree(mp_for(mp, g), g).str(); },
        py::arg("mp"), py::arg("group"));
    m.def(
        "poincare_polynomial", [](const GroupSpec& g) { return poincare_polynomial(g).str(); },
        py::arg("group"));
    m.def(
        "a_value", [](const std::string& mp, const GroupSpec& g) { return a_value(mp_for(mp, g), g); },
        py::arg("mp"), py::arg("group"));
    m.def(
        "b_value", [](const std::string& mp, const GroupSpec& g) { return b_value(mp_for(mp, g), g); },
        py::arg("mp"), py::arg("group"));
    m.def(
        "is_special",
        [](const std::string& mp, const GroupSpec& g) { return is_special(mp_for(mp, g), g); },
        py::arg("mp"), py::arg("group"));

    m.def(
        "families",
        [](const GroupSpec& g) {
            std::vector<std::vector<std::string>> out;
            for (const auto& fam : families(g)) {
                std::vector<std::string> members;
                for (const auto& label : fam.members) members.push_back(label.str());
                out.push_back(std::move(members));
            }
            return out;
        },
        py::arg("group"));
    m.def(
        "special_irreps",
        [](const GroupSpec& g) {
            std::vector<std::string> out;
            for (const auto& label : special_irreps(g)) out.push_back(label.str());
            return out;
        },
        py::arg("group"));

    m.def(
        "j_sum",
        [](const std::string& a, const std::string& b) {
            return j_sum(Multipartition::parse(a), Multipartition::parse(b)).str();
        },
        py::arg("mp1"), py::arg("mp2"));
    m.def(
        "induce",
        [](const std::string& mp, long long f) {
            return induce_to_multiple(Multipartition::parse(mp), f).str();
        },
        py::arg("mp"), py::arg("factor"), "Truncated induction G(e,1,n) -> G(ef,1,n)");
    m.def(
        "split",
        [](const std::string& mp, long long r, long long s, long long r1, long long s1) {
            auto [x, y] =
                split_multipartition(Multipartition::parse(mp), r, s, r1, s1, r - r1, s - s1);
            return std::pair(x.str(), y.str());
        },
        py::arg("mp"), py::arg("r"), py::arg("s"), py::arg("r1"), py::arg("s1"),
        "Split a distinguished type-(r,s) symbol into types (r1,s1) and (r-r1,s-s1)");
    m.def(
        "special_lift",
        [](const std::string& mp) {
            Multipartition parsed = Multipartition::parse(mp);
            long long e = parsed.count();
            return unique_special_lift(orbit_of(parsed, 1, e), e).str();
        },
        py::arg("mp"), "The unique lift of a special G(e,e,n) orbit whose rotated symbol is monotone");

    m.def(
        "springer_ge1n",
        [](long long e, long long n, long long r, long long s) {
            std::vector<std::string> out;
            for (const auto& mp : springer_multipartitions_ge1n(e, n, r, s)) out.push_back(mp.str());
            return out;
        },
        py::arg("e"), py::arg("n"), py::arg("r"), py::arg("s"));
    m.def(
        "springer_geen",
        [](long long e, long long n, long long r) {
            std::vector<std::string> out;
            for (const auto& label : springer_irreps_geen(e, n, r)) out.push_back(label.str());
            return out;
        },
        py::arg("e"), py::arg("n"), py::arg("r"));

    m.def(
        "available_lattices",
        [](const GroupSpec& g) {
            std::vector<std::string> out;
            for (LatticeKind k : available_lattices(g)) out.push_back(lattice_str(k));
            return out;
        },
        py::arg("group"));
    m.def(
        "pseudoparabolics",
        [](const GroupSpec& g, const std::string& lattice) {
            std::vector<std::string> out;
            for (const auto& shape : pseudoparabolics(g, parse_lattice(lattice)))
                out.push_back(shape.str());
            return out;
        },
        py::arg("group"), py::arg("lattice"));
    m.def(
        "springer_reps",
        [](const GroupSpec& g, const std::string& lattice) {
            std::vector<std::string> out;
            for (const auto& label : springer_reps(g, parse_lattice(lattice)))
                out.push_back(label.str());
            return out;
        },
        py::arg("group"), py::arg("lattice"));

    m.def(
        "dihedral_irreps",
        [](long long e) {
            auto specials = dihedral_specials(e);
            auto springer = dihedral_springer(e);
            auto is_in = [](const std::vector<DihedralIrrep>& v, const DihedralIrrep& x) {
                return std::find(v.begin(), v.end(), x) != v.end();
            };
            py::list out;
            for (const auto& rep : dihedral_irreps(e)) {
                py::dict item;
                item["label"] = rep.label();
                item["b"] = rep.b();
                item["dim"] = rep.dim(e);
                item["special"] = is_in(specials, rep);
                item["springer"] = is_in(springer, rep);
                out.append(item);
            }
            return out;
        },
        py::arg("e"));
    m.def(
        "dihedral_pseudoparabolics",
        [](long long e) {
            std::vector<std::string> out;
            for (const auto& sub : dihedral_pseudoparabolics(e)) out.push_back(sub.str());
            return out;
        },
        py::arg("e"));
    m.def(
        "dihedral_j_induce",
        [](long long d, long long e, bool primed, long long sub, bool sub_primed) {
            return dihedral_j_induce(d, e, primed, DihedralIrrep{sub, sub_primed}).label();
        },
        py::arg("d"), py::arg("e"), py::arg("primed"), py::arg("sub"),
        py::arg("sub_primed") = false);

    m.def(
        "oracle_fake_degree",
        [](const GroupSpec& g, const std::string& mp, long long bound) {
            GroupOracle oracle(g, bound);
            return oracle.fake_degree_oracle(mp_for(mp, g)).str();
        },
        py::arg("group"), py::arg("mp"), py::arg("bound") = 5000,
        "Fake degree recomputed by the brute-force character oracle (sum over components)");
}
