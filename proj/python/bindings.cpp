#include "mouldinv/cli.hpp"
#include "mouldinv/formal.hpp"
#include "mouldinv/oracles.hpp"
#include "mouldinv/render.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

namespace py = pybind11;
using namespace mouldinv;

namespace {

std::complex<double> to_py(cld z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

Family family_of(const std::string& f)
{
    static const std::map<std::string, Family> m{{"te", Family::Te},   {"ta", Family::Ta},   {"ten", Family::Ten},
                                                 {"tan", Family::Tan}, {"invte", Family::InvTe}};
    auto it = m.find(f);
    if (it == m.end()) throw std::invalid_argument("unknown family " + f);
    return it->second;
}

Scheme scheme_of(const std::string& s)
{
    if (s == "symmetric") return Scheme::Symmetric;
    if (s == "symmetric-prime") return Scheme::SymmetricPrime;
    if (s == "direct-plus") return Scheme::DirectPlus;
    if (s == "direct-minus") return Scheme::DirectMinus;
    throw std::invalid_argument("unknown scheme " + s);
}

InputFile numeric_input(const std::string& doc)
{
    auto f = parse_input(doc, "<input>");
    if (f.symbolic) throw std::invalid_argument("numeric coeffs required");
    return f;
}

}  // namespace

PYBIND11_MODULE(_mouldinv, m)
{
    py::register_exception<std::runtime_error>(m, "MouldinvError", PyExc_RuntimeError);

    m.def("multizeta", [](const Seq& w) { return static_cast<double>(eval_numeric(w)); }, py::arg("word"));
    m.def("stuffle", [](const Seq& u, const Seq& v) { return zeta_to_json(stuffle_product(u, v)).dump(); });
    m.def("tan_in_te", [](int r) { return render_formal(expand_Tan_in_Te(r)); }, py::arg("length"));
    m.def("tan_in_te_count", [](int r) { return expand_Tan_in_Te(r).size(); }, py::arg("length"));
    m.def(
        "reduce",
        [](const std::string& family, const Seq& s, bool normalized, const std::string& conv) {
            ReduceOptions o;
            o.normalized = normalized;
            if (conv == "uncontracted")
                o.tan = TanConvention::Uncontracted;
            else if (conv != "full")
                throw std::invalid_argument("tan convention must be full or uncontracted");
            if (family == "te") return reduction_to_json("Teze", s, reduce_Te(s, o)).dump();
            if (family == "tan") return reduction_to_json("Tanze", s, reduce_Tan(s, o)).dump();
            throw std::invalid_argument("family must be te or tan");
        },
        py::arg("family"), py::arg("seq"), py::arg("normalized") = false, py::arg("tan_convention") = "full");
    m.def(
        "multitangent",
        [](const std::string& family, const Seq& s, std::complex<double> z, double tol) {
            return to_py(eval_numeric_family(family_of(family), s, cld(z.real(), z.imag()), tol));
        },
        py::arg("family"), py::arg("seq"), py::arg("z"), py::arg("tol") = 1e-10);
    m.def(
        "collector",
        [](const std::string& doc, int W, const std::string& scheme, bool reduced) {
            auto f = parse_input(doc, "<input>");
            if (W > f.in.cap) throw std::invalid_argument("weight cap exceeded");
            return collector_to_json(build_collector(f, scheme_of(scheme), W, reduced)).dump();
        },
        py::arg("input"), py::arg("weight"), py::arg("scheme") = "symmetric", py::arg("reduced") = true);
    m.def(
        "invariants",
        [](const std::string& doc, int W, const std::vector<long>& omegas, double tol) {
            auto f = numeric_input(doc);
            if (W > f.in.cap) throw std::invalid_argument("weight cap exceeded");
            return invariants_to_json(invariants_numeric(f.in, omegas, W, tol)).dump();
        },
        py::arg("input"), py::arg("weight"), py::arg("omegas") = std::vector<long>{-1, 1}, py::arg("tol") = 1e-6);
    m.def(
        "fourier_oracle",
        [](const std::string& doc, long omega, int k, int nodes) {
            FourierConfig c;
            c.k = k;
            c.nodes = nodes;
            if (omega > 0) c.im_z0 = -c.im_z0;
            auto r = fourier_oracle(diffeo_of(numeric_input(doc).in), Frequency{omega}, c);
            return py::make_tuple(to_py(r.value_2k), static_cast<double>(r.k_change));
        },
        py::arg("input"), py::arg("omega") = -1, py::arg("k") = 200, py::arg("nodes") = 128);
    m.def(
        "borel_oracle",
        [](const std::string& doc, int N, int window) {
            BorelConfig c;
            c.N = N;
            c.window = window;
            auto r = borel_asymptotics_oracle(diffeo_of(numeric_input(doc).in), c);
            py::dict d;
            d["A_minus"] = to_py(r.A_minus);
            d["A_plus"] = to_py(r.A_plus);
            d["digits"] = static_cast<double>(r.digits);
            d["warnings"] = r.warnings;
            return d;
        },
        py::arg("input"), py::arg("N") = 300, py::arg("window") = 12);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
