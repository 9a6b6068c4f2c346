#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "report.hpp"
#include "subword/certify.hpp"
#include "subword/counting.hpp"

namespace py = pybind11;
using namespace subword;

namespace {

BinaryWord word(const std::string& s) { return BinaryWord::parse(s); }

BinaryWord base_for(const BinaryWord& w, const std::optional<std::string>& u) {
    return u ? word(*u) : unit_suffix(w.length());
}

// arbitrary-size integers cross as decimal strings
py::int_ big(const boost::multiprecision::cpp_int& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list rows(const DenseIntMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.n; ++i) {
        py::list r;
        for (std::size_t j = 0; j < m.n; ++j) r.append(m(i, j));
        out.append(r);
    }
    return out;
}

py::dict cert_dict(const Certificate& c) {
    py::dict d;
    d["w"] = c.w.str();
    d["u"] = c.u.str();
    d["a"] = c.a;
    d["b"] = c.b;
    d["cycle_rep"] = c.cycle_rep.str();
    d["kind"] = to_string(c.kind);
    return d;
}

}  // namespace

PYBIND11_MODULE(_subword, m) {
    m.doc() = "Subword-counting partial sums: counting, orbit dynamics, matrices, spectra, certificates";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

    m.def("count_subword", [](const std::string& w, std::uint64_t n) { return big(count_subword(word(w), n)); },
          py::arg("w"), py::arg("n"), "s_w(n), scattered occurrences of w in the binary expansion of n");
    m.def("count_factor", [](const std::string& w, std::uint64_t n) { return big(count_factor(word(w), n)); },
          py::arg("w"), py::arg("n"));
    m.def("subword_parity", [](const std::string& w, std::uint64_t n) { return subword_parity(word(w), n); },
          py::arg("w"), py::arg("n"));
    m.def("bracket", [](const std::string& w, const std::string& u, std::uint64_t n) {
              return bracket_eval(word(w), word(u), n);
          },
          py::arg("w"), py::arg("u"), py::arg("n"));

    m.def("step", [](const std::string& w, int a, const std::string& u) {
              const StepResult r = step(word(w), a, word(u));
              return py::make_tuple(r.sign_bit, r.next.str());
          },
          py::arg("w"), py::arg("a"), py::arg("u"), "(T_a(w)(u), S_a(w)(u))");
    m.def("step_inverse", [](const std::string& w, int a, const std::string& u) {
              return step_inverse(word(w), a, word(u)).str();
          },
          py::arg("w"), py::arg("a"), py::arg("u"));

    m.def("orbit", [](const std::string& w, std::optional<std::string> u) {
              const BinaryWord bw = word(w);
              const OrbitTable o(bw, base_for(bw, u));
              py::list out;
              for (std::size_t i = 0; i < o.size(); ++i) {
                  py::dict e;
                  e["word"] = o.element(i).str();
                  e["s0"] = o.succ(0, i);
                  e["t0"] = o.sign(0, i);
                  e["s1"] = o.succ(1, i);
                  e["t1"] = o.sign(1, i);
                  out.append(e);
              }
              return out;
          },
          py::arg("w"), py::arg("u") = py::none(), "orbit elements in discovery order with successor positions and signs");

    m.def("matrices", [](const std::string& w, std::optional<std::string> u) {
              const BinaryWord bw = word(w);
              const OrbitTable o(bw, base_for(bw, u));
              const MatrixPair p = build_matrices(o);
              py::dict d;
              d["order"] = [&] {
                  py::list l;
                  for (const auto& x : o.elements()) l.append(x.str());
                  return l;
              }();
              d["M0"] = rows(p.m0.dense());
              d["M1"] = rows(p.m1.dense());
              d["M"] = rows(dense_sum(p));
              d["c"] = constant_c(o);
              return d;
          },
          py::arg("w"), py::arg("u") = py::none());

    m.def("partial_sum", [](const std::string& w, std::uint64_t N, std::optional<std::string> u) {
              const BinaryWord bw = word(w);
              return PartialSumEvaluator(OrbitTable(bw, base_for(bw, u)))(N);
          },
          py::arg("w"), py::arg("N"), py::arg("u") = py::none(), "V(w,u)(N); entry 0 is S_N");
    m.def("partial_sum_direct", [](const std::string& w, std::uint64_t N, std::optional<std::string> u) {
              const BinaryWord bw = word(w);
              return partial_sum_direct(OrbitTable(bw, base_for(bw, u)), N);
          },
          py::arg("w"), py::arg("N"), py::arg("u") = py::none());

    m.def("detect_modulus_two", [](const std::string& w, std::optional<std::string> u) {
              const BinaryWord bw = word(w);
              const MatrixPair p = build_matrices(OrbitTable(bw, base_for(bw, u)));
              const ModulusTwoResult r = detect_modulus_two(p.m0, p.m1);
              py::dict d;
              d["present"] = r.present;
              d["root_order"] = r.root_order;
              d["phases"] = r.phases;
              d["eigenvalue_two"] = r.has_eigenvalue_two();
              return d;
          },
          py::arg("w"), py::arg("u") = py::none());
    m.def("det_two_minus_m", [](const std::string& w, std::optional<std::string> u, std::size_t limit) {
              const BinaryWord bw = word(w);
              return big(det_two_minus(dense_sum(build_matrices(OrbitTable(bw, base_for(bw, u)))), limit));
          },
          py::arg("w"), py::arg("u") = py::none(), py::arg("limit") = kDefaultDetLimit);
    m.def("spectral_radius", [](const std::string& w, std::optional<std::string> u) {
              const BinaryWord bw = word(w);
              const SpectralVerdict v = analyze_spectrum(build_matrices(OrbitTable(bw, base_for(bw, u))));
              return py::make_tuple(v.radius_estimate, v.radius_tolerance);
          },
          py::arg("w"), py::arg("u") = py::none(), "(estimate, tolerance)");

    m.def("find_certificate", [](const std::string& w, std::optional<std::string> u) -> py::object {
              const BinaryWord bw = word(w);
              const auto c = find_certificate(bw, base_for(bw, u));
              return c ? py::object(cert_dict(*c)) : py::none();
          },
          py::arg("w"), py::arg("u") = py::none());
    m.def("check_simple_family", [](int a, const std::string& w, unsigned k, unsigned j) {
              return cert_dict(check_simple_family(a, word(w), k, j));
          },
          py::arg("a"), py::arg("w"), py::arg("k"), py::arg("j"));
    m.def("check_long_prefix", [](int a, unsigned k, const std::string& w, std::optional<int> b, std::optional<std::string> u) {
              if (b.has_value() != u.has_value()) throw DomainError("give both b and u or neither");
              return cert_dict(b ? check_long_prefix(a, k, word(w), *b, word(*u)) : check_long_prefix(a, k, word(w)));
          },
          py::arg("a"), py::arg("k"), py::arg("w"), py::arg("b") = py::none(), py::arg("u") = py::none());
    m.def("check_two_runs", [](int a, unsigned j, unsigned k, const std::string& u) {
              return cert_dict(check_two_runs(a, j, k, word(u)));
          },
          py::arg("a"), py::arg("j"), py::arg("k"), py::arg("u"));
    m.def("check_one_run", [](int a, unsigned l) {
              const OneRunResult r = check_one_run(a, l);
              py::dict d;
              d["verdict"] = r.verdict == OneRunVerdict::ProvedP ? "ProvedP" : "ProvedNotP";
              d["certificate"] = r.certificate ? py::object(cert_dict(*r.certificate)) : py::none();
              d["eigenvector"] = r.eigenvector;
              d["inner_product"] = r.inner_product;
              d["delta"] = r.delta;
              d["empirical_stable"] = r.empirical_stable;
              return d;
          },
          py::arg("a"), py::arg("length"));

    m.def("analyze_json", [](const std::string& w, std::optional<std::string> u) {
              const BinaryWord bw = word(w);
              std::optional<BinaryWord> base;
              if (u) base = word(*u);
              return cli::report_json(classify(bw, base)).dump();
          },
          py::arg("w"), py::arg("u") = py::none(), "classification report as a JSON string");
}
