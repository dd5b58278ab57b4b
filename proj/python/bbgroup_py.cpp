#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "bbgroup/bray.hpp"
#include "bbgroup/cartan.hpp"
#include "bbgroup/error.hpp"
#include "bbgroup/group_spec.hpp"
#include "bbgroup/groundtruth.hpp"
#include "bbgroup/oracle.hpp"
#include "bbgroup/powertools.hpp"
#include "bbgroup/sampler.hpp"
#include "bbgroup/tricks.hpp"

namespace py = pybind11;
using namespace bbgroup;

namespace {

// Elements cross the boundary in the backend's text notation.
class PyGroup {
 public:
  explicit PyGroup(std::shared_ptr<GroupOracle> oracle)
      : oracle_(std::move(oracle)), exp_(split_exponent(*oracle_)) {}

  static PyGroup from_json(const std::string& text, std::size_t cap) {
    return PyGroup(build_backend(parse_group_spec(text), cap));
  }
  static PyGroup load(const std::string& path, std::size_t cap) {
    return PyGroup(build_backend(load_group_spec(path), cap));
  }

  Element el(const std::string& s) const { return oracle_->parse(s); }
  std::string str(const Element& e) const { return oracle_->format(e); }

  const GroupOracle& oracle() const { return *oracle_; }
  GroupOracle& oracle() { return *oracle_; }
  const ExponentData& exp() const { return exp_; }

  const FiniteGroup& ground_truth() {
    if (!table_) table_ = std::make_unique<FiniteGroup>(*oracle_);
    return *table_;
  }

  py::list strs(std::span<const Element> es) const {
    py::list out;
    for (const auto& e : es) out.append(str(e));
    return out;
  }

 private:
  std::shared_ptr<GroupOracle> oracle_;
  ExponentData exp_;
  std::unique_ptr<FiniteGroup> table_;
};

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

RealMatrix to_matrix(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1))
    throw Error(ErrorKind::InvalidSpec, "expected a square 2-d array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  RealMatrix m(n);
  auto r = a.unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = r(i, j);
  return m;
}

Array to_array(const RealMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  Array a({n, n});
  auto w = a.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) w(i, j) = m(i, j);
  return a;
}

py::dict burnside_dict(const BurnsideReport& r) {
  py::dict d;
  d["hypothesis_holds"] = r.hypothesis_holds;
  d["branch"] = to_string(r.branch);
  d["group_order"] = r.group_order;
  d["involution_count"] = r.involution_count;
  d["involution_class_count"] = r.involution_class_count;
  d["centralizer_elementary_abelian"] = r.centralizer_elementary_abelian;
  d["sylow_order"] = r.sylow_order;
  d["sylow_count"] = r.sylow_count;
  d["n"] = r.n;
  d["n_hint_mismatch"] = r.n_hint_mismatch;
  d["sylow_normal"] = r.sylow_normal;
  d["sylow_TI"] = r.sylow_TI;
  d["fusion_controlled"] = r.fusion_controlled;
  d["normalizer_order"] = r.normalizer_order;
  d["mu"] = r.mu;
  d["normalizer_order_holds"] = r.normalizer_order_holds;
  d["order_formula_holds"] = r.order_formula_holds;
  d["coset_count"] = r.coset_count;
  d["three_transitive"] = r.three_transitive;
  d["all_checks_pass"] = r.all_checks_pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(bbgroup, m) {
  m.doc() = "Black-box group algorithms: Bray's centralizer map and relatives";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "Error", PyExc_RuntimeError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
      py::set_error(error.get_stored(), msg.c_str());
    }
  });

  py::class_<PyGroup>(m, "Group")
      .def_static("from_json", &PyGroup::from_json, py::arg("text"),
                  py::arg("cap") = kDefaultCap, "Group from a JSON specification")
      .def_static("load", &PyGroup::load, py::arg("path"), py::arg("cap") = kDefaultCap)
      .def_static("moebius", [](std::uint32_t n) { return PyGroup(make_moebius_group(n)); },
                  py::arg("n"), "SL2(2^n) acting on the projective line")
      .def_property_readonly("backend", [](const PyGroup& g) { return g.oracle().backend().kind(); })
      .def_property_readonly("exponent", [](const PyGroup& g) { return g.exp().E; })
      .def_property_readonly("generators",
                             [](const PyGroup& g) { return g.strs(g.oracle().generators()); })
      .def_property_readonly("mult_count", [](const PyGroup& g) { return g.oracle().mult_count(); })
      .def("reset_mult_count", [](PyGroup& g) { g.oracle().reset_mult_count(); })
      .def("identity", [](const PyGroup& g) { return g.str(g.oracle().identity()); })
      .def("mul", [](const PyGroup& g, const std::string& a, const std::string& b) {
        return g.str(g.oracle().mul(g.el(a), g.el(b)));
      })
      .def("inv", [](const PyGroup& g, const std::string& a) { return g.str(g.oracle().inv(g.el(a))); })
      .def("is_identity",
           [](const PyGroup& g, const std::string& a) { return g.oracle().is_identity(g.el(a)); })
      .def("elements",
           [](const PyGroup& g, std::size_t cap) {
             return g.strs(enumerate(g.oracle(), cap).elements());
           },
           py::arg("cap") = kDefaultCap)
      .def("order", [](PyGroup& g) { return g.ground_truth().order(); })
      .def("element_order",
           [](const PyGroup& g, const std::string& x) { return element_order(g.oracle(), g.el(x)); })
      .def("has_odd_order",
           [](const PyGroup& g, const std::string& x) {
             return has_odd_order(g.oracle(), g.el(x), g.exp());
           })
      .def("sqrt_odd",
           [](const PyGroup& g, const std::string& x) {
             return g.str(sqrt_odd(g.oracle(), g.el(x), g.exp()));
           })
      .def("extract_involution",
           [](const PyGroup& g, const std::string& x) {
             return g.str(extract_involution(g.oracle(), g.el(x), g.exp()));
           })
      .def("zeta",
           [](const PyGroup& g, const std::string& i, const std::string& x) {
             const auto z = zeta(g.oracle(), g.el(i), g.el(x), g.exp());
             return py::make_tuple(z.branch == ZetaBranch::Odd ? "odd" : "even", g.str(z.value));
           },
           py::arg("i"), py::arg("x"), "Bray's map: (branch, value in C(i))")
      .def("centralizer_sample",
           [](const PyGroup& g, const std::string& i, std::size_t samples, std::uint64_t seed,
              std::size_t cell_size, std::uint64_t burn_in) {
             auto cell = seed_cell(g.oracle(), cell_size, burn_in, seed);
             return g.strs(centralizer_sample(g.el(i), cell, samples, g.exp()));
           },
           py::arg("i"), py::arg("samples") = 20, py::arg("seed") = 0, py::arg("cell_size") = 10,
           py::arg("burn_in") = 50)
      .def("centralizer_closure",
           [](PyGroup& g, const std::string& i, const std::vector<std::string>& samples) {
             std::vector<Element> es;
             for (const auto& s : samples) es.push_back(g.el(s));
             const auto r = centralizer_closure_check(g.ground_truth(), g.el(i), es);
             py::dict d;
             d["generated_order"] = r.generated_order;
             d["true_order"] = r.true_order;
             d["equal"] = r.equal;
             return d;
           })
      .def("zeta_audit",
           [](PyGroup& g, const std::string& i) {
             const auto r = zeta_distribution_audit(g.ground_truth(), g.el(i), g.exp());
             py::dict d;
             d["centralizer_order"] = r.centralizer_order;
             d["odd_domain_size"] = r.odd_domain_size;
             d["even_domain_size"] = r.even_domain_size;
             d["odd_constant"] = r.odd_constant;
             d["even_class_constant"] = r.even_class_constant;
             d["domains_closed"] = r.domains_closed;
             d["membership"] = r.membership;
             return d;
           })
      .def("conjugate_by_sqrt",
           [](const PyGroup& g, const std::string& i, const std::string& j) {
             return g.str(conjugate_by_sqrt(g.oracle(), g.el(i), g.el(j), g.exp()));
           })
      .def("double_conjugation",
           [](const PyGroup& g, const std::string& t, const std::string& r, const std::string& s) {
             return g.str(double_conjugation(g.oracle(), g.el(t), g.el(r), g.el(s), g.exp()));
           })
      .def("burnside_audit",
           [](PyGroup& g, std::optional<std::uint32_t> n_hint) {
             return burnside_dict(burnside_audit(g.ground_truth(), n_hint));
           },
           py::arg("n_hint") = py::none())
      .def("strongly_isolated",
           [](PyGroup& g, const std::string& t) {
             return strongly_isolated_check(g.ground_truth(), g.el(t)).isolated;
           })
      .def("isolated_zeta", [](const PyGroup& g, const std::string& t, const std::string& x) {
        return g.str(isolated_zeta(g.oracle(), g.el(t), g.el(x), g.exp()));
      });

  m.def("spd_sqrt", [](const Array& a, double tol) { return to_array(spd_sqrt(to_matrix(a), tol)); },
        py::arg("a"), py::arg("tol") = kSqrtTolerance);
  m.def("polar_decompose",
        [](const Array& x, double tol) {
          const auto pd = polar_decompose(to_matrix(x), tol);
          return py::make_tuple(to_array(pd.z), to_array(pd.p), pd.orthogonality_residual,
                                pd.reconstruction_residual);
        },
        py::arg("x"), py::arg("tol") = kOrthogonalityTolerance,
        "(z, p, orthogonality_residual, reconstruction_residual) with x = z p");
  m.def("cartan_zeta",
        [](const Array& x, double tol) { return to_array(cartan_zeta(to_matrix(x), tol)); },
        py::arg("x"), py::arg("tol") = kOrthogonalityTolerance);
  m.def("connectedness_path",
        [](const Array& x, std::size_t steps, double tol) {
          py::list out;
          for (const auto& mtx : connectedness_path(to_matrix(x), steps, tol))
            out.append(to_array(mtx));
          return out;
        },
        py::arg("x"), py::arg("steps"), py::arg("tol") = kOrthogonalityTolerance);
}
