#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bkm/decide.hpp"

namespace py = pybind11;
using namespace bkm;

namespace {

Rational rational_from_py(const py::handle& obj) {
  if (py::isinstance<py::int_>(obj))
    return Rational(Int(py::str(obj).cast<std::string>()));
  if (py::isinstance<py::str>(obj))
    return parse_rational(obj.cast<std::string>());
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
    return Rational(Int(py::str(obj.attr("numerator")).cast<std::string>()),
                    Int(py::str(obj.attr("denominator")).cast<std::string>()));
  throw py::type_error("expected int, Fraction, or \"p/q\" string");
}

py::object rational_to_py(const Rational& q) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::str(format_rational(q)));
}

BorcherdsCartanMatrix algebra_from_py(const py::list& rows) {
  std::vector<std::vector<Rational>> entries;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& v : row.cast<py::list>()) r.push_back(rational_from_py(v));
    entries.push_back(std::move(r));
  }
  return BorcherdsCartanMatrix::validate(std::move(entries));
}

Weight weight_from_py(const py::handle& obj, int rank) {
  Weight w;
  py::handle h_src = obj, e_src;
  if (py::isinstance<py::dict>(obj)) {
    auto d = obj.cast<py::dict>();
    if (!d.contains("h")) throw py::value_error("weight dict needs an \"h\" list");
    h_src = d["h"];
    if (d.contains("e")) e_src = d["e"];
  }
  for (const auto& v : h_src.cast<py::list>())
    w.h.push_back(v.cast<long long>());
  if (e_src)
    for (const auto& v : e_src.cast<py::list>())
      w.e.push_back(rational_from_py(v));
  if (static_cast<int>(w.h.size()) != rank)
    throw py::value_error("weight length does not match the rank");
  if (!w.dominant()) throw DominanceError();
  return w;
}

std::vector<Weight> weights_from_py(const py::list& objs, int rank) {
  std::vector<Weight> out;
  for (const auto& o : objs) out.push_back(weight_from_py(o, rank));
  return out;
}

CharacterHom chi_from_py(const BorcherdsCartanMatrix& A, const py::object& spec) {
  if (py::isinstance<py::str>(spec)) {
    auto s = spec.cast<std::string>();
    if (s == "sign") return make_chi_sign(A);
    if (s == "trivial") return make_chi_trivial(A);
    throw py::value_error("chi must be \"sign\", \"trivial\", or a value list");
  }
  auto vals = spec.cast<py::list>();
  if (static_cast<int>(vals.size()) != A.rank())
    throw py::value_error("chi list must have one value per simple root");
  std::map<int, int> eps;
  std::map<int, Rational> imval;
  for (int i = 0; i < A.rank(); ++i) {
    Rational v = rational_from_py(vals[i]);
    if (A.is_real(i))
      eps[i] = static_cast<int>(to_integer(v));
    else
      imval[i] = v;
  }
  return make_chi_custom(A, std::move(eps), std::move(imval));
}

py::list series_to_py(const TruncatedSeries& f) {
  py::list out;
  for (const auto& [m, c] : f.terms())
    out.append(py::make_tuple(py::tuple(py::cast(m)), rational_to_py(c)));
  return out;
}

py::dict verdict_to_py(const Verdict& v) {
  py::dict d;
  d["isomorphic"] = v.isomorphic;
  if (v.isomorphic) {
    py::list witness;
    for (const auto& m : v.witness) {
      py::dict e;
      e["left"] = m.left_weight;
      e["right"] = m.right_weight;
      e["component"] = m.key.C;
      witness.append(e);
    }
    d["witness"] = witness;
  } else {
    d["reason"] = v.failure == Verdict::Failure::SumMismatch
                      ? "sum_mismatch"
                      : "component_multiset_mismatch";
    if (!v.detail.empty()) d["detail"] = v.detail;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact characters and tensor-product decisions for "
            "Borcherds-Kac-Moody algebras";

  py::register_exception<AxiomError>(m, "AxiomError", PyExc_ValueError);
  py::register_exception<SymmetrizabilityError>(m, "SymmetrizabilityError",
                                                PyExc_ValueError);
  py::register_exception<DominanceError>(m, "DominanceError", PyExc_ValueError);
  py::register_exception<BraidConsistencyError>(m, "BraidConsistencyError",
                                                PyExc_ValueError);

  py::class_<BorcherdsCartanMatrix>(m, "Algebra")
      .def(py::init(&algebra_from_py), py::arg("matrix"))
      .def_property_readonly("rank", &BorcherdsCartanMatrix::rank)
      .def_property_readonly("real_indices", &BorcherdsCartanMatrix::real_indices)
      .def_property_readonly("imaginary_indices",
                             &BorcherdsCartanMatrix::imaginary_indices)
      .def_property_readonly("symmetrizer",
                             [](const BorcherdsCartanMatrix& A) {
                               py::list d;
                               for (int i = 0; i < A.rank(); ++i)
                                 d.append(rational_to_py(A.d(i)));
                               return d;
                             })
      .def("is_real", &BorcherdsCartanMatrix::is_real, py::arg("i"))
      .def("bilinear",
           [](const BorcherdsCartanMatrix& A, int i, int j) {
             return rational_to_py(A.bilinear(i, j));
           },
           py::arg("i"), py::arg("j"));

  m.def("pi_lambda",
        [](const BorcherdsCartanMatrix& A, const py::object& w) {
          return pi_lambda(A, weight_from_py(w, A.rank()));
        },
        py::arg("algebra"), py::arg("weight"));

  m.def("components",
        [](const BorcherdsCartanMatrix& A, const py::object& w) {
          return mc_lambda(A, weight_from_py(w, A.rank()));
        },
        py::arg("algebra"), py::arg("weight"));

  m.def("is_special",
        [](const BorcherdsCartanMatrix& A, const py::object& w) {
          return is_special(A, weight_from_py(w, A.rank()));
        },
        py::arg("algebra"), py::arg("weight"));

  m.def("is_one_dimensional",
        [](const BorcherdsCartanMatrix& A, const py::object& w) {
          return is_one_dimensional(A, weight_from_py(w, A.rank()));
        },
        py::arg("algebra"), py::arg("weight"));

  m.def("graph_c",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
          auto g = SimpleGraph::from_edges(n, edges);
          py::dict d;
          d["c"] = c_of_graph(g);
          d["c_k"] = k_partition_counts(g);
          d["connected"] = is_connected(g);
          return d;
        },
        py::arg("n"), py::arg("edges"));

  m.def("numerator",
        [](const BorcherdsCartanMatrix& A, const py::object& w,
           const py::object& chi, int H) {
          return series_to_py(
              numerator(A, weight_from_py(w, A.rank()), chi_from_py(A, chi), H));
        },
        py::arg("algebra"), py::arg("weight"), py::arg("chi") = "sign",
        py::arg("H") = 10);

  m.def("character",
        [](const BorcherdsCartanMatrix& A, const py::object& w, int H) {
          return series_to_py(
              normalized_character(A, weight_from_py(w, A.rank()), H));
        },
        py::arg("algebra"), py::arg("weight"), py::arg("H") = 10);

  m.def("tensor_character",
        [](const BorcherdsCartanMatrix& A, const py::list& ws, int H) {
          return series_to_py(
              tensor_character(A, weights_from_py(ws, A.rank()), H));
        },
        py::arg("algebra"), py::arg("weights"), py::arg("H") = 10);

  m.def("log_coefficient_check",
        [](const BorcherdsCartanMatrix& A, const py::object& w,
           const std::vector<int>& C, const py::object& chi, int H) {
          auto [computed, predicted] = log_coefficient_check(
              A, weight_from_py(w, A.rank()), chi_from_py(A, chi), C, H);
          return py::make_tuple(rational_to_py(computed),
                                rational_to_py(predicted));
        },
        py::arg("algebra"), py::arg("weight"), py::arg("C"),
        py::arg("chi") = "sign", py::arg("H") = 10);

  m.def("decide_tensor",
        [](const BorcherdsCartanMatrix& A, const py::list& left,
           const py::list& right) {
          return verdict_to_py(decide_tensor_isomorphism(
              A, weights_from_py(left, A.rank()), weights_from_py(right, A.rank())));
        },
        py::arg("algebra"), py::arg("left"), py::arg("right"));

  m.def("decide_numerator",
        [](const BorcherdsCartanMatrix& A, const py::list& left,
           const py::list& right) {
          return verdict_to_py(decide_numerator_equality(
              A, weights_from_py(left, A.rank()), weights_from_py(right, A.rank())));
        },
        py::arg("algebra"), py::arg("left"), py::arg("right"));

  m.def("unique_factorization",
        [](const BorcherdsCartanMatrix& A, const py::list& left,
           const py::list& right) {
          auto r = unique_factorization_report(
              A, weights_from_py(left, A.rank()), weights_from_py(right, A.rank()));
          py::dict d;
          switch (r.status) {
            case FactorReport::Status::Ok: d["status"] = "ok"; break;
            case FactorReport::Status::NotApplicable:
              d["status"] = "not_applicable";
              break;
            case FactorReport::Status::NotIsomorphic:
              d["status"] = "not_isomorphic";
              break;
          }
          if (!r.detail.empty()) d["detail"] = r.detail;
          py::list pairs;
          for (const auto& p : r.pairs) {
            py::dict e;
            e["left"] = p.left;
            e["right"] = p.right;
            e["twist_special"] = p.twist_special;
            e["twist_trivial"] = p.twist_trivial;
            pairs.append(e);
          }
          d["pairs"] = pairs;
          return d;
        },
        py::arg("algebra"), py::arg("left"), py::arg("right"));

  m.def("oracle_equal_characters",
        [](const BorcherdsCartanMatrix& A, const py::list& left,
           const py::list& right, int H) {
          auto r = oracle_equal_characters(A, weights_from_py(left, A.rank()),
                                           weights_from_py(right, A.rank()), H);
          py::dict d;
          d["sums_equal"] = r.sums_equal;
          d["series_equal"] = r.series_equal;
          d["equal_to_H"] = r.equal_to_H;
          d["first_difference"] =
              r.first_difference ? py::cast(*r.first_difference)
                                 : py::object(py::none());
          return d;
        },
        py::arg("algebra"), py::arg("left"), py::arg("right"),
        py::arg("H") = 10);
}
