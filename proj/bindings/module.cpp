#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primeveil/certify.hpp"
#include "primeveil/claims.hpp"
#include "primeveil/poly.hpp"
#include "primeveil/search.hpp"

namespace py = pybind11;
using namespace primeveil;

namespace pybind11::detail {

// mpz_class <-> python int, via decimal strings
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* str = PyObject_Str(src.ptr());
    if (!str) {
      PyErr_Clear();
      return false;
    }
    const char* text = PyUnicode_AsUTF8(str);
    bool ok = text != nullptr && mpz_set_str(value.get_mpz_t(), text, 10) == 0;
    Py_DECREF(str);
    return ok && value >= 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

py::dict terms_dict(const Polynomial& p) {
  py::dict d;
  for (const auto& [exps, coeff] : p.terms()) {
    d[py::make_tuple(exps.first, exps.second)] = py::cast(coeff);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_primeveil, m) {
  m.doc() = "gcd-obstruction certificates and prime search for positive "
            "bivariate polynomials without constant terms";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConstantTermError>(m, "ConstantTermError", PyExc_ValueError);
  py::register_exception<NotUnivariateError>(m, "NotUnivariateError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<EvalPoint>(m, "EvalPoint")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("x"), py::arg("y"))
      .def_readonly("x", &EvalPoint::x)
      .def_readonly("y", &EvalPoint::y)
      .def("__repr__", [](const EvalPoint& p) {
        return "EvalPoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
      });

  py::class_<ValueWitness>(m, "ValueWitness")
      .def_readonly("point", &ValueWitness::point)
      .def_readonly("value", &ValueWitness::value);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
      .def("__call__", [](const Polynomial& p, const Nat& x, const Nat& y) {
        return p.eval(x, y);
      })
      .def("eval", [](const Polynomial& p, const Nat& x, const Nat& y) {
        return p.eval(x, y);
      })
      .def_property_readonly("degree_x", &Polynomial::degree_x)
      .def_property_readonly("degree_y", &Polynomial::degree_y)
      .def("terms", &terms_dict)
      .def("__str__", [](const Polynomial& p) { return to_canonical_string(p); })
      .def("__repr__", [](const Polynomial& p) {
        return "Polynomial(\"" + to_canonical_string(p) + "\")";
      })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; });

  m.def("parse", &parse, py::arg("text"));
  m.def("canonical", [](const Polynomial& p) { return to_canonical_string(p); });
  m.def("specialize",
        [](const Polynomial& p, const std::string& var, const Nat& value) {
          if (var != "x" && var != "y")
            throw py::value_error("variable must be 'x' or 'y'");
          return specialize(p, var == "x" ? Var::X : Var::Y, value);
        },
        py::arg("poly"), py::arg("variable"), py::arg("value"));
  m.def("values_upto",
        [](const Polynomial& p, const Nat& cap) { return values_upto(p, cap); },
        py::arg("poly"), py::arg("cap"));
  m.def("shift_quotient", &shift_quotient, py::arg("poly"), py::arg("x"), py::arg("y"),
        py::arg("a"));

  m.def("gcd", [](const Nat& a, const Nat& b) { return primeveil::gcd(a, b); },
        py::arg("a"), py::arg("b"));
  m.def("gcd3", [](const Nat& a, const Nat& b, const Nat& c) { return gcd3(a, b, c); },
        py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("is_prime", [](const Nat& n) { return is_prime(n); }, py::arg("n"));
  m.def("classify_prime", [](const Nat& n) {
    Primality r = classify_prime(n);
    return py::make_tuple(r.is_prime, r.probabilistic);
  });

  py::enum_<TupleStatus>(m, "TupleStatus")
      .value("OBSTRUCTION_GCD", TupleStatus::ObstructionGcd)
      .value("OBSTRUCTION_EQUAL_COMPOSITE", TupleStatus::ObstructionEqualComposite)
      .value("VIOLATION", TupleStatus::Violation);

  py::enum_<Verdict>(m, "Verdict")
      .value("PRIME_FOUND", Verdict::PrimeFound)
      .value("PRIME_FREE", Verdict::PrimeFree)
      .value("INCONCLUSIVE", Verdict::Inconclusive);

  m.def("check_tuple", &check_tuple, py::arg("u"), py::arg("v"), py::arg("w"));

  py::class_<ObstructionTuple>(m, "ObstructionTuple")
      .def_readonly("a", &ObstructionTuple::a)
      .def_readonly("b", &ObstructionTuple::b)
      .def_readonly("c", &ObstructionTuple::c)
      .def_readonly("d", &ObstructionTuple::d)
      .def_readonly("x", &ObstructionTuple::x)
      .def_readonly("y", &ObstructionTuple::y)
      .def_readonly("f_ab", &ObstructionTuple::u)
      .def_readonly("f_cd", &ObstructionTuple::v)
      .def_readonly("f_xy", &ObstructionTuple::w);

  py::class_<UnivariatePair>(m, "UnivariatePair")
      .def_readonly("a", &UnivariatePair::a)
      .def_readonly("x", &UnivariatePair::x)
      .def_readonly("f_a", &UnivariatePair::fa)
      .def_readonly("f_x", &UnivariatePair::fx);

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("bound_B", &Certificate::bound_B)
      .def_readonly("tuples_checked", &Certificate::tuples_checked)
      .def_readonly("distinct_value_pairs", &Certificate::distinct_value_pairs)
      .def_readonly("sweep_bound", &Certificate::sweep_bound)
      .def_readonly("sweep_points", &Certificate::sweep_points)
      .def_readonly("primality_probabilistic", &Certificate::primality_probabilistic);

  py::class_<CertifyOutcome>(m, "CertifyOutcome")
      .def_readonly("verdict", &CertifyOutcome::verdict)
      .def_readonly("witness", &CertifyOutcome::witness)
      .def_readonly("certificate", &CertifyOutcome::certificate)
      .def_readonly("violation", &CertifyOutcome::violation)
      .def_readonly("violation_univariate", &CertifyOutcome::violation_univariate);

  m.def("certify_bivariate",
        [](const Polynomial& p, std::optional<std::uint64_t> sweep_bound, unsigned jobs,
           std::uint64_t b_cap) {
          CertifyOptions opts;
          opts.sweep_bound = sweep_bound;
          opts.jobs = jobs;
          opts.limits.b_cap = b_cap;
          return certify_bivariate(p, opts);
        },
        py::arg("poly"), py::arg("sweep_bound") = std::nullopt, py::arg("jobs") = 1,
        py::arg("b_cap") = Limits{}.b_cap);
  m.def("certify_univariate",
        [](const Polynomial& p, std::optional<std::uint64_t> sweep_bound,
           std::uint64_t b_cap) {
          CertifyOptions opts;
          opts.sweep_bound = sweep_bound;
          opts.limits.b_cap = b_cap;
          return certify_univariate(p, opts);
        },
        py::arg("poly"), py::arg("sweep_bound") = std::nullopt,
        py::arg("b_cap") = Limits{}.b_cap);

  py::class_<ObstructionFound>(m, "ObstructionFound")
      .def_readonly("tuple", &ObstructionFound::tuple)
      .def_readonly("status", &ObstructionFound::status);

  m.def("enumerate_tuples",
        [](const Polynomial& p) { return enumerate_tuples(p); }, py::arg("poly"));
  m.def("find_first_obstruction",
        [](const Polynomial& p) { return find_first_obstruction(p); }, py::arg("poly"));

  py::class_<SearchOutcome> search_outcome(m, "SearchOutcome");
  py::enum_<SearchOutcome::Kind>(search_outcome, "Kind")
      .value("PRIME", SearchOutcome::Kind::Prime)
      .value("EXHAUSTED", SearchOutcome::Kind::Exhausted);
  search_outcome.def_readonly("kind", &SearchOutcome::kind)
      .def_readonly("witness", &SearchOutcome::witness)
      .def_readonly("steps", &SearchOutcome::steps)
      .def_readonly("points_scanned", &SearchOutcome::points_scanned)
      .def_readonly("max_value_seen", &SearchOutcome::max_value_seen);

  py::class_<EarlyPrimeOutcome> early_outcome(m, "EarlyPrimeOutcome");
  py::enum_<EarlyPrimeOutcome::Kind>(early_outcome, "Kind")
      .value("PRIME_FIRST", EarlyPrimeOutcome::Kind::PrimeFirst)
      .value("COLLISION_FIRST", EarlyPrimeOutcome::Kind::CollisionFirst)
      .value("NEITHER", EarlyPrimeOutcome::Kind::Neither);
  early_outcome.def_readonly("kind", &EarlyPrimeOutcome::kind)
      .def_readonly("witness", &EarlyPrimeOutcome::witness)
      .def_readonly("point", &EarlyPrimeOutcome::point)
      .def_readonly("value", &EarlyPrimeOutcome::value)
      .def_readonly("first_point", &EarlyPrimeOutcome::first_point)
      .def_readonly("steps", &EarlyPrimeOutcome::steps)
      .def_readonly("points_scanned", &EarlyPrimeOutcome::points_scanned);

  py::class_<PrimeFreeReport>(m, "PrimeFreeReport")
      .def_readonly("clean", &PrimeFreeReport::clean)
      .def_readonly("counterexample", &PrimeFreeReport::counterexample)
      .def_readonly("points", &PrimeFreeReport::points);

  m.def("lex_search", &lex_search, py::arg("poly"), py::arg("bound"));
  m.def("early_prime_check", &early_prime_check, py::arg("poly"), py::arg("bound"));
  m.def("verify_prime_free", &verify_prime_free, py::arg("poly"), py::arg("bound"),
        py::arg("jobs") = 1);
  m.def("grid_gcd", &grid_gcd, py::arg("poly"), py::arg("bound"));

  py::enum_<ClaimStatus>(m, "ClaimStatus")
      .value("UPHELD", ClaimStatus::Upheld)
      .value("FALSIFIED", ClaimStatus::Falsified);

  py::class_<Counterexample>(m, "Counterexample")
      .def_readonly("assignment", &Counterexample::assignment)
      .def_readonly("values", &Counterexample::values)
      .def_readonly("label", &Counterexample::label);

  py::class_<ClaimReport>(m, "ClaimReport")
      .def_readonly("claim_id", &ClaimReport::claim_id)
      .def_readonly("polynomial", &ClaimReport::polynomial)
      .def_readonly("ranges", &ClaimReport::ranges)
      .def_readonly("checked", &ClaimReport::checked)
      .def_readonly("skipped", &ClaimReport::skipped)
      .def_readonly("counterexamples", &ClaimReport::counterexamples)
      .def_readonly("counterexamples_total", &ClaimReport::counterexamples_total)
      .def_readonly("status", &ClaimReport::status);

  m.def("check_shift_lemma",
        [](const Polynomial& p, std::uint64_t bound) {
          auto r = check_shift_lemma(p, bound);
          return std::vector<ClaimReport>(r.begin(), r.end());
        },
        py::arg("poly"), py::arg("bound") = 10);
  m.def("check_composition",
        [](const Polynomial& p, std::uint64_t bound) {
          auto r = check_composition(p, bound);
          return std::vector<ClaimReport>(r.begin(), r.end());
        },
        py::arg("poly"), py::arg("bound") = 10);
  m.def("check_corollary_m",
        [](const Polynomial& p, std::uint64_t bound, std::uint64_t s4_bound) {
          auto r = check_corollary_m(p, bound, s4_bound);
          return std::vector<ClaimReport>(r.begin(), r.end());
        },
        py::arg("poly"), py::arg("bound") = 10, py::arg("s4_bound") = 4);
  m.def("check_gcd_theorems",
        [](const Polynomial& p, std::uint64_t bound) {
          auto r = check_gcd_theorems(p, bound);
          return std::vector<ClaimReport>(r.begin(), r.end());
        },
        py::arg("poly"), py::arg("bound") = 10);

  py::class_<MinimalObstructionEntry>(m, "MinimalObstructionEntry")
      .def_readonly("polynomial", &MinimalObstructionEntry::polynomial)
      .def_readonly("depends_on_both", &MinimalObstructionEntry::depends_on_both)
      .def_readonly("prime_free", &MinimalObstructionEntry::prime_free)
      .def_readonly("prime_witness", &MinimalObstructionEntry::prime_witness)
      .def_readonly("obstruction", &MinimalObstructionEntry::obstruction);

  py::class_<MinimalObstructionReport>(m, "MinimalObstructionReport")
      .def_readonly("summary", &MinimalObstructionReport::summary)
      .def_readonly("summary_both_vars", &MinimalObstructionReport::summary_both_vars)
      .def_readonly("entries", &MinimalObstructionReport::entries)
      .def_readonly("prime_free_bound", &MinimalObstructionReport::prime_free_bound);

  m.def("check_minimal_obstruction",
        [](const std::vector<Polynomial>& corpus, std::uint64_t bound) {
          return check_minimal_obstruction(corpus, bound);
        },
        py::arg("corpus"), py::arg("prime_free_bound") = 100);

  m.attr("__version__") = PRIMEVEIL_VERSION;
  m.attr("DETERMINISTIC_PRIMALITY_BOUND") = py::cast(kDeterministicPrimalityBound);
}
