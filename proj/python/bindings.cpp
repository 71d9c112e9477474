#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>

#include "pellredei/bench.hpp"
#include "pellredei/contfrac.hpp"
#include "pellredei/errors.hpp"
#include "pellredei/hyperbola.hpp"
#include "pellredei/pd_group.hpp"
#include "pellredei/redei.hpp"
#include "pellredei/solver.hpp"

namespace py = pybind11;
using namespace pellredei;

// Python int <-> BigInt, fractions.Fraction <-> BigRational, and
// Fraction-or-math.inf <-> ProjectiveRational. All conversions go through
// decimal strings so nothing is ever rounded.
namespace pybind11::detail {

template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = BigInt::parse(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    return py::int_(py::str(v.to_string())).release();
  }
};

template <>
struct type_caster<BigRational> {
  PYBIND11_TYPE_CASTER(BigRational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = BigRational(src.cast<BigInt>());
      return true;
    }
    if (!py::isinstance(src, py::module_::import("fractions").attr("Fraction"))) return false;
    value = BigRational(src.attr("numerator").cast<BigInt>(), src.attr("denominator").cast<BigInt>());
    return true;
  }

  static handle cast(const BigRational& v, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(v.num(), v.den()).release();
  }
};

template <>
struct type_caster<ProjectiveRational> {
  PYBIND11_TYPE_CASTER(ProjectiveRational, const_name("fractions.Fraction | float"));

  type_caster() : value(kInfinity) {}

  bool load(handle src, bool convert) {
    if (PyFloat_Check(src.ptr())) {
      const double f = src.cast<double>();
      if (!std::isinf(f)) return false;
      value = kInfinity;
      return true;
    }
    type_caster<BigRational> inner;
    if (!inner.load(src, convert)) return false;
    value = static_cast<BigRational&>(inner);
    return true;
  }

  static handle cast(const ProjectiveRational& v, return_value_policy policy, handle parent) {
    if (v.is_infinite()) return py::float_(INFINITY).release();
    return type_caster<BigRational>::cast(v.value(), policy, parent);
  }
};

}  // namespace pybind11::detail

namespace {

using Pair = std::pair<BigRational, BigRational>;

Pair as_tuple(const HyperbolaPoint& p) { return {p.x(), p.y()}; }

HyperbolaPoint point(const BigInt& d, const Pair& p) { return {d, p.first, p.second}; }

QuadraticElement element(const BigInt& d, const Pair& p) { return {QuadraticField(d), p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Pell equation solver built on Redei rational functions";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PerfectSquareError>(m, "PerfectSquareError", domain_error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

  m.def("isqrt", &isqrt, py::arg("n"));
  m.def("is_perfect_square", &is_perfect_square, py::arg("n"));

  m.def(
      "quad_mul",
      [](const BigInt& d, const Pair& p, const Pair& q) {
        const QuadraticElement r = quad_mul(element(d, p), element(d, q));
        return Pair{r.a(), r.b()};
      },
      py::arg("d"), py::arg("p"), py::arg("q"), "(a + b√d)(c + e√d) as a pair (s, t).");
  m.def(
      "quad_norm", [](const BigInt& d, const Pair& p) { return quad_norm(element(d, p)); }, py::arg("d"),
      py::arg("p"));

  m.def(
      "redei_pair",
      [](const BigInt& d, const BigRational& z, std::int64_t n, const std::string& method) {
        RedeiPair r;
        if (method == "linear") {
          if (n < 0) throw DomainError("the linear recurrence needs n >= 0");
          r = redei_pair_linear(d, z, static_cast<std::uint64_t>(n));
        } else if (method == "fast") {
          r = redei_pair_signed(d, z, n);
        } else {
          throw DomainError("method must be 'fast' or 'linear'");
        }
        return Pair{r.N, r.D};
      },
      py::arg("d"), py::arg("z"), py::arg("n"), py::arg("method") = "fast", "(N_n, D_n) with (z + √d)^n = N_n + D_n√d.");
  m.def("redei_q", &redei_q_signed, py::arg("d"), py::arg("z"), py::arg("n"),
        "Q_n(d, z) = N_n/D_n; math.inf when D_n = 0.");
  m.def("dickson", &dickson_eval, py::arg("a"), py::arg("x"), py::arg("n"));

  m.def(
      "odot", [](const BigInt& d, const ProjectiveRational& x, const ProjectiveRational& y) {
        return odot(PdContext(d), x, y);
      },
      py::arg("d"), py::arg("x"), py::arg("y"), "(d + xy)/(x + y) on Q ∪ {∞}.");
  m.def(
      "odot_pow",
      [](const BigInt& d, const ProjectiveRational& z, std::int64_t n) { return odot_pow(PdContext(d), z, n); },
      py::arg("d"), py::arg("z"), py::arg("n"));

  m.def(
      "h_mul", [](const BigInt& d, const Pair& p, const Pair& q) { return as_tuple(h_mul(point(d, p), point(d, q))); },
      py::arg("d"), py::arg("p"), py::arg("q"));
  m.def(
      "h_pow", [](const BigInt& d, const Pair& p, std::int64_t n) { return as_tuple(h_pow(point(d, p), n)); },
      py::arg("d"), py::arg("p"), py::arg("n"));
  m.def(
      "h_pow_redei",
      [](const BigInt& d, const Pair& p, std::uint64_t n) { return as_tuple(h_pow_redei(point(d, p), n)); },
      py::arg("d"), py::arg("p"), py::arg("n"));
  m.def(
      "eps", [](const BigInt& d, const ProjectiveRational& m) { return as_tuple(eps(PdContext(d), m)); },
      py::arg("d"), py::arg("m"));
  m.def(
      "tau", [](const BigInt& d, const Pair& p) { return tau(point(d, p)); }, py::arg("d"), py::arg("p"));

  m.def(
      "sqrt_cf",
      [](const BigInt& d) {
        const CFExpansion cf = sqrt_cf(d);
        return std::make_pair(cf.a0, cf.period);
      },
      py::arg("d"), "(a0, [a1, ..., aL]) for √d.");
  m.def(
      "convergents",
      [](const BigInt& d, std::size_t count) {
        ConvergentStream s(sqrt_cf(d));
        std::vector<std::pair<BigInt, BigInt>> out;
        for (std::size_t i = 0; i < count; ++i) {
          Convergent c = s.next();
          out.emplace_back(std::move(c.p), std::move(c.q));
        }
        return out;
      },
      py::arg("d"), py::arg("count"));

  m.def(
      "minimal_solution",
      [](const BigInt& d) {
        const PellSolution s = minimal_solution(d);
        return std::make_pair(s.x, s.y);
      },
      py::arg("d"));
  m.def(
      "nth_solution",
      [](const BigInt& d, std::uint64_t n, const std::string& strategy) {
        const PellSolution s = nth_solution(d, n, parse_strategy(strategy));
        return std::make_pair(s.x, s.y);
      },
      py::arg("d"), py::arg("n"), py::arg("strategy") = "cf", "strategy is 'cf', 'power' or 'redei'.");
  m.def(
      "solutions",
      [](const BigInt& d, std::size_t count) {
        SolutionStream s(d);
        std::vector<std::pair<BigInt, BigInt>> out;
        for (std::size_t i = 0; i < count; ++i) {
          PellSolution v = s.next();
          out.emplace_back(std::move(v.x), std::move(v.y));
        }
        return out;
      },
      py::arg("d"), py::arg("count"));
  m.def(
      "correspondence_check",
      [](const BigInt& d, std::uint64_t n) {
        const CorrespondenceReport r = correspondence_check(d, n);
        py::dict out;
        out["d"] = r.d;
        out["n"] = r.n;
        out["period_length"] = r.period_length;
        out["even_period"] = r.even_period;
        out["convergent_index"] = r.convergent_index;
        out["redei_value"] = r.redei_value;
        out["convergent_value"] = r.convergent_value;
        out["equal"] = r.equal;
        return out;
      },
      py::arg("d"), py::arg("n"));
  m.def(
      "bench",
      [](const BigInt& d, std::uint64_t n, unsigned reps) {
        BenchReport r;
        {
          py::gil_scoped_release release;
          r = run_bench(d, n, reps);
        }
        py::dict timings;
        for (const auto& t : r.timings) timings[py::str(std::string(to_string(t.strategy)))] = t.median_ns;
        py::dict out;
        out["agree"] = r.agree;
        out["digits_x"] = r.timings[0].x.decimal_digits();
        out["timings_ns"] = timings;
        return out;
      },
      py::arg("d"), py::arg("n"), py::arg("reps") = 3);
}
