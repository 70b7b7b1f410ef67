#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "kzeta/arith.hpp"
#include "kzeta/class_numbers.hpp"
#include "kzeta/cyc8.hpp"
#include "kzeta/kloosterman.hpp"
#include "kzeta/local.hpp"
#include "kzeta/monomial.hpp"
#include "kzeta/qseries.hpp"
#include "kzeta/special.hpp"
#include "kzeta/verify.hpp"

namespace py = pybind11;
using namespace kzeta;

namespace {

py::object fraction(const BigRational& q) {
  return py::module_::import("fractions").attr("Fraction")(rat_str(q));
}

py::dict series_dict(const QSeries& s) {
  py::dict d;
  for (const auto& [n, v] : s.coeffs()) d[py::int_(n)] = fraction(v);
  return d;
}

py::dict report_dict(const VerifyReport& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["checked"] = r.checked;
  d["first_fail"] = r.first_fail;
  d["detail"] = r.detail;
  return d;
}

py::dict monomial_dict(const MonomialValue& v) {
  py::dict d;
  d["coeff_re"] = fraction(v.coeff().re);
  d["coeff_im"] = fraction(v.coeff().im);
  d["pi_pow"] = v.pi_pow();
  d["sqrt_arg"] = v.sqrt_arg();
  d["approx"] = v.embed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Hurwitz class numbers, Kloosterman sums and Kloosterman zeta data";

  m.def("kronecker", &kronecker, py::arg("a"), py::arg("b"));
  m.def("moebius", &moebius, py::arg("n"));
  m.def(
      "decompose_discriminant",
      [](long long D) {
        auto [t, mm] = decompose_discriminant(D);
        return py::make_tuple(t, mm);
      },
      py::arg("D"), "write D = t*m^2 with t a fundamental discriminant");

  m.def(
      "hurwitz", [](long long n) { return fraction(hurwitz(n)); }, py::arg("n"),
      "Hurwitz class number H(n) as a Fraction");
  m.def(
      "hurwitz_oracle", [](long long n) { return fraction(hurwitz_oracle(n)); }, py::arg("n"),
      "H(n) by direct enumeration of reduced forms");
  m.def(
      "gen_hurwitz",
      [](long long ell, long long N, long long n) { return fraction(gen_hurwitz(ell, N, n)); },
      py::arg("ell"), py::arg("N"), py::arg("n"), "generalized class number H_{ell,N}(n)");

  m.def(
      "theta_series", [](long prec) { return series_dict(theta_series(prec)); }, py::arg("prec"));
  m.def(
      "hurwitz_series",
      [](long long ell, long long N, long prec) {
        return series_dict(hurwitz_series(ell, N, prec));
      },
      py::arg("ell"), py::arg("N"), py::arg("prec"));
  m.def(
      "ternary_theta",
      [](const std::array<long long, 6>& gram, long prec) {
        return series_dict(ternary_theta(TernaryForm(gram), prec));
      },
      py::arg("gram"), py::arg("prec"),
      "theta series of the form with upper-triangular Gram entries (g11,g12,g13,g22,g23,g33)");
  m.def("sturm_bound", &sturm_bound, py::arg("two_k"), py::arg("level"));

  m.def("kloosterman", &kloosterman, py::arg("two_k"), py::arg("m"), py::arg("n"), py::arg("c"),
        "K_k(m,n;c) for weight k = two_k/2, 4 | c");
  m.def("modified_kloosterman", &modified_kloosterman, py::arg("two_k"), py::arg("m"),
        py::arg("n"), py::arg("M"), "companion sum at odd modulus");
  m.def("kz_truncated", &kz_truncated, py::arg("n"), py::arg("N"), py::arg("s"),
        py::arg("cutoff"));
  m.def("kz_factored", &kz_factored, py::arg("n"), py::arg("N"), py::arg("s"));

  m.def(
      "local_density_A",
      [](long long p, long long n) {
        GaussianRational g = local_density_A(p, n).gaussian_part();
        return py::make_tuple(fraction(g.re), fraction(g.im));
      },
      py::arg("p"), py::arg("n"), "A(p,n) as (Re, Im) Fractions");
  m.def(
      "residue_r", [](long long n, long long N) { return monomial_dict(residue_r(n, N)); },
      py::arg("n"), py::arg("N"));
  m.def(
      "c_frak",
      [](long long n, long long N) {
        SpecialZetaValue v = c_frak(n, N);
        py::dict d;
        d["kind"] = v.tag == SpecialZetaValue::Tag::exact ? "exact" : "numeric";
        if (v.tag == SpecialZetaValue::Tag::exact) d["monomial"] = monomial_dict(v.exact);
        d["value"] = v.approx;
        return d;
      },
      py::arg("n"), py::arg("N"));

  m.def("alpha", &alpha, py::arg("y"));
  m.def("alpha_via_gamma", &alpha_via_gamma, py::arg("y"));
  m.def("incomplete_gamma", &incomplete_gamma, py::arg("two_s"), py::arg("y"));

  m.def(
      "verify_thm11", [](long long N, long prec) { return report_dict(verify_thm11(N, prec)); },
      py::arg("N"), py::arg("prec") = 100);
  m.def(
      "verify_example",
      [](long long N, long prec) { return report_dict(verify_example(N, prec)); }, py::arg("N"),
      py::arg("prec") = 100);
  m.def(
      "verify_shadow", [](long long N, long prec) { return report_dict(verify_shadow(N, prec)); },
      py::arg("N"), py::arg("prec") = 100);
  m.def(
      "verify_theta3", [](long prec) { return report_dict(verify_theta3(prec)); },
      py::arg("prec") = 100);
  m.def(
      "verify_lemma52",
      [](long long N, long prec) { return report_dict(verify_lemma52(N, prec)); }, py::arg("N"),
      py::arg("prec") = 100);
  m.def(
      "verify_kohnen",
      [](long long N, long long cmax, long long mn_max, double tol) {
        return report_dict(verify_kohnen(N, cmax, mn_max, tol));
      },
      py::arg("N"), py::arg("cmax") = 25, py::arg("mn_max") = 12, py::arg("tol") = 1e-9);
  m.def(
      "verify_prop33", [](double tol) { return report_dict(verify_prop33(tol)); },
      py::arg("tol") = 1e-2);
}
