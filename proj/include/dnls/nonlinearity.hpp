#pragma once

#include <array>
#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace dnls {

using cplx = std::complex<double>;

/// Coefficients of a cubic derivative nonlinearity
///
///   N(u, u_x) = a1 u^2 u_x + a2 u u_x^2 + a3 u_x^3
///             + b1 conj(u^2 u_x) + b2 conj(u u_x^2) + b3 conj(u_x^3)
///             + c1 conj(u)^2 u_x + c2 |u|^2 conj(u_x) + c3 u conj(u_x)^2
///             + c4 |u_x|^2 conj(u) + c5 |u_x|^2 conj(u_x)
///             + l1 |u|^2 u + l2 |u|^2 u_x + l3 u^2 conj(u_x)
///             + l4 |u_x|^2 u + l5 conj(u) u_x^2 + l6 |u_x|^2 u_x.
///
/// The basis deliberately omits u^3, conj(u)^3 and u conj(u)^2, so every
/// instance satisfies N(e^{i th}, 0) = e^{i th} N(1, 0). Only the l-family
/// (gauge-invariant terms) feeds the resonance coefficient nu(xi).
struct CubicNonlinearity {
  cplx a1{}, a2{}, a3{};
  cplx b1{}, b2{}, b3{};
  cplx c1{}, c2{}, c3{}, c4{}, c5{};
  cplx l1{}, l2{}, l3{}, l4{}, l5{}, l6{};

  cplx evaluate(cplx u, cplx ux) const;

  bool is_zero() const;
};

/// nu(xi) split into real-coefficient polynomials:
/// nu(xi) = re(xi) + i*im(xi), coefficients in increasing degree.
struct NuPolynomial {
  std::array<double, 4> re{};
  std::array<double, 4> im{};

  double re_at(double xi) const {
    return re[0] + xi * (re[1] + xi * (re[2] + xi * re[3]));
  }
  double im_at(double xi) const {
    return im[0] + xi * (im[1] + xi * (im[2] + xi * im[3]));
  }
  cplx operator()(double xi) const { return {re_at(xi), im_at(xi)}; }

  bool im_is_zero(double tol = 0.0) const;

  /// nu(xi) = -i*c0*(xi-xi0)^2, the canonical weakly dissipative shape.
  static NuPolynomial weakly_dissipative(double c0, double xi0);
  /// nu(xi) = constant lambda.
  static NuPolynomial constant(cplx lambda);
};

enum class DissipativityClass {
  NullImaginary,        // Im nu == 0
  WeaklyDissipative,    // Im nu = -c0 (xi - xi0)^2
  StrictlyDissipative,  // sup Im nu < 0, but no <xi>^2 envelope
  StronglyDissipative,  // Im nu <= -C (1 + xi^2)
  DissipativeNonStrict, // Im nu <= 0 but none of the above (synthetic only)
  Indefinite,           // Im nu changes sign
};

const char* to_string(DissipativityClass cls);

/// Classification result with the structure constants that exist for the
/// reported class. `synthetic` marks the defensive DissipativeNonStrict
/// label, which no cubic nonlinearity can actually produce.
struct DissipativityReport {
  DissipativityClass cls = DissipativityClass::Indefinite;
  std::optional<double> c0;
  std::optional<double> xi0;
  std::optional<double> sup_im_nu;
  std::optional<double> best_c_star;
  double tolerance_used = 0.0;
  bool synthetic = false;
};

cplx evaluate_N(const CubicNonlinearity& nl, cplx u, cplx ux);

/// Samples N(e^{i th}, 0) against e^{i th} N(1,0) at `samples` equispaced
/// angles. True for every CubicNonlinearity by construction; the generic
/// overload exists to demonstrate failures for monomials outside the basis.
bool check_gauge_condition(const CubicNonlinearity& nl, int samples = 16,
                           double tol = 1e-12);
bool check_gauge_condition(const std::function<cplx(cplx, cplx)>& N,
                           int samples, double tol = 1e-12);

/// Closed-form nu from the gauge-invariant coefficients:
/// nu(xi) = l1 + i(l2 - l3) xi + (l4 - l5) xi^2 + i l6 xi^3.
NuPolynomial nu_closed_form(const CubicNonlinearity& nl);

/// Independent route: trapezoidal quadrature of
/// (1/2pi) \int_0^{2pi} N(e^{i th}, i xi e^{i th}) e^{-i th} dth.
/// Exact (up to rounding) for quad_points >= 8 since the integrand is a
/// trigonometric polynomial of degree <= 4.
cplx nu_contour(const CubicNonlinearity& nl, double xi, int quad_points = 16);

/// Sign/shape analysis of Im nu with tolerance `tol` applied to the
/// coefficients normalized by max(1, max_k |p_k|). The strongest applicable
/// label wins: StronglyDissipative > StrictlyDissipative > WeaklyDissipative
/// > NullImaginary > DissipativeNonStrict > Indefinite.
DissipativityReport classify(const NuPolynomial& nu, double tol = 1e-12);

/// Key-value coefficient file: "a1 = re,im" ... "lambda6 = re,im".
/// Unknown keys are an error; missing keys default to zero.
CubicNonlinearity parse_coefficients(std::istream& in);
CubicNonlinearity load_coefficients(const std::string& path);
void write_coefficients(std::ostream& out, const CubicNonlinearity& nl);

/// Human-readable "nu(xi) = (...) + (...) xi + ..." string.
std::string format_nu(const NuPolynomial& nu);

}  // namespace dnls
