#pragma once

#include <complex>
#include <vector>

namespace soro::lti {

/// Dense real polynomial coefficients, descending powers of s:
/// c[0]*s^n + c[1]*s^(n-1) + ... + c[n].
using Poly = std::vector<double>;

/// Drops leading (highest-power) coefficients below `tol` in magnitude.
/// Never returns an empty vector; the zero polynomial is {0}.
Poly poly_trim(const Poly& p, double tol = 0.0);

int poly_degree(const Poly& p);

Poly poly_mul(const Poly& a, const Poly& b);

Poly poly_add(const Poly& a, const Poly& b);

Poly poly_scale(const Poly& p, double k);

/// Horner evaluation at a complex point.
std::complex<double> poly_eval(const Poly& p, std::complex<double> s);

/// Roots via companion-matrix eigenvalues. Exact zero roots are deflated
/// first so they come out exact. Residual tolerance is 1e-9 relative to
/// the coefficient scale; see `poly_root_residual` to check.
std::vector<std::complex<double>> poly_roots(const Poly& p);

/// |p(r)| / max|c_i|, a cheap root-quality measure.
double poly_root_residual(const Poly& p, std::complex<double> r);

/// Real polynomial from a conjugate-closed root set. `lead` scales the
/// result. Roots whose imaginary part is below `imag_tol` (relative to
/// magnitude) are treated as real; the rest are paired into quadratics.
Poly poly_from_roots(const std::vector<std::complex<double>>& roots,
                     double lead = 1.0, double imag_tol = 1e-8);

/// Euclidean division: returns quotient, stores remainder in `rem`.
/// Degree of rem is strictly less than degree of divisor.
Poly poly_divmod(const Poly& num, const Poly& den, Poly& rem);

}  // namespace soro::lti
