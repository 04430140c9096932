#pragma once

namespace ncosc {

// Bessel functions of the first and second kind, orders 0 and 1.
// Power series below x = 8, integral representations above; absolute
// error below 1e-12 on (0, 50]. The first-order pair exists to provide
// analytic derivatives of the zero-order one (J0' = -J1, Y0' = -Y1).
double bessel_j0(double x);  // x >= 0
double bessel_y0(double x);  // x > 0, throws DomainError otherwise
double bessel_j1(double x);  // x >= 0
double bessel_y1(double x);  // x > 0, throws DomainError otherwise

// Confluent hypergeometric U(-m, b, z) for nonnegative integer m, where it
// terminates to a degree-m polynomial in z:
//   U(-m, b, z) = (-1)^m sum_{k=0..m} C(m,k) (b+k)_{m-k} (-z)^k,
// monic in z. U(-1, b, z) = z - b.
double hyper_u_neg_int(int m, double b, double z);

struct PolyDerivs {
  double value = 0, d1 = 0, d2 = 0;
};

// U(-m, b, z) together with its first two z-derivatives.
PolyDerivs hyper_u_neg_int_derivs(int m, double b, double z);

}  // namespace ncosc
