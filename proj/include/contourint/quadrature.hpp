#pragma once

#include <functional>

#include "contourint/types.hpp"

namespace contourint {

using RealFn = std::function<Complex(double)>;
using ComplexFn = std::function<Complex(Complex)>;

// Adaptive Gauss-Kronrod 7-15 with interval bisection, depth cap 40.
QuadResult gk_adaptive(const RealFn& fn, double a, double b, const Tolerance& tol = {});

// Double-exponential (tanh-sinh) quadrature on the open interval (0, 1).
// Nodes never touch the endpoints, so integrands with logarithmic-type
// endpoint growth are handled without special casing.
QuadResult tanh_sinh(const RealFn& fn, const Tolerance& tol = {});

// Integral of fn(z) dz along the straight segment z0 -> z1.
QuadResult integrate_line(const ComplexFn& fn, Complex z0, Complex z1,
                          const Tolerance& tol = {});

// Integral of fn(z) dz along the arc z(theta) = center + radius e^{i theta},
// theta from theta0 to theta1.  Orientation is the sign of the sweep.
QuadResult integrate_arc(const ComplexFn& fn, Complex center, double radius,
                         double theta0, double theta1, const Tolerance& tol = {});

}  // namespace contourint
