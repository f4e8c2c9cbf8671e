#pragma once

#include <vector>

#include "edm/common.hpp"

namespace edm {

// Polynomial in the monomial basis, coefficients[k] multiplying t^k.
using DensePolynomial1D = std::vector<double>;

double poly_eval(const DensePolynomial1D& p, double t);
DensePolynomial1D poly_derivative(const DensePolynomial1D& p);

// One step of the generating-function recursion:
// T_{N+1}(t) = (mu + t) T_N(rho t) + rho T_N'(rho t); degree grows by one.
DensePolynomial1D advance_T(const DensePolynomial1D& t_prev, double mu, double rho);

// c_k = q_k / sqrt(k!): the Hermite coefficient vector as an exponential-type
// generating function.
DensePolynomial1D hermite_to_generating(const std::vector<double>& q);

// T_N(0) for N = 0..n_max; each equals the product moment M_N.
std::vector<double> value_at_zero_chain(double mu, double rho, int n_max);

// Max abs residual of T'(tau) - (lambda/rho) T(tau/rho)
//                    + ((mu + tau/rho)/rho) T(tau) over the sample points.
double pantograph_residual(const DensePolynomial1D& t_approx, double lambda,
                           double mu, double rho,
                           const std::vector<double>& sample_points);

// Default residual grid: 101 equispaced points on [-2, 2].
std::vector<double> default_residual_points();

}  // namespace edm
